//! The weak-projective-embedding pipeline: collinearity ideals of
//! pre-embedded structures, minimal components by factor splitting with
//! saturation, admissibility, Krull dimensions, merged blocks, and the
//! per-class verdicts.

use crate::classify::MultinetClass;
use crate::exec::{map_vec, ExecMode};
use crate::golden;
use crate::incidence::{IncidenceError, IncidenceStructure};
use crate::preembed::{standard_preembedding_with_order, PreEmbedding, PreEmbeddingError};
use polyring::factor::factor_split;
use polyring::{Budget, Ideal, MonomialOrder, PolyError, Polynomial};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error(transparent)]
    PreEmbedding(#[from] PreEmbeddingError),

    #[error(transparent)]
    Incidence(#[from] IncidenceError),

    #[error(transparent)]
    Poly(#[from] PolyError),

    #[error("class M{0} is outside the computational pipeline (superline length 3)")]
    UnsupportedClass(usize),

    #[error(
        "budget exhausted: {} components finished, {} branches unfinished",
        finished.len(),
        unfinished.len()
    )]
    PartialResult {
        finished: Vec<Ideal>,
        unfinished: Vec<Ideal>,
    },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

/// The ideal generated by the 3x3 coordinate determinants of all collinear
/// triples (all 3-subsets of every block), identically-zero determinants
/// dropped.
pub fn collinearity_ideal(s: &IncidenceStructure, xi: &PreEmbedding) -> Ideal {
    debug_assert_eq!(s.num_points(), xi.num_points());
    let mut gens: Vec<Polynomial> = Vec::new();
    for block in s.blocks() {
        let k = block.len();
        for i in 0..k {
            for j in (i + 1)..k {
                for l in (j + 1)..k {
                    let d = xi.det(
                        block[i] as usize,
                        block[j] as usize,
                        block[l] as usize,
                    );
                    if !d.is_zero() {
                        gens.push(d);
                    }
                }
            }
        }
    }
    Ideal::new(xi.ring().clone(), gens)
}

/// Outcome of exploring one splitting subtree.
struct SplitOutcome {
    leaves: Vec<Ideal>,
    unfinished: Vec<Ideal>,
}

impl SplitOutcome {
    fn merge(mut outcomes: Vec<SplitOutcome>) -> SplitOutcome {
        let mut all = SplitOutcome {
            leaves: Vec::new(),
            unfinished: Vec::new(),
        };
        for o in &mut outcomes {
            all.leaves.append(&mut o.leaves);
            all.unfinished.append(&mut o.unfinished);
        }
        all
    }
}

/// Candidate minimal components of a proper ideal, by a splitting tree:
/// at each node, the first reduced-basis element that factors splits the
/// node into children `I + <f_k>` saturated by the product of the factors
/// already tried, so the child varieties still cover the node's variety.
/// Unsplittable leaves are filtered to the inclusion-minimal ones and
/// sorted by their canonical basis text.
///
/// Leaves come without a primality certificate; the table reproduction
/// tests are what validates their adequacy.
pub fn minimal_primes(
    ideal: &Ideal,
    budget: &Budget,
    mode: ExecMode,
) -> Result<Vec<Ideal>, EmbeddingError> {
    if ideal.is_unit(budget)? {
        return Err(EmbeddingError::InvariantViolation(
            "minimal components of the unit ideal".into(),
        ));
    }
    let outcome = explore(ideal.clone(), budget, mode, 0);
    if !outcome.unfinished.is_empty() {
        return Err(EmbeddingError::PartialResult {
            finished: outcome.leaves,
            unfinished: outcome.unfinished,
        });
    }

    // Deduplicate by the canonical reduced basis, then keep only the
    // inclusion-minimal ideals.
    let mut keyed: Vec<(String, Ideal)> = Vec::new();
    for leaf in outcome.leaves {
        let key = leaf.default_basis(budget)?.canonical_text();
        if !keyed.iter().any(|(k, _)| *k == key) {
            keyed.push((key, leaf));
        }
    }
    keyed.sort_by(|(a, _), (b, _)| a.cmp(b));
    let mut minimal: Vec<Ideal> = Vec::new();
    'outer: for (i, (_, leaf)) in keyed.iter().enumerate() {
        for (j, (_, other)) in keyed.iter().enumerate() {
            if i != j && leaf.contains_ideal(other, budget)? {
                continue 'outer;
            }
        }
        minimal.push(leaf.clone());
    }
    Ok(minimal)
}

fn explore(node: Ideal, budget: &Budget, mode: ExecMode, depth: usize) -> SplitOutcome {
    let gb = match node.default_basis(budget) {
        Ok(gb) => gb,
        Err(PolyError::BudgetExhausted { .. }) => {
            return SplitOutcome {
                leaves: Vec::new(),
                unfinished: vec![node],
            }
        }
        Err(e) => unreachable!("basis computation failed without a budget cause: {e}"),
    };
    if gb.is_unit() {
        return SplitOutcome {
            leaves: Vec::new(),
            unfinished: Vec::new(),
        };
    }
    let ring = gb.ring();
    let split = gb.polys().iter().find_map(|g| {
        let factors = factor_split(ring, g);
        let trivial = factors.len() == 1 && factors[0] == ring.normalize_primitive(g);
        (!trivial).then_some(factors)
    });
    let Some(factors) = split else {
        return SplitOutcome {
            leaves: vec![node],
            unfinished: Vec::new(),
        };
    };
    log::debug!(
        "depth {depth}: basis of {} splits into {} factors",
        gb.polys().len(),
        factors.len()
    );

    let mut children: Vec<Ideal> = Vec::new();
    let mut unfinished: Vec<Ideal> = Vec::new();
    let mut tried = ring.one();
    for f in &factors {
        let converted = node.ring().convert(f);
        let child = node.with_extra_generators(std::slice::from_ref(&converted));
        let child = if tried.is_constant() {
            Ok(child)
        } else {
            child.saturate(&node.ring().convert(&tried), budget)
        };
        match child {
            Ok(c) => children.push(c),
            Err(PolyError::BudgetExhausted { .. }) => {
                unfinished.push(node.with_extra_generators(std::slice::from_ref(&converted)))
            }
            Err(e) => unreachable!("saturation failed without a budget cause: {e}"),
        }
        tried = ring.mul(&tried, f);
    }
    let outcomes = map_vec(mode, children, |child| {
        explore(child, budget, mode, depth + 1)
    });
    let mut merged = SplitOutcome::merge(outcomes);
    merged.unfinished.extend(unfinished);
    merged
}

/// Whether a proper component is admissible for the pre-embedding: no
/// point pair collapses (some coordinate of each pairwise cross product
/// survives reduction) and the reduced points still span the plane (some
/// triple determinant survives). Cross products are tested first; they
/// are cheaper and usually decisive.
pub fn is_admissible(
    prime: &Ideal,
    xi: &PreEmbedding,
    budget: &Budget,
) -> Result<bool, EmbeddingError> {
    let gb = prime.default_basis(budget)?;
    if gb.is_unit() {
        return Err(EmbeddingError::InvariantViolation(
            "admissibility of the unit ideal".into(),
        ));
    }
    let n = xi.num_points();
    for p in 0..n {
        for q in (p + 1)..n {
            let cross = xi.cross_product(p, q);
            if cross
                .iter()
                .all(|c| gb.reduces_to_zero(&gb.ring().convert(c)))
            {
                return Ok(false);
            }
        }
    }
    for p in 0..n {
        for q in (p + 1)..n {
            for r in (q + 1)..n {
                let d = xi.det(p, q, r);
                if !gb.reduces_to_zero(&gb.ring().convert(&d)) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// A maximal point set carried onto one projective line by the embedding
/// while not being a block of the structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergedBlock {
    pub points: Vec<u16>,
    pub kind: MergedBlockKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MergedBlockKind {
    /// Entirely inside one part (0, 1 or 2).
    WithinPart(usize),
    /// Meets all three parts with equal traces: a new line of this length.
    LongLine(usize),
}

impl MergedBlock {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// Computes the merged blocks of a component: all point triples whose
/// determinant reduces to zero are collected and sets sharing at least two
/// points are united until stable; sets equal to actual blocks are
/// dropped, the rest are classified by their traces.
pub fn merged_blocks(
    s: &IncidenceStructure,
    xi: &PreEmbedding,
    prime: &Ideal,
    budget: &Budget,
    mode: ExecMode,
) -> Result<Vec<MergedBlock>, EmbeddingError> {
    let gb = prime.default_basis(budget)?;
    let n_points = xi.num_points();
    let mut triples: Vec<[u16; 3]> = Vec::new();
    for p in 0..n_points {
        for q in (p + 1)..n_points {
            for r in (q + 1)..n_points {
                triples.push([p as u16, q as u16, r as u16]);
            }
        }
    }
    let vanishing: Vec<Option<Vec<u16>>> = map_vec(mode, triples, |t| {
        let d = xi.det(t[0] as usize, t[1] as usize, t[2] as usize);
        gb.reduces_to_zero(&gb.ring().convert(&d))
            .then(|| t.to_vec())
    });
    let mut sets: Vec<Vec<u16>> = vanishing.into_iter().flatten().collect();

    // Unite sets sharing at least two points, rescanning until stable.
    let share_two = |a: &[u16], b: &[u16]| -> bool {
        let mut hits = 0;
        for x in a {
            if b.contains(x) {
                hits += 1;
                if hits > 1 {
                    return true;
                }
            }
        }
        false
    };
    let mut i = 0;
    while i < sets.len() {
        let mates: Vec<usize> = ((i + 1)..sets.len())
            .filter(|&j| share_two(&sets[i], &sets[j]))
            .collect();
        if mates.is_empty() {
            i += 1;
        } else {
            for &j in mates.iter().rev() {
                let absorbed = sets.remove(j);
                for p in absorbed {
                    if !sets[i].contains(&p) {
                        sets[i].push(p);
                    }
                }
            }
            sets[i].sort_unstable();
        }
    }
    sets.sort();

    let n = s.num_points() / 3;
    let mut out = Vec::new();
    for set in sets {
        if s.has_block(&set) {
            continue;
        }
        let mut traces = [0usize; 3];
        for &p in &set {
            traces[p as usize / n] += 1;
        }
        let nonempty = traces.iter().filter(|&&t| t > 0).count();
        let kind = if nonempty == 1 {
            MergedBlockKind::WithinPart(traces.iter().position(|&t| t > 0).unwrap())
        } else {
            if traces[0] != traces[1] || traces[0] != traces[2] || traces[0] < 2 {
                return Err(EmbeddingError::InvariantViolation(format!(
                    "merged set {set:?} has traces {traces:?}"
                )));
            }
            MergedBlockKind::LongLine(traces[0])
        };
        out.push(MergedBlock { points: set, kind });
    }
    Ok(out)
}

/// One minimal component with its admissibility flag and dimension.
#[derive(Debug, Clone)]
pub struct ComponentRecord {
    pub ideal: Ideal,
    pub admissible: bool,
    pub dimension: usize,
}

/// The full analysis of one class: components, the admissible one if any,
/// and its merged blocks.
#[derive(Debug, Clone)]
pub struct ComponentReport {
    pub class_id: usize,
    pub components: Vec<ComponentRecord>,
    pub admissible_index: Option<usize>,
    pub merged: Option<Vec<MergedBlock>>,
}

/// Merged-block table row: number of new long lines and the merged-block
/// sizes inside each part, descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergedSummary {
    pub new_long_lines: usize,
    pub part_sizes: [Vec<usize>; 3],
}

impl ComponentReport {
    pub fn label(&self) -> String {
        format!("M{}", self.class_id)
    }

    /// (number of components, number of admissible ones, dimension of the
    /// admissible component).
    pub fn table_triple(&self) -> (usize, usize, Option<usize>) {
        (
            self.components.len(),
            self.components.iter().filter(|c| c.admissible).count(),
            self.admissible_index.map(|i| self.components[i].dimension),
        )
    }

    pub fn merged_summary(&self) -> Option<MergedSummary> {
        let merged = self.merged.as_ref()?;
        let mut summary = MergedSummary {
            new_long_lines: 0,
            part_sizes: [Vec::new(), Vec::new(), Vec::new()],
        };
        for b in merged {
            match b.kind {
                MergedBlockKind::LongLine(_) => summary.new_long_lines += 1,
                MergedBlockKind::WithinPart(part) => summary.part_sizes[part].push(b.size()),
            }
        }
        for sizes in &mut summary.part_sizes {
            sizes.sort_unstable_by(|a, b| b.cmp(a));
        }
        Some(summary)
    }

    /// Serializable report in the documented JSON shape.
    pub fn to_json(&self, budget: &Budget) -> Result<ComponentReportJson, EmbeddingError> {
        let mut components = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let gb = c.ideal.default_basis(budget)?;
            components.push(ComponentJson {
                generators: gb.polys().iter().map(|p| gb.ring().to_text(p)).collect(),
                admissible: c.admissible,
                dim: c.dimension,
            });
        }
        let merged_blocks = self
            .merged
            .iter()
            .flatten()
            .map(|b| MergedBlockJson {
                points: b.points.clone(),
                kind: match b.kind {
                    MergedBlockKind::WithinPart(p) => format!("part{}", p + 1),
                    MergedBlockKind::LongLine(_) => "long_line".to_string(),
                },
                size: b.size(),
            })
            .collect();
        Ok(ComponentReportJson {
            class: self.label(),
            components,
            merged_blocks,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentReportJson {
    pub class: String,
    pub components: Vec<ComponentJson>,
    pub merged_blocks: Vec<MergedBlockJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentJson {
    pub generators: Vec<String>,
    pub admissible: bool,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MergedBlockJson {
    pub points: Vec<u16>,
    pub kind: String,
    pub size: usize,
}

/// Runs the whole pipeline for one classified class (M3..M16): standard
/// pre-embedding, collinearity ideal, minimal components, admissibility
/// and dimension per component, merged blocks of the admissible one.
pub fn analyze_class(
    class: &MultinetClass,
    order: MonomialOrder,
    budget: &Budget,
    mode: ExecMode,
) -> Result<ComponentReport, EmbeddingError> {
    if class.superline_length != 2 {
        return Err(EmbeddingError::UnsupportedClass(class.id));
    }
    log::info!("analyzing class M{}", class.id);
    let xi = standard_preembedding_with_order(&class.representative, order)?;
    let ideal = collinearity_ideal(class.representative.structure(), &xi);
    let components = minimal_primes(&ideal, budget, mode)?;
    let records = map_vec(mode, components, |ideal| -> Result<ComponentRecord, EmbeddingError> {
        let admissible = is_admissible(&ideal, &xi, budget)?;
        let dimension = ideal.krull_dimension(budget)?;
        Ok(ComponentRecord {
            ideal,
            admissible,
            dimension,
        })
    });
    let mut components = Vec::with_capacity(records.len());
    for r in records {
        components.push(r?);
    }
    let admissible: Vec<usize> = components
        .iter()
        .enumerate()
        .filter(|(_, c)| c.admissible)
        .map(|(i, _)| i)
        .collect();
    if admissible.len() > 1 {
        return Err(EmbeddingError::InvariantViolation(format!(
            "class M{} has {} admissible components",
            class.id,
            admissible.len()
        )));
    }
    let admissible_index = admissible.first().copied();
    let merged = match admissible_index {
        Some(i) => Some(merged_blocks(
            class.representative.structure(),
            &xi,
            &components[i].ideal,
            budget,
            mode,
        )?),
        None => None,
    };
    log::info!(
        "class M{}: {} components, admissible: {:?}",
        class.id,
        components.len(),
        admissible_index
    );
    Ok(ComponentReport {
        class_id: class.id,
        components,
        admissible_index,
        merged,
    })
}

/// Whether a class embeds, by the existence of an admissible component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Embeds,
    DoesNotEmbed,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Embeds => "embeds",
            Verdict::DoesNotEmbed => "does-not-embed",
        })
    }
}

pub fn embedding_verdict(report: &ComponentReport) -> Verdict {
    if report.admissible_index.is_some() {
        Verdict::Embeds
    } else {
        Verdict::DoesNotEmbed
    }
}

/// Expected verdict per the embedded tables, for verification output.
pub fn expected_verdict(class_id: usize) -> Option<Verdict> {
    if golden::EMBEDDABLE.contains(&class_id) {
        Some(Verdict::Embeds)
    } else if golden::NON_EMBEDDABLE.contains(&class_id) {
        Some(Verdict::DoesNotEmbed)
    } else {
        None
    }
}
