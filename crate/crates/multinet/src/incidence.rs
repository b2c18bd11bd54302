//! Point-line incidence structures: dual 3-nets and light dual multinets
//! built from quasigroups, line lengths, and well-indexing.
//!
//! Points of an order-`n` multinet are `0..3n`, partitioned positionally:
//! part 1 is `0..n`, part 2 is `n..2n`, part 3 is `2n..3n`. Blocks are kept
//! canonical: each sorted ascending, the block list sorted and deduplicated.

use crate::quasigroup::{LatinSquare, QuasigroupError, SubsquareTriple};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum IncidenceError {
    #[error("invalid incidence structure: {0}")]
    InvalidStructure(String),

    #[error("multinet has no block of length at least 2")]
    NoLongBlock,

    #[error("block {0:?} is not a block of the structure")]
    UnknownBlock(Vec<u16>),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("classification error: {0}")]
    Classification(String),

    #[error(transparent)]
    Quasigroup(#[from] QuasigroupError),
}

/// A simple point-line incidence structure with all blocks of size >= 3,
/// blocks identified with their point sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceStructure {
    num_points: usize,
    blocks: Vec<Vec<u16>>,
}

impl IncidenceStructure {
    pub fn new(num_points: usize, blocks: Vec<Vec<u16>>) -> Result<Self, IncidenceError> {
        let mut canonical: Vec<Vec<u16>> = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            b.sort_unstable();
            b.dedup();
            if b.len() < 3 {
                return Err(IncidenceError::InvalidStructure(format!(
                    "block {b:?} has fewer than 3 points"
                )));
            }
            if b.iter().any(|&p| p as usize >= num_points) {
                return Err(IncidenceError::InvalidStructure(format!(
                    "block {b:?} exceeds the point range 0..{num_points}"
                )));
            }
            canonical.push(b);
        }
        canonical.sort();
        canonical.dedup();
        Ok(IncidenceStructure {
            num_points,
            blocks: canonical,
        })
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn blocks(&self) -> &[Vec<u16>] {
        &self.blocks
    }

    pub fn has_block(&self, block: &[u16]) -> bool {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(block)).is_ok()
    }

    /// Sizes of the blocks through each point.
    pub fn point_signatures(&self) -> Vec<Vec<u8>> {
        let mut sig = vec![Vec::new(); self.num_points];
        for b in &self.blocks {
            for &p in b {
                sig[p as usize].push(b.len() as u8);
            }
        }
        for s in &mut sig {
            s.sort_unstable();
        }
        sig
    }

    /// Renames points through `map` (old index -> new index) and restores
    /// canonical form.
    pub fn relabeled(&self, map: &[u16]) -> Result<Self, IncidenceError> {
        if map.len() != self.num_points {
            return Err(IncidenceError::InvalidStructure(
                "relabeling map has the wrong length".into(),
            ));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&p| map[p as usize]).collect())
            .collect();
        IncidenceStructure::new(self.num_points, blocks)
    }
}

/// Provenance of a constructed multinet: the labeling quasigroup and, for
/// superline constructions, the subsquare.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub square: LatinSquare,
    pub subsquare: Option<SubsquareTriple>,
}

/// An abstract light dual multinet of order `n` on `3n` points, with the
/// positional tri-partition.
#[derive(Debug, Clone)]
pub struct Multinet {
    structure: IncidenceStructure,
    n: usize,
    labeling: Option<Labeling>,
}

impl Multinet {
    pub fn structure(&self) -> &IncidenceStructure {
        &self.structure
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        self.labeling.as_ref()
    }

    /// Part index (0, 1, 2) of a point.
    pub fn part_of(&self, point: u16) -> usize {
        point as usize / self.n
    }

    /// Traces of a block on the three parts, as element subsets of the
    /// labeling set `{0..n}`.
    pub fn traces(&self, block: &[u16]) -> [Vec<u8>; 3] {
        let n = self.n as u16;
        let mut out = [Vec::new(), Vec::new(), Vec::new()];
        for &p in block {
            out[(p / n) as usize].push((p % n) as u8);
        }
        out
    }

    /// The length of a block: the common size of its three traces. Unequal
    /// traces mean a corrupted multinet and are an invariant violation.
    pub fn line_length(&self, block: &[u16]) -> Result<usize, IncidenceError> {
        if !self.structure.has_block(block) {
            return Err(IncidenceError::UnknownBlock(block.to_vec()));
        }
        let [t1, t2, t3] = self.traces(block);
        if t1.len() != t2.len() || t1.len() != t3.len() {
            return Err(IncidenceError::InvariantViolation(format!(
                "block {block:?} has trace sizes {}/{}/{}",
                t1.len(),
                t2.len(),
                t3.len()
            )));
        }
        Ok(t1.len())
    }

    /// The unique longest block when its size exceeds 3; the corpus here
    /// only ever has one such block. Ties pick the last in canonical order.
    pub fn superline(&self) -> Option<&Vec<u16>> {
        let max = self.structure.blocks.iter().map(|b| b.len()).max()?;
        if max <= 3 {
            return None;
        }
        self.structure.blocks.iter().rev().find(|b| b.len() == max)
    }

    /// Checks the multinet axioms directly: at most one block per point
    /// pair, every part-1/part-2 pair covered, more than one block, and
    /// every block with equal trace sizes.
    pub fn validate(&self) -> Result<(), IncidenceError> {
        let n = self.n;
        if self.structure.num_points != 3 * n {
            return Err(IncidenceError::InvariantViolation(
                "point count is not 3n".into(),
            ));
        }
        if self.structure.blocks.len() <= 1 {
            return Err(IncidenceError::InvariantViolation(
                "a light dual multinet needs more than one block".into(),
            ));
        }
        let mut pair_seen = vec![false; 3 * n * 3 * n];
        for b in &self.structure.blocks {
            for (i, &p) in b.iter().enumerate() {
                for &q in &b[i + 1..] {
                    let idx = p as usize * 3 * n + q as usize;
                    if pair_seen[idx] {
                        return Err(IncidenceError::InvariantViolation(format!(
                            "points {p} and {q} lie in two blocks"
                        )));
                    }
                    pair_seen[idx] = true;
                }
            }
            self.line_length(b)?;
        }
        for x in 0..n {
            for y in 0..n {
                let (p, q) = (x as u16, (n + y) as u16);
                if !pair_seen[p as usize * 3 * n + q as usize] {
                    return Err(IncidenceError::InvariantViolation(format!(
                        "pair ({p}, {q}) lies in no block"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Serializable record in the multinet JSON shape.
    pub fn to_record(&self, name: &str, quasigroups: &[String]) -> MultinetRecord {
        MultinetRecord {
            n: self.n,
            blocks: self.structure.blocks.clone(),
            name: name.to_string(),
            quasigroups: quasigroups.to_vec(),
        }
    }
}

/// JSON shape `{ "n": .., "blocks": [[..]], "name": .., "quasigroups": [..] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultinetRecord {
    pub n: usize,
    pub blocks: Vec<Vec<u16>>,
    pub name: String,
    pub quasigroups: Vec<String>,
}

/// The abstract dual 3-net of a quasigroup: blocks
/// `{x, n + y, 2n + x*y}` over all pairs.
pub fn dual_3net(q: &LatinSquare) -> Multinet {
    let n = q.order() as usize;
    let mut blocks = Vec::with_capacity(n * n);
    for x in 0..n as u8 {
        for y in 0..n as u8 {
            blocks.push(vec![
                u16::from(x),
                n as u16 + u16::from(y),
                2 * n as u16 + u16::from(q.multiply(x, y)),
            ]);
        }
    }
    let structure = IncidenceStructure::new(3 * n, blocks).expect("dual 3-net blocks");
    Multinet {
        structure,
        n,
        labeling: Some(Labeling {
            square: q.clone(),
            subsquare: None,
        }),
    }
}

/// The one-superline multinet of a quasigroup and a proper subsquare: the
/// `r^2` short blocks inside the subsquare are replaced by the single
/// superline `S1 + (n + S2) + (2n + S3)`.
pub fn multinet_with_superline(
    q: &LatinSquare,
    s: &SubsquareTriple,
) -> Result<Multinet, IncidenceError> {
    s.validate(q)?;
    let n = q.order() as usize;
    let mut blocks = Vec::with_capacity(n * n - s.order() * s.order() + 1);
    for x in 0..n as u8 {
        for y in 0..n as u8 {
            if s.s1().contains(&x) && s.s2().contains(&y) {
                continue;
            }
            blocks.push(vec![
                u16::from(x),
                n as u16 + u16::from(y),
                2 * n as u16 + u16::from(q.multiply(x, y)),
            ]);
        }
    }
    blocks.push(s.point_tuple(n));
    let structure = IncidenceStructure::new(3 * n, blocks)?;
    let m = Multinet {
        structure,
        n,
        labeling: Some(Labeling {
            square: q.clone(),
            subsquare: Some(s.clone()),
        }),
    };
    debug_assert!(m.validate().is_ok());
    Ok(m)
}

/// Renumbers a multinet with a long line into well-indexed form: the
/// longest block occupies the first `r` indices of each part, and for every
/// `j >= r` the triples `{0, n+j, 2n+j}` and `{j, n, 2n+j}` are blocks.
///
/// The relabeled multinet is isomorphic to the input; the labeling
/// provenance does not survive the renumbering and is dropped.
pub fn well_index(m: &Multinet) -> Result<Multinet, IncidenceError> {
    let n = m.order();
    let sl = m.superline().ok_or(IncidenceError::NoLongBlock)?.clone();
    if sl.len() % 3 != 0 {
        return Err(IncidenceError::InvariantViolation(
            "longest block size is not a multiple of 3".into(),
        ));
    }
    let r = m.line_length(&sl)?;

    // a[new] = old point occupying the new index.
    let unset = u16::MAX;
    let mut a = vec![unset; 3 * n];
    a[0..r].copy_from_slice(&sl[0..r]);
    a[n..n + r].copy_from_slice(&sl[r..2 * r]);
    a[2 * n..2 * n + r].copy_from_slice(&sl[2 * r..3 * r]);
    let mut free_p2: Vec<u16> = (n as u16..2 * n as u16)
        .filter(|p| !sl.contains(p))
        .collect();
    free_p2.sort_unstable();
    a[n + r..2 * n].copy_from_slice(&free_p2);

    let third_point = |p: u16, q: u16, part: usize| -> Result<u16, IncidenceError> {
        let hits: Vec<u16> = m
            .structure
            .blocks()
            .iter()
            .filter(|b| b.contains(&p) && b.contains(&q))
            .flat_map(|b| b.iter().copied())
            .filter(|&x| x as usize / n == part && x != p && x != q)
            .collect();
        match hits.as_slice() {
            [x] => Ok(*x),
            _ => Err(IncidenceError::InvariantViolation(format!(
                "points {p} and {q} determine {} third points",
                hits.len()
            ))),
        }
    };
    for j in r..n {
        a[2 * n + j] = third_point(a[0], a[n + j], 2)?;
    }
    for j in r..n {
        a[j] = third_point(a[n], a[2 * n + j], 0)?;
    }
    if a.iter().any(|&p| p == unset) {
        return Err(IncidenceError::InvariantViolation(
            "well-indexing left unassigned slots".into(),
        ));
    }

    let mut new_of_old = vec![unset; 3 * n];
    for (new, &old) in a.iter().enumerate() {
        if new_of_old[old as usize] != unset {
            return Err(IncidenceError::InvariantViolation(
                "well-indexing produced a non-bijective renumbering".into(),
            ));
        }
        new_of_old[old as usize] = new as u16;
    }
    let structure = m.structure.relabeled(&new_of_old)?;
    Ok(Multinet {
        structure,
        n,
        labeling: None,
    })
}

/// Checks the three well-indexing conditions for a multinet whose longest
/// block has length `r`.
pub fn is_well_indexed(m: &Multinet) -> bool {
    let n = m.order();
    let Some(sl) = m.superline() else {
        return false;
    };
    let Ok(r) = m.line_length(sl) else {
        return false;
    };
    let expected: Vec<u16> = (0..r)
        .map(|i| i as u16)
        .chain((0..r).map(|i| (n + i) as u16))
        .chain((0..r).map(|i| (2 * n + i) as u16))
        .collect();
    if *sl != expected {
        return false;
    }
    (r..n).all(|j| {
        m.structure
            .has_block(&[0, (n + j) as u16, (2 * n + j) as u16])
            && m.structure.has_block(&[j as u16, n as u16, (2 * n + j) as u16])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::{catalog, parse_latin_square};

    fn z3() -> LatinSquare {
        parse_latin_square("3\n1 2 3\n2 3 1\n3 1 2\n").unwrap()
    }

    #[test]
    fn dual_3net_of_z3_matches_the_printed_example() {
        let net = dual_3net(&z3());
        let expect: Vec<Vec<u16>> = vec![
            vec![0, 3, 6],
            vec![0, 4, 7],
            vec![0, 5, 8],
            vec![1, 3, 7],
            vec![1, 4, 8],
            vec![1, 5, 6],
            vec![2, 3, 8],
            vec![2, 4, 6],
            vec![2, 5, 7],
        ];
        assert_eq!(net.structure().blocks(), expect.as_slice());
        net.validate().unwrap();
    }

    #[test]
    fn dual_3net_covers_cross_part_pairs_once() {
        for q in catalog().iter().take(3) {
            let net = dual_3net(q);
            assert_eq!(net.structure().blocks().len(), 36);
            net.validate().unwrap();
            for b in net.structure().blocks() {
                assert_eq!(net.line_length(b).unwrap(), 1);
            }
        }
    }

    #[test]
    fn superline_construction_block_counts() {
        let q = &catalog()[0];
        for s in q.all_proper_subsquares() {
            let m = multinet_with_superline(q, &s).unwrap();
            let r = s.order();
            assert_eq!(m.structure().blocks().len(), 36 - r * r + 1);
            let sl = m.superline().unwrap().clone();
            assert_eq!(sl.len(), 3 * r);
            assert_eq!(m.line_length(&sl).unwrap(), r);
            m.validate().unwrap();
        }
    }

    #[test]
    fn line_length_rejects_foreign_blocks() {
        let net = dual_3net(&z3());
        assert!(matches!(
            net.line_length(&[0, 1, 2]),
            Err(IncidenceError::UnknownBlock(_))
        ));
    }

    #[test]
    fn well_index_normalizes_every_catalog_multinet() {
        for q in catalog() {
            for s in q.all_proper_subsquares() {
                let m = multinet_with_superline(q, &s).unwrap();
                let w = well_index(&m).unwrap();
                assert!(is_well_indexed(&w), "{:?} {:?}", q.name(), s);
                w.validate().unwrap();
                // Idempotent in the strong sense: already well-indexed
                // input is reproduced exactly.
                let again = well_index(&w).unwrap();
                assert_eq!(again.structure(), w.structure());
            }
        }
    }

    #[test]
    fn well_index_requires_a_long_block() {
        let net = dual_3net(&z3());
        assert!(matches!(well_index(&net), Err(IncidenceError::NoLongBlock)));
    }
}
