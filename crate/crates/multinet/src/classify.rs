//! The order-6 classification pipeline: every (catalog table, proper
//! subsquare) multinet is built, the corpus is partitioned by isomorphism,
//! and classes are pinned to their table positions by the
//! (labeling-quasigroup set, automorphism order) key.

use crate::exec::{map_slice, ExecMode};
use crate::golden;
use crate::incidence::{multinet_with_superline, well_index, IncidenceError, Multinet};
use crate::iso::{automorphism_group, is_isomorphic};
use crate::quasigroup::catalog;
use std::collections::BTreeSet;

/// One isomorphism class of order-6 one-superline multinets.
#[derive(Debug, Clone)]
pub struct MultinetClass {
    /// 1-based table position (`M1` ... `M16`).
    pub id: usize,
    pub superline_length: usize,
    /// Short names of the labeling quasigroups, sorted.
    pub quasigroup_names: Vec<String>,
    pub aut_order: u64,
    pub aut_generators: Vec<Vec<u16>>,
    /// Well-indexed representative: the first class member in enumeration
    /// order, renumbered.
    pub representative: Multinet,
    pub member_count: usize,
}

impl MultinetClass {
    pub fn label(&self) -> String {
        format!("M{}", self.id)
    }
}

/// The full classification result.
#[derive(Debug, Clone)]
pub struct Classification {
    pub classes: Vec<MultinetClass>,
    /// Number of (table, subsquare) multinets fed into the partition.
    pub total_multinets: usize,
}

impl Classification {
    pub fn class(&self, id: usize) -> Option<&MultinetClass> {
        self.classes.iter().find(|c| c.id == id)
    }
}

/// Classifies all abstract light dual multinets of order 6 with one
/// superline. Deterministic: enumeration follows catalog order and the
/// sorted subsquare list, each class is represented by its first member,
/// and class ids come from the embedded key table.
pub fn classify_order6(mode: ExecMode) -> Result<Classification, IncidenceError> {
    let mut corpus: Vec<(Multinet, String)> = Vec::new();
    for q in catalog() {
        let short = q.short_name().expect("catalog tables are named");
        for s in q.all_proper_subsquares() {
            corpus.push((multinet_with_superline(q, &s)?, short.clone()));
        }
    }
    let total = corpus.len();
    log::info!("classifying {total} multinets");

    // Partition by isomorphism: the first unclassified multinet seeds the
    // next class; membership tests against the seed fan out in parallel.
    let mut remaining: Vec<usize> = (0..corpus.len()).collect();
    let mut raw_classes: Vec<Vec<usize>> = Vec::new();
    while let Some(&seed) = remaining.first() {
        let verdicts = map_slice(mode, &remaining, |&i| {
            i == seed
                || is_isomorphic(corpus[seed].0.structure(), corpus[i].0.structure()).is_some()
        });
        let (members, rest): (Vec<usize>, Vec<usize>) = remaining
            .iter()
            .zip(&verdicts)
            .partition_map_owned(|(&i, &hit)| if hit { Ok(i) } else { Err(i) });
        raw_classes.push(members);
        remaining = rest;
    }

    // Key each class and pin it to its table position.
    let keyed = map_slice(mode, &raw_classes, |members| -> Result<MultinetClass, IncidenceError> {
        let names: BTreeSet<String> = members
            .iter()
            .map(|&i| corpus[i].1.clone())
            .collect();
        // Catalog order, not lexicographic: 6.5 before 6.10.
        let mut names: Vec<String> = names.into_iter().collect();
        names.sort_by_key(|name| {
            name.split('.')
                .nth(1)
                .and_then(|k| k.parse::<u32>().ok())
                .unwrap_or(u32::MAX)
        });
        let rep = well_index(&corpus[members[0]].0)?;
        let superline = rep
            .superline()
            .ok_or(IncidenceError::NoLongBlock)?
            .clone();
        let superline_length = rep.line_length(&superline)?;
        let aut = automorphism_group(rep.structure());
        log::debug!(
            "class with quasigroups {names:?}: aut order {}, superline length {superline_length}",
            aut.order
        );
        Ok(MultinetClass {
            id: 0,
            superline_length,
            quasigroup_names: names,
            aut_order: aut.order,
            aut_generators: aut.generators,
            representative: rep,
            member_count: members.len(),
        })
    });

    let mut classes: Vec<MultinetClass> = Vec::with_capacity(raw_classes.len());
    for c in keyed {
        classes.push(c?);
    }
    for class in &mut classes {
        let hits: Vec<&golden::ClassRow> = golden::CLASSIFICATION
            .iter()
            .filter(|row| {
                row.aut_order == class.aut_order
                    && row.quasigroups.len() == class.quasigroup_names.len()
                    && class
                        .quasigroup_names
                        .iter()
                        .all(|name| row.quasigroups.contains(&name.as_str()))
            })
            .collect();
        match hits.as_slice() {
            [row] => class.id = row.id,
            [] => {
                return Err(IncidenceError::Classification(format!(
                    "no table position for key ({:?}, {})",
                    class.quasigroup_names, class.aut_order
                )))
            }
            _ => {
                return Err(IncidenceError::Classification(format!(
                    "ambiguous table position for key ({:?}, {})",
                    class.quasigroup_names, class.aut_order
                )))
            }
        }
    }
    classes.sort_by_key(|c| c.id);
    let ids: Vec<usize> = classes.iter().map(|c| c.id).collect();
    let expected: Vec<usize> = (1..=golden::CLASSIFICATION.len()).collect();
    if ids != expected {
        return Err(IncidenceError::Classification(format!(
            "expected classes 1..={}, found ids {ids:?}",
            golden::CLASSIFICATION.len()
        )));
    }
    Ok(Classification {
        classes,
        total_multinets: total,
    })
}

/// Splits an iterator by a predicate-shaped mapping (a tiny stand-in for
/// itertools-style partitioning over zipped pairs).
trait PartitionMapOwned: Iterator + Sized {
    fn partition_map_owned<A, B, F>(self, f: F) -> (Vec<A>, Vec<B>)
    where
        F: FnMut(Self::Item) -> Result<A, B>;
}

impl<I: Iterator> PartitionMapOwned for I {
    fn partition_map_owned<A, B, F>(self, mut f: F) -> (Vec<A>, Vec<B>)
    where
        F: FnMut(Self::Item) -> Result<A, B>,
    {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for item in self {
            match f(item) {
                Ok(a) => left.push(a),
                Err(b) => right.push(b),
            }
        }
        (left, right)
    }
}
