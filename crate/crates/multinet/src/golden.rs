//! Embedded reference data for the order-6 pipeline: the classification
//! table (class keys, superline lengths, automorphism orders), the
//! component/admissibility/dimension table, the merged-block table and
//! the embedding verdicts, plus the printed minimal primes of the
//! order-3 cyclic example. `--verify` and the acceptance suite diff
//! computed results against these.

/// One classification row: 1-based class id, superline length, short names
/// of the labeling quasigroups (sorted), automorphism group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub id: usize,
    pub superline_length: usize,
    pub quasigroups: &'static [&'static str],
    pub aut_order: u64,
}

/// The 16 isomorphism classes of order-6 one-superline multinets, in table
/// order. The (quasigroup set, automorphism order) pairs are the keys that
/// pin computed classes to their table position.
pub const CLASSIFICATION: [ClassRow; 16] = [
    ClassRow { id: 1, superline_length: 3, quasigroups: &["6.1", "6.9"], aut_order: 324 },
    ClassRow { id: 2, superline_length: 3, quasigroups: &["6.2", "6.3", "6.9"], aut_order: 324 },
    ClassRow { id: 3, superline_length: 2, quasigroups: &["6.1", "6.4"], aut_order: 48 },
    ClassRow { id: 4, superline_length: 2, quasigroups: &["6.2", "6.5"], aut_order: 48 },
    ClassRow { id: 5, superline_length: 2, quasigroups: &["6.4"], aut_order: 48 },
    ClassRow { id: 6, superline_length: 2, quasigroups: &["6.7"], aut_order: 48 },
    ClassRow { id: 7, superline_length: 2, quasigroups: &["6.5"], aut_order: 16 },
    ClassRow { id: 8, superline_length: 2, quasigroups: &["6.8", "6.11"], aut_order: 16 },
    ClassRow { id: 9, superline_length: 2, quasigroups: &["6.10"], aut_order: 16 },
    ClassRow { id: 10, superline_length: 2, quasigroups: &["6.11"], aut_order: 16 },
    ClassRow { id: 11, superline_length: 2, quasigroups: &["6.9", "6.12"], aut_order: 8 },
    ClassRow { id: 12, superline_length: 2, quasigroups: &["6.12"], aut_order: 8 },
    ClassRow { id: 13, superline_length: 2, quasigroups: &["6.6", "6.7"], aut_order: 6 },
    ClassRow { id: 14, superline_length: 2, quasigroups: &["6.5", "6.10"], aut_order: 4 },
    ClassRow { id: 15, superline_length: 2, quasigroups: &["6.7", "6.10"], aut_order: 4 },
    ClassRow { id: 16, superline_length: 2, quasigroups: &["6.11", "6.12"], aut_order: 4 },
];

/// One component-count row: class id, number of minimal components, number
/// of admissible ones, dimension of the admissible component if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentRow {
    pub id: usize,
    pub components: usize,
    pub admissible: usize,
    pub dimension: Option<usize>,
}

/// Expected component data for classes M3..M16.
pub const COMPONENTS: [ComponentRow; 14] = [
    ComponentRow { id: 3, components: 6, admissible: 1, dimension: Some(2) },
    ComponentRow { id: 4, components: 3, admissible: 1, dimension: Some(2) },
    ComponentRow { id: 5, components: 5, admissible: 0, dimension: None },
    ComponentRow { id: 6, components: 1, admissible: 0, dimension: None },
    ComponentRow { id: 7, components: 5, admissible: 0, dimension: None },
    ComponentRow { id: 8, components: 1, admissible: 1, dimension: Some(1) },
    ComponentRow { id: 9, components: 2, admissible: 1, dimension: Some(1) },
    ComponentRow { id: 10, components: 4, admissible: 1, dimension: Some(1) },
    ComponentRow { id: 11, components: 2, admissible: 0, dimension: None },
    ComponentRow { id: 12, components: 3, admissible: 1, dimension: Some(2) },
    ComponentRow { id: 13, components: 2, admissible: 1, dimension: Some(1) },
    ComponentRow { id: 14, components: 4, admissible: 1, dimension: Some(1) },
    ComponentRow { id: 15, components: 1, admissible: 1, dimension: Some(1) },
    ComponentRow { id: 16, components: 1, admissible: 1, dimension: Some(1) },
];

pub fn component_row(id: usize) -> Option<&'static ComponentRow> {
    COMPONENTS.iter().find(|r| r.id == id)
}

/// One merged-block row: class id, number of new long lines, merged block
/// sizes inside each part (descending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedRow {
    pub id: usize,
    pub new_long_lines: usize,
    pub part_sizes: [&'static [usize]; 3],
    /// The source table prints this row ambiguously; deviations are
    /// reported instead of silently normalized.
    pub ambiguous: bool,
}

/// Expected merged-block data for the ten embeddable classes. The M14 row
/// is printed as "3, 3  1" in its last column in the source table; a
/// size-1 merged block is impossible, so the reading `3, 3` is stored and
/// the row is flagged ambiguous.
pub const MERGED: [MergedRow; 10] = [
    MergedRow { id: 3, new_long_lines: 2, part_sizes: [&[], &[], &[]], ambiguous: false },
    MergedRow { id: 4, new_long_lines: 0, part_sizes: [&[3, 3], &[3, 3], &[3, 3]], ambiguous: false },
    MergedRow { id: 8, new_long_lines: 0, part_sizes: [&[], &[], &[5]], ambiguous: false },
    MergedRow { id: 9, new_long_lines: 0, part_sizes: [&[], &[], &[3, 3]], ambiguous: false },
    MergedRow { id: 10, new_long_lines: 0, part_sizes: [&[], &[], &[3, 3, 3, 3]], ambiguous: false },
    MergedRow { id: 12, new_long_lines: 0, part_sizes: [&[], &[], &[3]], ambiguous: false },
    MergedRow { id: 13, new_long_lines: 0, part_sizes: [&[], &[], &[]], ambiguous: false },
    MergedRow { id: 14, new_long_lines: 1, part_sizes: [&[3, 3], &[3, 3], &[3, 3]], ambiguous: true },
    MergedRow { id: 15, new_long_lines: 0, part_sizes: [&[3, 3], &[], &[]], ambiguous: false },
    MergedRow { id: 16, new_long_lines: 1, part_sizes: [&[], &[], &[3, 3]], ambiguous: false },
];

pub fn merged_row(id: usize) -> Option<&'static MergedRow> {
    MERGED.iter().find(|r| r.id == id)
}

/// Classes with a weak projective embedding over characteristic zero.
pub const EMBEDDABLE: [usize; 10] = [3, 4, 8, 9, 10, 12, 13, 14, 15, 16];

/// Classes without one.
pub const NON_EMBEDDABLE: [usize; 4] = [5, 6, 7, 11];

/// Printed minimal primes of the collinearity ideal of the order-3 cyclic
/// example: the hyperplane prime and the seven-generator affine prime, in
/// the 13-variable ring.
pub const Z3_PRIME_1: &str = "t13";

pub const Z3_PRIME_2: [&str; 7] = [
    "t8 - t12",
    "t6 - t10",
    "t4 + t5 - t10 - t11",
    "t3 - t11",
    "t2 + t7 - t9 - t12",
    "t1 - t9",
    "t5*t7 - t5*t9 - t7*t11 + t9*t10 + t9*t11 - t9*t12 - t10*t11 + t11*t12",
];
