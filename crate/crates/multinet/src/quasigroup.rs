//! Finite quasigroups given by Cayley tables: multiplication and divisions,
//! conjugates, isostrophisms, principal loop isotopes, and subsquare
//! enumeration.
//!
//! Elements are zero-based indices `0..n`. The catalog tables ship one-based
//! and are converted on load.

use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QuasigroupError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a Latin square: {0}")]
    InvalidTable(String),

    #[error("element {element} out of range for order {order}")]
    OutOfRange { element: u8, order: u8 },

    #[error("({s1:?}, {s2:?}, {s3:?}) is not a subsquare")]
    NotASubsquare {
        s1: Vec<u8>,
        s2: Vec<u8>,
        s3: Vec<u8>,
    },
}

/// An order-`n` quasigroup as an `n x n` Cayley table. Every row and every
/// column is a permutation of `{0..n}`. Division tables are precomputed.
///
/// Equality is algebraic: two squares with the same table compare equal
/// regardless of their catalog labels.
#[derive(Debug, Clone)]
pub struct LatinSquare {
    order: u8,
    table: Vec<u8>,
    ldiv: Vec<u8>,
    rdiv: Vec<u8>,
    name: Option<String>,
}

impl PartialEq for LatinSquare {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}
impl Eq for LatinSquare {}

impl LatinSquare {
    /// Builds a quasigroup from a zero-based row-major table.
    pub fn from_rows(rows: &[Vec<u8>], name: Option<String>) -> Result<Self, QuasigroupError> {
        let n = rows.len();
        if n == 0 || n > 255 {
            return Err(QuasigroupError::InvalidTable(format!(
                "order {n} not supported"
            )));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(QuasigroupError::InvalidTable(format!(
                    "expected {n} entries per row, got {}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        let order = n as u8;
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                let v = table[r * n + c] as usize;
                if v >= n || seen[v] {
                    return Err(QuasigroupError::InvalidTable(format!(
                        "row {r} is not a permutation"
                    )));
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                let v = table[r * n + c] as usize;
                if v >= n || seen[v] {
                    return Err(QuasigroupError::InvalidTable(format!(
                        "column {c} is not a permutation"
                    )));
                }
                seen[v] = true;
            }
        }
        // x * y = z  <=>  x \ z = y  <=>  z / y = x
        let mut ldiv = vec![0u8; n * n];
        let mut rdiv = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = table[x * n + y] as usize;
                ldiv[x * n + z] = y as u8;
                rdiv[z * n + y] = x as u8;
            }
        }
        Ok(LatinSquare {
            order,
            table,
            ldiv,
            rdiv,
            name,
        })
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Short catalog label: `#6.3.1.1` becomes `6.3`.
    pub fn short_name(&self) -> Option<String> {
        let name = self.name.as_deref()?;
        let trimmed = name.strip_prefix('#').unwrap_or(name);
        let mut parts = trimmed.split('.');
        Some(match (parts.next(), parts.next()) {
            (Some(a), Some(b)) => format!("{a}.{b}"),
            _ => trimmed.to_string(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    fn check(&self, e: u8) -> Result<(), QuasigroupError> {
        if e < self.order {
            Ok(())
        } else {
            Err(QuasigroupError::OutOfRange {
                element: e,
                order: self.order,
            })
        }
    }

    /// The product `x * y`.
    pub fn multiply(&self, x: u8, y: u8) -> u8 {
        let n = self.order as usize;
        self.table[x as usize * n + y as usize]
    }

    /// Checked product, for untrusted arguments.
    pub fn try_multiply(&self, x: u8, y: u8) -> Result<u8, QuasigroupError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply(x, y))
    }

    /// Left division: the unique `y` with `x * y = z`.
    pub fn left_divide(&self, x: u8, z: u8) -> u8 {
        let n = self.order as usize;
        self.ldiv[x as usize * n + z as usize]
    }

    /// Right division: the unique `x` with `x * y = z`.
    pub fn right_divide(&self, z: u8, y: u8) -> u8 {
        let n = self.order as usize;
        self.rdiv[z as usize * n + y as usize]
    }

    /// The sigma-conjugate operation: `x1 o x2 = x3` holds in the result
    /// iff `x_{sigma(1)} * x_{sigma(2)} = x_{sigma(3)}` holds here.
    pub fn conjugate(&self, sigma: RolePermutation) -> LatinSquare {
        let n = self.order as usize;
        let inv = sigma.inverse();
        let mut rows = vec![vec![0u8; n]; n];
        for a in 0..n as u8 {
            for b in 0..n as u8 {
                let triple = [a, b, self.multiply(a, b)];
                let x = [
                    triple[inv.0[0]],
                    triple[inv.0[1]],
                    triple[inv.0[2]],
                ];
                rows[x[0] as usize][x[1] as usize] = x[2];
            }
        }
        LatinSquare::from_rows(&rows, None).expect("conjugate of a Latin square")
    }

    /// The principal isotope `x o y = (x / u) * (v \ y)`, a loop with unit
    /// element `v * u`.
    pub fn principal_isotope(&self, u: u8, v: u8) -> Result<LatinSquare, QuasigroupError> {
        self.check(u)?;
        self.check(v)?;
        let n = self.order as usize;
        let mut rows = vec![vec![0u8; n]; n];
        for x in 0..n as u8 {
            for y in 0..n as u8 {
                rows[x as usize][y as usize] =
                    self.multiply(self.right_divide(x, u), self.left_divide(v, y));
            }
        }
        LatinSquare::from_rows(&rows, None)
    }

    /// The smallest triple containing the seeds that is closed under
    /// products and both divisions. For the seed shapes used by the
    /// order-6 pipeline this is the generated subsquare; seeds that leave
    /// a component empty with no forced products stay degenerate.
    pub fn generated_subsquare(&self, u1: &[u8], u2: &[u8], u3: &[u8]) -> SubsquareTriple {
        let n = self.order as usize;
        let mut s = [vec![false; n], vec![false; n], vec![false; n]];
        for (i, seed) in [u1, u2, u3].into_iter().enumerate() {
            for &e in seed {
                s[i][e as usize] = true;
            }
        }
        loop {
            let mut grown = false;
            for x in 0..n {
                for y in 0..n {
                    if s[0][x] && s[1][y] {
                        let z = self.multiply(x as u8, y as u8) as usize;
                        grown |= !s[2][z];
                        s[2][z] = true;
                    }
                }
            }
            for x in 0..n {
                for z in 0..n {
                    if s[0][x] && s[2][z] {
                        let y = self.left_divide(x as u8, z as u8) as usize;
                        grown |= !s[1][y];
                        s[1][y] = true;
                    }
                }
            }
            for z in 0..n {
                for y in 0..n {
                    if s[2][z] && s[1][y] {
                        let x = self.right_divide(z as u8, y as u8) as usize;
                        grown |= !s[0][x];
                        s[0][x] = true;
                    }
                }
            }
            if !grown {
                break;
            }
        }
        let collect = |flags: &[bool]| -> Vec<u8> {
            flags
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i as u8))
                .collect()
        };
        SubsquareTriple {
            s1: collect(&s[0]),
            s2: collect(&s[1]),
            s3: collect(&s[2]),
        }
    }

    /// All proper subsquares, generated from seeds `({x, y}, {z}, {})` with
    /// `x != y`. For order 6 this enumeration is complete: every proper
    /// subsquare has order 2 or 3 and arises from such a seed. For larger
    /// orders the same seeding is applied but is only a heuristic.
    ///
    /// The result is deduplicated and sorted by the flattened point tuple
    /// `s1 + (n + s2) + (2n + s3)`.
    pub fn all_proper_subsquares(&self) -> Vec<SubsquareTriple> {
        let n = self.order;
        let mut out: Vec<SubsquareTriple> = Vec::new();
        for x in 0..n {
            for y in (x + 1)..n {
                for z in 0..n {
                    let t = self.generated_subsquare(&[x, y], &[z], &[]);
                    if t.order() < n as usize && !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
        out.sort_by_cached_key(|t| t.point_tuple(n as usize));
        out
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "# {name}")?;
        }
        writeln!(f, "{}", self.order)?;
        let n = self.order as usize;
        for r in 0..n {
            let row: Vec<String> = (0..n)
                .map(|c| (self.table[r * n + c] + 1).to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A permutation of the three operand roles of `x1 * x2 = x3`, stored as
/// images `[p(0), p(1), p(2)]` on zero-based roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RolePermutation(pub [usize; 3]);

impl RolePermutation {
    pub const IDENTITY: RolePermutation = RolePermutation([0, 1, 2]);
    /// The transposition swapping the two operands.
    pub const SWAP_ARGS: RolePermutation = RolePermutation([1, 0, 2]);

    pub fn new(images: [usize; 3]) -> Result<Self, QuasigroupError> {
        let mut sorted = images;
        sorted.sort_unstable();
        if sorted != [0, 1, 2] {
            return Err(QuasigroupError::InvalidTable(format!(
                "{images:?} is not a permutation of the roles"
            )));
        }
        Ok(RolePermutation(images))
    }

    pub fn inverse(self) -> RolePermutation {
        let mut inv = [0usize; 3];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img] = i;
        }
        RolePermutation(inv)
    }

    /// Composition `self after other`: `(self * other)(i) = self(other(i))`.
    pub fn compose(self, other: RolePermutation) -> RolePermutation {
        RolePermutation([
            self.0[other.0[0]],
            self.0[other.0[1]],
            self.0[other.0[2]],
        ])
    }

    pub fn all() -> [RolePermutation; 6] {
        [
            RolePermutation([0, 1, 2]),
            RolePermutation([0, 2, 1]),
            RolePermutation([1, 0, 2]),
            RolePermutation([1, 2, 0]),
            RolePermutation([2, 0, 1]),
            RolePermutation([2, 1, 0]),
        ]
    }
}

/// An isostrophism: a role permutation together with three bijections of
/// the element set. Applying it to a quasigroup produces an isostrophe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isostrophism {
    pub sigma: RolePermutation,
    pub gammas: [Vec<u8>; 3],
}

impl Isostrophism {
    pub fn new(sigma: RolePermutation, gammas: [Vec<u8>; 3]) -> Result<Self, QuasigroupError> {
        for g in &gammas {
            let mut sorted: Vec<u8> = g.clone();
            sorted.sort_unstable();
            let expect: Vec<u8> = (0..g.len() as u8).collect();
            if sorted != expect {
                return Err(QuasigroupError::InvalidTable(
                    "isostrophism map is not a permutation".into(),
                ));
            }
        }
        Ok(Isostrophism { sigma, gammas })
    }

    /// The quasigroup whose operation `o` satisfies
    /// `x_{sigma(1)} * x_{sigma(2)} = x_{sigma(3)}  <=>
    ///  gamma1(x1) o gamma2(x2) = gamma3(x3)`.
    pub fn apply(&self, q: &LatinSquare) -> Result<LatinSquare, QuasigroupError> {
        let n = q.order() as usize;
        for g in &self.gammas {
            if g.len() != n {
                return Err(QuasigroupError::InvalidTable(
                    "isostrophism degree mismatch".into(),
                ));
            }
        }
        let conj = q.conjugate(self.sigma);
        let mut rows = vec![vec![0u8; n]; n];
        for x1 in 0..n {
            for x2 in 0..n {
                let x3 = conj.multiply(x1 as u8, x2 as u8);
                rows[self.gammas[0][x1] as usize][self.gammas[1][x2] as usize] =
                    self.gammas[2][x3 as usize];
            }
        }
        LatinSquare::from_rows(&rows, None)
    }
}

/// A subsquare `(S1, S2, S3)`: subsets closed under `S1*S2 <= S3`,
/// `S1\S3 <= S2` and `S3/S2 <= S1`, all of the same cardinality (the
/// order). Components are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsquareTriple {
    s1: Vec<u8>,
    s2: Vec<u8>,
    s3: Vec<u8>,
}

impl SubsquareTriple {
    pub fn new(mut s1: Vec<u8>, mut s2: Vec<u8>, mut s3: Vec<u8>) -> Self {
        s1.sort_unstable();
        s1.dedup();
        s2.sort_unstable();
        s2.dedup();
        s3.sort_unstable();
        s3.dedup();
        SubsquareTriple { s1, s2, s3 }
    }

    pub fn s1(&self) -> &[u8] {
        &self.s1
    }

    pub fn s2(&self) -> &[u8] {
        &self.s2
    }

    pub fn s3(&self) -> &[u8] {
        &self.s3
    }

    pub fn order(&self) -> usize {
        self.s1.len()
    }

    /// True for a proper subsquare of `q`: equal component sizes between 2
    /// and `n - 1`, closed under product and both divisions.
    pub fn validate(&self, q: &LatinSquare) -> Result<(), QuasigroupError> {
        let bad = || QuasigroupError::NotASubsquare {
            s1: self.s1.clone(),
            s2: self.s2.clone(),
            s3: self.s3.clone(),
        };
        let n = q.order();
        if self.s1.len() != self.s2.len()
            || self.s1.len() != self.s3.len()
            || self.s1.len() < 2
            || self.s1.len() >= n as usize
        {
            return Err(bad());
        }
        for &e in self.s1.iter().chain(&self.s2).chain(&self.s3) {
            q.check(e)?;
        }
        for &x in &self.s1 {
            for &y in &self.s2 {
                if !self.s3.contains(&q.multiply(x, y)) {
                    return Err(bad());
                }
            }
            for &z in &self.s3 {
                if !self.s2.contains(&q.left_divide(x, z)) {
                    return Err(bad());
                }
            }
        }
        for &z in &self.s3 {
            for &y in &self.s2 {
                if !self.s1.contains(&q.right_divide(z, y)) {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    /// Flattened point representation `s1 + (n + s2) + (2n + s3)`, the key
    /// the classification pipeline sorts subsquares by.
    pub fn point_tuple(&self, n: usize) -> Vec<u16> {
        let mut out: Vec<u16> = Vec::with_capacity(3 * self.s1.len());
        out.extend(self.s1.iter().map(|&e| u16::from(e)));
        out.extend(self.s2.iter().map(|&e| u16::from(e) + n as u16));
        out.extend(self.s3.iter().map(|&e| u16::from(e) + 2 * n as u16));
        out
    }
}

/// Parses the Cayley-table text format: an optional `# name` comment, a
/// line with the order `n`, then `n` rows of one-based entries.
pub fn parse_latin_square(input: &str) -> Result<LatinSquare, QuasigroupError> {
    let mut name: Option<String> = None;
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if name.is_none() && !comment.trim().is_empty() {
                name = Some(comment.trim().to_string());
            }
            continue;
        }
        match order {
            None => {
                let n: usize = line.parse().map_err(|_| QuasigroupError::Parse {
                    line: line_no,
                    message: format!("expected the order, found `{line}`"),
                })?;
                if n == 0 || n > 255 {
                    return Err(QuasigroupError::Parse {
                        line: line_no,
                        message: format!("unsupported order {n}"),
                    });
                }
                order = Some(n);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(QuasigroupError::Parse {
                        line: line_no,
                        message: "trailing content after the table".into(),
                    });
                }
                let mut row = Vec::with_capacity(n);
                for tok in line.split_whitespace() {
                    let v: usize = tok.parse().map_err(|_| QuasigroupError::Parse {
                        line: line_no,
                        message: format!("bad entry `{tok}`"),
                    })?;
                    if v == 0 || v > n {
                        return Err(QuasigroupError::Parse {
                            line: line_no,
                            message: format!("entry {v} outside 1..={n}"),
                        });
                    }
                    row.push((v - 1) as u8);
                }
                if row.len() != n {
                    return Err(QuasigroupError::Parse {
                        line: line_no,
                        message: format!("expected {n} entries, found {}", row.len()),
                    });
                }
                rows.push(row);
            }
        }
    }
    let n = order.ok_or(QuasigroupError::Parse {
        line: input.lines().count().max(1),
        message: "missing order line".into(),
    })?;
    if rows.len() != n {
        return Err(QuasigroupError::Parse {
            line: input.lines().count().max(1),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    LatinSquare::from_rows(&rows, name)
}

const CATALOG_SOURCES: [&str; 12] = [
    include_str!("../data/q6_01.txt"),
    include_str!("../data/q6_02.txt"),
    include_str!("../data/q6_03.txt"),
    include_str!("../data/q6_04.txt"),
    include_str!("../data/q6_05.txt"),
    include_str!("../data/q6_06.txt"),
    include_str!("../data/q6_07.txt"),
    include_str!("../data/q6_08.txt"),
    include_str!("../data/q6_09.txt"),
    include_str!("../data/q6_10.txt"),
    include_str!("../data/q6_11.txt"),
    include_str!("../data/q6_12.txt"),
];

/// The 12 main-class representative quasigroups of order 6, `#6.1.1.1`
/// through `#6.12.1.1`. Panics only if the embedded data is corrupted.
pub fn catalog() -> &'static [LatinSquare] {
    static CATALOG: OnceLock<Vec<LatinSquare>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        CATALOG_SOURCES
            .iter()
            .map(|src| parse_latin_square(src).expect("embedded catalog table"))
            .collect()
    })
}

/// Looks up a catalog table by full (`#6.3.1.1`) or short (`6.3`) name.
pub fn catalog_table(name: &str) -> Option<&'static LatinSquare> {
    catalog().iter().find(|q| {
        q.name() == Some(name) || q.short_name().as_deref() == Some(name)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_twelve_valid_tables() {
        let cat = catalog();
        assert_eq!(cat.len(), 12);
        for (i, q) in cat.iter().enumerate() {
            assert_eq!(q.order(), 6);
            assert_eq!(q.name(), Some(format!("#6.{}.1.1", i + 1).as_str()));
        }
        // Row 2 (one-based) of #6.1.1.1 is 2 3 4 5 6 1.
        let z6 = &cat[0];
        let row: Vec<u8> = (0..6).map(|y| z6.multiply(1, y)).collect();
        assert_eq!(row, vec![1, 2, 3, 4, 5, 0]);
        // First row of every catalog table is the identity row.
        for q in cat {
            for y in 0..6 {
                assert_eq!(q.multiply(0, y), y);
            }
        }
    }

    #[test]
    fn divisions_invert_multiplication() {
        for q in catalog() {
            for x in 0..6 {
                for y in 0..6 {
                    let z = q.multiply(x, y);
                    assert_eq!(q.left_divide(x, z), y);
                    assert_eq!(q.right_divide(z, y), x);
                }
            }
        }
        // left_divide(0, 3) on the cyclic table solves 0 + y = 3.
        assert_eq!(catalog()[0].left_divide(0, 3), 3);
    }

    #[test]
    fn conjugate_identity_and_transpose() {
        let q = &catalog()[4];
        assert_eq!(&q.conjugate(RolePermutation::IDENTITY), q);
        let t = q.conjugate(RolePermutation::SWAP_ARGS);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(t.multiply(x, y), q.multiply(y, x));
            }
        }
    }

    #[test]
    fn conjugate_respects_composition() {
        let q = &catalog()[6];
        for sigma in RolePermutation::all() {
            let undone = q.conjugate(sigma).conjugate(sigma.inverse());
            assert_eq!(&undone, q);
            for tau in RolePermutation::all() {
                let stepwise = q.conjugate(sigma).conjugate(tau);
                let direct = q.conjugate(tau.compose(sigma));
                assert_eq!(stepwise, direct);
            }
        }
    }

    #[test]
    fn principal_isotope_is_a_loop_with_unit_vu() {
        for q in catalog() {
            for u in 0..6 {
                for v in 0..6 {
                    let loop_table = q.principal_isotope(u, v).unwrap();
                    let e = q.multiply(v, u);
                    for x in 0..6 {
                        assert_eq!(loop_table.multiply(e, x), x);
                        assert_eq!(loop_table.multiply(x, e), x);
                    }
                }
            }
        }
    }

    #[test]
    fn principal_isotope_of_group_at_unit_is_identity() {
        // #6.1.1.1 is the cyclic group; its unit is 0.
        let z6 = &catalog()[0];
        let iso = z6.principal_isotope(0, 0).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(iso.multiply(x, y), z6.multiply(x, y));
            }
        }
    }

    #[test]
    fn generated_subsquare_examples() {
        let z6 = &catalog()[0];
        // Singleton seeds close to an order-1 triple ({x}, {y}, {x*y}).
        let t = z6.generated_subsquare(&[2], &[3], &[]);
        assert_eq!((t.s1(), t.s2(), t.s3()), (&[2u8][..], &[3u8][..], &[5u8][..]));
        // ({0, 2}, {0}, {}) closes to the even coset triple.
        let t = z6.generated_subsquare(&[0, 2], &[0], &[]);
        let evens: &[u8] = &[0, 2, 4];
        assert_eq!((t.s1(), t.s2(), t.s3()), (evens, evens, evens));
        assert_eq!(t.order(), 3);
        // The whole set is the trivial subsquare.
        let all: Vec<u8> = (0..6).collect();
        let t = z6.generated_subsquare(&all, &all, &all);
        assert_eq!(t.order(), 6);
        // Idempotence: the output regenerates itself.
        let t = z6.generated_subsquare(&[0, 2], &[0], &[]);
        let again = z6.generated_subsquare(t.s1(), t.s2(), t.s3());
        assert_eq!(t, again);
    }

    #[test]
    fn proper_subsquares_have_order_2_or_3_and_validate() {
        for q in catalog() {
            for t in q.all_proper_subsquares() {
                assert!(t.order() == 2 || t.order() == 3, "{t:?}");
                t.validate(q).unwrap();
            }
        }
    }

    #[test]
    fn order_3_subsquares_contain_no_order_2_subsquare() {
        for q in catalog() {
            let subs = q.all_proper_subsquares();
            for big in subs.iter().filter(|t| t.order() == 3) {
                for small in subs.iter().filter(|t| t.order() == 2) {
                    let contained = small.s1().iter().all(|e| big.s1().contains(e))
                        && small.s2().iter().all(|e| big.s2().contains(e))
                        && small.s3().iter().all(|e| big.s3().contains(e));
                    assert!(!contained, "{small:?} inside {big:?}");
                }
            }
        }
    }

    #[test]
    fn isostrophism_with_identity_parts_is_conjugation() {
        let q = &catalog()[2];
        let id: Vec<u8> = (0..6).collect();
        for sigma in RolePermutation::all() {
            let iso = Isostrophism::new(sigma, [id.clone(), id.clone(), id.clone()]).unwrap();
            assert_eq!(iso.apply(q).unwrap(), q.conjugate(sigma));
        }
    }

    #[test]
    fn parse_rejects_malformed_tables_with_line_numbers() {
        let bad = "# broken\n3\n1 2 3\n1 2\n3 1 2\n";
        match parse_latin_square(bad) {
            Err(QuasigroupError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        let not_latin = "2\n1 1\n2 2\n";
        assert!(matches!(
            parse_latin_square(not_latin),
            Err(QuasigroupError::InvalidTable(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        for q in catalog() {
            let text = q.to_string();
            let parsed = parse_latin_square(&text).unwrap();
            assert_eq!(&parsed, q);
        }
    }

    #[test]
    fn catalog_lookup_by_short_and_full_name() {
        assert_eq!(catalog_table("#6.7.1.1").unwrap().name(), Some("#6.7.1.1"));
        assert_eq!(catalog_table("6.7").unwrap().name(), Some("#6.7.1.1"));
        assert!(catalog_table("6.13").is_none());
    }
}
