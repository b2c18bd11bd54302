//! Power products and monomial orders.
//!
//! Variables are indexed `0..arity` and compared with the convention that
//! variable `0` is the greatest, i.e. `t1 > t2 > ... > tn`.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector storage. Inline capacity covers every ring used here
/// (17 variables, plus one auxiliary variable for saturation).
pub type Exponents = SmallVec<[u16; 20]>;

/// A power product of ring variables, stored as an exponent vector of the
/// ambient ring's arity.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors;
/// it is a canonical tie-break order for data structures, not a monomial
/// order. Use [`MonomialOrder::cmp_monomials`] for the latter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    /// The constant monomial `1` in a ring with `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, arity),
        }
    }

    /// The single variable `var` to the first power.
    pub fn variable(var: usize, arity: usize) -> Self {
        let mut m = Self::one(arity);
        m.exps[var] = 1;
        m
    }

    pub fn from_exponents(exps: impl Into<Exponents>) -> Self {
        Monomial { exps: exps.into() }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// Quotient `self / other`; panics if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self), "monomial division is not exact");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of the variables with a positive exponent. Rings are capped
    /// at 64 variables so that this always fits.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1u64 << i;
            }
        }
        mask
    }

    /// Drops the first exponent, shrinking the arity by one. Used to map
    /// monomials out of the auxiliary saturation variable's ring.
    pub fn without_front_variable(&self) -> Monomial {
        Monomial {
            exps: self.exps[1..].iter().copied().collect(),
        }
    }

    /// Prepends a zero exponent, growing the arity by one.
    pub fn with_front_variable(&self) -> Monomial {
        let mut exps = Exponents::with_capacity(self.arity() + 1);
        exps.push(0);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }
}

/// A global monomial order on power products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with `t1 > t2 > ... > tn`.
    Lex,
    /// Graded reverse lexicographic with the same variable order.
    DegRevLex,
    /// Block order eliminating the first `front` variables: degrevlex on
    /// the front block, ties broken by degrevlex on the rest. Any basis
    /// element whose leading monomial avoids the front block is free of it
    /// entirely, which is what elimination needs.
    Elim { front: usize },
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (&x, &y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_degrevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let deg = |m: &Monomial| -> u32 { m.exponents()[lo..hi].iter().map(|&e| u32::from(e)).sum() };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (lo..hi).rev() {
        let (x, y) = (a.exponent(i), b.exponent(i));
        if x != y {
            // Rightmost difference: the smaller exponent wins.
            return if x < y { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        let n = a.arity();
        match *self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::DegRevLex => cmp_degrevlex_range(a, b, 0, n),
            MonomialOrder::Elim { front } => cmp_degrevlex_range(a, b, 0, front)
                .then_with(|| cmp_degrevlex_range(a, b, front, n)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Elim { .. } => "elim",
        }
    }

    /// Parses the two order names used in files and on the command line.
    pub fn parse(s: &str) -> Option<MonomialOrder> {
        match s {
            "lex" => Some(MonomialOrder::Lex),
            "degrevlex" => Some(MonomialOrder::DegRevLex),
            _ => None,
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Elim { front } => write!(f, "elim({front})"),
            other => f.write_str(other.name()),
        }
    }
}
