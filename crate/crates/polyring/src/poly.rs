//! Polynomials with exact rational coefficients, and the ring context that
//! owns arity, variable names and the active monomial order.
//!
//! A [`Polynomial`] is plain data: a term list sorted strictly descending
//! under the order of the [`Ring`] it was built with. All arithmetic goes
//! through the ring so that sortedness is preserved.

use crate::monomial::{Monomial, MonomialOrder};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Ambient polynomial ring `Q[t1,...,tn]` with a fixed monomial order.
#[derive(Debug, Clone)]
pub struct Ring {
    arity: usize,
    order: MonomialOrder,
    names: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.order == other.order && self.names == other.names
    }
}
impl Eq for Ring {}

impl Ring {
    /// A ring with variables named `t1..tn`.
    pub fn new(arity: usize, order: MonomialOrder) -> Self {
        let names = (1..=arity).map(|i| format!("t{i}")).collect();
        Self::with_names(names, order)
    }

    pub fn with_names(names: Vec<String>, order: MonomialOrder) -> Self {
        assert!(names.len() <= 64, "rings are capped at 64 variables");
        Ring {
            arity: names.len(),
            order,
            names: Arc::new(names),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variable_name(&self, var: usize) -> &str {
        &self.names[var]
    }

    /// Same variables under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring {
            arity: self.arity,
            order,
            names: Arc::clone(&self.names),
        }
    }

    /// Extends the ring by one auxiliary variable in front (the greatest
    /// position), under the given order. Used for saturation.
    pub fn extended_front(&self, name: &str, order: MonomialOrder) -> Ring {
        let mut names = Vec::with_capacity(self.arity + 1);
        names.push(name.to_string());
        names.extend(self.names.iter().cloned());
        Ring::with_names(names, order)
    }

    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_monomials(a, b)
    }

    // ---- constructors ----

    pub fn zero(&self) -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(BigRational::one())
    }

    pub fn constant(&self, c: BigRational) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            terms: vec![(Monomial::one(self.arity), c)],
        }
    }

    pub fn integer(&self, c: i64) -> Polynomial {
        self.constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn variable(&self, var: usize) -> Polynomial {
        assert!(var < self.arity);
        Polynomial {
            terms: vec![(Monomial::variable(var, self.arity), BigRational::one())],
        }
    }

    pub fn monomial(&self, m: Monomial, c: BigRational) -> Polynomial {
        assert_eq!(m.arity(), self.arity);
        if c.is_zero() {
            return self.zero();
        }
        Polynomial { terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms: merges equal monomials,
    /// drops zero coefficients, sorts descending under the ring order.
    pub fn polynomial(&self, terms: Vec<(Monomial, BigRational)>) -> Polynomial {
        let mut map: HashMap<Monomial, BigRational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), self.arity);
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().collect();
        terms.sort_by(|(a, _), (b, _)| self.cmp(b, a));
        Polynomial { terms }
    }

    /// Re-sorts a polynomial that was built under a different order.
    pub fn convert(&self, p: &Polynomial) -> Polynomial {
        let mut terms = p.terms.clone();
        terms.sort_by(|(a, _), (b, _)| self.cmp(b, a));
        Polynomial { terms }
    }

    // ---- arithmetic ----

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.cmp(&f.terms[i].0, &g.terms[j].0) {
                Ordering::Greater => {
                    terms.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(g.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &f.terms[i].1 + &g.terms[j].1;
                    if !c.is_zero() {
                        terms.push((f.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&f.terms[i..]);
        terms.extend_from_slice(&g.terms[j..]);
        Polynomial { terms }
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add(f, &self.neg(g))
    }

    /// Multiplies by the single term `c * m`. Monomial orders are
    /// multiplicative, so the term list stays sorted.
    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(fm, fc)| (fm.mul(m), fc * c))
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial, c: &BigRational) -> Polynomial {
        self.mul_term(f, &Monomial::one(self.arity), c)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let mut acc: Vec<(Monomial, BigRational)> =
            Vec::with_capacity(f.terms.len() * g.terms.len());
        for (fm, fc) in &f.terms {
            for (gm, gc) in &g.terms {
                acc.push((fm.mul(gm), fc * gc));
            }
        }
        self.polynomial(acc)
    }

    // ---- normal forms of representation ----

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient. Keeps intermediate Groebner computations small.
    pub fn normalize_primitive(&self, f: &Polynomial) -> Polynomial {
        if f.is_zero() {
            return self.zero();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &f.terms {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &f.terms {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num::integer::gcd(num_gcd, scaled);
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if f.terms[0].1.is_negative() {
            factor = -factor.abs();
        } else {
            factor = factor.abs();
        }
        self.scale(f, &factor)
    }

    /// Scales so the leading coefficient is 1.
    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            None => self.zero(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(f, &inv)
            }
        }
    }

    /// Renders a polynomial as text using the ring's variable names.
    pub fn to_text(&self, f: &Polynomial) -> String {
        format!("{}", PolyDisplay { ring: self, poly: f })
    }
}

/// A multivariate polynomial: term list sorted strictly descending under
/// the owning ring's monomial order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigRational)>,
}

impl Polynomial {
    /// Builds a polynomial from terms already sorted strictly descending
    /// under the caller's order, with no zero coefficients.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, BigRational)>) -> Polynomial {
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() || self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the order the polynomial was built with.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| u32::from(m.exponent(var)))
            .max()
            .unwrap_or(0)
    }

    /// Bitmask of variables occurring in some term.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support_mask())
    }

    /// The greatest common monomial divisor of all terms.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, (m, _)| acc.gcd(m)))
    }
}

struct PolyDisplay<'a> {
    ring: &'a Ring,
    poly: &'a Polynomial,
}

impl PolyDisplay<'_> {
    fn write_monomial(&self, m: &Monomial, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for var in 0..m.arity() {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            if !first {
                out.write_str("*")?;
            }
            first = false;
            out.write_str(self.ring.variable_name(var))?;
            if e > 1 {
                write!(out, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return out.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.write_str("-")?;
                }
            } else if neg {
                out.write_str(" - ")?;
            } else {
                out.write_str(" + ")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(out, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(out, "{abs}*")?;
                }
                self.write_monomial(m, out)?;
            }
        }
        Ok(())
    }
}
