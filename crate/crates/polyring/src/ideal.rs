//! Finitely generated ideals with cached reduced Groebner bases, and the
//! queries built on them: membership, containment, saturation, dimension.

use crate::budget::Budget;
use crate::divide::normal_form;
use crate::error::PolyError;
use crate::groebner::{buchberger, interreduce};
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Ring};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A reduced Groebner basis together with the ring (and order) it was
/// computed under.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Ring,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0] == self.ring.one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    /// Normal form of `f` (given in this basis's ring) modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(&self.ring, f, &self.polys)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Canonical text rendering, usable as a dedup/sort key: the reduced
    /// basis is unique per (ideal, order).
    pub fn canonical_text(&self) -> String {
        let lines: Vec<String> = self.polys.iter().map(|p| self.ring.to_text(p)).collect();
        lines.join("; ")
    }
}

/// An ideal of a polynomial ring, given by generators. Reduced Groebner
/// bases are computed on demand and cached per monomial order.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("ideal cache poisoned").clone();
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(cache),
        }
    }
}

impl Ideal {
    /// Creates an ideal, dropping zero generators.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring,
            generators,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// An ideal whose reduced basis under `order` is already known.
    pub fn from_basis(ring: Ring, order: MonomialOrder, basis: Vec<Polynomial>) -> Self {
        let ideal = Ideal::new(ring.clone(), basis.clone());
        let gb = GroebnerBasis {
            ring: ring.with_order(order),
            polys: basis,
        };
        ideal
            .cache
            .lock()
            .expect("ideal cache poisoned")
            .insert(order, Arc::new(gb));
        ideal
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn with_extra_generators(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// The reduced Groebner basis under `order`, cached.
    pub fn groebner_basis(
        &self,
        order: MonomialOrder,
        budget: &Budget,
    ) -> Result<Arc<GroebnerBasis>, PolyError> {
        if let Some(gb) = self.cache.lock().expect("ideal cache poisoned").get(&order) {
            return Ok(Arc::clone(gb));
        }
        let ring = self.ring.with_order(order);
        let gens: Vec<Polynomial> = self.generators.iter().map(|g| ring.convert(g)).collect();
        let polys = buchberger(&ring, &gens, budget)?;
        let gb = Arc::new(GroebnerBasis { ring, polys });
        let mut cache = self.cache.lock().expect("ideal cache poisoned");
        let entry = cache.entry(order).or_insert_with(|| Arc::clone(&gb));
        Ok(Arc::clone(entry))
    }

    /// Basis under the ring's own order.
    pub fn default_basis(&self, budget: &Budget) -> Result<Arc<GroebnerBasis>, PolyError> {
        self.groebner_basis(self.ring.order(), budget)
    }

    /// Ideal membership: true iff the normal form of `f` vanishes.
    pub fn contains_poly(&self, f: &Polynomial, budget: &Budget) -> Result<bool, PolyError> {
        let gb = self.default_basis(budget)?;
        Ok(gb.reduces_to_zero(&gb.ring().convert(f)))
    }

    /// Ideal containment: true iff every generator of `other` reduces to
    /// zero modulo this ideal.
    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool, PolyError> {
        let gb = self.default_basis(budget)?;
        for g in &other.generators {
            if !gb.reduces_to_zero(&gb.ring().convert(g)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool, PolyError> {
        Ok(self.contains_ideal(other, budget)? && other.contains_ideal(self, budget)?)
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool, PolyError> {
        Ok(self.default_basis(budget)?.is_unit())
    }

    /// Saturation `self : f^inf` by the Rabinowitsch construction: a fresh
    /// variable `w` is prepended, `1 - w*f` adjoined, and `w` eliminated
    /// with a block order.
    pub fn saturate(&self, f: &Polynomial, budget: &Budget) -> Result<Ideal, PolyError> {
        if f.is_zero() {
            return Err(PolyError::ZeroSaturation);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let ext = self
            .ring
            .extended_front("w", MonomialOrder::Elim { front: 1 });
        let lift = |p: &Polynomial| -> Polynomial {
            ext.polynomial(
                p.terms()
                    .iter()
                    .map(|(m, c)| (m.with_front_variable(), c.clone()))
                    .collect(),
            )
        };
        let mut gens: Vec<Polynomial> = self.generators.iter().map(lift).collect();
        let w = ext.variable(0);
        gens.push(ext.sub(&ext.one(), &ext.mul(&w, &lift(f))));
        let basis = buchberger(&ext, &gens, budget)?;
        // Elimination: the w-free basis elements generate the contraction,
        // and they form a degrevlex Groebner basis of it.
        let tail_ring = self.ring.with_order(MonomialOrder::DegRevLex);
        let kept: Vec<Polynomial> = basis
            .iter()
            .filter(|p| p.leading_monomial().is_none_or(|m| m.exponent(0) == 0))
            .map(|p| {
                tail_ring.polynomial(
                    p.terms()
                        .iter()
                        .map(|(m, c)| (m.without_front_variable(), c.clone()))
                        .collect(),
                )
            })
            .collect();
        let kept = interreduce(&tail_ring, kept);
        Ok(Ideal::from_basis(
            self.ring.clone(),
            MonomialOrder::DegRevLex,
            kept,
        ))
    }

    /// Krull dimension of the quotient ring, by the independent-set method
    /// on the leading-term ideal: the maximum size of a variable set `U`
    /// such that no leading monomial is supported entirely inside `U`.
    pub fn krull_dimension(&self, budget: &Budget) -> Result<usize, PolyError> {
        let gb = self.default_basis(budget)?;
        if gb.is_unit() {
            return Err(PolyError::UnitIdeal);
        }
        let n = self.ring.arity();
        if gb.is_zero_ideal() {
            return Ok(n);
        }
        let lead_supports: Vec<u64> = gb
            .polys()
            .iter()
            .map(|p| p.leading_monomial().unwrap().support_mask())
            .collect();
        let mut best = 0usize;
        // DFS over variable subsets with a simple remaining-count bound.
        fn search(
            var: usize,
            n: usize,
            chosen: u64,
            count: usize,
            leads: &[u64],
            best: &mut usize,
        ) {
            if count + (n - var) <= *best {
                return;
            }
            if var == n {
                *best = (*best).max(count);
                return;
            }
            let with = chosen | (1u64 << var);
            if leads.iter().all(|&s| s & !with != 0) {
                search(var + 1, n, with, count + 1, leads, best);
            }
            search(var + 1, n, chosen, count, leads, best);
        }
        search(0, n, 0, 0, &lead_supports, &mut best);
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new(n, MonomialOrder::DegRevLex)
    }

    #[test]
    fn membership_basics() {
        let r = ring(2);
        let x = r.variable(0);
        let y = r.variable(1);
        let ideal = Ideal::new(r.clone(), vec![r.sub(&x, &y)]);
        let unlimited = Budget::unlimited();
        assert!(ideal.contains_poly(&r.zero(), &unlimited).unwrap());
        assert!(ideal
            .contains_poly(&r.sub(&r.mul(&x, &x), &r.mul(&y, &y)), &unlimited)
            .unwrap());
        assert!(!ideal.contains_poly(&x, &unlimited).unwrap());
    }

    #[test]
    fn containment_basics() {
        let r = ring(2);
        let x = r.variable(0);
        let y = r.variable(1);
        let unlimited = Budget::unlimited();
        let i = Ideal::new(r.clone(), vec![x.clone(), y.clone()]);
        let j = Ideal::new(r.clone(), vec![r.mul(&x, &y)]);
        let unit = Ideal::new(r.clone(), vec![r.one()]);
        assert!(i.contains_ideal(&i, &unlimited).unwrap());
        assert!(i.contains_ideal(&j, &unlimited).unwrap());
        assert!(!j.contains_ideal(&i, &unlimited).unwrap());
        assert!(unit.contains_ideal(&i, &unlimited).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(2);
        let x = r.variable(0);
        let y = r.variable(1);
        let unlimited = Budget::unlimited();
        // <x*y> : x^inf = <y>
        let i = Ideal::new(r.clone(), vec![r.mul(&x, &y)]);
        let sat = i.saturate(&x, &unlimited).unwrap();
        assert!(sat
            .equals(&Ideal::new(r.clone(), vec![y.clone()]), &unlimited)
            .unwrap());
        // Saturation contains the original ideal and is idempotent.
        assert!(sat.contains_ideal(&i, &unlimited).unwrap());
        let sat2 = sat.saturate(&x, &unlimited).unwrap();
        assert!(sat2.equals(&sat, &unlimited).unwrap());
        // <x^2> : x^inf = <1>
        let sq = Ideal::new(r.clone(), vec![r.mul(&x, &x)]);
        assert!(sq.saturate(&x, &unlimited).unwrap().is_unit(&unlimited).unwrap());
        // Saturating by a unit changes nothing.
        let same = i.saturate(&r.integer(1), &unlimited).unwrap();
        assert!(same.equals(&i, &unlimited).unwrap());
    }

    #[test]
    fn saturation_by_zero_is_an_error() {
        let r = ring(1);
        let i = Ideal::new(r.clone(), vec![r.variable(0)]);
        assert!(matches!(
            i.saturate(&r.zero(), &Budget::unlimited()),
            Err(PolyError::ZeroSaturation)
        ));
    }

    #[test]
    fn krull_dimension_examples() {
        let unlimited = Budget::unlimited();
        // Hypersurface <t13> in 13 variables has dimension 12.
        let r13 = ring(13);
        let hyper = Ideal::new(r13.clone(), vec![r13.variable(12)]);
        assert_eq!(hyper.krull_dimension(&unlimited).unwrap(), 12);
        // <x*y> in 2 variables: dimension 1; <x, y>: dimension 0.
        let r2 = ring(2);
        let x = r2.variable(0);
        let y = r2.variable(1);
        let xy = Ideal::new(r2.clone(), vec![r2.mul(&x, &y)]);
        assert_eq!(xy.krull_dimension(&unlimited).unwrap(), 1);
        let max = Ideal::new(r2.clone(), vec![x.clone(), y.clone()]);
        assert_eq!(max.krull_dimension(&unlimited).unwrap(), 0);
        // Zero ideal: the whole ring.
        let zero = Ideal::new(r2.clone(), vec![]);
        assert_eq!(zero.krull_dimension(&unlimited).unwrap(), 2);
        // Unit ideal: no dimension.
        let unit = Ideal::new(r2.clone(), vec![r2.one()]);
        assert!(matches!(
            unit.krull_dimension(&unlimited),
            Err(PolyError::UnitIdeal)
        ));
    }
}
