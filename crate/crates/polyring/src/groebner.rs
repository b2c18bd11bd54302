//! Buchberger's algorithm with the coprime and chain criteria.

use crate::budget::Budget;
use crate::divide::{divide_budgeted, normal_form};
use crate::error::PolyError;
use crate::monomial::{Exponents, Monomial};
use crate::poly::{Polynomial, Ring};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

/// The S-polynomial of `f` and `g`.
pub fn spolynomial(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading().expect("spolynomial of zero");
    let (gm, gc) = g.leading().expect("spolynomial of zero");
    let l = fm.lcm(gm);
    let a = ring.mul_term(f, &l.div(fm), &fc.recip());
    let b = ring.mul_term(g, &l.div(gm), &gc.recip());
    ring.sub(&a, &b)
}

/// Pair selection key: degree of the lcm first, then a fixed tie-break on
/// its exponent vector, then the indices.
#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey(u32, Exponents, usize, usize);

fn pair_key(lcm: &Monomial, i: usize, j: usize) -> Reverse<PairKey> {
    Reverse(PairKey(
        lcm.degree(),
        Exponents::from_slice(lcm.exponents()),
        i,
        j,
    ))
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`
/// under the order of `ring`. The result is monic, auto-reduced and sorted
/// ascending by leading monomial, hence unique for (ideal, order).
pub fn buchberger(
    ring: &Ring,
    gens: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<Polynomial>, PolyError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(ring.normalize_primitive(g));
        }
    }
    basis.sort_by(|a, b| {
        ring.order()
            .cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    basis.dedup();
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let lcm = basis[i]
                .leading_monomial()
                .unwrap()
                .lcm(basis[j].leading_monomial().unwrap());
            heap.push(pair_key(&lcm, i, j));
        }
    }

    let mut pairs_done: u64 = 0;
    while let Some(Reverse(PairKey(_, _, i, j))) = heap.pop() {
        if budget.deadline_passed() || budget.pairs_exceeded(pairs_done) {
            return Err(PolyError::BudgetExhausted {
                pairs_done,
                partial: basis,
            });
        }
        pairs_done += 1;
        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        let lcm = lm_i.lcm(lm_j);

        // Buchberger's first criterion: coprime leading terms.
        if lm_i.is_coprime(lm_j) {
            done.insert((i, j));
            continue;
        }
        // Chain criterion: some k with lm_k | lcm and both sub-pairs treated.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chain {
            done.insert((i, j));
            continue;
        }

        let s = spolynomial(ring, &basis[i], &basis[j]);
        let r = divide_budgeted(ring, &s, &basis, budget)
            .map_err(|_| PolyError::BudgetExhausted {
                pairs_done,
                partial: basis.clone(),
            })?
            .remainder;
        done.insert((i, j));
        if !r.is_zero() {
            let r = ring.normalize_primitive(&r);
            let t = basis.len();
            for i in 0..t {
                let lcm = basis[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(r.leading_monomial().unwrap());
                heap.push(pair_key(&lcm, i, t));
            }
            basis.push(r);
        }
    }

    Ok(interreduce(ring, basis))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Auto-reduces a generating set that is already a Groebner basis: drops
/// elements whose leading monomial is divisible by another's, fully tail
/// reduces the rest, makes them monic and sorts ascending by leading
/// monomial.
pub fn interreduce(ring: &Ring, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.retain(|p| !p.is_zero());
    basis.sort_by(|a, b| {
        ring.order()
            .cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    basis.dedup();
    // Minimalize: scanning by ascending leading monomial, every redundant
    // element sees its divisor among the already-kept ones.
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for p in basis {
        let lm = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(p);
        }
    }
    // Tail-reduce to a fixpoint.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let r = ring.normalize_primitive(&normal_form(ring, &minimal[i], &others));
            debug_assert!(!r.is_zero(), "minimal basis element reduced to zero");
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut reduced: Vec<Polynomial> = minimal.iter().map(|p| ring.make_monic(p)).collect();
    reduced.sort_by(|a, b| {
        ring.order()
            .cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    #[test]
    fn unit_ideal_reduces_to_one() {
        let ring = Ring::new(2, MonomialOrder::Lex);
        let basis = buchberger(&ring, &[ring.integer(1)], &Budget::unlimited()).unwrap();
        assert_eq!(basis, vec![ring.one()]);
    }

    #[test]
    fn textbook_lex_basis() {
        // buchberger({x^2 - 1, x*y - 1}, lex x > y) = {x - y, y^2 - 1}
        let ring = Ring::new(2, MonomialOrder::Lex);
        let x = ring.variable(0);
        let y = ring.variable(1);
        let f = ring.sub(&ring.mul(&x, &x), &ring.one());
        let g = ring.sub(&ring.mul(&x, &y), &ring.one());
        let basis = buchberger(&ring, &[f, g], &Budget::unlimited()).unwrap();
        let want_1 = ring.sub(&x, &y);
        let want_2 = ring.sub(&ring.mul(&y, &y), &ring.one());
        // Sorted ascending by leading monomial: y^2 - 1 comes before x - y.
        assert_eq!(basis, vec![want_2, want_1]);
    }

    #[test]
    fn every_spolynomial_reduces_to_zero() {
        let ring = Ring::new(3, MonomialOrder::DegRevLex);
        let x = ring.variable(0);
        let y = ring.variable(1);
        let z = ring.variable(2);
        let gens = vec![
            ring.sub(&ring.mul(&x, &y), &z),
            ring.sub(&ring.mul(&y, &z), &x),
            ring.sub(&ring.mul(&z, &x), &y),
        ];
        let basis = buchberger(&ring, &gens, &Budget::unlimited()).unwrap();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let s = spolynomial(&ring, &basis[i], &basis[j]);
                assert!(normal_form(&ring, &s, &basis).is_zero());
            }
        }
        // Original generators lie in the ideal.
        for g in &gens {
            assert!(normal_form(&ring, g, &basis).is_zero());
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let ring = Ring::new(3, MonomialOrder::Lex);
        let x = ring.variable(0);
        let y = ring.variable(1);
        let z = ring.variable(2);
        let gens = vec![
            ring.sub(&ring.mul(&x, &y), &z),
            ring.sub(&ring.mul(&y, &z), &x),
            ring.sub(&ring.mul(&z, &x), &y),
        ];
        let err = buchberger(&ring, &gens, &Budget::with_max_pairs(1)).unwrap_err();
        match err {
            PolyError::BudgetExhausted { partial, .. } => assert!(!partial.is_empty()),
            other => panic!("expected budget exhaustion, got {other}"),
        }
    }

    #[test]
    fn deterministic_across_runs() {
        let ring = Ring::new(3, MonomialOrder::DegRevLex);
        let x = ring.variable(0);
        let y = ring.variable(1);
        let z = ring.variable(2);
        let gens = vec![
            ring.sub(&ring.mul(&x, &x), &y),
            ring.sub(&ring.mul(&y, &y), &z),
            ring.sub(&ring.mul(&x, &z), &ring.one()),
        ];
        let a = buchberger(&ring, &gens, &Budget::unlimited()).unwrap();
        let b = buchberger(&ring, &gens, &Budget::unlimited()).unwrap();
        assert_eq!(a, b);
    }
}
