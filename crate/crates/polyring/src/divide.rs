//! Multivariate division with remainder.

use crate::budget::Budget;
use crate::error::PolyError;
use crate::poly::{Polynomial, Ring};

/// Result of dividing `f` by an ordered list of divisors:
/// `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Divides `f` by `divisors`, always reducing the current leading term by
/// the first divisor whose leading monomial divides it. No term of the
/// remainder is divisible by any divisor's leading monomial.
///
/// The divisors need not form a Groebner basis; the remainder is then
/// order- and sequence-dependent but still a valid normal form witness.
pub fn divide(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Division {
    divide_budgeted(ring, f, divisors, &Budget::unlimited())
        .expect("unbudgeted division cannot exhaust a budget")
}

pub fn divide_budgeted(
    ring: &Ring,
    f: &Polynomial,
    divisors: &[Polynomial],
    budget: &Budget,
) -> Result<Division, PolyError> {
    let mut quotients = vec![ring.zero(); divisors.len()];
    let mut remainder_terms = Vec::new();
    let mut work = f.clone();
    let mut steps: u64 = 0;
    while let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        steps += 1;
        if steps % 256 == 0 && budget.deadline_passed() {
            return Err(PolyError::BudgetExhausted {
                pairs_done: 0,
                partial: Vec::new(),
            });
        }
        let hit = divisors
            .iter()
            .position(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm)));
        match hit {
            Some(i) => {
                let g = &divisors[i];
                let (gm, gc) = g.leading().expect("divisor with a leading term");
                let qm = lm.div(gm);
                let qc = &lc / gc;
                let qterm = ring.monomial(qm.clone(), qc.clone());
                quotients[i] = ring.add(&quotients[i], &qterm);
                work = ring.sub(&work, &ring.mul_term(g, &qm, &qc));
            }
            None => {
                // Largest remaining term is irreducible; move it over.
                remainder_terms.push((lm.clone(), lc.clone()));
                work = ring.sub(&work, &ring.monomial(lm, lc));
            }
        }
    }
    Ok(Division {
        quotients,
        remainder: Polynomial::from_sorted_terms(remainder_terms),
    })
}

/// Remainder of `f` modulo `divisors`.
pub fn normal_form(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    divide(ring, f, divisors).remainder
}

/// Exact division: `Some(f / g)` when `g` divides `f`, else `None`.
pub fn exact_div(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if f.is_zero() {
        return Some(ring.zero());
    }
    if g.is_zero() {
        return None;
    }
    let div = divide(ring, f, std::slice::from_ref(g));
    if div.remainder.is_zero() {
        Some(div.quotients.into_iter().next().unwrap())
    } else {
        None
    }
}
