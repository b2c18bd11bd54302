//! Randomized cross-check of the Groebner engine.
//!
//! Over a fixed-seed corpus of small random ideals (up to 4 variables,
//! up to 3 generators, degree at most 3):
//!   * every S-polynomial of every computed basis reduces to zero, and
//!   * `contains_poly` agrees with a naive degree-bounded linear-algebra
//!     membership check that never touches the division code.

use num::{BigRational, One, Signed, Zero};
use polyring::budget::Budget;
use polyring::divide::normal_form;
use polyring::groebner::spolynomial;
use polyring::monomial::{Exponents, Monomial, MonomialOrder};
use polyring::poly::{Polynomial, Ring};
use polyring::Ideal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn random_monomial(rng: &mut ChaCha8Rng, arity: usize, max_deg: u32) -> Monomial {
    let mut exps = Exponents::from_elem(0, arity);
    let deg = rng.gen_range(0..=max_deg);
    for _ in 0..deg {
        let v = rng.gen_range(0..arity);
        exps[v] += 1;
    }
    Monomial::from_exponents(exps)
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, max_terms: usize) -> Polynomial {
    let n_terms = rng.gen_range(1..=max_terms);
    let mut terms = Vec::new();
    for _ in 0..n_terms {
        let c = loop {
            let c = rng.gen_range(-4i64..=4);
            if c != 0 {
                break c;
            }
        };
        terms.push((random_monomial(rng, ring.arity(), max_deg), q(c)));
    }
    ring.polynomial(terms)
}

/// All monomials of total degree at most `max_deg`.
fn monomials_up_to(arity: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = Exponents::from_elem(0, arity);
    fn rec(var: usize, left: u32, exps: &mut Exponents, out: &mut Vec<Monomial>) {
        if var == exps.len() {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[var] = e as u16;
            rec(var + 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    rec(0, max_deg, &mut exps, &mut out);
    out
}

/// Decides whether `f` lies in the span of `{ m * g : g in gens, deg(m*g) <= bound }`
/// by exact Gaussian elimination. Membership at this bound implies ideal
/// membership; the converse holds once `bound` reaches a witness degree.
fn linear_membership(ring: &Ring, gens: &[Polynomial], f: &Polynomial, bound: u32) -> bool {
    let mut columns: Vec<Polynomial> = Vec::new();
    for g in gens {
        let gd = g.degree().expect("nonzero generator");
        if gd > bound {
            continue;
        }
        for m in monomials_up_to(ring.arity(), bound - gd) {
            columns.push(ring.mul_term(g, &m, &BigRational::one()));
        }
    }
    let rows: Vec<Monomial> = monomials_up_to(ring.arity(), bound);
    let row_index = |m: &Monomial| rows.iter().position(|r| r == m).expect("degree bound");
    let mut matrix: Vec<Vec<BigRational>> =
        vec![vec![BigRational::zero(); columns.len() + 1]; rows.len()];
    for (j, col) in columns.iter().enumerate() {
        for (m, c) in col.terms() {
            matrix[row_index(m)][j] = c.clone();
        }
    }
    for (m, c) in f.terms() {
        if m.degree() > bound {
            return false;
        }
        let j = columns.len();
        matrix[row_index(m)][j] = c.clone();
    }
    // Gaussian elimination; the system is consistent iff no pivot lands in
    // the augmented column.
    let (nrows, ncols) = (matrix.len(), columns.len() + 1);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        if col == ncols - 1 {
            return false; // pivot in the augmented column: inconsistent
        }
        matrix.swap(pivot_row, r);
        let inv = matrix[pivot_row][col].clone().recip();
        for j in col..ncols {
            let v = &matrix[pivot_row][j] * &inv;
            matrix[pivot_row][j] = v;
        }
        for r in 0..nrows {
            if r != pivot_row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for j in col..ncols {
                    let v = &matrix[r][j] - &factor * &matrix[pivot_row][j];
                    matrix[r][j] = v;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    true
}

#[test]
fn corpus_spolynomials_and_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d756c74696e6574);
    let budget = Budget::unlimited();
    let mut checked_members = 0;
    let mut checked_non_members = 0;

    for case in 0..60 {
        let arity = rng.gen_range(2..=4usize);
        let ring = Ring::new(arity, MonomialOrder::DegRevLex);
        let n_gens = rng.gen_range(1..=3usize);
        let gens: Vec<Polynomial> = (0..n_gens).map(|_| random_poly(&mut rng, &ring, 3, 4)).collect();
        let ideal = Ideal::new(ring.clone(), gens.clone());
        let gb = ideal.default_basis(&budget).unwrap_or_else(|e| {
            panic!("case {case}: basis computation failed: {e}");
        });

        // Groebner property: every S-polynomial reduces to zero.
        for i in 0..gb.polys().len() {
            for j in (i + 1)..gb.polys().len() {
                let s = spolynomial(gb.ring(), &gb.polys()[i], &gb.polys()[j]);
                assert!(
                    normal_form(gb.ring(), &s, gb.polys()).is_zero(),
                    "case {case}: S-polynomial ({i},{j}) does not reduce to zero"
                );
            }
        }
        // The generators lie in the ideal of the basis.
        for g in &gens {
            assert!(gb.reduces_to_zero(&gb.ring().convert(g)));
        }

        // Membership agreement, member by construction: f = sum(q_i * g_i)
        // with deg(q_i) <= 1.
        let mut member = ring.zero();
        let mut witness_bound = 0;
        for g in &gens {
            let qi = random_poly(&mut rng, &ring, 1, 2);
            witness_bound = witness_bound
                .max(qi.degree().unwrap_or(0) + g.degree().expect("nonzero generator"));
            member = ring.add(&member, &ring.mul(&qi, g));
        }
        assert!(
            ideal.contains_poly(&member, &budget).unwrap(),
            "case {case}: constructed member rejected"
        );
        if !member.is_zero() {
            assert!(
                linear_membership(&ring, &gens, &member, witness_bound),
                "case {case}: linear oracle missed a member at its witness bound"
            );
            checked_members += 1;
        }

        // A random probe polynomial, checked in both directions.
        let probe = random_poly(&mut rng, &ring, 3, 3);
        let probe_deg = probe.degree().unwrap_or(0);
        let nf_member = ideal.contains_poly(&probe, &budget).unwrap();
        let la_member = linear_membership(&ring, &gens, &probe, probe_deg + 2);
        if la_member {
            assert!(
                nf_member,
                "case {case}: linear oracle found a member the normal form rejects"
            );
        }
        if !nf_member {
            assert!(
                !la_member,
                "case {case}: normal form rejects a probe the linear oracle accepts"
            );
            checked_non_members += 1;
        }
    }
    assert!(checked_members >= 40, "too few member checks: {checked_members}");
    assert!(
        checked_non_members >= 20,
        "too few non-member checks: {checked_non_members}"
    );
}

#[test]
fn corpus_is_deterministic() {
    let mut make = |seed: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = Ring::new(3, MonomialOrder::DegRevLex);
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &ring, 3, 4)).collect();
        let ideal = Ideal::new(ring, gens);
        let gb = ideal.default_basis(&Budget::unlimited()).unwrap();
        gb.canonical_text()
    };
    assert_eq!(make(7), make(7));
    assert!(!make(7).is_empty());
}

#[test]
fn normal_form_is_a_homomorphism_modulo_the_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let budget = Budget::unlimited();
    for _ in 0..20 {
        let ring = Ring::new(3, MonomialOrder::DegRevLex);
        let gens: Vec<Polynomial> = (0..2).map(|_| random_poly(&mut rng, &ring, 2, 3)).collect();
        let ideal = Ideal::new(ring.clone(), gens);
        let gb = ideal.default_basis(&budget).unwrap();
        let f = random_poly(&mut rng, &ring, 2, 3);
        let g = random_poly(&mut rng, &ring, 2, 3);
        let (nf_f, nf_g) = (gb.normal_form(&f), gb.normal_form(&g));
        assert_eq!(
            gb.normal_form(&ring.add(&f, &g)),
            gb.normal_form(&ring.add(&nf_f, &nf_g))
        );
        assert_eq!(
            gb.normal_form(&ring.mul(&f, &g)),
            gb.normal_form(&ring.mul(&nf_f, &nf_g))
        );
    }
}

#[test]
fn division_invariant_recomposes_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(9001);
    for _ in 0..40 {
        let ring = Ring::new(3, MonomialOrder::DegRevLex);
        let divisors: Vec<Polynomial> =
            (0..rng.gen_range(1..=2)).map(|_| random_poly(&mut rng, &ring, 2, 3)).collect();
        let f = random_poly(&mut rng, &ring, 3, 4);
        let div = polyring::divide::divide(&ring, &f, &divisors);
        let mut recomposed = div.remainder.clone();
        for (qi, gi) in div.quotients.iter().zip(&divisors) {
            recomposed = ring.add(&recomposed, &ring.mul(qi, gi));
        }
        assert_eq!(recomposed, f);
        // No remainder term is divisible by a divisor's leading monomial.
        for (m, _) in div.remainder.terms() {
            for g in &divisors {
                assert!(!g.leading_monomial().unwrap().divides(m));
            }
        }
    }
}

#[test]
fn signed_rationals_survive_the_pipeline() {
    // A fraction-heavy ideal to exercise coefficient normalization.
    let ring = Ring::new(2, MonomialOrder::DegRevLex);
    let x = ring.variable(0);
    let y = ring.variable(1);
    let f = ring.add(
        &ring.scale(&ring.mul(&x, &x), &BigRational::new(2.into(), 3.into())),
        &ring.scale(&y, &BigRational::new((-7).into(), 5.into())),
    );
    let g = ring.sub(&ring.mul(&x, &y), &ring.constant(BigRational::new(1.into(), 9.into())));
    let ideal = Ideal::new(ring.clone(), vec![f.clone(), g.clone()]);
    let gb = ideal.default_basis(&Budget::unlimited()).unwrap();
    for p in gb.polys() {
        assert!(p.leading().unwrap().1.is_one());
        assert!(!p.leading().unwrap().1.is_negative());
    }
    assert!(gb.reduces_to_zero(&f));
    assert!(gb.reduces_to_zero(&g));
}
