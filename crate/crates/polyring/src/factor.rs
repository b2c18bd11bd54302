//! Content/primitive-part factor splitting.
//!
//! `factor_split` pulls out the monomial content and then repeatedly splits
//! off multivariate contents with respect to each variable, computed by a
//! primitive pseudo-remainder gcd. The factors need not be irreducible;
//! they are exactly the splits the minimal-prime search branches on.

use crate::divide::exact_div;
use crate::poly::{Polynomial, Ring};

/// Multivariate gcd over Q, normalized to primitive integer form with a
/// positive leading coefficient. Constants count as units, so the gcd of
/// two polynomials without a common variable is 1.
pub fn multivariate_gcd(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return ring.normalize_primitive(g);
    }
    if g.is_zero() {
        return ring.normalize_primitive(f);
    }
    if f.is_constant() || g.is_constant() {
        return ring.one();
    }
    let common = f.support_mask() & g.support_mask();
    if common == 0 {
        return ring.one();
    }
    let v = common.trailing_zeros() as usize;

    let cont_f = content_in_var(ring, f, v);
    let cont_g = content_in_var(ring, g, v);
    let pp_f = exact_div(ring, f, &cont_f).expect("content divides");
    let pp_g = exact_div(ring, g, &cont_g).expect("content divides");
    let c = multivariate_gcd(ring, &cont_f, &cont_g);

    // Primitive pseudo-remainder sequence in the variable v.
    let (mut a, mut b) = if pp_f.degree_in(v) >= pp_g.degree_in(v) {
        (pp_f, pp_g)
    } else {
        (pp_g, pp_f)
    };
    while !b.is_zero() && b.degree_in(v) > 0 {
        let r = pseudo_remainder(ring, &a, &b, v);
        a = b;
        b = if r.is_zero() {
            ring.zero()
        } else {
            primitive_part_in_var(ring, &r, v)
        };
    }
    let pp_gcd = if b.is_zero() {
        a
    } else {
        // Chain bottomed out at a nonzero polynomial of v-degree 0: the
        // primitive parts are coprime.
        ring.one()
    };
    ring.normalize_primitive(&ring.mul(&c, &pp_gcd))
}

/// Content of `f` viewed as a univariate polynomial in `v`: the gcd of its
/// coefficient polynomials (which do not involve `v`).
pub fn content_in_var(ring: &Ring, f: &Polynomial, v: usize) -> Polynomial {
    let mut acc = ring.zero();
    for coeff in v_coefficients(ring, f, v) {
        acc = multivariate_gcd(ring, &acc, &coeff);
        if acc.is_constant() && !acc.is_zero() {
            return ring.one();
        }
    }
    acc
}

fn primitive_part_in_var(ring: &Ring, f: &Polynomial, v: usize) -> Polynomial {
    let cont = content_in_var(ring, f, v);
    exact_div(ring, f, &cont).expect("content divides")
}

/// Coefficients of `f` by `v`-degree, each free of `v`. Indices with zero
/// coefficient are omitted.
fn v_coefficients(ring: &Ring, f: &Polynomial, v: usize) -> Vec<Polynomial> {
    let top = f.degree_in(v) as usize;
    let mut buckets: Vec<Vec<(crate::monomial::Monomial, num::BigRational)>> =
        vec![Vec::new(); top + 1];
    for (m, c) in f.terms() {
        let e = m.exponent(v) as usize;
        let mut exps = crate::monomial::Exponents::from_slice(m.exponents());
        exps[v] = 0;
        buckets[e].push((crate::monomial::Monomial::from_exponents(exps), c.clone()));
    }
    buckets
        .into_iter()
        .map(|terms| ring.polynomial(terms))
        .filter(|p| !p.is_zero())
        .collect()
}

fn v_leading(ring: &Ring, f: &Polynomial, v: usize) -> Polynomial {
    let top = f.degree_in(v);
    ring.polynomial(
        f.terms()
            .iter()
            .filter(|(m, _)| u32::from(m.exponent(v)) == top)
            .map(|(m, c)| {
                let mut exps = crate::monomial::Exponents::from_slice(m.exponents());
                exps[v] = 0;
                (crate::monomial::Monomial::from_exponents(exps), c.clone())
            })
            .collect(),
    )
}

/// Pseudo-remainder of `a` by `b` in the variable `v` (`deg_v a >= deg_v b`).
fn pseudo_remainder(ring: &Ring, a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let deg_b = b.degree_in(v);
    let lc_b = v_leading(ring, b, v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= deg_b {
        let deg_r = r.degree_in(v);
        let lc_r = v_leading(ring, &r, v);
        let mut exps = crate::monomial::Exponents::from_elem(0, ring.arity());
        exps[v] = (deg_r - deg_b) as u16;
        let shifted_b = ring.mul_term(
            b,
            &crate::monomial::Monomial::from_exponents(exps),
            &num::One::one(),
        );
        r = ring.sub(&ring.mul(&lc_b, &r), &ring.mul(&lc_r, &shifted_b));
    }
    r
}

/// Splits `f` into factors: the monomial content contributes its variables,
/// then content/primitive-part splits with respect to each variable are
/// applied until nothing splits further. Factors are primitive, distinct
/// (multiplicities collapsed) and canonically sorted.
///
/// Panics on the zero polynomial.
pub fn factor_split(ring: &Ring, f: &Polynomial) -> Vec<Polynomial> {
    assert!(!f.is_zero(), "factor_split of the zero polynomial");
    let mut out: Vec<Polynomial> = Vec::new();
    let mut stack = vec![ring.normalize_primitive(f)];
    while let Some(p) = stack.pop() {
        if p.is_constant() {
            continue;
        }
        let mc = p.monomial_content().expect("nonzero polynomial");
        if !mc.is_one() {
            for var in 0..ring.arity() {
                if mc.exponent(var) > 0 {
                    out.push(ring.variable(var));
                }
            }
            // Dividing by the common monomial keeps the term order.
            let stripped = ring.polynomial(
                p.terms()
                    .iter()
                    .map(|(m, c)| (m.div(&mc), c.clone()))
                    .collect(),
            );
            stack.push(ring.normalize_primitive(&stripped));
            continue;
        }
        let mut split = false;
        for v in 0..ring.arity() {
            if p.degree_in(v) == 0 {
                continue;
            }
            let cont = content_in_var(ring, &p, v);
            if !cont.is_constant() {
                let pp = exact_div(ring, &p, &cont).expect("content divides");
                stack.push(ring.normalize_primitive(&cont));
                stack.push(ring.normalize_primitive(&pp));
                split = true;
                break;
            }
        }
        if !split {
            out.push(p);
        }
    }
    out.sort_by_cached_key(|p| (p.degree(), p.num_terms(), ring.to_text(p)));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn texts(ring: &Ring, polys: &[Polynomial]) -> Vec<String> {
        polys.iter().map(|p| ring.to_text(p)).collect()
    }

    #[test]
    fn splits_monomial_content() {
        // t13*t2 - t13*t4 -> {t13, t2 - t4}; the shape of a determinant of
        // one infinite and two affine points.
        let ring = Ring::new(13, MonomialOrder::DegRevLex);
        let t = |i: usize| ring.variable(i - 1);
        let f = ring.sub(&ring.mul(&t(13), &t(2)), &ring.mul(&t(13), &t(4)));
        let fs = factor_split(&ring, &f);
        assert_eq!(texts(&ring, &fs), vec!["t13", "t2 - t4"]);
    }

    #[test]
    fn splits_mixed_monomial_and_difference() {
        // x^2*y - x*y^2 = x*y*(x - y)
        let ring = Ring::new(2, MonomialOrder::DegRevLex);
        let x = ring.variable(0);
        let y = ring.variable(1);
        let f = ring.sub(
            &ring.mul(&ring.mul(&x, &x), &y),
            &ring.mul(&x, &ring.mul(&y, &y)),
        );
        let fs = factor_split(&ring, &f);
        assert_eq!(texts(&ring, &fs), vec!["t1", "t2", "t1 - t2"]);
    }

    #[test]
    fn irreducible_quadratic_stays_whole() {
        let ring = Ring::new(2, MonomialOrder::DegRevLex);
        let x = ring.variable(0);
        let y = ring.variable(1);
        let f = ring.add(&ring.mul(&x, &x), &ring.add(&y, &ring.integer(1)));
        let fs = factor_split(&ring, &f);
        assert_eq!(fs, vec![f]);
    }

    #[test]
    fn splits_products_in_disjoint_variables() {
        // (x - y)*(z - w) splits through the variable-content rule.
        let ring = Ring::new(4, MonomialOrder::DegRevLex);
        let v = |i: usize| ring.variable(i);
        let f = ring.mul(&ring.sub(&v(0), &v(1)), &ring.sub(&v(2), &v(3)));
        let fs = factor_split(&ring, &f);
        assert_eq!(texts(&ring, &fs), vec!["t1 - t2", "t3 - t4"]);
    }

    #[test]
    fn power_collapses_to_the_base_variable() {
        let ring = Ring::new(1, MonomialOrder::Lex);
        let x = ring.variable(0);
        let f = ring.mul(&x, &x);
        assert_eq!(factor_split(&ring, &f), vec![x]);
    }

    #[test]
    fn gcd_examples() {
        let ring = Ring::new(3, MonomialOrder::DegRevLex);
        let x = ring.variable(0);
        let y = ring.variable(1);
        let z = ring.variable(2);
        let xy = ring.mul(&x, &y);
        assert_eq!(multivariate_gcd(&ring, &xy, &ring.mul(&x, &z)), x);
        let f = ring.mul(&ring.add(&x, &y), &z);
        let g = ring.mul(&ring.add(&x, &y), &y);
        assert_eq!(multivariate_gcd(&ring, &f, &g), ring.add(&x, &y));
        assert_eq!(multivariate_gcd(&ring, &x, &y), ring.one());
    }
}
