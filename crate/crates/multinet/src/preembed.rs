//! Parametric coordinate pre-embeddings: every point of a structure gets a
//! length-3 vector of polynomials, such that every actual weak projective
//! embedding arises from the vectors by substitution.

use crate::incidence::{dual_3net, IncidenceStructure, Multinet};
use crate::quasigroup::parse_latin_square;
use polyring::{MonomialOrder, Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum PreEmbeddingError {
    #[error("the multinet is not well-indexed with respect to a superline of length 2: {0}")]
    NotWellIndexed(String),

    #[error("expected an order-6 multinet, got order {0}")]
    WrongOrder(usize),

    #[error("pre-embedding has {points} points but the structure has {expected}")]
    PointCountMismatch { points: usize, expected: usize },
}

/// A map from structure points to projective coordinate vectors over a
/// polynomial ring.
#[derive(Debug, Clone)]
pub struct PreEmbedding {
    ring: Ring,
    points: Vec<[Polynomial; 3]>,
}

impl PreEmbedding {
    pub fn new(ring: Ring, points: Vec<[Polynomial; 3]>) -> Self {
        PreEmbedding { ring, points }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, p: usize) -> &[Polynomial; 3] {
        &self.points[p]
    }

    pub fn points(&self) -> &[[Polynomial; 3]] {
        &self.points
    }

    /// 3x3 determinant of the coordinate vectors of three points.
    pub fn det(&self, p1: usize, p2: usize, p3: usize) -> Polynomial {
        let r = &self.ring;
        let [a, b, c] = &self.points[p1];
        let [d, e, f] = &self.points[p2];
        let [g, h, i] = &self.points[p3];
        let minor = |x: &Polynomial, y: &Polynomial, z: &Polynomial, w: &Polynomial| {
            r.sub(&r.mul(x, w), &r.mul(y, z))
        };
        let t1 = r.mul(a, &minor(e, f, h, i));
        let t2 = r.mul(b, &minor(d, f, g, i));
        let t3 = r.mul(c, &minor(d, e, g, h));
        r.add(&r.sub(&t1, &t2), &t3)
    }

    /// Cross product of two point vectors.
    pub fn cross_product(&self, p: usize, q: usize) -> [Polynomial; 3] {
        let r = &self.ring;
        let [a, b, c] = &self.points[p];
        let [d, e, f] = &self.points[q];
        [
            r.sub(&r.mul(b, f), &r.mul(c, e)),
            r.sub(&r.mul(c, d), &r.mul(a, f)),
            r.sub(&r.mul(a, e), &r.mul(b, d)),
        ]
    }

    /// All pairwise cross products, in pair order.
    pub fn pairwise_cross_products(&self) -> Vec<((usize, usize), [Polynomial; 3])> {
        let n = self.points.len();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for p in 0..n {
            for q in (p + 1)..n {
                out.push(((p, q), self.cross_product(p, q)));
            }
        }
        out
    }
}

/// Builds the 18-point pre-embedding of a well-indexed order-6 multinet
/// with a superline of length 2, under the given working order.
///
/// Point 0 maps to `[1,0,0]`, point 6 to `[0,1,0]`, point 12 to `[1,1,0]`,
/// point 14 to `[0,0,1]`; the three points 15, 16, 17 share one coordinate
/// each with points 3, 4, 5 and 9, 10, 11, which is exactly what the
/// well-indexing triples force.
pub fn standard_preembedding(m: &Multinet) -> Result<PreEmbedding, PreEmbeddingError> {
    standard_preembedding_with_order(m, MonomialOrder::DegRevLex)
}

pub fn standard_preembedding_with_order(
    m: &Multinet,
    order: MonomialOrder,
) -> Result<PreEmbedding, PreEmbeddingError> {
    if m.order() != 6 {
        return Err(PreEmbeddingError::WrongOrder(m.order()));
    }
    if !crate::incidence::is_well_indexed(m) {
        return Err(PreEmbeddingError::NotWellIndexed(
            "well-indexing conditions fail".into(),
        ));
    }
    let superline = m.superline().expect("well-indexed multinets have one");
    let length = superline.len() / 3;
    if length != 2 {
        return Err(PreEmbeddingError::NotWellIndexed(format!(
            "superline has length {length}, the coordinate table needs length 2"
        )));
    }

    let ring = Ring::new(17, order);
    let t = |i: usize| ring.variable(i - 1);
    let zero = ring.zero();
    let one = ring.one();
    let points = vec![
        // Part 1: two superline points at infinity, four affine points.
        [one.clone(), zero.clone(), zero.clone()],
        [one.clone(), t(1), zero.clone()],
        [t(4), t(5), one.clone()],
        [t(6), t(7), one.clone()],
        [t(8), t(9), one.clone()],
        [t(10), t(11), one.clone()],
        // Part 2.
        [zero.clone(), one.clone(), zero.clone()],
        [one.clone(), t(2), zero.clone()],
        [one.clone(), zero.clone(), one.clone()],
        [t(12), t(13), one.clone()],
        [t(14), t(15), one.clone()],
        [t(16), t(17), one.clone()],
        // Part 3: the shared coordinates in points 15..18 pin the
        // well-indexing triples {0, 6+j, 12+j} and {j, 6, 12+j}.
        [one.clone(), one.clone(), zero.clone()],
        [one.clone(), t(3), zero.clone()],
        [zero.clone(), zero.clone(), one.clone()],
        [t(6), t(13), one.clone()],
        [t(8), t(15), one.clone()],
        [t(10), t(17), one],
    ];
    Ok(PreEmbedding::new(ring, points))
}

/// The 9-point worked example: the dual 3-net of the cyclic group of
/// order 3, with coordinates over 13 indeterminates where every affine
/// point carries the same last coordinate `t13`.
pub fn z3_example_preembedding() -> (IncidenceStructure, PreEmbedding) {
    z3_example_preembedding_with_order(MonomialOrder::DegRevLex)
}

pub fn z3_example_preembedding_with_order(
    order: MonomialOrder,
) -> (IncidenceStructure, PreEmbedding) {
    let z3 = parse_latin_square("3\n1 2 3\n2 3 1\n3 1 2\n").expect("cyclic table");
    let structure = dual_3net(&z3).structure().clone();
    let ring = Ring::new(13, order);
    let t = |i: usize| ring.variable(i - 1);
    let zero = ring.zero();
    let one = ring.one();
    let points = vec![
        [one.clone(), zero.clone(), zero.clone()],
        [t(1), t(2), t(13)],
        [t(3), t(4), t(13)],
        [zero.clone(), one.clone(), zero.clone()],
        [t(5), t(6), t(13)],
        [t(7), t(8), t(13)],
        [one.clone(), one, zero],
        [t(9), t(10), t(13)],
        [t(11), t(12), t(13)],
    ];
    (structure, PreEmbedding::new(ring, points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_order6;
    use crate::exec::ExecMode;
    use polyring::factor::multivariate_gcd;

    #[test]
    fn z3_table_matches_the_printed_vectors() {
        let (structure, xi) = z3_example_preembedding();
        assert_eq!(structure.blocks().len(), 9);
        assert_eq!(xi.num_points(), 9);
        let r = xi.ring();
        assert_eq!(r.arity(), 13);
        let text = |p: usize| -> Vec<String> {
            xi.point(p).iter().map(|c| r.to_text(c)).collect()
        };
        assert_eq!(text(0), ["1", "0", "0"]);
        assert_eq!(text(3), ["0", "1", "0"]);
        assert_eq!(text(6), ["1", "1", "0"]);
        // Every affine point has last coordinate t13.
        for p in [1, 2, 4, 5, 7, 8] {
            assert_eq!(text(p)[2], "t13");
        }
    }

    #[test]
    fn z3_determinant_of_the_first_column_splits() {
        // det(u1, u2, u3) = t13*(t2 - t4) up to sign.
        let (_, xi) = z3_example_preembedding();
        let r = xi.ring();
        let d = xi.det(0, 1, 2);
        let t = |i: usize| r.variable(i - 1);
        let expect = r.mul(&t(13), &r.sub(&t(2), &t(4)));
        assert!(d == expect || d == r.neg(&expect));
    }

    #[test]
    fn standard_preembedding_rejects_unprepared_input() {
        let net = dual_3net(&crate::quasigroup::catalog()[0]);
        assert!(matches!(
            standard_preembedding(&net),
            Err(PreEmbeddingError::NotWellIndexed(_))
        ));
    }

    #[test]
    fn standard_table_shape_and_shared_variables() {
        let classification = classify_order6(ExecMode::Sequential).unwrap();
        let rep = &classification.class(8).unwrap().representative;
        let xi = standard_preembedding(rep).unwrap();
        assert_eq!(xi.num_points(), 18);
        let r = xi.ring();
        assert_eq!(r.arity(), 17);
        let text = |p: usize| -> Vec<String> {
            xi.point(p).iter().map(|c| r.to_text(c)).collect()
        };
        assert_eq!(text(0), ["1", "0", "0"]);
        assert_eq!(text(6), ["0", "1", "0"]);
        assert_eq!(text(12), ["1", "1", "0"]);
        assert_eq!(text(14), ["0", "0", "1"]);
        // Point 15 shares t6 with point 3 and t13 with point 9.
        assert_eq!(text(15)[0], text(3)[0]);
        assert_eq!(text(15)[1], text(9)[1]);
        // Coordinates of each point have unit gcd.
        for p in 0..18 {
            let [a, b, c] = xi.point(p);
            let g = multivariate_gcd(r, &multivariate_gcd(r, a, b), c);
            assert!(g.is_constant());
        }
    }

    #[test]
    fn m1_and_m2_have_no_standard_table() {
        let classification = classify_order6(ExecMode::Sequential).unwrap();
        for id in [1, 2] {
            let rep = &classification.class(id).unwrap().representative;
            assert!(matches!(
                standard_preembedding(rep),
                Err(PreEmbeddingError::NotWellIndexed(_))
            ));
        }
    }
}
