//! The `det^{S^2}` map `V^6 -> k` for `dim V = 2`, by three formulas.

use alloc::vec;

use crate::config::{Configuration, Pair, Triple};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Which coordinate a monomial takes from a slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coord {
    Alpha,
    Beta,
}

/// One signed degree-6 monomial; `coords` is in [`Pair::ALL`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub sign: i8,
    pub coords: [Coord; 6],
}

const A: Coord = Coord::Alpha;
const B: Coord = Coord::Beta;

const fn term(sign: i8, coords: [Coord; 6]) -> Term {
    Term { sign, coords }
}

/// The twelve monomials of the map. Columns are the slots
/// `12, 13, 14, 23, 24, 34`.
pub const MONOMIALS: [Term; 12] = [
    //         12 13 14 23 24 34
    term(1, [A, B, B, A, B, A]),
    term(1, [A, B, A, B, B, A]),
    term(1, [A, A, B, B, A, B]),
    term(1, [B, A, B, B, A, A]),
    term(1, [B, B, A, A, A, B]),
    term(1, [B, A, A, A, B, B]),
    term(-1, [B, A, A, B, A, B]),
    term(-1, [B, A, B, A, A, B]),
    term(-1, [B, B, A, A, B, A]),
    term(-1, [A, B, A, A, B, B]),
    term(-1, [A, A, B, B, B, A]),
    term(-1, [A, B, B, B, A, A]),
];

/// Signed sum of the twelve monomials in [`MONOMIALS`].
pub fn det_s2_direct<S: Scalar>(c: &Configuration<S>) -> S {
    MONOMIALS.iter().fold(S::zero(), |acc, t| {
        let product = Pair::ALL.iter().zip(t.coords).fold(S::one(), |p, (&pair, coord)| {
            let v = c.at(pair);
            p * match coord {
                Coord::Alpha => v.alpha.clone(),
                Coord::Beta => v.beta.clone(),
            }
        });
        if t.sign > 0 {
            acc + product
        } else {
            acc - product
        }
    })
}

/// The map, `det^{S^2}`; alias for [`det_s2_direct`].
pub fn det_s2<S: Scalar>(c: &Configuration<S>) -> S {
    det_s2_direct(c)
}

/// Three-term form built from the bilinear pairing `ac + bd` and the 2x2
/// determinant:
///
/// ```text
///   det(v14, v24) <v12, v34> <v13, v23>
/// + det(v34, v14) <v13, v24> <v12, v23>
/// + det(v24, v34) <v14, v23> <v12, v13>
/// ```
pub fn det_s2_inner_product<S: Scalar>(c: &Configuration<S>) -> S {
    let v = |i, j| c.get(i, j);
    v(1, 4).cross(v(2, 4)) * v(1, 2).dot(v(3, 4)) * v(1, 3).dot(v(2, 3))
        + v(3, 4).cross(v(1, 4)) * v(1, 3).dot(v(2, 4)) * v(1, 2).dot(v(2, 3))
        + v(2, 4).cross(v(3, 4)) * v(1, 4).dot(v(2, 3)) * v(1, 2).dot(v(1, 3))
}

/// The 6x6 matrix whose determinant is the map. Columns follow
/// [`Pair::LAMBDA_ORDER`]; rows are the alpha and beta coordinates of the
/// triangle relations for `(1,2,3)`, `(1,2,4)` and `(1,3,4)`.
pub fn lemma_matrix<S: Scalar>(c: &Configuration<S>) -> Matrix<S> {
    let z = S::zero;
    let (a, b) = (|i, j| c.get(i, j).alpha.clone(), |i, j| c.get(i, j).beta.clone());
    Matrix::from_rows(vec![
        [a(1, 2), a(2, 3), z(), -a(1, 3), z(), z()],
        [b(1, 2), b(2, 3), z(), -b(1, 3), z(), z()],
        [a(1, 2), z(), z(), z(), a(2, 4), -a(1, 4)],
        [b(1, 2), z(), z(), z(), b(2, 4), -b(1, 4)],
        [z(), z(), a(3, 4), a(1, 3), z(), -a(1, 4)],
        [z(), z(), b(3, 4), b(1, 3), z(), -b(1, 4)],
    ])
}

/// Determinant of [`lemma_matrix`]: Bareiss elimination on the exact
/// backend, cofactor expansion on floats.
pub fn det_s2_via_matrix<S: Scalar>(c: &Configuration<S>) -> S {
    lemma_matrix(c).det().expect("lemma matrix is square")
}

/// True iff some triangle `i < j < k` has `v_ij = v_ik = v_jk`.
pub fn has_equal_triple<S: Scalar>(c: &Configuration<S>) -> bool {
    Triple::ALL.iter().any(|t| equal_on(c, *t))
}

/// True iff the three edges of `t` carry equal vectors.
pub fn equal_on<S: Scalar>(c: &Configuration<S>, t: Triple) -> bool {
    let [x, y, z] = t.edges().map(|p| c.at(p));
    x == y && y == z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn w_config() -> Configuration<Rational> {
        // v12 = v23 = v34 = e1, v13 = v24 = v14 = e2
        Configuration::from_ints([(1, 0), (0, 1), (0, 1), (1, 0), (0, 1), (1, 0)])
    }

    fn v_config() -> Configuration<Rational> {
        // v12 = v23 = v13 = e1, v14 = v24 = v34 = e2
        Configuration::from_ints([(1, 0), (1, 0), (0, 1), (1, 0), (0, 1), (0, 1)])
    }

    #[test]
    fn monomial_table_shape() {
        assert_eq!(MONOMIALS.iter().filter(|t| t.sign > 0).count(), 6);
        assert_eq!(MONOMIALS.iter().filter(|t| t.sign < 0).count(), 6);
        for t in MONOMIALS {
            assert_eq!(t.coords.iter().filter(|&&c| c == Coord::Beta).count(), 3);
        }
        for (i, s) in MONOMIALS.iter().enumerate() {
            for t in &MONOMIALS[i + 1..] {
                assert_ne!(s.coords, t.coords);
            }
        }
    }

    #[test]
    fn w_config_is_one_by_every_formula() {
        let c = w_config();
        assert_eq!(det_s2_direct(&c), int(1));
        assert_eq!(det_s2_inner_product(&c), int(1));
        assert_eq!(det_s2_via_matrix(&c), int(1));
        assert!(!has_equal_triple(&c));
    }

    #[test]
    fn v_config_vanishes() {
        let c = v_config();
        assert_eq!(det_s2_direct(&c), int(0));
        assert_eq!(det_s2_inner_product(&c), int(0));
        assert_eq!(det_s2_via_matrix(&c), int(0));
        assert!(has_equal_triple(&c));
    }

    #[test]
    fn zero_config() {
        let c = Configuration::<Rational>::zero();
        assert_eq!(det_s2_direct(&c), int(0));
        assert_eq!(det_s2_via_matrix(&c), int(0));
        assert!(has_equal_triple(&c));
    }

    #[test]
    fn unit_square_points() {
        // P = (0,0), (1,0), (0,1), (1,1); v_ij = P_j - P_i
        let c = Configuration::<Rational>::from_ints([(1, 0), (0, 1), (1, 1), (-1, 1), (0, 1), (1, 0)]);
        assert_eq!(det_s2_direct(&c), int(0));
    }

    #[test]
    fn perpendicular_family_example() {
        // v1 = (1,0), v2 = (0,1), v3 = (1,1) in 12, 13, 14;
        // v3⊥ = (-1,1), v2⊥ = (1,0), v1⊥ = (0,1) in 23, 24, 34.
        let c = Configuration::<Rational>::from_ints([(1, 0), (0, 1), (1, 1), (-1, 1), (1, 0), (0, 1)]);
        assert_eq!(det_s2_inner_product(&c), int(0));
        assert_eq!(det_s2_direct(&c), int(0));
    }

    #[test]
    fn float_backend_matches_on_w_config() {
        let c = w_config().map(|x| num_traits::ToPrimitive::to_f64(x).unwrap());
        assert_eq!(det_s2_direct(&c), 1.0);
        assert_eq!(det_s2_inner_product(&c), 1.0);
        assert_eq!(det_s2_via_matrix(&c), 1.0);
    }
}
