//! Deciding whether six directions are the sides and diagonals of a
//! (possibly degenerate) quadrilateral.
//!
//! A configuration is realizable when there are points `Q1..Q4` and scalars
//! `λ_ij`, not all zero, with `Q_j − Q_i = λ_ij v_ij` for every pair. Such a
//! `λ` is exactly a nonzero solution of the four triangle relations
//!
//! ```text
//! λ12 v12 + λ23 v23 − λ13 v13 = 0
//! λ12 v12 + λ24 v24 − λ14 v14 = 0
//! λ13 v13 + λ34 v34 − λ14 v14 = 0
//! λ23 v23 + λ34 v34 − λ24 v24 = 0
//! ```
//!
//! whose 8x6 coefficient matrix has rank at most 5 exactly when
//! `det^{S^2}` vanishes.

use alloc::vec::Vec;

use num_traits::Float;

use crate::config::{Configuration, Pair, Triple, Vec2};
use crate::matrix::{rank_and_nullspace, Matrix};
use crate::scalar::{Rational, Scalar};
use crate::Error;

/// `λ` coefficients stored in [`Pair::LAMBDA_ORDER`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaVector<S>(pub [S; 6]);

impl<S: Scalar> LambdaVector<S> {
    pub fn get(&self, p: Pair) -> &S {
        &self.0[p.lambda_slot()]
    }

    pub fn from_pairs(mut f: impl FnMut(Pair) -> S) -> Self {
        let mut out = [(); 6].map(|_| S::zero());
        for p in Pair::ALL {
            out[p.lambda_slot()] = f(p);
        }
        LambdaVector(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(S::is_zero)
    }
}

/// Four points of the plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointQuad<S> {
    pub points: [Vec2<S>; 4],
}

impl<S: Scalar> PointQuad<S> {
    pub fn new(points: [Vec2<S>; 4]) -> Self {
        PointQuad { points }
    }

    pub fn from_ints(points: [(i64, i64); 4]) -> Self {
        PointQuad { points: points.map(|(x, y)| Vec2::new(S::from_i64(x), S::from_i64(y))) }
    }

    /// `Q_i` for `i` in `1..=4`.
    pub fn point(&self, i: u8) -> &Vec2<S> {
        &self.points[usize::from(i - 1)]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealizabilityResult {
    /// Rank of the 8x6 system.
    pub rank: usize,
    /// Canonical nullspace basis of the system.
    pub lambda_basis: Vec<LambdaVector<Rational>>,
    /// One quadrilateral per basis vector, anchored at `Q1 = (0, 0)`.
    pub quadrilaterals: Vec<PointQuad<Rational>>,
    pub realizable: bool,
}

/// The 8x6 system: rows are the alpha and beta coordinates of the triangle
/// relations for `(1,2,3)`, `(1,2,4)`, `(1,3,4)`, `(2,3,4)`; columns follow
/// [`Pair::LAMBDA_ORDER`].
pub fn build_system_matrix<S: Scalar>(c: &Configuration<S>) -> Matrix<S> {
    let coords: [fn(&Vec2<S>) -> S; 2] = [|v| v.alpha.clone(), |v| v.beta.clone()];
    let mut entries = Vec::with_capacity(48);
    for t in Triple::ALL {
        let [ij, jk, ik] = t.edges();
        for coord in coords {
            let mut row = [(); 6].map(|_| S::zero());
            row[ij.lambda_slot()] = coord(c.at(ij));
            row[jk.lambda_slot()] = coord(c.at(jk));
            row[ik.lambda_slot()] = -coord(c.at(ik));
            entries.extend(row);
        }
    }
    Matrix::new(8, 6, entries).expect("four relations with two coordinates each")
}

/// Rank of the system, its nullspace, and a witnessing quadrilateral for
/// every basis vector.
pub fn classify(c: &Configuration<Rational>) -> RealizabilityResult {
    let rn = rank_and_nullspace(&build_system_matrix(c));
    let lambda_basis: Vec<LambdaVector<Rational>> =
        rn.basis.into_iter().map(|v| LambdaVector(v.try_into().expect("six columns"))).collect();
    let quadrilaterals = lambda_basis
        .iter()
        .map(|l| reconstruct_quadrilateral(c, l).expect("nullspace vectors are witnesses"))
        .collect();
    RealizabilityResult { rank: rn.rank, realizable: rn.rank <= 5, lambda_basis, quadrilaterals }
}

/// Builds `Q1 = 0`, `Q_j = λ_1j v_1j`, then checks all six edge identities.
pub fn reconstruct_quadrilateral<S: Scalar>(
    c: &Configuration<S>,
    lambda: &LambdaVector<S>,
) -> Result<PointQuad<S>, Error> {
    if lambda.is_zero() {
        return Err(Error::InvalidWitness("all lambda coefficients are zero"));
    }
    let edge = |p: Pair| c.at(p).scale(lambda.get(p));
    let quad = PointQuad::new([Vec2::zero(), edge(Pair::P12), edge(Pair::P13), edge(Pair::P14)]);
    for p in Pair::ALL {
        let (i, j) = p.indices();
        if quad.point(j).sub(quad.point(i)) != edge(p) {
            return Err(Error::InvalidWitness("lambda does not solve the triangle relations"));
        }
    }
    Ok(quad)
}

/// `v_ij = P_j − P_i`.
pub fn config_from_points<S: Scalar>(p: &PointQuad<S>) -> Configuration<S> {
    Configuration::from_fn(|pair| {
        let (i, j) = pair.indices();
        p.point(j).sub(p.point(i))
    })
}

/// Unit directions between four lines through the origin at angles `theta`
/// (radians): `v_ij = (cos(θ_j − θ_i), sin(θ_j − θ_i))`.
///
/// Also returns the closed form `sin(φ1) sin(2φ2) sin(φ3)` with
/// `φ_i = θ_{i+1} − θ_i`.
pub fn config_from_angles(theta: [f64; 4]) -> (Configuration<f64>, f64) {
    let config = Configuration::from_fn(|pair| {
        let (i, j) = pair.indices();
        let d = theta[usize::from(j - 1)] - theta[usize::from(i - 1)];
        Vec2::new(Float::cos(d), Float::sin(d))
    });
    let phi = |i: usize| theta[i] - theta[i - 1];
    let predicted = Float::sin(phi(1)) * Float::sin(2.0 * phi(2)) * Float::sin(phi(3));
    (config, predicted)
}
