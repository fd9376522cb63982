//! Recovering `det^{S^2}` from its vanishing property alone.
//!
//! A multilinear map `f: V^6 -> k` is a vector of 64 coefficients, one per
//! word in `{alpha, beta}^6` choosing a coordinate from each slot. Requiring
//! `f` to vanish whenever the three vectors on a triangle coincide is a
//! linear condition on those coefficients: put basis vectors `e1`/`e2` in
//! the three slots off the triangle (enough by multilinearity) and a
//! generic `(x, y)` on the triangle, and every coefficient of the resulting
//! cubic `x^{3-m} y^m` must vanish. That gives `4 * 8 * 4 = 128` equations,
//! whose solution space is one-dimensional and spanned by the twelve-term
//! formula.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::config::{Configuration, Pair, Triple};
use crate::det_s2::{Coord, MONOMIALS};
use crate::matrix::{rank_and_nullspace, Matrix};
use crate::scalar::{Rational, Scalar};

/// Number of coordinate-choice words.
pub const WORDS: usize = 64;

fn beta_bit(p: Pair) -> usize {
    1 << (5 - p.slot())
}

/// Index of a word. Slot `12` is the most significant bit and beta is `1`,
/// so index order is lexicographic order with alpha before beta.
pub fn word_index(coords: &[Coord; 6]) -> usize {
    Pair::ALL.iter().zip(coords).filter(|(_, &c)| c == Coord::Beta).map(|(&p, _)| beta_bit(p)).sum()
}

pub fn word_coords(index: usize) -> [Coord; 6] {
    Pair::ALL.map(|p| if index & beta_bit(p) != 0 { Coord::Beta } else { Coord::Alpha })
}

/// Coefficients of a multilinear map `V^6 -> k`, indexed by [`word_index`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoefficientVector<S>(Vec<S>);

impl<S: Scalar> CoefficientVector<S> {
    /// Panics unless `coeffs.len() == 64`.
    pub fn new(coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), WORDS, "a coefficient vector has 64 entries");
        CoefficientVector(coeffs)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.0
    }

    pub fn get(&self, coords: &[Coord; 6]) -> &S {
        &self.0[word_index(coords)]
    }

    pub fn support(&self) -> usize {
        self.0.iter().filter(|x| !x.is_zero()).count()
    }

    /// `f(c) = Σ_w coeff(w) Π_slot (chosen coordinate of c at slot)`.
    pub fn evaluate(&self, c: &Configuration<S>) -> S {
        self.0.iter().enumerate().filter(|(_, k)| !k.is_zero()).fold(S::zero(), |acc, (w, k)| {
            let coords = word_coords(w);
            let product = Pair::ALL.iter().zip(coords).fold(k.clone(), |p, (&pair, coord)| {
                let v = c.at(pair);
                p * match coord {
                    Coord::Alpha => v.alpha.clone(),
                    Coord::Beta => v.beta.clone(),
                }
            });
            acc + product
        })
    }
}

/// The twelve-term formula as a coefficient vector.
pub fn canonical_coefficients() -> CoefficientVector<Rational> {
    let mut coeffs = alloc::vec![Rational::zero(); WORDS];
    for t in &MONOMIALS {
        coeffs[word_index(&t.coords)] = Rational::from_i64(t.sign.into());
    }
    CoefficientVector(coeffs)
}

/// The 128x64 vanishing constraints for all four triangles.
pub fn build_constraint_matrix() -> Matrix<Rational> {
    build_constraint_matrix_for(&Triple::ALL)
}

/// Vanishing constraints for the given triangles only.
///
/// Rows are ordered by triangle, then by the basis assignment on the
/// complementary slots (a 3-bit number, most significant bit on the first
/// complementary slot, `1` meaning `e2`), then by the power `m` of `y`.
pub fn build_constraint_matrix_for(triples: &[Triple]) -> Matrix<Rational> {
    let mut entries = Vec::with_capacity(triples.len() * 32 * WORDS);
    for &t in triples {
        let edges = t.edges();
        let complement = t.complement();
        for assignment in 0..8usize {
            let wanted: usize = complement
                .iter()
                .enumerate()
                .filter(|(k, _)| assignment & (1 << (2 - k)) != 0)
                .map(|(_, &p)| beta_bit(p))
                .sum();
            let complement_mask: usize = complement.iter().map(|&p| beta_bit(p)).sum();
            for m in 0..=3u32 {
                entries.extend((0..WORDS).map(|w| {
                    let on_triangle = edges.iter().filter(|&&p| w & beta_bit(p) != 0).count() as u32;
                    if w & complement_mask == wanted && on_triangle == m {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
            }
        }
    }
    Matrix::new(triples.len() * 32, WORDS, entries).expect("32 rows per triangle")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Uniqueness {
    pub constraint_rows: usize,
    pub constraint_cols: usize,
    /// Dimension of the space of multilinear maps satisfying the constraints.
    pub dimension: usize,
    /// Spanning map scaled so its lexicographically first nonzero
    /// coefficient is `+1`; present only when `dimension == 1`.
    pub generator: Option<CoefficientVector<Rational>>,
}

impl Uniqueness {
    /// `Some(s)` when the generator equals `s` times
    /// [`canonical_coefficients`], `s = ±1`.
    pub fn canonical_sign(&self) -> Option<i8> {
        let g = self.generator.as_ref()?;
        let canonical = canonical_coefficients();
        if *g == canonical {
            Some(1)
        } else if g.0.iter().zip(&canonical.0).all(|(a, b)| *a == -b.clone()) {
            Some(-1)
        } else {
            None
        }
    }
}

/// Solves the full constraint system.
pub fn solve_uniqueness() -> Uniqueness {
    solve_uniqueness_for(&Triple::ALL)
}

pub fn solve_uniqueness_for(triples: &[Triple]) -> Uniqueness {
    let m = build_constraint_matrix_for(triples);
    let rn = rank_and_nullspace(&m);
    let dimension = rn.basis.len();
    let generator = match <[_; 1]>::try_from(rn.basis) {
        Ok([v]) => {
            let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("basis vectors are nonzero");
            Some(CoefficientVector(v.into_iter().map(|x| x / &lead).collect()))
        }
        Err(_) => None,
    };
    Uniqueness { constraint_rows: m.rows(), constraint_cols: m.cols(), dimension, generator }
}
