//! The `S_4` relabelling action and the entrywise linear-map action.
//!
//! `det^{S^2}(σ·c) = sgn(σ) det^{S^2}(c)` and `det^{S^2}(T·c) = det(T)^3 det^{S^2}(c)`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::config::{Configuration, Vec2};
use crate::scalar::Scalar;
use crate::Error;

/// A permutation of `{1, 2, 3, 4}`, stored as its images.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: [u8; 4],
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation { images: [1, 2, 3, 4] };

    /// `(σ(1), σ(2), σ(3), σ(4))`.
    pub fn new(images: [u8; 4]) -> Result<Self, Error> {
        let mut seen = [false; 4];
        for &x in &images {
            if !(1..=4).contains(&x) || seen[usize::from(x - 1)] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[usize::from(x - 1)] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(a: u8, b: u8) -> Result<Self, Error> {
        let mut images = [1, 2, 3, 4];
        if !(1..=4).contains(&a) || !(1..=4).contains(&b) || a == b {
            return Err(Error::InvalidPermutation(images));
        }
        images.swap(usize::from(a - 1), usize::from(b - 1));
        Ok(Permutation { images })
    }

    /// All 24 permutations in lexicographic order of their images.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                for c in 1..=4u8 {
                    for d in 1..=4u8 {
                        if let Ok(p) = Permutation::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn images(&self) -> [u8; 4] {
        self.images
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.images[usize::from(i - 1)]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0; 4];
        for i in 1..=4u8 {
            images[usize::from(self.apply(i) - 1)] = i;
        }
        Permutation { images }
    }

    /// `±1` by inversion count.
    pub fn sign(&self) -> i8 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Group product for which [`act_permutation`] is a left action:
/// `(σ * τ)(i) = τ(σ(i))`, so that
/// `act_permutation(σ, &act_permutation(τ, c)) == act_permutation(σ * τ, c)`.
impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        Permutation { images: self.images.map(|x| rhs.apply(x)) }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.images;
        write!(f, "Permutation[{a}{b}{c}{d}]")
    }
}

/// `sgn(σ)` as a scalar.
pub fn permutation_sign<S: Scalar>(p: &Permutation) -> S {
    if p.sign() > 0 {
        S::one()
    } else {
        -S::one()
    }
}

/// `(σ·c)_{i,j} = c_{σ(i),σ(j)}`.
pub fn act_permutation<S: Scalar>(p: &Permutation, c: &Configuration<S>) -> Configuration<S> {
    Configuration::from_fn(|pair| {
        let (i, j) = pair.indices();
        c.get(p.apply(i), p.apply(j)).clone()
    })
}

/// A linear map of the plane acting on column vectors:
/// `(a, b) -> (t11 a + t12 b, t21 a + t22 b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap2<S> {
    pub t11: S,
    pub t12: S,
    pub t21: S,
    pub t22: S,
}

impl<S: Scalar> LinearMap2<S> {
    pub fn new(t11: S, t12: S, t21: S, t22: S) -> Self {
        LinearMap2 { t11, t12, t21, t22 }
    }

    pub fn identity() -> Self {
        LinearMap2::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn scaling(k: S) -> Self {
        LinearMap2::new(k.clone(), S::zero(), S::zero(), k)
    }

    pub fn det(&self) -> S {
        self.t11.clone() * self.t22.clone() - self.t12.clone() * self.t21.clone()
    }

    pub fn apply(&self, v: &Vec2<S>) -> Vec2<S> {
        Vec2::new(
            self.t11.clone() * v.alpha.clone() + self.t12.clone() * v.beta.clone(),
            self.t21.clone() * v.alpha.clone() + self.t22.clone() * v.beta.clone(),
        )
    }
}

/// Applies `t` to every entry.
pub fn act_linear_map<S: Scalar>(t: &LinearMap2<S>, c: &Configuration<S>) -> Configuration<S> {
    c.map_vectors(|_, v| t.apply(v))
}
