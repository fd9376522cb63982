//! Six plane vectors indexed by the unordered pairs of `{1, 2, 3, 4}`.

use core::fmt;

use crate::scalar::Scalar;

/// An unordered pair `{i, j}` of distinct indices in `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pair {
    P12,
    P13,
    P14,
    P23,
    P24,
    P34,
}

impl Pair {
    /// Storage order.
    pub const ALL: [Pair; 6] = [Pair::P12, Pair::P13, Pair::P14, Pair::P23, Pair::P24, Pair::P34];

    /// The column order of the realizability system:
    /// `(12, 23, 34, 13, 24, 14)`.
    pub const LAMBDA_ORDER: [Pair; 6] = [Pair::P12, Pair::P23, Pair::P34, Pair::P13, Pair::P24, Pair::P14];

    /// `{i, j}` in either order; `None` for `i == j` or indices outside `1..=4`.
    pub fn new(i: u8, j: u8) -> Option<Pair> {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        Some(match (a, b) {
            (1, 2) => Pair::P12,
            (1, 3) => Pair::P13,
            (1, 4) => Pair::P14,
            (2, 3) => Pair::P23,
            (2, 4) => Pair::P24,
            (3, 4) => Pair::P34,
            _ => return None,
        })
    }

    /// `(i, j)` with `i < j`.
    pub fn indices(self) -> (u8, u8) {
        match self {
            Pair::P12 => (1, 2),
            Pair::P13 => (1, 3),
            Pair::P14 => (1, 4),
            Pair::P23 => (2, 3),
            Pair::P24 => (2, 4),
            Pair::P34 => (3, 4),
        }
    }

    /// Position in [`Pair::ALL`].
    pub fn slot(self) -> usize {
        self as usize
    }

    /// Position in [`Pair::LAMBDA_ORDER`].
    pub fn lambda_slot(self) -> usize {
        match self {
            Pair::P12 => 0,
            Pair::P23 => 1,
            Pair::P34 => 2,
            Pair::P13 => 3,
            Pair::P24 => 4,
            Pair::P14 => 5,
        }
    }

    /// Two-digit key such as `"12"`.
    pub fn key(self) -> &'static str {
        match self {
            Pair::P12 => "12",
            Pair::P13 => "13",
            Pair::P14 => "14",
            Pair::P23 => "23",
            Pair::P24 => "24",
            Pair::P34 => "34",
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A triangle `i < j < k`, whose edges are the pairs `{i,j}`, `{i,k}`, `{j,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple(pub u8, pub u8, pub u8);

impl Triple {
    pub const ALL: [Triple; 4] = [Triple(1, 2, 3), Triple(1, 2, 4), Triple(1, 3, 4), Triple(2, 3, 4)];

    /// `[{i,j}, {j,k}, {i,k}]`, the order of the relation
    /// `λ_ij v_ij + λ_jk v_jk − λ_ik v_ik = 0`.
    pub fn edges(self) -> [Pair; 3] {
        let Triple(i, j, k) = self;
        let p = |a, b| Pair::new(a, b).expect("triple indices are distinct and in 1..=4");
        [p(i, j), p(j, k), p(i, k)]
    }

    /// The three pairs not inside this triangle, in storage order.
    pub fn complement(self) -> [Pair; 3] {
        let edges = self.edges();
        let mut out = [Pair::P12; 3];
        let mut n = 0;
        for p in Pair::ALL {
            if !edges.contains(&p) {
                out[n] = p;
                n += 1;
            }
        }
        out
    }
}

/// A plane vector `(alpha, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec2<S> {
    pub alpha: S,
    pub beta: S,
}

impl<S: Scalar> Vec2<S> {
    pub fn new(alpha: S, beta: S) -> Self {
        Vec2 { alpha, beta }
    }

    pub fn zero() -> Self {
        Vec2::new(S::zero(), S::zero())
    }

    /// `(1, 0)`.
    pub fn e1() -> Self {
        Vec2::new(S::one(), S::zero())
    }

    /// `(0, 1)`.
    pub fn e2() -> Self {
        Vec2::new(S::zero(), S::one())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Vec2::new(self.alpha.clone() + other.alpha.clone(), self.beta.clone() + other.beta.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Vec2::new(self.alpha.clone() - other.alpha.clone(), self.beta.clone() - other.beta.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Vec2::new(k.clone() * self.alpha.clone(), k.clone() * self.beta.clone())
    }

    /// `ac + bd`.
    pub fn dot(&self, other: &Self) -> S {
        self.alpha.clone() * other.alpha.clone() + self.beta.clone() * other.beta.clone()
    }

    /// Determinant of the 2x2 matrix with `self` and `other` as columns.
    pub fn cross(&self, other: &Self) -> S {
        self.alpha.clone() * other.beta.clone() - self.beta.clone() * other.alpha.clone()
    }

    /// Rotation by a quarter turn: `(-beta, alpha)`.
    pub fn perp(&self) -> Self {
        Vec2::new(-self.beta.clone(), self.alpha.clone())
    }

    pub fn map<T>(&self, mut f: impl FnMut(&S) -> T) -> Vec2<T> {
        Vec2 { alpha: f(&self.alpha), beta: f(&self.beta) }
    }
}

impl<S: fmt::Display> fmt::Display for Vec2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// An element of `V^6`: one vector per pair, stored in [`Pair::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration<S> {
    slots: [Vec2<S>; 6],
}

impl<S: Scalar> Configuration<S> {
    /// Vectors for `12, 13, 14, 23, 24, 34`.
    pub fn new(slots: [Vec2<S>; 6]) -> Self {
        Configuration { slots }
    }

    pub fn from_fn(mut f: impl FnMut(Pair) -> Vec2<S>) -> Self {
        Configuration { slots: Pair::ALL.map(&mut f) }
    }

    pub fn zero() -> Self {
        Configuration::from_fn(|_| Vec2::zero())
    }

    /// From `(alpha, beta)` integer pairs in storage order.
    pub fn from_ints(pairs: [(i64, i64); 6]) -> Self {
        Configuration { slots: pairs.map(|(a, b)| Vec2::new(S::from_i64(a), S::from_i64(b))) }
    }

    pub fn slots(&self) -> &[Vec2<S>; 6] {
        &self.slots
    }

    pub fn at(&self, p: Pair) -> &Vec2<S> {
        &self.slots[p.slot()]
    }

    /// `v_{i,j}`, with `v_{i,j} = v_{j,i}`. Panics unless `i != j` and both
    /// lie in `1..=4`.
    pub fn get(&self, i: u8, j: u8) -> &Vec2<S> {
        let p = Pair::new(i, j).unwrap_or_else(|| panic!("({i}, {j}) is not a pair in 1..=4"));
        self.at(p)
    }

    pub fn with(&self, p: Pair, v: Vec2<S>) -> Self {
        let mut out = self.clone();
        out.slots[p.slot()] = v;
        out
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T + Copy) -> Configuration<T> {
        Configuration { slots: self.slots.clone().map(|v| v.map(f)) }
    }

    pub fn map_vectors(&self, mut f: impl FnMut(Pair, &Vec2<S>) -> Vec2<S>) -> Self {
        Configuration::from_fn(|p| f(p, self.at(p)))
    }
}
