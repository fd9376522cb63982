//! Dense matrices and the exact elimination kernels.
//!
//! Exact routines clear denominators row by row and then run integer-only
//! elimination, so no intermediate fraction is ever formed.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar};
use crate::Error;

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Shape { rows, cols, expected: "rows * cols entries" });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<const C: usize>(rows: Vec<[S; C]>) -> Self {
        let n = rows.len();
        Matrix { rows: n, cols: C, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }
}

impl<S: Clone> Matrix<S> {
    /// The submatrix made of the listed rows, in the listed order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        Matrix { rows: rows.len(), cols: self.cols, entries }
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn mul_vec(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.cols, "vector length does not match column count");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(x).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    /// Determinant on the matrix's backend.
    pub fn det(&self) -> Result<S, Error> {
        S::determinant(self)
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            f.write_str("  ")?;
            for c in 0..self.cols {
                write!(f, "{:>6} ", self.entries[r * self.cols + c])?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

fn square_check<S>(m: &Matrix<S>) -> Result<usize, Error> {
    if !m.is_square() {
        return Err(Error::Shape { rows: m.rows, cols: m.cols, expected: "square" });
    }
    Ok(m.rows)
}

/// Scales every row by the lcm of its denominators. Returns the integer rows
/// and the product of the scale factors.
fn clear_denominators(m: &Matrix<Rational>) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let rows = (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let out = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            total *= &l;
            out
        })
        .collect();
    (rows, total)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Pivots are the first nonzero entry at or below the diagonal, in column
/// order.
pub fn det_bareiss(m: &Matrix<Rational>) -> Result<Rational, Error> {
    let n = square_check(m)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let (mut a, scale) = clear_denominators(m);
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Sylvester's identity guarantees exact division.
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    Ok(if negate { -det } else { det })
}

/// Determinant by Laplace expansion along the first row. Division-free, so
/// it works on any backend; cost is factorial in `n`.
pub fn det_expansion<S: Scalar>(m: &Matrix<S>) -> Result<S, Error> {
    let n = square_check(m)?;
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(m, 0, &cols))
}

fn expand<S: Scalar>(m: &Matrix<S>, row: usize, cols: &[usize]) -> S {
    match cols.len() {
        0 => S::one(),
        1 => m.get(row, cols[0]).clone(),
        _ => {
            let mut acc = S::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let entry = m.get(row, c);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry.clone() * expand(m, row + 1, &rest);
                acc = if pos % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Exact rank with a canonical nullspace basis.
#[derive(Debug, Clone, PartialEq)]
pub struct RankNullspace {
    pub rank: usize,
    /// One primitive integer vector per free column, in column order.
    pub basis: Vec<Vec<Rational>>,
}

fn divide_by_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Clears denominators, divides by content, and makes the first nonzero
/// entry positive.
pub fn primitive_vector(v: &[Rational]) -> Vec<Rational> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    divide_by_content(&mut ints);
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints.into_iter().map(Rational::from_integer).collect()
}

/// Exact rank and nullspace basis.
///
/// Runs fraction-free Gauss-Jordan elimination with first-nonzero pivoting
/// in column order, keeping each row primitive. Each free column `f` yields
/// the basis vector with `x_f = 1`, the other free coordinates zero, and the
/// pivot coordinates solved from the reduced rows, then normalized by
/// [`primitive_vector`].
pub fn rank_and_nullspace(m: &Matrix<Rational>) -> RankNullspace {
    let (mut a, _) = clear_denominators(m);
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..m.cols {
        let p = pivots.len();
        let Some(r) = (p..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        divide_by_content(&mut a[p]);
        let pivot_row = a[p].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == p || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[col] - &factor * y;
            }
            divide_by_content(row);
        }
        pivots.push(col);
    }

    let rank = pivots.len();
    let basis = (0..m.cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = alloc::vec![Rational::zero(); m.cols];
            x[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -Rational::new(a[r][free].clone(), a[r][pc].clone());
            }
            primitive_vector(&x)
        })
        .collect();
    RankNullspace { rank, basis }
}
