#![allow(dead_code)]

use dets2_core::scalar::{int, ratio};
use dets2_core::{Configuration, PointQuad, Rational, Vec2};
use proptest::prelude::*;

/// `p/q` with `|p| <= 9`, `1 <= |q| <= 9`.
pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9, any::<bool>()).prop_map(|(p, q, neg)| ratio(p, if neg { -q } else { q }))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |x| *x != int(0))
}

pub fn vec2() -> impl Strategy<Value = Vec2<Rational>> {
    (small_rational(), small_rational()).prop_map(|(a, b)| Vec2::new(a, b))
}

pub fn config() -> impl Strategy<Value = Configuration<Rational>> {
    proptest::array::uniform6(vec2()).prop_map(Configuration::new)
}

pub fn quad() -> impl Strategy<Value = PointQuad<Rational>> {
    proptest::array::uniform4(vec2()).prop_map(PointQuad::new)
}

/// Point-derived configuration with every edge rescaled by a nonzero factor.
pub fn rescaled_point_config() -> impl Strategy<Value = Configuration<Rational>> {
    (quad(), proptest::array::uniform6(nonzero_rational())).prop_map(|(q, scales)| {
        let c = dets2_core::config_from_points(&q);
        c.map_vectors(|p, v| v.scale(&scales[p.slot()]))
    })
}

/// Naive cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return int(1);
    }
    let mut acc = int(0);
    for c in 0..n {
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][c].clone() * cofactor_det(&minor);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest `k` with a nonzero `k x k` minor.
pub fn brute_force_rank(m: &[Vec<Rational>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<Rational>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                if cofactor_det(&sub) != int(0) {
                    return k;
                }
            }
        }
    }
    0
}
