//! Test-only helpers: random HN types and an exact cone-membership solver
//! that knows nothing about the closed-form inequalities.

#![allow(dead_code)]

use grassnef::{BigInt, HnType, Rational};
use num_traits::{Signed, Zero};
use rand::Rng;

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn hn(pieces: &[(i64, i64)]) -> HnType<BigInt> {
    HnType::new(pieces.iter().map(|&(r, d)| (r, big(d)))).unwrap()
}

/// A random valid HN type of total rank in `[1, max_rank]`: draw pieces,
/// sort by slope, drop pieces whose slope repeats.
pub fn random_hn_type<R: Rng>(rng: &mut R, max_rank: u32, max_abs_degree: i64) -> HnType<BigInt> {
    let target = rng.gen_range(1..=max_rank);
    let mut pieces: Vec<(i64, i64)> = Vec::new();
    let mut left = target;
    while left > 0 {
        let r = rng.gen_range(1..=left.min(4));
        let d = rng.gen_range(-max_abs_degree..=max_abs_degree);
        pieces.push((r as i64, d));
        left -= r;
    }
    // compare d1/r1 > d2/r2 as d1*r2 > d2*r1
    pieces.sort_by(|a, b| (b.1 * a.0).cmp(&(a.1 * b.0)));
    let mut kept: Vec<(i64, i64)> = Vec::new();
    for p in pieces {
        match kept.last_mut() {
            Some(last) if last.1 * p.0 == p.1 * last.0 => {
                // equal slopes: merge into one semistable piece
                last.0 += p.0;
                last.1 += p.1;
            }
            _ => kept.push(p),
        }
    }
    hn(&kept)
}

/// Solve `Σ λ_j rays[j] = target` exactly (rays square and invertible) by
/// Gauss-Jordan elimination.
pub fn solve_combination(rays: &[Vec<BigInt>], target: &[Rational]) -> Vec<Rational> {
    let n = rays.len();
    assert!(rays.iter().all(|r| r.len() == n) && target.len() == n);
    // column j of the matrix is rays[j]
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| Rational::from_integer(rays[j][i].clone())).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("rays are a basis");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v = v.clone() / p.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, pv) in m[r].iter_mut().zip(pivot_row).skip(col) {
                    *v = v.clone() - f.clone() * pv;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

/// Membership in the cone spanned by `rays`, via the generic solve.
pub fn in_cone_by_solve(rays: &[Vec<BigInt>], target: &[Rational]) -> bool {
    solve_combination(rays, target).iter().all(|l| !l.is_negative())
}

/// Strict interior of the simplicial cone spanned by `rays`.
pub fn in_interior_by_solve(rays: &[Vec<BigInt>], target: &[Rational]) -> bool {
    solve_combination(rays, target).iter().all(|l| l.is_positive())
}
