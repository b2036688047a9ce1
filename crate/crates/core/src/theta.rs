//! The positivity invariant θ_{E,r} of a Harder-Narasimhan type.
//!
//! For quotient dimension `r`, let `t` be the largest index with
//! `r_t + ... + r_d >= r`. With `tail_rank = r_{t+1} + ... + r_d` and
//! `tail_degree = d_{t+1} + ... + d_d`,
//!
//! ```text
//! θ = (r - tail_rank) * μ_t + tail_degree
//! ```
//!
//! Equivalently θ is the smallest slope sum `Σ a_i μ_i` over compositions
//! `a` of `r` with `0 <= a_i <= r_i`: the greedy choice fills the pieces of
//! smallest slope first. [`theta_oracle`] computes that minimum by exhaustive
//! enumeration and shares no code with [`theta`].

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::Result;
use crate::hn::{FieldContext, HnType};
use crate::scalar::{binomial, Scalar};

/// Every intermediate quantity of the θ computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaBreakdown<I: Scalar> {
    pub r: u32,
    /// 1-based index of the threshold piece.
    pub t: usize,
    pub tail_rank: u32,
    pub tail_degree: I,
    /// How many dimensions are taken from piece `t`; always in `[1, r_t]`.
    pub s: u32,
    pub mu_t: Ratio<I>,
    pub theta: Ratio<I>,
}

/// Largest 1-based `t` such that pieces `t..=d` have total rank at least `r`.
pub fn threshold_index<I: Scalar>(h: &HnType<I>, r: i64) -> Result<usize> {
    let r = h.check_quotient_rank(r)?;
    Ok(threshold(h, r))
}

fn threshold<I: Scalar>(h: &HnType<I>, r: u32) -> usize {
    let mut tail = 0u32;
    for (i, piece) in h.pieces().iter().enumerate().rev() {
        tail += piece.rank();
        if tail >= r {
            return i + 1;
        }
    }
    unreachable!("r < rank(h) is checked by the caller")
}

/// θ_{E,r} with its breakdown.
///
/// `ctx` does not enter the arithmetic. In positive characteristic `h` must
/// already be the type of the stabilized Frobenius pullback, and the result is
/// θ of that pullback.
pub fn theta<I: Scalar>(h: &HnType<I>, r: i64, _ctx: &FieldContext) -> Result<ThetaBreakdown<I>> {
    let r = h.check_quotient_rank(r)?;
    let t = threshold(h, r);
    let pieces = h.pieces();
    let (tail_rank, tail_degree) = pieces[t..]
        .iter()
        .fold((0u32, I::zero()), |(rk, dg), p| (rk + p.rank(), dg + p.degree().clone()));
    let s = r - tail_rank;
    let mu_t = pieces[t - 1].slope();
    let theta = mu_t.clone() * Ratio::from_integer(I::from_count(s))
        + Ratio::from_integer(tail_degree.clone());
    debug_assert!(s >= 1 && s <= pieces[t - 1].rank());
    Ok(ThetaBreakdown {
        r,
        t,
        tail_rank,
        tail_degree,
        s,
        mu_t,
        theta,
    })
}

/// Streams every `a = (a_1, ..., a_d)` with `0 <= a_i <= bounds[i]` and
/// `Σ a_i = total`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    bounds: Vec<u32>,
    // suffix_cap[i] = bounds[i] + ... + bounds[d-1]
    suffix_cap: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl Compositions {
    pub fn new(bounds: Vec<u32>, total: u32) -> Self {
        let mut suffix_cap = vec![0u32; bounds.len() + 1];
        for i in (0..bounds.len()).rev() {
            suffix_cap[i] = suffix_cap[i + 1] + bounds[i];
        }
        let current = if total <= suffix_cap[0] {
            Some(Self::smallest_from(&bounds, &suffix_cap, Vec::new(), 0, total))
        } else {
            None
        };
        Compositions {
            bounds,
            suffix_cap,
            current,
        }
    }

    // Lexicographically smallest completion of `prefix` (positions < start)
    // distributing `remaining` over positions >= start.
    fn smallest_from(
        bounds: &[u32],
        suffix_cap: &[u32],
        mut prefix: Vec<u32>,
        start: usize,
        mut remaining: u32,
    ) -> Vec<u32> {
        for i in start..bounds.len() {
            let rest = suffix_cap[i + 1];
            let a = remaining.saturating_sub(rest);
            prefix.push(a);
            remaining -= a;
        }
        prefix
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        // Find the rightmost position that can grow while the suffix after it
        // can still absorb one unit less.
        let d = self.bounds.len();
        let mut suffix_sum = 0u32;
        for i in (0..d).rev() {
            if out[i] < self.bounds[i] && suffix_sum >= 1 {
                let mut prefix = out[..i].to_vec();
                prefix.push(out[i] + 1);
                self.current = Some(Self::smallest_from(
                    &self.bounds,
                    &self.suffix_cap,
                    prefix,
                    i + 1,
                    suffix_sum - 1,
                ));
                break;
            }
            suffix_sum += out[i];
        }
        Some(out)
    }
}

/// Compositions of `r` bounded by the ranks of the pieces of `h`.
pub fn compositions<I: Scalar>(h: &HnType<I>, r: i64) -> Result<Compositions> {
    let r = h.check_quotient_rank(r)?;
    let bounds = h.pieces().iter().map(|p| p.rank()).collect();
    Ok(Compositions::new(bounds, r))
}

/// The graded piece `V_a = ⊗ ∧^{a_i}(V_i/V_{i-1})` of `∧^r E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VaBundle<I: Scalar> {
    pub composition: Vec<u32>,
    pub rank: I,
    pub degree: I,
    /// `Σ a_i μ_i`, the slope of `V_a`.
    pub slope_sum: Ratio<I>,
}

impl<I: Scalar> VaBundle<I> {
    fn from_composition(h: &HnType<I>, a: Vec<u32>) -> Self {
        let pieces = h.pieces();
        let factor_ranks: Vec<I> = pieces
            .iter()
            .zip(&a)
            .map(|(p, &ai)| binomial(p.rank(), ai))
            .collect();
        let rank = factor_ranks.iter().fold(I::one(), |acc, x| acc * x.clone());
        // deg ∧^k V = binom(rank V - 1, k - 1) deg V for a semistable V,
        // and deg(A ⊗ B) = deg A rank B + rank A deg B.
        let mut degree = I::zero();
        for (i, (p, &ai)) in pieces.iter().zip(&a).enumerate() {
            if ai == 0 {
                continue;
            }
            let own = binomial::<I>(p.rank() - 1, ai - 1) * p.degree().clone();
            let others = factor_ranks
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(I::one(), |acc, (_, x)| acc * x.clone());
            degree = degree + own * others;
        }
        let slope_sum = slope_sum(h, &a);
        VaBundle {
            composition: a,
            rank,
            degree,
            slope_sum,
        }
    }
}

fn slope_sum<I: Scalar>(h: &HnType<I>, a: &[u32]) -> Ratio<I> {
    h.pieces()
        .iter()
        .zip(a)
        .fold(Ratio::zero(), |acc, (p, &ai)| {
            acc + p.slope() * Ratio::from_integer(I::from_count(ai))
        })
}

/// All `V_a` for compositions of `r`, lexicographic in `a`.
pub fn enumerate_va<I: Scalar>(h: &HnType<I>, r: i64) -> Result<Vec<VaBundle<I>>> {
    Ok(compositions(h, r)?
        .map(|a| VaBundle::from_composition(h, a))
        .collect())
}

/// Brute-force `min_a Σ a_i μ_i` over all bounded compositions of `r`.
pub fn theta_oracle<I: Scalar>(h: &HnType<I>, r: i64) -> Result<Ratio<I>> {
    let min = compositions(h, r)?
        .map(|a| slope_sum(h, &a))
        .min()
        .expect("at least one composition exists for 1 <= r < rank");
    Ok(min)
}
