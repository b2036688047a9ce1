//! Numerical Harder-Narasimhan types and the transforms acting on them.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, is_prime, pow, Scalar};

/// One graded piece `V_i / V_{i-1}` of a Harder-Narasimhan filtration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnPiece<I> {
    rank: u32,
    degree: I,
}

impl<I: Scalar> HnPiece<I> {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> &I {
        &self.degree
    }

    pub fn slope(&self) -> Ratio<I> {
        Ratio::new(self.degree.clone(), I::from_count(self.rank))
    }
}

/// Characteristic of the ground field.
///
/// In positive characteristic the accompanying [`HnType`] is understood to be
/// the type of the `delta`-fold Frobenius pullback of the bundle, with
/// strongly semistable graded pieces. Nothing here can check that; the caller
/// asserts it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldContext {
    #[default]
    CharZero,
    CharP { p: u32, delta: u32 },
}

impl FieldContext {
    pub fn char_p(p: u32, delta: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        Ok(FieldContext::CharP { p, delta })
    }

    /// `p^delta`, or 1 in characteristic zero.
    pub fn frobenius_scale<I: Scalar>(&self) -> I {
        match *self {
            FieldContext::CharZero => I::one(),
            FieldContext::CharP { p, delta } => pow(&I::from_count(p), delta),
        }
    }
}

/// Degrees of the line bundles in a splitting `O(a_1) + ... + O(a_k)` on the
/// projective line, kept sorted in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplittingType<I> {
    degrees: Vec<I>,
}

impl<I: Scalar> SplittingType<I> {
    pub fn new(mut degrees: Vec<I>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyType);
        }
        degrees.sort_by(|a, b| b.cmp(a));
        Ok(SplittingType { degrees })
    }

    pub fn degrees(&self) -> &[I] {
        &self.degrees
    }
}

/// The numerical type of a Harder-Narasimhan filtration: graded pieces
/// `(rank, degree)` with strictly decreasing slopes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnType<I> {
    pieces: Vec<HnPiece<I>>,
}

/// Rank, degree and slope of the whole bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalInvariants<I: Scalar> {
    pub rank: u32,
    pub degree: I,
    pub slope: Ratio<I>,
}

impl<I: Scalar> HnType<I> {
    /// Validate a list of `(rank, degree)` pieces.
    ///
    /// Pieces of equal slope are rejected, not merged.
    pub fn new<P>(pieces: P) -> Result<Self>
    where
        P: IntoIterator<Item = (i64, I)>,
    {
        let mut out = Vec::new();
        for (index, (rank, degree)) in pieces.into_iter().enumerate() {
            if rank < 1 || rank > u32::MAX as i64 {
                return Err(Error::NonPositiveRank { index: index + 1, rank });
            }
            out.push(HnPiece {
                rank: rank as u32,
                degree,
            });
        }
        Self::from_pieces(out)
    }

    fn from_pieces(pieces: Vec<HnPiece<I>>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::EmptyType);
        }
        for (i, w) in pieces.windows(2).enumerate() {
            let (left, right) = (w[0].slope(), w[1].slope());
            if left <= right {
                return Err(Error::NonDecreasingSlopes {
                    index: i + 1,
                    left: format_rational(&left),
                    right: format_rational(&right),
                });
            }
        }
        Ok(HnType { pieces })
    }

    // Only for transforms that provably keep slopes strictly decreasing.
    fn map_pieces(&self, f: impl Fn(&HnPiece<I>) -> HnPiece<I>) -> Self {
        HnType {
            pieces: self.pieces.iter().map(f).collect(),
        }
    }

    /// The HN type of a direct sum of line bundles on the projective line:
    /// `m` copies of `O(a)` become one piece of rank `m` and degree `m*a`.
    pub fn from_splitting_type(st: &SplittingType<I>) -> Self {
        let mut pieces: Vec<HnPiece<I>> = Vec::new();
        for a in st.degrees() {
            match pieces.last_mut() {
                Some(last) if last.degree.clone() / I::from_count(last.rank) == *a => {
                    last.rank += 1;
                    last.degree = last.degree.clone() + a.clone();
                }
                _ => pieces.push(HnPiece {
                    rank: 1,
                    degree: a.clone(),
                }),
            }
        }
        Self::from_pieces(pieces).expect("grouped splitting degrees have decreasing slopes")
    }

    pub fn pieces(&self) -> &[HnPiece<I>] {
        &self.pieces
    }

    /// Number of graded pieces `d`.
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rank(&self) -> u32 {
        self.pieces.iter().map(|p| p.rank).sum()
    }

    pub fn degree(&self) -> I {
        self.pieces
            .iter()
            .fold(I::zero(), |acc, p| acc + p.degree.clone())
    }

    pub fn slope(&self) -> Ratio<I> {
        Ratio::new(self.degree(), I::from_count(self.rank()))
    }

    pub fn slopes(&self) -> Vec<Ratio<I>> {
        self.pieces.iter().map(HnPiece::slope).collect()
    }

    pub fn global_invariants(&self) -> GlobalInvariants<I> {
        GlobalInvariants {
            rank: self.rank(),
            degree: self.degree(),
            slope: self.slope(),
        }
    }

    /// Semistable means a single graded piece.
    pub fn is_semistable(&self) -> bool {
        self.pieces.len() == 1
    }

    /// Type of the dual bundle: order reversed, degrees negated.
    pub fn dual(&self) -> Self {
        HnType {
            pieces: self
                .pieces
                .iter()
                .rev()
                .map(|p| HnPiece {
                    rank: p.rank,
                    degree: -p.degree.clone(),
                })
                .collect(),
        }
    }

    /// Tensor with a line bundle of degree `m`.
    pub fn twist(&self, m: &I) -> Self {
        self.map_pieces(|p| HnPiece {
            rank: p.rank,
            degree: p.degree.clone() + I::from_count(p.rank) * m.clone(),
        })
    }

    /// Pullback along `delta` Frobenius iterations: degrees scale by `p^delta`.
    pub fn frobenius_pullback(&self, ctx: &FieldContext) -> Result<Self> {
        match ctx {
            FieldContext::CharZero => Err(Error::CharZeroContext),
            FieldContext::CharP { .. } => {
                let scale: I = ctx.frobenius_scale();
                Ok(self.scale_degrees(&scale))
            }
        }
    }

    /// Pullback along a finite cover of degree `m`.
    pub fn cover_pullback(&self, m: &I) -> Result<Self> {
        if *m < I::one() {
            return Err(Error::NonPositiveCoverDegree {
                degree: m.to_string(),
            });
        }
        Ok(self.scale_degrees(m))
    }

    fn scale_degrees(&self, m: &I) -> Self {
        self.map_pieces(|p| HnPiece {
            rank: p.rank,
            degree: p.degree.clone() * m.clone(),
        })
    }

    /// Validate a quotient dimension `r` in `[1, rank - 1]`.
    pub fn check_quotient_rank(&self, r: i64) -> Result<u32> {
        let n = self.rank();
        if r < 1 || r >= n as i64 {
            return Err(Error::QuotientRankOutOfRange { r, rank: n });
        }
        Ok(r as u32)
    }
}

impl<I: Scalar> fmt::Display for HnType<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {})", p.rank, p.degree)?;
        }
        write!(f, "]")
    }
}
