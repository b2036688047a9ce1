//! Néron-Severi classes and nef cones of Grassmann and flag bundles.
//!
//! `NS(Gr_r(E))_R` has basis `{O(1), L}` where `L` is the pullback of a
//! degree-one line bundle on the curve. The nef cone is spanned by `L` and
//! `p^δ O(1) - θ' L`, with `θ'` the invariant of the stabilized type (δ = 0 in
//! characteristic zero). Membership therefore reduces to
//!
//! ```text
//! x >= 0  and  p^δ y + θ' x >= 0
//! ```
//!
//! For a flag bundle with quotient dimensions `r_1 < ... < r_ν` the basis is
//! `{O_1, ..., O_ν, L'}` and the cone is simplicial on the pullbacks of the
//! Grassmann generators together with the fiber class.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hn::{FieldContext, HnType};
use crate::scalar::{primitive_vector, Scalar};
use crate::theta::theta;

/// `x O(1) + y L` in `NS(Gr_r(E))_Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NsClassGr<I: Scalar> {
    pub x: Ratio<I>,
    pub y: Ratio<I>,
}

impl<I: Scalar> NsClassGr<I> {
    pub fn new(x: Ratio<I>, y: Ratio<I>) -> Self {
        NsClassGr { x, y }
    }

    pub fn from_integers(x: I, y: I) -> Self {
        NsClassGr::new(Ratio::from_integer(x), Ratio::from_integer(y))
    }

    /// The tautological bundle `O(1)`.
    pub fn tautological() -> Self {
        NsClassGr::from_integers(I::one(), I::zero())
    }

    /// The fiber class `L`.
    pub fn fiber() -> Self {
        NsClassGr::from_integers(I::zero(), I::one())
    }
}

/// A primitive integer ray `(u, v)` in the `{O(1), L}` basis, `u >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RayGr<I> {
    pub u: I,
    pub v: I,
}

impl<I: Scalar> RayGr<I> {
    fn primitive(u: Ratio<I>, v: Ratio<I>) -> Self {
        let mut w = primitive_vector(&[u, v]).expect("nef cone rays are nonzero");
        if w[0].is_negative() {
            w.iter_mut().for_each(|c| *c = -c.clone());
        }
        let v = w.pop().unwrap();
        let u = w.pop().unwrap();
        RayGr { u, v }
    }

    pub fn as_class(&self) -> NsClassGr<I> {
        NsClassGr::from_integers(self.u.clone(), self.v.clone())
    }
}

/// The nef cone of `Gr_r(E)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescriptionGr<I: Scalar> {
    pub fiber_ray: RayGr<I>,
    pub theta_ray: RayGr<I>,
    pub theta_used: Ratio<I>,
    pub p_delta: I,
}

impl<I: Scalar> ConeDescriptionGr<I> {
    /// Fiber ray first, then the θ ray.
    pub fn rays(&self) -> [&RayGr<I>; 2] {
        [&self.fiber_ray, &self.theta_ray]
    }

    /// `p^δ y + θ' x`, the value of the second defining functional.
    pub fn theta_functional(&self, c: &NsClassGr<I>) -> Ratio<I> {
        Ratio::from_integer(self.p_delta.clone()) * c.y.clone() + self.theta_used.clone() * c.x.clone()
    }
}

pub fn grassmann_nef_cone<I: Scalar>(
    h: &HnType<I>,
    r: i64,
    ctx: &FieldContext,
) -> Result<ConeDescriptionGr<I>> {
    let theta_used = theta(h, r, ctx)?.theta;
    let p_delta: I = ctx.frobenius_scale();
    Ok(ConeDescriptionGr {
        fiber_ray: RayGr {
            u: I::zero(),
            v: I::one(),
        },
        theta_ray: RayGr::primitive(Ratio::from_integer(p_delta.clone()), -theta_used.clone()),
        theta_used,
        p_delta,
    })
}

pub fn is_nef_gr<I: Scalar>(c: &NsClassGr<I>, cone: &ConeDescriptionGr<I>) -> bool {
    !c.x.is_negative() && !cone.theta_functional(c).is_negative()
}

/// Strict interior of the nef cone.
pub fn is_ample_gr<I: Scalar>(c: &NsClassGr<I>, cone: &ConeDescriptionGr<I>) -> bool {
    c.x.is_positive() && cone.theta_functional(c).is_positive()
}

/// Quotient dimensions `r_1 < ... < r_ν` of a flag bundle of a rank-`n` bundle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagType {
    quotient_dims: Vec<u32>,
    rank: u32,
}

impl FlagType {
    pub fn new(quotient_dims: &[i64], rank: u32) -> Result<Self> {
        if quotient_dims.is_empty() {
            return Err(Error::InvalidFlagType("no quotient dimensions".into()));
        }
        for (i, &r) in quotient_dims.iter().enumerate() {
            if r < 1 || r >= rank as i64 {
                return Err(Error::InvalidFlagType(format!(
                    "dimension {r} outside [1, {}]",
                    rank.saturating_sub(1)
                )));
            }
            if i > 0 && quotient_dims[i - 1] >= r {
                return Err(Error::InvalidFlagType(format!(
                    "dimensions must strictly increase: {} then {r}",
                    quotient_dims[i - 1]
                )));
            }
        }
        Ok(FlagType {
            quotient_dims: quotient_dims.iter().map(|&r| r as u32).collect(),
            rank,
        })
    }

    pub fn quotient_dims(&self) -> &[u32] {
        &self.quotient_dims
    }

    /// ν, the number of steps.
    pub fn len(&self) -> usize {
        self.quotient_dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotient_dims.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

/// `Σ x_i O_i + y L'` in `NS(Fl(E))_Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NsClassFlag<I: Scalar> {
    pub x: Vec<Ratio<I>>,
    pub y: Ratio<I>,
}

impl<I: Scalar> NsClassFlag<I> {
    pub fn new(x: Vec<Ratio<I>>, y: Ratio<I>) -> Self {
        NsClassFlag { x, y }
    }

    pub fn from_integers(x: &[I], y: I) -> Self {
        NsClassFlag::new(
            x.iter().cloned().map(Ratio::from_integer).collect(),
            Ratio::from_integer(y),
        )
    }

    /// Coordinates with the fiber coefficient last.
    pub fn coords(&self) -> Vec<Ratio<I>> {
        let mut v = self.x.clone();
        v.push(self.y.clone());
        v
    }
}

/// The nef cone of `Fl(E)`: ν pulled-back Grassmann generators and the fiber
/// ray, all primitive, fiber ray last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescriptionFlag<I: Scalar> {
    pub flag: FlagType,
    pub thetas: Vec<Ratio<I>>,
    pub p_delta: I,
    pub rays: Vec<Vec<I>>,
}

impl<I: Scalar> ConeDescriptionFlag<I> {
    pub fn theta_functional(&self, c: &NsClassFlag<I>) -> Ratio<I> {
        self.thetas
            .iter()
            .zip(&c.x)
            .fold(Ratio::from_integer(self.p_delta.clone()) * c.y.clone(), |acc, (t, x)| {
                acc + t.clone() * x.clone()
            })
    }

    fn check_dims(&self, c: &NsClassFlag<I>) -> Result<()> {
        if c.x.len() != self.flag.len() {
            return Err(Error::DimensionMismatch {
                expected: self.flag.len() + 1,
                found: c.x.len() + 1,
            });
        }
        Ok(())
    }
}

pub fn flag_nef_cone<I: Scalar>(
    h: &HnType<I>,
    fl: &FlagType,
    ctx: &FieldContext,
) -> Result<ConeDescriptionFlag<I>> {
    if fl.rank() != h.rank() {
        return Err(Error::InvalidFlagType(format!(
            "flag built for rank {}, bundle has rank {}",
            fl.rank(),
            h.rank()
        )));
    }
    let nu = fl.len();
    let p_delta: I = ctx.frobenius_scale();
    let mut thetas = Vec::with_capacity(nu);
    let mut rays = Vec::with_capacity(nu + 1);
    for (i, &r) in fl.quotient_dims().iter().enumerate() {
        let th = theta(h, r as i64, ctx)?.theta;
        let mut coords = vec![Ratio::zero(); nu + 1];
        coords[i] = Ratio::from_integer(p_delta.clone());
        coords[nu] = -th.clone();
        rays.push(primitive_vector(&coords).expect("flag generator is nonzero"));
        thetas.push(th);
    }
    let mut fiber = vec![I::zero(); nu + 1];
    fiber[nu] = I::one();
    rays.push(fiber);
    Ok(ConeDescriptionFlag {
        flag: fl.clone(),
        thetas,
        p_delta,
        rays,
    })
}

pub fn is_nef_flag<I: Scalar>(c: &NsClassFlag<I>, cone: &ConeDescriptionFlag<I>) -> Result<bool> {
    cone.check_dims(c)?;
    Ok(c.x.iter().all(|x| !x.is_negative()) && !cone.theta_functional(c).is_negative())
}

pub fn is_ample_flag<I: Scalar>(c: &NsClassFlag<I>, cone: &ConeDescriptionFlag<I>) -> Result<bool> {
    cone.check_dims(c)?;
    Ok(c.x.iter().all(|x| x.is_positive()) && cone.theta_functional(c).is_positive())
}

/// Pull a class back along the projection `Fl(E) -> Gr_{r_i}(E)`, 1-based `i`.
pub fn pullback_to_flag<I: Scalar>(i: usize, c: &NsClassGr<I>, fl: &FlagType) -> Result<NsClassFlag<I>> {
    if i < 1 || i > fl.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: fl.len(),
        });
    }
    let mut x = vec![Ratio::zero(); fl.len()];
    x[i - 1] = c.x.clone();
    Ok(NsClassFlag::new(x, c.y.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(pieces: &[(i64, i64)]) -> HnType<i64> {
        HnType::new(pieces.iter().copied()).unwrap()
    }

    fn ray(u: i64, v: i64) -> RayGr<i64> {
        RayGr { u, v }
    }

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn grassmann_cone_examples() {
        let c = grassmann_nef_cone(&h(&[(2, 0)]), 1, &FieldContext::CharZero).unwrap();
        assert_eq!((c.fiber_ray.clone(), c.theta_ray.clone()), (ray(0, 1), ray(1, 0)));

        let c = grassmann_nef_cone(&h(&[(1, 2), (1, 1)]), 1, &FieldContext::CharZero).unwrap();
        assert_eq!(c.theta_ray, ray(1, -1));

        let ctx = FieldContext::char_p(2, 1).unwrap();
        let c = grassmann_nef_cone(&h(&[(1, 2), (1, 0)]), 1, &ctx).unwrap();
        assert_eq!(c.theta_used, q(0, 1));
        assert_eq!(c.p_delta, 2);
        assert_eq!(c.theta_ray, ray(1, 0));
    }

    #[test]
    fn fractional_theta_is_cleared() {
        // θ = 2/3 for a semistable (3, 2) with r = 1
        let c = grassmann_nef_cone(&h(&[(3, 2)]), 1, &FieldContext::CharZero).unwrap();
        assert_eq!(c.theta_ray, ray(3, -2));
        let ctx = FieldContext::char_p(3, 1).unwrap();
        let c = grassmann_nef_cone(&h(&[(3, 2)]), 1, &ctx).unwrap();
        assert_eq!(c.theta_ray, ray(9, -2));
    }

    #[test]
    fn gr_membership() {
        let cone = grassmann_nef_cone(&h(&[(1, 2), (1, 1)]), 1, &FieldContext::CharZero).unwrap();
        assert!(is_nef_gr(&NsClassGr::from_integers(1, -1), &cone));
        assert!(!is_ample_gr(&NsClassGr::from_integers(1, -1), &cone));
        assert!(!is_nef_gr(&NsClassGr::from_integers(-1, 5), &cone));
        assert!(is_ample_gr(&NsClassGr::tautological(), &cone));
        assert!(!is_ample_gr(&NsClassGr::fiber(), &cone));
        assert!(is_nef_gr(&NsClassGr::fiber(), &cone));

        let unstable = grassmann_nef_cone(&h(&[(1, 1), (1, -1)]), 1, &FieldContext::CharZero).unwrap();
        assert_eq!(unstable.theta_used, q(-1, 1));
        assert!(!is_nef_gr(&NsClassGr::from_integers(2, 0), &unstable));

        let flat = grassmann_nef_cone(&h(&[(2, 0)]), 1, &FieldContext::CharZero).unwrap();
        assert!(is_nef_gr(&NsClassGr::tautological(), &flat));
        assert!(!is_ample_gr(&NsClassGr::tautological(), &flat));
    }

    #[test]
    fn flag_type_validation() {
        assert!(FlagType::new(&[1, 2], 3).is_ok());
        assert!(matches!(FlagType::new(&[], 3), Err(Error::InvalidFlagType(_))));
        assert!(matches!(FlagType::new(&[2, 1], 3), Err(Error::InvalidFlagType(_))));
        assert!(matches!(FlagType::new(&[1, 1], 3), Err(Error::InvalidFlagType(_))));
        assert!(matches!(FlagType::new(&[0, 1], 3), Err(Error::InvalidFlagType(_))));
        assert!(matches!(FlagType::new(&[1, 3], 3), Err(Error::InvalidFlagType(_))));
    }

    #[test]
    fn flag_cone_examples() {
        let x = h(&[(1, 2), (1, 1), (1, 0)]);
        let fl = FlagType::new(&[1, 2], 3).unwrap();
        let cone = flag_nef_cone(&x, &fl, &FieldContext::CharZero).unwrap();
        assert_eq!(cone.thetas, vec![q(0, 1), q(1, 1)]);
        assert_eq!(cone.rays, vec![vec![1, 0, 0], vec![0, 1, -1], vec![0, 0, 1]]);
        assert_eq!(is_nef_flag(&NsClassFlag::from_integers(&[1, 1], -1), &cone), Ok(true));
        assert_eq!(is_nef_flag(&NsClassFlag::from_integers(&[-1, 3], 9), &cone), Ok(false));
        for r in &cone.rays {
            let c = NsClassFlag::from_integers(&r[..2], r[2]);
            assert_eq!(is_nef_flag(&c, &cone), Ok(true));
        }
        assert!(matches!(
            is_nef_flag(&NsClassFlag::from_integers(&[1], 0), &cone),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));

        let flat = flag_nef_cone(&h(&[(3, 0)]), &fl, &FieldContext::CharZero).unwrap();
        assert_eq!(flat.rays, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn single_step_flag_is_grassmannian() {
        let x = h(&[(1, 3), (2, 1), (1, -2)]);
        for r in 1..4 {
            let fl = FlagType::new(&[r], 4).unwrap();
            let gr = grassmann_nef_cone(&x, r, &FieldContext::CharZero).unwrap();
            let flag = flag_nef_cone(&x, &fl, &FieldContext::CharZero).unwrap();
            assert_eq!(flag.rays[0], vec![gr.theta_ray.u, gr.theta_ray.v]);
            assert_eq!(flag.rays[1], vec![gr.fiber_ray.u, gr.fiber_ray.v]);
        }
    }

    #[test]
    fn flag_cone_rejects_rank_mismatch() {
        let fl = FlagType::new(&[1, 2], 4).unwrap();
        assert!(matches!(
            flag_nef_cone(&h(&[(3, 0)]), &fl, &FieldContext::CharZero),
            Err(Error::InvalidFlagType(_))
        ));
    }

    #[test]
    fn pullback_examples() {
        let fl = FlagType::new(&[1, 2, 3], 4).unwrap();
        let c = pullback_to_flag(1, &NsClassGr::from_integers(1, -5), &fl).unwrap();
        assert_eq!(c, NsClassFlag::from_integers(&[1, 0, 0], -5));
        let c = pullback_to_flag(2, &NsClassGr::fiber(), &fl).unwrap();
        assert_eq!(c, NsClassFlag::from_integers(&[0, 0, 0], 1));
        assert!(matches!(
            pullback_to_flag(0, &NsClassGr::<i64>::fiber(), &fl),
            Err(Error::IndexOutOfRange { index: 0, len: 3 })
        ));
        assert!(pullback_to_flag(4, &NsClassGr::<i64>::fiber(), &fl).is_err());
    }
}
