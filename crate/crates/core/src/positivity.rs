//! Positivity of the tautological bundle and of the relative anticanonical
//! bundle on `Gr_r(E)`.

use std::fmt;

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::Result;
use crate::hn::{FieldContext, HnType};
use crate::nefcone::{grassmann_nef_cone, is_ample_gr, is_nef_gr, NsClassGr};
use crate::scalar::Scalar;
use crate::theta::theta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositivityClass {
    Ample,
    NefNotAmple,
    NotNef,
}

impl PositivityClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PositivityClass::Ample => "ample",
            PositivityClass::NefNotAmple => "nef_not_ample",
            PositivityClass::NotNef => "not_nef",
        }
    }
}

impl fmt::Display for PositivityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ample, nef but not ample, or not nef, according to the sign of θ.
pub fn classify_tautological<I: Scalar>(
    h: &HnType<I>,
    r: i64,
    ctx: &FieldContext,
) -> Result<PositivityClass> {
    let th = theta(h, r, ctx)?.theta;
    Ok(if th.is_positive() {
        PositivityClass::Ample
    } else if th.is_negative() {
        PositivityClass::NotNef
    } else {
        PositivityClass::NefNotAmple
    })
}

/// `K^{-1}` of `Gr_r(E) -> X` as `n O(1) - r deg(E) L`.
///
/// This is the class on the Grassmann bundle of the bundle whose type is `h`.
/// For `E = V_t/V_{t-1}` and `r = s` it is `O(r_t) ⊗ (det^s)^*`.
pub fn relative_anticanonical_class<I: Scalar>(h: &HnType<I>, r: i64) -> Result<NsClassGr<I>> {
    let r = h.check_quotient_rank(r)?;
    Ok(NsClassGr::from_integers(
        I::from_count(h.rank()),
        -(I::from_count(r) * h.degree()),
    ))
}

/// The relative anticanonical class of `Gr_r(E)` when `h` is the type of the
/// `δ`-fold Frobenius pullback of `E`: `deg E = deg(h) / p^δ`.
pub fn relative_anticanonical_class_in<I: Scalar>(
    h: &HnType<I>,
    r: i64,
    ctx: &FieldContext,
) -> Result<NsClassGr<I>> {
    let c = relative_anticanonical_class(h, r)?;
    let scale = Ratio::from_integer(ctx.frobenius_scale::<I>());
    Ok(NsClassGr::new(c.x, c.y / scale))
}

/// Nefness of the relative anticanonical bundle, decided by cone membership.
pub fn anticanonical_is_nef<I: Scalar>(h: &HnType<I>, r: i64, ctx: &FieldContext) -> Result<bool> {
    let cone = grassmann_nef_cone(h, r, ctx)?;
    let class = relative_anticanonical_class_in(h, r, ctx)?;
    Ok(is_nef_gr(&class, &cone))
}

/// Whether the relative anticanonical class is in the interior of the cone.
/// Never true.
pub fn anticanonical_is_ample<I: Scalar>(
    h: &HnType<I>,
    r: i64,
    ctx: &FieldContext,
) -> Result<bool> {
    let cone = grassmann_nef_cone(h, r, ctx)?;
    let class = relative_anticanonical_class_in(h, r, ctx)?;
    Ok(is_ample_gr(&class, &cone))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(pieces: &[(i64, i64)]) -> HnType<i64> {
        HnType::new(pieces.iter().copied()).unwrap()
    }

    const C0: FieldContext = FieldContext::CharZero;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_tautological(&h(&[(2, 0)]), 1, &C0), Ok(PositivityClass::NefNotAmple));
        assert_eq!(classify_tautological(&h(&[(1, 1), (2, -1)]), 2, &C0), Ok(PositivityClass::NotNef));
        assert_eq!(classify_tautological(&h(&[(1, 2), (1, 1)]), 1, &C0), Ok(PositivityClass::Ample));
        assert!(classify_tautological(&h(&[(2, 0)]), 2, &C0).is_err());
    }

    #[test]
    fn anticanonical_class_examples() {
        assert_eq!(relative_anticanonical_class(&h(&[(2, 0)]), 1), Ok(NsClassGr::from_integers(2, 0)));
        assert_eq!(
            relative_anticanonical_class(&h(&[(1, 1), (1, -1)]), 1),
            Ok(NsClassGr::from_integers(2, 0))
        );
        assert_eq!(
            relative_anticanonical_class(&h(&[(1, 2), (1, 1)]), 1),
            Ok(NsClassGr::from_integers(2, -3))
        );
    }

    #[test]
    fn anticanonical_reduces_to_graded_piece_formula() {
        // For a single semistable piece of rank r_t, degree d_t and r = s the
        // class is r_t O(1) - s d_t L.
        for (rt, dt) in [(2, 3), (4, -1), (5, 0)] {
            for s in 1..rt {
                let c = relative_anticanonical_class(&h(&[(rt, dt)]), s).unwrap();
                assert_eq!(c, NsClassGr::from_integers(rt, -s * dt));
            }
        }
    }

    #[test]
    fn anticanonical_nef_examples() {
        let flat = h(&[(2, 0)]);
        assert_eq!(anticanonical_is_nef(&flat, 1, &C0), Ok(true));
        assert_eq!(anticanonical_is_ample(&flat, 1, &C0), Ok(false));
        let cone = grassmann_nef_cone(&flat, 1, &C0).unwrap();
        let c = relative_anticanonical_class(&flat, 1).unwrap();
        assert_eq!(cone.theta_functional(&c), Ratio::from_integer(0));

        assert_eq!(anticanonical_is_nef(&h(&[(1, 1), (1, -1)]), 1, &C0), Ok(false));
        assert_eq!(anticanonical_is_nef(&h(&[(3, 1)]), 2, &C0), Ok(true));
    }

    #[test]
    fn anticanonical_in_char_p_uses_frobenius_scale() {
        // stabilized type of a strongly semistable bundle of degree 1, p = 3, δ = 2
        let ctx = FieldContext::char_p(3, 2).unwrap();
        let x = h(&[(2, 9)]);
        let c = relative_anticanonical_class_in(&x, 1, &ctx).unwrap();
        assert_eq!(c, NsClassGr::from_integers(2, -1));
        assert_eq!(anticanonical_is_nef(&x, 1, &ctx), Ok(true));
        assert_eq!(anticanonical_is_ample(&x, 1, &ctx), Ok(false));
        assert_eq!(anticanonical_is_nef(&h(&[(1, 9), (1, 0)]), 1, &ctx), Ok(false));
    }
}
