//! Exact positivity computations on Grassmann and flag bundles over a smooth
//! projective curve, driven by the numerical Harder-Narasimhan type of the
//! underlying vector bundle.
//!
//! All arithmetic is exact. The modules are generic over an integer
//! [`Scalar`]; the aliases below fix it to `BigInt`, which is what the CLI
//! uses.

pub mod corpus;
pub mod error;
pub mod hn;
pub mod nefcone;
pub mod positivity;
pub mod scalar;
pub mod theta;

pub use error::{Error, Result};
pub use hn::{FieldContext, GlobalInvariants, HnPiece, HnType, SplittingType};
pub use nefcone::{
    flag_nef_cone, grassmann_nef_cone, is_ample_flag, is_ample_gr, is_nef_flag, is_nef_gr,
    pullback_to_flag, ConeDescriptionFlag, ConeDescriptionGr, FlagType, NsClassFlag, NsClassGr,
    RayGr,
};
pub use positivity::{
    anticanonical_is_ample, anticanonical_is_nef, classify_tautological,
    relative_anticanonical_class, relative_anticanonical_class_in, PositivityClass,
};
pub use scalar::Scalar;
pub use theta::{
    compositions, enumerate_va, theta, theta_oracle, threshold_index, Compositions,
    ThetaBreakdown, VaBundle,
};

pub use num_bigint::BigInt;

pub type Rational = num_rational::Ratio<BigInt>;
pub type BigHnType = HnType<BigInt>;
pub type BigSplittingType = SplittingType<BigInt>;
pub type BigThetaBreakdown = ThetaBreakdown<BigInt>;
pub type BigVaBundle = VaBundle<BigInt>;
pub type BigNsClassGr = NsClassGr<BigInt>;
pub type BigNsClassFlag = NsClassFlag<BigInt>;
pub type BigConeGr = ConeDescriptionGr<BigInt>;
pub type BigConeFlag = ConeDescriptionFlag<BigInt>;

/// Machine-word variants; overflow panics instead of wrapping.
pub type Rational64 = num_rational::Ratio<i64>;
pub type HnType64 = HnType<i64>;
pub type ThetaBreakdown64 = ThetaBreakdown<i64>;
pub type VaBundle64 = VaBundle<i64>;
pub type NsClassGr64 = NsClassGr<i64>;
pub type NsClassFlag64 = NsClassFlag<i64>;
