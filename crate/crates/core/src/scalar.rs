//! Integer scalars and the exact rational helpers built on them.
//!
//! Every computation in this crate is carried out over an integer type `I`
//! and its fraction field `Ratio<I>`. `BigInt` never overflows and is the
//! default behind the crate-root aliases; `i64`/`i128` are faster for small
//! inputs but will panic on overflow (binomial coefficients grow quickly).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// Exact integer type usable as the coefficient ring.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn from_count(v: u32) -> Self {
        <Self as FromPrimitive>::from_u32(v).expect("u32 fits in every scalar type")
    }

    fn from_i64_checked(v: i64) -> Option<Self> {
        <Self as FromPrimitive>::from_i64(v)
    }
}

impl Scalar for i32 {}
impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial<I: Scalar>(n: u32, k: u32) -> I {
    if k > n {
        return I::zero();
    }
    let k = k.min(n - k);
    let mut acc = I::one();
    // acc * (n - j) is always divisible by (j + 1) at step j
    for j in 0..k {
        acc = acc * I::from_count(n - j) / I::from_count(j + 1);
    }
    acc
}

/// `base^exp` by repeated squaring.
pub fn pow<I: Scalar>(base: &I, exp: u32) -> I {
    num_traits::pow(base.clone(), exp as usize)
}

/// Scale a rational vector to the primitive integer vector on the same ray.
///
/// Returns `None` for the zero vector.
pub fn primitive_vector<I: Scalar>(coords: &[Ratio<I>]) -> Option<Vec<I>> {
    if coords.iter().all(|c| c.numer().is_zero()) {
        return None;
    }
    let denom_lcm = coords
        .iter()
        .fold(I::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<I> = coords
        .iter()
        .map(|c| c.numer().clone() * (denom_lcm.clone() / c.denom().clone()))
        .collect();
    let g = ints.iter().fold(I::zero(), |acc, v| acc.gcd(v));
    Some(ints.into_iter().map(|v| v / g.clone()).collect())
}

/// Render a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational<I: Scalar>(q: &Ratio<I>) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `"p"` or `"p/q"`; the result is reduced.
pub fn parse_rational(text: &str) -> Option<Ratio<BigInt>> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().ok().map(Ratio::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Ratio::new(n, d))
            }
        }
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while (k as u64) * (k as u64) <= p as u64 {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial::<i64>(4, 2), 6);
        assert_eq!(binomial::<i64>(5, 0), 1);
        assert_eq!(binomial::<i64>(5, 5), 1);
        assert_eq!(binomial::<i64>(3, 4), 0);
        assert_eq!(binomial::<i64>(0, 0), 1);
    }

    #[test]
    fn binomial_past_u64() {
        let b: BigInt = binomial(70, 35);
        assert_eq!(b.to_string(), "112186277816662845432");
        assert!(b.to_u64().is_none());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..20u32 {
            for k in 1..n {
                assert_eq!(
                    binomial::<i64>(n, k),
                    binomial::<i64>(n - 1, k - 1) + binomial::<i64>(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn primitive_normalization() {
        let v = primitive_vector(&[Ratio::from_integer(2i64), Ratio::zero()]).unwrap();
        assert_eq!(v, vec![1, 0]);
        let v = primitive_vector(&[Ratio::from_integer(4i64), Ratio::new(-2, 3)]).unwrap();
        assert_eq!(v, vec![6, -1]);
        assert!(primitive_vector::<i64>(&[Ratio::zero(), Ratio::zero()]).is_none());
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&Ratio::new(-2i64, 2)), "-1");
        assert_eq!(format_rational(&Ratio::new(2i64, 4)), "1/2");
        assert_eq!(format_rational(&Ratio::new(3i64, -6)), "-1/2");
        assert_eq!(parse_rational("-1/2"), Some(Ratio::new(BigInt::from(-1), BigInt::from(2))));
        assert_eq!(parse_rational("4/-8"), Some(Ratio::new(BigInt::from(-1), BigInt::from(2))));
        assert_eq!(parse_rational("7"), Some(Ratio::from_integer(BigInt::from(7))));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
