//! Exhaustive enumeration of small Harder-Narasimhan types.

use std::ops::RangeInclusive;

use num_rational::Ratio;

use crate::hn::HnType;
use crate::scalar::Scalar;

/// Every HN type with total rank in `[1, max_rank]` whose piece degrees lie in
/// `degrees`, ordered by rank, then by piece list.
pub fn hn_types_up_to<I: Scalar>(max_rank: u32, degrees: RangeInclusive<i64>) -> Vec<HnType<I>> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        let mut stack = Vec::new();
        extend(n, &degrees, &mut stack, None, &mut out);
    }
    out
}

fn extend<I: Scalar>(
    remaining: u32,
    degrees: &RangeInclusive<i64>,
    stack: &mut Vec<(i64, I)>,
    last_slope: Option<&Ratio<I>>,
    out: &mut Vec<HnType<I>>,
) {
    if remaining == 0 {
        out.push(HnType::new(stack.iter().cloned()).expect("slopes decrease by construction"));
        return;
    }
    for rank in 1..=remaining {
        for deg in degrees.clone() {
            let degree = I::from_i64_checked(deg).expect("corpus degrees fit the scalar type");
            let slope = Ratio::new(degree.clone(), I::from_count(rank));
            if last_slope.is_some_and(|s| slope >= *s) {
                continue;
            }
            stack.push((rank as i64, degree));
            extend(remaining - rank, degrees, stack, Some(&slope), out);
            stack.pop();
        }
    }
}
