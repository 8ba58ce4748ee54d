//! Embedding an arbitrary digit string into a Niven number: pad the string
//! so its digit sum becomes an exact power of the base, then shift by that
//! power so divisibility is automatic.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::radix::{digit_sum, digits_be, value_of_digits, DigitString};

use super::guard_digits;

/// A b-Niven number whose base-b representation contains `window`
/// contiguously. `variant_index` enlarges the digit-sum target, yielding
/// pairwise distinct members for the same window.
///
/// With `s` the digit sum of the window, pick the smallest `k` with
/// `b^k >= s` (plus `variant_index`), append a block `J` of digit sum
/// `b^k - s` (greedily: digits `b-1`, then one remainder digit), and close
/// with `k` zeros: the result has digit sum exactly `b^k` and ends in
/// `k` zeros, so the digit sum divides it.
pub fn niven_with_substring(window: &DigitString, variant_index: u64) -> Result<BigUint> {
    let base = window.base();
    if window.is_empty() {
        return Err(Error::EmptyDigits);
    }
    if window.digits()[0] == 0 {
        return Err(Error::Precondition(
            "the window must not start with a zero digit".into(),
        ));
    }
    let window_sum: u64 = window.digits().iter().map(|&d| u64::from(d)).sum();
    debug_assert!(window_sum >= 1);

    let mut exponent: u32 = 0;
    let mut target = BigUint::from(1u32);
    while target < BigUint::from(window_sum) {
        target *= base;
        exponent += 1;
    }
    for _ in 0..variant_index {
        target *= base;
        exponent += 1;
    }

    let deficit = &target - window_sum;
    let top = u64::from(base - 1);
    let full_digits: u64 = (&deficit / top)
        .try_into()
        .map_err(|_| Error::BudgetExceeded {
            required: deficit.clone(),
            budget: super::MAX_INSTANCE_DIGITS,
        })?;
    let remainder = (deficit % top).to_u32().expect("remainder below base");
    guard_digits(
        (window.len() as u64)
            .saturating_add(full_digits)
            .saturating_add(1 + u64::from(exponent)),
    )?;

    let mut digits = window.digits().to_vec();
    digits.extend(std::iter::repeat(base - 1).take(full_digits as usize));
    if remainder > 0 {
        digits.push(remainder);
    }
    digits.extend(std::iter::repeat(0).take(exponent as usize));
    let n = value_of_digits(&digits, base);

    let sum = digit_sum(&n, base)?;
    assert_eq!(sum, target, "padding block restores the digit-sum target");
    assert!((&n % &sum).is_zero(), "n ends in k zeros, so b^k divides it");
    assert!(
        contains_window(&digits_be(&n, base), window.digits()),
        "the window survives verbatim at the front"
    );
    Ok(n)
}

fn contains_window(haystack: &[u32], needle: &[u32]) -> bool {
    haystack
        .windows(needle.len())
        .any(|candidate| candidate == needle)
}
