//! The additive Ramanujan-Hardy constructions: alternating-digit blocks
//! whose half is a palindrome, and the zero-padded mirror families for
//! even bases.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::radix::{check_base, digit_sum, reversal, reversal_fixed_width, value_of_digits};

use super::{
    guard_digits, params_of_u64, repeat_block, FamilyId, FamilyInstance, Semantics,
    CHECK_ADDITIVE, CHECK_ADDITIVE_FIXED_WIDTH, CHECK_ADDITIVE_LITERAL, CHECK_CLOSED_FORM,
    CHECK_HALF_PALINDROME, CHECK_HALF_PRODUCT, CHECK_NIVEN, CHECK_NOT_NIVEN,
};

/// The alternating family `n = [(1 α)^k]_b` with `k = (1+α)^ℓ`, requiring
/// `b = 2+α (mod 2+2α)`. Then `s*M = (s*M)^R = n/2` for `M = (n/2)/s`,
/// making `n` both b-ARH and b-Niven.
pub fn thm1_family(base: u32, alpha: u32, ell: u32) -> Result<FamilyInstance> {
    check_base(base)?;
    if base == 2 {
        return Err(Error::Precondition(
            "the alternating construction gives no information for base 2".into(),
        ));
    }
    if alpha == 0 {
        return Err(Error::Precondition("alpha must be at least 1".into()));
    }
    if base < alpha + 1 {
        return Err(Error::Precondition(format!(
            "base {base} must be at least alpha + 1 = {}",
            alpha + 1
        )));
    }
    let modulus = 2 + 2 * alpha;
    let wanted = (2 + alpha) % modulus;
    if base % modulus != wanted {
        return Err(Error::Precondition(format!(
            "base {base} = {} (mod {modulus}), but the construction needs {wanted}",
            base % modulus
        )));
    }
    let k = u64::from(alpha + 1)
        .checked_pow(ell)
        .ok_or_else(|| Error::Precondition(format!("(1+alpha)^ell overflows for ell = {ell}")))?;
    guard_digits(k.saturating_mul(2))?;

    let digits = repeat_block(&[1, alpha], k);
    let n = value_of_digits(&digits, base);
    let s = digit_sum(&n, base)?;
    // eq for the digit sum: k blocks, each contributing 1 + alpha
    assert_eq!(s, BigUint::from(k) * (alpha + 1), "digit sum of [(1 a)^k]");
    assert!(n.is_even(), "congruence precondition forces n even");
    let half: BigUint = &n / 2u32;

    let mut instance = FamilyInstance::new(
        FamilyId::Thm1,
        params_of_u64(&[
            ("b", u64::from(base)),
            ("alpha", u64::from(alpha)),
            ("ell", u64::from(ell)),
            ("k", k),
        ]),
        n.clone(),
    );
    let (multiplier, remainder) = half.div_rem(&s);
    if remainder.is_zero() {
        let product = &s * &multiplier;
        instance.record(CHECK_HALF_PRODUCT, Semantics::Strict, product == half);
        instance.record(
            CHECK_HALF_PALINDROME,
            Semantics::Strict,
            reversal(&product, base)? == half,
        );
        instance.multiplier = Some(multiplier);
    } else {
        instance.record(CHECK_HALF_PRODUCT, Semantics::Strict, false);
        instance.record(CHECK_HALF_PALINDROME, Semantics::Strict, false);
    }
    instance.record(
        CHECK_NIVEN,
        Semantics::Strict,
        (&n % &s).is_zero(),
    );
    Ok(instance)
}

/// The every-base additive family: `alpha = b - 2` satisfies the
/// congruence of [`thm1_family`] automatically for `b >= 3`, and base 2 is
/// covered by the two-digit family of [`final_a`]. The multiplier is
/// cross-checked against its closed form
/// `(b^(2(b-1)^ℓ) - 1) / ((b-1)^ℓ (b²-1))` for `b >= 3`.
pub fn prop1_family(base: u32, ell: u32) -> Result<FamilyInstance> {
    check_base(base)?;
    if base == 2 {
        let inner = final_a(2, 1, u64::from(ell))?;
        let mut instance = FamilyInstance::new(
            FamilyId::Prop1,
            params_of_u64(&[("b", 2), ("ell", u64::from(ell)), ("a", 1), ("k", u64::from(ell))]),
            inner.n.clone(),
        );
        instance.multiplier = inner.multiplier.clone();
        instance.identities = inner.identities.clone();
        return Ok(instance);
    }

    let inner = thm1_family(base, base - 2, ell)?;
    let mut instance = FamilyInstance::new(FamilyId::Prop1, inner.params.clone(), inner.n.clone());
    instance.multiplier = inner.multiplier.clone();
    instance.identities = inner.identities.clone();

    let weight = u64::from(base - 1)
        .checked_pow(ell)
        .ok_or_else(|| Error::Precondition(format!("(b-1)^ell overflows for ell = {ell}")))?;
    let exponent = u32::try_from(2 * weight)
        .map_err(|_| Error::Precondition(format!("closed-form exponent too large at ell = {ell}")))?;
    let numerator = BigUint::from(base).pow(exponent) - 1u32;
    let denominator = BigUint::from(weight) * (u64::from(base) * u64::from(base) - 1);
    let (closed, remainder) = numerator.div_rem(&denominator);
    let matches =
        remainder.is_zero() && instance.multiplier.as_ref() == Some(&closed);
    instance.record(CHECK_CLOSED_FORM, Semantics::Strict, matches);
    Ok(instance)
}

/// `n = [a (0)^k a]_b` for even `b`: adding `[a (0)^(k+1)]_b` to its own
/// reversal (which is just `a`) reassembles `n`, so `n` is b-ARH with
/// `M = [a (0)^(k+1)]_b / 2a`, yet `n` is never b-Niven.
pub fn final_a(base: u32, a: u32, k: u64) -> Result<FamilyInstance> {
    check_base(base)?;
    if base % 2 != 0 {
        return Err(Error::Precondition(format!(
            "base must be even, got {base}"
        )));
    }
    if a == 0 || a >= base {
        return Err(Error::Precondition(format!(
            "leading digit a must be in 1..={}, got {a}",
            base - 1
        )));
    }
    guard_digits(k.saturating_add(2))?;

    let mut digits = vec![a];
    digits.extend(std::iter::repeat(0).take(k as usize));
    digits.push(a);
    let n = value_of_digits(&digits, base);
    let s = digit_sum(&n, base)?;
    assert_eq!(s, BigUint::from(2 * a), "digit sum of [a (0)^k a]");

    // a * b^(k+1), always divisible by 2a because b is even
    let numerator = BigUint::from(a) * power(base, k + 1);
    let (multiplier, remainder) = numerator.div_rem(&(BigUint::from(2 * a)));
    assert!(remainder.is_zero(), "a*b^(k+1) is even for even b");

    let mut instance = FamilyInstance::new(
        FamilyId::FinalA,
        params_of_u64(&[("b", u64::from(base)), ("a", u64::from(a)), ("k", k)]),
        n.clone(),
    );
    let product = &s * &multiplier;
    let identity = &product + reversal(&product, base)? == n;
    instance.record(CHECK_ADDITIVE, Semantics::Strict, identity);
    instance.record(
        CHECK_NOT_NIVEN,
        Semantics::Strict,
        !(&n % &s).is_zero(),
    );
    instance.multiplier = Some(multiplier);
    Ok(instance)
}

/// `n = [(1(0)^k)^b 0 ((0)^k 1)^b]_b` for even `b`. The additive identity
/// holds with `M = [(1(0)^k)^b (0)^(kb+b)]_b / 2`; the multiplier as
/// stated in the source (zero run `kb`) does not satisfy it, and that
/// failing variant is recorded alongside the corrected one.
pub fn final_b(base: u32, k: u64) -> Result<FamilyInstance> {
    check_base(base)?;
    if base % 2 != 0 {
        return Err(Error::Precondition(format!(
            "base must be even, got {base}"
        )));
    }
    let b64 = u64::from(base);
    guard_digits(2 * b64.saturating_mul(k + 1) + 1)?;

    let mut leading_block = vec![1u32];
    leading_block.extend(std::iter::repeat(0).take(k as usize));
    let mut trailing_block = vec![0u32; k as usize];
    trailing_block.push(1);

    let mut digits = repeat_block(&leading_block, b64);
    digits.push(0);
    digits.extend(repeat_block(&trailing_block, b64));
    let n = value_of_digits(&digits, base);
    let s = digit_sum(&n, base)?;
    assert_eq!(s, BigUint::from(2 * base), "digit sum of the mirror block");

    let mut instance = FamilyInstance::new(
        FamilyId::FinalB,
        params_of_u64(&[("b", b64), ("k", k)]),
        n.clone(),
    );

    // corrected zero run: k*b + b
    let corrected = mirror_multiplier(&leading_block, b64, k * b64 + b64, base);
    let (multiplier, remainder) = corrected.div_rem(&BigUint::from(2u32));
    assert!(remainder.is_zero(), "corrected numerator is even for even b");
    let product = &s * &multiplier;
    instance.record(
        CHECK_ADDITIVE,
        Semantics::Strict,
        &product + reversal(&product, base)? == n,
    );
    instance.record(CHECK_NOT_NIVEN, Semantics::Strict, !(&n % &s).is_zero());
    instance.multiplier = Some(multiplier);

    // zero run k*b as stated; may not even be an integer after halving
    let literal = mirror_multiplier(&leading_block, b64, k * b64, base);
    let literal_holds = if literal.is_even() {
        let literal_product = &s * (literal / 2u32);
        &literal_product + reversal(&literal_product, base)? == n
    } else {
        false
    };
    instance.record(CHECK_ADDITIVE_LITERAL, Semantics::Strict, literal_holds);
    Ok(instance)
}

/// `n = [((0)^k 1)^b 0 (1(0)^k)^b]_b` for even `b` (leading zeros vanish).
/// The candidate product `X = [((0)^k 1)^b (0)^(b(k+1)+1)]_b` completes the
/// additive identity only under fixed-width reversal once `k >= 1`; both
/// readings are evaluated and recorded, as is the observed Niven status.
pub fn final_c(base: u32, k: u64) -> Result<FamilyInstance> {
    check_base(base)?;
    if base % 2 != 0 {
        return Err(Error::Precondition(format!(
            "base must be even, got {base}"
        )));
    }
    let b64 = u64::from(base);
    let width = 2 * b64.saturating_mul(k + 1) + 1;
    guard_digits(width)?;

    let mut zeros_then_one = vec![0u32; k as usize];
    zeros_then_one.push(1);
    let mut one_then_zeros = vec![1u32];
    one_then_zeros.extend(std::iter::repeat(0).take(k as usize));

    let mut digits = repeat_block(&zeros_then_one, b64);
    digits.push(0);
    digits.extend(repeat_block(&one_then_zeros, b64));
    let n = value_of_digits(&digits, base);
    let s = digit_sum(&n, base)?;
    assert_eq!(s, BigUint::from(2 * base), "digit sum of the mirror block");

    let mut x_digits = repeat_block(&zeros_then_one, b64);
    x_digits.extend(std::iter::repeat(0).take((b64 * (k + 1) + 1) as usize));
    let x = value_of_digits(&x_digits, base);
    let (multiplier, remainder) = x.div_rem(&s);
    assert!(remainder.is_zero(), "X carries a factor b^2, hence 2b");

    let mut instance = FamilyInstance::new(
        FamilyId::FinalC,
        params_of_u64(&[("b", b64), ("k", k)]),
        n.clone(),
    );
    instance.record(
        CHECK_ADDITIVE,
        Semantics::Strict,
        &x + reversal(&x, base)? == n,
    );
    instance.record(
        CHECK_ADDITIVE_FIXED_WIDTH,
        Semantics::FixedWidth,
        &x + reversal_fixed_width(&x, base, width as usize)? == n,
    );
    instance.record(CHECK_NIVEN, Semantics::Strict, (&n % &s).is_zero());
    instance.multiplier = Some(multiplier);
    Ok(instance)
}

fn mirror_multiplier(leading_block: &[u32], copies: u64, zero_run: u64, base: u32) -> BigUint {
    let mut digits = repeat_block(leading_block, copies);
    digits.extend(std::iter::repeat(0).take(zero_run as usize));
    value_of_digits(&digits, base)
}

fn power(base: u32, exponent: u64) -> BigUint {
    BigUint::from(base).pow(u32::try_from(exponent).expect("exponent fits u32"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u128) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn thm1_spot_values() {
        let inst = thm1_family(10, 2, 1).unwrap();
        assert_eq!(inst.n, big(121212));
        assert_eq!(inst.multiplier, Some(big(6734)));
        assert!(inst.identities.iter().all(|c| c.holds));

        let inst = thm1_family(3, 1, 1).unwrap();
        assert_eq!(inst.n, big(40));
        assert_eq!(inst.multiplier, Some(big(5)));
        assert!(inst.identities.iter().all(|c| c.holds));
    }

    #[test]
    fn thm1_rejects_bad_congruence() {
        // 8 = 2 (mod 6), but the construction needs 4
        let err = thm1_family(8, 2, 0).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("(mod 6)")), "{err}");
        assert!(thm1_family(2, 1, 0).is_err());
        assert!(thm1_family(5, 0, 0).is_err());
        assert!(thm1_family(3, 4, 0).is_err());
    }

    #[test]
    fn prop1_spot_values() {
        assert_eq!(prop1_family(3, 1).unwrap().multiplier, Some(big(5)));

        let inst = prop1_family(10, 0).unwrap();
        assert_eq!(inst.n, big(18));
        assert_eq!(inst.multiplier, Some(big(1)));
        assert!(inst.holds(CHECK_CLOSED_FORM));

        let inst = prop1_family(2, 3).unwrap();
        assert_eq!(inst.n, big(17));
        assert_eq!(inst.multiplier, Some(big(8)));
    }

    #[test]
    fn final_a_spot_values() {
        let inst = final_a(10, 3, 2).unwrap();
        assert_eq!(inst.n, big(3003));
        assert_eq!(inst.multiplier, Some(big(500)));
        assert!(inst.holds(CHECK_ADDITIVE));
        assert!(inst.holds(CHECK_NOT_NIVEN));

        let inst = final_a(2, 1, 0).unwrap();
        assert_eq!(inst.n, big(3));
        assert_eq!(inst.multiplier, Some(big(1)));
        assert!(inst.holds(CHECK_ADDITIVE));

        assert!(final_a(9, 1, 1).is_err());
        assert!(final_a(10, 0, 1).is_err());
        assert!(final_a(10, 10, 1).is_err());
    }

    #[test]
    fn final_b_spot_values() {
        let inst = final_b(2, 1).unwrap();
        assert_eq!(inst.n, big(325));
        assert_eq!(inst.multiplier, Some(big(80)));
        assert!(inst.holds(CHECK_ADDITIVE));
        assert!(inst.holds(CHECK_NOT_NIVEN));
        assert!(!inst.holds(CHECK_ADDITIVE_LITERAL));

        // the k = 0 probe: the corrected zero run already works there
        let inst = final_b(2, 0).unwrap();
        assert_eq!(inst.n, big(27));
        assert_eq!(inst.multiplier, Some(big(6)));
        assert!(inst.holds(CHECK_ADDITIVE));
        assert!(!inst.holds(CHECK_ADDITIVE_LITERAL));

        let inst = final_b(4, 1).unwrap();
        assert!(inst.holds(CHECK_ADDITIVE));
        assert!(final_b(9, 1).is_err());
    }

    #[test]
    fn final_c_spot_values() {
        let inst = final_c(2, 1).unwrap();
        assert_eq!(inst.n, big(170));
        assert!(!inst.holds(CHECK_NIVEN));
        assert!(!inst.holds(CHECK_ADDITIVE));
        assert!(inst.holds(CHECK_ADDITIVE_FIXED_WIDTH));

        let inst = final_c(2, 2).unwrap();
        assert_eq!(inst.n, big(1188));
        assert!(inst.holds(CHECK_NIVEN));
        assert!(inst.holds(CHECK_ADDITIVE_FIXED_WIDTH));
        // X = 1152 = s * 288 completes 1152 + 36 = 1188 under fixed width
        assert_eq!(inst.multiplier, Some(big(288)));

        for base in [2u32, 4, 10] {
            let inst = final_c(base, 0).unwrap();
            assert!(inst.holds(CHECK_ADDITIVE), "strict holds at k = 0");
        }
        assert!(final_c(7, 1).is_err());
    }
}
