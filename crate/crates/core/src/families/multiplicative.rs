//! The multiplicative Ramanujan-Hardy constructions: numbers of the form
//! `α * α^R` whose digit sum divides `α`, plus the trivial powers-of-b
//! family.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::radix::{check_base, digit_sum, reversal, value_of_digits};

use super::{
    guard_digits, params_of_u64, FamilyId, FamilyInstance, Semantics, CHECK_CLOSED_FORM,
    CHECK_MULTIPLICATIVE,
};

/// `n = α_k * (α_k)^R` is b-MRH for `α_k = [1 (0)^k (b-2)]_b` when `b >= 4`
/// is even with `b = 1 (mod 3)` and `k = 1 (mod 3)`, and for
/// `α_k = [1 (0)^k 1]_2` when `b = 2` and `k >= 2` is even. The multiplier
/// `α_k / s_b(n)` is cross-checked against its closed form.
pub fn final2(base: u32, k: u64) -> Result<FamilyInstance> {
    check_base(base)?;
    let family = if base == 2 {
        if k < 2 || k % 2 != 0 {
            return Err(Error::Precondition(format!(
                "base 2 needs an even k >= 2, got {k}"
            )));
        }
        FamilyId::Final2B
    } else {
        if base < 4 || base % 2 != 0 {
            return Err(Error::Precondition(format!(
                "base must be even and at least 4, got {base}"
            )));
        }
        if base % 3 != 1 {
            return Err(Error::Precondition(format!(
                "base {base} = {} (mod 3), but the construction needs 1",
                base % 3
            )));
        }
        if k < 1 || k % 3 != 1 {
            return Err(Error::Precondition(format!(
                "k = {k} violates k >= 1 with k = 1 (mod 3)"
            )));
        }
        FamilyId::Final2A
    };
    let tail = if base == 2 { 1 } else { base - 2 };
    let alpha = seed_value(1, k, tail, base)?;

    let mut instance = build_product_instance(family, base, k, &alpha)?;
    instance
        .params
        .extend(params_of_u64(&[("b", u64::from(base)), ("k", k)]));

    // closed forms from the explicit multiplier sequences
    let b_big = BigUint::from(base);
    let exponent = u32::try_from(k + 1)
        .map_err(|_| Error::Precondition(format!("k = {k} too large for the closed form")))?;
    let (numerator, denominator) = if base == 2 {
        (b_big.pow(exponent) + 1u32, BigUint::from(3u32))
    } else if base == 4 {
        (b_big.pow(exponent) + 2u32, BigUint::from(6u32))
    } else {
        (
            b_big.pow(exponent) + (base - 2),
            BigUint::from(3 * (base - 1)),
        )
    };
    let (closed, remainder) = numerator.div_rem(&denominator);
    instance.record(
        CHECK_CLOSED_FORM,
        Semantics::Strict,
        remainder.is_zero() && instance.multiplier.as_ref() == Some(&closed),
    );
    Ok(instance)
}

/// The four base-10 seed patterns `[1(0)^k 8]`, `[7(0)^k 2]`, `[5(0)^k 4]`,
/// `[4(0)^k 5]`; each `α * α^R` is a 10-MRH number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mrh10Variant {
    OneEight,
    SevenTwo,
    FiveFour,
    FourFive,
}

impl Mrh10Variant {
    pub const ALL: [Mrh10Variant; 4] = [
        Mrh10Variant::OneEight,
        Mrh10Variant::SevenTwo,
        Mrh10Variant::FiveFour,
        Mrh10Variant::FourFive,
    ];

    pub fn lead(self) -> u32 {
        match self {
            Mrh10Variant::OneEight => 1,
            Mrh10Variant::SevenTwo => 7,
            Mrh10Variant::FiveFour => 5,
            Mrh10Variant::FourFive => 4,
        }
    }

    pub fn tail(self) -> u32 {
        match self {
            Mrh10Variant::OneEight => 8,
            Mrh10Variant::SevenTwo => 2,
            Mrh10Variant::FiveFour => 4,
            Mrh10Variant::FourFive => 5,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mrh10Variant::OneEight => "1_8",
            Mrh10Variant::SevenTwo => "7_2",
            Mrh10Variant::FiveFour => "5_4",
            Mrh10Variant::FourFive => "4_5",
        }
    }
}

impl fmt::Display for Mrh10Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mrh10Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mrh10Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown 10-MRH variant {s:?}")))
    }
}

/// One member of a 10-MRH seed family; variant `1_8` additionally needs
/// `k = 1 (mod 3)` (it is the base-10 case of [`final2`]).
pub fn mrh10(variant: Mrh10Variant, k: u64) -> Result<FamilyInstance> {
    if k < 1 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if variant == Mrh10Variant::OneEight && k % 3 != 1 {
        return Err(Error::Precondition(format!(
            "variant 1_8 needs k = 1 (mod 3), got k = {k}"
        )));
    }
    let alpha = seed_value(variant.lead(), k, variant.tail(), 10)?;
    let mut instance = build_product_instance(FamilyId::Mrh10, 10, k, &alpha)?;
    instance.params.extend(params_of_u64(&[
        ("k", k),
        ("lead", u64::from(variant.lead())),
        ("tail", u64::from(variant.tail())),
    ]));
    Ok(instance)
}

/// The trivial family `n = b^k`: digit sum 1, multiplier `b^k` itself,
/// since `b^k * (b^k)^R = b^k * 1`.
pub fn trivial_mrh(base: u32, k: u32) -> Result<FamilyInstance> {
    check_base(base)?;
    let n = BigUint::from(base).pow(k);
    let s = digit_sum(&n, base)?;
    assert_eq!(s, BigUint::from(1u32), "digit sum of a base power");
    let mut instance = FamilyInstance::new(
        FamilyId::TrivialMrh,
        params_of_u64(&[("b", u64::from(base)), ("k", u64::from(k))]),
        n.clone(),
    );
    let product = &s * &n;
    instance.record(
        CHECK_MULTIPLICATIVE,
        Semantics::Strict,
        &product * reversal(&product, base)? == n,
    );
    instance.multiplier = Some(n);
    Ok(instance)
}

fn seed_value(lead: u32, zeros: u64, tail: u32, base: u32) -> Result<BigUint> {
    guard_digits(zeros.saturating_add(2))?;
    let mut digits = vec![lead];
    digits.extend(std::iter::repeat(0).take(zeros as usize));
    digits.push(tail);
    Ok(value_of_digits(&digits, base))
}

/// Common tail of the `α * α^R` constructions: form `n`, divide `α` by the
/// digit sum of `n` and verify the multiplicative identity exactly.
fn build_product_instance(
    family: FamilyId,
    base: u32,
    _k: u64,
    alpha: &BigUint,
) -> Result<FamilyInstance> {
    let alpha_reversed = reversal(alpha, base)?;
    let n = alpha * &alpha_reversed;
    let s = digit_sum(&n, base)?;
    let mut instance = FamilyInstance::new(family, Default::default(), n.clone());
    let (multiplier, remainder) = alpha.div_rem(&s);
    if remainder.is_zero() {
        let product = &s * &multiplier;
        instance.record(
            CHECK_MULTIPLICATIVE,
            Semantics::Strict,
            &product * reversal(&product, base)? == n,
        );
        instance.multiplier = Some(multiplier);
    } else {
        // digit sum does not divide the seed: the family claim fails here
        instance.record(CHECK_MULTIPLICATIVE, Semantics::Strict, false);
    }
    Ok(instance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u128) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn final2_spot_values() {
        let inst = final2(10, 1).unwrap();
        assert_eq!(inst.family, FamilyId::Final2A);
        assert_eq!(inst.n, big(86508));
        assert_eq!(inst.multiplier, Some(big(4)));
        assert!(inst.holds(CHECK_MULTIPLICATIVE));
        assert!(inst.holds(CHECK_CLOSED_FORM));

        let inst = final2(4, 1).unwrap();
        assert_eq!(inst.n, big(594));
        assert_eq!(inst.multiplier, Some(big(3)));
        assert!(inst.holds(CHECK_CLOSED_FORM));

        let inst = final2(2, 2).unwrap();
        assert_eq!(inst.family, FamilyId::Final2B);
        assert_eq!(inst.n, big(81));
        assert_eq!(inst.multiplier, Some(big(3)));
        assert!(inst.holds(CHECK_CLOSED_FORM));
    }

    #[test]
    fn final2_rejects_bad_parameters() {
        assert!(final2(2, 3).is_err()); // odd k for base 2
        assert!(final2(2, 0).is_err());
        assert!(final2(6, 1).is_err()); // 6 = 0 (mod 3)
        assert!(final2(7, 1).is_err()); // odd base
        assert!(final2(10, 2).is_err()); // k = 2 (mod 3)
    }

    #[test]
    fn mrh10_spot_values() {
        let inst = mrh10(Mrh10Variant::SevenTwo, 1).unwrap();
        assert_eq!(inst.n, big(145314));
        assert_eq!(inst.multiplier, Some(big(39)));
        assert!(inst.holds(CHECK_MULTIPLICATIVE));

        let inst = mrh10(Mrh10Variant::FiveFour, 1).unwrap();
        assert_eq!(inst.n, big(204120));
        assert_eq!(inst.multiplier, Some(big(56)));

        let inst = mrh10(Mrh10Variant::FourFive, 1).unwrap();
        assert_eq!(inst.n, big(204120));
        assert_eq!(inst.multiplier, Some(big(45)));

        assert!(mrh10(Mrh10Variant::OneEight, 2).is_err());
        assert!(mrh10(Mrh10Variant::SevenTwo, 0).is_err());
    }

    #[test]
    fn trivial_family() {
        let inst = trivial_mrh(10, 2).unwrap();
        assert_eq!(inst.n, big(100));
        assert_eq!(inst.multiplier, Some(big(100)));
        assert!(inst.holds(CHECK_MULTIPLICATIVE));

        let inst = trivial_mrh(2, 0).unwrap();
        assert_eq!(inst.n, big(1));
        assert_eq!(inst.multiplier, Some(big(1)));

        let inst = trivial_mrh(2, 5).unwrap();
        assert_eq!(inst.n, big(32));
        assert_eq!(inst.multiplier, Some(big(32)));
        assert!(inst.holds(CHECK_MULTIPLICATIVE));
    }

    #[test]
    fn variant_round_trip() {
        for v in Mrh10Variant::ALL {
            assert_eq!(v.as_str().parse::<Mrh10Variant>().unwrap(), v);
        }
        assert!("9_9".parse::<Mrh10Variant>().is_err());
    }
}
