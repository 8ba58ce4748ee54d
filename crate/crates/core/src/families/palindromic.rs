//! Solutions of the reversal-product equation `N*M = (N*M)^R`: the exact
//! `[1(b-1)] * [(b-1)^k]` product identity, the strided-repunit multiplier
//! family for palindromes, and the construction of a palindromic multiple
//! for every `n` not divisible by the base.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::classify::eqstar_check;
use crate::error::{Error, Result};
use crate::numtheory::{
    euler_phi, multiplicative_order, split_by_base, strided_repunit, BaseSplit,
};
use crate::radix::{check_base, digits_be, is_palindrome, value_of_digits};

use super::{
    guard_digits, params_of, params_of_u64, FamilyId, FamilyInstance, Semantics,
    CHECK_EQSTAR, CHECK_PRODUCT_IDENTITY, MAX_INSTANCE_DIGITS,
};

/// Both sides of `[1(b-1)]_b * [(b-1)^k]_b = [1(b-2)(b-1)^(k-2)(b-2)1]_b`,
/// evaluated independently so the caller can assert their equality.
///
/// The right-hand pattern only exists for `k >= 2`; smaller `k` is a
/// documented erratum and is rejected, not patched.
pub fn thm33_identity(base: u32, k: u64) -> Result<(BigUint, BigUint)> {
    check_base(base)?;
    if k < 2 {
        return Err(Error::Precondition(format!(
            "the palindrome pattern needs k >= 2 (k = {k} is the documented small-k erratum)"
        )));
    }
    guard_digits(k + 3)?;
    let top = base - 1;
    let lhs = value_of_digits(&[1, top], base) * value_of_digits(&vec![top; k as usize], base);

    let mut rhs_digits = vec![1, base - 2];
    rhs_digits.extend(std::iter::repeat(top).take((k - 2) as usize));
    rhs_digits.push(base - 2);
    rhs_digits.push(1);
    let rhs = value_of_digits(&rhs_digits, base);
    Ok((lhs, rhs))
}

/// [`thm33_identity`] packaged as a family instance (no multiplier: the
/// identity itself is the point).
pub fn thm33_instance(base: u32, k: u64) -> Result<FamilyInstance> {
    let (lhs, rhs) = thm33_identity(base, k)?;
    let mut instance = FamilyInstance::new(
        FamilyId::Thm33,
        params_of_u64(&[("b", u64::from(base)), ("k", k)]),
        rhs.clone(),
    );
    instance.record(CHECK_PRODUCT_IDENTITY, Semantics::Strict, lhs == rhs);
    Ok(instance)
}

/// For a palindrome `n` with `d` digits and any `ell >= d - 1`, `p >= 0`,
/// the multiplier `M = [(1(0)^ell)^p 1]_b` spreads `p + 1` copies of `n`
/// far enough apart that `n*M` is again a palindrome.
pub fn palindrome_multipliers(n: &BigUint, base: u32, ell: u64, p: u64) -> Result<BigUint> {
    check_base(base)?;
    if !is_palindrome(n, base)? {
        return Err(Error::Precondition(format!(
            "{n} is not a base-{base} palindrome"
        )));
    }
    let digit_count = digits_be(n, base).len() as u64;
    if ell < digit_count - 1 {
        return Err(Error::Precondition(format!(
            "ell = {ell} would overlap the copies; need at least {}",
            digit_count - 1
        )));
    }
    guard_digits((ell + 1).saturating_mul(p).saturating_add(digit_count))?;
    let multiplier = strided_repunit(base, ell + 1, p);
    assert!(
        eqstar_check(n, &multiplier, base)?,
        "non-overlapping copies of a palindrome form a palindrome"
    );
    Ok(multiplier)
}

/// The family instance view of [`palindrome_multipliers`].
pub fn palindrome_multipliers_instance(
    n: &BigUint,
    base: u32,
    ell: u64,
    p: u64,
) -> Result<FamilyInstance> {
    let multiplier = palindrome_multipliers(n, base, ell, p)?;
    let mut instance = FamilyInstance::new(
        FamilyId::PalMultFamily,
        params_of(&[
            ("n", n),
            ("ell", &BigUint::from(ell)),
            ("p", &BigUint::from(p)),
        ]),
        n.clone(),
    );
    instance.record(
        CHECK_EQSTAR,
        Semantics::Strict,
        eqstar_check(n, &multiplier, base)?,
    );
    instance.multiplier = Some(multiplier);
    Ok(instance)
}

/// How the repunit stride is chosen in [`palindromic_multiple`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PalindromeMode {
    /// Stride a multiple of φ(w), the corrected form of the source
    /// construction.
    PaperPhi,
    /// Stride a multiple of ord_w(b), the smallest exponent that works.
    MinimalOrder,
}

impl fmt::Display for PalindromeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PalindromeMode::PaperPhi => "paper",
            PalindromeMode::MinimalOrder => "minimal",
        })
    }
}

impl FromStr for PalindromeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" | "paper_phi" | "phi" => Ok(PalindromeMode::PaperPhi),
            "minimal" | "minimal_order" | "order" => Ok(PalindromeMode::MinimalOrder),
            other => Err(Error::Precondition(format!(
                "unknown palindrome mode {other:?} (want paper|minimal)"
            ))),
        }
    }
}

/// Full witness of the palindromic-multiple construction for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromicMultipleTrace {
    pub n: BigUint,
    pub base: u32,
    pub mode: PalindromeMode,
    /// `n = core * coprime` with `core` on the base's primes.
    pub split: BaseSplit,
    /// The seed palindrome built from the core (1 when the core is 1).
    pub seed: BigUint,
    pub seed_len: usize,
    /// Repunit stride; a multiple of φ(w) or ord_w(b), at least `seed_len`.
    pub stride: u64,
    /// Repunit term count minus one; `w` divides `count + 1`.
    pub count: u64,
    /// `Q = Σ b^(i*stride)` for `i = 0..=count`.
    pub repunit: BigUint,
    /// `seed * repunit`: a base-b palindrome divisible by `n`.
    pub palindrome: BigUint,
    /// `palindrome / n`.
    pub multiplier: BigUint,
}

/// Construct a base-b palindrome divisible by `n` (requires `b` not to
/// divide `n`; a trailing zero can never survive reversal).
///
/// Write `n = core * w` with `core` on the base's primes and `gcd(w, b) = 1`,
/// and let `m` be the largest prime multiplicity in the core. The seed
/// `P = [L^R (0)^(m - len(L)) L]_b` (with `L` the digit string of the core)
/// is a palindrome divisible by the core, because its low `m` digits end in
/// `L` and `core | b^m`. The repunit `Q` with stride `r` and count `q`
/// satisfies `Q = q + 1 (mod w)` whenever `b^r = 1 (mod w)`, so choosing
/// `w | q + 1` makes `w | Q`; with `r >= len(P)` the product `P*Q` lays
/// down non-overlapping copies of `P` and stays a palindrome.
pub fn palindromic_multiple(
    n: &BigUint,
    base: u32,
    mode: PalindromeMode,
) -> Result<PalindromicMultipleTrace> {
    check_base(base)?;
    if n.is_zero() {
        return Err(Error::ZeroInput("palindromic_multiple"));
    }
    if (n % base).is_zero() {
        return Err(Error::Precondition(format!(
            "{n} is divisible by the base; the reversal of any multiple has fewer digits"
        )));
    }
    let split = split_by_base(n, base)?;

    let (seed, seed_len) = if split.core.is_one() {
        (BigUint::one(), 1usize)
    } else {
        let core_digits = digits_be(&split.core, base);
        let pad = (split.max_beta as usize)
            .checked_sub(core_digits.len())
            .expect("core divides b^m and is coprime to b, so len(core) <= m");
        let mut seed_digits: Vec<u32> = core_digits.iter().rev().copied().collect();
        seed_digits.extend(std::iter::repeat(0).take(pad));
        seed_digits.extend_from_slice(&core_digits);
        let seed = value_of_digits(&seed_digits, base);
        (seed, seed_digits.len())
    };

    let w = &split.coprime;
    let (stride, count) = if w.is_one() {
        (seed_len as u64, 0u64)
    } else {
        let unit = match mode {
            PalindromeMode::PaperPhi => euler_phi(w)?,
            PalindromeMode::MinimalOrder => {
                multiplicative_order(&BigUint::from(base), w)?
            }
        };
        let multiples = (BigUint::from(seed_len) + &unit - 1u32) / &unit;
        let stride = unit * multiples.max(BigUint::one());
        let count = w - 1u32;
        let total_digits = &stride * &count + seed_len;
        if total_digits > BigUint::from(MAX_INSTANCE_DIGITS) {
            return Err(Error::BudgetExceeded {
                required: total_digits,
                budget: MAX_INSTANCE_DIGITS,
            });
        }
        (
            stride.to_u64().expect("stride bounded by digit guard"),
            count.to_u64().expect("count bounded by digit guard"),
        )
    };

    let repunit = strided_repunit(base, stride, count);
    let palindrome = &seed * &repunit;
    let (multiplier, remainder) = palindrome.div_rem(n);
    assert!(
        remainder.is_zero(),
        "core divides the seed and w divides the repunit"
    );
    assert!(
        is_palindrome(&palindrome, base)?,
        "copies of the seed palindrome at stride {stride} must read the same both ways"
    );

    Ok(PalindromicMultipleTrace {
        n: n.clone(),
        base,
        mode,
        split,
        seed,
        seed_len,
        stride,
        count,
        repunit,
        palindrome,
        multiplier,
    })
}
