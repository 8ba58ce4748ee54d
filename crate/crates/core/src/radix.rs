//! Exact digit-level arithmetic in an arbitrary base: conversions between
//! naturals and digit strings, digit sums, reversals, palindrome tests,
//! concatenation and repetition.
//!
//! Reversal is *strict* by default: leading zeros produced by reversing a
//! number with trailing zeros vanish (`1200 -> 21` in base 10). The
//! width-preserving variant is a separate operation,
//! [`reversal_fixed_width`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MIN_BASE: u32 = 2;
pub const MAX_BASE: u32 = 1 << 16;

pub(crate) fn check_base(base: u32) -> Result<()> {
    if (MIN_BASE..=MAX_BASE).contains(&base) {
        Ok(())
    } else {
        Err(Error::InvalidBase(base))
    }
}

/// A base-annotated digit sequence, most significant digit first.
///
/// The canonical form has no leading zero unless the string is exactly "0".
/// Non-canonical strings (leading zeros, even emptiness) are legal as
/// intermediate results of pattern expansion; they are canonicalized before
/// numeric interpretation, and an empty string has no numeric value at all.
///
/// The textual form is decimal digits joined by `.` with an `@base` suffix,
/// e.g. `1.0.0.8@10`, which stays unambiguous for any base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    base: u32,
    digits: Vec<u32>,
}

impl DigitString {
    /// Build from explicit digits, validating every digit against the base.
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        check_base(base)?;
        for (position, &digit) in digits.iter().enumerate() {
            if digit >= base {
                return Err(Error::DigitOutOfRange {
                    position,
                    digit,
                    base,
                });
            }
        }
        Ok(DigitString { base, digits })
    }

    /// The canonical representation of zero: the single digit "0".
    pub fn zero(base: u32) -> Result<Self> {
        DigitString::new(base, vec![0])
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// No leading zero, except the one-digit string "0". Empty strings are
    /// not canonical.
    pub fn is_canonical(&self) -> bool {
        match self.digits.len() {
            0 => false,
            1 => true,
            _ => self.digits[0] != 0,
        }
    }

    /// Drop leading zeros; an all-zero or singleton-zero string becomes "0".
    /// The empty string stays empty (it has no numeric reading to preserve).
    pub fn canonicalize(&self) -> DigitString {
        if self.digits.is_empty() {
            return self.clone();
        }
        let first_nonzero = self.digits.iter().position(|&d| d != 0);
        let digits = match first_nonzero {
            Some(i) => self.digits[i..].to_vec(),
            None => vec![0],
        };
        DigitString {
            base: self.base,
            digits,
        }
    }

    /// Numeric value of the string; leading zeros contribute nothing.
    /// Errors on the empty string.
    pub fn value(&self) -> Result<BigUint> {
        if self.digits.is_empty() {
            return Err(Error::EmptyDigits);
        }
        Ok(value_of_digits(&self.digits, self.base))
    }

    pub fn from_natural(n: &BigUint, base: u32) -> Result<Self> {
        check_base(base)?;
        Ok(DigitString {
            base,
            digits: digits_be(n, base),
        })
    }

    /// Digit-level palindrome test on the string as written (leading zeros
    /// count). For the numeric notion use [`is_palindrome`].
    pub fn is_palindrome_string(&self) -> bool {
        let d = &self.digits;
        d.iter().eq(d.iter().rev())
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "@{}", self.base)
    }
}

impl FromStr for DigitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digit_part, base_part) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::Precondition(format!("missing '@base' suffix in {s:?}")))?;
        let base: u32 = base_part
            .trim()
            .parse()
            .map_err(|_| Error::Precondition(format!("invalid base {base_part:?}")))?;
        check_base(base)?;
        let mut digits = Vec::new();
        for (position, token) in digit_part.split('.').enumerate() {
            let token = token.trim();
            if token.is_empty() && digit_part.trim().is_empty() {
                break; // "@10" denotes the empty intermediate string
            }
            let digit: u32 = token
                .parse()
                .map_err(|_| Error::Precondition(format!("invalid digit token {token:?}")))?;
            if digit >= base {
                return Err(Error::DigitOutOfRange {
                    position,
                    digit,
                    base,
                });
            }
            digits.push(digit);
        }
        Ok(DigitString { base, digits })
    }
}

/// Most-significant-first digits of `n`; `[0]` for zero.
pub(crate) fn digits_be(n: &BigUint, base: u32) -> Vec<u32> {
    if let Some(x) = n.to_u64() {
        return digits_be_u64(x, base);
    }
    if base <= 256 {
        // num-bigint's chunked conversion beats a hand-rolled divmod loop
        return n.to_radix_be(base).into_iter().map(u32::from).collect();
    }
    // Wide bases: peel three digits per division so the loop count stays low.
    let chunk = u64::from(base) * u64::from(base) * u64::from(base);
    let big_chunk = BigUint::from(chunk);
    let mut rest = n.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (q, r) = num_integer::Integer::div_rem(&rest, &big_chunk);
        let mut r = r.to_u64().expect("remainder below u64 chunk");
        for _ in 0..3 {
            digits.push((r % u64::from(base)) as u32);
            r /= u64::from(base);
        }
        rest = q;
    }
    while digits.len() > 1 && digits.last() == Some(&0) {
        digits.pop();
    }
    digits.reverse();
    digits
}

fn digits_be_u64(mut x: u64, base: u32) -> Vec<u32> {
    if x == 0 {
        return vec![0];
    }
    let b = u64::from(base);
    let mut digits = Vec::new();
    while x > 0 {
        digits.push((x % b) as u32);
        x /= b;
    }
    digits.reverse();
    digits
}

/// Horner evaluation of a most-significant-first digit slice.
pub(crate) fn value_of_digits(digits: &[u32], base: u32) -> BigUint {
    // Accumulate in u128 while the value still fits; spill to BigUint after.
    let b = u128::from(base);
    let mut small: u128 = 0;
    let mut i = 0;
    while i < digits.len() {
        let next = small
            .checked_mul(b)
            .and_then(|v| v.checked_add(u128::from(digits[i])));
        match next {
            Some(v) => {
                small = v;
                i += 1;
            }
            None => break,
        }
    }
    let mut acc = BigUint::from(small);
    let big_b = BigUint::from(base);
    for &d in &digits[i..] {
        acc = acc * &big_b + d;
    }
    acc
}

/// Value of a digit string: `to_natural("1.2"@3) = 5`.
pub fn to_natural(ds: &DigitString) -> Result<BigUint> {
    ds.value()
}

/// Canonical digit string of `n` in the given base.
pub fn from_natural(n: &BigUint, base: u32) -> Result<DigitString> {
    DigitString::from_natural(n, base)
}

/// Sum of the base-`base` digits of `n`.
pub fn digit_sum(n: &BigUint, base: u32) -> Result<BigUint> {
    check_base(base)?;
    if let Some(mut x) = n.to_u64() {
        let b = u64::from(base);
        let mut sum: u64 = 0;
        while x > 0 {
            sum += x % b;
            x /= b;
        }
        return Ok(BigUint::from(sum));
    }
    let sum: u64 = digits_be(n, base).iter().map(|&d| u64::from(d)).sum();
    Ok(BigUint::from(sum))
}

/// Strict reversal: write the digits of `n` in reverse order and read the
/// value back; trailing zeros of `n` become leading zeros and vanish.
pub fn reversal(n: &BigUint, base: u32) -> Result<BigUint> {
    check_base(base)?;
    if let Some(x) = n.to_u64() {
        // base^(digit count) < base * 2^64 <= 2^80, so u128 cannot overflow
        let b = u128::from(base);
        let mut x = u128::from(x);
        let mut acc: u128 = 0;
        while x > 0 {
            acc = acc * b + x % b;
            x /= b;
        }
        return Ok(BigUint::from(acc));
    }
    let mut digits = digits_be(n, base);
    digits.reverse();
    Ok(value_of_digits(&digits, base))
}

/// Reversal of the zero-padded, `width`-digit representation of `n`.
/// Padding zeros become trailing zeros of the result, so this preserves the
/// information a strict reversal drops.
pub fn reversal_fixed_width(n: &BigUint, base: u32, width: usize) -> Result<BigUint> {
    check_base(base)?;
    let mut digits = digits_be(n, base);
    if digits == [0] {
        digits.clear(); // zero needs no digit before padding
    }
    if width < digits.len() {
        return Err(Error::WidthTooSmall {
            width,
            needed: digits.len(),
        });
    }
    let mut padded = vec![0u32; width - digits.len()];
    padded.extend_from_slice(&digits);
    padded.reverse();
    Ok(value_of_digits(&padded, base))
}

/// True iff `n` reads the same forwards and backwards in the given base.
pub fn is_palindrome(n: &BigUint, base: u32) -> Result<bool> {
    check_base(base)?;
    let digits = digits_be(n, base);
    Ok(digits.iter().eq(digits.iter().rev()))
}

/// Digit-level concatenation; all parts must share one base.
pub fn concat(parts: &[DigitString]) -> Result<DigitString> {
    let Some(first) = parts.first() else {
        return Err(Error::EmptyDigits);
    };
    let base = first.base();
    let mut digits = Vec::new();
    for part in parts {
        if part.base() != base {
            return Err(Error::BaseMismatch(base, part.base()));
        }
        digits.extend_from_slice(part.digits());
    }
    Ok(DigitString { base, digits })
}

/// The block `x` repeated `k` times. `k = 0` yields the empty string, which
/// is valid only as an intermediate: interpreting it numerically errors.
pub fn repeat(x: &DigitString, k: u64) -> DigitString {
    let k = usize::try_from(k).expect("repetition count fits usize");
    let mut digits = Vec::with_capacity(x.len() * k);
    for _ in 0..k {
        digits.extend_from_slice(x.digits());
    }
    DigitString {
        base: x.base(),
        digits,
    }
}
