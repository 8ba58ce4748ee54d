//! Elementary number-theoretic services: trial-division factorization,
//! Euler's totient, multiplicative order, splitting off the part of a
//! number supported on the base's primes, and strided repunits.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::radix::check_base;

/// Default factorization cap: inputs up to 10^12 factor completely; larger
/// smooth inputs still succeed, but a rough cofactor beyond the cap is
/// reported as [`Error::FactorCapExceeded`] rather than searched forever.
pub const DEFAULT_FACTOR_CAP: u64 = 1_000_000_000_000;

/// An exact prime factorization, `prime -> exponent`. The empty map is 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiply the factorization back together.
    pub fn product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// All divisors in ascending order.
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::one()];
        for (&p, &e) in &self.factors {
            let prime = BigUint::from(p);
            let mut extended = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in &out {
                let mut power = d.clone();
                extended.push(power.clone());
                for _ in 0..e {
                    power *= &prime;
                    extended.push(power.clone());
                }
            }
            out = extended;
        }
        out.sort();
        out
    }
}

impl FromIterator<(u64, u32)> for Factorization {
    fn from_iter<I: IntoIterator<Item = (u64, u32)>>(iter: I) -> Self {
        Factorization {
            factors: iter.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }
}

/// Trial-division factorization under the default cap.
pub fn factorize(n: &BigUint) -> Result<Factorization> {
    factorize_with_cap(n, DEFAULT_FACTOR_CAP)
}

/// Trial division by 2, 3, then 6k±1. Any cofactor that survives all
/// divisors up to √cap and still exceeds the cap cannot be certified prime
/// within budget, so the call fails rather than guessing.
pub fn factorize_with_cap(n: &BigUint, cap: u64) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput("factorization"));
    }
    let limit = cap.isqrt();
    let mut factors = BTreeMap::new();
    let mut rest = n.clone();
    let mut d: u64 = 2;
    loop {
        if rest.is_one() {
            return Ok(Factorization { factors });
        }
        if let Some(small) = rest.to_u64() {
            factorize_u64_into(small, d, limit, cap, &mut factors)?;
            return Ok(Factorization { factors });
        }
        if d > limit {
            // a cofactor too big for u64 is far beyond any u64 cap
            return Err(Error::FactorCapExceeded {
                remaining: rest,
                cap,
            });
        }
        let e = strip_factor(&mut rest, d);
        if e > 0 {
            factors.insert(d, e);
        }
        d = next_divisor(d);
    }
}

fn factorize_u64_into(
    mut m: u64,
    mut d: u64,
    limit: u64,
    cap: u64,
    factors: &mut BTreeMap<u64, u32>,
) -> Result<()> {
    while d <= limit && u128::from(d) * u128::from(d) <= u128::from(m) {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            factors.insert(d, e);
        }
        d = next_divisor(d);
    }
    if m > 1 {
        // prime if certified by the sqrt bound, or if m <= cap (any composite
        // m <= cap has a factor <= sqrt(cap) = limit, all of which were tried)
        if u128::from(d) * u128::from(d) > u128::from(m) || m <= cap {
            factors.insert(m, 1);
        } else {
            return Err(Error::FactorCapExceeded {
                remaining: BigUint::from(m),
                cap,
            });
        }
    }
    Ok(())
}

fn next_divisor(d: u64) -> u64 {
    match d {
        2 => 3,
        3 => 5,
        _ if d % 6 == 5 => d + 2,
        _ => d + 4,
    }
}

fn strip_factor(n: &mut BigUint, p: u64) -> u32 {
    let p_big = BigUint::from(p);
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(&p_big);
        if r.is_zero() {
            *n = q;
            count += 1;
        } else {
            return count;
        }
    }
}

/// Euler's totient via the product formula over the factorization.
pub fn euler_phi(n: &BigUint) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::ZeroInput("euler_phi"));
    }
    let mut phi = n.clone();
    for (&p, _) in factorize(n)?.factors() {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Least `t >= 1` with `base^t = 1 (mod modulus)`; requires the two to be
/// coprime. Starts from φ(modulus) and strips prime factors, so it needs
/// the modulus (hence φ) to be factorizable under the cap.
pub fn multiplicative_order(base: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if modulus.is_zero() {
        return Err(Error::ZeroInput("multiplicative_order"));
    }
    if modulus.is_one() {
        return Ok(BigUint::one());
    }
    if !base.gcd(modulus).is_one() {
        return Err(Error::Precondition(format!(
            "multiplicative_order needs gcd({base}, {modulus}) = 1"
        )));
    }
    let phi = euler_phi(modulus)?;
    let mut order = phi.clone();
    for (&p, _) in factorize(&phi)?.factors() {
        let p_big = BigUint::from(p);
        while (&order % &p_big).is_zero() {
            let candidate = &order / &p_big;
            if base.modpow(&candidate, modulus).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    debug_assert!(base.modpow(&order, modulus).is_one());
    Ok(order)
}

/// The split `n = core * coprime` with `core` supported on the primes of
/// the base and `gcd(coprime, base) = 1`; `max_beta` is the largest prime
/// multiplicity in `core` (0 when `core` is 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSplit {
    pub core: BigUint,
    pub coprime: BigUint,
    pub betas: BTreeMap<u64, u32>,
    pub max_beta: u32,
}

pub fn split_by_base(n: &BigUint, base: u32) -> Result<BaseSplit> {
    check_base(base)?;
    if n.is_zero() {
        return Err(Error::ZeroInput("split_by_base"));
    }
    // the base itself is tiny, so its factorization always fits the cap
    let base_primes = factorize(&BigUint::from(base))?;
    let mut coprime = n.clone();
    let mut core = BigUint::one();
    let mut betas = BTreeMap::new();
    for (&p, _) in base_primes.factors() {
        let beta = strip_factor(&mut coprime, p);
        if beta > 0 {
            betas.insert(p, beta);
            core *= BigUint::from(p).pow(beta);
        }
    }
    let max_beta = betas.values().copied().max().unwrap_or(0);
    Ok(BaseSplit {
        core,
        coprime,
        betas,
        max_beta,
    })
}

/// `Σ_{i=0..=count} base^(i*stride)`: `count + 1` one-digits at the given
/// stride, e.g. `strided_repunit(10, 2, 2) = 10101`.
pub fn strided_repunit(base: u32, stride: u64, count: u64) -> BigUint {
    assert!(stride >= 1, "stride must be at least 1");
    let b = BigUint::from(base);
    // geometric sum (b^(stride*(count+1)) - 1) / (b^stride - 1), exact
    let step = b.pow(u32::try_from(stride).expect("stride fits u32"));
    let numerator = step.pow(u32::try_from(count + 1).expect("count fits u32")) - 1u32;
    let denominator = &step - 1u32;
    &numerator / &denominator
}
