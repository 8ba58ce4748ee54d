//! Membership decisions for the digit-arithmetic number classes, by
//! exhaustive witness search.
//!
//! A number `n` is *b-Niven* when its base-b digit sum divides it,
//! *b-additive Ramanujan-Hardy* (ARH) when some multiplier `M >= 1`
//! satisfies `s*M + (s*M)^R = n`, and *b-multiplicative Ramanujan-Hardy*
//! (MRH) when some `M >= 1` satisfies `s*M * (s*M)^R = n`, with `s` the
//! digit sum of `n` and `^R` the strict reversal.
//!
//! The searches here are deliberately brute force: they are the oracle the
//! constructive families are verified against. Search space is bounded by
//! an explicit budget, and running out of budget is a distinct outcome,
//! never an empty answer.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{factorize_with_cap, DEFAULT_FACTOR_CAP};
use crate::radix::{check_base, digit_sum, is_palindrome, reversal};

/// Candidate-product budget for the additive search (`(n-1)/s` candidates).
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

/// Result of one witness search: either the complete sorted witness list
/// within the budget, or an explicit refusal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<BigUint>),
    BoundExceeded { detail: String },
}

impl SearchOutcome {
    pub fn witnesses(&self) -> Option<&[BigUint]> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            SearchOutcome::BoundExceeded { .. } => None,
        }
    }

    pub fn is_nonempty(&self) -> bool {
        matches!(self, SearchOutcome::Found(w) if !w.is_empty())
    }

    fn from_search(result: Result<Vec<BigUint>>) -> Result<Self> {
        match result {
            Ok(w) => Ok(SearchOutcome::Found(w)),
            Err(e) if e.is_bound_exceeded() => Ok(SearchOutcome::BoundExceeded {
                detail: e.to_string(),
            }),
            Err(e) => Err(e),
        }
    }
}

/// Everything the classifier knows about one number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: BigUint,
    pub base: u32,
    pub digit_sum: BigUint,
    pub is_palindrome: bool,
    pub niven: bool,
    pub additive: SearchOutcome,
    pub multiplicative: SearchOutcome,
}

impl ClassificationReport {
    pub fn is_arh(&self) -> bool {
        self.additive.is_nonempty()
    }

    pub fn is_mrh(&self) -> bool {
        self.multiplicative.is_nonempty()
    }
}

/// True iff the base-b digit sum of `n` divides `n`.
pub fn is_niven(n: &BigUint, base: u32) -> Result<bool> {
    check_base(base)?;
    if n.is_zero() {
        return Err(Error::ZeroInput("is_niven"));
    }
    let s = digit_sum(n, base)?;
    Ok((n % s).is_zero())
}

/// All additive multipliers of `n`: every `M >= 1` with
/// `s*M + (s*M)^R = n`. Enumerates candidate products `P = s*M` over the
/// multiples of `s` below `n`; exhaustive within the budget, and each hit
/// is re-verified through the public reversal before being returned.
pub fn additive_multipliers(n: &BigUint, base: u32, budget: u64) -> Result<Vec<BigUint>> {
    check_base(base)?;
    if n.is_zero() {
        return Err(Error::ZeroInput("additive multiplier search"));
    }
    let s = digit_sum(n, base)?;
    let candidates = (n - 1u32) / &s;
    if candidates > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            required: candidates,
            budget,
        });
    }

    let mut multipliers = Vec::new();
    if let (Some(n_small), Some(s_small)) = (n.to_u64(), s.to_u64()) {
        let b = u128::from(base);
        let n_small = u128::from(n_small);
        let mut p = u128::from(s_small);
        while p < n_small {
            if p + reverse_u128(p, b) == n_small {
                multipliers.push(BigUint::from(p / u128::from(s_small)));
            }
            p += u128::from(s_small);
        }
    } else {
        let mut p = s.clone();
        while &p < n {
            if &p + reversal(&p, base)? == *n {
                multipliers.push(&p / &s);
            }
            p += &s;
        }
    }

    for m in &multipliers {
        let product = &s * m;
        debug_assert!(!product.is_zero());
        let recheck = &product + reversal(&product, base)?;
        if recheck != *n {
            return Err(Error::Precondition(format!(
                "internal: additive witness {m} failed re-verification for n = {n}"
            )));
        }
    }
    Ok(multipliers)
}

/// All multiplicative multipliers of `n`: every `M >= 1` with
/// `s*M * (s*M)^R = n`. Any product `P = s*M` must divide `n`, so the
/// search enumerates divisors of `n`; no square-root cutoff is sound here
/// because `P` may exceed sqrt(n) (trailing-zero products do).
pub fn multiplicative_multipliers(n: &BigUint, base: u32, factor_cap: u64) -> Result<Vec<BigUint>> {
    check_base(base)?;
    if n.is_zero() {
        return Err(Error::ZeroInput("multiplicative multiplier search"));
    }
    let s = digit_sum(n, base)?;
    let mut multipliers = Vec::new();
    for p in factorize_with_cap(n, factor_cap)?.divisors() {
        if !(&p % &s).is_zero() {
            continue;
        }
        if &p * reversal(&p, base)? == *n {
            multipliers.push(&p / &s);
        }
    }
    for m in &multipliers {
        let product = &s * m;
        if &product * reversal(&product, base)? != *n {
            return Err(Error::Precondition(format!(
                "internal: multiplicative witness {m} failed re-verification for n = {n}"
            )));
        }
    }
    Ok(multipliers)
}

/// True iff `n*m` is a base-b palindrome (the reversal-product equation).
pub fn eqstar_check(n: &BigUint, m: &BigUint, base: u32) -> Result<bool> {
    is_palindrome(&(n * m), base)
}

/// All `N` in `1..=bound` whose product with `m` is a palindrome.
/// Exhaustive and ascending.
pub fn multiplicity_scan(m: &BigUint, base: u32, bound: &BigUint) -> Result<Vec<BigUint>> {
    check_base(base)?;
    let mut solutions = Vec::new();
    if let (Some(bound_small), Some(m_small)) = (bound.to_u64(), m.to_u64()) {
        for n in 1..=bound_small {
            // u128 product keeps the common case allocation-free
            match u128::from(n).checked_mul(u128::from(m_small)) {
                Some(product) => {
                    if is_palindrome_u128(product, u128::from(base)) {
                        solutions.push(BigUint::from(n));
                    }
                }
                None => {
                    let n_big = BigUint::from(n);
                    if eqstar_check(&n_big, m, base)? {
                        solutions.push(n_big);
                    }
                }
            }
        }
        return Ok(solutions);
    }
    let mut n = BigUint::one();
    while &n <= bound {
        if eqstar_check(&n, m, base)? {
            solutions.push(n.clone());
        }
        n += 1u32;
    }
    Ok(solutions)
}

/// Full classification with default budgets.
pub fn classify(n: &BigUint, base: u32) -> Result<ClassificationReport> {
    classify_with_budget(n, base, DEFAULT_SEARCH_BUDGET, DEFAULT_FACTOR_CAP)
}

/// Full classification. Budget exhaustion in either search is recorded in
/// that field rather than failing the whole report.
pub fn classify_with_budget(
    n: &BigUint,
    base: u32,
    budget: u64,
    factor_cap: u64,
) -> Result<ClassificationReport> {
    check_base(base)?;
    if n.is_zero() {
        return Err(Error::ZeroInput("classify"));
    }
    let additive = SearchOutcome::from_search(additive_multipliers(n, base, budget))?;
    let multiplicative =
        SearchOutcome::from_search(multiplicative_multipliers(n, base, factor_cap))?;
    Ok(ClassificationReport {
        n: n.clone(),
        base,
        digit_sum: digit_sum(n, base)?,
        is_palindrome: is_palindrome(n, base)?,
        niven: is_niven(n, base)?,
        additive,
        multiplicative,
    })
}

fn reverse_u128(mut x: u128, base: u128) -> u128 {
    let mut acc = 0u128;
    while x > 0 {
        acc = acc * base + x % base;
        x /= base;
    }
    acc
}

fn is_palindrome_u128(x: u128, base: u128) -> bool {
    x == reverse_u128(x, base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u128) -> BigUint {
        BigUint::from(n)
    }

    fn nums(values: &[u128]) -> Vec<BigUint> {
        values.iter().map(|&v| big(v)).collect()
    }

    #[test]
    fn niven_examples() {
        assert!(is_niven(&big(910), 10).unwrap());
        assert!(is_niven(&big(1729), 10).unwrap());
        assert!(!is_niven(&big(3003), 10).unwrap());
        assert!(matches!(
            is_niven(&BigUint::zero(), 10),
            Err(Error::ZeroInput(_))
        ));
    }

    #[test]
    fn additive_examples() {
        assert_eq!(
            additive_multipliers(&big(3003), 10, DEFAULT_SEARCH_BUDGET).unwrap(),
            nums(&[167, 500])
        );
        let witnesses = additive_multipliers(&big(121212), 10, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(
            witnesses,
            nums(&[3401, 4512, 5623, 6734, 7845, 8956, 10067])
        );
        assert!(additive_multipliers(&big(5), 10, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn additive_budget_is_explicit() {
        let err = additive_multipliers(&big(10_000_000), 10, 100).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 100, .. }));
    }

    #[test]
    fn multiplicative_examples() {
        assert_eq!(
            multiplicative_multipliers(&big(1729), 10, DEFAULT_FACTOR_CAP).unwrap(),
            nums(&[1])
        );
        assert_eq!(
            multiplicative_multipliers(&big(81), 2, DEFAULT_FACTOR_CAP).unwrap(),
            nums(&[3])
        );
        assert_eq!(
            multiplicative_multipliers(&big(100), 10, DEFAULT_FACTOR_CAP).unwrap(),
            nums(&[100])
        );
    }

    #[test]
    fn eqstar_examples() {
        assert!(eqstar_check(&big(19), &big(9999), 10).unwrap());
        assert!(eqstar_check(&big(343), &big(1), 10).unwrap());
        for m in 1u32..=50 {
            assert!(!eqstar_check(&big(10), &BigUint::from(m), 10).unwrap());
        }
    }

    #[test]
    fn multiplicity_scan_examples() {
        let palindromes = multiplicity_scan(&big(1), 10, &big(100)).unwrap();
        assert_eq!(palindromes.len(), 18);
        assert_eq!(
            palindromes,
            nums(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 22, 33, 44, 55, 66, 77, 88, 99])
        );
        let sols = multiplicity_scan(&big(9999), 10, &big(20)).unwrap();
        assert!(sols.contains(&big(19)));
        assert_eq!(multiplicity_scan(&big(1), 2, &big(2)).unwrap(), nums(&[1]));
    }

    #[test]
    fn classify_examples() {
        let report = classify(&big(1729), 10).unwrap();
        assert!(report.niven);
        assert!(!report.is_palindrome);
        assert_eq!(report.multiplicative, SearchOutcome::Found(nums(&[1])));

        let report = classify(&big(3003), 10).unwrap();
        assert!(!report.niven);
        assert!(report
            .additive
            .witnesses()
            .unwrap()
            .contains(&big(500)));

        let report = classify(&BigUint::one(), 7).unwrap();
        assert!(report.niven);
        assert!(report.is_palindrome);
    }

    #[test]
    fn classify_reports_bound_exceeded_per_field() {
        // additive budget blown, multiplicative still answers
        let report = classify_with_budget(&big(10_000_001), 10, 10, DEFAULT_FACTOR_CAP).unwrap();
        assert!(matches!(
            report.additive,
            SearchOutcome::BoundExceeded { .. }
        ));
        assert!(matches!(report.multiplicative, SearchOutcome::Found(_)));
    }

    #[test]
    fn trivial_mrh_family_is_recognized() {
        for base in [2u32, 10] {
            for k in 0..=20u32 {
                let n = BigUint::from(base).pow(k);
                let report = classify(&n, base).unwrap();
                assert!(report.is_mrh(), "base {base}, k {k}");
                assert!(
                    report.multiplicative.witnesses().unwrap().contains(&n),
                    "expected multiplier n itself for base {base}, k {k}"
                );
            }
        }
    }

    proptest! {
        // MRH implies Niven
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn mrh_subset_niven(n in 1u64..100_000, base_choice in 0usize..2) {
            let base = [2u32, 10][base_choice];
            let n = big(n.into());
            let mrh = multiplicative_multipliers(&n, base, DEFAULT_FACTOR_CAP).unwrap();
            if !mrh.is_empty() {
                prop_assert!(is_niven(&n, base).unwrap());
            }
        }

        // product enumeration finds exactly what the direct scan over all
        // multipliers finds
        #[test]
        fn additive_search_is_exhaustive(n in 1u64..100_000, base_choice in 0usize..2) {
            let base = [2u32, 10][base_choice];
            let n_big = big(n.into());
            let by_products =
                additive_multipliers(&n_big, base, DEFAULT_SEARCH_BUDGET).unwrap();
            let s = digit_sum(&n_big, base).unwrap().to_u64().unwrap();
            let mut direct = Vec::new();
            for m in 1..=n / s {
                let p = u128::from(m) * u128::from(s);
                if p + reverse_u128(p, u128::from(base)) == u128::from(n) {
                    direct.push(big(m.into()));
                }
            }
            prop_assert_eq!(by_products, direct);
        }

        #[test]
        fn multiplicative_search_is_exhaustive(n in 1u64..50_000, base_choice in 0usize..2) {
            let base = [2u32, 10][base_choice];
            let n_big = big(n.into());
            let by_divisors =
                multiplicative_multipliers(&n_big, base, DEFAULT_FACTOR_CAP).unwrap();
            let s = digit_sum(&n_big, base).unwrap().to_u64().unwrap();
            let mut direct = Vec::new();
            let mut m = 1u64;
            while m * s <= n {
                let p = u128::from(m) * u128::from(s);
                if p * reverse_u128(p, u128::from(base)) == u128::from(n) {
                    direct.push(big(m.into()));
                }
                m += 1;
            }
            prop_assert_eq!(by_divisors, direct);
        }
    }
}
