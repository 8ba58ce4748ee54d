//! The verification harness: replays every constructive family at desk
//! scale and cross-checks it against the brute-force classifier, recording
//! one status per check. A healthy build has zero `FAIL`s; the
//! `ERRATUM_EXPECTED` entries are the known discrepancies between the
//! constructions' literal statements and what exact arithmetic observes,
//! and a build fails if one of those unexpectedly starts holding.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{
    additive_multipliers, classify, multiplicative_multipliers, multiplicity_scan,
    DEFAULT_SEARCH_BUDGET,
};
use crate::error::Result;
use crate::families::{
    final2, final_a, final_b, final_c, mrh10, niven_with_substring, palindrome_multipliers,
    palindromic_multiple, prop1_family, thm1_family, thm33_identity, trivial_mrh, FamilyInstance,
    Mrh10Variant, PalindromeMode, CHECK_ADDITIVE, CHECK_ADDITIVE_FIXED_WIDTH,
    CHECK_ADDITIVE_LITERAL, CHECK_CLOSED_FORM, CHECK_HALF_PALINDROME, CHECK_HALF_PRODUCT,
    CHECK_MULTIPLICATIVE, CHECK_NIVEN, CHECK_NOT_NIVEN,
};
use crate::numtheory::{strided_repunit, DEFAULT_FACTOR_CAP};
use crate::radix::{digit_sum, is_palindrome, DigitString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "ERRATUM_EXPECTED")]
    ErratumExpected,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::ErratumExpected => "ERRATUM_EXPECTED",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationEntry {
    pub family: String,
    pub params: String,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub entries: Vec<VerificationEntry>,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_owned(),
            entries: Vec::new(),
        }
    }

    fn entry(&mut self, family: &str, params: impl Into<String>) -> &mut VerificationEntry {
        self.entries.push(VerificationEntry {
            family: family.to_owned(),
            params: params.into(),
            checks: Vec::new(),
        });
        self.entries.last_mut().expect("just pushed")
    }

    pub fn checks(&self) -> impl Iterator<Item = (&VerificationEntry, &Check)> {
        self.entries
            .iter()
            .flat_map(|e| e.checks.iter().map(move |c| (e, c)))
    }

    pub fn counts(&self) -> StatusCounts {
        let mut counts = StatusCounts::default();
        for (_, check) in self.checks() {
            match check.status {
                CheckStatus::Pass => counts.pass += 1,
                CheckStatus::Fail => counts.fail += 1,
                CheckStatus::ErratumExpected => counts.erratum_expected += 1,
            }
        }
        counts
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub erratum_expected: usize,
}

impl std::ops::AddAssign for StatusCounts {
    fn add_assign(&mut self, other: Self) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.erratum_expected += other.erratum_expected;
    }
}

impl VerificationEntry {
    fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_owned(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        });
    }

    /// A check whose *failure* is the documented, expected outcome. If the
    /// stated claim unexpectedly holds, that contradicts the erratum ledger
    /// and is reported as FAIL.
    fn erratum(&mut self, name: &str, failed_as_expected: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_owned(),
            status: if failed_as_expected {
                CheckStatus::ErratumExpected
            } else {
                CheckStatus::Fail
            },
            detail: detail.into(),
        });
    }
}

// Names of the expected-erratum checks; the acceptance gate asserts these
// are exactly the ERRATUM_EXPECTED classes that appear.
pub const ERRATUM_THM33_SMALL_K: &str = "small k rejected: pattern needs k >= 2";
pub const ERRATUM_NEWALPHA_LITERAL_Q: &str = "literal count rule leaves repunit = 1 (mod w)";
pub const ERRATUM_COROLLARY_P_EQUALS_B: &str = "prime p = b has no palindromic multiple";
pub const ERRATUM_FINAL_B_LITERAL: &str = "stated multiplier misses the identity";
pub const ERRATUM_FINAL_C_STRICT: &str = "strict-reversal identity fails for k >= 1";
pub const ERRATUM_FINAL_C_NIVEN: &str = "Niven claim fails for k <= 1";

pub const ALL_ERRATA: [&str; 6] = [
    ERRATUM_THM33_SMALL_K,
    ERRATUM_NEWALPHA_LITERAL_Q,
    ERRATUM_COROLLARY_P_EQUALS_B,
    ERRATUM_FINAL_B_LITERAL,
    ERRATUM_FINAL_C_STRICT,
    ERRATUM_FINAL_C_NIVEN,
];

pub const SUITES: [&str; 13] = [
    "thm1", "prop1", "thm33", "palmul", "corollary", "final_a", "final_b", "final_c", "final2",
    "mrh10", "embed", "oracle", "eqstar",
];

pub fn run_suite(name: &str) -> Result<VerificationReport> {
    match name {
        "thm1" => suite_thm1(),
        "prop1" => suite_prop1(),
        "thm33" => suite_thm33(),
        "palmul" => suite_palmul(),
        "corollary" => suite_corollary(),
        "final_a" => suite_final_a(),
        "final_b" => suite_final_b(),
        "final_c" => suite_final_c(),
        "final2" => suite_final2(),
        "mrh10" => suite_mrh10(),
        "embed" => suite_embed(),
        "oracle" => suite_oracle(),
        "eqstar" => suite_eqstar(),
        other => Err(crate::error::Error::Precondition(format!(
            "unknown suite {other:?} (want one of {})",
            SUITES.join("|")
        ))),
    }
}

pub fn run_all() -> Result<Vec<VerificationReport>> {
    SUITES.iter().map(|name| run_suite(name)).collect()
}

fn holds(instance: &FamilyInstance, name: &str) -> bool {
    instance.holds(name)
}

fn suite_thm1() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm1");
    for (base, alpha) in [(3u32, 1u32), (4, 2), (10, 2), (13, 3)] {
        for ell in 0..=3u32 {
            let instance = thm1_family(base, alpha, ell)?;
            let entry = report.entry("thm1", instance.params_display());
            entry.check(
                CHECK_HALF_PRODUCT,
                holds(&instance, CHECK_HALF_PRODUCT),
                String::new(),
            );
            entry.check(
                CHECK_HALF_PALINDROME,
                holds(&instance, CHECK_HALF_PALINDROME),
                String::new(),
            );
            entry.check(CHECK_NIVEN, holds(&instance, CHECK_NIVEN), String::new());
        }
    }
    let spot = thm1_family(10, 2, 1)?;
    report.entry("thm1", "b=10 alpha=2 ell=1").check(
        "spot value n = 121212, M = 6734",
        spot.n == BigUint::from(121212u32) && spot.multiplier == Some(BigUint::from(6734u32)),
        format!("n = {}, M = {:?}", spot.n, spot.multiplier),
    );
    Ok(report)
}

fn suite_prop1() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("prop1");
    for base in [2u32, 3, 5, 10] {
        let mut multipliers = Vec::new();
        for ell in 0..=4u32 {
            let instance = prop1_family(base, ell)?;
            if base >= 3 {
                let entry = report.entry("prop1", instance.params_display());
                entry.check(
                    CHECK_CLOSED_FORM,
                    holds(&instance, CHECK_CLOSED_FORM),
                    String::new(),
                );
            }
            multipliers.push(instance.multiplier.expect("prop1 always yields a multiplier"));
        }
        let increasing = multipliers.windows(2).all(|pair| pair[0] < pair[1]);
        report.entry("prop1", format!("b={base}")).check(
            "multipliers strictly increase over ell = 0..=4",
            increasing,
            format!(
                "digit counts: {:?}",
                multipliers
                    .iter()
                    .map(|m| m.to_string().len())
                    .collect::<Vec<_>>()
            ),
        );
    }
    Ok(report)
}

fn suite_thm33() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("thm33");
    for base in [2u32, 3, 10, 16] {
        let mut all_equal = true;
        let mut first_failure = String::new();
        for k in 2..=64u64 {
            let (lhs, rhs) = thm33_identity(base, k)?;
            if lhs != rhs {
                all_equal = false;
                if first_failure.is_empty() {
                    first_failure = format!("k = {k}: {lhs} != {rhs}");
                }
            }
        }
        report.entry("thm33", format!("b={base}")).check(
            "lhs == rhs for k = 2..=64",
            all_equal,
            if all_equal { "63 values".into() } else { first_failure },
        );
    }
    for k in [0u64, 1] {
        let rejected = matches!(thm33_identity(10, k), Err(ref e) if e.to_string().contains("erratum"));
        report.entry("thm33", format!("b=10 k={k}")).erratum(
            ERRATUM_THM33_SMALL_K,
            rejected,
            "the right-hand pattern has no reading below k = 2",
        );
    }
    Ok(report)
}

fn suite_palmul() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("palmul");
    for base in [2u32, 3, 10, 12] {
        for (mode, limit) in [
            (PalindromeMode::MinimalOrder, 500u32),
            (PalindromeMode::PaperPhi, 50),
        ] {
            let mut ok = true;
            let mut count = 0usize;
            let mut first_failure = String::new();
            for n in 1..=limit {
                if n % base == 0 {
                    continue;
                }
                count += 1;
                let n_big = BigUint::from(n);
                let trace = palindromic_multiple(&n_big, base, mode)?;
                let palindrome_ok = is_palindrome(&trace.palindrome, base)?;
                let divides = (&trace.palindrome % &n_big).is_zero();
                let product_ok = &trace.seed * &trace.repunit == trace.palindrome;
                if !(palindrome_ok && divides && product_ok) {
                    ok = false;
                    if first_failure.is_empty() {
                        first_failure = format!("n = {n}");
                    }
                }
            }
            report
                .entry("palindromic_multiple", format!("b={base} mode={mode}"))
                .check(
                    "palindrome divisible by n for every n coprime enough",
                    ok,
                    if ok {
                        format!("{count} instances up to {limit}")
                    } else {
                        first_failure
                    },
                );
        }
    }
    // the literal choice "count q a multiple of b^phi(w) - 1" fails:
    // b = 10, w = 3, r = 2, q = 99 leaves Q = 1 (mod 3), not 0
    let q_literal = strided_repunit(10, 2, 99);
    let residue = &q_literal % 3u32;
    report.entry("palindromic_multiple", "b=10 n=3 r=2 q=99").erratum(
        ERRATUM_NEWALPHA_LITERAL_Q,
        residue == BigUint::one(),
        format!("Q(2, 99) = {residue} (mod 3); the corrected rule needs w | q + 1"),
    );
    Ok(report)
}

fn suite_corollary() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("corollary");
    let primes: Vec<u32> = (2..=97u32)
        .filter(|&p| (2..p).all(|d| p % d != 0))
        .collect();
    for base in [10u32, 2] {
        let mut ok = true;
        let mut covered = 0usize;
        for &p in &primes {
            if p == base {
                continue;
            }
            let trace =
                palindromic_multiple(&BigUint::from(p), base, PalindromeMode::MinimalOrder)?;
            covered += 1;
            if !(&trace.palindrome % p).is_zero() {
                ok = false;
            }
        }
        report
            .entry("palindromic_multiple", format!("b={base} primes<=97"))
            .check(
                "every prime divides some b-palindrome",
                ok,
                format!("{covered} primes"),
            );
        let p_equals_b_rejected =
            palindromic_multiple(&BigUint::from(base), base, PalindromeMode::MinimalOrder).is_err();
        report
            .entry("palindromic_multiple", format!("b={base} p={base}"))
            .erratum(
                ERRATUM_COROLLARY_P_EQUALS_B,
                p_equals_b_rejected,
                "a base-b palindrome never ends in 0, so p = b never divides one",
            );
    }
    Ok(report)
}

fn suite_final_a() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("final_a");
    for base in [2u32, 4, 10] {
        let digits = [1, base / 2, base - 1];
        for &a in &digits {
            for k in 0..=8u64 {
                let instance = final_a(base, a, k)?;
                let entry = report.entry("final_a", instance.params_display());
                entry.check(CHECK_ADDITIVE, holds(&instance, CHECK_ADDITIVE), String::new());
                entry.check(
                    CHECK_NOT_NIVEN,
                    holds(&instance, CHECK_NOT_NIVEN),
                    String::new(),
                );
            }
        }
    }
    let spot = final_a(10, 3, 2)?;
    report.entry("final_a", "b=10 a=3 k=2").check(
        "spot value n = 3003, M = 500",
        spot.n == BigUint::from(3003u32) && spot.multiplier == Some(BigUint::from(500u32)),
        format!("n = {}, M = {:?}", spot.n, spot.multiplier),
    );
    Ok(report)
}

fn suite_final_b() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("final_b");
    for base in [2u32, 4] {
        for k in 1..=4u64 {
            let instance = final_b(base, k)?;
            let entry = report.entry("final_b", instance.params_display());
            entry.check(CHECK_ADDITIVE, holds(&instance, CHECK_ADDITIVE), String::new());
            entry.check(
                CHECK_NOT_NIVEN,
                holds(&instance, CHECK_NOT_NIVEN),
                String::new(),
            );
            entry.erratum(
                ERRATUM_FINAL_B_LITERAL,
                !holds(&instance, CHECK_ADDITIVE_LITERAL),
                if base == 2 && k == 1 {
                    "witness: 4*20 + 5 = 85 != 325".into()
                } else {
                    String::new()
                },
            );
        }
    }
    Ok(report)
}

fn suite_final_c() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("final_c");
    for base in [2u32, 4] {
        for k in 0..=4u64 {
            let instance = final_c(base, k)?;
            let entry = report.entry("final_c", instance.params_display());
            entry.check(
                CHECK_ADDITIVE_FIXED_WIDTH,
                holds(&instance, CHECK_ADDITIVE_FIXED_WIDTH),
                String::new(),
            );
            let strict = holds(&instance, CHECK_ADDITIVE);
            if k == 0 {
                entry.check(CHECK_ADDITIVE, strict, "strict reading holds at k = 0");
            } else {
                entry.erratum(ERRATUM_FINAL_C_STRICT, !strict, String::new());
            }
            let niven = holds(&instance, CHECK_NIVEN);
            if k >= 2 {
                entry.check(CHECK_NIVEN, niven, String::new());
            } else {
                entry.erratum(
                    ERRATUM_FINAL_C_NIVEN,
                    !niven,
                    if base == 2 && k == 1 {
                        "witness: n = 170, s = 4 does not divide it".into()
                    } else {
                        String::new()
                    },
                );
            }
        }
    }
    Ok(report)
}

fn suite_final2() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("final2");
    let grids: [(u32, [u64; 3]); 5] = [
        (4, [1, 4, 7]),
        (10, [1, 4, 7]),
        (16, [1, 4, 7]),
        (22, [1, 4, 7]),
        (2, [2, 4, 6]),
    ];
    for (base, ks) in grids {
        let mut multipliers = Vec::new();
        for k in ks {
            let instance = final2(base, k)?;
            let entry = report.entry(instance.family.as_str(), instance.params_display());
            entry.check(
                CHECK_MULTIPLICATIVE,
                holds(&instance, CHECK_MULTIPLICATIVE),
                String::new(),
            );
            entry.check(
                CHECK_CLOSED_FORM,
                holds(&instance, CHECK_CLOSED_FORM),
                String::new(),
            );
            multipliers.push(instance.multiplier.expect("final2 yields a multiplier"));
        }
        report.entry("final2", format!("b={base}")).check(
            "multipliers strictly increase over k",
            multipliers.windows(2).all(|pair| pair[0] < pair[1]),
            String::new(),
        );
    }
    let spot_a = final2(10, 1)?;
    let spot_b = final2(2, 2)?;
    report.entry("final2", "spot values").check(
        "M(10,1) = 4 and M(2,2) = 3",
        spot_a.multiplier == Some(BigUint::from(4u32))
            && spot_b.multiplier == Some(BigUint::from(3u32)),
        format!("{:?}, {:?}", spot_a.multiplier, spot_b.multiplier),
    );
    Ok(report)
}

fn suite_mrh10() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("mrh10");
    for variant in [
        Mrh10Variant::SevenTwo,
        Mrh10Variant::FiveFour,
        Mrh10Variant::FourFive,
    ] {
        for k in 1..=6u64 {
            let instance = mrh10(variant, k)?;
            report
                .entry("mrh10", format!("variant={variant} {}", instance.params_display()))
                .check(
                    CHECK_MULTIPLICATIVE,
                    holds(&instance, CHECK_MULTIPLICATIVE),
                    String::new(),
                );
        }
    }
    for k in [1u64, 4, 7] {
        let instance = mrh10(Mrh10Variant::OneEight, k)?;
        report
            .entry("mrh10", format!("variant=1_8 {}", instance.params_display()))
            .check(
                CHECK_MULTIPLICATIVE,
                holds(&instance, CHECK_MULTIPLICATIVE),
                String::new(),
            );
    }
    let spot = mrh10(Mrh10Variant::SevenTwo, 1)?;
    report.entry("mrh10", "variant=7_2 k=1").check(
        "spot value 702 * 207 = 145314 with M = 39",
        spot.n == BigUint::from(145314u32) && spot.multiplier == Some(BigUint::from(39u32)),
        format!("n = {}, M = {:?}", spot.n, spot.multiplier),
    );
    Ok(report)
}

fn suite_embed() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("embed");
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    for base in [2u32, 7, 10, 16] {
        let mut contains_ok = true;
        let mut power_ok = true;
        let mut divides_ok = true;
        let mut distinct_ok = true;
        for _ in 0..200 {
            let len = rng.gen_range(1..=8usize);
            let mut digits = vec![rng.gen_range(1..base)];
            for _ in 1..len {
                digits.push(rng.gen_range(0..base));
            }
            let window = DigitString::new(base, digits)?;
            let mut members = Vec::new();
            for t in 0..3u64 {
                let n = niven_with_substring(&window, t)?;
                let n_digits = crate::radix::from_natural(&n, base)?;
                if !n_digits
                    .digits()
                    .windows(window.len())
                    .any(|w| w == window.digits())
                {
                    contains_ok = false;
                }
                let sum = digit_sum(&n, base)?;
                if !is_power_of(&sum, base) {
                    power_ok = false;
                }
                if !(&n % &sum).is_zero() {
                    divides_ok = false;
                }
                members.push(n);
            }
            members.sort();
            members.dedup();
            if members.len() != 3 {
                distinct_ok = false;
            }
        }
        let entry = report.entry("niven_with_substring", format!("b={base} 200 windows"));
        entry.check("window appears contiguously", contains_ok, "600 members");
        entry.check("digit sum is a power of b", power_ok, String::new());
        entry.check("digit sum divides n", divides_ok, String::new());
        entry.check("t = 0,1,2 give distinct members", distinct_ok, String::new());
    }
    Ok(report)
}

fn is_power_of(value: &BigUint, base: u32) -> bool {
    let mut power = BigUint::one();
    let limit = value;
    while &power < limit {
        power *= base;
    }
    power == *limit
}

/// Family instances from the other suites whose n lands below the scan
/// bound, paired with the kind of witness the classifier must rediscover.
fn in_range_instances(bound: u64) -> Result<Vec<(FamilyInstance, bool)>> {
    let bound = BigUint::from(bound);
    let mut found = Vec::new();
    let mut push = |instance: FamilyInstance, multiplicative: bool| {
        if instance.n <= bound {
            found.push((instance, multiplicative));
        }
    };
    for (base, alpha) in [(3u32, 1u32), (4, 2), (10, 2), (13, 3)] {
        for ell in 0..=3u32 {
            push(thm1_family(base, alpha, ell)?, false);
        }
    }
    for base in [2u32, 3, 5, 10] {
        for ell in 0..=4u32 {
            push(prop1_family(base, ell)?, false);
        }
    }
    for base in [2u32, 4, 10] {
        for a in [1, base / 2, base - 1] {
            for k in 0..=8u64 {
                push(final_a(base, a, k)?, false);
            }
        }
    }
    for base in [2u32, 4] {
        for k in 1..=4u64 {
            push(final_b(base, k)?, false);
        }
        // strict additive identity only holds at k = 0 for this family
        push(final_c(base, 0)?, false);
    }
    for (base, ks) in [(4u32, [1u64, 4, 7]), (10, [1, 4, 7]), (16, [1, 4, 7]), (22, [1, 4, 7]), (2, [2, 4, 6])] {
        for k in ks {
            push(final2(base, k)?, true);
        }
    }
    for variant in Mrh10Variant::ALL {
        for k in 1..=6u64 {
            if variant == Mrh10Variant::OneEight && k % 3 != 1 {
                continue;
            }
            push(mrh10(variant, k)?, true);
        }
    }
    for base in [2u32, 10] {
        for k in 0..=20u32 {
            push(trivial_mrh(base, k)?, true);
        }
    }
    Ok(found)
}

fn suite_oracle() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("oracle");
    const BOUND: u64 = 20_000;

    for base in [2u32, 10] {
        let mut exceptions = 0usize;
        let mut mrh_count = 0usize;
        for n in 1..=BOUND {
            let n_big = BigUint::from(n);
            let witnesses = multiplicative_multipliers(&n_big, base, DEFAULT_FACTOR_CAP)?;
            if !witnesses.is_empty() {
                mrh_count += 1;
                let s = digit_sum(&n_big, base)?;
                if !(&n_big % &s).is_zero() {
                    exceptions += 1;
                }
            }
        }
        report
            .entry("classify", format!("b={base} n<=20000"))
            .check(
                "every MRH number is Niven",
                exceptions == 0,
                format!("{mrh_count} MRH numbers, {exceptions} exceptions"),
            );
    }

    let mut rediscovered = true;
    let mut missing = String::new();
    let mut checked = 0usize;
    for (instance, multiplicative) in in_range_instances(BOUND)? {
        let Some(expected) = instance.multiplier.clone() else {
            continue;
        };
        checked += 1;
        let witnesses = if multiplicative {
            multiplicative_multipliers(&instance.n, instance_base(&instance), DEFAULT_FACTOR_CAP)?
        } else {
            additive_multipliers(&instance.n, instance_base(&instance), DEFAULT_SEARCH_BUDGET)?
        };
        if !witnesses.contains(&expected) {
            rediscovered = false;
            if missing.is_empty() {
                missing = format!(
                    "{} {} expected M = {expected}",
                    instance.family,
                    instance.params_display()
                );
            }
        }
    }
    report.entry("classify", "family instances n<=20000").check(
        "every in-range construction is rediscovered by search",
        rediscovered,
        if rediscovered {
            format!("{checked} instances")
        } else {
            missing
        },
    );

    let taxicab = classify(&BigUint::from(1729u32), 10)?;
    report.entry("classify", "n=1729 b=10").check(
        "1729 is 10-MRH with multiplier 1",
        taxicab.is_mrh()
            && taxicab.multiplicative.witnesses() == Some(&[BigUint::one()][..]),
        format!("{:?}", taxicab.multiplicative),
    );
    Ok(report)
}

fn instance_base(instance: &FamilyInstance) -> u32 {
    // every family records b in its parameters except mrh10 (base 10 by definition)
    instance
        .params
        .get("b")
        .and_then(|b| b.to_u32())
        .unwrap_or(10)
}

fn suite_eqstar() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("eqstar");
    let multiplier = palindrome_multipliers(&BigUint::from(121u32), 10, 2, 2)?;
    let product = BigUint::from(121u32) * &multiplier;
    report.entry("palindrome_multipliers", "n=121 ell=2 p=2").check(
        "M = 1001001 and 121 * M = 121121121 is a palindrome",
        multiplier == BigUint::from(1001001u32)
            && product == BigUint::from(121121121u32)
            && is_palindrome(&product, 10)?,
        format!("M = {multiplier}"),
    );
    let solutions = multiplicity_scan(&BigUint::one(), 10, &BigUint::from(100u32))?;
    report.entry("multiplicity_scan", "m=1 b=10 bound=100").check(
        "exactly 18 solutions (the palindromes up to 100)",
        solutions.len() == 18,
        format!("{} solutions", solutions.len()),
    );
    Ok(report)
}
