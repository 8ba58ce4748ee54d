//! Command-line front end: classification, witness searches, family
//! generation, the palindromic-multiple construction, the Niven embedding,
//! pattern evaluation and the verification suites, with deterministic
//! line-oriented output in text, JSON or CSV.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use taxicab::classify::{
    additive_multipliers, classify_with_budget, eqstar_check, multiplicity_scan,
    multiplicative_multipliers, ClassificationReport, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
use taxicab::error::Error;
use taxicab::families::{
    final2, final_a, final_b, final_c, mrh10, niven_with_substring,
    palindrome_multipliers_instance, palindromic_multiple, prop1_family, thm1_family,
    thm33_instance, trivial_mrh, FamilyId, FamilyInstance, Mrh10Variant, PalindromeMode,
    Semantics,
};
use taxicab::numtheory::DEFAULT_FACTOR_CAP;
use taxicab::pattern::{Bindings, PatternTemplate};
use taxicab::radix::DigitString;
use taxicab::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "taxicab",
    version,
    about = "Exact digit arithmetic: Niven and Ramanujan-Hardy number classes",
    after_help = "Numbers are decimal; digit strings use dotted digits with an \
                  '@base' suffix (e.g. 1.0.8@10). Exit codes: 0 success, \
                  1 verification failure, 2 usage error."
)]
struct Cli {
    /// Numeration base for digit arithmetic
    #[arg(long, global = true, default_value_t = 10)]
    base: u32,

    /// Output format (one record per line)
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Search budget: candidate-product count for additive searches and
    /// factorization cap for multiplicative ones
    #[arg(long, global = true)]
    limit: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify numbers: digit sum, palindrome, Niven, ARH and MRH witnesses
    Classify {
        /// Decimal numbers to classify
        #[arg(required = true)]
        numbers: Vec<String>,
    },
    /// Search all additive multipliers (s*M + (s*M)^R = n)
    SearchAdd {
        #[arg(required = true)]
        numbers: Vec<String>,
    },
    /// Search all multiplicative multipliers (s*M * (s*M)^R = n)
    SearchMul {
        #[arg(required = true)]
        numbers: Vec<String>,
    },
    /// Check whether n*m is a base-b palindrome
    Eqstar { n: String, m: String },
    /// List every n up to a bound whose product with m is a palindrome
    ScanMultiplicity {
        m: String,
        #[arg(long)]
        bound: String,
    },
    /// Generate one family instance and report its identity checks
    Family {
        /// One of: thm1 prop1 thm33 final_a final_b final_c final2_a
        /// final2_b mrh10 pal_mult_family trivial_mrh
        id: String,
        #[arg(long)]
        alpha: Option<u32>,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        a: Option<u32>,
        /// 10-MRH seed variant: 1_8, 7_2, 5_4 or 4_5
        #[arg(long)]
        variant: Option<String>,
        /// Palindrome n for pal_mult_family (decimal)
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        /// Only report identities under one reversal reading (final_c)
        #[arg(long)]
        semantics: Option<SemanticsArg>,
    },
    /// Build a base-b palindrome divisible by n, with its full trace
    Palmul {
        #[arg(required = true)]
        numbers: Vec<String>,
        /// Stride rule: paper (multiples of phi(w)) or minimal (order of b)
        #[arg(long, default_value = "minimal")]
        mode: String,
    },
    /// Embed a digit string into a b-Niven number
    EmbedNiven {
        /// Digit string, e.g. 9@10 or 1.1@2 (falls back to --base without @)
        window: String,
        /// Variant index; each value yields a distinct member
        #[arg(long, default_value_t = 0)]
        t: u64,
    },
    /// Parse and expand a repetition-notation pattern
    PatternEval {
        /// Pattern such as "[1.(0)^k.8]@10"
        pattern: String,
        /// Exponent bindings, name=value (repeatable)
        #[arg(long = "bind")]
        bindings: Vec<String>,
        /// Digit bindings, name=value (repeatable)
        #[arg(long = "digit")]
        digits: Vec<String>,
    },
    /// Run verification suites; exits 1 if any check fails
    Verify {
        /// Suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    Strict,
    Fixed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let base = cli.base;
    let format = cli.format;
    let budget = cli.limit.unwrap_or(DEFAULT_SEARCH_BUDGET);
    let factor_cap = cli.limit.unwrap_or(DEFAULT_FACTOR_CAP);

    match cli.command {
        Command::Classify { numbers } => {
            let mut printer = Printer::new(
                format,
                "n,base,digit_sum,palindrome,niven,arh_multipliers,mrh_multipliers,status,detail",
            );
            for text in numbers {
                let n = parse_number(&text)?;
                let report = classify_with_budget(&n, base, budget, factor_cap)?;
                printer.record(classification_record(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SearchAdd { numbers } => {
            let mut printer = Printer::new(format, "n,base,arh_multipliers,status,detail");
            for text in numbers {
                let n = parse_number(&text)?;
                let (witnesses, status, detail) =
                    search_fields(additive_multipliers(&n, base, budget))?;
                printer.record(Record {
                    json: json!({
                        "n": n.to_string(),
                        "base": base,
                        "arh_multipliers": witnesses_json(&witnesses),
                        "status": status,
                        "detail": detail,
                    }),
                    csv: vec![
                        n.to_string(),
                        base.to_string(),
                        join_witnesses(&witnesses),
                        status.into(),
                        detail.clone(),
                    ],
                    text: format!(
                        "n={n} base={base} arh={} status={status}{}",
                        display_witnesses(&witnesses),
                        display_detail(&detail)
                    ),
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SearchMul { numbers } => {
            let mut printer = Printer::new(format, "n,base,mrh_multipliers,status,detail");
            for text in numbers {
                let n = parse_number(&text)?;
                let (witnesses, status, detail) =
                    search_fields(multiplicative_multipliers(&n, base, factor_cap))?;
                printer.record(Record {
                    json: json!({
                        "n": n.to_string(),
                        "base": base,
                        "mrh_multipliers": witnesses_json(&witnesses),
                        "status": status,
                        "detail": detail,
                    }),
                    csv: vec![
                        n.to_string(),
                        base.to_string(),
                        join_witnesses(&witnesses),
                        status.into(),
                        detail.clone(),
                    ],
                    text: format!(
                        "n={n} base={base} mrh={} status={status}{}",
                        display_witnesses(&witnesses),
                        display_detail(&detail)
                    ),
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eqstar { n, m } => {
            let n = parse_number(&n)?;
            let m = parse_number(&m)?;
            let product = &n * &m;
            let palindrome = eqstar_check(&n, &m, base)?;
            let mut printer = Printer::new(format, "n,m,base,product,palindrome");
            printer.record(Record {
                json: json!({
                    "n": n.to_string(),
                    "m": m.to_string(),
                    "base": base,
                    "product": product.to_string(),
                    "palindrome": palindrome,
                }),
                csv: vec![
                    n.to_string(),
                    m.to_string(),
                    base.to_string(),
                    product.to_string(),
                    palindrome.to_string(),
                ],
                text: format!("n={n} m={m} base={base} product={product} palindrome={palindrome}"),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::ScanMultiplicity { m, bound } => {
            let m = parse_number(&m)?;
            let bound = parse_number(&bound)?;
            let solutions = multiplicity_scan(&m, base, &bound)?;
            let mut printer = Printer::new(format, "m,base,bound,count,solutions");
            printer.record(Record {
                json: json!({
                    "m": m.to_string(),
                    "base": base,
                    "bound": bound.to_string(),
                    "count": solutions.len(),
                    "solutions": solutions.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                }),
                csv: vec![
                    m.to_string(),
                    base.to_string(),
                    bound.to_string(),
                    solutions.len().to_string(),
                    join_witnesses(&Some(solutions.clone())),
                ],
                text: format!(
                    "m={m} base={base} bound={bound} count={} solutions={}",
                    solutions.len(),
                    display_witnesses(&Some(solutions))
                ),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Family {
            id,
            alpha,
            ell,
            k,
            a,
            variant,
            n,
            p,
            semantics,
        } => {
            let instance = build_family(
                &id,
                base,
                alpha,
                ell,
                k,
                a,
                variant.as_deref(),
                n.as_deref(),
                p,
            )?;
            let mut printer = Printer::new(format, "family,params,n,multiplier,identities");
            printer.record(family_record(&instance, semantics));
            Ok(ExitCode::SUCCESS)
        }
        Command::Palmul { numbers, mode } => {
            let mode = PalindromeMode::from_str(&mode)?;
            let mut printer = Printer::new(
                format,
                "n,base,mode,core,w,m,seed,stride,count,repunit,palindrome,multiplier",
            );
            for text in numbers {
                let n = parse_number(&text)?;
                let trace = palindromic_multiple(&n, base, mode)?;
                printer.record(Record {
                    json: json!({
                        "n": trace.n.to_string(),
                        "base": trace.base,
                        "mode": mode.to_string(),
                        "core": trace.split.core.to_string(),
                        "w": trace.split.coprime.to_string(),
                        "m": trace.split.max_beta,
                        "seed": trace.seed.to_string(),
                        "stride": trace.stride,
                        "count": trace.count,
                        "repunit": trace.repunit.to_string(),
                        "palindrome": trace.palindrome.to_string(),
                        "multiplier": trace.multiplier.to_string(),
                    }),
                    csv: vec![
                        trace.n.to_string(),
                        trace.base.to_string(),
                        mode.to_string(),
                        trace.split.core.to_string(),
                        trace.split.coprime.to_string(),
                        trace.split.max_beta.to_string(),
                        trace.seed.to_string(),
                        trace.stride.to_string(),
                        trace.count.to_string(),
                        trace.repunit.to_string(),
                        trace.palindrome.to_string(),
                        trace.multiplier.to_string(),
                    ],
                    text: format!(
                        "n={} base={} mode={mode} core={} w={} m={} seed={} stride={} count={} palindrome={} multiplier={}",
                        trace.n,
                        trace.base,
                        trace.split.core,
                        trace.split.coprime,
                        trace.split.max_beta,
                        trace.seed,
                        trace.stride,
                        trace.count,
                        trace.palindrome,
                        trace.multiplier
                    ),
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::EmbedNiven { window, t } => {
            let window = parse_digit_string(&window, base)?;
            let n = niven_with_substring(&window, t)?;
            let sum = taxicab::radix::digit_sum(&n, window.base())?;
            let rendered = taxicab::radix::from_natural(&n, window.base())?;
            let mut printer = Printer::new(format, "window,base,t,n,digits,digit_sum");
            printer.record(Record {
                json: json!({
                    "window": window.to_string(),
                    "base": window.base(),
                    "t": t,
                    "n": n.to_string(),
                    "digits": rendered.to_string(),
                    "digit_sum": sum.to_string(),
                }),
                csv: vec![
                    window.to_string(),
                    window.base().to_string(),
                    t.to_string(),
                    n.to_string(),
                    rendered.to_string(),
                    sum.to_string(),
                ],
                text: format!("window={window} t={t} n={n} digits={rendered} digit_sum={sum}"),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::PatternEval {
            pattern,
            bindings,
            digits,
        } => {
            let template = PatternTemplate::parse(&pattern)?;
            let mut bound = Bindings::new();
            for text in &bindings {
                let (name, value) = parse_binding(text)?;
                bound.exponents.insert(name, value);
            }
            for text in &digits {
                let (name, value) = parse_binding(text)?;
                let digit = u32::try_from(value).map_err(|_| {
                    Error::Precondition(format!("digit binding {text} out of range"))
                })?;
                bound.digits.insert(name, digit);
            }
            let expanded = template.expand(&bound)?;
            let value = expanded.value()?;
            let mut printer = Printer::new(format, "pattern,digits,value");
            printer.record(Record {
                json: json!({
                    "pattern": template.to_string(),
                    "digits": expanded.to_string(),
                    "value": value.to_string(),
                }),
                csv: vec![
                    template.to_string(),
                    expanded.to_string(),
                    value.to_string(),
                ],
                text: format!("pattern={template} digits={expanded} value={value}"),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let reports = if suite == "all" {
                verify::run_all()?
            } else {
                vec![verify::run_suite(&suite)?]
            };
            let mut printer = Printer::new(format, "suite,family,params,check,status,detail");
            let mut totals = verify::StatusCounts::default();
            for report in &reports {
                totals += report.counts();
                for (entry, check) in report.checks() {
                    printer.record(Record {
                        json: json!({
                            "suite": report.suite,
                            "family": entry.family,
                            "params": entry.params,
                            "check": check.name,
                            "status": check.status.to_string(),
                            "detail": check.detail,
                        }),
                        csv: vec![
                            report.suite.clone(),
                            entry.family.clone(),
                            entry.params.clone(),
                            check.name.clone(),
                            check.status.to_string(),
                            check.detail.clone(),
                        ],
                        text: format!(
                            "[{}] {} {} :: {} {}{}",
                            report.suite,
                            entry.family,
                            entry.params,
                            check.status,
                            check.name,
                            display_detail(&check.detail)
                        ),
                    });
                }
            }
            let summary = json!({
                "suite": suite,
                "summary": {
                    "pass": totals.pass,
                    "fail": totals.fail,
                    "erratum_expected": totals.erratum_expected,
                },
            });
            match format {
                OutputFormat::Json => println!("{summary}"),
                OutputFormat::Csv => println!(
                    "summary,,,,{},pass={} fail={} erratum_expected={}",
                    if totals.fail == 0 { "PASS" } else { "FAIL" },
                    totals.pass,
                    totals.fail,
                    totals.erratum_expected
                ),
                OutputFormat::Text => println!(
                    "summary: pass={} fail={} erratum_expected={}",
                    totals.pass, totals.fail, totals.erratum_expected
                ),
            }
            Ok(if totals.fail == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

struct Record {
    json: Value,
    csv: Vec<String>,
    text: String,
}

struct Printer {
    format: OutputFormat,
    csv_header: &'static str,
    header_written: bool,
}

impl Printer {
    fn new(format: OutputFormat, csv_header: &'static str) -> Self {
        Printer {
            format,
            csv_header,
            header_written: false,
        }
    }

    fn record(&mut self, record: Record) {
        match self.format {
            OutputFormat::Json => println!("{}", record.json),
            OutputFormat::Csv => {
                if !self.header_written {
                    println!("{}", self.csv_header);
                    self.header_written = true;
                }
                println!(
                    "{}",
                    record
                        .csv
                        .iter()
                        .map(|f| csv_field(f))
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
            OutputFormat::Text => println!("{}", record.text),
        }
    }
}

fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_owned()
    }
}

fn parse_number(text: &str) -> Result<BigUint, Error> {
    BigUint::from_str(text)
        .map_err(|_| Error::Precondition(format!("invalid decimal number {text:?}")))
}

fn parse_digit_string(text: &str, default_base: u32) -> Result<DigitString, Error> {
    if text.contains('@') {
        text.parse()
    } else {
        format!("{text}@{default_base}").parse()
    }
}

fn parse_binding(text: &str) -> Result<(String, u64), Error> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| Error::Precondition(format!("binding {text:?} is not name=value")))?;
    let value = value
        .parse()
        .map_err(|_| Error::Precondition(format!("binding value in {text:?} is not a number")))?;
    Ok((name.trim().to_owned(), value))
}

fn search_fields(
    result: Result<Vec<BigUint>, Error>,
) -> Result<(Option<Vec<BigUint>>, &'static str, String), Error> {
    match result {
        Ok(witnesses) => Ok((Some(witnesses), "ok", String::new())),
        Err(e) if e.is_bound_exceeded() => Ok((None, "bound-exceeded", e.to_string())),
        Err(e) => Err(e),
    }
}

fn witnesses_json(witnesses: &Option<Vec<BigUint>>) -> Value {
    match witnesses {
        Some(list) => Value::Array(list.iter().map(|w| Value::String(w.to_string())).collect()),
        None => Value::Null,
    }
}

fn join_witnesses(witnesses: &Option<Vec<BigUint>>) -> String {
    match witnesses {
        Some(list) => list
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(";"),
        None => String::new(),
    }
}

fn display_witnesses(witnesses: &Option<Vec<BigUint>>) -> String {
    match witnesses {
        Some(list) => format!(
            "[{}]",
            list.iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        None => "?".into(),
    }
}

fn display_detail(detail: &str) -> String {
    if detail.is_empty() {
        String::new()
    } else {
        format!(" ({detail})")
    }
}

fn outcome_fields(outcome: &SearchOutcome) -> (Option<Vec<BigUint>>, bool, String) {
    match outcome {
        SearchOutcome::Found(list) => (Some(list.clone()), true, String::new()),
        SearchOutcome::BoundExceeded { detail } => (None, false, detail.clone()),
    }
}

fn classification_record(report: &ClassificationReport) -> Record {
    let (arh, arh_ok, arh_detail) = outcome_fields(&report.additive);
    let (mrh, mrh_ok, mrh_detail) = outcome_fields(&report.multiplicative);
    let status = if arh_ok && mrh_ok { "ok" } else { "bound-exceeded" };
    let detail = [arh_detail, mrh_detail]
        .iter()
        .filter(|d| !d.is_empty())
        .cloned()
        .collect::<Vec<_>>()
        .join("; ");
    Record {
        json: json!({
            "n": report.n.to_string(),
            "base": report.base,
            "digit_sum": report.digit_sum.to_string(),
            "palindrome": report.is_palindrome,
            "niven": report.niven,
            "arh_multipliers": witnesses_json(&arh),
            "mrh_multipliers": witnesses_json(&mrh),
            "status": status,
            "detail": detail,
        }),
        csv: vec![
            report.n.to_string(),
            report.base.to_string(),
            report.digit_sum.to_string(),
            report.is_palindrome.to_string(),
            report.niven.to_string(),
            join_witnesses(&arh),
            join_witnesses(&mrh),
            status.into(),
            detail.clone(),
        ],
        text: format!(
            "n={} base={} digit_sum={} palindrome={} niven={} arh={} mrh={} status={status}{}",
            report.n,
            report.base,
            report.digit_sum,
            report.is_palindrome,
            report.niven,
            display_witnesses(&arh),
            display_witnesses(&mrh),
            display_detail(&detail)
        ),
    }
}

#[allow(clippy::too_many_arguments)]
fn build_family(
    id: &str,
    base: u32,
    alpha: Option<u32>,
    ell: Option<u32>,
    k: Option<u64>,
    a: Option<u32>,
    variant: Option<&str>,
    n: Option<&str>,
    p: Option<u64>,
) -> Result<FamilyInstance, Error> {
    let family: FamilyId = id.parse()?;
    let need = |what: &str| Error::Precondition(format!("family {family} needs --{what}"));
    match family {
        FamilyId::Thm1 => thm1_family(
            base,
            alpha.ok_or_else(|| need("alpha"))?,
            ell.ok_or_else(|| need("ell"))?,
        ),
        FamilyId::Prop1 => prop1_family(base, ell.ok_or_else(|| need("ell"))?),
        FamilyId::Thm33 => thm33_instance(base, k.ok_or_else(|| need("k"))?),
        FamilyId::FinalA => final_a(
            base,
            a.ok_or_else(|| need("a"))?,
            k.ok_or_else(|| need("k"))?,
        ),
        FamilyId::FinalB => final_b(base, k.ok_or_else(|| need("k"))?),
        FamilyId::FinalC => final_c(base, k.ok_or_else(|| need("k"))?),
        FamilyId::Final2A => final2(base, k.ok_or_else(|| need("k"))?),
        FamilyId::Final2B => final2(2, k.ok_or_else(|| need("k"))?),
        FamilyId::Mrh10 => {
            let variant: Mrh10Variant = variant.ok_or_else(|| need("variant"))?.parse()?;
            mrh10(variant, k.ok_or_else(|| need("k"))?)
        }
        FamilyId::PalMultFamily => {
            let n = parse_number(n.ok_or_else(|| need("n"))?)?;
            palindrome_multipliers_instance(
                &n,
                base,
                u64::from(ell.ok_or_else(|| need("ell"))?),
                p.ok_or_else(|| need("p"))?,
            )
        }
        FamilyId::TrivialMrh => {
            let k = k.ok_or_else(|| need("k"))?;
            let k = u32::try_from(k)
                .map_err(|_| Error::Precondition(format!("k = {k} is too large")))?;
            trivial_mrh(base, k)
        }
    }
}

fn family_record(instance: &FamilyInstance, semantics: Option<SemanticsArg>) -> Record {
    let wanted = semantics.map(|s| match s {
        SemanticsArg::Strict => Semantics::Strict,
        SemanticsArg::Fixed => Semantics::FixedWidth,
    });
    let identities: Vec<_> = instance
        .identities
        .iter()
        .filter(|check| wanted.is_none_or(|w| check.semantics == w))
        .collect();
    let params: BTreeMap<String, String> = instance
        .params
        .iter()
        .map(|(name, value)| (name.clone(), value.to_string()))
        .collect();
    Record {
        json: json!({
            "family": instance.family.to_string(),
            "params": params,
            "n": instance.n.to_string(),
            "multiplier": instance.multiplier.as_ref().map(|m| m.to_string()),
            "identities": identities.iter().map(|check| json!({
                "description": check.description,
                "semantics": check.semantics.to_string(),
                "holds": check.holds,
            })).collect::<Vec<_>>(),
        }),
        csv: vec![
            instance.family.to_string(),
            instance.params_display(),
            instance.n.to_string(),
            instance
                .multiplier
                .as_ref()
                .map(|m| m.to_string())
                .unwrap_or_default(),
            identities
                .iter()
                .map(|check| {
                    format!(
                        "{} [{}]={}",
                        check.description, check.semantics, check.holds
                    )
                })
                .collect::<Vec<_>>()
                .join(";"),
        ],
        text: format!(
            "family={} {} n={} multiplier={} identities: {}",
            instance.family,
            instance.params_display(),
            instance.n,
            instance
                .multiplier
                .as_ref()
                .map(|m| m.to_string())
                .unwrap_or_else(|| "-".into()),
            identities
                .iter()
                .map(|check| {
                    format!(
                        "{} [{}] {}",
                        check.description,
                        check.semantics,
                        if check.holds { "holds" } else { "fails" }
                    )
                })
                .collect::<Vec<_>>()
                .join("; ")
        ),
    }
}
