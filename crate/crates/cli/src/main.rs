//! cfseries: exact constants, series, and continued fractions at the
//! command line.
//!
//! Exit codes: 0 success, 1 verification or computation failure, 2 usage
//! error. Output is deterministic byte for byte. The decimal digit cap
//! on fast-growing sequences can be overridden with the
//! `CFSERIES_DIGIT_CAP` environment variable.

mod target;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use cfseries::analysis::{
    approximants_from_kc, approximants_from_scf, approximants_from_sums, measure_scan,
    verify_suite, Approximant,
};
use cfseries::constructors::{bfile, decompose_to_m, CatalogEntry, DecomposeOutcome};
use cfseries::exact::{render_decimal, Rat};
use cfseries::series::pierce_expand;
use cfseries::stream::{approx_decimal_digits, DEFAULT_DIGIT_CAP};
use cfseries::{BigInt, Error};
use num_traits_shim::{pow10, rat_is_zero};

use target::{entry_of, parse_rational, resolve, Target};

/// Local helpers so the binary does not need the num crates directly.
mod num_traits_shim {
    use cfseries::{BigInt, Rat};

    pub fn pow10(e: usize) -> BigInt {
        let ten = BigInt::from(10);
        let mut acc = BigInt::from(1);
        for _ in 0..e {
            acc *= &ten;
        }
        acc
    }

    pub fn rat_is_zero(r: &Rat) -> bool {
        r.numer() == &BigInt::from(0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "cfseries",
    version,
    about = "Exact arithmetic for alternating series, continued fractions, and Pierce/Engel expansions",
    after_help = "Targets are catalog names (fermat, primorial, inv_e, sin_inv(k), cos_inv(k), \
golden, liouville_alt, davison_shallit, cahen(k,l), kellogg_curtiss(k,l), e_minus_1_scf, \
sylvester(k,l)) or inline specs: typeI:B=1,3,15  typeII:A=2,3,4  M=1,2,3  M=1...  scf=0,2,1,2  rat=7/10"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decimal digits of a constant (truncated, never rounded)
    Digits {
        target: String,
        /// Fraction digits to print
        #[arg(long, default_value_t = 15)]
        digits: usize,
        /// Maximum series/convergent depth
        #[arg(long, default_value_t = 12)]
        depth: usize,
        /// Print only digits guaranteed by the exact tail bound
        #[arg(long)]
        certified: bool,
    },
    /// Continued fraction prefix of a target
    Cf {
        target: String,
        /// Entries to print (including the integer part for simple fractions)
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Integer stream behind a target, optionally with partial sums
    Series {
        target: String,
        #[arg(long, default_value_t = 12)]
        terms: usize,
        /// Also print the partial-sum table as JSON records
        #[arg(long)]
        sums: bool,
    },
    /// Greedy Pierce expansion of a rational in (0, 1]
    Pierce {
        rational: String,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Run the three-step construction on an M stream (target M=...)
    Construct {
        target: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Recover the M stream behind a type-II series, or report where it fails
    Decompose {
        target: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Run verification suites; exit 1 if any check fails
    Verify {
        /// all, equivalence, theorem, measure, decompose, conjectures, identities
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
    /// Certify irrationality-measure exponents for a target
    Measure {
        target: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        /// Exponents to test, comma separated (integers or fractions)
        #[arg(long, value_delimiter = ',', default_value = "2,5/2")]
        mu: Vec<String>,
    },
    /// OEIS-style b-file ("n a(n)" per line, 0-indexed) for a target's stream
    Bfile {
        target: String,
        #[arg(long, default_value_t = 16)]
        terms: usize,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCatalog { .. } | Error::InvalidInput(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn digit_cap() -> u64 {
    std::env::var("CFSERIES_DIGIT_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DIGIT_CAP)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn resolve_target(text: &str) -> Result<Target, Failure> {
    resolve(text, digit_cap()).map_err(Failure::Usage)
}

fn require_entry(t: Target, what: &str) -> Result<CatalogEntry, Failure> {
    entry_of(t).ok_or_else(|| Failure::Usage(format!("target has no {what}")))
}

/// Deepen the approximation until the tail bound clears the requested
/// digits (or the stream, cap, or depth limit ends it).
fn value_with_bound_adaptive(
    entry: &CatalogEntry,
    digits: usize,
    max_depth: usize,
) -> Result<(Rat, Rat), Failure> {
    let threshold = Rat::new(BigInt::from(1), pow10(digits + 2));
    let mut last: Option<(Rat, Rat)> = None;
    for d in 0..=max_depth {
        match entry.value_with_bound(d) {
            Ok((v, b, _)) => {
                let done = rat_is_zero(&b) || b < threshold;
                last = Some((v, b));
                if done {
                    break;
                }
            }
            Err(Error::DigitCapExceeded { .. })
            | Err(Error::StreamExhausted { .. })
            | Err(Error::CfExhausted { .. }) => break,
            Err(e) => return Err(e.into()),
        }
    }
    last.ok_or_else(|| Failure::Runtime("no computable approximation for target".into()))
}

fn int_list_json(items: &[BigInt]) -> String {
    let parts: Vec<String> = items.iter().map(|t| t.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn sums_json_lines(entry: &CatalogEntry, n_max: usize) -> Result<String, Failure> {
    let sums = entry.partial_sums(n_max).map_err(Failure::from)?;
    let mut out = String::new();
    for s in &sums {
        out.push_str(&format!(
            "{{\"n\":{},\"num\":\"{}\",\"den\":\"{}\",\"tail_num\":\"{}\",\"tail_den\":\"{}\"}}\n",
            s.n,
            s.value.numer(),
            s.value.denom(),
            s.tail_bound.numer(),
            s.tail_bound.denom(),
        ));
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let cap = digit_cap();
    match &cli.cmd {
        Cmd::Digits { target, digits, depth, certified } => {
            let t = resolve_target(target)?;
            let (value, bound) = match t {
                Target::Rational(r) => (r, Rat::new(BigInt::from(0), BigInt::from(1))),
                other => {
                    let entry = require_entry(other, "value")?;
                    value_with_bound_adaptive(&entry, *digits, *depth)?
                }
            };
            let rendered = if *certified {
                render_decimal(&value, &bound, *digits).map_err(Failure::from)?
            } else {
                let zero = Rat::new(BigInt::from(0), BigInt::from(1));
                render_decimal(&value, &zero, *digits).map_err(Failure::from)?
            };
            match cli.format {
                Format::Text => println!("{}", rendered.digits()),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "digits": rendered.digits(),
                        "certified": *certified,
                        "exact": rendered.exact && !rendered.truncated,
                    })
                ),
            }
            Ok(true)
        }

        Cmd::Cf { target, terms } => {
            let t = resolve_target(target)?;
            let json = match t {
                Target::Scf(scf) => scf.to_json_prefix(*terms).map_err(Failure::from)?,
                Target::Rational(r) => cfseries::confrac::scf_of_rational(&r)
                    .to_json_prefix(*terms)
                    .map_err(Failure::from)?,
                Target::Construction(mn) => mn.scf().to_json_prefix(*terms).map_err(Failure::from)?,
                Target::Sylvester(_) => {
                    return Err(Failure::Usage(
                        "sylvester(k,l) is an integer sequence; use `series` or `bfile`".into(),
                    ))
                }
                other => {
                    let entry = require_entry(other, "continued fraction")?;
                    if let Some(scf) = &entry.scf {
                        scf.to_json_prefix(*terms).map_err(Failure::from)?
                    } else if let Some(s) = &entry.type_ii {
                        s.to_cf().to_json_prefix(*terms).map_err(Failure::from)?
                    } else if let Some(s) = &entry.type_i {
                        s.to_cf().to_json_prefix(*terms).map_err(Failure::from)?
                    } else if entry.kc.is_some() {
                        return Err(Failure::Usage(
                            "kellogg_curtiss targets are Engel series; use `series` or `digits`".into(),
                        ));
                    } else {
                        return Err(Failure::Usage("target has no continued fraction".into()));
                    }
                }
            };
            println!("{json}");
            Ok(true)
        }

        Cmd::Series { target, terms, sums } => {
            let t = resolve_target(target)?;
            if let Target::Sylvester(fam) = &t {
                if *sums {
                    return Err(Failure::Usage("sylvester(k,l) has no partial sums; drop --sums".into()));
                }
                println!("{}", int_list_json(&fam.terms(*terms).map_err(Failure::from)?));
                return Ok(true);
            }
            let entry = require_entry(t, "series")?;
            let stream = if let Some(s) = &entry.type_ii {
                s.factors(*terms).map_err(Failure::from)?
            } else if let Some(s) = &entry.type_i {
                s.denominators(*terms).map_err(Failure::from)?
            } else if let Some(kc) = &entry.kc {
                kc.engel().seq().take_upto(*terms).map_err(Failure::from)?
            } else {
                return Err(Failure::Usage(format!(
                    "{} has no series representation; use `cf`",
                    entry.name
                )));
            };
            println!("{}", int_list_json(&stream));
            if *sums {
                let n_max = terms.saturating_sub(1).min(stream.len().saturating_sub(1));
                print!("{}", sums_json_lines(&entry, n_max)?);
            }
            Ok(true)
        }

        Cmd::Pierce { rational, depth } => {
            let r = parse_rational(rational).map_err(Failure::Usage)?;
            let p = pierce_expand(&r, *depth).map_err(Failure::from)?;
            match cli.format {
                Format::Text => println!(
                    "{} {}",
                    int_list_json(&p.terms),
                    if p.terminated { "terminating" } else { "truncated" }
                ),
                Format::Json => {
                    let terms: Vec<String> = p.terms.iter().map(|t| t.to_string()).collect();
                    println!(
                        "{}",
                        serde_json::json!({ "terms": terms, "terminated": p.terminated })
                    );
                }
            }
            Ok(true)
        }

        Cmd::Construct { target, depth } => {
            let t = resolve_target(target)?;
            let mn = match t {
                Target::Construction(mn) => mn,
                _ => return Err(Failure::Usage("construct takes an M=... target".into())),
            };
            let a = mn.a_seq().take_upto(*depth).map_err(Failure::from)?;
            let mut n_terms = Vec::new();
            for i in 1..=*depth {
                match mn.big_n(i).map_err(Failure::from)? {
                    Some(v) => n_terms.push(v),
                    None => break,
                }
            }
            let scf = mn.scf().terms(depth + 1).map_err(Failure::from)?;
            match cli.format {
                Format::Text => {
                    println!("A: {}", int_list_json(&a));
                    println!("N: {}", int_list_json(&n_terms));
                    println!("scf: {}", int_list_json(&scf));
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "a": a.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "n": n_terms.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "scf": scf.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                ),
            }
            Ok(true)
        }

        Cmd::Decompose { target, depth } => {
            let t = resolve_target(target)?;
            let entry = require_entry(t, "type-II series")?;
            let series = entry
                .type_ii
                .as_ref()
                .ok_or_else(|| Failure::Usage(format!("{} has no type-II series", entry.name)))?;
            match decompose_to_m(series, *depth).map_err(Failure::from)? {
                DecomposeOutcome::Decomposed { m } => match cli.format {
                    Format::Text => println!("M: {}", int_list_json(&m)),
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({"m": m.iter().map(|x| x.to_string()).collect::<Vec<_>>()})
                    ),
                },
                DecomposeOutcome::FailedAt { index, reason } => match cli.format {
                    Format::Text => println!("failure at index {index}: {reason}"),
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({"failed_at": index, "reason": reason})
                    ),
                },
            }
            Ok(true)
        }

        Cmd::Verify { suite, depth } => {
            let reports = verify_suite(suite, *depth, cap).map_err(|e| match e {
                Error::InvalidInput(m) => Failure::Usage(m),
                other => Failure::from(other),
            })?;
            let all_pass = reports.iter().all(|r| r.pass);
            match cli.format {
                Format::Text => {
                    for r in &reports {
                        let status = if r.pass { "PASS" } else { "FAIL" };
                        match &r.first_failure {
                            Some(f) => println!("{status} {} [{}] depth={} ({f})", r.check, r.params, r.depth),
                            None => println!("{status} {} [{}] depth={}", r.check, r.params, r.depth),
                        }
                    }
                    let passed = reports.iter().filter(|r| r.pass).count();
                    println!("{passed}/{} checks passed", reports.len());
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
                }
            }
            Ok(all_pass)
        }

        Cmd::Measure { target, depth, mu } => {
            let exps: Vec<Rat> = mu
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_, _>>()
                .map_err(Failure::Usage)?;
            let t = resolve_target(target)?;
            let exploratory = matches!(&t, Target::Entry(e)
                if e.name == "primorial" || e.name.starts_with("kellogg_curtiss"));
            let entry = require_entry(t, "approximants")?;
            let approximants: Vec<Approximant> = if let Some(scf) = &entry.scf {
                approximants_from_scf(scf, *depth).map_err(Failure::from)?
            } else if let Some(kc) = &entry.kc {
                approximants_from_kc(&kc.partial_sums(*depth).map_err(Failure::from)?)
            } else {
                approximants_from_sums(&entry.partial_sums(*depth).map_err(Failure::from)?)
            };
            let est = measure_scan(&approximants, &exps).map_err(Failure::from)?;
            match cli.format {
                Format::Text => {
                    if exploratory {
                        println!("note: exploratory scan; no finite exponent criterion is known for this constant");
                    }
                    for r in &est.records {
                        let q = if r.denominator.to_string().len() <= 30 {
                            format!("q={}", r.denominator)
                        } else {
                            format!("q~10^{}", approx_decimal_digits(&r.denominator) - 1)
                        };
                        let certs: Vec<String> = r
                            .certs
                            .iter()
                            .map(|c| format!("mu={}:{}", c.mu, if c.certified { "certified" } else { "no" }))
                            .collect();
                        println!("n={} {} {}", r.n, q, certs.join(" "));
                    }
                    match &est.best {
                        Some(b) => println!("largest certified exponent: {b}"),
                        None => println!("largest certified exponent: none"),
                    }
                }
                Format::Json => {
                    let records: Vec<serde_json::Value> = est
                        .records
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "n": r.n,
                                "q": r.denominator.to_string(),
                                "gap_num": r.gap_bound.numer().to_string(),
                                "gap_den": r.gap_bound.denom().to_string(),
                                "certs": r.certs.iter().map(|c| serde_json::json!({
                                    "mu": c.mu.to_string(),
                                    "certified": c.certified,
                                })).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "exploratory": exploratory,
                            "records": records,
                            "best": est.best.as_ref().map(|b| b.to_string()),
                        })
                    );
                }
            }
            Ok(true)
        }

        Cmd::Bfile { target, terms } => {
            let t = resolve_target(target)?;
            let stream = match t {
                Target::Sylvester(fam) => fam.terms(*terms).map_err(Failure::from)?,
                Target::Scf(scf) => scf.terms(*terms).map_err(Failure::from)?,
                Target::Rational(r) => {
                    cfseries::confrac::scf_of_rational(&r).terms(*terms).map_err(Failure::from)?
                }
                other => {
                    let entry = require_entry(other, "integer stream")?;
                    if let Some(s) = &entry.type_ii {
                        s.factors(*terms).map_err(Failure::from)?
                    } else if let Some(s) = &entry.type_i {
                        s.denominators(*terms).map_err(Failure::from)?
                    } else if let Some(kc) = &entry.kc {
                        kc.engel().seq().take_upto(*terms).map_err(Failure::from)?
                    } else if let Some(scf) = &entry.scf {
                        scf.terms(*terms).map_err(Failure::from)?
                    } else {
                        return Err(Failure::Usage("target has no integer stream".into()));
                    }
                }
            };
            print!("{}", bfile(&stream));
            Ok(true)
        }
    }
}
