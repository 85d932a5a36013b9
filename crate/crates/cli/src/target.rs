//! Target resolution: catalog names like `cahen(1,1)` and inline specs
//! like `typeII:A=2,3,4,5`, `M=1...`, `scf=0,2,1,2`, `rat=7/10`.

use cfseries::confrac::{scf_of_rational, Scf};
use cfseries::constructors::{build_from_m, catalog_with_cap, sylvester, CatalogEntry, MnConstruction, SylvesterFamily};
use cfseries::exact::rat_normalize;
use cfseries::series::{TypeIISeries, TypeISeries};
use cfseries::stream::IntSeq;
use cfseries::{BigInt, Rat};

pub enum Target {
    Entry(CatalogEntry),
    TypeI(TypeISeries),
    TypeII(TypeIISeries),
    Construction(MnConstruction),
    Scf(Scf),
    Rational(Rat),
    Sylvester(SylvesterFamily),
}

fn parse_int_list(text: &str) -> Result<Vec<BigInt>, String> {
    text.split(',')
        .enumerate()
        .map(|(i, s)| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("bad integer {:?} at index {i}", s.trim()))
        })
        .collect()
}

pub fn parse_rational(text: &str) -> Result<Rat, String> {
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad numerator {num:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("bad denominator {den:?}"))?;
    rat_normalize(num, den).map_err(|e| e.to_string())
}

/// Resolve a target string. Inline specs are validated up front and fail
/// with the first offending index; everything else is tried against the
/// catalog.
pub fn resolve(text: &str, cap: u64) -> Result<Target, String> {
    let text = text.trim();

    if let Some(rest) = text.strip_prefix("typeI:B=") {
        let b = parse_int_list(rest)?;
        for (i, v) in b.iter().enumerate() {
            if v <= &BigInt::from(0) {
                return Err(format!("typeI:B error at index {i}: terms must be positive"));
            }
            if i > 0 && v <= &b[i - 1] {
                return Err(format!("typeI:B error at index {i}: not strictly increasing"));
            }
        }
        return Ok(Target::TypeI(TypeISeries::from_vec(b)));
    }

    if let Some(rest) = text.strip_prefix("typeII:A=") {
        let a = parse_int_list(rest)?;
        for (i, v) in a.iter().enumerate() {
            let min = if i == 0 { 1 } else { 2 };
            if v < &BigInt::from(min) {
                return Err(format!("typeII:A error at index {i}: need A_{i} >= {min}"));
            }
        }
        return Ok(Target::TypeII(TypeIISeries::from_vec(a)));
    }

    if let Some(rest) = text.strip_prefix("M=") {
        let (list, repeat_last) = match rest.strip_suffix("...") {
            Some(prefix) => (prefix.trim_end_matches(','), true),
            None => (rest, false),
        };
        let m = parse_int_list(list)?;
        for (i, v) in m.iter().enumerate() {
            if v < &BigInt::from(1) {
                return Err(format!("M error at index {i}: entries must be >= 1"));
            }
        }
        if m.is_empty() {
            return Err("M needs at least one entry".into());
        }
        let seq = if repeat_last {
            let last = m.last().unwrap().clone();
            let prefix = m.clone();
            IntSeq::from_fn(move |i, _| {
                Ok(Some(prefix.get(i).cloned().unwrap_or_else(|| last.clone())))
            })
        } else {
            IntSeq::from_vec(m)
        };
        return Ok(Target::Construction(build_from_m(seq, cap)));
    }

    if let Some(rest) = text.strip_prefix("scf=") {
        let terms = parse_int_list(rest)?;
        if terms.is_empty() {
            return Err("scf needs at least an integer part".into());
        }
        for (i, v) in terms.iter().enumerate().skip(1) {
            if v < &BigInt::from(1) {
                return Err(format!("scf error at index {i}: partial quotients must be >= 1"));
            }
        }
        return Ok(Target::Scf(Scf::from_terms(terms).map_err(|e| e.to_string())?));
    }

    if let Some(rest) = text.strip_prefix("rat=") {
        return Ok(Target::Rational(parse_rational(rest)?));
    }

    if text.starts_with("sylvester(") {
        let args = text
            .strip_prefix("sylvester(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| format!("bad sylvester target {text:?}"))?;
        let parts: Vec<u64> = args
            .split(',')
            .map(|s| s.trim().parse::<u64>().map_err(|_| format!("bad sylvester arguments {args:?}")))
            .collect::<Result<_, _>>()?;
        if parts.len() != 2 {
            return Err("sylvester takes two arguments: sylvester(k,l)".into());
        }
        return Ok(Target::Sylvester(
            sylvester(parts[0], parts[1] as u32, cap).map_err(|e| e.to_string())?,
        ));
    }

    // bare p/q is accepted where a rational makes sense
    if text.contains('/') && !text.contains('(') {
        return Ok(Target::Rational(parse_rational(text)?));
    }

    catalog_with_cap(text, cap).map(Target::Entry).map_err(|e| e.to_string())
}

pub fn entry_of(target: Target) -> Option<CatalogEntry> {
    match target {
        Target::Entry(e) => Some(e),
        Target::TypeI(s) => Some(CatalogEntry {
            name: "typeI".into(),
            definition: "inline type-I series".into(),
            type_i: Some(s),
            type_ii: None,
            kc: None,
            scf: None,
        }),
        Target::TypeII(s) => Some(CatalogEntry {
            name: "typeII".into(),
            definition: "inline type-II series".into(),
            type_i: None,
            type_ii: Some(s),
            kc: None,
            scf: None,
        }),
        Target::Construction(mn) => Some(CatalogEntry {
            name: "M-construction".into(),
            definition: "inline M construction".into(),
            type_i: None,
            type_ii: Some(mn.series()),
            kc: None,
            scf: Some(mn.scf().clone()),
        }),
        Target::Scf(scf) => Some(CatalogEntry {
            name: "scf".into(),
            definition: "inline simple continued fraction".into(),
            type_i: None,
            type_ii: None,
            kc: None,
            scf: Some(scf),
        }),
        Target::Rational(r) => Some(CatalogEntry {
            name: "rational".into(),
            definition: "exact rational".into(),
            type_i: None,
            type_ii: None,
            kc: None,
            scf: Some(scf_of_rational(&r)),
        }),
        Target::Sylvester(_) => None,
    }
}
