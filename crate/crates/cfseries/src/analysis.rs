//! Verification engines: series↔continued-fraction equivalence, the
//! q-product/w-sequence machinery behind the transcendence argument,
//! irrationality-measure exponent certification by integer
//! cross-multiplication, the telescoping-identity suite, and the
//! convergent/partial-sum coincidence scanners.
//!
//! Every certificate here is an exact integer or rational statement that
//! can be replayed; nothing is derived from floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::confrac::{Gcf, Scf};
use crate::constructors::{
    cahen_scf, cahen_series, e_scf, inv_e_scf, kc_series, sylvester, KcPartialSum,
};
use crate::error::Error;
use crate::exact::Rat;
use crate::series::{PartialSum, TypeIISeries, TypeISeries};
use crate::Result;

/// Per-index comparison of partial sums S_n with convergent n+1.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub depth: usize,
    pub matches: Vec<bool>,
    pub first_mismatch: Option<usize>,
}

impl EquivalenceReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Either alternating series shape, seen as its partial sums.
pub trait AlternatingSeries {
    /// S_0..=S_n as possibly-unreduced pairs; cheap on towers.
    fn raw_sums(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>>;
    fn sums(&self, n_max: usize) -> Result<Vec<PartialSum>>;
}

impl AlternatingSeries for TypeISeries {
    fn raw_sums(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
        self.raw_partial_sums(n_max)
    }
    fn sums(&self, n_max: usize) -> Result<Vec<PartialSum>> {
        self.partial_sums(n_max)
    }
}

impl AlternatingSeries for TypeIISeries {
    fn raw_sums(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
        self.raw_partial_sums(n_max)
    }
    fn sums(&self, n_max: usize) -> Result<Vec<PartialSum>> {
        self.partial_sums(n_max)
    }
}

/// Compare S_n with convergent n+1 of `cf` for n ≤ depth, exactly.
/// Comparison is by cross-multiplication, so neither side is reduced.
pub fn verify_equivalence(
    series: &impl AlternatingSeries,
    cf: &Gcf,
    depth: usize,
) -> Result<EquivalenceReport> {
    let sums = series.raw_sums(depth)?;
    let convs: Vec<(BigInt, BigInt)> = if cf.first_non_integral(depth + 1)?.is_none() {
        cf.convergent_pairs_int(depth + 1)?
    } else {
        cf.convergents(depth + 1)?
            .into_iter()
            .map(|c| (c.numer().clone(), c.denom().clone()))
            .collect()
    };
    let mut matches = Vec::with_capacity(depth + 1);
    let mut first_mismatch = None;
    for (n, (num, den)) in sums.iter().enumerate() {
        let (p, q) = &convs[n + 1];
        let ok = num * q == p * den;
        if !ok && first_mismatch.is_none() {
            first_mismatch = Some(n);
        }
        matches.push(ok);
    }
    Ok(EquivalenceReport { depth, matches, first_mismatch })
}

/// The integer identities available when a type-II series is equivalent
/// to a simple continued fraction: q_n·q_{n+1} = A_0⋯A_n, q_n | a_{n+2},
/// and gcd(q_n, q_{n+1}) = 1, all for n ≤ depth.
#[derive(Clone, Debug)]
pub struct QProductReport {
    pub depth: usize,
    pub equivalence_ok: bool,
    pub product_ok: bool,
    pub divisibility_ok: bool,
    pub coprimality_ok: bool,
    pub first_failure: Option<String>,
}

impl QProductReport {
    pub fn pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn q_product_check(scf: &Scf, series: &TypeIISeries, depth: usize) -> Result<QProductReport> {
    let mut report = QProductReport {
        depth,
        equivalence_ok: true,
        product_ok: true,
        divisibility_ok: true,
        coprimality_ok: true,
        first_failure: None,
    };
    let fail = |report: &mut QProductReport, msg: String| {
        if report.first_failure.is_none() {
            report.first_failure = Some(msg);
        }
    };

    let equiv = verify_equivalence(series, &scf.to_gcf(), depth)?;
    if !equiv.pass() {
        report.equivalence_ok = false;
        fail(&mut report, format!("series/scf mismatch at n = {:?}", equiv.first_mismatch));
        return Ok(report);
    }

    let pairs = scf.convergent_pairs(depth + 1)?;
    let factors = series.factors(depth + 1)?;
    if factors.len() < depth + 1 {
        return Err(Error::StreamExhausted { at: factors.len() });
    }
    let mut product = BigInt::one();
    for n in 0..=depth {
        product *= &factors[n];
        let (_, qn) = &pairs[n];
        let (_, qn1) = &pairs[n + 1];
        if qn * qn1 != product {
            report.product_ok = false;
            fail(&mut report, format!("q_{n}·q_{} != A_0..A_{n}", n + 1));
        }
        let a_next = scf
            .quotient(n + 2)?
            .ok_or(Error::CfExhausted { at: n + 2 })?;
        if !(&a_next % qn).is_zero() {
            report.divisibility_ok = false;
            fail(&mut report, format!("q_{n} does not divide a_{}", n + 2));
        }
        if qn.gcd(qn1) != BigInt::one() {
            report.coprimality_ok = false;
            fail(&mut report, format!("gcd(q_{n}, q_{}) != 1", n + 1));
        }
    }
    Ok(report)
}

/// w_0 = a_1, w_{n+1} = a_{n+2}/q_n; `sqrt_hits` lists the indices
/// n ≥ 1 with (w_n·q_{n−1})² ≥ q_n. Infinitely many such hits exist for
/// genuine constructions; a desk check only witnesses finitely many.
#[derive(Clone, Debug)]
pub struct WSequence {
    pub depth: usize,
    pub w: Vec<BigInt>,
    pub sqrt_hits: Vec<usize>,
    pub integral_failure: Option<usize>,
}

impl WSequence {
    pub fn pass(&self) -> bool {
        self.integral_failure.is_none() && !self.sqrt_hits.is_empty()
    }
}

pub fn w_sequence(scf: &Scf, depth: usize) -> Result<WSequence> {
    let pairs = scf.convergent_pairs(depth)?;
    let mut w = Vec::with_capacity(depth + 1);
    w.push(scf.quotient(1)?.ok_or(Error::CfExhausted { at: 1 })?);
    let mut integral_failure = None;
    for n in 0..depth {
        let a_next = scf.quotient(n + 2)?.ok_or(Error::CfExhausted { at: n + 2 })?;
        let (_, qn) = &pairs[n];
        if !(&a_next % qn).is_zero() {
            integral_failure = Some(n + 1);
            break;
        }
        w.push(a_next / qn);
    }
    let mut sqrt_hits = Vec::new();
    if integral_failure.is_none() {
        for n in 1..=depth {
            let (_, q_prev) = &pairs[n - 1];
            let (_, qn) = &pairs[n];
            let lhs = &w[n] * q_prev;
            if &lhs * &lhs >= *qn {
                sqrt_hits.push(n);
            }
        }
    }
    Ok(WSequence { depth, w, sqrt_hits, integral_failure })
}

/// A rational approximation with an exact bound on its gap to the
/// constant: |α − value| < gap_bound when `gap_strict`, ≤ otherwise.
/// `denominator` is the denominator the exponent certificates use (the
/// structural one — convergent q_n or partial-sum denominator — which
/// can exceed the reduced denominator of `value`).
#[derive(Clone, Debug)]
pub struct Approximant {
    pub n: usize,
    pub value: Rat,
    pub denominator: BigInt,
    pub gap_bound: Rat,
    pub gap_strict: bool,
}

pub fn approximants_from_sums(sums: &[PartialSum]) -> Vec<Approximant> {
    sums.iter()
        .map(|s| Approximant {
            n: s.n,
            value: s.value.clone(),
            denominator: s.value.denom().clone(),
            gap_bound: s.tail_bound.clone(),
            gap_strict: s.strict,
        })
        .collect()
}

pub fn approximants_from_kc(sums: &[KcPartialSum]) -> Vec<Approximant> {
    sums.iter()
        .map(|s| Approximant {
            n: s.n,
            value: s.value.clone(),
            denominator: s.nominal_den.clone(),
            gap_bound: s.tail_bound.clone(),
            gap_strict: true,
        })
        .collect()
}

/// Convergents p_n/q_n with the classical gap bound 1/(q_n·q_{n+1}),
/// n = 1..=depth. Meaningful for infinite simple continued fractions.
pub fn approximants_from_scf(scf: &Scf, depth: usize) -> Result<Vec<Approximant>> {
    let pairs = scf.convergent_pairs(depth + 1)?;
    let mut out = Vec::with_capacity(depth);
    for n in 1..=depth {
        let (p, q) = &pairs[n];
        let (_, q_next) = &pairs[n + 1];
        out.push(Approximant {
            n,
            // coprime by the determinant identity
            value: Rat::new_raw(p.clone(), q.clone()),
            denominator: q.clone(),
            gap_bound: Rat::new(BigInt::one(), q * q_next),
            gap_strict: true,
        });
    }
    Ok(out)
}

/// Replayable integer inequality: `lhs < rhs` (or ≤ when `allow_equal`)
/// is exactly the statement gap < q^(−μ) after cross-multiplication.
#[derive(Clone, Debug)]
pub struct Witness {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub allow_equal: bool,
}

impl Witness {
    pub fn replay(&self) -> bool {
        if self.allow_equal {
            self.lhs <= self.rhs
        } else {
            self.lhs < self.rhs
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExponentCert {
    pub mu: Rat,
    pub certified: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug)]
pub struct MeasureRecord {
    pub n: usize,
    pub denominator: BigInt,
    pub gap_bound: Rat,
    pub certs: Vec<ExponentCert>,
}

#[derive(Clone, Debug)]
pub struct MeasureEstimate {
    pub records: Vec<MeasureRecord>,
    /// Largest exponent certified at any index.
    pub best: Option<Rat>,
}

/// Certify gap < q^(−μ) for each approximant and each exponent, by
/// integer cross-multiplication: with μ = u/v and gap bound g = gn/gd,
/// the certificate is gnᵛ·qᵘ < gdᵛ (≤ when the gap bound is strict).
/// Approximants with q < 2 or an exact value are never certified.
pub fn measure_scan(approximants: &[Approximant], exponents: &[Rat]) -> Result<MeasureEstimate> {
    let mut records = Vec::with_capacity(approximants.len());
    let mut best: Option<Rat> = None;
    for ap in approximants {
        let mut certs = Vec::with_capacity(exponents.len());
        for mu in exponents {
            if !mu.is_positive() {
                return Err(Error::InvalidInput(format!("exponent {mu} must be positive")));
            }
            let u = mu.numer().to_u32().ok_or_else(|| {
                Error::InvalidInput(format!("exponent numerator {} too large", mu.numer()))
            })?;
            let v = mu.denom().to_u32().ok_or_else(|| {
                Error::InvalidInput(format!("exponent denominator {} too large", mu.denom()))
            })?;
            let usable = ap.denominator >= BigInt::from(2) && ap.gap_bound.is_positive();
            let (certified, witness) = if usable {
                let lhs = ap.gap_bound.numer().pow(v) * ap.denominator.pow(u);
                let rhs = ap.gap_bound.denom().pow(v);
                let w = Witness { lhs, rhs, allow_equal: ap.gap_strict };
                (w.replay(), Some(w))
            } else {
                (false, None)
            };
            if certified {
                match &best {
                    Some(b) if b >= mu => {}
                    _ => best = Some(mu.clone()),
                }
            }
            certs.push(ExponentCert { mu: mu.clone(), certified, witness });
        }
        records.push(MeasureRecord {
            n: ap.n,
            denominator: ap.denominator.clone(),
            gap_bound: ap.gap_bound.clone(),
            certs,
        });
    }
    Ok(MeasureEstimate { records, best })
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub pass: bool,
}

/// Exact finite forms of the telescoping identities attached to the
/// Sylvester-type family (k, ℓ) and its Cahen-type constant, checked at
/// every truncation N ≤ depth.
#[derive(Clone, Debug)]
pub struct TelescopeReport {
    pub k: u64,
    pub ell: u32,
    pub depth: usize,
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

/// Unreduced fraction with positive denominator; all comparisons go
/// through cross-multiplication, so nothing tower-sized is ever reduced.
struct RawFrac {
    num: BigInt,
    den: BigInt,
}

impl RawFrac {
    fn zero() -> Self {
        RawFrac { num: BigInt::zero(), den: BigInt::one() }
    }

    fn from_pair(num: BigInt, den: BigInt) -> Self {
        RawFrac { num, den }
    }

    fn add_frac(&mut self, n: &BigInt, d: &BigInt) {
        self.num = &self.num * d + n * &self.den;
        self.den *= d;
    }

    fn sub_frac(&mut self, n: &BigInt, d: &BigInt) {
        self.num = &self.num * d - n * &self.den;
        self.den *= d;
    }

    fn eq_pair(&self, n: &BigInt, d: &BigInt) -> bool {
        &self.num * d == n * &self.den
    }

    fn eq_value(&self, other: &RawFrac) -> bool {
        self.eq_pair(&other.num, &other.den)
    }
}

pub fn telescope_suite(k: u64, ell: u32, depth: usize, cap: u64) -> Result<TelescopeReport> {
    // the even-index identity at truncation N reaches s_{2N+2}, which for
    // l = 2 sits just past the default guard at N = 6; give the family
    // room for the depth actually requested
    let cap = cap.saturating_mul(4);
    let fam = sylvester(k, ell, cap)?;
    let s = fam.terms(2 * depth + 3)?;
    // C_{k,l} partial sums as raw pairs over s_{n+1} − 1
    let c_raw = cahen_series(k, ell, cap)?.raw_partial_sums(2 * depth + 1)?;
    let mut checks = Vec::new();

    // Σ_{n=0}^{N} (s_n^l − 1)/(s_{n+1} − 1) = 1 − 1/(s_{N+1} − 1)
    {
        let mut acc = RawFrac::zero();
        let mut ok = true;
        for n in 0..=depth {
            acc.add_frac(&(s[n].pow(ell) - 1u32), &(&s[n + 1] - 1u32));
            ok &= acc.eq_pair(&(&s[n + 1] - 2u32), &(&s[n + 1] - 1u32));
        }
        checks.push(IdentityCheck { name: "unit_sum_telescope", pass: ok });
    }

    // Σ_{n=0}^{N} (s_{2n+1}^l − 1)/(s_{2n+2} − 1) = C partial sum S_{2N+1}
    {
        let mut acc = RawFrac::zero();
        let mut ok = true;
        for n in 0..=depth {
            acc.add_frac(&(s[2 * n + 1].pow(ell) - 1u32), &(&s[2 * n + 2] - 1u32));
            let (cn, cd) = &c_raw[2 * n + 1];
            ok &= acc.eq_pair(cn, cd);
        }
        checks.push(IdentityCheck { name: "even_sum_equals_cahen_partials", pass: ok });
    }

    // Σ_{n=0}^{N} (−1)^n (s_{n+1}^l − 1)/(s_{n+2} − 1)
    //   = S^C_N + S^C_{N+1} − 1/k^l   (the 2C−1 identity at (1,1))
    {
        let korl = BigInt::from(k).pow(ell);
        let mut acc = RawFrac::zero();
        let mut ok = true;
        for n in 0..=depth {
            let num = s[n + 1].pow(ell) - 1u32;
            let den = &s[n + 2] - 1u32;
            if n % 2 == 0 {
                acc.add_frac(&num, &den);
            } else {
                acc.sub_frac(&num, &den);
            }
            let mut rhs = RawFrac::from_pair(c_raw[n].0.clone(), c_raw[n].1.clone());
            rhs.add_frac(&c_raw[n + 1].0, &c_raw[n + 1].1);
            rhs.sub_frac(&BigInt::one(), &korl);
            ok &= acc.eq_value(&rhs);
        }
        checks.push(IdentityCheck { name: "alternating_sum_two_sided", pass: ok });
    }

    // ℓ = 1 only: Σ_{n=0}^{N} 1/s_{n+1} = 1/k − 1/(s_{N+2} − 1)
    if ell == 1 {
        let kk = BigInt::from(k);
        let mut acc = RawFrac::zero();
        let mut ok = true;
        for n in 0..=depth {
            acc.add_frac(&BigInt::one(), &s[n + 1]);
            let mut rhs = RawFrac::from_pair(BigInt::one(), kk.clone());
            rhs.sub_frac(&BigInt::one(), &(&s[n + 2] - 1u32));
            ok &= acc.eq_value(&rhs);
        }
        checks.push(IdentityCheck { name: "reciprocal_telescope", pass: ok });
    }

    // (1,1) only: K = 1 + K_{2,1} at matching truncations
    if (k, ell) == (1, 1) {
        let k11 = kc_series(1, 1, cap)?.partial_sums(depth + 1)?;
        let k21 = kc_series(2, 1, cap)?.partial_sums(depth)?;
        let ok = (0..=depth).all(|n| k11[n + 1].value == Rat::one() + &k21[n].value);
        checks.push(IdentityCheck { name: "kc_shift_identity", pass: ok });
    }

    let pass = checks.iter().all(|c| c.pass);
    Ok(TelescopeReport { k, ell, depth, checks, pass })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureTarget {
    /// Taylor partial sums of e⁻¹ against convergents of e⁻¹.
    InvE,
    /// Taylor partial sums of e against convergents of e.
    E,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub target: ConjectureTarget,
    pub n_convergents: usize,
    pub n_partial_sums: usize,
    /// Values appearing in both lists, ascending.
    pub coincidences: Vec<Rat>,
}

/// Exact intersection of the first `n_convergents` convergents with the
/// first `n_partial_sums` Taylor partial sums, compared as reduced
/// values, not by position.
pub fn conjecture_scan(
    target: ConjectureTarget,
    n_convergents: usize,
    n_partial_sums: usize,
) -> Result<ConjectureReport> {
    let scf = match target {
        ConjectureTarget::InvE => inv_e_scf(),
        ConjectureTarget::E => e_scf(),
    };
    let convs: HashSet<Rat> = scf.convergents(n_convergents.saturating_sub(1))?.into_iter().collect();

    let mut sums = Vec::with_capacity(n_partial_sums);
    let mut acc = Rat::zero();
    let mut factorial = BigInt::one();
    for m in 0..n_partial_sums {
        if m > 0 {
            factorial *= m as u64;
        }
        let term = Rat::new(BigInt::one(), factorial.clone());
        match target {
            ConjectureTarget::E => acc += term,
            ConjectureTarget::InvE => {
                if m % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        sums.push(acc.clone());
    }

    let mut coincidences: Vec<Rat> =
        sums.into_iter().collect::<HashSet<_>>().intersection(&convs).cloned().collect();
    coincidences.sort();
    Ok(ConjectureReport { target, n_convergents, n_partial_sums, coincidences })
}

/// Coprimality of the C_{k,1} partial quotients across parity classes:
/// gcd(a_n, a_m) = 1 for odd n ≥ 1 and even m ≥ 2, n, m ≤ depth.
#[derive(Clone, Debug)]
pub struct CoprimeReport {
    pub k: u64,
    pub depth: usize,
    pub pairs_checked: usize,
    pub first_failure: Option<(usize, usize)>,
}

impl CoprimeReport {
    pub fn pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn coprime_check(k: u64, depth: usize, cap: u64) -> Result<CoprimeReport> {
    let scf = cahen_scf(k, 1, cap)?;
    let terms = scf.terms(depth + 1)?;
    let mut pairs_checked = 0;
    let mut first_failure = None;
    for n in (1..=depth).step_by(2) {
        for m in (2..=depth).step_by(2) {
            pairs_checked += 1;
            if terms[n].gcd(&terms[m]) != BigInt::one() && first_failure.is_none() {
                first_failure = Some((n, m));
            }
        }
    }
    Ok(CoprimeReport { k, depth, pairs_checked, first_failure })
}

/// Machine-readable outcome of one named check, the shape the CLI
/// serializes: {check, params, depth, pass, first_failure, witnesses}.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub params: String,
    pub depth: usize,
    pub pass: bool,
    pub first_failure: Option<String>,
    pub witnesses: Vec<String>,
}

impl CheckReport {
    fn new(check: &str, params: &str, depth: usize, pass: bool, first_failure: Option<String>) -> Self {
        CheckReport {
            check: check.into(),
            params: params.into(),
            depth,
            pass,
            first_failure,
            witnesses: Vec::new(),
        }
    }
}

fn lcg_next(state: &mut u64) -> u64 {
    *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    *state >> 33
}

/// Deterministic pseudo-random M streams for the randomized suite runs.
pub fn random_m_streams(count: usize, len: usize, seed: u64) -> Vec<Vec<BigInt>> {
    let mut state = seed;
    (0..count)
        .map(|_| (0..len).map(|_| BigInt::from(lcg_next(&mut state) % 10 + 1)).collect())
        .collect()
}

pub fn suite_names() -> Vec<&'static str> {
    vec!["equivalence", "theorem", "measure", "decompose", "conjectures", "identities"]
}

/// Run one named verification suite (or "all") and return one report per
/// check. Deterministic: randomized parts use a fixed seed.
pub fn verify_suite(name: &str, depth: usize, cap: u64) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    match name {
        "equivalence" => suite_equivalence(depth, cap, &mut out)?,
        "theorem" => suite_theorem(depth, cap, &mut out)?,
        "measure" => suite_measure(depth, cap, &mut out)?,
        "decompose" => suite_decompose(depth, cap, &mut out)?,
        "conjectures" => suite_conjectures(&mut out)?,
        "identities" => suite_identities(depth, cap, &mut out)?,
        "all" => {
            for s in suite_names() {
                out.extend(verify_suite(s, depth, cap)?);
            }
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {other:?}; known: all, {}",
                suite_names().join(", ")
            )))
        }
    }
    Ok(out)
}

fn equivalence_check(
    name: &str,
    series: &impl AlternatingSeries,
    cf: &Gcf,
    depth: usize,
    out: &mut Vec<CheckReport>,
) -> Result<()> {
    let r = verify_equivalence(series, cf, depth)?;
    out.push(CheckReport::new(
        "equivalence",
        name,
        depth,
        r.pass(),
        r.first_mismatch.map(|n| format!("mismatch at n = {n}")),
    ));
    Ok(())
}

fn suite_equivalence(depth: usize, cap: u64, out: &mut Vec<CheckReport>) -> Result<()> {
    use crate::constructors::catalog_with_cap;

    // series against their own converted fractions
    for name in [
        "fermat",
        "primorial",
        "inv_e",
        "sin_inv(3)",
        "cos_inv(3)",
        "golden",
        "davison_shallit",
        "cahen(1,1)",
        "cahen(2,1)",
        "cahen(1,2)",
    ] {
        let e = catalog_with_cap(name, cap)?;
        if let Some(s) = &e.type_ii {
            equivalence_check(&format!("{name} type-II"), s, &s.to_cf(), depth, out)?;
        }
        if let Some(s) = &e.type_i {
            equivalence_check(&format!("{name} type-I"), s, &s.to_cf(), depth, out)?;
        }
        // entries whose series is equivalent to their simple continued fraction
        if matches!(name, "golden" | "davison_shallit" | "cahen(1,1)" | "cahen(2,1)" | "cahen(1,2)") {
            let scf = e.scf.as_ref().expect("these entries carry an scf");
            if let Some(s) = &e.type_ii {
                equivalence_check(&format!("{name} vs scf"), s, &scf.to_gcf(), depth, out)?;
            } else if let Some(s) = &e.type_i {
                equivalence_check(&format!("{name} vs scf"), s, &scf.to_gcf(), depth, out)?;
            }
        }
    }

    // the alternating Liouville constant: terms beyond n = 8 blow the
    // default digit cap (the n = 12 factor would need ~10^10 digits), so
    // the equivalence runs at a clamped depth
    let lam_depth = depth.min(5);
    let lam = catalog_with_cap("liouville_alt", cap)?;
    let s = lam.type_ii.as_ref().unwrap();
    equivalence_check("liouville_alt type-II (clamped depth)", s, &s.to_cf(), lam_depth, out)?;

    // both Fermat forms are the same series term by term
    let f = catalog_with_cap("fermat", cap)?;
    let a = f.type_i.as_ref().unwrap().partial_sums(depth)?;
    let b = f.type_ii.as_ref().unwrap().partial_sums(depth)?;
    let same = a.iter().zip(&b).all(|(x, y)| x.value == y.value);
    out.push(CheckReport::new("equivalence", "fermat type-I = type-II partial sums", depth, same, None));

    // the factorial series for 1/e is NOT equivalent to a simple
    // continued fraction: the first four convergents match, the fifth cannot
    let inv_e = catalog_with_cap("inv_e", cap)?;
    let r = verify_equivalence(
        inv_e.type_ii.as_ref().unwrap(),
        &inv_e.scf.as_ref().unwrap().to_gcf(),
        3,
    )?;
    out.push(CheckReport::new(
        "equivalence",
        "inv_e series departs from its scf at n = 3",
        3,
        r.first_mismatch == Some(3),
        None,
    ));
    Ok(())
}

fn suite_theorem(depth: usize, cap: u64, out: &mut Vec<CheckReport>) -> Result<()> {
    use crate::constructors::{build_from_m, catalog_with_cap};
    use crate::stream::IntSeq;

    let d = depth.min(12);
    for name in ["cahen(1,1)", "davison_shallit"] {
        let e = catalog_with_cap(name, cap)?;
        let scf = e.scf.as_ref().unwrap();
        let series = e.type_ii.as_ref().unwrap();
        let q = q_product_check(scf, series, d)?;
        out.push(CheckReport::new("q_product", name, d, q.pass(), q.first_failure.clone()));
        let w = w_sequence(scf, d)?;
        let mut rep = CheckReport::new(
            "w_sequence",
            name,
            d,
            w.pass(),
            w.integral_failure.map(|n| format!("w_{n} not integral")),
        );
        rep.witnesses = w.sqrt_hits.iter().map(|n| format!("sqrt hit at n = {n}")).collect();
        out.push(rep);
    }

    let rand_depth = 8.min(depth);
    for (i, m) in random_m_streams(20, rand_depth + 4, 20_260_810).into_iter().enumerate() {
        let mn = build_from_m(IntSeq::from_vec(m), cap);
        let series = mn.series();
        let q = q_product_check(mn.scf(), &series, rand_depth)?;
        let w = w_sequence(mn.scf(), rand_depth)?;
        let pass = q.pass() && w.pass();
        out.push(CheckReport::new(
            "q_product+w_sequence",
            &format!("random M #{i}"),
            rand_depth,
            pass,
            q.first_failure.or_else(|| w.integral_failure.map(|n| format!("w_{n} not integral"))),
        ));
    }
    Ok(())
}

fn suite_measure(depth: usize, cap: u64, out: &mut Vec<CheckReport>) -> Result<()> {
    use crate::constructors::catalog_with_cap;

    // |λ − S_n| < q^{−(n+3)} for the first five partial sums
    let lam = catalog_with_cap("liouville_alt", cap)?;
    let sums = lam.type_ii.as_ref().unwrap().partial_sums(4)?;
    let approx = approximants_from_sums(&sums);
    let mut all = true;
    let mut witnesses = Vec::new();
    for (i, ap) in approx.iter().enumerate() {
        let mu = Rat::from_integer(BigInt::from(i as u64 + 3));
        let est = measure_scan(std::slice::from_ref(ap), std::slice::from_ref(&mu))?;
        let c = &est.records[0].certs[0];
        all &= c.certified;
        witnesses.push(format!("n = {i}: gap < q^-{} {}", i + 3, if c.certified { "ok" } else { "FAIL" }));
    }
    let mut rep = CheckReport::new("measure", "liouville_alt factorial schedule", 4, all, None);
    rep.witnesses = witnesses;
    out.push(rep);

    // convergent gaps beating q^{−5/2} for the Cahen and Davison–Shallit constants
    let d = depth.min(12);
    for name in ["cahen(1,1)", "davison_shallit"] {
        let e = catalog_with_cap(name, cap)?;
        let approx = approximants_from_scf(e.scf.as_ref().unwrap(), d)?;
        let mu = Rat::new(BigInt::from(5), BigInt::from(2));
        let est = measure_scan(&approx, std::slice::from_ref(&mu))?;
        let hits: Vec<usize> = est
            .records
            .iter()
            .filter(|r| r.certs[0].certified)
            .map(|r| r.n)
            .collect();
        let mut rep = CheckReport::new(
            "measure",
            &format!("{name} gap < q^-5/2"),
            d,
            !hits.is_empty(),
            None,
        );
        rep.witnesses = hits.iter().map(|n| format!("certified at n = {n}")).collect();
        out.push(rep);
    }
    Ok(())
}

fn suite_decompose(depth: usize, cap: u64, out: &mut Vec<CheckReport>) -> Result<()> {
    use crate::constructors::{build_from_m, catalog_with_cap, decompose_to_m, DecomposeOutcome};
    use crate::stream::IntSeq;

    let ds = catalog_with_cap("davison_shallit", cap)?;
    let got = decompose_to_m(ds.type_ii.as_ref().unwrap(), 8)?;
    let pass = matches!(&got, DecomposeOutcome::Decomposed { m } if m.iter().all(|x| x == &BigInt::one()));
    out.push(CheckReport::new("decompose", "davison_shallit -> M = 1,1,1,...", 8, pass, None));

    let lam = catalog_with_cap("liouville_alt", cap)?;
    let got = decompose_to_m(lam.type_ii.as_ref().unwrap(), 4)?;
    let pass = matches!(&got, DecomposeOutcome::FailedAt { index: 1, .. });
    out.push(CheckReport::new("decompose", "liouville_alt fails at index 1", 4, pass, None));

    let inv_e = catalog_with_cap("inv_e", cap)?;
    let got = decompose_to_m(inv_e.type_ii.as_ref().unwrap(), 6)?;
    let pass = matches!(&got, DecomposeOutcome::FailedAt { index: 3, .. });
    out.push(CheckReport::new("decompose", "inv_e fails at index 3", 6, pass, None));

    let d = depth.min(8);
    let mut all = true;
    for m in random_m_streams(100, d, 42) {
        let mn = build_from_m(IntSeq::from_vec(m.clone()), cap);
        match decompose_to_m(&mn.series(), d.saturating_sub(1))? {
            DecomposeOutcome::Decomposed { m: got } => all &= got == m,
            DecomposeOutcome::FailedAt { .. } => all = false,
        }
    }
    out.push(CheckReport::new("decompose", "100 random M round-trips", d, all, None));
    Ok(())
}

fn suite_conjectures(out: &mut Vec<CheckReport>) -> Result<()> {
    let r = conjecture_scan(ConjectureTarget::InvE, 50, 50)?;
    let want: Vec<Rat> = vec![
        Rat::zero(),
        Rat::new(BigInt::one(), BigInt::from(3)),
        Rat::new(BigInt::from(3), BigInt::from(8)),
        Rat::new(BigInt::one(), BigInt::from(2)),
    ];
    out.push(CheckReport::new(
        "conjecture_scan",
        "inv_e coincidences = {0, 1/3, 3/8, 1/2}",
        50,
        r.coincidences == want,
        None,
    ));

    let r = conjecture_scan(ConjectureTarget::E, 50, 50)?;
    let want: Vec<Rat> =
        vec![Rat::from_integer(BigInt::from(2)), Rat::new(BigInt::from(8), BigInt::from(3))];
    out.push(CheckReport::new(
        "conjecture_scan",
        "e coincidences = {2, 8/3}",
        50,
        r.coincidences == want,
        None,
    ));
    Ok(())
}

fn suite_identities(depth: usize, cap: u64, out: &mut Vec<CheckReport>) -> Result<()> {
    use crate::confrac::lemma_check;
    use crate::constructors::{
        catalog_with_cap, cos_inv_taylor_partial, sin_inv_taylor_partial, sylvester,
    };
    use crate::series::sharpness_identity;

    for b0 in [1u64, 2, 3] {
        let r = sharpness_identity(b0, 5)?;
        out.push(CheckReport::new("sharpness_identity", &format!("B_0 = {b0}"), 5, r.pass, None));
    }

    for k in [1u64, 2, 3] {
        for ell in [1u32, 2] {
            let r = telescope_suite(k, ell, 6.min(depth), cap)?;
            let failed: Vec<&str> =
                r.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
            out.push(CheckReport::new(
                "telescope_suite",
                &format!("(k,l) = ({k},{ell})"),
                6.min(depth),
                r.pass,
                (!failed.is_empty()).then(|| failed.join(", ")),
            ));
        }
    }

    for k in [1u64, 2] {
        let r = coprime_check(k, 8, cap)?;
        out.push(CheckReport::new(
            "coprime_check",
            &format!("k = {k}"),
            8,
            r.pass(),
            r.first_failure.map(|(n, m)| format!("gcd(a_{n}, a_{m}) > 1")),
        ));
    }

    for (k, ell, d) in [(1u64, 1u32, 8usize), (1, 2, 6), (2, 1, 8)] {
        let r = crate::constructors::cahen_bound_check(k, ell, d, cap)?;
        out.push(CheckReport::new(
            "cahen_bound_check",
            &format!("(k,l) = ({k},{ell})"),
            d,
            r.pass,
            None,
        ));
    }

    for (k, ell) in [(1u64, 1u32), (1, 2), (2, 1)] {
        let fam = sylvester(k, ell, cap)?;
        let r = fam.verify(7.min(depth))?;
        out.push(CheckReport::new(
            "sylvester_identities",
            &format!("(k,l) = ({k},{ell})"),
            7.min(depth),
            r.shift_identity && r.pairwise_coprime,
            None,
        ));
    }

    // Taylor cross-checks for the sin/cos entries
    let mut ok = true;
    for k in [1u64, 2, 3, 4, 5] {
        let s = catalog_with_cap(&format!("sin_inv({k})"), cap)?.type_ii.unwrap();
        for (n, ps) in s.partial_sums(8)?.iter().enumerate() {
            ok &= ps.value == sin_inv_taylor_partial(k, n);
        }
        let c = catalog_with_cap(&format!("cos_inv({k})"), cap)?.type_ii.unwrap();
        for (n, ps) in c.partial_sums(8)?.iter().enumerate() {
            ok &= ps.value == cos_inv_taylor_partial(k, n);
        }
    }
    out.push(CheckReport::new("taylor_cross_check", "sin_inv, cos_inv for k <= 5", 8, ok, None));

    // irrationality hypothesis checks on the two standing examples
    let golden_cf = Gcf::from_fn(0, |_, _| Ok(Some((Rat::one(), Rat::one()))));
    let d = depth.max(50);
    let r = lemma_check(&golden_cf, d)?;
    let pass = matches!(r.verdict, crate::confrac::LemmaVerdict::HypothesesHold { .. })
        && r.tails.bounds.iter().all(|t| t.in_unit_interval);
    out.push(CheckReport::new("lemma_check", "all-ones fraction (1/phi)", d, pass, None));

    let p = catalog_with_cap("primorial", cap)?.type_ii.unwrap();
    let d = depth.max(20);
    let r = lemma_check(&p.to_cf(), d)?;
    let pass = matches!(r.verdict, crate::confrac::LemmaVerdict::HypothesesHold { .. })
        && r.tails.bounds.iter().all(|t| t.in_unit_interval);
    out.push(CheckReport::new("lemma_check", "primorial type-II fraction", d, pass, None));
    Ok(())
}
