//! Named sequence and constant generators: the three-step M/N
//! construction whose alternating series is equivalent to a simple
//! continued fraction (with its converse decomposition), Sylvester-type
//! sequence families, Cahen-type and Kellogg–Curtiss-type constants, and
//! a catalog of classical constants used throughout the test suites.
//!
//! Fast-growing generators take a decimal digit cap (default
//! [`DEFAULT_DIGIT_CAP`](crate::stream::DEFAULT_DIGIT_CAP)) and stop with
//! a diagnostic instead of materializing tower-sized terms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::confrac::Scf;
use crate::error::Error;
use crate::exact::Rat;
use crate::series::{EngelSeries, PartialSum, TypeIISeries, TypeISeries};
use crate::stream::{IntSeq, DEFAULT_DIGIT_CAP};
use crate::Result;

/// The three-step construction: from positive integers M_n build
///
/// ```text
/// N_1 = 1, N_2 = M_0, N_{n+2} = (M_n·N_{n+1} + 1)·N_n
/// A_0 = M_0,          A_n = M_n·N_{n+1} + 1
/// ```
///
/// The alternating series Σ (−1)ⁿ/(A_0⋯A_n) is then equivalent to the
/// simple continued fraction [0, M_0, M_1N_1, M_2N_2, …], and the A_n
/// strictly increase (the series is a Pierce expansion).
#[derive(Clone)]
pub struct MnConstruction {
    m: IntSeq,
    n_stream: IntSeq,
    a: IntSeq,
    scf: Scf,
}

impl MnConstruction {
    pub fn m_seq(&self) -> &IntSeq {
        &self.m
    }

    /// N_i for i ≥ 1.
    pub fn big_n(&self, i: usize) -> Result<Option<BigInt>> {
        assert!(i >= 1, "N is 1-based");
        self.n_stream.get(i - 1)
    }

    pub fn a_seq(&self) -> &IntSeq {
        &self.a
    }

    pub fn series(&self) -> TypeIISeries {
        TypeIISeries::new(self.a.clone())
    }

    pub fn scf(&self) -> &Scf {
        &self.scf
    }
}

pub fn build_from_m(m: IntSeq, cap: u64) -> MnConstruction {
    let m_checked = {
        let m = m.clone();
        IntSeq::from_fn(move |i, _| match m.get(i)? {
            Some(v) if v >= BigInt::one() => Ok(Some(v)),
            Some(v) => Err(Error::InvalidInput(format!("M_{i} = {v} must be >= 1"))),
            None => Ok(None),
        })
    };

    let n_stream = {
        let m = m_checked.clone();
        IntSeq::from_fn_capped(cap, move |i, prefix| {
            Ok(match i {
                0 => Some(BigInt::one()),
                1 => m.get(0)?,
                _ => match m.get(i - 1)? {
                    None => None,
                    Some(mi) => Some((mi * &prefix[i - 1] + 1) * &prefix[i - 2]),
                },
            })
        })
    };

    let a = {
        let m = m_checked.clone();
        let n = n_stream.clone();
        IntSeq::from_fn_capped(cap, move |i, _| {
            Ok(match (m.get(i)?, if i == 0 { None } else { n.get(i)? }) {
                (Some(m0), None) if i == 0 => Some(m0),
                (Some(mi), Some(ni1)) => Some(mi * ni1 + 1),
                _ => None,
            })
        })
    };

    let quotients = {
        let m = m_checked.clone();
        let n = n_stream.clone();
        IntSeq::from_fn_capped(cap, move |i, _| {
            Ok(match i {
                0 => m.get(0)?,
                _ => match (m.get(i)?, n.get(i - 1)?) {
                    (Some(mi), Some(ni)) => Some(mi * ni),
                    _ => None,
                },
            })
        })
    };

    MnConstruction { m: m_checked, n_stream, a, scf: Scf::new(0, quotients) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeOutcome {
    Decomposed { m: Vec<BigInt> },
    FailedAt { index: usize, reason: String },
}

/// Invert the construction: recover M from an A-stream, or report the
/// first index where the required divisibility N_{n+1} | (A_n − 1)
/// fails — exactly when the series is not equivalent to a simple
/// continued fraction.
pub fn decompose_to_m(series: &TypeIISeries, depth: usize) -> Result<DecomposeOutcome> {
    let a0 = series.factor(0)?.ok_or(Error::StreamExhausted { at: 0 })?;
    let mut m = vec![a0.clone()];
    let mut n_seq = vec![BigInt::one(), a0]; // N_1, N_2
    for idx in 1..=depth {
        let an = match series.factor(idx)? {
            Some(v) => v,
            None => break,
        };
        let d = &n_seq[idx]; // N_{idx+1}
        let am1: BigInt = &an - 1u32;
        if !(&am1 % d).is_zero() {
            return Ok(DecomposeOutcome::FailedAt {
                index: idx,
                reason: format!("N_{} = {} does not divide A_{} - 1 = {}", idx + 1, d, idx, am1),
            });
        }
        let mi = &am1 / d;
        if mi < BigInt::one() {
            return Ok(DecomposeOutcome::FailedAt {
                index: idx,
                reason: format!("recovered M_{idx} = {mi} is not positive"),
            });
        }
        m.push(mi);
        n_seq.push(an * &n_seq[idx - 1]); // N_{idx+2} = A_idx · N_idx
    }
    Ok(DecomposeOutcome::Decomposed { m })
}

/// Sylvester-type family s_0 = k, s_n = (s_0⋯s_{n−1})^ℓ + 1. The
/// classical Sylvester sequence 2, 3, 7, 43, … is (s_{n+1}(1,1)).
#[derive(Clone)]
pub struct SylvesterFamily {
    pub k: u64,
    pub ell: u32,
    s: IntSeq,
}

pub fn sylvester(k: u64, ell: u32, cap: u64) -> Result<SylvesterFamily> {
    if k < 1 || ell < 1 {
        return Err(Error::InvalidInput("sylvester family needs k >= 1 and l >= 1".into()));
    }
    let mut prod = BigInt::one();
    let s = IntSeq::from_fn_capped(cap, move |i, _| {
        let term = if i == 0 { BigInt::from(k) } else { prod.pow(ell) + 1 };
        prod *= &term;
        Ok(Some(term))
    });
    Ok(SylvesterFamily { k, ell, s })
}

#[derive(Clone, Debug)]
pub struct SylvesterReport {
    /// s_{n+1} − 1 = (s_n − 1)·s_nˡ for 1 ≤ n < depth.
    pub shift_identity: bool,
    pub pairwise_coprime: bool,
}

impl SylvesterFamily {
    pub fn term(&self, n: usize) -> Result<BigInt> {
        Ok(self.s.get(n)?.expect("sylvester streams are infinite"))
    }

    pub fn terms(&self, upto: usize) -> Result<Vec<BigInt>> {
        self.s.take_exact(upto)
    }

    pub fn seq(&self) -> &IntSeq {
        &self.s
    }

    pub fn verify(&self, depth: usize) -> Result<SylvesterReport> {
        let terms = self.terms(depth + 1)?;
        let mut shift_identity = true;
        for n in 1..depth {
            let lhs = &terms[n + 1] - 1;
            let rhs = (&terms[n] - 1) * terms[n].pow(self.ell);
            if lhs != rhs {
                shift_identity = false;
            }
        }
        let mut pairwise_coprime = true;
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                if terms[i].gcd(&terms[j]) != BigInt::one() {
                    pairwise_coprime = false;
                }
            }
        }
        Ok(SylvesterReport { shift_identity, pairwise_coprime })
    }
}

/// Simple continued fraction of the Cahen-type constant
/// C_{k,ℓ} = Σ (−1)ⁿ/(s_{n+1} − 1): a_1 = s_0ˡ and
/// a_{n+1} = (s_nˡ − 1)·Π_{i<n} (s_iˡ)^{(−1)^{n+i}}, every quotient an
/// integer (asserted at runtime).
pub fn cahen_scf(k: u64, ell: u32, cap: u64) -> Result<Scf> {
    let fam = sylvester(k, ell, cap)?;
    let mut x = Rat::one(); // x_n, maintained via x_{n+1} = 1/(s_n^l · x_n)
    let quotients = IntSeq::from_fn_capped(cap, move |i, _| {
        let sl = fam.term(i)?.pow(ell);
        if i == 0 {
            x = Rat::new(BigInt::one(), sl.clone());
            return Ok(Some(sl));
        }
        let a = Rat::from_integer(&sl - 1) * &x;
        if !a.is_integer() {
            return Err(Error::InternalIdentity(format!(
                "cahen partial quotient a_{} = {a} is not an integer",
                i + 1
            )));
        }
        x = (Rat::from_integer(sl) * &x).recip();
        Ok(Some(a.to_integer()))
    });
    Ok(Scf::new(0, quotients))
}

/// The ℓ = 1 closed pattern [0, s_0, 1, s_0², s_1², (s_0s_2)²,
/// (s_1s_3)², …]; cross-checked against [`cahen_scf`] in the suites.
pub fn cahen_scf_l1_pattern(k: u64, cap: u64) -> Result<Scf> {
    let fam = sylvester(k, 1, cap)?;
    let mut prods = [BigInt::one(), BigInt::one()]; // even-index product, odd-index product
    let quotients = IntSeq::from_fn_capped(cap, move |i, _| {
        Ok(Some(match i {
            0 => fam.term(0)?,
            1 => BigInt::one(),
            _ => {
                let m = i - 2;
                prods[m % 2] *= fam.term(m)?;
                let p = &prods[m % 2];
                p * p
            }
        }))
    });
    Ok(Scf::new(0, quotients))
}

/// The type-II series for C_{k,ℓ}: A_n = s_nˡ, with the product identity
/// A_0⋯A_n = s_{n+1} − 1 asserted at every depth.
pub fn cahen_series(k: u64, ell: u32, cap: u64) -> Result<TypeIISeries> {
    let fam = sylvester(k, ell, cap)?;
    let mut prod = BigInt::one();
    let a = IntSeq::from_fn_capped(cap, move |n, _| {
        let an = fam.term(n)?.pow(ell);
        prod *= &an;
        let next = fam.term(n + 1)?;
        if prod != &next - 1 {
            return Err(Error::InternalIdentity(format!(
                "product A_0..A_{n} does not equal s_{} - 1",
                n + 1
            )));
        }
        Ok(Some(an))
    });
    Ok(TypeIISeries::new(a))
}

/// Kellogg–Curtiss-type constant K_{k,ℓ} = Σ 1/(s_{n+1} − 1), as an Engel
/// series with factors A_n = s_nˡ and the sharpened tail bound
/// 1/Q^{ℓ+1} at the structural denominator Q = s_{n+1} − 1.
#[derive(Clone)]
pub struct KelloggCurtiss {
    pub k: u64,
    pub ell: u32,
    family: SylvesterFamily,
    engel: EngelSeries,
}

/// One Kellogg–Curtiss partial sum. `value` is canonical; `nominal_den`
/// is the structural denominator s_{n+1} − 1 the tail bound certifies
/// against (the reduced denominator can be smaller). The bound is
/// strict: |K − value| < tail_bound.
#[derive(Clone, Debug)]
pub struct KcPartialSum {
    pub n: usize,
    pub value: Rat,
    pub nominal_den: BigInt,
    pub tail_bound: Rat,
}

pub fn kc_series(k: u64, ell: u32, cap: u64) -> Result<KelloggCurtiss> {
    let fam = sylvester(k, ell, cap)?;
    let engel = {
        let fam = fam.clone();
        EngelSeries::new(IntSeq::from_fn(move |n, _| Ok(Some(fam.term(n)?.pow(ell)))))
    };
    Ok(KelloggCurtiss { k, ell, family: fam, engel })
}

impl KelloggCurtiss {
    pub fn family(&self) -> &SylvesterFamily {
        &self.family
    }

    pub fn engel(&self) -> &EngelSeries {
        &self.engel
    }

    pub fn partial_sums(&self, n_max: usize) -> Result<Vec<KcPartialSum>> {
        let raw = self.engel.raw_partial_sums(n_max)?;
        let mut out = Vec::with_capacity(raw.len());
        for (n, (num, den)) in raw.into_iter().enumerate() {
            let nominal: BigInt = self.family.term(n + 1)? - 1u32;
            if nominal != den {
                return Err(Error::InternalIdentity(format!(
                    "Engel denominator at n = {n} is not s_{} - 1",
                    n + 1
                )));
            }
            let tail_bound = Rat::new(BigInt::one(), nominal.pow(self.ell + 1));
            out.push(KcPartialSum { n, value: Rat::new(num, den), nominal_den: nominal, tail_bound });
        }
        Ok(out)
    }
}

/// Double-exponential lower bound a_n > (kˡ+1)^((ℓ+1)^(n−4)) on the
/// Cahen-type partial quotients, verified exactly for 4 ≤ n ≤ depth.
#[derive(Clone, Debug)]
pub struct BoundCheckReport {
    pub k: u64,
    pub ell: u32,
    pub checked: Vec<(usize, bool)>,
    pub pass: bool,
}

pub fn cahen_bound_check(k: u64, ell: u32, depth: usize, cap: u64) -> Result<BoundCheckReport> {
    if depth < 4 {
        return Err(Error::InvalidInput("cahen_bound_check needs depth >= 4".into()));
    }
    let scf = cahen_scf(k, ell, cap)?;
    let base: BigInt = BigInt::from(k).pow(ell) + 1u32;
    let mut checked = Vec::new();
    for n in 4..=depth {
        let a = scf.quotient(n)?.ok_or(Error::CfExhausted { at: n })?;
        let exponent = (u64::from(ell) + 1).pow((n - 4) as u32);
        let rhs = base.pow(exponent as u32);
        checked.push((n, a > rhs));
    }
    let pass = checked.iter().all(|(_, ok)| *ok);
    Ok(BoundCheckReport { k, ell, checked, pass })
}

/// Primes 2, 3, 5, … by incremental trial division against the cached
/// prefix; desk scale never needs more than a few hundred.
pub fn prime_seq() -> IntSeq {
    IntSeq::from_fn(|_, prefix: &[BigInt]| {
        let mut c = match prefix.last() {
            None => return Ok(Some(BigInt::from(2))),
            Some(p) => p + 1,
        };
        loop {
            let mut is_prime = true;
            for p in prefix {
                if p * p > c {
                    break;
                }
                if (&c % p).is_zero() {
                    is_prime = false;
                    break;
                }
            }
            if is_prime {
                return Ok(Some(c));
            }
            c += 1;
        }
    })
}

/// Fibonacci numbers 1, 1, 2, 3, 5, …
pub fn fibonacci_seq() -> IntSeq {
    IntSeq::from_fn(|i, prefix: &[BigInt]| {
        Ok(Some(match i {
            0 | 1 => BigInt::one(),
            _ => &prefix[i - 1] + &prefix[i - 2],
        }))
    })
}

fn factorial_u128(n: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 2..=u128::from(n) {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

/// Partial quotient a_n of e − 1 = [1, 1, 2, 1, 1, 4, 1, 1, 6, …] for
/// n ≥ 1: a_n = 2(n+1)/3 when n ≡ 2 (mod 3), else 1.
fn e_minus_1_quotient(n: usize) -> BigInt {
    if n % 3 == 2 {
        BigInt::from(2 * (n + 1) / 3)
    } else {
        BigInt::one()
    }
}

pub fn e_minus_1_scf() -> Scf {
    Scf::new(1, IntSeq::from_fn(|i, _| Ok(Some(e_minus_1_quotient(i + 1)))))
}

pub fn e_scf() -> Scf {
    Scf::new(2, IntSeq::from_fn(|i, _| Ok(Some(e_minus_1_quotient(i + 1)))))
}

/// e⁻¹ = [0, 2, 1, 2, 1, 1, 4, …]: the reciprocal shift of the e
/// expansion.
pub fn inv_e_scf() -> Scf {
    Scf::new(
        0,
        IntSeq::from_fn(|i, _| {
            Ok(Some(if i == 0 { BigInt::from(2) } else { e_minus_1_quotient(i) }))
        }),
    )
}

/// Exact Taylor partial sum Σ_{j=0}^{n} (−1)ʲ/((2j+1)!·k^(2j+1)) of
/// sin(1/k); the oracle the sin_inv catalog entry is validated against.
pub fn sin_inv_taylor_partial(k: u64, n: usize) -> Rat {
    let mut sum = Rat::zero();
    let kk = BigInt::from(k);
    for j in 0..=n {
        let f = factorial_big(2 * j as u64 + 1);
        let den = f * kk.pow(2 * j as u32 + 1);
        let t = Rat::new(BigInt::one(), den);
        if j % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    sum
}

/// Exact Taylor partial sum Σ_{j=0}^{n} (−1)ʲ/((2j+2)!·k^(2j+2)) of
/// 1 − cos(1/k).
pub fn cos_inv_taylor_partial(k: u64, n: usize) -> Rat {
    let mut sum = Rat::zero();
    let kk = BigInt::from(k);
    for j in 0..=n {
        let f = factorial_big(2 * j as u64 + 2);
        let den = f * kk.pow(2 * j as u32 + 2);
        let t = Rat::new(BigInt::one(), den);
        if j % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    sum
}

fn factorial_big(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// A catalog constant: a name, a human-readable definition, and whichever
/// representations it naturally carries.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub definition: String,
    pub type_i: Option<TypeISeries>,
    pub type_ii: Option<TypeIISeries>,
    pub kc: Option<KelloggCurtiss>,
    pub scf: Option<Scf>,
}

impl CatalogEntry {
    /// Partial sums of the entry's preferred series representation.
    pub fn partial_sums(&self, n_max: usize) -> Result<Vec<PartialSum>> {
        if let Some(s) = &self.type_ii {
            return s.partial_sums(n_max);
        }
        if let Some(s) = &self.type_i {
            return s.partial_sums(n_max);
        }
        if let Some(kc) = &self.kc {
            return Ok(kc
                .partial_sums(n_max)?
                .into_iter()
                .map(|p| PartialSum { n: p.n, value: p.value, tail_bound: p.tail_bound, strict: true })
                .collect());
        }
        Err(Error::InvalidInput(format!("{} has no series representation", self.name)))
    }

    /// An approximation with an exact bound: series tail bound when a
    /// series exists, else the convergent gap 1/(q_n·q_{n+1}) of the
    /// simple continued fraction. Returns (value, bound, strict).
    pub fn value_with_bound(&self, depth: usize) -> Result<(Rat, Rat, bool)> {
        match self.partial_sums(depth) {
            Ok(sums) => {
                let last = sums.last().expect("depth 0 still yields one sum");
                Ok((last.value.clone(), last.tail_bound.clone(), last.strict))
            }
            Err(Error::InvalidInput(_)) => {
                let scf = self.scf.as_ref().expect("entries carry at least one representation");
                match scf.convergent_pairs(depth + 1) {
                    Ok(pairs) => {
                        let (p, q) = &pairs[depth];
                        let (_, q_next) = &pairs[depth + 1];
                        let bound = Rat::new(BigInt::one(), q * q_next);
                        Ok((Rat::new_raw(p.clone(), q.clone()), bound, true))
                    }
                    // finite fraction: the last convergent is the exact value
                    Err(Error::CfExhausted { at }) => {
                        let pairs = scf.convergent_pairs(at - 1)?;
                        let (p, q) = pairs.last().expect("at least the integer part");
                        Ok((Rat::new_raw(p.clone(), q.clone()), Rat::zero(), false))
                    }
                    Err(e) => Err(e),
                }
            }
            Err(e) => Err(e),
        }
    }
}

pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "cahen(k,l)",
        "cos_inv(k)",
        "davison_shallit",
        "e_minus_1_scf",
        "fermat",
        "golden",
        "inv_e",
        "kellogg_curtiss(k,l)",
        "liouville_alt",
        "primorial",
        "sin_inv(k)",
    ]
}

fn parse_catalog_name(name: &str) -> Result<(String, Vec<u64>)> {
    let name = name.trim();
    let unknown = || Error::UnknownCatalog { name: name.to_string(), known: catalog_names().join(", ") };
    if let Some(open) = name.find('(') {
        if !name.ends_with(')') {
            return Err(unknown());
        }
        let base = &name[..open];
        let args: Vec<u64> = name[open + 1..name.len() - 1]
            .split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        Ok((base.to_string(), args))
    } else {
        Ok((name.to_string(), Vec::new()))
    }
}

pub fn catalog(name: &str) -> Result<CatalogEntry> {
    catalog_with_cap(name, DEFAULT_DIGIT_CAP)
}

pub fn catalog_with_cap(name: &str, cap: u64) -> Result<CatalogEntry> {
    let (base, args) = parse_catalog_name(name)?;
    let unknown = || Error::UnknownCatalog { name: name.to_string(), known: catalog_names().join(", ") };
    let arg = |i: usize| -> Result<u64> {
        let v = *args.get(i).ok_or_else(unknown)?;
        if v < 1 {
            return Err(Error::InvalidInput(format!("{name}: arguments must be >= 1")));
        }
        Ok(v)
    };

    let entry = match (base.as_str(), args.len()) {
        ("fermat", 0) => {
            let type_i = TypeISeries::new(IntSeq::from_fn_capped(cap, move |n, _| {
                let e = 1u128 << n;
                if e / 4 > u128::from(cap) {
                    return Err(Error::DigitCapExceeded { index: n, digits: (e / 3) as u64, cap });
                }
                Ok(Some((BigInt::one() << (e as u64)) - 1u32))
            }));
            let type_ii = TypeIISeries::new(IntSeq::from_fn_capped(cap, move |n, _| {
                Ok(Some(if n == 0 {
                    BigInt::one()
                } else {
                    let e = 1u128 << (n - 1);
                    if e / 4 > u128::from(cap) {
                        return Err(Error::DigitCapExceeded { index: n, digits: (e / 3) as u64, cap });
                    }
                    (BigInt::one() << (e as u64)) + 1u32
                }))
            }));
            CatalogEntry {
                name: "fermat".into(),
                definition: "alternating sum of 1/(2^(2^n) - 1)".into(),
                type_i: Some(type_i),
                type_ii: Some(type_ii),
                kc: None,
                scf: None,
            }
        }
        ("primorial", 0) => {
            let primes = prime_seq();
            let type_ii = TypeIISeries::new(IntSeq::from_fn(move |n, _| primes.get(n)));
            CatalogEntry {
                name: "primorial".into(),
                definition: "alternating sum of 1/(p_1 p_2 ... p_n) over primorials".into(),
                type_i: None,
                type_ii: Some(type_ii),
                kc: None,
                scf: None,
            }
        }
        ("inv_e", 0) => CatalogEntry {
            name: "inv_e".into(),
            definition: "1/e as the alternating factorial series from 1/2 - 1/6 + ...".into(),
            type_i: None,
            type_ii: Some(TypeIISeries::new(IntSeq::from_fn(|n, _| {
                Ok(Some(BigInt::from(n as u64 + 2)))
            }))),
            kc: None,
            scf: Some(inv_e_scf()),
        },
        ("sin_inv", 1) => {
            let k = arg(0)?;
            let type_ii = TypeIISeries::new(IntSeq::from_fn(move |n, _| {
                Ok(Some(if n == 0 {
                    BigInt::from(k)
                } else {
                    let n = n as u64;
                    BigInt::from(2 * n * (2 * n + 1)) * BigInt::from(k) * BigInt::from(k)
                }))
            }));
            CatalogEntry {
                name: format!("sin_inv({k})"),
                definition: format!("sin(1/{k}) via its alternating Taylor factorial series"),
                type_i: None,
                type_ii: Some(type_ii),
                kc: None,
                scf: None,
            }
        }
        ("cos_inv", 1) => {
            let k = arg(0)?;
            let type_ii = TypeIISeries::new(IntSeq::from_fn(move |n, _| {
                let n = n as u64;
                Ok(Some(if n == 0 {
                    BigInt::from(2 * k * k)
                } else {
                    BigInt::from((2 * n + 1) * (2 * n + 2)) * BigInt::from(k) * BigInt::from(k)
                }))
            }));
            CatalogEntry {
                name: format!("cos_inv({k})"),
                definition: format!("1 - cos(1/{k}) via its alternating Taylor factorial series"),
                type_i: None,
                type_ii: Some(type_ii),
                kc: None,
                scf: None,
            }
        }
        ("golden", 0) => {
            let fib = fibonacci_seq();
            let type_i = TypeISeries::new(IntSeq::from_fn(move |n, _| {
                let a = fib.get(n)?.expect("fibonacci is infinite");
                let b = fib.get(n + 1)?.expect("fibonacci is infinite");
                Ok(Some(a * b))
            }));
            CatalogEntry {
                name: "golden".into(),
                definition: "1/phi as the alternating sum of 1/(f_n f_{n+1}) over golden rectangle numbers".into(),
                type_i: Some(type_i),
                type_ii: None,
                kc: None,
                scf: Some(Scf::new(0, IntSeq::constant(1))),
            }
        }
        ("liouville_alt", 0) => {
            let type_ii = TypeIISeries::new(IntSeq::from_fn(move |n, _| {
                let n = n as u64;
                // A_0 = 10^(2!), A_n = 10^((n+2)! − (n+1)!) so products are 10^((n+2)!)
                let e = if n == 0 {
                    2
                } else {
                    factorial_u128(n + 2)
                        .zip(factorial_u128(n + 1))
                        .map(|(a, b)| a - b)
                        .ok_or(Error::DigitCapExceeded { index: n as usize, digits: u64::MAX, cap })?
                };
                if e + 1 > u128::from(cap) {
                    return Err(Error::DigitCapExceeded { index: n as usize, digits: (e + 1) as u64, cap });
                }
                Ok(Some(BigInt::from(10).pow(e as u32)))
            }));
            CatalogEntry {
                name: "liouville_alt".into(),
                definition: "alternating Liouville constant: sum of (-1)^n/10^(n!) from n = 2".into(),
                type_i: None,
                type_ii: Some(type_ii),
                kc: None,
                scf: None,
            }
        }
        ("davison_shallit", 0) => {
            let mn = build_from_m(IntSeq::constant(1), cap);
            CatalogEntry {
                name: "davison_shallit".into(),
                definition: "Davison-Shallit constant from the constant-1 M construction".into(),
                type_i: None,
                type_ii: Some(mn.series()),
                kc: None,
                scf: Some(mn.scf().clone()),
            }
        }
        ("cahen", 2) => {
            let (k, l) = (arg(0)?, arg(1)? as u32);
            CatalogEntry {
                name: format!("cahen({k},{l})"),
                definition: format!("Cahen-type constant C_({k},{l}): alternating sum of 1/(s_(n+1) - 1)"),
                type_i: None,
                type_ii: Some(cahen_series(k, l, cap)?),
                kc: None,
                scf: Some(cahen_scf(k, l, cap)?),
            }
        }
        ("kellogg_curtiss", 2) => {
            let (k, l) = (arg(0)?, arg(1)? as u32);
            CatalogEntry {
                name: format!("kellogg_curtiss({k},{l})"),
                definition: format!("Kellogg-Curtiss-type constant K_({k},{l}): sum of 1/(s_(n+1) - 1)"),
                type_i: None,
                type_ii: None,
                kc: Some(kc_series(k, l, cap)?),
                scf: None,
            }
        }
        ("e_minus_1_scf", 0) => CatalogEntry {
            name: "e_minus_1_scf".into(),
            definition: "e - 1 = [1,1,2,1,1,4,1,1,6,...]".into(),
            type_i: None,
            type_ii: None,
            kc: None,
            scf: Some(e_minus_1_scf()),
        },
        _ => return Err(unknown()),
    };
    Ok(entry)
}

/// OEIS-style b-file: one "n a(n)" line per term, 0-indexed.
pub fn bfile(terms: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        out.push_str(&format!("{i} {t}\n"));
    }
    out
}
