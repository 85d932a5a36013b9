//! Alternating series of types I and II, Engel series, their exact
//! partial sums with tail bounds, Euler's conversions to continued
//! fractions, and the greedy Pierce expansion.
//!
//! Type I is Σ (−1)ⁿ/B_n with 0 < B_0 < B_1 < ⋯; type II is the special
//! case B_n = A_0A_1⋯A_n with A_0 ≥ 1 and A_n ≥ 2 for n ≥ 1; an Engel
//! series is the non-alternating Σ 1/(A_0⋯A_n) with non-decreasing A_n.
//! All stream invariants are checked on access and report the offending
//! index, so a bad generator fails loudly instead of producing numbers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::confrac::{Gcf, IntConvergentState, Scf};
use crate::error::Error;
use crate::exact::Rat;
use crate::stream::{IntSeq, RatSeq};
use crate::Result;

/// An exact partial sum S_n together with a bound on |α − S_n|.
/// For a strict bound the gap is < `tail_bound`; otherwise ≤. A zero
/// bound means the series terminated and S_n is the exact value.
#[derive(Clone, Debug)]
pub struct PartialSum {
    pub n: usize,
    pub value: Rat,
    pub tail_bound: Rat,
    pub strict: bool,
}

fn check_positive(x: &BigInt, index: usize) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveElement { index })
    }
}

/// Σ (−1)ⁿ/B_n over strictly increasing positive integers B_n.
#[derive(Clone)]
pub struct TypeISeries {
    b: IntSeq,
}

impl TypeISeries {
    pub fn new(b: IntSeq) -> Self {
        TypeISeries { b }
    }

    pub fn from_vec(b: Vec<impl Into<BigInt>>) -> Self {
        TypeISeries::new(IntSeq::from_vec(b))
    }

    pub fn seq(&self) -> &IntSeq {
        &self.b
    }

    /// B_n, checked positive and strictly increasing.
    pub fn denominator(&self, n: usize) -> Result<Option<BigInt>> {
        let cur = match self.b.get(n)? {
            Some(v) => v,
            None => return Ok(None),
        };
        check_positive(&cur, n)?;
        if n > 0 {
            let prev = self.b.get(n - 1)?.expect("prefix already generated");
            if cur <= prev {
                return Err(Error::Monotonicity { index: n, requirement: "strictly increasing" });
            }
        }
        Ok(Some(cur))
    }

    pub fn denominators(&self, upto: usize) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for n in 0..upto {
            match self.denominator(n)? {
                Some(v) => out.push(v),
                None => break,
            }
        }
        Ok(out)
    }

    /// Partial sums S_0..=S_n as raw (numerator, common denominator)
    /// pairs over Π B_k, not reduced. The cheap path for equivalence
    /// checks on towers.
    pub fn raw_partial_sums(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
        let mut out = Vec::with_capacity(n_max + 1);
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for n in 0..=n_max {
            let b = self.denominator(n)?.ok_or(Error::StreamExhausted { at: n })?;
            // S_n = (P·B_n ± D)/(D·B_n)
            num = &num * &b + if n % 2 == 0 { den.clone() } else { -den.clone() };
            den *= &b;
            out.push((num.clone(), den.clone()));
        }
        Ok(out)
    }

    pub fn partial_sums(&self, n_max: usize) -> Result<Vec<PartialSum>> {
        let raw = self.raw_partial_sums(n_max)?;
        let mut out = Vec::with_capacity(raw.len());
        for (n, (num, den)) in raw.into_iter().enumerate() {
            let (tail_bound, strict) = match self.denominator(n + 1)? {
                None => (Rat::zero(), false),
                Some(next) => {
                    let strict = self.denominator(n + 2)?.is_some();
                    (Rat::new(BigInt::one(), next), strict)
                }
            };
            out.push(PartialSum { n, value: Rat::new(num, den), tail_bound, strict });
        }
        Ok(out)
    }

    /// Euler's conversion: 1/(B_0 + B_0²/(B_1 − B_0 + B_1²/(B_2 − B_1 + ⋯))),
    /// whose convergent n+1 equals S_n.
    pub fn to_cf(&self) -> Gcf {
        let series = self.clone();
        Gcf::from_fn(0, move |k, _| {
            if k == 0 {
                return Ok(series.denominator(0)?.map(|b0| (Rat::one(), Rat::from_integer(b0))));
            }
            let prev = match series.denominator(k - 1)? {
                Some(v) => v,
                None => return Ok(None),
            };
            let cur = match series.denominator(k)? {
                Some(v) => v,
                None => return Ok(None),
            };
            let a = cur - &prev;
            Ok(Some((Rat::from_integer(&prev * &prev), Rat::from_integer(a))))
        })
    }
}

/// Σ (−1)ⁿ/(A_0A_1⋯A_n) with A_0 ≥ 1 and A_n ≥ 2 for n ≥ 1.
#[derive(Clone)]
pub struct TypeIISeries {
    a: IntSeq,
}

impl TypeIISeries {
    pub fn new(a: IntSeq) -> Self {
        TypeIISeries { a }
    }

    pub fn from_vec(a: Vec<impl Into<BigInt>>) -> Self {
        TypeIISeries::new(IntSeq::from_vec(a))
    }

    pub fn seq(&self) -> &IntSeq {
        &self.a
    }

    /// A_n, checked (A_0 ≥ 1, A_n ≥ 2 afterwards).
    pub fn factor(&self, n: usize) -> Result<Option<BigInt>> {
        let cur = match self.a.get(n)? {
            Some(v) => v,
            None => return Ok(None),
        };
        check_positive(&cur, n)?;
        if n >= 1 && cur < BigInt::from(2) {
            return Err(Error::Monotonicity { index: n, requirement: "A_n >= 2 for n >= 1" });
        }
        Ok(Some(cur))
    }

    pub fn factors(&self, upto: usize) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for n in 0..upto {
            match self.factor(n)? {
                Some(v) => out.push(v),
                None => break,
            }
        }
        Ok(out)
    }

    /// True when A_{k+1} > A_k for every pair available up to `depth`
    /// (the Pierce-expansion property).
    pub fn is_pierce_prefix(&self, depth: usize) -> Result<bool> {
        let f = self.factors(depth + 1)?;
        Ok(f.windows(2).all(|w| w[1] > w[0]))
    }

    /// The type-I view: B_n = A_0⋯A_n.
    pub fn to_type_i(&self) -> TypeISeries {
        let series = self.clone();
        TypeISeries::new(IntSeq::from_fn(move |n, prefix| {
            Ok(match series.factor(n)? {
                None => None,
                Some(a) => Some(if n == 0 { a } else { &prefix[n - 1] * a }),
            })
        }))
    }

    /// S_0..=S_n as raw pairs over the common denominator A_0⋯A_n
    /// (P_n = A_n·P_{n−1} + (−1)ⁿ), not reduced.
    pub fn raw_partial_sums(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
        let mut out = Vec::with_capacity(n_max + 1);
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for n in 0..=n_max {
            let a = self.factor(n)?.ok_or(Error::StreamExhausted { at: n })?;
            num = &num * &a + if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            den *= &a;
            out.push((num.clone(), den.clone()));
        }
        Ok(out)
    }

    pub fn partial_sums(&self, n_max: usize) -> Result<Vec<PartialSum>> {
        let raw = self.raw_partial_sums(n_max)?;
        let mut out = Vec::with_capacity(raw.len());
        for (n, (num, den)) in raw.into_iter().enumerate() {
            let (tail_bound, strict) = match self.factor(n + 1)? {
                None => (Rat::zero(), false),
                Some(next) => {
                    let strict = self.factor(n + 2)?.is_some();
                    (Rat::new(BigInt::one(), &den * next), strict)
                }
            };
            out.push(PartialSum { n, value: Rat::new(num, den), tail_bound, strict });
        }
        Ok(out)
    }

    /// Euler's conversion at unit scaling:
    /// 1/(A_0 + A_0/(A_1 − 1 + A_1/(A_2 − 1 + ⋯))); convergent n+1 = S_n.
    pub fn to_cf(&self) -> Gcf {
        let series = self.clone();
        Gcf::from_fn(0, move |k, _| {
            if k == 0 {
                return Ok(series.factor(0)?.map(|a0| (Rat::one(), Rat::from_integer(a0))));
            }
            let prev = match series.factor(k - 1)? {
                Some(v) => v,
                None => return Ok(None),
            };
            let cur = match series.factor(k)? {
                Some(v) => v,
                None => return Ok(None),
            };
            Ok(Some((Rat::from_integer(prev), Rat::from_integer(cur - 1))))
        })
    }

    /// The conversion with scaling stream x: element 1 is (x_0, A_0x_0),
    /// element n+1 is (A_{n−1}x_{n−1}x_n, (A_n − 1)x_n).
    pub fn to_cf_scaled(&self, x: &RatSeq) -> Gcf {
        crate::confrac::equivalence_transform(&self.to_cf(), x)
    }

    /// The scaling stream that makes every partial numerator 1:
    /// x_0 = 1, x_{n+1} = 1/(A_n·x_n).
    pub fn unit_numerator_scaling(&self) -> RatSeq {
        let series = self.clone();
        RatSeq::from_fn(move |k, prefix| {
            if k == 0 {
                return Ok(Some(Rat::one()));
            }
            match series.factor(k - 1)? {
                None => Ok(None),
                Some(a) => {
                    let prev = &prefix[k - 1];
                    Ok(Some((Rat::from_integer(a) * prev).recip()))
                }
            }
        })
    }
}

/// Engel series Σ 1/(A_0A_1⋯A_n) with non-decreasing positive A_n.
#[derive(Clone)]
pub struct EngelSeries {
    a: IntSeq,
}

impl EngelSeries {
    pub fn new(a: IntSeq) -> Self {
        EngelSeries { a }
    }

    pub fn from_vec(a: Vec<impl Into<BigInt>>) -> Self {
        EngelSeries::new(IntSeq::from_vec(a))
    }

    pub fn seq(&self) -> &IntSeq {
        &self.a
    }

    pub fn factor(&self, n: usize) -> Result<Option<BigInt>> {
        let cur = match self.a.get(n)? {
            Some(v) => v,
            None => return Ok(None),
        };
        check_positive(&cur, n)?;
        if n > 0 {
            let prev = self.a.get(n - 1)?.expect("prefix already generated");
            if cur < prev {
                return Err(Error::Monotonicity { index: n, requirement: "non-decreasing" });
            }
        }
        Ok(Some(cur))
    }

    pub fn raw_partial_sums(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
        let mut out = Vec::with_capacity(n_max + 1);
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for n in 0..=n_max {
            let a = self.factor(n)?.ok_or(Error::StreamExhausted { at: n })?;
            num = &num * &a + BigInt::one();
            den *= &a;
            out.push((num.clone(), den.clone()));
        }
        Ok(out)
    }

    /// Partial sums with the geometric tail bound
    /// Σ_{j>n} 1/(A_0⋯A_j) ≤ 1/((A_0⋯A_n)(A_{n+1} − 1)), which needs
    /// A_{n+1} ≥ 2. The bound is not strict in general (constant tails
    /// attain it), so these sums carry `strict: false`.
    pub fn partial_sums(&self, n_max: usize) -> Result<Vec<PartialSum>> {
        let raw = self.raw_partial_sums(n_max)?;
        let mut out = Vec::with_capacity(raw.len());
        for (n, (num, den)) in raw.into_iter().enumerate() {
            let tail_bound = match self.factor(n + 1)? {
                None => Rat::zero(),
                Some(next) => {
                    if next < BigInt::from(2) {
                        return Err(Error::InvalidInput(format!(
                            "no geometric tail bound at n = {n}: A_{} = {next} < 2",
                            n + 1
                        )));
                    }
                    Rat::new(BigInt::one(), &den * (next - 1))
                }
            };
            out.push(PartialSum { n, value: Rat::new(num, den), tail_bound, strict: false });
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthVerdict {
    Holds { depth: usize },
    FailsAt { index: usize, lhs: BigInt, rhs: BigInt },
}

impl GrowthVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, GrowthVerdict::Holds { .. })
    }
}

/// Check B_{n+1} ≥ B_n(B_n + 1) for all n < depth. A holding verdict
/// means the sum is irrational by Sierpiński's growth criterion — as a
/// finite check, not a proof.
pub fn sierpinski_check(s: &TypeISeries, depth: usize) -> Result<GrowthVerdict> {
    for n in 0..depth {
        let b = match s.denominator(n)? {
            Some(v) => v,
            None => return Ok(GrowthVerdict::Holds { depth: n }),
        };
        let next = match s.denominator(n + 1)? {
            Some(v) => v,
            None => return Ok(GrowthVerdict::Holds { depth: n }),
        };
        let rhs = &b * (&b + 1);
        if next < rhs {
            return Ok(GrowthVerdict::FailsAt { index: n, lhs: next, rhs });
        }
    }
    Ok(GrowthVerdict::Holds { depth })
}

#[derive(Clone, Debug, PartialEq)]
pub enum MonotoneVerdict {
    Holds { depth: usize },
    FailsAt {
        index: usize,
        /// Closed-form value 1/(A_0 + 1) when the failing prefix is the
        /// constant sequence A_0, A_0, … (the geometric case, where the
        /// sum is rational).
        geometric_value: Option<Rat>,
    },
}

impl MonotoneVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, MonotoneVerdict::Holds { .. })
    }
}

/// Check A_{n+1} > A_n for all n < depth (the type-II irrationality
/// hypothesis; finite check).
pub fn type_ii_monotone_check(s: &TypeIISeries, depth: usize) -> Result<MonotoneVerdict> {
    for n in 0..depth {
        let cur = match s.factor(n)? {
            Some(v) => v,
            None => return Ok(MonotoneVerdict::Holds { depth: n }),
        };
        let next = match s.factor(n + 1)? {
            Some(v) => v,
            None => return Ok(MonotoneVerdict::Holds { depth: n }),
        };
        if next <= cur {
            let a0 = s.factor(0)?.expect("prefix already generated");
            let constant = a0 > BigInt::one() && {
                let prefix = s.factors(n + 2)?;
                prefix.iter().all(|a| *a == a0)
            };
            let geometric_value = constant.then(|| Rat::new(BigInt::one(), a0 + 1));
            return Ok(MonotoneVerdict::FailsAt { index: n, geometric_value });
        }
    }
    Ok(MonotoneVerdict::Holds { depth })
}

/// Greedy Pierce expansion of r ∈ (0, 1].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PierceExpansion {
    pub terms: Vec<BigInt>,
    /// The remainder hit zero, so the terms re-sum to the input exactly.
    pub terminated: bool,
}

impl PierceExpansion {
    /// Σ (−1)ⁿ/(A_0⋯A_n) over the expansion prefix.
    pub fn resum(&self) -> Rat {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (n, a) in self.terms.iter().enumerate() {
            num = &num * a + if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            den *= a;
        }
        if den.is_one() && num.is_zero() {
            return Rat::zero();
        }
        Rat::new(num, den)
    }

    pub fn to_series(&self) -> TypeIISeries {
        TypeIISeries::from_vec(self.terms.clone())
    }
}

/// A_n = ⌊1/r_n⌋, r_{n+1} = 1 − A_n·r_n, stopping at an exact zero
/// remainder or after `max_terms`. The digits strictly increase; r = 1
/// expands to (1).
pub fn pierce_expand(r: &Rat, max_terms: usize) -> Result<PierceExpansion> {
    if !r.is_positive() || r > &Rat::one() {
        return Err(Error::InvalidInput(format!("pierce expansion needs 0 < r <= 1, got {r}")));
    }
    let mut terms = Vec::new();
    let mut rem = r.clone();
    let mut terminated = false;
    while terms.len() < max_terms {
        let a = rem.recip().floor().to_integer();
        rem = Rat::one() - Rat::from_integer(a.clone()) * &rem;
        if let Some(prev) = terms.last() {
            if &a <= prev {
                return Err(Error::InternalIdentity(format!(
                    "pierce digits must strictly increase, got {prev} then {a}"
                )));
            }
        }
        terms.push(a);
        if rem.is_zero() {
            terminated = true;
            break;
        }
    }
    Ok(PierceExpansion { terms, terminated })
}

/// The alternating series a0 + Σ (−1)ⁿ/(q_n·q_{n+1}) attached to a simple
/// continued fraction; its partial sums are the convergents shifted by
/// one index. Returns the integer part separately.
pub fn scf_to_series(scf: &Scf) -> Result<(BigInt, TypeISeries)> {
    let a0 = scf.a0().clone();
    let scf = scf.clone();
    let mut state: Option<IntConvergentState> = None;
    let seq = IntSeq::from_fn(move |i, _| {
        let st = match &mut state {
            Some(st) => st,
            None => state.insert(IntConvergentState::new(&BigInt::zero())),
        };
        // invariant: st.n == i, so q_cur = q_i
        let a = match scf.quotient(i + 1)? {
            Some(a) => a,
            None => return Ok(None),
        };
        let (_, q_cur) = st.pair();
        st.push_simple(&a);
        let (_, q_next) = st.pair();
        Ok(Some(q_cur * q_next))
    });
    Ok((a0, TypeISeries::new(seq)))
}

/// Report for the exact telescoped identity
/// Σ_{n=0}^{N} (−1)ⁿ/B_n = 1/(B_0+1) + (−1)^N/(B_{N+1}+1)
/// on the sharpness stream B_{n+1} = B_n(B_n+1) − 1.
#[derive(Clone, Debug)]
pub struct SharpnessReport {
    pub b0: u64,
    pub stream: Vec<BigInt>,
    pub holds_for: Vec<bool>,
    pub pass: bool,
}

pub fn sharpness_identity(b0: u64, n_max: usize) -> Result<SharpnessReport> {
    if b0 < 1 {
        return Err(Error::InvalidInput("sharpness stream needs B_0 >= 1".into()));
    }
    let mut stream = vec![BigInt::from(b0)];
    for _ in 0..=n_max {
        let b = stream.last().unwrap();
        stream.push(b * (b + 1) - 1);
    }
    let mut holds_for = Vec::with_capacity(n_max + 1);
    let mut sum = Rat::zero();
    for n in 0..=n_max {
        let term = Rat::new(BigInt::one(), stream[n].clone());
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        let tail = Rat::new(BigInt::one(), &stream[n + 1] + 1);
        let rhs = Rat::new(BigInt::one(), BigInt::from(b0) + 1)
            + if n % 2 == 0 { tail } else { -tail };
        holds_for.push(sum == rhs);
    }
    let pass = holds_for.iter().all(|&b| b);
    Ok(SharpnessReport { b0, stream, holds_for, pass })
}
