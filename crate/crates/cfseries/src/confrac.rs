//! Generalized and simple continued fractions.
//!
//! A [`Gcf`] is an integer part plus a lazy stream of element pairs
//! (b_n, a_n), n = 1, 2, …, all positive rationals:
//!
//! ```text
//!           b1
//! a0 + ------------
//!      a1 +   b2
//!           -------
//!           a2 + …
//! ```
//!
//! Convergents follow the recurrence p_n = a_n·p_{n−1} + b_n·p_{n−2}
//! (and likewise q_n) seeded with p_{−1} = 1, p_0 = a0, q_{−1} = 0,
//! q_0 = 1, so convergent 0 is the integer part. [`Gcf::eval_finite`]
//! folds the truncated fraction bottom-up instead and serves as an
//! independent oracle for the recurrence.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

use crate::error::Error;
use crate::exact::Rat;
use crate::stream::{IntSeq, Memo, RatSeq};
use crate::Result;

/// Generalized continued fraction. Elements are 1-based; positivity is
/// checked on access, so invalid streams fail with the offending index.
#[derive(Clone)]
pub struct Gcf {
    a0: BigInt,
    elems: Arc<Memo<(Rat, Rat)>>,
}

impl std::fmt::Debug for Gcf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Gcf {{ a0: {}, elems: <lazy> }}", self.a0)
    }
}

impl Gcf {
    pub fn new(a0: impl Into<BigInt>, elems: Memo<(Rat, Rat)>) -> Self {
        Gcf { a0: a0.into(), elems: Arc::new(elems) }
    }

    pub fn from_pairs(a0: impl Into<BigInt>, pairs: Vec<(Rat, Rat)>) -> Self {
        Gcf::new(a0, Memo::from_vec(pairs))
    }

    pub fn from_fn(
        a0: impl Into<BigInt>,
        gen: impl FnMut(usize, &[(Rat, Rat)]) -> Result<Option<(Rat, Rat)>> + Send + 'static,
    ) -> Self {
        Gcf::new(a0, Memo::from_fn(gen))
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    /// Element pair (b_n, a_n) for n ≥ 1.
    pub fn element(&self, n: usize) -> Result<Option<(Rat, Rat)>> {
        assert!(n >= 1, "continued fraction elements are 1-based");
        match self.elems.get(n - 1)? {
            Some((b, a)) => {
                if !b.is_positive() || !a.is_positive() {
                    return Err(Error::NonPositiveElement { index: n });
                }
                Ok(Some((b, a)))
            }
            None => Ok(None),
        }
    }

    /// Elements 1..=n; errors with the first missing index.
    pub fn elements_exact(&self, n: usize) -> Result<Vec<(Rat, Rat)>> {
        let mut out = Vec::with_capacity(n);
        for k in 1..=n {
            match self.element(k)? {
                Some(e) => out.push(e),
                None => return Err(Error::CfExhausted { at: k }),
            }
        }
        Ok(out)
    }

    /// First index ≤ depth whose element is not an integer pair, if any.
    pub fn first_non_integral(&self, depth: usize) -> Result<Option<usize>> {
        for n in 1..=depth {
            match self.element(n)? {
                Some((b, a)) => {
                    if !b.is_integer() || !a.is_integer() {
                        return Ok(Some(n));
                    }
                }
                None => break,
            }
        }
        Ok(None)
    }

    /// Convergents 0..=n_max as exact rationals.
    pub fn convergents(&self, n_max: usize) -> Result<Vec<Rat>> {
        let mut state = ConvergentState::new(&self.a0);
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(state.convergent()?);
        for n in 1..=n_max {
            let (b, a) = self.element(n)?.ok_or(Error::CfExhausted { at: n })?;
            state.push(&b, &a);
            out.push(state.convergent()?);
        }
        Ok(out)
    }

    /// Convergents as raw integer pairs (p_n, q_n), not reduced. Only for
    /// fractions whose elements up to n_max are all integers; this is the
    /// cheap path for towers where reducing would dominate the cost.
    pub fn convergent_pairs_int(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
        let mut state = IntConvergentState::new(&self.a0);
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(state.pair());
        for n in 1..=n_max {
            let (b, a) = self.element(n)?.ok_or(Error::CfExhausted { at: n })?;
            if !b.is_integer() || !a.is_integer() {
                return Err(Error::NonIntegralElement { index: n });
            }
            state.push(&b.to_integer(), &a.to_integer());
            out.push(state.pair());
        }
        Ok(out)
    }

    /// Exact value of the fraction truncated after element n, folded
    /// bottom-up: b_n/a_n, then b_k/(a_k + ·) for k = n−1 … 1, plus a0.
    pub fn eval_finite(&self, n: usize) -> Result<Rat> {
        let a0 = Rat::from_integer(self.a0.clone());
        if n == 0 {
            return Ok(a0);
        }
        let elems = self.elements_exact(n)?;
        let mut acc = Rat::zero();
        for (b, a) in elems.iter().rev() {
            acc = b / (a + acc);
        }
        Ok(a0 + acc)
    }

    /// JSON array `[[b1,a1],...]` of the first `terms` element pairs.
    /// Integers print bare, other rationals as "p/q" strings.
    pub fn to_json_prefix(&self, terms: usize) -> Result<String> {
        let mut parts = Vec::with_capacity(terms);
        for n in 1..=terms {
            match self.element(n)? {
                Some((b, a)) => parts.push(format!("[{},{}]", json_rat(&b), json_rat(&a))),
                None => break,
            }
        }
        Ok(format!("[{}]", parts.join(",")))
    }
}

fn json_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("\"{}/{}\"", x.numer(), x.denom())
    }
}

/// Rolling convergent state over exact rationals.
#[derive(Clone, Debug)]
pub struct ConvergentState {
    n: usize,
    p_prev: Rat,
    p_cur: Rat,
    q_prev: Rat,
    q_cur: Rat,
}

impl ConvergentState {
    pub fn new(a0: &BigInt) -> Self {
        ConvergentState {
            n: 0,
            p_prev: Rat::one(),
            p_cur: Rat::from_integer(a0.clone()),
            q_prev: Rat::zero(),
            q_cur: Rat::one(),
        }
    }

    pub fn push(&mut self, b: &Rat, a: &Rat) {
        let p_next = a * &self.p_cur + b * &self.p_prev;
        let q_next = a * &self.q_cur + b * &self.q_prev;
        self.p_prev = std::mem::replace(&mut self.p_cur, p_next);
        self.q_prev = std::mem::replace(&mut self.q_cur, q_next);
        self.n += 1;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convergent(&self) -> Result<Rat> {
        if self.q_cur.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.p_cur / &self.q_cur)
    }
}

/// Convergent state over integers, for simple or integral fractions.
/// Nothing is reduced; for simple continued fractions the pairs are
/// coprime anyway by the determinant identity.
#[derive(Clone, Debug)]
pub struct IntConvergentState {
    n: usize,
    p_prev: BigInt,
    p_cur: BigInt,
    q_prev: BigInt,
    q_cur: BigInt,
}

impl IntConvergentState {
    pub fn new(a0: &BigInt) -> Self {
        IntConvergentState {
            n: 0,
            p_prev: BigInt::one(),
            p_cur: a0.clone(),
            q_prev: BigInt::zero(),
            q_cur: BigInt::one(),
        }
    }

    pub fn push(&mut self, b: &BigInt, a: &BigInt) {
        let p_next = a * &self.p_cur + b * &self.p_prev;
        let q_next = a * &self.q_cur + b * &self.q_prev;
        self.p_prev = std::mem::replace(&mut self.p_cur, p_next);
        self.q_prev = std::mem::replace(&mut self.q_cur, q_next);
        self.n += 1;
    }

    pub fn push_simple(&mut self, a: &BigInt) {
        self.push(&BigInt::one(), a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair(&self) -> (BigInt, BigInt) {
        (self.p_cur.clone(), self.q_cur.clone())
    }

    pub fn prev_pair(&self) -> (BigInt, BigInt) {
        (self.p_prev.clone(), self.q_prev.clone())
    }
}

/// Element-wise rescaling that preserves every convergent: with scales
/// x_0, x_1, …, element 1 becomes (x_0·b_1, x_0·a_1) and element n+1
/// becomes (x_n·x_{n−1}·b_{n+1}, x_n·a_{n+1}).
pub fn equivalence_transform(cf: &Gcf, scale: &RatSeq) -> Gcf {
    let elems = cf.elems.clone();
    let scale = scale.clone();
    Gcf::from_fn(cf.a0.clone(), move |k, _| {
        let (b, a) = match elems.get(k)? {
            Some(e) => e,
            None => return Ok(None),
        };
        let xk = scale.get(k)?.ok_or(Error::StreamExhausted { at: k })?;
        if !xk.is_positive() {
            return Err(Error::NonPositiveScale { index: k });
        }
        let xprev = if k == 0 {
            Rat::one()
        } else {
            scale.get(k - 1)?.expect("prefix already generated")
        };
        Ok(Some((b * &xk * xprev, a * xk)))
    })
}

/// Simple continued fraction [a0; a1, a2, …] with positive integer
/// partial quotients.
#[derive(Clone)]
pub struct Scf {
    a0: BigInt,
    a: IntSeq,
}

impl Scf {
    pub fn new(a0: impl Into<BigInt>, quotients: IntSeq) -> Self {
        Scf { a0: a0.into(), a: quotients }
    }

    /// From the full term list [a0, a1, …]; must be nonempty.
    pub fn from_terms(terms: Vec<impl Into<BigInt>>) -> Result<Self> {
        let mut it = terms.into_iter().map(Into::into);
        let a0 = it.next().ok_or_else(|| Error::InvalidInput("empty continued fraction".into()))?;
        Ok(Scf::new(a0, IntSeq::from_vec(it.collect::<Vec<BigInt>>())))
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    /// Partial quotient a_n for n ≥ 1, checked positive.
    pub fn quotient(&self, n: usize) -> Result<Option<BigInt>> {
        assert!(n >= 1, "partial quotients are 1-based");
        match self.a.get(n - 1)? {
            Some(a) => {
                if a < BigInt::one() {
                    return Err(Error::NonPositiveElement { index: n });
                }
                Ok(Some(a))
            }
            None => Ok(None),
        }
    }

    /// [a0, a1, …] truncated to `count` entries (fewer if finite).
    pub fn terms(&self, count: usize) -> Result<Vec<BigInt>> {
        let mut out = Vec::with_capacity(count);
        if count == 0 {
            return Ok(out);
        }
        out.push(self.a0.clone());
        for n in 1..count {
            match self.quotient(n)? {
                Some(a) => out.push(a),
                None => break,
            }
        }
        Ok(out)
    }

    pub fn to_gcf(&self) -> Gcf {
        let a = self.a.clone();
        Gcf::from_fn(self.a0.clone(), move |k, _| {
            Ok(a.get(k)?.map(|q| (Rat::one(), Rat::from_integer(q))))
        })
    }

    /// Convergent pairs (p_n, q_n), n = 0..=n_max, in lowest terms by the
    /// determinant identity.
    pub fn convergent_pairs(&self, n_max: usize) -> Result<Vec<(BigInt, BigInt)>> {
        let mut state = IntConvergentState::new(&self.a0);
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(state.pair());
        for n in 1..=n_max {
            let a = self.quotient(n)?.ok_or(Error::CfExhausted { at: n })?;
            state.push_simple(&a);
            out.push(state.pair());
        }
        Ok(out)
    }

    pub fn convergents(&self, n_max: usize) -> Result<Vec<Rat>> {
        Ok(self
            .convergent_pairs(n_max)?
            .into_iter()
            // coprime by the determinant identity, no reduction needed
            .map(|(p, q)| Rat::new_raw(p, q))
            .collect())
    }

    /// JSON array `[a0,a1,...]` of the first `terms` entries.
    pub fn to_json_prefix(&self, terms: usize) -> Result<String> {
        let ts = self.terms(terms)?;
        let parts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        Ok(format!("[{}]", parts.join(",")))
    }
}

/// Canonical finite simple continued fraction of a rational, by the
/// Euclidean algorithm. The last partial quotient is ≥ 2 whenever the
/// expansion has more than one term, which makes the output unique.
pub fn scf_of_rational(r: &Rat) -> Scf {
    let a0 = r.floor().to_integer();
    let mut frac = r - Rat::from_integer(a0.clone());
    let mut quotients = Vec::new();
    while !frac.is_zero() {
        let inv = frac.recip();
        let a = inv.floor().to_integer();
        frac = inv - Rat::from_integer(a.clone());
        quotients.push(a);
    }
    Scf::new(a0, IntSeq::from_vec(quotients))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaVerdict {
    /// All elements through `depth` are positive integers with a_n ≥ b_n.
    HypothesesHold { depth: usize },
    ViolatedAt { index: usize },
}

/// Certified enclosure of the n-th tail, bracketed by its two deepest
/// truncations. `in_unit_interval` records 0 < tail < 1.
#[derive(Clone, Debug)]
pub struct TailBound {
    pub n: usize,
    pub lower: Rat,
    pub upper: Rat,
    pub in_unit_interval: bool,
}

#[derive(Clone, Debug, Default)]
pub struct TailReport {
    pub bounds: Vec<TailBound>,
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub verdict: LemmaVerdict,
    pub tails: TailReport,
}

impl LemmaReport {
    /// One-line verdict. A holding verdict is a finite check, not a proof.
    pub fn summary(&self) -> String {
        match &self.verdict {
            LemmaVerdict::HypothesesHold { depth } => format!(
                "irrational by the domination criterion for positive integral continued fractions \
                 (a_n >= b_n >= 1 checked to depth {depth}; finite check, not a proof)"
            ),
            LemmaVerdict::ViolatedAt { index } => {
                format!("hypotheses violated at index {index} (need integers with a_n >= b_n)")
            }
        }
    }
}

/// Check the irrationality-criterion hypotheses (all elements positive
/// integers with a_n ≥ b_n) through `depth`, and certify that each tail
/// the truncation can reach lies strictly inside (0, 1).
///
/// The criterion also holds when domination only sets in from some index
/// on; this checker reports the all-indices verdict only.
pub fn lemma_check(cf: &Gcf, depth: usize) -> Result<LemmaReport> {
    let mut elems = Vec::with_capacity(depth);
    let mut verdict = LemmaVerdict::HypothesesHold { depth };
    for n in 1..=depth {
        let (b, a) = cf.element(n)?.ok_or(Error::CfExhausted { at: n })?;
        if !b.is_integer() || !a.is_integer() {
            return Err(Error::NonIntegralElement { index: n });
        }
        if a < b {
            verdict = LemmaVerdict::ViolatedAt { index: n };
            break;
        }
        elems.push((b, a));
    }

    let mut tails = TailReport::default();
    if verdict == (LemmaVerdict::HypothesesHold { depth }) && depth >= 3 {
        // tail_value(n, m): elements n+1 ..= m folded bottom-up
        let tail_value = |n: usize, m: usize| -> Rat {
            let mut acc = Rat::zero();
            for k in (n + 1..=m).rev() {
                let (b, a) = &elems[k - 1];
                acc = b / (a + acc);
            }
            acc
        };
        // both truncations need at least two levels, or the enclosure can
        // touch 1 (e.g. all a_n = b_n = 1)
        for n in 0..=depth - 3 {
            let t1 = tail_value(n, depth);
            let t2 = tail_value(n, depth - 1);
            let (lower, upper) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
            let in_unit = lower.is_positive() && upper < Rat::one();
            tails.bounds.push(TailBound { n, lower, upper, in_unit_interval: in_unit });
        }
    }

    Ok(LemmaReport { verdict, tails })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn simple(terms: Vec<i64>) -> Scf {
        Scf::from_terms(terms).unwrap()
    }

    #[test]
    fn fibonacci_convergents() {
        let cf = simple(vec![0, 1, 1, 1, 1, 1]).to_gcf();
        let conv = cf.convergents(5).unwrap();
        let expected = vec![ratio(0, 1), ratio(1, 1), ratio(1, 2), ratio(2, 3), ratio(3, 5), ratio(5, 8)];
        assert_eq!(conv, expected);
    }

    #[test]
    fn single_quotient() {
        let cf = simple(vec![0, 2]).to_gcf();
        assert_eq!(cf.convergents(1).unwrap(), vec![ratio(0, 1), ratio(1, 2)]);
        assert_eq!(cf.convergents(2), Err(Error::CfExhausted { at: 2 }));
    }

    #[test]
    fn eval_finite_matches_hand_values() {
        let cf = simple(vec![0, 2, 1, 2]).to_gcf();
        assert_eq!(cf.eval_finite(3).unwrap(), ratio(3, 8));
        assert_eq!(cf.eval_finite(0).unwrap(), ratio(0, 1));
        let cf = simple(vec![5]).to_gcf();
        assert_eq!(cf.eval_finite(0).unwrap(), ratio(5, 1));
    }

    #[test]
    fn cahen_gcf_matches_partial_sums_of_its_series() {
        // 1/(1+1²/(1²+2²/(2²+6²/(6²+42²/(42²+…))))) against Σ(−1)ⁿ/(S_n−1)
        let b = [1i64, 1, 4, 36, 1764];
        let a = [1i64, 1, 4, 36, 1764];
        let pairs: Vec<(Rat, Rat)> = b.iter().zip(a.iter()).map(|(&b, &a)| (ratio(b, 1), ratio(a, 1))).collect();
        let cf = Gcf::from_pairs(0, pairs);

        let denoms = [1i64, 2, 6, 42]; // S_n − 1
        let mut sums = vec![ratio(0, 1)];
        let mut acc = ratio(0, 1);
        for (n, &d) in denoms.iter().enumerate() {
            let t = ratio(1, d);
            if n % 2 == 0 { acc += t } else { acc -= t }
            sums.push(acc.clone());
        }

        assert_eq!(cf.convergents(4).unwrap(), sums);
        for n in 0..=4 {
            assert_eq!(cf.eval_finite(n).unwrap(), sums[n]);
        }
    }

    #[test]
    fn fermat_type_i_gcf_evaluates_to_the_partial_sum() {
        // 1/(1+1²/(2+3²/(12+15²/240))) = 1 − 1/3 + 1/15 − 1/255 = 62/85
        let pairs = vec![
            (ratio(1, 1), ratio(1, 1)),
            (ratio(1, 1), ratio(2, 1)),
            (ratio(9, 1), ratio(12, 1)),
            (ratio(225, 1), ratio(240, 1)),
        ];
        let cf = Gcf::from_pairs(0, pairs);
        let s3 = ratio(1, 1) - ratio(1, 3) + ratio(1, 15) - ratio(1, 255);
        assert_eq!(s3, ratio(62, 85));
        assert_eq!(cf.eval_finite(4).unwrap(), s3);
        assert_eq!(cf.convergents(4).unwrap()[4], s3);
    }

    #[test]
    fn identity_scaling_changes_nothing() {
        let cf = simple(vec![0, 1, 2, 3, 4]).to_gcf();
        let scaled = equivalence_transform(&cf, &RatSeq::ones());
        assert_eq!(cf.convergents(4).unwrap(), scaled.convergents(4).unwrap());
        assert_eq!(cf.elements_exact(4).unwrap(), scaled.elements_exact(4).unwrap());
    }

    #[test]
    fn fermat_scaling_reaches_the_integral_form() {
        // scale the B-form by (1, 1, 1/3, 1/15) to land on 1/(1+1/(2+3/(4+5/16)))
        let pairs = vec![
            (ratio(1, 1), ratio(1, 1)),
            (ratio(1, 1), ratio(2, 1)),
            (ratio(9, 1), ratio(12, 1)),
            (ratio(225, 1), ratio(240, 1)),
        ];
        let cf = Gcf::from_pairs(0, pairs);
        let x = RatSeq::from_vec(vec![ratio(1, 1), ratio(1, 1), ratio(1, 3), ratio(1, 15)]);
        let scaled = equivalence_transform(&cf, &x);
        let want = vec![
            (ratio(1, 1), ratio(1, 1)),
            (ratio(1, 1), ratio(2, 1)),
            (ratio(3, 1), ratio(4, 1)),
            (ratio(5, 1), ratio(16, 1)),
        ];
        assert_eq!(scaled.elements_exact(4).unwrap(), want);
        assert_eq!(scaled.convergents(4).unwrap(), cf.convergents(4).unwrap());
    }

    #[test]
    fn nonpositive_scale_is_rejected() {
        let cf = simple(vec![0, 1, 2]).to_gcf();
        let x = RatSeq::from_vec(vec![ratio(1, 1), ratio(-1, 2)]);
        let scaled = equivalence_transform(&cf, &x);
        assert_eq!(scaled.convergents(2), Err(Error::NonPositiveScale { index: 1 }));
    }

    #[test]
    fn lemma_golden_ratio_hypotheses_hold() {
        let cf = Gcf::from_fn(0, |_, _| Ok(Some((Rat::one(), Rat::one()))));
        let report = lemma_check(&cf, 50).unwrap();
        assert_eq!(report.verdict, LemmaVerdict::HypothesesHold { depth: 50 });
        assert!(report.tails.bounds.iter().all(|t| t.in_unit_interval));
    }

    #[test]
    fn lemma_sharpness_counterexample_fails_at_one() {
        let cf = Gcf::from_fn(0, |_, _| Ok(Some((ratio(2, 1), Rat::one()))));
        let report = lemma_check(&cf, 1).unwrap();
        assert_eq!(report.verdict, LemmaVerdict::ViolatedAt { index: 1 });
    }

    #[test]
    fn lemma_rejects_non_integral_elements() {
        let cf = Gcf::from_pairs(0, vec![(ratio(1, 2), ratio(1, 1))]);
        assert!(matches!(lemma_check(&cf, 1), Err(Error::NonIntegralElement { index: 1 })));
    }

    #[test]
    fn scf_of_rational_fixtures() {
        assert_eq!(scf_of_rational(&ratio(3, 8)).terms(10).unwrap(), vec![
            BigInt::from(0), BigInt::from(2), BigInt::from(1), BigInt::from(2)
        ]);
        assert_eq!(scf_of_rational(&ratio(5, 1)).terms(10).unwrap(), vec![BigInt::from(5)]);
        assert_eq!(scf_of_rational(&ratio(2, 3)).terms(10).unwrap(), vec![
            BigInt::from(0), BigInt::from(1), BigInt::from(2)
        ]);
    }

    #[test]
    fn scf_json_prefix() {
        let cf = simple(vec![0, 2, 1, 2]);
        assert_eq!(cf.to_json_prefix(4).unwrap(), "[0,2,1,2]");
    }

    #[test]
    fn gcf_json_prefix_mixes_integers_and_fractions() {
        let cf = Gcf::from_pairs(0, vec![(ratio(1, 1), ratio(2, 1)), (ratio(1, 1), ratio(3, 2))]);
        assert_eq!(cf.to_json_prefix(2).unwrap(), r#"[[1,2],[1,"3/2"]]"#);
    }

    mod props {
        use super::*;
        use num_integer::Integer;
        use proptest::prelude::*;

        prop_compose! {
            fn arb_gcf()(a0 in -3i64..=3, elems in proptest::collection::vec(
                ((1i64..=10, 1i64..=10), (1i64..=10, 1i64..=10)), 1..=10))
                -> (Gcf, usize)
            {
                let n = elems.len();
                let pairs = elems.into_iter()
                    .map(|((bn, bd), (an, ad))| (ratio(bn, bd), ratio(an, ad)))
                    .collect();
                (Gcf::from_pairs(a0, pairs), n)
            }
        }

        proptest! {
            #[test]
            fn eval_finite_agrees_with_convergents((cf, n) in arb_gcf()) {
                let conv = cf.convergents(n).unwrap();
                for k in 0..=n {
                    prop_assert_eq!(cf.eval_finite(k).unwrap(), conv[k].clone());
                }
            }

            #[test]
            fn transform_preserves_convergents(
                (cf, n) in arb_gcf(),
                scales in proptest::collection::vec((1i64..=10, 1i64..=10), 10),
            ) {
                let x = RatSeq::from_vec(scales.into_iter().map(|(a, b)| ratio(a, b)).collect());
                let scaled = equivalence_transform(&cf, &x);
                prop_assert_eq!(cf.convergents(n).unwrap(), scaled.convergents(n).unwrap());
            }

            #[test]
            fn simple_cf_pairs_are_coprime_with_determinant_identity(
                a0 in 0i64..=5, quotients in proptest::collection::vec(1i64..=9, 1..=10))
            {
                let depth = quotients.len();
                let mut terms = vec![a0];
                terms.extend(quotients);
                let cf = Scf::from_terms(terms).unwrap();
                let pairs = cf.convergent_pairs(depth).unwrap();
                for (p, q) in &pairs {
                    prop_assert_eq!(p.gcd(q), BigInt::one());
                    prop_assert!(q >= &BigInt::one());
                }
                for n in 0..depth {
                    let (p0, q0) = &pairs[n];
                    let (p1, q1) = &pairs[n + 1];
                    let det = p1 * q0 - p0 * q1;
                    let want = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    prop_assert_eq!(det, want);
                }
            }

            #[test]
            fn euclid_round_trips(n in -10_000i64..10_000, d in 1i64..10_000) {
                let r = ratio(n, d);
                let cf = scf_of_rational(&r);
                let len = cf.terms(64).unwrap().len();
                let value = cf.to_gcf().eval_finite(len - 1).unwrap();
                prop_assert_eq!(value, r);
                if len > 1 {
                    let last = cf.quotient(len - 1).unwrap().unwrap();
                    prop_assert!(last >= BigInt::from(2));
                }
            }
        }
    }
}
