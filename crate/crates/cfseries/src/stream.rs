//! Memoized pull-based streams.
//!
//! Sequence terms here grow double-exponentially, so deep re-traversals
//! must never recompute earlier terms. A [`Memo`] computes each term once,
//! under a mutex (single writer, any number of readers of the finished
//! prefix), and hands the generator the cached prefix so recursively
//! defined sequences stay O(1) per term.

use num_bigint::BigInt;
use std::sync::{Arc, Mutex};

use crate::error::Error;
use crate::exact::Rat;
use crate::Result;

/// Generation cap in decimal digits. Streams built with a cap stop with
/// [`Error::DigitCapExceeded`] instead of materializing a term this large.
pub const DEFAULT_DIGIT_CAP: u64 = 1_000_000;

/// Rough decimal digit count from the bit length.
pub fn approx_decimal_digits(x: &BigInt) -> u64 {
    (x.bits() as u128 * 30_103 / 100_000) as u64 + 1
}

pub fn digit_guard(x: &BigInt, index: usize, cap: u64) -> Result<()> {
    let digits = approx_decimal_digits(x);
    if digits > cap {
        Err(Error::DigitCapExceeded { index, digits, cap })
    } else {
        Ok(())
    }
}

type Gen<T> = Box<dyn FnMut(usize, &[T]) -> Result<Option<T>> + Send>;

struct MemoState<T> {
    cache: Vec<T>,
    finished: bool,
    gen: Gen<T>,
}

pub struct Memo<T> {
    state: Mutex<MemoState<T>>,
}

impl<T: Clone> Memo<T> {
    /// Stream from a generator. The generator receives the index to
    /// produce and the already-cached prefix; returning `Ok(None)` ends
    /// the stream. It is only ever called with `index == prefix.len()`.
    pub fn from_fn(gen: impl FnMut(usize, &[T]) -> Result<Option<T>> + Send + 'static) -> Self {
        Memo {
            state: Mutex::new(MemoState {
                cache: Vec::new(),
                finished: false,
                gen: Box::new(gen),
            }),
        }
    }

    pub fn from_vec(items: Vec<T>) -> Self {
        Memo {
            state: Mutex::new(MemoState {
                cache: items,
                finished: true,
                gen: Box::new(|_, _| Ok(None)),
            }),
        }
    }

    pub fn get(&self, index: usize) -> Result<Option<T>> {
        let mut st = self.state.lock().expect("memo poisoned");
        while st.cache.len() <= index && !st.finished {
            let MemoState { cache, finished, gen } = &mut *st;
            match gen(cache.len(), cache)? {
                Some(v) => cache.push(v),
                None => *finished = true,
            }
        }
        Ok(st.cache.get(index).cloned())
    }

    /// First `len` items; errors if the stream is shorter.
    pub fn take_exact(&self, len: usize) -> Result<Vec<T>> {
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            match self.get(i)? {
                Some(v) => out.push(v),
                None => return Err(Error::StreamExhausted { at: i }),
            }
        }
        Ok(out)
    }

    /// First `len` items, or fewer if the stream ends early.
    pub fn take_upto(&self, len: usize) -> Result<Vec<T>> {
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            match self.get(i)? {
                Some(v) => out.push(v),
                None => break,
            }
        }
        Ok(out)
    }

    /// Total length, if the stream is already known to be finite.
    pub fn known_len(&self) -> Option<usize> {
        let st = self.state.lock().expect("memo poisoned");
        st.finished.then_some(st.cache.len())
    }
}

/// Shared lazy integer sequence.
#[derive(Clone)]
pub struct IntSeq(Arc<Memo<BigInt>>);

impl IntSeq {
    pub fn from_memo(memo: Memo<BigInt>) -> Self {
        IntSeq(Arc::new(memo))
    }

    pub fn from_vec(items: Vec<impl Into<BigInt>>) -> Self {
        IntSeq(Arc::new(Memo::from_vec(items.into_iter().map(Into::into).collect())))
    }

    pub fn from_fn(gen: impl FnMut(usize, &[BigInt]) -> Result<Option<BigInt>> + Send + 'static) -> Self {
        IntSeq(Arc::new(Memo::from_fn(gen)))
    }

    /// Like [`IntSeq::from_fn`] with every produced term checked against a
    /// decimal digit cap.
    pub fn from_fn_capped(
        cap: u64,
        mut gen: impl FnMut(usize, &[BigInt]) -> Result<Option<BigInt>> + Send + 'static,
    ) -> Self {
        IntSeq::from_fn(move |i, prefix| match gen(i, prefix)? {
            Some(v) => {
                digit_guard(&v, i, cap)?;
                Ok(Some(v))
            }
            None => Ok(None),
        })
    }

    pub fn constant(v: impl Into<BigInt>) -> Self {
        let v = v.into();
        IntSeq::from_fn(move |_, _| Ok(Some(v.clone())))
    }

    pub fn get(&self, index: usize) -> Result<Option<BigInt>> {
        self.0.get(index)
    }

    pub fn take_exact(&self, len: usize) -> Result<Vec<BigInt>> {
        self.0.take_exact(len)
    }

    pub fn take_upto(&self, len: usize) -> Result<Vec<BigInt>> {
        self.0.take_upto(len)
    }

    pub fn known_len(&self) -> Option<usize> {
        self.0.known_len()
    }
}

/// Shared lazy rational sequence (scaling streams and the like).
#[derive(Clone)]
pub struct RatSeq(Arc<Memo<Rat>>);

impl RatSeq {
    pub fn from_vec(items: Vec<Rat>) -> Self {
        RatSeq(Arc::new(Memo::from_vec(items)))
    }

    pub fn from_fn(gen: impl FnMut(usize, &[Rat]) -> Result<Option<Rat>> + Send + 'static) -> Self {
        RatSeq(Arc::new(Memo::from_fn(gen)))
    }

    pub fn ones() -> Self {
        RatSeq::from_fn(|_, _| Ok(Some(Rat::from_integer(1.into()))))
    }

    pub fn get(&self, index: usize) -> Result<Option<Rat>> {
        self.0.get(index)
    }

    pub fn take_exact(&self, len: usize) -> Result<Vec<Rat>> {
        self.0.take_exact(len)
    }
}
