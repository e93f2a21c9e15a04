use std::collections::HashSet;
use std::sync::Arc;

use num_traits::Zero;

use super::creal::CReal;
use super::rational::{pow2_neg, Rational};
use super::seq::CRealSeq;
use crate::{Error, Result};

type Enumerator = dyn Fn(usize) -> Option<u64> + Send + Sync;

/// An injective enumeration `e` of naturals and the derived sequence
/// `a_i = 2^-(e(i)+1)`.
///
/// Because exponents are distinct, every partial sum of `a_i^2` stays below
/// `sum_k 4^-(k+1) = 1/3` and every partial sum of `a_i` below 1. The limit of
/// the squared sums is in general not computable; it is never produced here.
#[derive(Clone)]
pub struct SpeckerData {
    enumerator: Arc<Enumerator>,
    len: Option<usize>,
}

impl SpeckerData {
    /// Finitely truncated data: `a_i = 0` for `i >= exponents.len()`.
    pub fn finite(exponents: Vec<u64>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &e in &exponents {
            if !seen.insert(e) {
                return Err(Error::Invalid(format!("enumerator repeats exponent {e}")));
            }
        }
        let len = exponents.len();
        Ok(SpeckerData {
            enumerator: Arc::new(move |i| exponents.get(i).copied()),
            len: Some(len),
        })
    }

    pub fn empty() -> Self {
        SpeckerData {
            enumerator: Arc::new(|_| None),
            len: Some(0),
        }
    }

    /// An infinite enumerator. Injectivity is the caller's contract; see
    /// [`SpeckerData::check_injective`].
    pub fn from_fn(f: impl Fn(usize) -> u64 + Send + Sync + 'static) -> Self {
        SpeckerData {
            enumerator: Arc::new(move |i| Some(f(i))),
            len: None,
        }
    }

    /// Number of nonzero terms for truncated data, `None` for infinite data.
    pub fn known_len(&self) -> Option<usize> {
        self.len
    }

    pub fn exponent(&self, i: usize) -> Option<u64> {
        (self.enumerator)(i)
    }

    /// `a_i` as an exact rational.
    pub fn term(&self, i: usize) -> Rational {
        match self.exponent(i) {
            Some(e) => pow2_neg(e as u32 + 1),
            None => Rational::zero(),
        }
    }

    pub fn check_injective(&self, prefix: usize) -> Result<()> {
        let mut seen = HashSet::new();
        for i in 0..prefix {
            if let Some(e) = self.exponent(i) {
                if !seen.insert(e) {
                    return Err(Error::InvariantViolation(format!(
                        "enumerator repeats exponent {e} at index {i}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `sum_{i<n} a_i^2`, exactly.
    pub fn partial_sum(&self, n: usize) -> Rational {
        (0..n).map(|i| self.term(i)).map(|a| &a * &a).sum()
    }

    /// `sum_{i<n} a_i`, exactly.
    pub fn partial_l1(&self, n: usize) -> Rational {
        (0..n).map(|i| self.term(i)).sum()
    }

    /// The monotone sequence of partial sums of `a_i^2`. Its limit is the
    /// squared l2 norm of `(a_i)`, which is not offered as a real.
    pub fn partial_sums(&self) -> CRealSeq {
        let s = self.clone();
        CRealSeq::from_fn(move |n| Ok(CReal::from(s.partial_sum(n))))
    }

    /// Exact `sum_i a_i^2` for truncated data.
    pub fn exact_norm_sq(&self) -> Option<Rational> {
        self.len.map(|n| self.partial_sum(n))
    }
}
