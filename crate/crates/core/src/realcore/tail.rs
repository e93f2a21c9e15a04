use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;

use super::creal::CReal;
use super::rational::{bits, pow2_neg, Rational};
use crate::{Error, Result};

static MAX_TERMS: AtomicUsize = AtomicUsize::new(1 << 14);

/// Global guard on the number of terms a tail search may inspect.
pub fn max_terms() -> usize {
    MAX_TERMS.load(Ordering::Relaxed)
}

pub fn set_max_terms(n: usize) {
    MAX_TERMS.store(n.max(1), Ordering::Relaxed);
}

/// Parameters of a tail search: find `N` with
/// `total - sum_{k<N} term_k <= 2^-threshold_bits`.
#[derive(Clone, Copy)]
pub struct TailQuery<'a> {
    pub total: &'a CReal,
    pub threshold_bits: u32,
    /// Number of available terms (a finite dimension), if any.
    pub cap: Option<usize>,
    /// The search never stops before this many terms.
    pub min_terms: usize,
}

impl<'a> TailQuery<'a> {
    pub fn new(total: &'a CReal, threshold_bits: u32) -> Self {
        TailQuery {
            total,
            threshold_bits,
            cap: None,
            min_terms: 0,
        }
    }

    pub fn cap(mut self, cap: Option<usize>) -> Self {
        self.cap = cap;
        self
    }

    pub fn min_terms(mut self, n: usize) -> Self {
        self.min_terms = n;
        self
    }
}

/// Certifies that the nonnegative terms `term(0), term(1), ...` exhaust
/// `total` up to `2^-t`, probing `N = 4, 8, 16, ...`.
///
/// Fails with [`Error::PrecisionExhausted`] when the partial sums certainly
/// exceed `total` (the norm datum is understated) or when no certificate is
/// found within the available or permitted number of terms.
pub fn certify_tail(query: TailQuery<'_>, mut term: impl FnMut(usize) -> Result<CReal>) -> Result<usize> {
    let t = query.threshold_bits;
    let limit = query.cap.unwrap_or(usize::MAX).min(max_terms().max(query.min_terms));
    let mut n = 4usize.max(query.min_terms).min(limit);
    let mut terms: Vec<CReal> = Vec::new();
    loop {
        while terms.len() < n {
            terms.push(term(terms.len())?);
        }
        let m = t + 2 + bits(&Rational::from_integer(BigInt::from(n + 1)));
        let mut rest = query.total.approx(m)?;
        for tk in &terms[..n] {
            rest -= tk.approx(m)?;
        }
        // |rest - true rest| <= (n + 1) 2^-m <= 2^-(t+2)
        let slack = pow2_neg(t + 1);
        if rest < -slack.clone() {
            return Err(Error::exhausted(
                n,
                "partial sums exceed the supplied norm datum (understated norm)",
            ));
        }
        if rest <= slack {
            return Ok(n);
        }
        if n >= limit {
            let why = if query.cap == Some(n) {
                "all terms used but the norm datum is not exhausted (overstated norm)"
            } else {
                "tail not certified within the term limit"
            };
            return Err(Error::exhausted(n, why));
        }
        n = n.saturating_mul(2).min(limit);
    }
}
