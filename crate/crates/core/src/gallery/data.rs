use num_traits::Zero;

use crate::hilbert::{Dimension, SpaceDescriptor};
use crate::realcore::{certify_tail, pow2_neg, CReal, Rational, SpeckerData, TailQuery};
use crate::{Error, Result};

/// A claimed value of `sum_k a_k^2` for Specker data. Nothing here can
/// verify it; gated constructions fail with precision exhaustion once the
/// partial sums they inspect exceed it.
#[derive(Clone, Debug)]
pub struct NormOracle {
    value: CReal,
}

impl NormOracle {
    pub fn new(value: CReal) -> Self {
        NormOracle { value }
    }

    pub fn from_rational(q: Rational) -> Self {
        NormOracle::new(CReal::from_rational(q))
    }

    /// The exact sum of finitely enumerated data.
    pub fn exact(s: &SpeckerData) -> Result<Self> {
        s.exact_norm_sq()
            .map(NormOracle::from_rational)
            .ok_or_else(|| Error::Invalid("an exact gate needs finitely enumerated data".into()))
    }

    pub fn value(&self) -> &CReal {
        &self.value
    }

    /// `value >= sum_{k<=prefix} a_k^2 - 2^-25`.
    pub fn check_against(&self, s: &SpeckerData, prefix: usize) -> Result<()> {
        if self.value.approx(27)? + pow2_neg(25) < s.partial_sum(prefix) {
            return Err(Error::InvariantViolation(format!(
                "gate lies below the sum of the first {prefix} squared terms"
            )));
        }
        Ok(())
    }
}

/// `a_k` for `k >= 1`; `a_0 = 0`.
pub(crate) fn coeff(s: &SpeckerData, k: usize) -> Rational {
    if k == 0 {
        Rational::zero()
    } else {
        s.term(k - 1)
    }
}

/// `N` with `sum_{k>N} a_k^2 <= 2^-t` according to the gate. For finitely
/// enumerated data every term is inspected, so a gate below the true sum
/// is always caught.
pub(crate) fn gated_count(s: &SpeckerData, gate: &NormOracle, t: u32) -> Result<usize> {
    let q = TailQuery::new(&gate.value, t).min_terms(s.known_len().unwrap_or(0));
    certify_tail(q, |k| {
        let a = s.term(k);
        Ok(CReal::from_rational(&a * &a))
    })
}

pub(crate) fn require_l2(space: &SpaceDescriptor) -> Result<()> {
    space.ensure_real()?;
    if space.dim != Dimension::Infinite {
        return Err(Error::Invalid(
            "gallery operators act on an infinite-dimensional l2".into(),
        ));
    }
    Ok(())
}

/// Upper Toeplitz `U`, `(Uf)_i = f_i + sum_{k>=1} a_k f_{i+k}`.
#[derive(Clone)]
pub struct ToeplitzUpperU {
    pub space: SpaceDescriptor,
    pub specker: SpeckerData,
}

/// `(Uf)_0 = f_0`, `(Uf)_i = a_i f_0 + f_i`.
#[derive(Clone)]
pub struct ColumnLowerU {
    pub space: SpaceDescriptor,
    pub specker: SpeckerData,
}

/// Lower Toeplitz `U`, `(Uf)_i = f_i + sum_{1<=k<=i} a_k f_{i-k}`.
#[derive(Clone)]
pub struct ToeplitzLowerU {
    pub space: SpaceDescriptor,
    pub specker: SpeckerData,
}

macro_rules! gallery_new {
    ($($t:ident),*) => {$(
        impl $t {
            pub fn new(space: &SpaceDescriptor, specker: SpeckerData) -> Result<Self> {
                require_l2(space)?;
                Ok($t { space: space.clone(), specker })
            }
        }
    )*};
}

gallery_new!(ToeplitzUpperU, ColumnLowerU, ToeplitzLowerU);
