use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::realcore::{bits, format_rational, round_dyadic, Rational};

/// A finite rational combination `sum c_k e_k` of basis vectors. Zero
/// coefficients are never stored, so indices are distinct and the support is
/// exactly the key set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteCombo {
    terms: BTreeMap<usize, Rational>,
}

impl FiniteCombo {
    pub fn zero() -> Self {
        FiniteCombo::default()
    }

    pub fn basis(k: usize) -> Self {
        FiniteCombo::from_pairs([(k, Rational::from_integer(BigInt::from(1)))])
    }

    /// Repeated indices are summed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut c = FiniteCombo::zero();
        for (k, v) in pairs {
            c.add_term(k, &v);
        }
        c
    }

    pub fn get(&self, k: usize) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, k: usize, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &FiniteCombo) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k, &(c * v));
        }
    }

    pub fn scaled(&self, c: &Rational) -> FiniteCombo {
        let mut out = FiniteCombo::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &FiniteCombo) -> FiniteCombo {
        let mut out = self.clone();
        out.add_scaled(&-Rational::from_integer(BigInt::from(1)), other);
        out
    }

    pub fn inner(&self, other: &FiniteCombo) -> Rational {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .iter()
            .filter_map(|(k, v)| large.terms.get(&k).map(|w| v * w))
            .sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.terms.values().map(|v| v * v).sum()
    }

    pub fn l1(&self) -> Rational {
        self.terms.values().map(|v| v.abs()).sum()
    }

    /// Rounds every coefficient to a dyadic grid; the result is within
    /// `2^-k` of `self` in norm.
    pub fn rounded(&self, k: u32) -> FiniteCombo {
        let grid = k + 1 + bits(&Rational::from_integer(BigInt::from(self.len())));
        FiniteCombo::from_pairs(self.iter().map(|(i, v)| (i, round_dyadic(v, grid))))
    }
}

impl fmt::Display for FiniteCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(k, v)| format!("{k}:{}", format_rational(v)))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
