use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::combo::FiniteCombo;
use super::space::SpaceDescriptor;
use super::vector::VectorName;
use crate::realcore::{bits, certify_tail, CReal, Memo, Rational, TailQuery};

/// The vector `sum_k c_k e_k` of `space`, given its coordinates and its
/// squared norm. Truncation points are certified from `norm_sq` minus the
/// partial sums of `|c_k|^2`; without a correct `norm_sq` no certificate
/// exists and evaluation fails with precision exhaustion.
pub fn expand_certified(
    space: &SpaceDescriptor,
    coeffs: Arc<Memo<usize, CReal>>,
    norm_sq: CReal,
    min_terms: usize,
) -> VectorName {
    let cap = space.cap();
    VectorName::new(space.clone(), move |n| {
        // tail norm <= 2^-(n+1)
        let q = TailQuery::new(&norm_sq, 2 * n + 2).cap(cap).min_terms(min_terms);
        let count = certify_tail(q, |k| Ok(coeffs.get(&k)?.square()))?;
        let p = n + 3 + bits(&Rational::from_integer(BigInt::from(count)));
        let mut c = FiniteCombo::zero();
        for k in 0..count {
            c.add_term(k, &coeffs.get(&k)?.approx(p)?);
        }
        Ok(c.rounded(n + 3))
    })
}

/// The vector `sum_k c_k v_k` for a Bessel-type system with
/// `||sum_k c_k v_k|| <= synth_bound ||c||`, given `||c||^2 = coeff_norm_sq`.
pub fn synthesize_certified(
    space: &SpaceDescriptor,
    coeffs: Arc<Memo<usize, CReal>>,
    vectors: Arc<Memo<usize, VectorName>>,
    coeff_norm_sq: CReal,
    synth_bound: Rational,
    cap: Option<usize>,
) -> VectorName {
    VectorName::new(space.clone(), move |n| {
        let t = 2 * (n + 2 + bits(&synth_bound));
        let q = TailQuery::new(&coeff_norm_sq, t).cap(cap);
        let count = certify_tail(q, |k| Ok(coeffs.get(&k)?.square()))?;
        let mut vmax = Rational::zero();
        for k in 0..count {
            vmax = vmax.max(vectors.get(&k)?.norm_bound()?);
        }
        let pc = n + 3 + bits(&(vmax * Rational::from_integer(BigInt::from(count))));
        let mut cs = Vec::with_capacity(count);
        for k in 0..count {
            cs.push(coeffs.get(&k)?.approx(pc)?);
        }
        let total: Rational = cs.iter().map(|c| c.abs()).sum();
        let pv = n + 3 + bits(&total);
        let mut out = FiniteCombo::zero();
        for (k, c) in cs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &vectors.get(&k)?.approx(pv)?);
            }
        }
        Ok(out.rounded(n + 2))
    })
}
