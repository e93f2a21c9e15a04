use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::data::{coeff, NormOracle, ToeplitzUpperU};
use crate::directsum::SumSpace;
use crate::gframes::{GFrameName, Operator};
use crate::hilbert::{fresh_space_id, FiniteCombo, VectorName};
use crate::realcore::{bits, max_terms, pow2_neg, round_dyadic, sqrt_upper_within, Rational, SpeckerData};
use crate::{Error, Result};

/// Terms inspected directly before the tail estimate takes over.
const L1_PREFIX: usize = 256;

/// A rational upper bound on `||a||_1`. With distinct exponents, a tail
/// whose squares sum to `t` has `l1` mass at most `2 sqrt(t)`.
pub fn l1_bound(s: &SpeckerData, gate: &NormOracle) -> Result<Rational> {
    if let Some(k) = s.known_len() {
        return Ok(s.partial_l1(k));
    }
    let m = L1_PREFIX;
    let tail = gate.value().approx(80)? + pow2_neg(80) - s.partial_sum(m);
    if tail < Rational::zero() {
        return Err(Error::exhausted(m, "gate lies below the partial sums of a_k^2"));
    }
    Ok(s.partial_l1(m) + Rational::from_integer(2.into()) * sqrt_upper_within(&tail, 40))
}

/// The dual `{tau}` of the single-operator g-frame `{U}` for upper
/// Toeplitz `U`: `tau = (U^*)^{-1}`, so that `U^* tau = I`.
///
/// `tau g` solves the lower Toeplitz system by forward substitution on
/// `u_0 .. u_{M-1}`; the residual, bounded by the rounding errors plus
/// `sum_j |u_j| sqrt(sum_{k>M-j} a_k^2)` with tails read from the gate,
/// is mapped back through `||tau|| <= 1/(1 - ||a||_1)`.
pub fn gated_dual_tau(t: &ToeplitzUpperU, gate: &NormOracle) -> Result<GFrameName> {
    let l1 = l1_bound(&t.specker, gate)?;
    if l1 >= Rational::one() {
        return Err(Error::exhausted(0, "no bound below 1 on the l1 norm of the data"));
    }
    let inv = Rational::one() / (Rational::one() - &l1);
    let tau = tau_operator(t, gate, inv.clone());
    let sum = SumSpace::uniform(fresh_space_id(), Some(1), t.space.clone());
    let one_plus = Rational::one() + &l1;
    GFrameName::new(
        &t.space,
        &sum,
        move |_| Ok(tau.clone()),
        Rational::one() / (&one_plus * &one_plus),
        &inv * &inv,
    )
}

fn tau_operator(t: &ToeplitzUpperU, gate: &NormOracle, inv: Rational) -> Operator {
    let (s, gate, sp) = (t.specker.clone(), gate.clone(), t.space.clone());
    Operator::new(t.space.clone(), t.space.clone(), inv.clone(), move |g: &VectorName| {
        let (s, gate, g, inv) = (s.clone(), gate.clone(), g.clone(), inv.clone());
        Ok(VectorName::new(sp.clone(), move |n| {
            solve(&s, &gate, &inv, &g.approx(n + 2 + bits(&inv))?, n)
        }))
    })
}

/// `u` with `||u - tau(c)|| <= 2^-(n+1)`.
fn solve(s: &SpeckerData, gate: &NormOracle, inv: &Rational, c: &FiniteCombo, n: u32) -> Result<FiniteCombo> {
    let support = c.max_index().map_or(0, |m| m + 1);
    let known = s.known_len();
    let scale = inv * inv * (c.l1() + Rational::one());
    let k = 2 * (n + 6 + bits(&scale));
    let gate_up = gate.value().approx(k)? + pow2_neg(k);
    let mut m = (2 * support).max(8);
    loop {
        let q = n + 5 + bits(inv) + bits(&Rational::from_integer(BigInt::from(m)));
        let u = forward(s, c, m, q);
        let seen = known.map_or(m, |kl| kl.max(m));
        if gate_up < s.partial_sum(seen) {
            return Err(Error::exhausted(seen, "gate lies below the partial sums of a_k^2"));
        }
        // cum[p] = a_1^2 + ... + a_p^2
        let mut cum = vec![Rational::zero()];
        for p in 1..=m {
            let a = coeff(s, p);
            cum.push(&cum[p - 1] + &a * &a);
        }
        // rounding residual: sqrt(m) 2^-(q+1) <= 2^-(q+1-bits(m))
        let mut residual = pow2_neg(q + 1 - bits(&Rational::from_integer(BigInt::from(m))).min(q));
        for (j, uj) in u.iter().enumerate() {
            if !uj.is_zero() {
                // sum_{k >= m-j} a_k^2
                let tail = &gate_up - &cum[m - j - 1];
                residual += uj.abs() * sqrt_upper_within(&tail, k / 2);
            }
        }
        if inv * residual <= pow2_neg(n + 2) {
            return Ok(FiniteCombo::from_pairs(u.into_iter().enumerate()).rounded(n + 3));
        }
        if m >= max_terms() {
            return Err(Error::exhausted(m, "solution tail of the dual did not certify"));
        }
        m = (2 * m).min(max_terms());
    }
}

/// `u_i = round(c_i - sum_{1<=k<=i} a_k u_{i-k})` on the `2^-(q+1)` grid.
fn forward(s: &SpeckerData, c: &FiniteCombo, m: usize, q: u32) -> Vec<Rational> {
    let reach = s.known_len().unwrap_or(m);
    let a: Vec<Rational> = (0..m.min(reach + 1)).map(|k| coeff(s, k)).collect();
    let mut u: Vec<Rational> = Vec::with_capacity(m);
    for i in 0..m {
        let mut v = c.get(i);
        for (k, ak) in a.iter().enumerate().take(i + 1).skip(1) {
            if !ak.is_zero() {
                v -= ak * &u[i - k];
            }
        }
        u.push(round_dyadic(&v, q));
    }
    u
}
