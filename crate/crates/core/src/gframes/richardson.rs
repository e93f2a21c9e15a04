use num_traits::{One, Zero};

use super::operator::Operator;
use crate::hilbert::{FiniteCombo, VectorName};
use crate::realcore::{bits, pow2_neg, Rational};
use crate::{Error, Result};

struct Schedule {
    omega: Rational,
    q: Rational,
    inv_a: Rational,
    b: Rational,
}

impl Schedule {
    fn new(a: &Rational, b: &Rational) -> Result<Self> {
        if *a <= Rational::zero() || a > b {
            return Err(Error::Invalid(format!("spectral bounds need 0 < A <= B, got {a}, {b}")));
        }
        let two = Rational::from_integer(2.into());
        Ok(Schedule {
            omega: &two / (a + b),
            q: (b - a) / (b + a),
            inv_a: Rational::one() / a,
            b: b.clone(),
        })
    }

    /// Smallest `K >= 1` with `(gb/A) q^K <= 2^-(n+1)`.
    fn steps(&self, gb: &Rational, n: u32) -> usize {
        let target = pow2_neg(n + 1);
        let mut err = gb * &self.inv_a * &self.q;
        let mut k = 1;
        while err > target {
            err *= &self.q;
            k += 1;
        }
        k
    }

    /// `k` relaxation steps from `u_0 = 0`, within `2^-(n+1)` of the exact
    /// iterate `u_k`. Step `j` is evaluated at precision `n + k - j + 4 +
    /// bits(omega)` and its result rounded to `n + k - j + 4`.
    fn iterate(&self, s: &Operator, g: &VectorName, k: usize, n: u32, gb: &Rational) -> Result<FiniteCombo> {
        let gt = g.approx(n + 3 + bits(&self.inv_a))?;
        let limit = Rational::from_integer(2.into()) * gb * &self.inv_a + Rational::one();
        let limit_sq = &limit * &limit;
        let mut u = FiniteCombo::zero();
        for j in 0..k {
            let level = n + (k - j) as u32 + 4;
            let su = if u.is_zero() {
                FiniteCombo::zero()
            } else {
                s.apply(&VectorName::constant(s.dom(), u.clone())?)?
                    .approx(level + bits(&self.omega))?
            };
            let mut next = u.clone();
            next.add_scaled(&self.omega, &gt.sub(&su));
            u = next.rounded(level);
            if u.norm_sq() > limit_sq {
                return Err(Error::SpectralViolation(format!(
                    "relaxation iterate {} left the ball of radius {}",
                    j + 1,
                    limit
                )));
            }
        }
        Ok(u)
    }

    /// With valid bounds `||g - S u|| <= B ||u - S^{-1} g|| <= B 2^-n`.
    /// A larger residual proves the bounds wrong; a small one does not
    /// prove them right.
    fn check_residual(&self, s: &Operator, g: &VectorName, u: &FiniteCombo, n: u32) -> Result<()> {
        let m = n + 2;
        let su = s.apply(&VectorName::constant(s.dom(), u.clone())?)?.approx(m)?;
        let r = g.approx(m)?.sub(&su);
        let allowed = &self.b * pow2_neg(n) + pow2_neg(m - 1);
        if r.norm_sq() > &allowed * &allowed {
            return Err(Error::SpectralViolation(format!(
                "residual of the inverse exceeds {allowed} at precision {n}"
            )));
        }
        Ok(())
    }
}

/// `S^{-1}` for a self-adjoint `S` with spectrum in `[a, b]`, by relaxed
/// Richardson iteration `u <- u + 2/(a+b) (g - S u)`. Norm growth or a
/// final residual beyond what the spectral bounds allow is reported as a
/// spectral violation.
pub fn invert_frame_operator(s: &Operator, a: &Rational, b: &Rational) -> Result<Operator> {
    s.dom().ensure_same(s.cod())?;
    let sched = std::sync::Arc::new(Schedule::new(a, b)?);
    let s2 = s.clone();
    let bound = sched.inv_a.clone();
    Ok(Operator::new(
        s.dom().clone(),
        s.dom().clone(),
        bound,
        move |g: &VectorName| {
            let (sched, s, g2) = (sched.clone(), s2.clone(), g.clone());
            Ok(VectorName::new(g.space().clone(), move |n| {
                let gb = g2.norm_bound()?;
                let k = sched.steps(&gb, n);
                let u = sched.iterate(&s, &g2, k, n, &gb)?;
                sched.check_residual(&s, &g2, &u, n)?;
                Ok(u)
            }))
        },
    ))
}

/// The `k`-th iterate `u_k` itself, within `2^-n`.
pub fn richardson_iterate(
    s: &Operator,
    a: &Rational,
    b: &Rational,
    g: &VectorName,
    k: usize,
    n: u32,
) -> Result<FiniteCombo> {
    let sched = Schedule::new(a, b)?;
    sched.iterate(s, g, k, n, &g.norm_bound()?)
}
