use num_traits::Zero;

use super::types::{FrameName, GFrameName};
use crate::directsum::SumSpace;
use crate::hilbert::VectorName;
use crate::realcore::{pow2_neg, CReal, Rational};
use crate::{Error, Result};

/// Extremes of the partial sums `s_N` found by a bound check, relative to
/// `A||f||^2` and `B||f||^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    /// Largest `s_N - B||f||^2` seen (should be `<= 2^-tol`).
    pub upper_excess: Rational,
    /// Largest `A||f||^2 - max_N s_N` over the panel (should be `<= 2^-tol`).
    pub lower_deficit: Rational,
}

fn check_sums(
    a: &Rational,
    b: &Rational,
    panel: &[VectorName],
    tol: u32,
    mut terms: impl FnMut(&VectorName) -> Result<Vec<CReal>>,
) -> Result<BoundReport> {
    let p = tol + 10;
    let mut upper_excess: Option<Rational> = None;
    let mut lower_deficit: Option<Rational> = None;
    for f in panel {
        let nf = f.norm_sq().approx(p)?;
        let (lo, hi) = (a * &nf, b * &nf);
        let mut s = Rational::zero();
        let mut best = Rational::zero();
        let mut worst_up = &s - &hi;
        for t in terms(f)? {
            s += t.approx(p)?;
            best = best.max(s.clone());
            worst_up = worst_up.max(&s - &hi);
        }
        upper_excess = Some(upper_excess.map_or(worst_up.clone(), |m| m.max(worst_up)));
        let deficit = lo - best;
        lower_deficit = Some(lower_deficit.map_or(deficit.clone(), |m| m.max(deficit)));
    }
    let report = BoundReport {
        upper_excess: upper_excess.unwrap_or_else(Rational::zero),
        lower_deficit: lower_deficit.unwrap_or_else(Rational::zero),
    };
    let slack = pow2_neg(tol);
    if report.upper_excess > slack {
        return Err(Error::InvariantViolation(format!(
            "partial sums exceed the upper bound by {}",
            report.upper_excess
        )));
    }
    if report.lower_deficit > slack {
        return Err(Error::InvariantViolation(format!(
            "partial sums stay below the lower bound by {}",
            report.lower_deficit
        )));
    }
    Ok(report)
}

/// Partial-sum form of `A||f||^2 <= sum ||Lambda_i f||^2 <= B||f||^2` over
/// the first `max_n` indices, with slack `2^-tol`.
pub fn check_gframe_bounds(g: &GFrameName, panel: &[VectorName], max_n: usize, tol: u32) -> Result<BoundReport> {
    let count = g.len().map_or(max_n, |l| l.min(max_n));
    check_sums(&g.a, &g.b, panel, tol, |f| {
        (0..count).map(|i| Ok(g.op(i)?.apply(f)?.norm_sq())).collect()
    })
}

/// The same check for a frame, summing `|<f, v_ij>|^2` over the first
/// `max_n` index pairs in pairing order.
pub fn check_frame_bounds(frame: &FrameName, panel: &[VectorName], max_n: usize, tol: u32) -> Result<BoundReport> {
    let pairs = frame_indices(frame.shape(), max_n);
    check_sums(&frame.a, &frame.b, panel, tol, |f| {
        pairs
            .iter()
            .map(|&(i, j)| Ok(crate::hilbert::inner_product(f, &frame.vec(i, j)?)?.square()))
            .collect()
    })
}

/// The first `max_n` valid pairs `(i, j)` of `shape` in pairing order,
/// scanning at most `64 max_n` codes.
fn frame_indices(shape: &SumSpace, max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 0..(64 * max_n as u64).max(64) {
        if out.len() == max_n {
            break;
        }
        let (i, j) = SumSpace::split_index(k);
        if let Ok(h) = shape.component(i) {
            if h.check_index(j).is_ok() {
                out.push((i, j));
            }
        }
    }
    out
}
