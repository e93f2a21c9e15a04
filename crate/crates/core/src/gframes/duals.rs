use num_traits::One;

use super::operator::{AnalysisOp, Operator, OperatorName};
use super::ops::{analysis, frame_operator, synthesis};
use super::richardson::invert_frame_operator;
use super::types::{AnalysisOracle, GFrameName, NormTable};
use crate::directsum::{sum_lincomb, SumName};
use crate::hilbert::{inner_product, VectorName};
use crate::realcore::{sqrt_upper, Rational};
use crate::Result;

/// A dual g-frame together with its analysis oracle.
#[derive(Clone, Debug)]
pub struct DualFrame {
    pub gframe: GFrameName,
    pub ao: AnalysisOracle,
}

/// `S^{-1}`, memoized per input.
pub fn inverse_frame_operator(g: &GFrameName, norms: NormTable, ao: AnalysisOracle) -> Result<Operator> {
    Ok(invert_frame_operator(&frame_operator(g, norms, ao), &g.a, &g.b)?.memoize())
}

/// `Lambda~_i = Lambda_i S^{-1}`, with bounds `(1/B, 1/A)` and analysis
/// norm `<S^{-1} f, f>`.
pub fn canonical_dual(g: &GFrameName, norms: NormTable, ao: AnalysisOracle) -> Result<DualFrame> {
    let inv = inverse_frame_operator(g, norms, ao)?;
    let g2 = g.clone();
    let inv2 = inv.clone();
    let gframe = GFrameName::new(
        g.dom(),
        g.sum(),
        move |i| Ok(g2.op(i)?.compose(&inv2)),
        Rational::one() / &g.b,
        Rational::one() / &g.a,
    )?;
    let ao = AnalysisOracle::new(move |f| inner_product(&inv.apply(f)?, f));
    Ok(DualFrame { gframe, ao })
}

/// `T^+(f) = (Lambda_i S^{-1} f)_i`.
pub fn pseudo_inverse(g: &GFrameName, norms: NormTable, ao: AnalysisOracle) -> Result<AnalysisOp> {
    let dual = canonical_dual(g, norms, ao)?;
    Ok(analysis(&dual.gframe, dual.ao))
}

/// `sum_i Lambda_i^* Theta_i f`, which is `f` when `dual` is a dual of `g`.
pub fn reconstruct(g: &GFrameName, dual: &DualFrame, norms: NormTable, f: &VectorName) -> Result<VectorName> {
    synthesis(g, norms).apply(&analysis(&dual.gframe, dual.ao.clone()).apply(f)?)
}

/// The dual `Gamma_j f = (phi^*(f))_j` of a left inverse `phi` of `T^*`,
/// given the adjoint `phi^*` as a map into full sum names.
pub fn dual_from_left_inverse(g: &GFrameName, phi_star: &AnalysisOp) -> Result<DualFrame> {
    g.dom().ensure_same(phi_star.dom())?;
    g.sum().ensure_same(phi_star.cod())?;
    let ps = phi_star.memoize();
    let (ps2, dom) = (ps.clone(), g.dom().clone());
    let upper = phi_star.bound() * phi_star.bound();
    let gframe = GFrameName::new(
        g.dom(),
        g.sum(),
        move |j| {
            let (ps, h) = (ps2.clone(), ps2.cod().component(j)?);
            Ok(OperatorName::new(dom.clone(), h, ps.bound().clone(), move |f| {
                ps.apply(f)?.component(j)
            }))
        },
        Rational::one() / &g.b,
        upper.max(Rational::one() / &g.b),
    )?;
    let ao = AnalysisOracle::new(move |f| Ok(ps.apply(f)?.normsq().clone()));
    Ok(DualFrame { gframe, ao })
}

/// The dual `Gamma_i f = Lambda_i S^{-1} f + (psi f)_i` for `psi` with
/// `T psi = 0`. The analysis norm is that of the assembled sum name.
pub fn dual_from_kernel(g: &GFrameName, norms: NormTable, ao: AnalysisOracle, psi: &AnalysisOp) -> Result<DualFrame> {
    g.dom().ensure_same(psi.dom())?;
    g.sum().ensure_same(psi.cod())?;
    let t_plus = pseudo_inverse(g, norms, ao)?;
    let one = Rational::one();
    let bound = sqrt_upper(&(&one / &g.a)) + psi.bound();
    let (tp, ps) = (t_plus.clone(), psi.memoize());
    let gamma = OperatorName::new(
        g.dom().clone(),
        g.sum().clone(),
        bound.clone(),
        move |f: &VectorName| sum_lincomb(&Rational::one(), &tp.apply(f)?, &Rational::one(), &ps.apply(f)?),
    )
    .memoize();
    let (gm, dom) = (gamma.clone(), g.dom().clone());
    let gframe = GFrameName::new(
        g.dom(),
        g.sum(),
        move |i| {
            let (gm, h) = (gm.clone(), gm.cod().component(i)?);
            Ok(OperatorName::new(dom.clone(), h, gm.bound().clone(), move |f| {
                gm.apply(f)?.component(i)
            }))
        },
        &one / &g.b,
        &bound * &bound,
    )?;
    let ao = AnalysisOracle::new(move |f| Ok(gamma.apply(f)?.normsq().clone()));
    Ok(DualFrame { gframe, ao })
}

/// `psi f = (Gamma_i f - Lambda_i S^{-1} f)_i` for a dual with analysis
/// oracle; `T psi = 0`.
pub fn kernel_from_dual(g: &GFrameName, norms: NormTable, ao: AnalysisOracle, dual: &DualFrame) -> Result<AnalysisOp> {
    let t_plus = pseudo_inverse(g, norms, ao)?;
    let d = analysis(&dual.gframe, dual.ao.clone());
    let bound = d.bound() + t_plus.bound();
    let one = Rational::one();
    Ok(OperatorName::new(
        g.dom().clone(),
        g.sum().clone(),
        bound,
        move |f: &VectorName| sum_lincomb(&one, &d.apply(f)?, &-one.clone(), &t_plus.apply(f)?),
    ))
}

/// Largest `||phi(T^* f) - f||^2` at precision `n` over `panel`.
pub fn check_left_inverse(
    phi: &OperatorName<SumName, VectorName>,
    analysis_op: &AnalysisOp,
    panel: &[VectorName],
    n: u32,
) -> Result<Rational> {
    let mut worst = Rational::from_integer(0.into());
    for f in panel {
        let back = phi.apply(&analysis_op.apply(f)?)?;
        let d = back.approx(n + 2)?.sub(&f.approx(n + 2)?).norm_sq();
        worst = worst.max(d);
    }
    Ok(worst)
}

/// Largest `||T psi f||^2` at precision `n` over `panel`.
pub fn check_kernel(
    t: &OperatorName<SumName, VectorName>,
    psi: &AnalysisOp,
    panel: &[VectorName],
    n: u32,
) -> Result<Rational> {
    let mut worst = Rational::from_integer(0.into());
    for f in panel {
        worst = worst.max(t.apply(&psi.apply(f)?)?.approx(n + 1)?.norm_sq());
    }
    Ok(worst)
}
