use super::correspond::corresponding_frame;
use super::operator::{AnalysisOp, Operator, OperatorName, SynthesisOp};
use super::types::{AnalysisOracle, FrameName, GFrameName, InnerSystem, NormTable};
use crate::directsum::SumName;
use crate::hilbert::{FiniteCombo, VectorName};
use crate::realcore::{bits, sqrt_upper, Rational};

/// `T((f_i)) = sum_i Lambda_i^* f_i`, given `norms(i, j) = ||Lambda_i^* e_ij||`.
pub fn synthesis(g: &GFrameName, norms: NormTable) -> SynthesisOp {
    frame_synthesis(&corresponding_frame(g, &InnerSystem::OrthonormalRows, norms))
}

/// `(c_ij) -> sum c_ij v_ij`, coefficients arranged as an element of the
/// frame's shape.
pub fn frame_synthesis(frame: &FrameName) -> SynthesisOp {
    let bound = sqrt_upper(&frame.b);
    let fr = frame.clone();
    let b2 = bound.clone();
    OperatorName::new(frame.shape.clone(), frame.space.clone(), bound, move |x: &SumName| {
        let (fr, x) = (fr.clone(), x.clone());
        let sb = b2.clone();
        Ok(VectorName::new(fr.space.clone(), move |n| {
            // ||T(x - x~)|| <= sqrt(B) 2^-m <= 2^-(n+2)
            let parts = x.truncate(n + 2 + bits(&sb))?;
            let l1: Rational = parts.iter().map(|(_, c)| c.l1()).sum();
            let p = n + 3 + bits(&l1);
            let mut out = FiniteCombo::zero();
            for (i, c) in &parts {
                for (j, cij) in c.iter() {
                    out.add_scaled(cij, &fr.vec(*i, j)?.approx(p)?);
                }
            }
            Ok(out.rounded(n + 3))
        }))
    })
}

/// `T^*(f) = (Lambda_i f)_i`, given `ao(f) = sum_i ||Lambda_i f||^2`.
pub fn analysis(g: &GFrameName, ao: AnalysisOracle) -> AnalysisOp {
    let g2 = g.clone();
    OperatorName::new(
        g.dom().clone(),
        g.sum().clone(),
        sqrt_upper(&g.b),
        move |f: &VectorName| {
            let (g3, f2) = (g2.clone(), f.clone());
            Ok(SumName::new(g2.sum(), move |i| g3.op(i)?.apply(&f2), ao.eval(f)?))
        },
    )
}

/// `S = T T^*`, with bound `B`.
pub fn frame_operator(g: &GFrameName, norms: NormTable, ao: AnalysisOracle) -> Operator {
    synthesis(g, norms).compose(&analysis(g, ao)).with_bound(g.b.clone())
}
