use super::operator::{Operator, OperatorName};
use super::richardson::invert_frame_operator;
use super::types::{CoefficientOracle, FrameName, GFrameName, InnerSystem, NormTable};
use crate::directsum::SumSpace;
use crate::hilbert::{
    basis_vector, expand_certified, fresh_space_id, inner_product, riesz_functional, riesz_representer,
    synthesize_certified, Dimension, Field, FunctionalName, SpaceDescriptor, VectorName,
};
use crate::realcore::{sqrt_upper, CReal, Memo, Rational};
use crate::Result;

/// The g-frame `Lambda_i f = <f, f_i>` of a frame `(f_i)` of `space`, each
/// atom given with its norm. The components are copies of the scalar field.
pub fn riesz_correspondence(
    space: &SpaceDescriptor,
    len: Option<usize>,
    atoms: impl Fn(usize) -> Result<(VectorName, CReal)> + Send + Sync + 'static,
    a: Rational,
    b: Rational,
) -> Result<GFrameName> {
    let scalars = SpaceDescriptor::scalars(fresh_space_id());
    let sum = SumSpace::uniform(fresh_space_id(), len, scalars.clone());
    let sp = space.clone();
    GFrameName::new(
        space,
        &sum,
        move |i| {
            let (v, norm) = atoms(i)?;
            let functional = riesz_functional(&v, norm.clone());
            let cod = scalars.clone();
            Ok(OperatorName::new(
                sp.clone(),
                scalars.clone(),
                norm.magnitude_bound()?,
                move |f| Ok(VectorName::from_scalar(&cod, functional.eval(f)?)),
            ))
        },
        a,
        b,
    )
}

/// The frame `(Lambda_i^* 1)` of a g-frame into the scalar field, given
/// `opnorms(i) = ||Lambda_i||`.
pub fn gframe_to_frame(g: &GFrameName, opnorms: impl Fn(usize) -> Result<CReal> + Send + Sync + 'static) -> FrameName {
    corresponding_frame(
        g,
        &InnerSystem::OrthonormalRows,
        NormTable::from_fn(move |i, _| opnorms(i)),
    )
}

/// Index spaces for rows of inner frames. Ids are derived from the shape id
/// so that repeated lookups agree.
fn row_shape(len: Option<usize>, sys: &InnerSystem) -> SumSpace {
    let InnerSystem::FrameRows { rows, .. } = sys else {
        unreachable!("row shapes are only needed for frame rows")
    };
    let id = fresh_space_id();
    let rows = rows.clone();
    SumSpace::new(id, len, move |i| {
        let dim = match rows(i).map(|r| r.len) {
            Ok(Some(l)) => Dimension::Finite(l),
            _ => Dimension::Infinite,
        };
        SpaceDescriptor::new(id ^ ((i as u64 + 1) << 52), dim, Field::Real)
    })
}

/// The frame `v_ij = Lambda_i^* u_ij` of `H`, where `norms(i, j)` must be
/// `||Lambda_i^* u_ij||`; wrong norms surface as precision exhaustion.
pub fn corresponding_frame(g: &GFrameName, sys: &InnerSystem, norms: NormTable) -> FrameName {
    let (g2, sys2, n2) = (g.clone(), sys.clone(), norms.clone());
    let vecs = move |i: usize, j: usize| {
        let op = g2.op(i)?;
        let u = match &sys2 {
            InnerSystem::OrthonormalRows => basis_vector(op.cod(), j)?,
            InnerSystem::FrameRows { rows, .. } => rows(i)?.atom(j)?,
        };
        let functional = FunctionalName::new(
            g2.dom().clone(),
            move |f| inner_product(&op.apply(f)?, &u),
            n2.at(i, j)?,
        );
        Ok(riesz_representer(&functional))
    };
    let (shape, a, b) = match sys {
        InnerSystem::OrthonormalRows => (g.sum().clone(), g.a.clone(), g.b.clone()),
        InnerSystem::FrameRows { a, b, .. } => (row_shape(g.len(), sys), &g.a * a, &g.b * b),
    };
    FrameName::new(g.dom(), &shape, vecs, norms, a, b)
}

/// The g-frame into `sum` whose corresponding frame is `frame`, given the
/// row norms of the frame coefficients.
pub fn gframe_from_corresponding(
    frame: &FrameName,
    sys: &InnerSystem,
    sum: &SumSpace,
    co: CoefficientOracle,
) -> Result<GFrameName> {
    let (a, b, bound) = match sys {
        InnerSystem::OrthonormalRows => (frame.a.clone(), frame.b.clone(), sqrt_upper(&frame.b)),
        InnerSystem::FrameRows { a, b, .. } => (&frame.a / b, &frame.b / a, sqrt_upper(&(&frame.b / a))),
    };
    let (fr, sys2, sum2) = (frame.clone(), sys.clone(), sum.clone());
    GFrameName::new(
        frame.space(),
        sum,
        move |i| {
            let h = sum2.component(i)?;
            let (fr, co) = (fr.clone(), co.clone());
            let op: Operator = match &sys2 {
                InnerSystem::OrthonormalRows => {
                    OperatorName::new(fr.space.clone(), h.clone(), bound.clone(), move |f| {
                        Ok(expand_certified(&h, row_coeffs(&fr, f, i), co.eval(f, i)?, 0))
                    })
                }
                InnerSystem::FrameRows { rows, .. } => {
                    let row = rows(i)?;
                    let inverse = invert_frame_operator(&row.op, &row.a, &row.b)?;
                    let sb = sqrt_upper(&row.b);
                    OperatorName::new(fr.space.clone(), h.clone(), bound.clone(), move |f| {
                        let s_lambda = synthesize_certified(
                            &row.space,
                            row_coeffs(&fr, f, i),
                            row.atoms.clone(),
                            co.eval(f, i)?,
                            sb.clone(),
                            row.len,
                        );
                        inverse.apply(&s_lambda)
                    })
                }
            };
            Ok(op)
        },
        a,
        b,
    )
}

fn row_coeffs(frame: &FrameName, f: &VectorName, i: usize) -> std::sync::Arc<Memo<usize, CReal>> {
    let (fr, f) = (frame.clone(), f.clone());
    Memo::new(move |k: &usize| inner_product(&f, &fr.vec(i, *k)?))
}
