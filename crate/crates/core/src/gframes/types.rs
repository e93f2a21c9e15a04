use std::sync::Arc;

use super::operator::Operator;
use crate::directsum::SumSpace;
use crate::hilbert::{SpaceDescriptor, VectorName};
use crate::realcore::{CReal, Memo, Rational};
use crate::{Error, Result};

/// A double sequence of reals, such as the norms `||Lambda_i^* u_ij||`.
#[derive(Clone)]
pub struct NormTable(Arc<Memo<(usize, usize), CReal>>);

impl NormTable {
    pub fn from_fn(f: impl Fn(usize, usize) -> Result<CReal> + Send + Sync + 'static) -> Self {
        NormTable(Memo::new(move |&(i, j): &(usize, usize)| f(i, j)))
    }

    pub fn at(&self, i: usize, j: usize) -> Result<CReal> {
        self.0.get(&(i, j))
    }
}

/// `f -> sum_i ||Lambda_i f||^2`.
#[derive(Clone)]
pub struct AnalysisOracle(Arc<dyn Fn(&VectorName) -> Result<CReal> + Send + Sync>);

impl AnalysisOracle {
    pub fn new(f: impl Fn(&VectorName) -> Result<CReal> + Send + Sync + 'static) -> Self {
        AnalysisOracle(Arc::new(f))
    }

    pub fn eval(&self, f: &VectorName) -> Result<CReal> {
        (self.0)(f)
    }
}

impl std::fmt::Debug for AnalysisOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("AnalysisOracle")
    }
}

/// `(f, i) -> sum_k |<f, u_ik>|^2`, the squared norm of row `i` of the
/// frame coefficients.
#[derive(Clone)]
pub struct CoefficientOracle(Arc<dyn Fn(&VectorName, usize) -> Result<CReal> + Send + Sync>);

impl CoefficientOracle {
    pub fn new(f: impl Fn(&VectorName, usize) -> Result<CReal> + Send + Sync + 'static) -> Self {
        CoefficientOracle(Arc::new(f))
    }

    pub fn eval(&self, f: &VectorName, i: usize) -> Result<CReal> {
        (self.0)(f, i)
    }
}

/// `(Lambda_i : H -> H_i)` with bounds `0 < a <= b`.
#[derive(Clone)]
pub struct GFrameName {
    dom: SpaceDescriptor,
    sum: SumSpace,
    ops: Arc<Memo<usize, Operator>>,
    pub a: Rational,
    pub b: Rational,
}

impl GFrameName {
    pub fn new(
        dom: &SpaceDescriptor,
        sum: &SumSpace,
        ops: impl Fn(usize) -> Result<Operator> + Send + Sync + 'static,
        a: Rational,
        b: Rational,
    ) -> Result<Self> {
        if a <= Rational::from_integer(0.into()) || a > b {
            return Err(Error::Invalid(format!("g-frame bounds need 0 < A <= B, got {a}, {b}")));
        }
        let (d, s) = (dom.clone(), sum.clone());
        let ops = Memo::new(move |i: &usize| {
            let h = s.component(*i)?;
            let op = ops(*i)?;
            d.ensure_same(op.dom())?;
            h.ensure_same(op.cod())?;
            Ok(op)
        });
        Ok(GFrameName {
            dom: dom.clone(),
            sum: sum.clone(),
            ops,
            a,
            b,
        })
    }

    pub fn dom(&self) -> &SpaceDescriptor {
        &self.dom
    }

    pub fn sum(&self) -> &SumSpace {
        &self.sum
    }

    pub fn op(&self, i: usize) -> Result<Operator> {
        self.ops.get(&i)
    }

    pub fn len(&self) -> Option<usize> {
        self.sum.len()
    }
}

impl std::fmt::Debug for GFrameName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GFrameName(H {}, sum {}, A {}, B {})",
            self.dom.id,
            self.sum.id(),
            self.a,
            self.b
        )
    }
}

/// A frame `(v_ij)` indexed by `shape`: row `i` has as many entries as
/// `shape.component(i)` has basis vectors.
#[derive(Clone)]
pub struct FrameName {
    pub(crate) space: SpaceDescriptor,
    pub(crate) shape: SumSpace,
    pub(crate) vecs: Arc<Memo<(usize, usize), VectorName>>,
    pub(crate) vecnorms: NormTable,
    pub a: Rational,
    pub b: Rational,
}

impl FrameName {
    pub fn new(
        space: &SpaceDescriptor,
        shape: &SumSpace,
        vecs: impl Fn(usize, usize) -> Result<VectorName> + Send + Sync + 'static,
        vecnorms: NormTable,
        a: Rational,
        b: Rational,
    ) -> Self {
        let (sp, sh) = (space.clone(), shape.clone());
        let vecs = Memo::new(move |&(i, j): &(usize, usize)| {
            sh.component(i)?.check_index(j)?;
            let v = vecs(i, j)?;
            sp.ensure_same(v.space())?;
            Ok(v)
        });
        FrameName {
            space: space.clone(),
            shape: shape.clone(),
            vecs,
            vecnorms,
            a,
            b,
        }
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn shape(&self) -> &SumSpace {
        &self.shape
    }

    pub fn vec(&self, i: usize, j: usize) -> Result<VectorName> {
        self.vecs.get(&(i, j))
    }

    pub fn vecnorm(&self, i: usize, j: usize) -> Result<CReal> {
        self.vecnorms.at(i, j)
    }
}

/// A frame `(g_ij)_j` of `H_i` together with its frame operator.
#[derive(Clone)]
pub struct InnerFrame {
    pub space: SpaceDescriptor,
    pub atoms: Arc<Memo<usize, VectorName>>,
    pub len: Option<usize>,
    pub a: Rational,
    pub b: Rational,
    pub op: Operator,
}

impl InnerFrame {
    pub fn finite(space: &SpaceDescriptor, atoms: Vec<VectorName>, a: Rational, b: Rational, op: Operator) -> Self {
        let len = atoms.len();
        let dim = len;
        InnerFrame {
            space: space.clone(),
            atoms: Memo::new(move |j: &usize| atoms.get(*j).cloned().ok_or(Error::IndexOutOfRange { index: *j, dim })),
            len: Some(len),
            a,
            b,
            op,
        }
    }

    pub fn atom(&self, j: usize) -> Result<VectorName> {
        match self.len {
            Some(l) if j >= l => Err(Error::IndexOutOfRange { index: j, dim: l }),
            _ => self.atoms.get(&j),
        }
    }
}

/// The systems `(u_ij)_j` of each `H_i` used to pass between a g-frame and
/// its corresponding frame.
#[derive(Clone)]
pub enum InnerSystem {
    /// `u_ij = e_ij`.
    OrthonormalRows,
    /// `u_ij = g_ij`, with `a <= A_i <= B_i <= b`.
    FrameRows {
        rows: Arc<dyn Fn(usize) -> Result<InnerFrame> + Send + Sync>,
        a: Rational,
        b: Rational,
    },
}

impl InnerSystem {
    pub fn frame_rows(
        rows: impl Fn(usize) -> Result<InnerFrame> + Send + Sync + 'static,
        a: Rational,
        b: Rational,
    ) -> Self {
        InnerSystem::FrameRows {
            rows: Arc::new(rows),
            a,
            b,
        }
    }
}
