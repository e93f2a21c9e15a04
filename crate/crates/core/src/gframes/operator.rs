use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::directsum::{SumName, SumSpace};
use crate::hilbert::{FiniteCombo, SpaceDescriptor, VectorName};
use crate::realcore::Rational;
use crate::{Error, Result};

/// Something an operator can act on: a name together with its space.
pub trait Point: Clone + Send + Sync + 'static {
    type Space: Clone + Send + Sync + 'static;

    fn space_id(&self) -> u64;
    fn id_of(space: &Self::Space) -> u64;
    /// Identity of the name; equal keys mean the same name.
    fn key(&self) -> usize;
}

impl Point for VectorName {
    type Space = SpaceDescriptor;

    fn space_id(&self) -> u64 {
        self.space().id
    }
    fn id_of(space: &SpaceDescriptor) -> u64 {
        space.id
    }
    fn key(&self) -> usize {
        self.ptr_key()
    }
}

impl Point for SumName {
    type Space = SumSpace;

    fn space_id(&self) -> u64 {
        self.space().id()
    }
    fn id_of(space: &SumSpace) -> u64 {
        space.id()
    }
    fn key(&self) -> usize {
        self.ptr_key()
    }
}

type Apply<D, C> = dyn Fn(&D) -> Result<C> + Send + Sync;

/// A bounded linear operator given by a program on names, with `||T|| <= bound`.
pub struct OperatorName<D: Point, C: Point> {
    dom: D::Space,
    cod: C::Space,
    bound: Rational,
    apply: Arc<Apply<D, C>>,
}

impl<D: Point, C: Point> Clone for OperatorName<D, C> {
    fn clone(&self) -> Self {
        OperatorName {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            bound: self.bound.clone(),
            apply: self.apply.clone(),
        }
    }
}

pub type Operator = OperatorName<VectorName, VectorName>;
pub type SynthesisOp = OperatorName<SumName, VectorName>;
pub type AnalysisOp = OperatorName<VectorName, SumName>;

fn mismatch(expected: u64, found: u64) -> Error {
    Error::SpaceMismatch { expected, found }
}

impl<D: Point, C: Point> OperatorName<D, C> {
    pub fn new(
        dom: D::Space,
        cod: C::Space,
        bound: Rational,
        apply: impl Fn(&D) -> Result<C> + Send + Sync + 'static,
    ) -> Self {
        OperatorName {
            dom,
            cod,
            bound,
            apply: Arc::new(apply),
        }
    }

    pub fn dom(&self) -> &D::Space {
        &self.dom
    }

    pub fn cod(&self) -> &C::Space {
        &self.cod
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn with_bound(mut self, bound: Rational) -> Self {
        self.bound = bound;
        self
    }

    pub fn apply(&self, x: &D) -> Result<C> {
        if x.space_id() != D::id_of(&self.dom) {
            return Err(mismatch(D::id_of(&self.dom), x.space_id()));
        }
        let y = (self.apply)(x)?;
        if y.space_id() != C::id_of(&self.cod) {
            return Err(mismatch(C::id_of(&self.cod), y.space_id()));
        }
        Ok(y)
    }

    /// `self . first`.
    pub fn compose<E: Point>(&self, first: &OperatorName<E, D>) -> OperatorName<E, C> {
        let (outer, inner) = (self.clone(), first.clone());
        OperatorName::new(
            first.dom.clone(),
            self.cod.clone(),
            &self.bound * &first.bound,
            move |x| outer.apply(&inner.apply(x)?),
        )
    }

    /// Caches outputs per input name. Inputs are retained so their keys
    /// stay unique.
    pub fn memoize(&self) -> Self {
        let inner = self.clone();
        let cache: Mutex<HashMap<usize, (D, C)>> = Mutex::new(HashMap::new());
        OperatorName::new(self.dom.clone(), self.cod.clone(), self.bound.clone(), move |x: &D| {
            if let Some((_, y)) = cache.lock().unwrap().get(&x.key()) {
                return Ok(y.clone());
            }
            let y = inner.apply(x)?;
            cache.lock().unwrap().insert(x.key(), (x.clone(), y.clone()));
            Ok(y)
        })
    }
}

impl Operator {
    /// A map acting exactly on finite combinations.
    pub fn from_combo_map(
        dom: &SpaceDescriptor,
        cod: &SpaceDescriptor,
        bound: Rational,
        f: impl Fn(&FiniteCombo) -> Result<FiniteCombo> + Send + Sync + 'static,
    ) -> Self {
        let f = Arc::new(f);
        let (cod2, b2) = (cod.clone(), bound.clone());
        OperatorName::new(dom.clone(), cod.clone(), bound, move |x: &VectorName| {
            let f = f.clone();
            Ok(x.map_linear(&cod2, &b2, move |c| f(c)))
        })
    }

    pub fn identity(space: &SpaceDescriptor) -> Self {
        OperatorName::new(
            space.clone(),
            space.clone(),
            Rational::from_integer(1.into()),
            |x: &VectorName| Ok(x.clone()),
        )
    }
}

impl<D: Point, C: Point> std::fmt::Debug for OperatorName<D, C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "OperatorName({} -> {}, bound {})",
            D::id_of(&self.dom),
            C::id_of(&self.cod),
            self.bound
        )
    }
}
