use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::space::SumSpace;
use crate::hilbert::{basis_vector, vec_lincomb, FiniteCombo, VectorName};
use crate::realcore::{bits, certify_tail, round_dyadic, sqrt_upper, CReal, Memo, Rational, TailQuery};
use crate::{Error, Result};

/// A componentwise name of `(f_i)` in `(sum H_i)_l2`: a name of every
/// component plus the real `sum_i ||f_i||^2`.
#[derive(Clone)]
pub struct SumName {
    space: SumSpace,
    components: Arc<Memo<usize, VectorName>>,
    component_norms: Arc<Memo<usize, CReal>>,
    normsq: CReal,
}

impl SumName {
    pub fn new(
        space: &SumSpace,
        components: impl Fn(usize) -> Result<VectorName> + Send + Sync + 'static,
        normsq: CReal,
    ) -> Self {
        let sp = space.clone();
        let components = Memo::new(move |i: &usize| {
            let expected = sp.component(*i)?;
            let v = components(*i)?;
            expected.ensure_same(v.space())?;
            Ok(v)
        });
        let c2 = components.clone();
        let component_norms = Memo::new(move |i: &usize| Ok(c2.get(i)?.norm_sq()));
        SumName {
            space: space.clone(),
            components,
            component_norms,
            normsq,
        }
    }

    /// Finitely many nonzero components; the norm is computed from them.
    pub fn from_components(space: &SumSpace, parts: Vec<(usize, VectorName)>) -> Result<Self> {
        for (i, v) in &parts {
            space.component(*i)?.ensure_same(v.space())?;
        }
        let normsq = CReal::sum(parts.iter().map(|(_, v)| v.norm_sq()).collect());
        let sp = space.clone();
        Ok(SumName::new(
            space,
            move |i| match parts.iter().find(|(k, _)| *k == i) {
                Some((_, v)) => Ok(v.clone()),
                None => Ok(VectorName::zero(&sp.component(i)?)),
            },
            normsq,
        ))
    }

    pub fn zero(space: &SumSpace) -> Self {
        SumName::from_components(space, Vec::new()).expect("no components")
    }

    /// The basis vector `E_ij`.
    pub fn basis(space: &SumSpace, i: usize, j: usize) -> Result<Self> {
        let v = basis_vector(&space.component(i)?, j)?;
        SumName::from_components(space, vec![(i, v)])
    }

    pub fn space(&self) -> &SumSpace {
        &self.space
    }

    pub fn component(&self, i: usize) -> Result<VectorName> {
        self.components.get(&i)
    }

    pub fn normsq(&self) -> &CReal {
        &self.normsq
    }

    /// Identity of this name (shared by clones).
    pub fn ptr_key(&self) -> usize {
        Arc::as_ptr(&self.components) as *const () as usize
    }

    /// Finitely many components within `2^-n` of the whole in the sum norm.
    pub fn truncate(&self, n: u32) -> Result<Vec<(usize, FiniteCombo)>> {
        let q = TailQuery::new(&self.normsq, 2 * n + 2).cap(self.space.len());
        let count = certify_tail(q, |i| self.component_norms.get(&i))?;
        let p = n + 2 + bits(&Rational::from_integer(BigInt::from(count)));
        let mut out = Vec::new();
        for i in 0..count {
            let c = self.component(i)?.approx(p)?;
            if !c.is_zero() {
                out.push((i, c));
            }
        }
        Ok(out)
    }

    /// A rational upper bound on the norm.
    pub fn norm_bound(&self) -> Result<Rational> {
        Ok(sqrt_upper(&(self.normsq.approx(0)? + Rational::from_integer(1.into()))))
    }
}

impl std::fmt::Debug for SumName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SumName(space {}, normsq {:?})", self.space.id(), self.normsq)
    }
}

/// Injection of `f` as the `i`-th coordinate.
pub fn sum_embed(space: &SumSpace, i: usize, f: &VectorName) -> Result<SumName> {
    SumName::from_components(space, vec![(i, f.clone())])
}

/// `<F, G> = sum_i <f_i, g_i>`, from truncations certified by both norms.
pub fn sum_inner_product(x: &SumName, y: &SumName) -> Result<CReal> {
    x.space.ensure_same(&y.space)?;
    let (x, y) = (x.clone(), y.clone());
    Ok(CReal::new(move |n| {
        let total = x.norm_bound()? + y.norm_bound()? + Rational::from_integer(1.into());
        let m = n + 1 + bits(&total);
        let (xs, ys) = (x.truncate(m)?, y.truncate(m)?);
        let mut s = Rational::zero();
        for (i, c) in &xs {
            if let Some((_, d)) = ys.iter().find(|(k, _)| k == i) {
                s += c.inner(d);
            }
        }
        Ok(round_dyadic(&s, n + 2))
    }))
}

/// `a F + b G`, with squared norm `a^2|F|^2 + b^2|G|^2 + 2ab<F,G>`.
pub fn sum_lincomb(a: &Rational, x: &SumName, b: &Rational, y: &SumName) -> Result<SumName> {
    x.space.ensure_same(&y.space)?;
    let cross = sum_inner_product(x, y)?.scale(&(a * b * Rational::from_integer(2.into())));
    let normsq = x.normsq.scale(&(a * a)).add(&y.normsq.scale(&(b * b))).add(&cross);
    let (a2, b2, x2, y2) = (a.clone(), b.clone(), x.clone(), y.clone());
    Ok(SumName::new(
        &x.space,
        move |i| vec_lincomb(&a2, &x2.component(i)?, &b2, &y2.component(i)?),
        normsq,
    ))
}

/// Checks `sum_{i<N} ||f_i||^2 <= normsq + 2^-tol` for every `N <= max_n`.
pub fn check_partial_norms(x: &SumName, max_n: usize, tol: u32) -> Result<()> {
    let limit = x.space.len().map_or(max_n, |l| l.min(max_n));
    let p = tol + 8;
    let total = x.normsq.approx(p)?;
    let mut s = Rational::zero();
    for i in 0..limit {
        s += x.component(i)?.norm_sq().approx(p)?;
        if s > &total + crate::realcore::pow2_neg(tol) {
            return Err(Error::InvariantViolation(format!(
                "partial norm sum over {} components exceeds normsq",
                i + 1
            )));
        }
    }
    Ok(())
}
