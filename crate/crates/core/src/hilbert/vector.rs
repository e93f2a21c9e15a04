use std::sync::Arc;

use num_traits::{Signed, Zero};

use super::combo::FiniteCombo;
use super::space::SpaceDescriptor;
use crate::realcore::{bits, pow2_neg, round_dyadic, sqrt_upper, CReal, Memo, Rational};
use crate::Result;

/// A Cauchy name of a vector: `approx(n)` is a finite rational combination
/// of basis vectors within `2^-n` of the vector in norm.
#[derive(Clone)]
pub struct VectorName {
    space: SpaceDescriptor,
    oracle: Arc<Memo<u32, FiniteCombo>>,
}

impl VectorName {
    pub fn new(space: SpaceDescriptor, f: impl Fn(u32) -> Result<FiniteCombo> + Send + Sync + 'static) -> Self {
        VectorName {
            space,
            oracle: Memo::new(move |n: &u32| f(*n)),
        }
    }

    /// The constant name of a finite combination.
    pub fn constant(space: &SpaceDescriptor, combo: FiniteCombo) -> Result<Self> {
        space.ensure_real()?;
        if let Some(k) = combo.max_index() {
            space.check_index(k)?;
        }
        Ok(VectorName::new(space.clone(), move |_| Ok(combo.clone())))
    }

    pub fn zero(space: &SpaceDescriptor) -> Self {
        VectorName::new(space.clone(), |_| Ok(FiniteCombo::zero()))
    }

    /// `x e_0` in a space of dimension at least one, typically the scalars.
    pub fn from_scalar(space: &SpaceDescriptor, x: CReal) -> Self {
        VectorName::new(space.clone(), move |n| Ok(FiniteCombo::from_pairs([(0, x.approx(n)?)])))
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn approx(&self, n: u32) -> Result<FiniteCombo> {
        self.oracle.get(&n)
    }

    /// Identity of the underlying oracle; clones share it.
    pub fn ptr_key(&self) -> usize {
        Arc::as_ptr(&self.oracle) as *const () as usize
    }

    /// A rational `b >= ||x||`.
    pub fn norm_bound(&self) -> Result<Rational> {
        Ok(sqrt_upper(&self.approx(0)?.norm_sq()) + Rational::from_integer(1.into()))
    }

    /// The coordinate `<x, e_k>`. Coordinates are 1-Lipschitz in norm.
    pub fn coefficient(&self, k: usize) -> CReal {
        let x = self.clone();
        CReal::new(move |n| Ok(x.approx(n)?.get(k)))
    }

    /// `y = L(x)` for a linear map acting exactly on finite combinations,
    /// with `||L|| <= lipschitz`.
    pub fn map_linear(
        &self,
        cod: &SpaceDescriptor,
        lipschitz: &Rational,
        f: impl Fn(&FiniteCombo) -> Result<FiniteCombo> + Send + Sync + 'static,
    ) -> VectorName {
        let x = self.clone();
        let shift = 2 + bits(lipschitz);
        VectorName::new(cod.clone(), move |n| Ok(f(&x.approx(n + shift)?)?.rounded(n + 1)))
    }

    pub fn scale(&self, a: &Rational) -> VectorName {
        let z = VectorName::zero(&self.space);
        vec_lincomb(a, self, &Rational::zero(), &z).expect("same space")
    }

    pub fn add(&self, other: &VectorName) -> Result<VectorName> {
        let one = Rational::from_integer(1.into());
        vec_lincomb(&one, self, &one, other)
    }

    pub fn sub(&self, other: &VectorName) -> Result<VectorName> {
        let one = Rational::from_integer(1.into());
        vec_lincomb(&one, self, &-one.clone(), other)
    }

    pub fn norm_sq(&self) -> CReal {
        inner_product(self, self).expect("same space")
    }

    pub fn norm(&self) -> CReal {
        vec_norm(self)
    }

    /// Largest violation of `||x_n - x_m|| <= 2^-n + 2^-m` over the given
    /// precisions, as `(n, m)`, or `None` when consistent.
    pub fn cauchy_defect(&self, precisions: &[u32]) -> Result<Option<(u32, u32)>> {
        for &n in precisions {
            for &m in precisions {
                if m <= n {
                    continue;
                }
                let d = self.approx(n)?.sub(&self.approx(m)?).norm_sq();
                let b = pow2_neg(n) + pow2_neg(m);
                if d > &b * &b {
                    return Ok(Some((n, m)));
                }
            }
        }
        Ok(None)
    }
}

impl std::fmt::Debug for VectorName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.approx(20) {
            Ok(c) => write!(f, "VectorName(space {}, ~[{}])", self.space.id, c),
            Err(e) => write!(f, "VectorName(space {}, <{}>)", self.space.id, e),
        }
    }
}

pub fn basis_vector(space: &SpaceDescriptor, k: usize) -> Result<VectorName> {
    VectorName::constant(space, FiniteCombo::basis(k))
}

/// `a x + b y`.
pub fn vec_lincomb(a: &Rational, x: &VectorName, b: &Rational, y: &VectorName) -> Result<VectorName> {
    x.space.ensure_same(&y.space)?;
    let (a, b, x, y) = (a.clone(), b.clone(), x.clone(), y.clone());
    let shift = 2 + bits(&(a.abs() + b.abs()));
    Ok(VectorName::new(x.space.clone(), move |n| {
        let mut c = FiniteCombo::zero();
        if !a.is_zero() {
            c.add_scaled(&a, &x.approx(n + shift)?);
        }
        if !b.is_zero() {
            c.add_scaled(&b, &y.approx(n + shift)?);
        }
        Ok(c.rounded(n + 1))
    }))
}

/// `<x, y>`, scheduled from the norm bounds of both arguments.
pub fn inner_product(x: &VectorName, y: &VectorName) -> Result<CReal> {
    x.space.ensure_same(&y.space)?;
    let (x, y) = (x.clone(), y.clone());
    Ok(CReal::new(move |n| {
        // |<x,y> - <x',y'>| <= 2^-m (||y|| + ||x'||) <= 2^-m (bx + by + 1)
        let total = x.norm_bound()? + y.norm_bound()? + Rational::from_integer(1.into());
        let m = n + 1 + bits(&total);
        let v = x.approx(m)?.inner(&y.approx(m)?);
        Ok(round_dyadic(&v, n + 2))
    }))
}

pub fn vec_norm(x: &VectorName) -> CReal {
    x.norm_sq().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realcore::{int, rat};
    use crate::Error;
    use proptest::prelude::*;

    fn l2() -> SpaceDescriptor {
        SpaceDescriptor::l2(0)
    }

    fn near(x: &CReal, v: Rational, n: u32) -> bool {
        (x.approx(n).unwrap() - v).abs() <= pow2_neg(n)
    }

    #[test]
    fn basis_vectors() {
        let e0 = basis_vector(&l2(), 0).unwrap();
        assert_eq!(e0.approx(17).unwrap(), FiniteCombo::basis(0));
        assert!(basis_vector(&SpaceDescriptor::finite(1, 3), 2).is_ok());
        let e = basis_vector(&SpaceDescriptor::finite(2, 2), 5).unwrap_err();
        assert_eq!(e, Error::IndexOutOfRange { index: 5, dim: 2 });
    }

    #[test]
    fn lincomb_examples() {
        let (e0, e1) = (basis_vector(&l2(), 0).unwrap(), basis_vector(&l2(), 1).unwrap());
        let s = vec_lincomb(&int(1), &e0, &int(1), &e1).unwrap();
        assert_eq!(
            s.approx(10).unwrap(),
            FiniteCombo::from_pairs([(0, int(1)), (1, int(1))])
        );
        let z = vec_lincomb(&int(0), &e0, &int(0), &e1).unwrap();
        assert!(z.approx(10).unwrap().is_zero());
        let c = vec_lincomb(&rat(1, 2), &e0, &rat(-1, 2), &e0).unwrap();
        assert!(c.approx(40).unwrap().norm_sq() <= pow2_neg(80));
        let other = basis_vector(&SpaceDescriptor::l2(9), 0).unwrap();
        assert!(matches!(
            vec_lincomb(&int(1), &e0, &int(1), &other),
            Err(Error::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn inner_product_examples() {
        let sp = l2();
        let v = |pairs: Vec<(usize, Rational)>| VectorName::constant(&sp, FiniteCombo::from_pairs(pairs)).unwrap();
        let a = inner_product(&v(vec![(0, int(1)), (1, int(1))]), &v(vec![(1, int(1))])).unwrap();
        assert!(near(&a, int(1), 30));
        let b = inner_product(&v(vec![(0, rat(1, 2))]), &v(vec![(0, rat(1, 3))])).unwrap();
        assert!(near(&b, rat(1, 6), 30));
        let c = inner_product(
            &v(vec![(0, rat(3, 5)), (2, rat(4, 5))]),
            &v(vec![(0, rat(4, 5)), (2, rat(-3, 5))]),
        )
        .unwrap();
        assert!(near(&c, int(0), 30));
    }

    #[test]
    fn norm_examples() {
        let sp = l2();
        assert!(near(&basis_vector(&sp, 3).unwrap().norm(), int(1), 30));
        let v = VectorName::constant(&sp, FiniteCombo::from_pairs([(0, rat(3, 5)), (1, rat(4, 5))]));
        assert!(near(&v.unwrap().norm(), int(1), 30));
        assert!(near(&VectorName::zero(&sp).norm(), int(0), 30));
    }

    #[test]
    fn complex_spaces_are_rejected() {
        let c = SpaceDescriptor::new(4, super::super::Dimension::Infinite, super::super::Field::Complex);
        assert!(matches!(basis_vector(&c, 0), Err(Error::UnsupportedField(_))));
    }

    /// sum_k 2^-k e_k, an infinite-support vector with norm^2 = 4/3.
    fn geometric_vector() -> VectorName {
        VectorName::new(l2(), |n| {
            // tail beyond K has norm^2 (4/3) 4^-K
            let k = n as usize + 1;
            Ok(FiniteCombo::from_pairs((0..k).map(|i| (i, pow2_neg(i as u32)))))
        })
    }

    #[test]
    fn infinite_support_norm() {
        let g = geometric_vector();
        assert!(near(&g.norm_sq(), rat(4, 3), 30));
        assert_eq!(g.cauchy_defect(&[0, 5, 10, 20, 35]).unwrap(), None);
        let h = g.scale(&rat(-3, 7));
        assert_eq!(h.cauchy_defect(&[0, 5, 10, 20, 35]).unwrap(), None);
    }

    fn arb_vec() -> impl Strategy<Value = FiniteCombo> {
        proptest::collection::vec((0usize..12, -40i64..40, 1i64..16), 0..8)
            .prop_map(|v| FiniteCombo::from_pairs(v.into_iter().map(|(k, n, d)| (k, rat(n, d)))))
    }

    proptest! {
        #[test]
        fn cauchy_schwarz(x in arb_vec(), y in arb_vec()) {
            let (x, y) = (VectorName::constant(&l2(), x).unwrap(), VectorName::constant(&l2(), y).unwrap());
            let ip = inner_product(&x, &y).unwrap().approx(30).unwrap().abs();
            let prod = x.norm().mul(&y.norm()).approx(30).unwrap();
            prop_assert!(ip <= prod + pow2_neg(28));
        }

        #[test]
        fn parallelogram(x in arb_vec(), y in arb_vec()) {
            let (x, y) = (VectorName::constant(&l2(), x).unwrap(), VectorName::constant(&l2(), y).unwrap());
            let lhs = x.add(&y).unwrap().norm_sq().add(&x.sub(&y).unwrap().norm_sq());
            let rhs = x.norm_sq().add(&y.norm_sq()).scale(&int(2));
            let d = (lhs.approx(30).unwrap() - rhs.approx(30).unwrap()).abs();
            prop_assert!(d <= pow2_neg(28));
        }

        #[test]
        fn lincomb_names_are_consistent(x in arb_vec(), y in arb_vec(), a in -50i64..50, b in 1i64..9) {
            let (x, y) = (VectorName::constant(&l2(), x).unwrap(), VectorName::constant(&l2(), y).unwrap());
            let z = vec_lincomb(&rat(a, b), &x, &rat(b, 7), &geometric_vector()).unwrap();
            let w = vec_lincomb(&int(1), &z, &rat(-a, 3), &y).unwrap();
            prop_assert_eq!(w.cauchy_defect(&[0, 5, 10, 20, 35]).unwrap(), None);
        }
    }
}
