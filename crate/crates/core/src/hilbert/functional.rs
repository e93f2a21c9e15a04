use std::sync::Arc;

use super::expand::expand_certified;
use super::space::SpaceDescriptor;
use super::vector::{basis_vector, inner_product, VectorName};
use crate::realcore::{CReal, Memo};
use crate::Result;

type Evaluation = dyn Fn(&VectorName) -> Result<CReal> + Send + Sync;

/// A bounded linear functional: an evaluation program plus its operator
/// norm. The norm is part of the name; without it the representing vector
/// cannot be computed.
#[derive(Clone)]
pub struct FunctionalName {
    space: SpaceDescriptor,
    eval: Arc<Evaluation>,
    opnorm: CReal,
}

impl FunctionalName {
    pub fn new(
        space: SpaceDescriptor,
        eval: impl Fn(&VectorName) -> Result<CReal> + Send + Sync + 'static,
        opnorm: CReal,
    ) -> Self {
        FunctionalName {
            space,
            eval: Arc::new(eval),
            opnorm,
        }
    }

    pub fn space(&self) -> &SpaceDescriptor {
        &self.space
    }

    pub fn opnorm(&self) -> &CReal {
        &self.opnorm
    }

    pub fn eval(&self, f: &VectorName) -> Result<CReal> {
        self.space.ensure_same(f.space())?;
        (self.eval)(f)
    }
}

/// `f -> <f, y>` with the caller-certified norm `ynorm = ||y||`.
pub fn riesz_functional(y: &VectorName, ynorm: CReal) -> FunctionalName {
    let y2 = y.clone();
    FunctionalName::new(y.space().clone(), move |f| inner_product(f, &y2), ynorm)
}

/// The representer `y = sum_k F(e_k) e_k` of a real functional, with tails
/// certified from `||F||^2 - sum_{k<N} F(e_k)^2`.
pub fn riesz_representer(func: &FunctionalName) -> VectorName {
    let space = func.space.clone();
    let f2 = func.clone();
    let sp = space.clone();
    let coeffs = Memo::new(move |k: &usize| f2.eval(&basis_vector(&sp, *k)?));
    expand_certified(&space, coeffs, func.opnorm.square(), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::FiniteCombo;
    use crate::realcore::{int, pow2_neg, rat, Rational};
    use num_traits::Signed;
    use proptest::prelude::*;

    fn l2() -> SpaceDescriptor {
        SpaceDescriptor::l2(0)
    }

    fn near(x: &CReal, v: Rational, n: u32) -> bool {
        (x.approx(n).unwrap() - v).abs() <= pow2_neg(n)
    }

    fn dist(x: &VectorName, y: &VectorName, n: u32) -> Rational {
        x.sub(y).unwrap().norm().approx(n).unwrap()
    }

    #[test]
    fn functional_examples() {
        let e0 = basis_vector(&l2(), 0).unwrap();
        let e1 = basis_vector(&l2(), 1).unwrap();
        let f = riesz_functional(&e0, CReal::one());
        assert!(near(&f.eval(&e0).unwrap(), int(1), 30));
        assert!(near(&f.eval(&e1).unwrap(), int(0), 30));
        assert!(near(f.opnorm(), int(1), 30));

        let y = VectorName::constant(&l2(), FiniteCombo::from_pairs([(0, int(1)), (1, int(2))])).unwrap();
        let g = riesz_functional(&y, y.norm());
        assert!(near(&g.eval(&e1).unwrap(), int(2), 30));
        let n = g.opnorm().approx(20).unwrap();
        // sqrt 5 in [2.2360679, 2.2360680]
        assert!((n - rat(22360679775, 10000000000)).abs() <= pow2_neg(19));

        let z = riesz_functional(&VectorName::zero(&l2()), CReal::zero());
        assert!(near(&z.eval(&y).unwrap(), int(0), 30));
    }

    #[test]
    fn representer_examples() {
        let y = VectorName::constant(&l2(), FiniteCombo::from_pairs([(0, int(1)), (1, int(2))])).unwrap();
        let r = riesz_representer(&riesz_functional(&y, y.norm()));
        assert!(dist(&r, &y, 35) <= pow2_neg(30));

        let z = riesz_representer(&riesz_functional(&VectorName::zero(&l2()), CReal::zero()));
        assert!(z.approx(30).unwrap().is_zero());

        let e5 = basis_vector(&l2(), 5).unwrap();
        let f = FunctionalName::new(l2(), move |v| Ok(v.coefficient(5)), CReal::one());
        assert!(dist(&riesz_representer(&f), &e5, 30) <= pow2_neg(25));
    }

    #[test]
    fn wrong_norm_is_exhaustion() {
        let y = VectorName::constant(&l2(), FiniteCombo::from_pairs([(0, int(1)), (1, int(2))])).unwrap();
        // understated: partial sums overshoot the datum
        let r = riesz_representer(&riesz_functional(&y, CReal::one()));
        assert!(r.approx(10).unwrap_err().is_precision_exhausted());
        // overstated in a finite-dimensional space: certificate never reached
        let f3 = SpaceDescriptor::finite(3, 3);
        let y3 = VectorName::constant(&f3, FiniteCombo::basis(1)).unwrap();
        let r = riesz_representer(&riesz_functional(&y3, CReal::from(int(2))));
        assert!(r.approx(10).unwrap_err().is_precision_exhausted());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn riesz_round_trip(v in proptest::collection::vec((0usize..20, -30i64..30, 1i64..=16), 0..8)) {
            let y = VectorName::constant(&l2(), FiniteCombo::from_pairs(v.into_iter().map(|(k, n, d)| (k, rat(n, d))))).unwrap();
            let r = riesz_representer(&riesz_functional(&y, y.norm()));
            prop_assert!(dist(&r, &y, 35) <= pow2_neg(30));
        }
    }
}
