use proptest::prelude::*;

use super::*;
use crate::hilbert::{FiniteCombo, SpaceDescriptor, VectorName};
use crate::realcore::{pow2_neg, rat, CReal, CRealSeq, Rational};

fn l2_sum(len: Option<usize>) -> SumSpace {
    SumSpace::uniform(900, len, SpaceDescriptor::l2(901))
}

fn vec_of(pairs: &[(usize, Rational)]) -> VectorName {
    VectorName::constant(&SpaceDescriptor::l2(901), FiniteCombo::from_pairs(pairs.to_vec())).unwrap()
}

fn close(x: &CReal, v: Rational, n: u32) -> bool {
    let d = x.approx(n).unwrap() - v;
    d.clone() * d.clone() <= pow2_neg(n) * pow2_neg(n) * rat(4, 1)
}

#[test]
fn embed_examples() {
    let s = l2_sum(None);
    let e = sum_embed(&s, 0, &vec_of(&[(0, rat(1, 1))])).unwrap();
    assert!(close(e.normsq(), rat(1, 1), 30));
    let z = sum_embed(&s, 2, &VectorName::zero(&SpaceDescriptor::l2(901))).unwrap();
    assert!(z.truncate(20).unwrap().is_empty());
    let f = sum_embed(&s, 1, &vec_of(&[(0, rat(3, 5)), (1, rat(4, 5))])).unwrap();
    assert!(close(f.normsq(), rat(1, 1), 30));
    let other = SpaceDescriptor::l2(5);
    assert!(sum_embed(&s, 0, &VectorName::zero(&other)).is_err());
}

#[test]
fn inner_product_examples() {
    let s = l2_sum(None);
    let e00 = SumName::basis(&s, 0, 0).unwrap();
    let e10 = SumName::basis(&s, 1, 0).unwrap();
    let e11 = SumName::basis(&s, 1, 1).unwrap();
    assert!(close(&sum_inner_product(&e00, &e00).unwrap(), rat(1, 1), 30));
    assert!(close(&sum_inner_product(&e00, &e10).unwrap(), rat(0, 1), 30));
    let one = rat(1, 1);
    let p = sum_lincomb(&one, &e00, &one, &e11).unwrap();
    let m = sum_lincomb(&one, &e00, &-one.clone(), &e11).unwrap();
    assert!(close(p.normsq(), rat(2, 1), 30));
    assert!(close(&sum_inner_product(&p, &m).unwrap(), rat(0, 1), 30));
}

#[test]
fn basis_is_orthonormal_on_samples() {
    let s = l2_sum(None);
    let idx = [(0, 0), (0, 1), (1, 0), (2, 3), (3, 2)];
    for &(i, j) in &idx {
        for &(k, l) in &idx {
            let x = SumName::basis(&s, i, j).unwrap();
            let y = SumName::basis(&s, k, l).unwrap();
            let want = if (i, j) == (k, l) { 1 } else { 0 };
            assert!(close(&sum_inner_product(&x, &y).unwrap(), rat(want, 1), 30));
        }
    }
}

#[test]
fn fourier_examples() {
    let s = l2_sum(None);
    let f = sum_to_fourier(&SumName::basis(&s, 0, 0).unwrap());
    assert!(close(&f.coeff(0, 0).unwrap(), rat(1, 1), 30));
    assert!(close(&f.coeff(1, 0).unwrap(), rat(0, 1), 30));
    assert!(close(&f.coeff(0, 3).unwrap(), rat(0, 1), 30));
    let h = sum_to_fourier(&sum_embed(&s, 1, &vec_of(&[(0, rat(1, 2))])).unwrap());
    assert!(close(&h.coeff(1, 0).unwrap(), rat(1, 2), 30));
    assert!(close(h.normsq(), rat(1, 4), 30));
    let g = sum_to_fourier(&sum_embed(&s, 0, &vec_of(&[(0, rat(3, 5)), (1, rat(4, 5))])).unwrap());
    assert!(close(&g.coeff(0, 0).unwrap(), rat(3, 5), 30));
    assert!(close(&g.coeff(0, 1).unwrap(), rat(4, 5), 30));
}

#[test]
fn fourier_round_trip_of_basis_and_zero() {
    let s = l2_sum(None);
    let f = sum_to_fourier(&SumName::basis(&s, 0, 0).unwrap());
    let norms = CRealSeq::from_fn(|i| Ok(CReal::from_rational(rat((i == 0) as i64, 1))));
    let back = fourier_to_sum(&f, &norms);
    let d = back
        .component(0)
        .unwrap()
        .approx(30)
        .unwrap()
        .sub(&FiniteCombo::basis(0));
    assert!(d.norm_sq() <= pow2_neg(60));

    let z = FourierName::new(&s, |_, _| Ok(CReal::zero()), CReal::zero());
    let zeros = CRealSeq::from_fn(|_| Ok(CReal::zero()));
    assert!(fourier_to_sum(&z, &zeros).truncate(20).unwrap().is_empty());
}

#[test]
fn understated_component_norm_exhausts() {
    let s = l2_sum(None);
    let f = sum_to_fourier(&sum_embed(&s, 0, &vec_of(&[(0, rat(1, 1)), (1, rat(1, 1))])).unwrap());
    let wrong = CRealSeq::from_fn(|_| Ok(CReal::one()));
    let err = fourier_to_sum(&f, &wrong).component(0).unwrap().approx(10).unwrap_err();
    assert!(err.is_precision_exhausted());
}

#[test]
fn finite_sum_space_rejects_out_of_range() {
    let s = l2_sum(Some(2));
    assert!(SumName::zero(&s).component(2).is_err());
    assert!(SumName::basis(&s, 3, 0).is_err());
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-16i64..=16, 1i64..=8).prop_map(|(a, b)| rat(a, b))
}

fn finite_sum() -> impl Strategy<Value = Vec<(usize, Vec<(usize, Rational)>)>> {
    prop::collection::vec(
        (0usize..8, prop::collection::vec((0usize..6, small_rat()), 0..4)),
        0..=5,
    )
}

fn build(s: &SumSpace, parts: &[(usize, Vec<(usize, Rational)>)]) -> (SumName, Vec<FiniteCombo>) {
    let mut combos = vec![FiniteCombo::zero(); 8];
    for (i, pairs) in parts {
        for (j, q) in pairs {
            combos[*i].add_term(*j, q);
        }
    }
    let comps = combos
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, VectorName::constant(&SpaceDescriptor::l2(901), c.clone()).unwrap()))
        .collect();
    (SumName::from_components(s, comps).unwrap(), combos)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_round_trip(parts in finite_sum()) {
        let s = l2_sum(None);
        let (f, combos) = build(&s, &parts);
        let exact: Vec<CReal> = combos.iter().map(|c| VectorName::constant(&SpaceDescriptor::l2(901), c.clone()).unwrap().norm()).collect();
        let norms = CRealSeq::from_fn(move |i| Ok(exact.get(i).cloned().unwrap_or_else(CReal::zero)));
        let back = fourier_to_sum(&sum_to_fourier(&f), &norms);
        for (i, c) in combos.iter().enumerate() {
            let d = back.component(i).unwrap().approx(30).unwrap().sub(c);
            prop_assert!(d.norm_sq() <= pow2_neg(60));
        }
    }

    #[test]
    fn self_inner_product_is_normsq(parts in finite_sum()) {
        let s = l2_sum(None);
        let (f, combos) = build(&s, &parts);
        let exact: Rational = combos.iter().map(|c| c.norm_sq()).sum();
        prop_assert!(close(&sum_inner_product(&f, &f).unwrap(), exact.clone(), 25));
        prop_assert!(check_partial_norms(&f, 16, 25).is_ok());
        let fr = sum_to_fourier(&f);
        let bound = exact + pow2_neg(25);
        let mut partial = rat(0, 1);
        for k in 0..8 {
            for i in 0..=k {
                let c = fr.coeff(i, k).unwrap().approx(40).unwrap();
                partial += c.clone() * c;
                if i < k {
                    let c = fr.coeff(k, i).unwrap().approx(40).unwrap();
                    partial += c.clone() * c;
                }
            }
            prop_assert!(partial <= bound);
        }
    }
}
