use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::directsum::{sum_inner_product, SumName};
use crate::hilbert::{inner_product, FiniteCombo, SpaceDescriptor, VectorName};
use crate::realcore::{pow2_neg, rat, CReal, Rational};
use crate::Error;

fn h() -> SpaceDescriptor {
    SpaceDescriptor::l2(700)
}

fn v(pairs: &[(usize, i64, i64)]) -> VectorName {
    let c = FiniteCombo::from_pairs(pairs.iter().map(|&(k, a, b)| (k, rat(a, b))));
    VectorName::constant(&h(), c).unwrap()
}

fn near_vec(x: &VectorName, want: &[(usize, i64, i64)], n: u32) -> bool {
    let w = FiniteCombo::from_pairs(want.iter().map(|&(k, a, b)| (k, rat(a, b))));
    x.approx(n + 1).unwrap().sub(&w).norm_sq() <= pow2_neg(2 * n)
}

fn near(x: &CReal, want: Rational, n: u32) -> bool {
    let d = x.approx(n + 1).unwrap() - want;
    d.clone() * d <= pow2_neg(2 * n)
}

fn scalar(x: &VectorName) -> CReal {
    x.coefficient(0)
}

fn parseval() -> GFrameBundle {
    AtomFrame::parseval(&h()).bundle().unwrap()
}

fn weighted() -> GFrameBundle {
    AtomFrame::weighted(&h(), vec![rat(2, 1)]).bundle().unwrap()
}

fn redundant() -> GFrameBundle {
    AtomFrame::redundant(&h()).bundle().unwrap()
}

fn diag(space: &SpaceDescriptor, first: Rational) -> Operator {
    let bound = first.clone().max(Rational::one());
    Operator::from_combo_map(space, space, bound, move |c| {
        let mut out = c.clone();
        out.add_term(0, &(c.get(0) * (first.clone() - Rational::one())));
        Ok(out)
    })
}

#[test]
fn riesz_correspondence_examples() {
    let p = parseval();
    assert!(near(
        &scalar(&p.gframe.op(0).unwrap().apply(&v(&[(0, 1, 1)])).unwrap()),
        rat(1, 1),
        30
    ));
    assert!(near(
        &scalar(&p.gframe.op(3).unwrap().apply(&v(&[(3, 5, 7)])).unwrap()),
        rat(5, 7),
        30
    ));

    let r = redundant();
    let frame = gframe_to_frame(&r.gframe, |_| Ok(CReal::one()));
    let want = [0, 0, 1, 2, 3];
    for (i, &k) in want.iter().enumerate() {
        assert!(near_vec(&frame.vec(i, 0).unwrap(), &[(k, 1, 1)], 30));
    }

    let f2 = SpaceDescriptor::finite(701, 2);
    let atoms = [FiniteCombo::basis(0), FiniteCombo::zero(), FiniteCombo::basis(1)];
    let sp = f2.clone();
    let g = riesz_correspondence(
        &f2,
        Some(3),
        move |i| {
            let a = VectorName::constant(&sp, atoms[i].clone())?;
            let n = a.norm();
            Ok((a, n))
        },
        rat(1, 1),
        rat(1, 1),
    )
    .unwrap();
    let x = VectorName::constant(&f2, FiniteCombo::from_pairs([(0, rat(3, 1)), (1, rat(4, 1))])).unwrap();
    assert!(near(&scalar(&g.op(1).unwrap().apply(&x).unwrap()), rat(0, 1), 30));
    assert!(g.op(3).is_err());
}

#[test]
fn corresponding_frame_examples() {
    let p = parseval();
    let f = corresponding_frame(&p.gframe, &InnerSystem::OrthonormalRows, p.norms.clone());
    assert!(near_vec(&f.vec(0, 0).unwrap(), &[(0, 1, 1)], 30));
    assert!(near_vec(&f.vec(4, 0).unwrap(), &[(4, 1, 1)], 30));
    assert!(f.vec(0, 1).is_err());

    let w = weighted();
    let f = corresponding_frame(&w.gframe, &InnerSystem::OrthonormalRows, w.norms.clone());
    assert!(near_vec(&f.vec(0, 0).unwrap(), &[(0, 2, 1)], 30));

    let b = block_gframe(&h(), 2).unwrap();
    let f = corresponding_frame(&b.gframe, &InnerSystem::OrthonormalRows, b.norms.clone());
    assert!(near_vec(&f.vec(0, 0).unwrap(), &[(0, 1, 1)], 30));
    assert!(near_vec(&f.vec(1, 1).unwrap(), &[(3, 1, 1)], 30));
}

#[test]
fn wrong_adjoint_norm_exhausts() {
    let w = weighted();
    let wrong = NormTable::from_fn(|_, _| Ok(CReal::one()));
    let f = corresponding_frame(&w.gframe, &InnerSystem::OrthonormalRows, wrong);
    let err = f.vec(0, 0).unwrap().approx(20).unwrap_err();
    assert!(err.is_precision_exhausted());
}

#[test]
fn gframe_from_corresponding_orthonormal_rows() {
    let p = parseval();
    let frame = corresponding_frame(&p.gframe, &InnerSystem::OrthonormalRows, p.norms.clone());
    let co = CoefficientOracle::new(|f, i| Ok(f.coefficient(i).square()));
    let g = gframe_from_corresponding(&frame, &InnerSystem::OrthonormalRows, p.gframe.sum(), co).unwrap();
    let x = g.op(0).unwrap().apply(&v(&[(0, 1, 1), (1, 1, 1)])).unwrap();
    assert!(near(&scalar(&x), rat(1, 1), 30));

    let w = weighted();
    let frame = corresponding_frame(&w.gframe, &InnerSystem::OrthonormalRows, w.norms.clone());
    let co = CoefficientOracle::new(|f, i| {
        let c = f.coefficient(i).square();
        Ok(if i == 0 { c.scale(&rat(4, 1)) } else { c })
    });
    let g = gframe_from_corresponding(&frame, &InnerSystem::OrthonormalRows, w.gframe.sum(), co).unwrap();
    assert!(near(
        &scalar(&g.op(0).unwrap().apply(&v(&[(0, 1, 1)])).unwrap()),
        rat(2, 1),
        30
    ));
}

#[test]
fn gframe_from_corresponding_frame_rows() {
    let f2 = SpaceDescriptor::finite(702, 2);
    let b = block_gframe(&f2, 2).unwrap();
    let h0 = b.gframe.sum().component(0).unwrap();
    let atoms: Vec<VectorName> = [(1, 0), (0, 1), (1, 1)]
        .iter()
        .map(|&(x, y)| VectorName::constant(&h0, FiniteCombo::from_pairs([(0, rat(x, 1)), (1, rat(y, 1))])).unwrap())
        .collect();
    let s0 = Operator::from_combo_map(&h0, &h0, rat(3, 1), |c| {
        let (x, y) = (c.get(0), c.get(1));
        Ok(FiniteCombo::from_pairs([
            (0, &x * rat(2, 1) + &y),
            (1, x + y * rat(2, 1)),
        ]))
    });
    let inner = InnerFrame::finite(&h0, atoms, rat(1, 1), rat(3, 1), s0);
    let sys = InnerSystem::frame_rows(move |_| Ok(inner.clone()), rat(1, 1), rat(3, 1));
    let norms = NormTable::from_fn(|_, j| {
        Ok(if j < 2 {
            CReal::one()
        } else {
            CReal::from_rational(rat(2, 1)).sqrt()
        })
    });
    let frame = corresponding_frame(&b.gframe, &sys, norms);
    let fv = |pairs: &[(usize, i64, i64)]| {
        VectorName::constant(
            &f2,
            FiniteCombo::from_pairs(pairs.iter().map(|&(k, a, b)| (k, rat(a, b)))),
        )
        .unwrap()
    };
    assert!(
        frame
            .vec(0, 2)
            .unwrap()
            .approx(31)
            .unwrap()
            .sub(&fv(&[(0, 1, 1), (1, 1, 1)]).approx(31).unwrap())
            .norm_sq()
            <= pow2_neg(60)
    );
    let co = CoefficientOracle::new(|f, _| {
        let (x, y) = (f.coefficient(0), f.coefficient(1));
        Ok(x.square().add(&y.square()).add(&x.add(&y).square()))
    });
    let g = gframe_from_corresponding(&frame, &sys, b.gframe.sum(), co).unwrap();
    let out = g.op(0).unwrap().apply(&fv(&[(0, 1, 1)])).unwrap();
    let want = FiniteCombo::basis(0);
    assert!(out.approx(26).unwrap().sub(&want).norm_sq() <= pow2_neg(50));
    let out = g.op(0).unwrap().apply(&fv(&[(0, 2, 3), (1, -1, 5)])).unwrap();
    let want = FiniteCombo::from_pairs([(0, rat(2, 3)), (1, rat(-1, 5))]);
    assert!(out.approx(26).unwrap().sub(&want).norm_sq() <= pow2_neg(50));
}

#[test]
fn synthesis_examples() {
    let p = parseval();
    let t = synthesis(&p.gframe, p.norms.clone());
    let sum = p.gframe.sum();
    let e30 = SumName::basis(sum, 3, 0).unwrap();
    assert!(near_vec(&t.apply(&e30).unwrap(), &[(3, 1, 1)], 30));
    let one = Rational::one();
    let both = crate::directsum::sum_lincomb(
        &one,
        &SumName::basis(sum, 0, 0).unwrap(),
        &one,
        &SumName::basis(sum, 1, 0).unwrap(),
    )
    .unwrap();
    assert!(near_vec(&t.apply(&both).unwrap(), &[(0, 1, 1), (1, 1, 1)], 25));

    let w = weighted();
    let t = synthesis(&w.gframe, w.norms.clone());
    let d0 = SumName::basis(w.gframe.sum(), 0, 0).unwrap();
    assert!(near_vec(&t.apply(&d0).unwrap(), &[(0, 2, 1)], 30));
    assert!(t.apply(&SumName::basis(p.gframe.sum(), 0, 0).unwrap()).is_err());
}

#[test]
fn analysis_examples() {
    let p = parseval();
    let ta = analysis(&p.gframe, p.ao.clone());
    let x = ta.apply(&v(&[(0, 1, 1)])).unwrap();
    assert!(near(x.normsq(), rat(1, 1), 30));
    assert!(near(&scalar(&x.component(0).unwrap()), rat(1, 1), 30));

    let w = weighted();
    let x = analysis(&w.gframe, w.ao.clone()).apply(&v(&[(0, 1, 1)])).unwrap();
    assert!(near(&scalar(&x.component(0).unwrap()), rat(2, 1), 30));
    assert!(near(x.normsq(), rat(4, 1), 30));

    let z = ta.apply(&VectorName::zero(&h())).unwrap();
    assert!(z.truncate(20).unwrap().is_empty());
}

#[test]
fn frame_operator_examples() {
    for (b, scale) in [(parseval(), 1), (weighted(), 4), (redundant(), 2)] {
        let s = frame_operator(&b.gframe, b.norms.clone(), b.ao.clone());
        assert!(near_vec(&s.apply(&v(&[(0, 1, 1)])).unwrap(), &[(0, scale, 1)], 25));
        assert!(near_vec(&s.apply(&v(&[(2, 1, 3)])).unwrap(), &[(2, 1, 3)], 25));
    }
}

#[test]
fn invert_frame_operator_examples() {
    let id = invert_frame_operator(&Operator::identity(&h()), &rat(1, 1), &rat(1, 1)).unwrap();
    assert!(near_vec(&id.apply(&v(&[(0, 1, 1)])).unwrap(), &[(0, 1, 1)], 30));
    let inv = invert_frame_operator(&diag(&h(), rat(4, 1)), &rat(1, 1), &rat(4, 1)).unwrap();
    assert!(near_vec(&inv.apply(&v(&[(0, 1, 1)])).unwrap(), &[(0, 1, 4)], 30));
    assert!(near_vec(
        &inv.apply(&v(&[(0, 1, 1), (5, -2, 3)])).unwrap(),
        &[(0, 1, 4), (5, -2, 3)],
        30
    ));
    assert!(
        inv.apply(&VectorName::zero(&h()))
            .unwrap()
            .approx(30)
            .unwrap()
            .norm_sq()
            <= pow2_neg(60)
    );
}

#[test]
fn spectral_violation_is_detected() {
    let inv = invert_frame_operator(&diag(&h(), rat(10, 1)), &rat(1, 1), &rat(2, 1)).unwrap();
    match inv.apply(&v(&[(0, 1, 1)])).unwrap().approx(20) {
        Err(Error::SpectralViolation(_)) => {}
        other => panic!("expected a spectral violation, got {other:?}"),
    }
}

#[test]
fn overstated_lower_bound_fails_the_residual_check() {
    // the iterates stay bounded, but converge too slowly for the claimed rate
    let inv = invert_frame_operator(&diag(&h(), rat(1, 4)), &rat(1, 1), &rat(1, 1)).unwrap();
    match inv.apply(&v(&[(0, 1, 1)])).unwrap().approx(20) {
        Err(Error::SpectralViolation(m)) => assert!(m.contains("residual")),
        other => panic!("expected a spectral violation, got {other:?}"),
    }
}

#[test]
fn richardson_rate_on_diagonal() {
    let s = diag(&h(), rat(4, 1));
    let g = v(&[(0, 1, 1)]);
    let mut rate = Rational::one();
    for k in 1..=20 {
        rate *= rat(3, 5);
        let u = richardson_iterate(&s, &rat(1, 1), &rat(4, 1), &g, k, 40).unwrap();
        let err = u.sub(&FiniteCombo::from_pairs([(0, rat(1, 4))])).norm_sq();
        let allowed = &rate + pow2_neg(40);
        assert!(err <= &allowed * &allowed, "k = {k}");
    }
}

#[test]
fn canonical_dual_examples() {
    let p = parseval();
    let d = canonical_dual(&p.gframe, p.norms.clone(), p.ao.clone()).unwrap();
    assert!(near(
        &scalar(&d.gframe.op(0).unwrap().apply(&v(&[(0, 1, 1)])).unwrap()),
        rat(1, 1),
        30
    ));

    let w = weighted();
    let d = canonical_dual(&w.gframe, w.norms.clone(), w.ao.clone()).unwrap();
    assert!(near(
        &scalar(&d.gframe.op(0).unwrap().apply(&v(&[(0, 1, 1)])).unwrap()),
        rat(1, 2),
        30
    ));
    assert_eq!((d.gframe.a.clone(), d.gframe.b.clone()), (rat(1, 4), rat(1, 1)));

    let r = redundant();
    let d = canonical_dual(&r.gframe, r.norms.clone(), r.ao.clone()).unwrap();
    let e0 = v(&[(0, 1, 1)]);
    for (i, x, want) in [
        (0, &e0, rat(1, 2)),
        (1, &e0, rat(1, 2)),
        (2, &v(&[(1, 1, 1)]), rat(1, 1)),
    ] {
        assert!(near(&scalar(&d.gframe.op(i).unwrap().apply(x).unwrap()), want, 30));
    }
}

#[test]
fn pseudo_inverse_examples() {
    let p = parseval();
    let tp = pseudo_inverse(&p.gframe, p.norms.clone(), p.ao.clone()).unwrap();
    assert!(near(tp.apply(&v(&[(0, 1, 1)])).unwrap().normsq(), rat(1, 1), 30));

    let w = weighted();
    let tp = pseudo_inverse(&w.gframe, w.norms.clone(), w.ao.clone()).unwrap();
    let x = tp.apply(&v(&[(0, 1, 1)])).unwrap();
    assert!(near(&scalar(&x.component(0).unwrap()), rat(1, 2), 30));
    assert!(near(x.normsq(), rat(1, 4), 30));
    let t = synthesis(&w.gframe, w.norms.clone());
    for f in [&[(0, 1, 1)][..], &[(1, 1, 1)], &[(0, 1, 1), (1, 1, 1)]] {
        assert!(near_vec(&t.apply(&tp.apply(&v(f)).unwrap()).unwrap(), f, 25));
    }
}

#[test]
fn reconstruct_examples() {
    let p = parseval();
    let d = DualFrame {
        gframe: p.gframe.clone(),
        ao: p.ao.clone(),
    };
    assert!(near_vec(
        &reconstruct(&p.gframe, &d, p.norms.clone(), &v(&[(0, 1, 1)])).unwrap(),
        &[(0, 1, 1)],
        30
    ));
    let w = weighted();
    let d = canonical_dual(&w.gframe, w.norms.clone(), w.ao.clone()).unwrap();
    let f = [(0, 1, 1), (1, 1, 1)];
    assert!(near_vec(
        &reconstruct(&w.gframe, &d, w.norms.clone(), &v(&f)).unwrap(),
        &f,
        25
    ));
    let r = redundant();
    let d = canonical_dual(&r.gframe, r.norms.clone(), r.ao.clone()).unwrap();
    let f = [(0, 1, 3), (2, -1, 1)];
    assert!(near_vec(
        &reconstruct(&r.gframe, &d, r.norms.clone(), &v(&f)).unwrap(),
        &f,
        25
    ));
}

#[test]
fn dual_from_left_inverse_examples() {
    let p = parseval();
    let phi_star = analysis(&p.gframe, p.ao.clone());
    let phi = synthesis(&p.gframe, p.norms.clone());
    let panel = [v(&[(0, 1, 1)]), v(&[(1, 2, 3)])];
    assert!(check_left_inverse(&phi, &phi_star, &panel, 25).unwrap() <= pow2_neg(50));
    let d = dual_from_left_inverse(&p.gframe, &phi_star).unwrap();
    assert!(near(
        &scalar(&d.gframe.op(0).unwrap().apply(&panel[0]).unwrap()),
        rat(1, 1),
        30
    ));

    let w = weighted();
    let phi_star = pseudo_inverse(&w.gframe, w.norms.clone(), w.ao.clone()).unwrap();
    let d = dual_from_left_inverse(&w.gframe, &phi_star).unwrap();
    assert!(near(
        &scalar(&d.gframe.op(0).unwrap().apply(&panel[0]).unwrap()),
        rat(1, 2),
        30
    ));
    for f in [&[(0, 1, 1)][..], &[(0, 1, 1), (1, 1, 1)]] {
        assert!(near_vec(
            &reconstruct(&w.gframe, &d, w.norms.clone(), &v(f)).unwrap(),
            f,
            25
        ));
    }
}

fn redundant_kernel(r: &GFrameBundle) -> AnalysisOp {
    let sum = r.gframe.sum().clone();
    OperatorName::new(h(), sum.clone(), rat(1, 1), move |f: &VectorName| {
        let (c, s2) = (f.coefficient(0), sum.clone());
        Ok(SumName::new(
            &sum,
            move |i| {
                let h = s2.component(i)?;
                Ok(match i {
                    0 => VectorName::from_scalar(&h, c.scale(&rat(1, 2))),
                    1 => VectorName::from_scalar(&h, c.scale(&rat(-1, 2))),
                    _ => VectorName::zero(&h),
                })
            },
            f.coefficient(0).square().scale(&rat(1, 2)),
        ))
    })
}

#[test]
fn dual_from_kernel_examples() {
    let w = weighted();
    let zero_psi = {
        let sum = w.gframe.sum().clone();
        OperatorName::new(h(), sum.clone(), Rational::zero(), move |_: &VectorName| {
            Ok(SumName::zero(&sum))
        })
    };
    let d = dual_from_kernel(&w.gframe, w.norms.clone(), w.ao.clone(), &zero_psi).unwrap();
    assert!(near(
        &scalar(&d.gframe.op(0).unwrap().apply(&v(&[(0, 1, 1)])).unwrap()),
        rat(1, 2),
        30
    ));

    let r = redundant();
    let psi = redundant_kernel(&r);
    let t = synthesis(&r.gframe, r.norms.clone());
    let panel = [v(&[(0, 1, 1)]), v(&[(0, 1, 2), (1, 1, 1)])];
    assert!(check_kernel(&t, &psi, &panel, 25).unwrap() <= pow2_neg(50));
    let d = dual_from_kernel(&r.gframe, r.norms.clone(), r.ao.clone(), &psi).unwrap();
    assert!(near(
        &scalar(&d.gframe.op(0).unwrap().apply(&panel[0]).unwrap()),
        rat(1, 1),
        30
    ));
    assert!(near(
        &scalar(&d.gframe.op(1).unwrap().apply(&panel[0]).unwrap()),
        rat(0, 1),
        30
    ));
    assert!(near(&d.ao.eval(&panel[0]).unwrap(), rat(1, 1), 25));
    assert!(near_vec(
        &reconstruct(&r.gframe, &d, r.norms.clone(), &panel[0]).unwrap(),
        &[(0, 1, 1)],
        25
    ));

    let canon = canonical_dual(&r.gframe, r.norms.clone(), r.ao.clone()).unwrap();
    let back = kernel_from_dual(&r.gframe, r.norms.clone(), r.ao.clone(), &canon).unwrap();
    for f in &panel {
        let x = back.apply(f).unwrap();
        for i in 0..4 {
            assert!(near(&scalar(&x.component(i).unwrap()), rat(0, 1), 25));
        }
    }
}

fn panel() -> Vec<VectorName> {
    vec![
        v(&[(0, 1, 1)]),
        v(&[(1, 1, 1)]),
        v(&[(0, 1, 1), (1, 1, 1)]),
        v(&[(0, 1, 3), (2, -1, 1)]),
        v(&[(3, 5, 7)]),
        v(&[(0, -2, 5), (4, 1, 2)]),
        v(&[(1, 3, 4), (2, 1, 4), (3, -1, 4)]),
        v(&[(5, 1, 1)]),
        v(&[(0, 1, 8), (6, 7, 8)]),
        VectorName::zero(&h()),
    ]
}

#[test]
fn frame_inequalities_on_panel() {
    for b in [parseval(), weighted(), redundant(), block_gframe(&h(), 3).unwrap()] {
        check_gframe_bounds(&b.gframe, &panel(), 16, 20).unwrap();
        let f = corresponding_frame(&b.gframe, &InnerSystem::OrthonormalRows, b.norms.clone());
        check_frame_bounds(&f, &panel(), 24, 20).unwrap();
    }
    let r = redundant();
    let d = canonical_dual(&r.gframe, r.norms.clone(), r.ao.clone()).unwrap();
    check_gframe_bounds(&d.gframe, &panel()[..4], 12, 20).unwrap();
}

#[test]
fn bound_check_catches_understated_upper_bound() {
    let mut w = AtomFrame::weighted(&h(), vec![rat(2, 1)]);
    w.b = rat(2, 1);
    let b = w.bundle().unwrap();
    assert!(check_gframe_bounds(&b.gframe, &panel(), 8, 20).is_err());
}

#[test]
fn operator_plumbing() {
    let p = parseval();
    let s = frame_operator(&p.gframe, p.norms.clone(), p.ao.clone());
    assert_eq!(s.bound(), &rat(1, 1));
    let m = s.memoize();
    let x = v(&[(0, 1, 1)]);
    assert_eq!(m.apply(&x).unwrap().ptr_key(), m.apply(&x).unwrap().ptr_key());
    let other = VectorName::zero(&SpaceDescriptor::l2(1));
    assert!(matches!(s.apply(&other), Err(Error::SpaceMismatch { .. })));
}

fn small_combo() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((0usize..5, -8i64..=8, 1i64..=4), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn adjoint_identity(fs in small_combo(), gs in small_combo()) {
        let r = redundant();
        let t = synthesis(&r.gframe, r.norms.clone());
        let ta = analysis(&r.gframe, r.ao.clone());
        let (f, g) = (v(&fs), v(&gs));
        let big = ta.apply(&f).unwrap();
        let lhs = inner_product(&t.apply(&big).unwrap(), &g).unwrap();
        let rhs = sum_inner_product(&big, &ta.apply(&g).unwrap()).unwrap();
        let d = lhs.approx(24).unwrap() - rhs.approx(24).unwrap();
        prop_assert!(d.clone() * d <= pow2_neg(44));
    }

    #[test]
    fn frame_operator_is_self_adjoint_and_coercive(fs in small_combo(), gs in small_combo()) {
        let w = weighted();
        let s = frame_operator(&w.gframe, w.norms.clone(), w.ao.clone());
        let (f, g) = (v(&fs), v(&gs));
        let sf = s.apply(&f).unwrap();
        let a = inner_product(&sf, &g).unwrap().approx(24).unwrap();
        let b = inner_product(&f, &s.apply(&g).unwrap()).unwrap().approx(24).unwrap();
        prop_assert!((a.clone() - b.clone()) * (a - b) <= pow2_neg(40));
        let sff = inner_product(&sf, &f).unwrap().approx(22).unwrap();
        prop_assert!(sff >= f.norm_sq().approx(22).unwrap() - pow2_neg(20));
    }
}
