//! The acceptance batteries. Expected values come from exact rational
//! computation done here, never from the library's own oracles.

use std::time::{Duration, Instant};

use cgframe::directsum::{fourier_to_sum, sum_to_fourier, SumName, SumSpace};
use cgframe::gallery::{
    column_lower_adjoint, gated_adjoint, gated_dual_tau, remark_frame_operator, upper_u_operator, ColumnLowerU,
    NormOracle, ToeplitzLowerU, ToeplitzUpperU,
};
use cgframe::gframes::{
    block_gframe, canonical_dual, check_frame_bounds, check_gframe_bounds, corresponding_frame, dual_from_kernel,
    dual_from_left_inverse, frame_operator, gframe_to_frame, kernel_from_dual, pseudo_inverse, reconstruct,
    richardson_iterate, riesz_correspondence, synthesis, AnalysisOp, AtomFrame, GFrameBundle, InnerSystem, Operator,
    OperatorName,
};
use cgframe::hilbert::{
    expand_certified, inner_product, riesz_functional, riesz_representer, vec_lincomb, FiniteCombo, SpaceDescriptor,
    VectorName,
};
use cgframe::realcore::{pow2_neg, rat, sqrt_upper_within, CReal, CRealSeq, Memo, Rational, SpeckerData};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: cgframe::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn l2() -> SpaceDescriptor {
    SpaceDescriptor::l2(1)
}

fn rand_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn rand_combo(rng: &mut ChaCha8Rng, max_index: usize, terms: usize, den: i64) -> FiniteCombo {
    let k = rng.gen_range(1..=terms);
    FiniteCombo::from_pairs((0..k).map(|_| (rng.gen_range(0..max_index), rand_rat(rng, 2 * den, den))))
}

fn constant(space: &SpaceDescriptor, c: FiniteCombo) -> VectorName {
    VectorName::constant(space, c).expect("valid constant")
}

fn dist_sq(x: &FiniteCombo, y: &FiniteCombo) -> Rational {
    x.sub(y).norm_sq()
}

/// The ten fixed test vectors of l2.
fn panel() -> Vec<FiniteCombo> {
    let p = |pairs: &[(usize, i64, i64)]| FiniteCombo::from_pairs(pairs.iter().map(|&(k, a, b)| (k, rat(a, b))));
    vec![
        p(&[(0, 1, 1)]),
        p(&[(1, 1, 1)]),
        p(&[(0, 1, 1), (1, 1, 1)]),
        p(&[(0, 1, 3), (2, -1, 1)]),
        p(&[(3, 5, 7)]),
        p(&[(0, -2, 5), (4, 1, 2)]),
        p(&[(1, 3, 4), (2, 1, 4), (3, -1, 4)]),
        p(&[(5, 1, 1)]),
        p(&[(0, 1, 8), (6, 7, 8)]),
        p(&[(0, 3, 2), (1, -3, 2), (2, 1, 16)]),
    ]
}

const LEVELS: [u32; 5] = [0, 5, 10, 20, 35];

fn creal_consistent(x: &CReal) -> Result<(), String> {
    let v: Vec<Rational> = LEVELS.iter().map(|&n| lib(x.approx(n))).collect::<Result<_, _>>()?;
    for (i, &n) in LEVELS.iter().enumerate() {
        for (j, &m) in LEVELS.iter().enumerate() {
            let d = (&v[i] - &v[j]).abs();
            ensure(d <= pow2_neg(n) + pow2_neg(m), || {
                format!("real approximations at {n} and {m} differ by {d}")
            })?;
        }
    }
    Ok(())
}

fn vector_consistent(x: &VectorName) -> Result<(), String> {
    let v: Vec<FiniteCombo> = LEVELS.iter().map(|&n| lib(x.approx(n))).collect::<Result<_, _>>()?;
    for (i, &n) in LEVELS.iter().enumerate() {
        for (j, &m) in LEVELS.iter().enumerate() {
            let bound = pow2_neg(n) + pow2_neg(m);
            ensure(dist_sq(&v[i], &v[j]) <= &bound * &bound, || {
                format!("vector approximations at {n} and {m} are too far apart")
            })?;
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let space = l2();
    let weighted = lib(AtomFrame::weighted(&space, vec![rat(2, 1)]).bundle())?;
    let s_op = frame_operator(&weighted.gframe, weighted.norms.clone(), weighted.ao.clone());
    let specker = SpeckerData::finite(vec![1, 3, 4]).unwrap();
    let upper = ToeplitzUpperU::new(&space, specker.clone()).unwrap();
    let gate = lib(NormOracle::exact(&specker))?;
    let (u_op, l_op) = (upper_u_operator(&upper), gated_adjoint(&upper, &gate));
    let sum = SumSpace::uniform(2, None, space.clone());
    let (mut reals, mut vectors) = (0, 0);
    for i in 0..1000 {
        let a = rand_rat(&mut rng, 50, 17);
        let b = rand_rat(&mut rng, 50, 13);
        let (x, y) = (
            constant(&space, rand_combo(&mut rng, 8, 4, 9)),
            constant(&space, rand_combo(&mut rng, 8, 4, 9)),
        );
        match i % 10 {
            0 => {
                let c = CReal::from_rational(a.clone()).mul(&CReal::from_rational(b.abs()).sqrt());
                creal_consistent(&c.add(&CReal::from_rational(a).scale(&b)))?;
                reals += 1;
            }
            1 => {
                creal_consistent(
                    &CReal::from_rational(&a * &a + b.abs())
                        .sqrt()
                        .sub(&CReal::from_rational(b)),
                )?;
                reals += 1;
            }
            2 => {
                creal_consistent(&lib(inner_product(&x, &y))?)?;
                reals += 1;
            }
            3 => {
                vector_consistent(&lib(vec_lincomb(&a, &x, &b, &y))?)?;
                vectors += 1;
            }
            4 => {
                vector_consistent(&lib(s_op.apply(&x))?)?;
                vectors += 1;
            }
            5 => {
                vector_consistent(&lib(u_op.apply(&x))?)?;
                vectors += 1;
            }
            6 => {
                vector_consistent(&lib(l_op.apply(&x))?)?;
                vectors += 1;
            }
            7 => {
                vector_consistent(&riesz_representer(&riesz_functional(&y, y.norm())))?;
                vectors += 1;
            }
            8 => {
                let f = lib(SumName::from_components(&sum, vec![(0, x.clone()), (3, y.clone())]))?;
                creal_consistent(&lib(sum_to_fourier(&f).coeff(3, 2))?)?;
                creal_consistent(f.normsq())?;
                reals += 1;
            }
            _ => {
                // geometric coordinates a^k with |a| <= 1/2, exact squared norm
                let r = rat(rng.gen_range(-4..=4), 8);
                let r2 = r.clone();
                let coeffs = Memo::new(move |k: &usize| {
                    let mut p = Rational::one();
                    for _ in 0..*k {
                        p *= &r2;
                    }
                    Ok(CReal::from_rational(p))
                });
                let norm_sq = Rational::one() / (Rational::one() - &r * &r);
                vector_consistent(&expand_certified(&space, coeffs, CReal::from_rational(norm_sq), 0))?;
                vectors += 1;
            }
        }
    }
    Ok(format!(
        "{reals} reals and {vectors} vectors consistent at precisions {LEVELS:?}"
    ))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = Rational::zero();
    let mut atoms_checked = 0;
    for frame_no in 0..20 {
        let d = 4;
        let space = SpaceDescriptor::finite(100 + frame_no, d);
        // the basis plus five random atoms: a frame with A >= 1
        let mut atoms: Vec<FiniteCombo> = (0..d).map(FiniteCombo::basis).collect();
        let randoms: Vec<FiniteCombo> = (0..5).map(|_| rand_combo(&mut rng, d, 3, 16)).collect();
        let b = Rational::one() + randoms.iter().map(|c| c.norm_sq()).sum::<Rational>();
        atoms.extend(randoms);
        let atoms2 = atoms.clone();
        let sp = space.clone();
        let g = lib(riesz_correspondence(
            &space,
            Some(atoms.len()),
            move |i| {
                let v = VectorName::constant(&sp, atoms2[i].clone())?;
                let n = v.norm();
                Ok((v, n))
            },
            Rational::one(),
            b,
        ))?;
        let norms = atoms.clone();
        let frame = gframe_to_frame(&g, move |i| Ok(CReal::from_rational(norms[i].norm_sq()).sqrt()));
        for (i, want) in atoms.iter().enumerate().skip(d) {
            let got = lib(lib(frame.vec(i, 0))?.approx(35))?;
            worst = worst.max(dist_sq(&got, want));
            atoms_checked += 1;
        }
    }
    ensure(worst <= pow2_neg(60), || {
        format!("round-trip error squared {worst} exceeds 2^-60")
    })?;
    Ok(format!(
        "{atoms_checked} random atoms recovered, worst squared error {:.3e}",
        to_f64(&worst)
    ))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let space = l2();
    let sum = SumSpace::uniform(3, None, space.clone());
    let mut worst = Rational::zero();
    for _ in 0..50 {
        let count = rng.gen_range(1..=5);
        let mut combos: Vec<(usize, FiniteCombo)> = Vec::new();
        for _ in 0..count {
            let i = rng.gen_range(0..8);
            if combos.iter().all(|(k, _)| *k != i) {
                combos.push((i, rand_combo(&mut rng, 10, 5, 16)));
            }
        }
        let parts = combos.iter().map(|(i, c)| (*i, constant(&space, c.clone()))).collect();
        let f = lib(SumName::from_components(&sum, parts))?;
        let table = combos.clone();
        let norms = CRealSeq::from_fn(move |i| {
            let sq = table
                .iter()
                .find(|(k, _)| *k == i)
                .map_or(Rational::zero(), |(_, c)| c.norm_sq());
            Ok(CReal::from_rational(sq).sqrt())
        });
        let back = fourier_to_sum(&sum_to_fourier(&f), &norms);
        for i in 0..8 {
            let want = combos
                .iter()
                .find(|(k, _)| *k == i)
                .map_or(FiniteCombo::zero(), |(_, c)| c.clone());
            let got = lib(lib(back.component(i))?.approx(35))?;
            worst = worst.max(dist_sq(&got, &want));
        }
    }
    ensure(worst <= pow2_neg(60), || {
        format!("componentwise error squared {worst} exceeds 2^-60")
    })?;
    Ok(format!(
        "50 sum names, worst componentwise squared error {:.3e}",
        to_f64(&worst)
    ))
}

fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

fn bundles() -> Result<Vec<(&'static str, GFrameBundle)>, String> {
    let space = l2();
    Ok(vec![
        ("parseval", lib(AtomFrame::parseval(&space).bundle())?),
        ("weighted", lib(AtomFrame::weighted(&space, vec![rat(2, 1)]).bundle())?),
        ("redundant", lib(AtomFrame::redundant(&space).bundle())?),
    ])
}

fn criterion_4() -> Outcome {
    let space = l2();
    let mut worst = Rational::zero();
    for (name, b) in bundles()? {
        let dual = lib(canonical_dual(&b.gframe, b.norms.clone(), b.ao.clone()))?;
        let t = synthesis(&b.gframe, b.norms.clone());
        let t_plus = lib(pseudo_inverse(&b.gframe, b.norms.clone(), b.ao.clone()))?;
        for f in panel() {
            let fv = constant(&space, f.clone());
            let r = lib(lib(reconstruct(&b.gframe, &dual, b.norms.clone(), &fv))?.approx(25))?;
            let e1 = dist_sq(&r, &f);
            let tt = lib(lib(t.apply(&lib(t_plus.apply(&fv))?))?.approx(25))?;
            let e2 = dist_sq(&tt, &f);
            ensure(e1 <= pow2_neg(50) && e2 <= pow2_neg(50), || {
                format!("{name}: panel vector {f} not reconstructed")
            })?;
            worst = worst.max(e1).max(e2);
        }
    }
    Ok(format!(
        "3 g-frames x 10 vectors, worst squared error {:.3e}",
        to_f64(&worst)
    ))
}

fn criterion_5() -> Outcome {
    let w = lib(AtomFrame::weighted(&l2(), vec![rat(2, 1)]).bundle())?;
    let s: Operator = frame_operator(&w.gframe, w.norms.clone(), w.ao.clone());
    let (a, b) = (rat(1, 1), rat(4, 1));
    let mut worst_ratio = 0f64;
    for g in panel() {
        let exact = {
            let mut c = g.clone();
            c.add_term(0, &(g.get(0) * rat(-3, 4)));
            c
        };
        let gnorm = sqrt_upper_within(&g.norm_sq(), 40);
        let gv = constant(&l2(), g.clone());
        let mut rate = Rational::one();
        for k in 1..=20 {
            rate *= rat(3, 5);
            let u = lib(richardson_iterate(&s, &a, &b, &gv, k, 34))?;
            let err = dist_sq(&u, &exact);
            let allowed = &rate * &gnorm + pow2_neg(30);
            ensure(err <= &allowed * &allowed, || {
                format!("iterate {k} for {g} misses the rate")
            })?;
            if !gnorm.is_zero() {
                worst_ratio = worst_ratio.max(to_f64(&err).sqrt() / to_f64(&(&rate * &gnorm)));
            }
        }
    }
    Ok(format!(
        "10 vectors x 20 iterations, worst error / (3/5)^k|g| = {worst_ratio:.4}"
    ))
}

fn redundant_psi(b: &GFrameBundle) -> AnalysisOp {
    let sum = b.gframe.sum().clone();
    OperatorName::new(l2(), sum.clone(), rat(1, 1), move |f: &VectorName| {
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

fn criterion_6() -> Outcome {
    let b = lib(AtomFrame::redundant(&l2()).bundle())?;
    let psi = redundant_psi(&b);
    let dual = lib(dual_from_kernel(&b.gframe, b.norms.clone(), b.ao.clone(), &psi))?;
    let canon = lib(canonical_dual(&b.gframe, b.norms.clone(), b.ao.clone()))?;
    let back = lib(kernel_from_dual(&b.gframe, b.norms.clone(), b.ao.clone(), &canon))?;
    let (mut worst_rec, mut worst_psi) = (Rational::zero(), Rational::zero());
    for f in panel() {
        let fv = constant(&l2(), f.clone());
        let r = lib(lib(reconstruct(&b.gframe, &dual, b.norms.clone(), &fv))?.approx(25))?;
        worst_rec = worst_rec.max(dist_sq(&r, &f));
        let x = lib(back.apply(&fv))?;
        for i in 0..12 {
            worst_psi = worst_psi.max(lib(lib(x.component(i))?.approx(27))?.norm_sq());
        }
    }
    ensure(worst_rec <= pow2_neg(50), || {
        format!("reconstruction error squared {worst_rec}")
    })?;
    // |approx| <= 2^-26 at precision 27 gives a true norm below 2^-25
    ensure(worst_psi <= pow2_neg(52), || {
        format!("recovered kernel map has component norm squared {worst_psi}")
    })?;
    Ok(format!(
        "reconstruction error squared {:.3e}, recovered kernel component norm squared {:.3e}",
        to_f64(&worst_rec),
        to_f64(&worst_psi)
    ))
}

fn a_of(exps: &[u64]) -> Vec<Rational> {
    exps.iter().map(|&x| pow2_neg(x as u32 + 1)).collect()
}

fn a_at(a: &[Rational], k: usize) -> Rational {
    if k == 0 {
        Rational::zero()
    } else {
        a.get(k - 1).cloned().unwrap_or_else(Rational::zero)
    }
}

fn dense(entries: Vec<Rational>) -> FiniteCombo {
    FiniteCombo::from_pairs(entries.into_iter().enumerate())
}

fn dense_lower(a: &[Rational], f: &FiniteCombo, len: usize) -> FiniteCombo {
    dense(
        (0..len)
            .map(|i| {
                (0..=i)
                    .map(|j| (if i == j { Rational::one() } else { a_at(a, i - j) }) * f.get(j))
                    .sum()
            })
            .collect(),
    )
}

fn dense_upper(a: &[Rational], f: &FiniteCombo, len: usize) -> FiniteCombo {
    dense(
        (0..len)
            .map(|i| {
                (i..len)
                    .map(|j| (if i == j { Rational::one() } else { a_at(a, j - i) }) * f.get(j))
                    .sum()
            })
            .collect(),
    )
}

fn dense_column(a: &[Rational], f: &FiniteCombo, len: usize) -> FiniteCombo {
    dense(
        (0..len)
            .map(|i| f.get(i) + if i > 0 { a_at(a, i) * f.get(0) } else { Rational::zero() })
            .collect(),
    )
}

fn dense_column_adjoint(a: &[Rational], f: &FiniteCombo, len: usize) -> FiniteCombo {
    dense(
        (0..len)
            .map(|i| {
                if i == 0 {
                    (0..len)
                        .map(|j| if j == 0 { f.get(0) } else { a_at(a, j) * f.get(j) })
                        .sum()
                } else {
                    f.get(i)
                }
            })
            .collect(),
    )
}

fn dense_lower_inverse(a: &[Rational], f: &FiniteCombo, len: usize) -> FiniteCombo {
    let mut u: Vec<Rational> = Vec::new();
    for i in 0..len {
        let s: Rational = (1..=i).map(|k| a_at(a, k) * &u[i - k]).sum();
        u.push(f.get(i) - s);
    }
    dense(u)
}

fn dense_remark(a: &[Rational], f: &FiniteCombo, len: usize) -> FiniteCombo {
    let total: Rational = a.iter().map(|x| x * x).sum();
    dense(
        (0..len)
            .map(|i| {
                if i == 0 {
                    (Rational::one() + &total) * f.get(0) - (1..len).map(|j| a_at(a, j) * f.get(j)).sum::<Rational>()
                } else {
                    f.get(i) - a_at(a, i) * f.get(0)
                }
            })
            .collect(),
    )
}

/// The gated constructions, each as a map from a test vector to its image.
fn gated_images(s: &SpeckerData, gate: &NormOracle) -> Vec<(&'static str, cgframe::Result<Operator>)> {
    let space = l2();
    let up = ToeplitzUpperU::new(&space, s.clone()).unwrap();
    let col = ColumnLowerU::new(&space, s.clone()).unwrap();
    let low = ToeplitzLowerU::new(&space, s.clone()).unwrap();
    vec![
        ("upper-toeplitz adjoint", Ok(gated_adjoint(&up, gate))),
        ("column-lower operator", Ok(gated_adjoint(&col, gate))),
        ("lower-toeplitz operator", Ok(low.operator(gate))),
        ("dual tau", gated_dual_tau(&up, gate).and_then(|g| g.op(0))),
        ("remark frame operator", remark_frame_operator(&space, s, gate)),
    ]
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let space = l2();
    let mut worst = Rational::zero();
    let (mut matched, mut refused) = (0, 0);
    for _ in 0..12 {
        let mut exps: Vec<u64> = (1..11).collect();
        for i in (1..exps.len()).rev() {
            exps.swap(i, rng.gen_range(0..=i));
        }
        exps.truncate(rng.gen_range(1..=5));
        let a = a_of(&exps);
        let s = SpeckerData::finite(exps.clone()).unwrap();
        let gate = lib(NormOracle::exact(&s))?;
        let up = ToeplitzUpperU::new(&space, s.clone()).unwrap();
        let col = ColumnLowerU::new(&space, s.clone()).unwrap();
        let low = ToeplitzLowerU::new(&space, s.clone()).unwrap();
        let ungated: [(&str, Operator, fn(&[Rational], &FiniteCombo, usize) -> FiniteCombo); 3] = [
            ("upper-toeplitz operator", upper_u_operator(&up), dense_upper),
            ("column-lower adjoint", column_lower_adjoint(&col), dense_column_adjoint),
            ("lower-toeplitz synthesis", low.synthesis(), dense_upper),
        ];
        let oracles: [fn(&[Rational], &FiniteCombo, usize) -> FiniteCombo; 5] = [
            dense_lower,
            dense_column,
            dense_lower,
            dense_lower_inverse,
            dense_remark,
        ];
        let images = gated_images(&s, &gate);
        for f in panel().into_iter().take(6) {
            let fv = constant(&space, f.clone());
            for (name, op, oracle) in &ungated {
                let got = lib(lib(op.apply(&fv))?.approx(25))?;
                let d = dist_sq(&got, &oracle(&a, &f, 16));
                ensure(d <= pow2_neg(50), || {
                    format!("{name} differs from the dense product on {f}")
                })?;
                worst = worst.max(d);
                matched += 1;
            }
            for ((name, op), oracle) in images.iter().zip(oracles) {
                let op = op.as_ref().map_err(|e| format!("{name}: {e}"))?;
                let got = lib(lib(op.apply(&fv))?.approx(25))?;
                let d = dist_sq(&got, &oracle(&a, &f, 160));
                ensure(d <= pow2_neg(50), || {
                    format!("{name} differs from dense algebra on {f} with data {exps:?}")
                })?;
                worst = worst.max(d);
                matched += 1;
            }
        }
        // drop the smallest term from the gate
        let smallest = a.iter().min().unwrap();
        let stale = NormOracle::from_rational(a.iter().map(|x| x * x).sum::<Rational>() - smallest * smallest);
        for (name, op) in gated_images(&s, &stale) {
            let outcome = op.and_then(|op| op.apply(&constant(&space, FiniteCombo::basis(0)))?.approx(25));
            match outcome {
                Err(e) if e.is_precision_exhausted() => refused += 1,
                Err(e) => return Err(format!("{name} with an understated gate failed with {e}")),
                Ok(_) => {
                    return Err(format!(
                        "{name} returned a value for an understated gate, data {exps:?}"
                    ))
                }
            }
        }
    }
    Ok(format!(
        "{matched} images match dense algebra (worst squared error {:.3e}), {refused} understated gates refused",
        to_f64(&worst)
    ))
}

fn criterion_8() -> Outcome {
    let space = l2();
    let vectors: Vec<VectorName> = panel().into_iter().map(|c| constant(&space, c)).collect();
    let mut checked = Vec::new();
    let all = bundles()?;
    let mut gframes = Vec::new();
    for (name, b) in &all {
        gframes.push((format!("{name}"), b.gframe.clone()));
        let dual = lib(canonical_dual(&b.gframe, b.norms.clone(), b.ao.clone()))?;
        gframes.push((format!("{name} canonical dual"), dual.gframe));
        let frame = corresponding_frame(&b.gframe, &InnerSystem::OrthonormalRows, b.norms.clone());
        lib(check_frame_bounds(&frame, &vectors, 64, 20)).map_err(|e| format!("{name} corresponding frame: {e}"))?;
        checked.push(format!("{name} corresponding frame"));
    }
    let block = lib(block_gframe(&space, 3))?;
    gframes.push(("block".into(), block.gframe.clone()));
    let red = &all[2].1;
    let kernel_dual = lib(dual_from_kernel(
        &red.gframe,
        red.norms.clone(),
        red.ao.clone(),
        &redundant_psi(red),
    ))?;
    gframes.push(("redundant kernel dual".into(), kernel_dual.gframe));
    let w = &all[1].1;
    let t_plus = lib(pseudo_inverse(&w.gframe, w.norms.clone(), w.ao.clone()))?;
    gframes.push((
        "weighted left-inverse dual".into(),
        lib(dual_from_left_inverse(&w.gframe, &t_plus))?.gframe,
    ));
    let s = SpeckerData::finite(vec![1, 3]).unwrap();
    let up = ToeplitzUpperU::new(&space, s.clone()).unwrap();
    gframes.push((
        "dual tau".into(),
        lib(gated_dual_tau(&up, &lib(NormOracle::exact(&s))?))?,
    ));
    for (name, g) in &gframes {
        lib(check_gframe_bounds(g, &vectors, 64, 20)).map_err(|e| format!("{name}: {e}"))?;
        checked.push(name.clone());
    }
    Ok(format!("{} frames and g-frames pass with N <= 64", checked.len()))
}

/// One acceptance check: its number, title and time limit in seconds.
pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub limit_secs: u64,
    run: fn() -> Outcome,
}

pub const CRITERIA: [Criterion; 8] = [
    Criterion {
        number: 1,
        title: "cauchy consistency",
        limit_secs: 60,
        run: criterion_1,
    },
    Criterion {
        number: 2,
        title: "riesz round trip",
        limit_secs: 60,
        run: criterion_2,
    },
    Criterion {
        number: 3,
        title: "representation reductions",
        limit_secs: 60,
        run: criterion_3,
    },
    Criterion {
        number: 4,
        title: "reconstruction identities",
        limit_secs: 120,
        run: criterion_4,
    },
    Criterion {
        number: 5,
        title: "richardson certificate",
        limit_secs: 30,
        run: criterion_5,
    },
    Criterion {
        number: 6,
        title: "dual characterization",
        limit_secs: 60,
        run: criterion_6,
    },
    Criterion {
        number: 7,
        title: "gated gallery",
        limit_secs: 60,
        run: criterion_7,
    },
    Criterion {
        number: 8,
        title: "frame inequalities",
        limit_secs: 60,
        run: criterion_8,
    },
];

pub const SUITES: [&str; 4] = ["invariants", "roundtrips", "reconstruction", "gallery"];

/// Criterion numbers making up a named suite.
pub fn suite(name: &str) -> Option<&'static [usize]> {
    match name {
        "invariants" => Some(&[1, 8]),
        "roundtrips" => Some(&[2, 3]),
        "reconstruction" => Some(&[4, 5, 6]),
        "gallery" => Some(&[7]),
        _ => None,
    }
}

pub struct CheckResult {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub seconds: f64,
    /// The measured bound on success, the first violation on failure.
    pub detail: String,
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {} {}: {status} ({:.2} s) {}",
            self.number, self.title, self.seconds, self.detail
        )
    }
}

/// Runs one criterion; a panic or an exceeded time limit counts as failure.
pub fn run_criterion(c: &Criterion) -> CheckResult {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(_) if elapsed > Duration::from_secs(c.limit_secs) => Err(format!("took longer than {} s", c.limit_secs)),
        other => other,
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        number: c.number,
        title: c.title,
        passed,
        seconds: elapsed.as_secs_f64(),
        detail,
    }
}
