use ybe_core::catalog::{named_group, named_map, zappa_szep_cyclic, zappa_szep_symmetric};
use ybe_core::finalg::{BandKind, CarrierMap, CompletelyRegular, FiniteGroup, FiniteSemigroup};
use ybe_core::semibrace::{
    associated_solution, build_clifford_semibrace, build_fg_family, build_leftzero_semibrace,
    build_rightzero_semibrace, check_lambda_identities, check_middle_units_idempotent, check_prop22, check_rho_antihom,
    check_solution_condition, rectangular_decomposition, verify_generalized_left, verify_generalized_right,
    LeftSemiBrace,
};
use ybe_core::ybesol::{check_right_cryptogroup_criterion, classify, is_solution, is_solution_componentwise};
use ybe_core::Error;

fn c2_cubed() -> FiniteGroup {
    named_group("C2xC2xC2").unwrap()
}

fn map(name: &str) -> CarrierMap {
    named_map("C2xC2xC2", &c2_cubed(), name).unwrap()
}

fn fg(f: &str, g: &str) -> LeftSemiBrace {
    build_fg_family(&c2_cubed(), &map(f), &map(g)).unwrap()
}

#[test]
fn cyclic_zappa_szep_gives_a_solution() {
    let zs = zappa_szep_cyclic();
    let s = zs.build().unwrap();
    assert_eq!(s.order(), 6);
    assert!(s.group().is_commutative());
    assert!(check_rho_antihom(&s).holds());
    assert!(zs.rho_antihom_in_coordinates().holds());
    assert!(check_solution_condition(&s).holds());
    let r = associated_solution(&s);
    assert!(is_solution(&r).holds());
    assert!(is_solution_componentwise(&r).holds());
}

#[test]
fn symmetric_zappa_szep_is_a_semibrace_without_a_solution() {
    let zs = zappa_szep_symmetric();
    let s = zs.build().unwrap();
    assert!(!s.group().is_commutative());
    assert!(verify_generalized_left(s.additive(), s.group())
        .unwrap()
        .left_semibrace());
    assert!(!check_rho_antihom(&s).holds());
    assert!(!zs.rho_antihom_in_coordinates().holds());
    assert!(!check_solution_condition(&s).holds());
    let r = associated_solution(&s);
    assert!(!is_solution(&r).holds());
    assert!(!is_solution_componentwise(&r).holds());
}

#[test]
fn trivial_product_of_two_c2() {
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let zs = ybe_core::catalog::zappa_szep(c2.clone(), c2, "trivial").unwrap();
    let s = zs.build().unwrap();
    assert!(check_prop22(&s).all_hold());
    assert!(check_solution_condition(&s).holds());
}

#[test]
fn case_one_left_cancellative() {
    // g = 0: a + b = b ∘ f(a)
    let s = fg("proj12", "zero");
    let f = map("proj12");
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(s.add(a, b), s.mul(b, f.apply(a)));
        }
    }
    assert!(s.additive().is_left_cancellative());
    let r = associated_solution(&s);
    let p = classify(&r);
    assert!(p.is_ybe && p.left_nondegenerate);
    // λ_a(b) = a ∘ b ∘ f(a⁻)
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(s.lambda(a, b), s.mul(s.mul(a, b), f.apply(s.inv(a))));
        }
    }
}

#[test]
fn case_two_right_cancellative_two_sided() {
    // f = id: a + b = b ∘ g(b⁻) ∘ a
    let s = fg("id", "proj23");
    assert!(s.additive().is_right_cancellative());
    assert!(s.generalized().is_generalized_right());
    assert!(verify_generalized_right(s.additive(), s.group()).unwrap().holds());
}

#[test]
fn case_three_rectangular_band() {
    let s = fg("proj12", "proj12");
    let f = map("proj12");
    assert_eq!(s.additive().classify_band(), BandKind::RectangularBand);
    assert_eq!(s.additive().idempotents(), (0..8).collect::<Vec<_>>());
    let report = check_prop22(&s);
    let kernel: Vec<usize> = (0..8).filter(|&x| f.apply(x) == 0).collect();
    let mut image: Vec<usize> = (0..8).map(|x| f.apply(x)).collect();
    image.sort_unstable();
    image.dedup();
    assert_eq!(report.left_translate, kernel);
    assert_eq!(report.right_translate, image);
    let d = rectangular_decomposition(&s).unwrap();
    assert_eq!(d.group, vec![0]);
    let p = classify(&associated_solution(&s));
    assert!(p.is_ybe && p.idempotent);
}

#[test]
fn mixed_projections_are_neither_cancellative() {
    let s = fg("proj12", "proj23");
    let add = s.additive();
    let (a, b, c) = add.left_cancellation_failure().unwrap();
    assert_eq!(add.op(a, b), add.op(a, c));
    let (b, c, a) = add.right_cancellation_failure().unwrap();
    assert_eq!(add.op(b, a), add.op(c, a));
    let d = rectangular_decomposition(&s).unwrap();
    assert_eq!(d.left_zero, vec![0, 2]);
    assert_eq!(d.group, vec![0, 4]);
    assert_eq!(d.right_zero, vec![0, 1]);
    assert_eq!(d.idempotents, vec![0, 1, 2, 3]);
}

#[test]
fn fg_associated_solution_formula() {
    // r(a, b) = (a∘b∘f(g(b⁻)∘a⁻), f(a∘g(b)))
    for (fname, gname) in [
        ("proj12", "proj23"),
        ("id", "proj23"),
        ("proj12", "zero"),
        ("proj23", "proj23"),
    ] {
        let s = fg(fname, gname);
        let (f, g) = (map(fname), map(gname));
        let r = associated_solution(&s);
        for a in 0..8 {
            for b in 0..8 {
                let lam = s.mul(s.mul(a, b), f.apply(s.mul(g.apply(s.inv(b)), s.inv(a))));
                let rho = f.apply(s.mul(a, g.apply(b)));
                assert_eq!(r.apply(a, b), (lam, rho), "{fname}/{gname} at ({a},{b})");
            }
        }
        assert!(check_rho_antihom(&s).holds());
        assert!(check_lambda_identities(&s).holds());
    }
}

#[test]
fn fg_family_over_small_groups() {
    for name in ["C2xC2", "C4", "S3", "C6", "D8", "Q8"] {
        let group = named_group(name).unwrap();
        let idempotent: Vec<CarrierMap> = group
            .endomorphisms()
            .into_iter()
            .filter(CarrierMap::is_idempotent)
            .collect();
        for f in &idempotent {
            for g in &idempotent {
                let commute = (0..group.order()).all(|x| f.apply(g.apply(x)) == g.apply(f.apply(x)));
                match build_fg_family(&group, f, g) {
                    Ok(s) => {
                        assert!(commute);
                        assert!(check_prop22(&s).all_hold());
                        assert!(check_middle_units_idempotent(&s).holds());
                        assert!(check_rho_antihom(&s).holds());
                        let condition = check_solution_condition(&s).holds();
                        assert_eq!(condition, is_solution(&associated_solution(&s)).holds());
                    }
                    Err(e) => {
                        assert!(!commute);
                        assert!(matches!(e, Error::NonCommutingPair(_)));
                    }
                }
            }
        }
    }
}

#[test]
fn fg_rejects_bad_maps() {
    let g = c2_cubed();
    let not_endo = CarrierMap::from_fn(8, 8, |x| (x + 1) % 8).unwrap();
    assert_eq!(
        build_fg_family(&g, &not_endo, &map("id")).unwrap_err(),
        Error::NotIdempotentEndomorphism("f")
    );
    let c3 = FiniteGroup::cyclic(3).unwrap();
    let doubling = CarrierMap::from_fn(3, 3, |x| (2 * x) % 3).unwrap();
    assert_eq!(
        build_fg_family(&c3, &CarrierMap::identity(3), &doubling).unwrap_err(),
        Error::NotIdempotentEndomorphism("g")
    );
}

fn clifford_chain() -> CompletelyRegular {
    // a zero element 0 below the group C2 = {1, 2}
    CompletelyRegular::from_rows(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
}

#[test]
fn clifford_semibrace_is_cubic() {
    for c in [clifford_chain(), FiniteGroup::cyclic(3).unwrap().completely_regular()] {
        let s = build_clifford_semibrace(&c).unwrap();
        assert!(s.is_generalized_right());
        assert!(check_lambda_identities(&s).holds());
        let r = associated_solution(&s);
        for a in 0..c.order() {
            for b in 0..c.order() {
                let expected = (c.op(c.idem(a), b), c.op(c.op(c.inv(b), a), b));
                assert_eq!(r.apply(a, b), expected);
            }
        }
        let p = classify(&r);
        assert!(p.is_ybe && p.cubic);
    }
}

#[test]
fn clifford_rejects_rectangular_band() {
    let band = CompletelyRegular::new(FiniteSemigroup::rectangular_band(2, 2).unwrap()).unwrap();
    assert!(matches!(build_clifford_semibrace(&band), Err(Error::NotClifford(_, _))));
}

#[test]
fn zero_addition_forms() {
    let inputs = [
        FiniteGroup::cyclic(2).unwrap().completely_regular(),
        CompletelyRegular::new(FiniteSemigroup::rectangular_band(2, 3).unwrap()).unwrap(),
        clifford_chain(),
        named_group("S3").unwrap().completely_regular(),
        named_group("Q8").unwrap().completely_regular(),
    ];
    for c in &inputs {
        let right = build_rightzero_semibrace(c).unwrap();
        let left = build_leftzero_semibrace(c).unwrap();
        assert!(right.is_generalized_right() && left.is_generalized_right());
        let (rr, rl) = (associated_solution(&right), associated_solution(&left));
        for a in 0..c.order() {
            for b in 0..c.order() {
                assert_eq!(rr.apply(a, b), (c.op(a, b), c.idem(b)));
                assert_eq!(rl.apply(a, b), (c.idem(a), c.op(a, b)));
            }
        }
        assert!(classify(&rr).idempotent && classify(&rl).idempotent);
        let criterion = check_right_cryptogroup_criterion(c).holds();
        assert_eq!(criterion, is_solution(&rr).holds());
    }
}

#[test]
fn cryptogroup_counterexample() {
    let c = CompletelyRegular::from_rows(&[vec![0, 0, 0, 0], vec![0, 1, 2, 3], vec![2, 2, 2, 2], vec![2, 3, 0, 1]])
        .unwrap();
    assert_eq!(check_right_cryptogroup_criterion(&c), ybe_core::Verdict::Fails((3, 0)));
    let r = associated_solution(&build_rightzero_semibrace(&c).unwrap());
    assert!(!is_solution(&r).holds());
}

#[test]
fn brace_decomposition_is_trivial() {
    let g = named_group("C2xC2").unwrap();
    let s = LeftSemiBrace::new(g.semigroup().clone(), g.clone()).unwrap();
    let report = check_prop22(&s);
    assert_eq!(report.left_translate, vec![0, 1, 2, 3]);
    assert_eq!(report.right_translate, vec![0, 1, 2, 3]);
    let d = rectangular_decomposition(&s).unwrap();
    assert_eq!(
        (d.left_zero, d.group, d.right_zero),
        (vec![0], vec![0, 1, 2, 3], vec![0])
    );
    assert!(check_solution_condition(&s).holds());
}

#[test]
fn decomposition_across_fg_family() {
    for f in ["id", "zero", "proj12", "proj23"] {
        for g in ["id", "zero", "proj12", "proj23"] {
            let s = build_fg_family(&c2_cubed(), &map(f), &map(g)).unwrap();
            assert!(check_prop22(&s).all_hold());
            let d = rectangular_decomposition(&s).unwrap();
            assert_eq!(d.left_zero.len() * d.group.len() * d.right_zero.len(), 8);
        }
    }
}
