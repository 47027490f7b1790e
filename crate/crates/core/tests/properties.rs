use std::sync::OnceLock;

use proptest::prelude::*;
use ybe_core::catalog::{constant_gluing, identity_gluing, named_group, semilattices, SolutionFamily};
use ybe_core::finalg::{
    check_homomorphism, complete_regular_inverses, CarrierMap, CompletelyRegular, FiniteGroup, FiniteSemigroup,
    Semilattice,
};
use ybe_core::sslattice::{build_solution, check_equivariance, composed_index_period, predicted_index_period};
use ybe_core::ybesol::{classify, index_period, is_solution, is_solution_componentwise, power, PairMap, SetSolution};

const GROUPS: [&str; 8] = ["C1", "C2", "C3", "C4", "C2xC2", "S3", "C6", "D8"];

fn groups() -> &'static [FiniteGroup] {
    static CELL: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    CELL.get_or_init(|| GROUPS.iter().map(|n| named_group(n).unwrap()).collect())
}

fn endomorphisms() -> &'static [Vec<CarrierMap>] {
    static CELL: OnceLock<Vec<Vec<CarrierMap>>> = OnceLock::new();
    CELL.get_or_init(|| groups().iter().map(FiniteGroup::endomorphisms).collect())
}

fn all_semilattices() -> &'static [Semilattice] {
    static CELL: OnceLock<Vec<Semilattice>> = OnceLock::new();
    CELL.get_or_init(|| (1..=4).flat_map(semilattices).collect())
}

/// Completely regular semigroups: rectangular groups, right and left zero
/// bands, and the 3-element Clifford chain `{0} < C2`.
fn completely_regular(kind: usize, group: usize, rows: usize, cols: usize) -> CompletelyRegular {
    let g = groups()[group % 5].semigroup().clone();
    let s = match kind % 4 {
        0 => g.direct_product(&FiniteSemigroup::rectangular_band(rows, cols).unwrap()),
        1 => FiniteSemigroup::right_zero(rows + cols).unwrap(),
        2 => FiniteSemigroup::left_zero(rows + cols).unwrap(),
        _ => FiniteSemigroup::from_rows(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]])
            .unwrap()
            .direct_product(&g),
    };
    CompletelyRegular::new(s).unwrap()
}

fn random_solution_tables() -> impl Strategy<Value = SetSolution> {
    (1usize..=4).prop_flat_map(|n| {
        let table = proptest::collection::vec(proptest::collection::vec(0..n, n), n);
        (table.clone(), table).prop_map(|(l, r)| SetSolution::new(&l, &r).unwrap())
    })
}

fn family() -> impl Strategy<Value = SetSolution> {
    (0usize..4, 1usize..=5, 0usize..5).prop_map(|(f, n, p)| SolutionFamily::ALL[f].build(n, p).unwrap())
}

proptest! {
    #[test]
    fn homomorphisms_compose(gi in 0usize..GROUPS.len(), fi in any::<prop::sample::Index>(), hi in any::<prop::sample::Index>()) {
        let g = &groups()[gi];
        let endos = &endomorphisms()[gi];
        let (f, h) = (fi.get(endos), hi.get(endos));
        prop_assert!(check_homomorphism(f, g, g).unwrap().holds());
        let composite = f.then(h).unwrap();
        prop_assert!(check_homomorphism(&composite, g, g).unwrap().holds());
    }

    #[test]
    fn completely_regular_identities(kind in 0usize..4, group in 0usize..5, rows in 1usize..3, cols in 1usize..3) {
        let c = completely_regular(kind, group, rows, cols);
        for a in 0..c.order() {
            let x = c.inv(a);
            prop_assert_eq!(c.op(c.op(a, x), a), a);
            prop_assert_eq!(c.op(c.op(x, a), x), x);
            prop_assert_eq!(c.op(a, x), c.op(x, a));
            let e = c.idem(a);
            prop_assert_eq!(c.op(e, e), e);
        }
    }

    #[test]
    fn group_inverses_match(gi in 0usize..GROUPS.len()) {
        let g = &groups()[gi];
        let cr = complete_regular_inverses(g.semigroup()).unwrap();
        let expected: Vec<usize> = (0..g.order()).map(|a| g.inv(a)).collect();
        prop_assert_eq!(cr.inverses(), expected.as_slice());
    }

    #[test]
    fn index_period_is_least(s in random_solution_tables()) {
        let (i, k) = index_period(&s);
        prop_assert!(k >= 1);
        prop_assert_eq!(power(&s, i + k), power(&s, i));
        for j in 0..i {
            for l in 0..(i + k) {
                if l != j {
                    prop_assert_ne!(power(&s, j), power(&s, l));
                }
            }
        }
        for shorter in 1..k {
            prop_assert_ne!(power(&s, i + shorter), power(&s, i));
        }
        prop_assert_eq!(i == 0, s.pair_map().is_bijective());
    }

    #[test]
    fn classify_flags_follow_powers(s in random_solution_tables()) {
        let p = classify(&s);
        let identity = PairMap::identity(s.order());
        prop_assert_eq!(p.involutive, power(&s, 2) == identity);
        prop_assert_eq!(p.idempotent, power(&s, 2) == power(&s, 1));
        prop_assert_eq!(p.cubic, power(&s, 3) == power(&s, 1));
        prop_assert!(!p.involutive || p.bijective);
        prop_assert!(!p.idempotent || (p.index <= 1 && p.period == 1));
    }

    #[test]
    fn braid_checks_agree(s in random_solution_tables()) {
        prop_assert_eq!(is_solution(&s), is_solution_componentwise(&s));
    }

    #[test]
    fn constant_gluings(yi in any::<prop::sample::Index>(), payloads in proptest::collection::vec(family(), 4)) {
        let y = yi.get(all_semilattices()).clone();
        let m = y.order();
        let sys = constant_gluing(y, payloads[..m].to_vec()).unwrap();
        let r = build_solution(&sys).unwrap();
        prop_assert!(is_solution(&r).holds());
        let (index, period) = index_period(&r);
        prop_assert_eq!((index, period), predicted_index_period(&sys));
        prop_assert_eq!(composed_index_period(&sys).unwrap(), (index, period));
        if m >= 2 {
            prop_assert!(index >= 1);
        }
        // restriction to each block is the component
        for (alpha, ra) in sys.payloads().iter().enumerate() {
            for x in 0..ra.order() {
                for z in 0..ra.order() {
                    let (u, v) = ra.apply(x, z);
                    let global = r.apply(sys.global(alpha, x), sys.global(alpha, z));
                    prop_assert_eq!(global, (sys.global(alpha, u), sys.global(alpha, v)));
                }
            }
        }
    }

    #[test]
    fn uniform_payload_keeps_index_and_period(yi in any::<prop::sample::Index>(), r in family()) {
        let y = yi.get(all_semilattices()).clone();
        let (i, n) = index_period(&r);
        prop_assume!(i >= 1);
        let sys = identity_gluing(y, r).unwrap();
        prop_assert_eq!(index_period(&build_solution(&sys).unwrap()), (i, n));
    }

    #[test]
    fn equivariant_constant_maps_give_solutions(
        top in family(),
        bottom in family(),
        c in 0usize..5,
    ) {
        let c = c % bottom.order();
        let phi = CarrierMap::constant(top.order(), bottom.order(), c).unwrap();
        let sys = ybe_core::SemilatticeSystem::new(
            Semilattice::chain(2).unwrap(),
            vec![bottom.clone(), top],
            [((1, 0), phi)].into_iter().collect(),
        ).unwrap();
        let equivariant = check_equivariance(&sys).holds();
        prop_assert_eq!(equivariant, bottom.apply(c, c) == (c, c));
        match build_solution(&sys) {
            Ok(r) => prop_assert!(equivariant && is_solution(&r).holds()),
            Err(_) => prop_assert!(!equivariant),
        }
    }
}
