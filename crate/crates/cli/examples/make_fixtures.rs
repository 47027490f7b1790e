//! Regenerates `crates/cli/fixtures/` from the library constructors.
//!
//! Run with `cargo run -p ybe-cli --example make_fixtures`.

use std::collections::BTreeMap;
use std::path::Path;

use ybe_cli::StructureDocument;
use ybe_core::catalog::{
    named_group, projection_solution, retraction_solution, transposition_rack_solution, zappa_szep_cyclic,
    zappa_szep_symmetric,
};
use ybe_core::finalg::{CarrierMap, FiniteGroup, Semilattice};
use ybe_core::semibrace::GeneralizedLeftSemiBrace;
use ybe_core::sslattice::{Payload, SemilatticeSystem};
use ybe_core::ybesol::SetSolution;

fn cmap(src: usize, dst: usize, values: &[usize]) -> CarrierMap {
    CarrierMap::new(src, dst, values.to_vec()).unwrap()
}

fn chain2<P: Payload>(top: P, bottom: P, phi: CarrierMap) -> SemilatticeSystem<P> {
    SemilatticeSystem::new(
        Semilattice::chain(2).unwrap(),
        vec![bottom, top],
        BTreeMap::from([((1, 0), phi)]),
    )
    .unwrap()
}

fn cyclic_brace(n: usize) -> GeneralizedLeftSemiBrace {
    let g = FiniteGroup::cyclic(n).unwrap();
    GeneralizedLeftSemiBrace::new(g.semigroup().clone(), g.completely_regular()).unwrap()
}

fn solutions(sys: &SemilatticeSystem<SetSolution>, name: &str) -> StructureDocument {
    StructureDocument::system(sys, StructureDocument::solution).with_name(name)
}

fn braces(sys: &SemilatticeSystem<GeneralizedLeftSemiBrace>, name: &str) -> StructureDocument {
    StructureDocument::system(sys, StructureDocument::semibrace).with_name(name)
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let write = |file: &str, doc: &StructureDocument| std::fs::write(dir.join(file), doc.to_canonical()).unwrap();
    let twist = |n| SetSolution::twist(n).unwrap();

    let phi21 = cmap(2, 3, &[0, 2]);
    let phi10 = cmap(3, 2, &[1, 0, 1]);
    let phi20 = phi21.then(&phi10).unwrap();
    let chain = SemilatticeSystem::new(
        Semilattice::chain(3).unwrap(),
        vec![twist(2), twist(3), twist(2)],
        BTreeMap::from([((2, 1), phi21), ((1, 0), phi10), ((2, 0), phi20)]),
    )
    .unwrap();
    write("twists_chain.json", &solutions(&chain, "twists over a 3-chain"));
    write(
        "twist_over_projection_1.json",
        &solutions(
            &chain2(twist(1), projection_solution(3, 1).unwrap(), cmap(1, 3, &[1])),
            "twist of one point over a projection",
        ),
    );
    write(
        "twist_over_projection_2.json",
        &solutions(
            &chain2(twist(2), projection_solution(3, 1).unwrap(), cmap(2, 3, &[1, 1])),
            "twist of two points over a projection",
        ),
    );
    let f = cmap(3, 3, &[0, 0, 2]);
    write(
        "retraction_over_projection.json",
        &solutions(
            &chain2(
                retraction_solution(&f).unwrap(),
                projection_solution(2, 0).unwrap(),
                cmap(3, 2, &[0, 0, 0]),
            ),
            "retraction over a projection",
        ),
    );
    write(
        "mixed_periods.json",
        &solutions(
            &chain2(twist(2), transposition_rack_solution(), cmap(2, 3, &[0, 0])),
            "twist over the transposition rack",
        ),
    );

    write(
        "c2_over_c2.json",
        &braces(
            &chain2(cyclic_brace(2), cyclic_brace(2), CarrierMap::identity(2)),
            "two C2 braces",
        ),
    );
    write(
        "c2_over_trivial.json",
        &braces(
            &chain2(cyclic_brace(2), cyclic_brace(1), cmap(2, 1, &[0, 0])),
            "C2 brace over the trivial brace",
        ),
    );
    let s3 = zappa_szep_symmetric().build().unwrap().generalized().clone();
    write(
        "s3_over_trivial.json",
        &braces(
            &chain2(s3.clone(), cyclic_brace(1), cmap(6, 1, &[0; 6])),
            "Zappa-Szep C2 x C3 with inversion over the trivial brace",
        ),
    );
    let c6 = zappa_szep_cyclic().build().unwrap().generalized().clone();
    let single = SemilatticeSystem::new(Semilattice::chain(1).unwrap(), vec![c6.clone()], BTreeMap::new()).unwrap();
    write("single_point.json", &braces(&single, "single component"));

    // the constant map to 0 misses the only diagonal fixed point of the bottom
    let sigma = [1, 0, 2];
    let bottom = SetSolution::from_fn(3, |x, y| (sigma[y], x)).unwrap();
    write(
        "bad_phi_equivariance.json",
        &solutions(&chain2(twist(2), bottom, cmap(2, 3, &[0, 0])), "non-equivariant phi"),
    );
    // φ(2,0) disagrees with φ(1,0)∘φ(2,1)
    let mut intransitive = solutions(
        &SemilatticeSystem::new(
            Semilattice::chain(3).unwrap(),
            vec![twist(2), twist(2), twist(2)],
            BTreeMap::from([
                ((2, 1), cmap(2, 2, &[0, 0])),
                ((1, 0), cmap(2, 2, &[0, 1])),
                ((2, 0), cmap(2, 2, &[0, 0])),
            ]),
        )
        .unwrap(),
        "intransitive phi",
    );
    for entry in intransitive.phi.as_mut().unwrap() {
        if (entry.from, entry.to) == (2, 0) {
            entry.map = vec![1, 1];
        }
    }
    write("bad_phi_transitivity.json", &intransitive);
    // φ(1,0) has the wrong length
    let mut short = solutions(&chain2(twist(2), twist(2), CarrierMap::identity(2)), "short phi");
    short.phi.as_mut().unwrap()[0].map = vec![0];
    write("bad_phi_short.json", &short);

    write(
        "zs_c6.json",
        &StructureDocument::semibrace(&c6).with_name("Zappa-Szep C2 x C3"),
    );
    write(
        "zs_s3.json",
        &StructureDocument::semibrace(&s3).with_name("Zappa-Szep C2 x C3 with inversion"),
    );
    let c3 = named_group("C3").unwrap();
    write("c3.json", &StructureDocument::group(&c3).with_name("C3"));
    let mut broken = StructureDocument::group(&c3).with_name("C3 with one corrupted cell");
    broken.mul_table.as_mut().unwrap()[1][1] = 0;
    write("c3_corrupted.json", &broken);
}
