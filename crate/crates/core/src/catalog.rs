//! Named groups, maps and the standard instances used by the command line
//! tool and the test suites.
//!
//! Group names are `C<n>`, `S<k>`, `D<m>` (dihedral of order `m`), `Q8` and
//! products joined by `x`, e.g. `C2xC2xC2`. Products are built left to right,
//! so in `C2xC2xC2` the element `(a, b, c)` sits at `4a + 2b + c`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::finalg::{CarrierMap, FiniteGroup, FiniteSemigroup, Semilattice};
use crate::semibrace::ZappaSzep;
use crate::sslattice::SemilatticeSystem;
use crate::ybesol::SetSolution;

fn parse_factor(name: &str) -> Result<FiniteGroup> {
    let bad = || Error::MalformedTable(format!("unknown group `{name}`"));
    if name == "Q8" {
        return FiniteGroup::quaternion();
    }
    let (kind, digits) = name.split_at(1.min(name.len()));
    let n: usize = digits.parse().map_err(|_| bad())?;
    match kind {
        "C" if n >= 1 => FiniteGroup::cyclic(n),
        "S" if (1..=5).contains(&n) => FiniteGroup::symmetric(n),
        "D" if n >= 2 && n.is_multiple_of(2) => FiniteGroup::dihedral(n / 2),
        _ => Err(bad()),
    }
}

/// Parses a group name such as `C6`, `S3`, `D8`, `Q8` or `C2xC3`.
pub fn named_group(name: &str) -> Result<FiniteGroup> {
    let mut factors = name.split('x').map(str::trim);
    let first = parse_factor(factors.next().unwrap_or_default())?;
    factors.try_fold(first, |acc, f| Ok(acc.direct_product(&parse_factor(f)?)))
}

/// Parses a self-map of a group carrier.
///
/// Accepted names are `id`, `zero` (constant at the identity), `proj12` and
/// `proj23` (on a product of three groups, keep the first two or the last
/// two coordinates), and explicit value lists such as `0,0,2,2`.
pub fn named_map(group_name: &str, group: &FiniteGroup, name: &str) -> Result<CarrierMap> {
    let n = group.order();
    match name {
        "id" => Ok(CarrierMap::identity(n)),
        "zero" => CarrierMap::constant(n, n, group.identity()),
        "proj12" | "proj23" => {
            let factors: Vec<FiniteGroup> = group_name
                .split('x')
                .map(|f| parse_factor(f.trim()))
                .collect::<Result<_>>()?;
            if factors.len() != 3 {
                return Err(Error::MalformedMap(format!("{name} needs a product of three groups")));
            }
            let (m2, m3) = (factors[1].order(), factors[2].order());
            let keep_first = name == "proj12";
            CarrierMap::from_fn(n, n, |x| {
                let (a, b, c) = (x / (m2 * m3), (x / m3) % m2, x % m3);
                let (a, c) = if keep_first {
                    (a, factors[2].identity())
                } else {
                    (factors[0].identity(), c)
                };
                (a * m2 + b) * m3 + c
            })
        }
        list => {
            let values = list
                .split(',')
                .map(|v| v.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::MalformedMap(format!("unknown map `{name}`")))?;
            CarrierMap::new(n, n, values)
        }
    }
}

/// `C2 × C3` with both actions trivial and `φ ≡ 1`; the group is cyclic of order 6.
pub fn zappa_szep_cyclic() -> ZappaSzep {
    let (g, h) = (FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap());
    let phi = CarrierMap::constant(2, 3, 0).unwrap();
    ZappaSzep::trivial(g, h, phi)
}

/// `C2 ⋉ C3` with the generator of `C2` inverting `C3` and `φ ≡ 1`; the group is `S3`.
pub fn zappa_szep_symmetric() -> ZappaSzep {
    let (g, h) = (FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap());
    let auto = [
        CarrierMap::identity(3),
        CarrierMap::from_fn(3, 3, |u| (3 - u) % 3).unwrap(),
    ];
    let phi = CarrierMap::constant(2, 3, 0).unwrap();
    ZappaSzep::semidirect(g, h, &auto, phi)
}

/// Builds the named Zappa–Szép instance for `G`, `H` and an action name.
///
/// `trivial` uses trivial actions. `inversion` lets the non-identity
/// elements of `G` act on `H` by inversion, which requires `G = C2`.
pub fn zappa_szep(g: FiniteGroup, h: FiniteGroup, action: &str) -> Result<ZappaSzep> {
    let phi = CarrierMap::constant(g.order(), h.order(), h.identity())?;
    match action {
        "trivial" => Ok(ZappaSzep::trivial(g, h, phi)),
        "inversion" => {
            if g.order() != 2 {
                return Err(Error::NotMatchedPair("inversion action needs G of order 2".into()));
            }
            let invert = CarrierMap::from_fn(h.order(), h.order(), |u| h.inv(u))?;
            let auto: Vec<CarrierMap> = (0..2)
                .map(|b| {
                    if b == g.identity() {
                        CarrierMap::identity(h.order())
                    } else {
                        invert.clone()
                    }
                })
                .collect();
            Ok(ZappaSzep::semidirect(g, h, &auto, phi))
        }
        other => Err(Error::NotMatchedPair(format!("unknown action `{other}`"))),
    }
}

/// `r(x, y) = (x, c)`
pub fn projection_solution(order: usize, c: usize) -> Result<SetSolution> {
    SetSolution::from_fn(order, |x, _| (x, c))
}

/// `r(x, y) = (c, c)`
pub fn constant_solution(order: usize, c: usize) -> Result<SetSolution> {
    SetSolution::from_fn(order, |_, _| (c, c))
}

/// `r(x, y) = (f(x), x)` for an idempotent `f`.
pub fn retraction_solution(f: &CarrierMap) -> Result<SetSolution> {
    SetSolution::from_fn(f.source_order(), |x, _| (f.apply(x), x))
}

/// `r(x, y) = (y, y ▷ x)` for the conjugation quandle of the three
/// transpositions of `S3`: `y ▷ x` is `x` when `x = y` and the third point
/// otherwise. This map is bijective with `r³ = id`.
pub fn transposition_rack_solution() -> SetSolution {
    SetSolution::from_fn(3, |x, y| (y, if x == y { x } else { 3 - x - y })).expect("in range")
}

/// Small families of solutions used to populate random systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionFamily {
    /// `(y, x)`
    Twist,
    /// `(c, c)` with `c = param % n`
    Constant,
    /// `(f(x), x)` with `f(x) = min(x, param % n)`
    Retraction,
    /// `(x, c)` with `c = param % n`
    Projection,
}

impl SolutionFamily {
    pub const ALL: [SolutionFamily; 4] = [
        SolutionFamily::Twist,
        SolutionFamily::Constant,
        SolutionFamily::Retraction,
        SolutionFamily::Projection,
    ];

    pub fn build(self, order: usize, param: usize) -> Result<SetSolution> {
        if order == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        let c = param % order;
        match self {
            SolutionFamily::Twist => SetSolution::twist(order),
            SolutionFamily::Constant => constant_solution(order, c),
            SolutionFamily::Retraction => retraction_solution(&CarrierMap::from_fn(order, order, |x| x.min(c))?),
            SolutionFamily::Projection => projection_solution(order, c),
        }
    }
}

/// Every semilattice table on `{0, .., m-1}`, in lexicographic order of the
/// underlying partial order bitmask.
pub fn semilattices(m: usize) -> Vec<Semilattice> {
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|(a, b)| a != b)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        // geq[a][b] means a >= b
        let mut geq = vec![vec![false; m]; m];
        for (a, row) in geq.iter_mut().enumerate() {
            row[a] = true;
        }
        for (bit, &(a, b)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                geq[a][b] = true;
            }
        }
        let antisymmetric = pairs.iter().all(|&(a, b)| !(geq[a][b] && geq[b][a]));
        let transitive = (0..m).all(|a| (0..m).all(|b| (0..m).all(|c| !(geq[a][b] && geq[b][c]) || geq[a][c])));
        if !antisymmetric || !transitive {
            continue;
        }
        let meet = |a: usize, b: usize| -> Option<usize> {
            let lower: Vec<usize> = (0..m).filter(|&c| geq[a][c] && geq[b][c]).collect();
            lower.iter().copied().find(|&g| lower.iter().all(|&c| geq[g][c]))
        };
        let rows: Option<Vec<Vec<usize>>> = (0..m).map(|a| (0..m).map(|b| meet(a, b)).collect()).collect();
        if let Some(rows) = rows {
            let y = FiniteSemigroup::from_rows(&rows).and_then(Semilattice::new);
            out.push(y.expect("meet tables are semilattices"));
        }
    }
    out
}

/// Glues arbitrary solutions with constant maps: `φ_{α,β}` is constant at the
/// least `c` with `r_β(c, c) = (c, c)`. Such maps are always equivariant and
/// transitive.
pub fn constant_gluing(y: Semilattice, payloads: Vec<SetSolution>) -> Result<SemilatticeSystem<SetSolution>> {
    let points = payloads
        .iter()
        .enumerate()
        .map(|(beta, r)| {
            (0..r.order())
                .find(|&c| r.apply(c, c) == (c, c))
                .ok_or_else(|| Error::SystemMalformed(format!("payload {beta} has no diagonal fixed point")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut phi = BTreeMap::new();
    for (alpha, beta) in y.comparable_pairs() {
        if alpha != beta {
            let map = CarrierMap::constant(payloads[alpha].order(), payloads[beta].order(), points[beta])?;
            phi.insert((alpha, beta), map);
        }
    }
    SemilatticeSystem::new(y, payloads, phi)
}

/// The same solution on every component, glued by identity maps.
pub fn identity_gluing(y: Semilattice, r: SetSolution) -> Result<SemilatticeSystem<SetSolution>> {
    let phi = y
        .comparable_pairs()
        .into_iter()
        .map(|pair| (pair, CarrierMap::identity(r.order())))
        .collect();
    let payloads = vec![r; y.order()];
    SemilatticeSystem::new(y, payloads, phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(named_group("C2xC2xC2").unwrap().order(), 8);
        assert_eq!(named_group("S3").unwrap().order(), 6);
        assert_eq!(named_group("D8").unwrap().order(), 8);
        assert_eq!(named_group("Q8").unwrap().order(), 8);
        assert!(named_group("X3").is_err());
        assert!(named_group("C").is_err());
        let g = named_group("C2xC2xC2").unwrap();
        let p12 = named_map("C2xC2xC2", &g, "proj12").unwrap();
        let p23 = named_map("C2xC2xC2", &g, "proj23").unwrap();
        assert_eq!(p12.as_slice(), (0..8).map(|x| x & 0b110).collect::<Vec<_>>().as_slice());
        assert_eq!(p23.as_slice(), (0..8).map(|x| x & 0b011).collect::<Vec<_>>().as_slice());
        assert_eq!(
            named_map("C4", &named_group("C4").unwrap(), "0,2,0,2")
                .unwrap()
                .apply(1),
            2
        );
        assert!(named_map("C4", &named_group("C4").unwrap(), "proj12").is_err());
    }

    #[test]
    fn named_zappa_szep_matches_fixed_instances() {
        let g = named_group("C2").unwrap();
        let h = named_group("C3").unwrap();
        assert_eq!(
            zappa_szep(g.clone(), h.clone(), "trivial").unwrap(),
            zappa_szep_cyclic()
        );
        assert_eq!(zappa_szep(g, h, "inversion").unwrap(), zappa_szep_symmetric());
    }

    #[test]
    fn semilattice_counts() {
        // labelled commutative idempotent associative tables, counted by brute force
        let counts: Vec<usize> = (1..=4).map(|m| semilattices(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 9, 76]);
    }

    #[test]
    fn gluings_are_valid() {
        let y = Semilattice::chain(3).unwrap();
        let payloads = vec![
            SolutionFamily::Projection.build(3, 1).unwrap(),
            SolutionFamily::Twist.build(2, 0).unwrap(),
            SolutionFamily::Retraction.build(4, 2).unwrap(),
        ];
        let sys = constant_gluing(y.clone(), payloads).unwrap();
        assert!(crate::sslattice::build_solution(&sys).is_ok());
        let sys = identity_gluing(y, SetSolution::twist(2).unwrap()).unwrap();
        assert!(crate::sslattice::build_solution(&sys).is_ok());
    }
}
