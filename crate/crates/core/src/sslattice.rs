//! Strong semilattices of solutions and of generalized left semi-braces.
//!
//! A system is a finite meet-semilattice `Y`, one payload per `α ∈ Y` on its
//! own carrier `X_α`, and maps `φ_{α,β}: X_α → X_β` for every `α ≥ β`. The
//! union carrier places `X_α` at the contiguous block `[offset_α, offset_α + |X_α|)`
//! in semilattice-element order. Operations on the union push both arguments
//! down to the meet component and evaluate there.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::finalg::{check_homomorphism, CarrierMap, Semilattice, Verdict};
use crate::semibrace::{associated_solution, check_solution_condition, GeneralizedLeftSemiBrace};
use crate::ybesol::{index_period, is_solution, SetSolution};

/// Anything that lives on a finite carrier.
pub trait Payload {
    fn carrier_order(&self) -> usize;
}

impl Payload for SetSolution {
    fn carrier_order(&self) -> usize {
        self.order()
    }
}

impl Payload for GeneralizedLeftSemiBrace {
    fn carrier_order(&self) -> usize {
        self.order()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilatticeSystem<P> {
    y: Semilattice,
    payloads: Vec<P>,
    phi: BTreeMap<(usize, usize), CarrierMap>,
    offsets: Vec<usize>,
}

impl<P: Payload> SemilatticeSystem<P> {
    /// Validates the layout and the identity and transitivity conditions. Missing diagonal maps
    /// `φ_{α,α}` are filled in with the identity.
    pub fn new(y: Semilattice, payloads: Vec<P>, mut phi: BTreeMap<(usize, usize), CarrierMap>) -> Result<Self> {
        let m = y.order();
        if payloads.len() != m {
            return Err(Error::SystemMalformed(format!(
                "{} payloads for a semilattice of order {m}",
                payloads.len()
            )));
        }
        for &(alpha, beta) in phi.keys() {
            if alpha >= m || beta >= m || !y.geq(alpha, beta) {
                return Err(Error::SystemMalformed(format!(
                    "phi({alpha},{beta}) given for an incomparable or out-of-range pair"
                )));
            }
        }
        for (alpha, p) in payloads.iter().enumerate() {
            phi.entry((alpha, alpha))
                .or_insert_with(|| CarrierMap::identity(p.carrier_order()));
        }
        for (alpha, beta) in y.comparable_pairs() {
            let map = phi
                .get(&(alpha, beta))
                .ok_or_else(|| Error::SystemMalformed(format!("phi({alpha},{beta}) is missing")))?;
            let (src, dst) = (payloads[alpha].carrier_order(), payloads[beta].carrier_order());
            if map.source_order() != src || map.target_order() != dst {
                return Err(Error::SystemMalformed(format!(
                    "phi({alpha},{beta}) maps {} -> {}, expected {src} -> {dst}",
                    map.source_order(),
                    map.target_order()
                )));
            }
        }
        for alpha in 0..m {
            if !phi[&(alpha, alpha)].is_identity() {
                return Err(Error::IdentityConditionFailed { alpha });
            }
        }
        for (alpha, beta) in y.comparable_pairs() {
            for gamma in (0..m).filter(|&g| y.geq(beta, g)) {
                let composed = phi[&(alpha, beta)].then(&phi[&(beta, gamma)])?;
                if composed != phi[&(alpha, gamma)] {
                    return Err(Error::TransitivityFailed { alpha, beta, gamma });
                }
            }
        }
        let mut offsets = Vec::with_capacity(m);
        let mut next = 0;
        for p in &payloads {
            offsets.push(next);
            next += p.carrier_order();
        }
        Ok(SemilatticeSystem {
            y,
            payloads,
            phi,
            offsets,
        })
    }

    pub fn semilattice(&self) -> &Semilattice {
        &self.y
    }

    pub fn payloads(&self) -> &[P] {
        &self.payloads
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// All structure maps, keyed by `(α, β)` with `α ≥ β`.
    pub fn maps(&self) -> &BTreeMap<(usize, usize), CarrierMap> {
        &self.phi
    }

    pub fn total_order(&self) -> usize {
        self.payloads.iter().map(Payload::carrier_order).sum()
    }

    /// `φ_{α,β}`; asking for an incomparable pair is a caller bug.
    pub fn phi(&self, alpha: usize, beta: usize) -> Result<&CarrierMap> {
        self.phi
            .get(&(alpha, beta))
            .ok_or_else(|| Error::SystemMalformed(format!("no map phi({alpha},{beta}): {alpha} is not >= {beta}")))
    }

    /// Component and local index of a point of the union carrier.
    pub fn locate(&self, x: usize) -> (usize, usize) {
        let alpha = self.offsets.partition_point(|&o| o <= x) - 1;
        (alpha, x - self.offsets[alpha])
    }

    pub fn global(&self, alpha: usize, local: usize) -> usize {
        self.offsets[alpha] + local
    }

    /// Same semilattice and maps around a new family of payloads.
    pub fn with_payloads<Q: Payload>(&self, payloads: Vec<Q>) -> Result<SemilatticeSystem<Q>> {
        SemilatticeSystem::new(self.y.clone(), payloads, self.phi.clone())
    }

    /// Pushes a global point and its partner's component into their meet:
    /// returns `(meet, φ_{α,αβ}(x))` in local coordinates.
    fn push_down(&self, x: usize, other_component: usize) -> (usize, usize) {
        let (alpha, lx) = self.locate(x);
        let nu = self.y.meet(alpha, other_component);
        (nu, self.phi[&(alpha, nu)].apply(lx))
    }

    fn pushed_pair(&self, x: usize, y: usize) -> (usize, usize, usize) {
        let (alpha, _) = self.locate(x);
        let (beta, _) = self.locate(y);
        let (nu, px) = self.push_down(x, beta);
        let (_, py) = self.push_down(y, alpha);
        (nu, px, py)
    }
}

/// `(φ×φ) r_α = r_β (φ×φ)` for every `α ≥ β`; witness `(α, β, x, y)` in
/// local coordinates of `X_α`.
pub fn check_equivariance(sys: &SemilatticeSystem<SetSolution>) -> Verdict<(usize, usize, usize, usize)> {
    let failure = sys.y.comparable_pairs().into_iter().find_map(|(alpha, beta)| {
        let phi = &sys.phi[&(alpha, beta)];
        let (ra, rb) = (&sys.payloads[alpha], &sys.payloads[beta]);
        let n = ra.order();
        (0..n).find_map(|x| {
            (0..n)
                .find(|&y| {
                    let (u, v) = ra.apply(x, y);
                    (phi.apply(u), phi.apply(v)) != rb.apply(phi.apply(x), phi.apply(y))
                })
                .map(|y| (alpha, beta, x, y))
        })
    });
    Verdict::from_failure(failure)
}

fn combine_solutions(sys: &SemilatticeSystem<SetSolution>) -> SetSolution {
    SetSolution::from_fn(sys.total_order(), |x, y| {
        let (nu, px, py) = sys.pushed_pair(x, y);
        let (u, v) = sys.payloads[nu].apply(px, py);
        (sys.global(nu, u), sys.global(nu, v))
    })
    .expect("components stay inside their blocks")
}

/// `r(x, y) = r_{αβ}(φ_{α,αβ}(x), φ_{β,αβ}(y))` on the union carrier.
pub fn build_solution(sys: &SemilatticeSystem<SetSolution>) -> Result<SetSolution> {
    if let Some(alpha) = sys.payloads.iter().position(|r| !is_solution(r).holds()) {
        return Err(Error::ComponentNotSolution(alpha));
    }
    if let Verdict::Fails((alpha, beta, x, y)) = check_equivariance(sys) {
        return Err(Error::EquivarianceFailed { alpha, beta, x, y });
    }
    let r = combine_solutions(sys);
    if let Verdict::Fails(t) = is_solution(&r) {
        return Err(Error::InternalInconsistency(format!(
            "combined map fails the braid relation at {t:?}"
        )));
    }
    Ok(r)
}

/// Union structure with `a ⋆ b = φ_{α,αβ}(a) ⋆ φ_{β,αβ}(b)` for both operations.
pub fn build_generalized_semibrace(
    sys: &SemilatticeSystem<GeneralizedLeftSemiBrace>,
) -> Result<GeneralizedLeftSemiBrace> {
    for (alpha, beta) in sys.y.comparable_pairs() {
        let phi = &sys.phi[&(alpha, beta)];
        let (sa, sb) = (&sys.payloads[alpha], &sys.payloads[beta]);
        for (operation, source, target) in [
            ("+", sa.additive().table(), sb.additive().table()),
            ("∘", sa.multiplicative().table(), sb.multiplicative().table()),
        ] {
            if let Verdict::Fails((a, b)) = check_homomorphism(phi, source, target)? {
                return Err(Error::PhiNotHomomorphism {
                    alpha,
                    beta,
                    a,
                    b,
                    operation,
                });
            }
        }
    }
    let n = sys.total_order();
    let table = |op: &dyn Fn(&GeneralizedLeftSemiBrace, usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (nu, px, py) = sys.pushed_pair(x, y);
                        sys.global(nu, op(&sys.payloads[nu], px, py))
                    })
                    .collect()
            })
            .collect()
    };
    let add = table(&|s, a, b| s.add(a, b));
    let mul = table(&|s, a, b| s.mul(a, b));
    let union = GeneralizedLeftSemiBrace::from_rows(&add, &mul)?;
    let all_left = sys.payloads.iter().all(|p| p.to_left_semibrace().is_some());
    if all_left && !union.multiplicative().is_clifford() {
        return Err(Error::InternalInconsistency(
            "semilattice of groups is not a Clifford semigroup".into(),
        ));
    }
    Ok(union)
}

/// Whether a payload yields a solution: the carrier-level condition for left
/// semi-braces, the braid check of the associated map otherwise.
fn payload_condition_holds(s: &GeneralizedLeftSemiBrace) -> bool {
    match s.to_left_semibrace() {
        Some(left) => check_solution_condition(&left).holds(),
        None => is_solution(&associated_solution(s)).holds(),
    }
}

/// The associated map of the union semi-brace, cross-checked table-for-table
/// against the strong semilattice of the per-component associated solutions.
pub fn semibrace_semilattice_solution(sys: &SemilatticeSystem<GeneralizedLeftSemiBrace>) -> Result<SetSolution> {
    if let Some(alpha) = sys.payloads.iter().position(|p| !payload_condition_holds(p)) {
        return Err(Error::ConditionFailed(alpha));
    }
    let union = build_generalized_semibrace(sys)?;
    let direct = associated_solution(&union);
    let components = sys.with_payloads(sys.payloads.iter().map(associated_solution).collect())?;
    let glued = build_solution(&components)?;
    if glued != direct {
        return Err(Error::InternalInconsistency(
            "associated map of the union differs from the glued solution".into(),
        ));
    }
    Ok(direct)
}

/// `(max{1, ind r_α}, lcm{per r_α})`, or the single component's own pair
/// when `Y` has one element.
pub fn predicted_index_period(sys: &SemilatticeSystem<SetSolution>) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = sys.payloads.iter().map(index_period).collect();
    if let [single] = pairs.as_slice() {
        return *single;
    }
    let index = pairs.iter().map(|p| p.0).max().unwrap_or(0).max(1);
    let period = pairs.iter().fold(1, |acc, p| acc.lcm(&p.1));
    (index, period)
}

/// Index and period of the combined solution, computed from the components
/// and confirmed by iterating the combined map.
pub fn composed_index_period(sys: &SemilatticeSystem<SetSolution>) -> Result<(usize, usize)> {
    let (predicted_index, predicted_period) = predicted_index_period(sys);
    let (index, period) = index_period(&build_solution(sys)?);
    if (index, period) != (predicted_index, predicted_period) {
        return Err(Error::TheoremMismatch {
            predicted_index,
            predicted_period,
            index,
            period,
        });
    }
    Ok((index, period))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::FiniteGroup;
    use crate::semibrace::LeftSemiBrace;

    fn chain2_system(ra: SetSolution, rb: SetSolution, phi: CarrierMap) -> Result<SemilatticeSystem<SetSolution>> {
        // 1 > 0 in the 2-chain
        SemilatticeSystem::new(
            Semilattice::chain(2).unwrap(),
            vec![rb, ra],
            BTreeMap::from([((1, 0), phi)]),
        )
    }

    #[test]
    fn layout_and_locate() {
        let sys = chain2_system(
            SetSolution::twist(3).unwrap(),
            SetSolution::twist(2).unwrap(),
            CarrierMap::constant(3, 2, 0).unwrap(),
        )
        .unwrap();
        assert_eq!(sys.offsets(), &[0, 2]);
        assert_eq!(sys.total_order(), 5);
        assert_eq!(sys.locate(0), (0, 0));
        assert_eq!(sys.locate(1), (0, 1));
        assert_eq!(sys.locate(2), (1, 0));
        assert_eq!(sys.locate(4), (1, 2));
        assert!(matches!(sys.phi(0, 1), Err(Error::SystemMalformed(_))));
    }

    #[test]
    fn malformed_systems() {
        let t2 = || SetSolution::twist(2).unwrap();
        // missing phi(1,0)
        assert!(matches!(
            SemilatticeSystem::new(Semilattice::chain(2).unwrap(), vec![t2(), t2()], BTreeMap::new()),
            Err(Error::SystemMalformed(_))
        ));
        // phi given for 0 -> 1, which is not comparable that way
        let bad = BTreeMap::from([((0, 1), CarrierMap::identity(2))]);
        assert!(matches!(
            SemilatticeSystem::new(Semilattice::chain(2).unwrap(), vec![t2(), t2()], bad),
            Err(Error::SystemMalformed(_))
        ));
        // non-identity diagonal
        let swap = CarrierMap::new(2, 2, vec![1, 0]).unwrap();
        let maps = BTreeMap::from([((0, 0), swap), ((1, 0), CarrierMap::identity(2))]);
        assert_eq!(
            SemilatticeSystem::new(Semilattice::chain(2).unwrap(), vec![t2(), t2()], maps).unwrap_err(),
            Error::IdentityConditionFailed { alpha: 0 }
        );
    }

    #[test]
    fn transitivity_is_checked() {
        let t2 = || SetSolution::twist(2).unwrap();
        let swap = CarrierMap::new(2, 2, vec![1, 0]).unwrap();
        let id = CarrierMap::identity(2);
        // 2 > 1 > 0: phi(1,0) ∘ phi(2,1) = swap but phi(2,0) = id
        let maps = BTreeMap::from([((2, 1), swap.clone()), ((1, 0), id.clone()), ((2, 0), id)]);
        assert_eq!(
            SemilatticeSystem::new(Semilattice::chain(3).unwrap(), vec![t2(), t2(), t2()], maps).unwrap_err(),
            Error::TransitivityFailed {
                alpha: 2,
                beta: 1,
                gamma: 0
            }
        );
    }

    #[test]
    fn restriction_recovers_components() {
        let ra = SetSolution::twist(2).unwrap();
        let rb = SetSolution::from_fn(3, |x, _| (x, 1)).unwrap();
        let sys = chain2_system(ra.clone(), rb.clone(), CarrierMap::constant(2, 3, 1).unwrap()).unwrap();
        let r = build_solution(&sys).unwrap();
        for (alpha, comp) in [(0, &rb), (1, &ra)] {
            let n = comp.order();
            for x in 0..n {
                for y in 0..n {
                    let (u, v) = r.apply(sys.global(alpha, x), sys.global(alpha, y));
                    assert_eq!(
                        (u, v),
                        (
                            sys.global(alpha, comp.apply(x, y).0),
                            sys.global(alpha, comp.apply(x, y).1)
                        )
                    );
                }
            }
        }
    }

    #[test]
    fn equivariance_failure_is_reported() {
        // r_β(x, y) = (σ(y), x) with σ the transposition of 0,1 on 3 points;
        // φ ≡ 0 misses the fixed point of σ
        let sigma = [1, 0, 2];
        let rb = SetSolution::from_fn(3, |x, y| (sigma[y], x)).unwrap();
        assert!(is_solution(&rb).holds());
        let sys = chain2_system(
            SetSolution::twist(2).unwrap(),
            rb.clone(),
            CarrierMap::constant(2, 3, 0).unwrap(),
        )
        .unwrap();
        assert_eq!(check_equivariance(&sys), Verdict::Fails((1, 0, 0, 0)));
        assert!(matches!(build_solution(&sys), Err(Error::EquivarianceFailed { .. })));
        // φ ≡ 2 lands on the fixed point of σ and is equivariant
        let ok = chain2_system(
            SetSolution::twist(2).unwrap(),
            rb,
            CarrierMap::constant(2, 3, 2).unwrap(),
        )
        .unwrap();
        assert!(check_equivariance(&ok).holds());
    }

    #[test]
    fn component_not_solution() {
        let bad = SetSolution::from_fn(2, |x, y| ((x + 1) % 2, y)).unwrap();
        let sys = chain2_system(SetSolution::twist(2).unwrap(), bad, CarrierMap::identity(2)).unwrap();
        assert_eq!(build_solution(&sys).unwrap_err(), Error::ComponentNotSolution(0));
    }

    #[test]
    fn single_point_bijective_keeps_index_zero() {
        let sys = SemilatticeSystem::new(
            Semilattice::chain(1).unwrap(),
            vec![SetSolution::twist(3).unwrap()],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(composed_index_period(&sys).unwrap(), (0, 2));
    }

    #[test]
    fn brace_chain_is_clifford() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let brace = LeftSemiBrace::new(c2.semigroup().clone(), c2.clone())
            .unwrap()
            .generalized()
            .clone();
        let trivial = LeftSemiBrace::new(
            FiniteGroup::cyclic(1).unwrap().semigroup().clone(),
            FiniteGroup::cyclic(1).unwrap(),
        )
        .unwrap()
        .generalized()
        .clone();
        let sys = SemilatticeSystem::new(
            Semilattice::chain(2).unwrap(),
            vec![trivial, brace],
            BTreeMap::from([((1, 0), CarrierMap::constant(2, 1, 0).unwrap())]),
        )
        .unwrap();
        let union = build_generalized_semibrace(&sys).unwrap();
        assert_eq!(union.order(), 3);
        assert!(union.multiplicative().is_clifford());
        assert!(union.to_left_semibrace().is_none());
        let r = semibrace_semilattice_solution(&sys).unwrap();
        assert!(is_solution(&r).holds());
    }

    #[test]
    fn non_homomorphic_phi_is_rejected() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let brace = || {
            LeftSemiBrace::new(c2.semigroup().clone(), c2.clone())
                .unwrap()
                .generalized()
                .clone()
        };
        let sys = SemilatticeSystem::new(
            Semilattice::chain(2).unwrap(),
            vec![brace(), brace()],
            BTreeMap::from([((1, 0), CarrierMap::constant(2, 2, 1).unwrap())]),
        )
        .unwrap();
        assert_eq!(
            build_generalized_semibrace(&sys).unwrap_err(),
            Error::PhiNotHomomorphism {
                alpha: 1,
                beta: 0,
                a: 0,
                b: 0,
                operation: "+"
            }
        );
    }
}
