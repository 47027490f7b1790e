//! Left semi-braces and generalized left semi-braces.
//!
//! A generalized left semi-brace is a pair of operations on one carrier, a
//! semigroup `+` and a completely regular `∘`, tied together by
//!
//! ```text
//! a ∘ (b + c) = a ∘ b + a ∘ (a⁻ + c)
//! ```
//!
//! When `∘` is a group the structure is a left semi-brace and its identity is
//! written `0`. This module verifies the identity (and its right-handed
//! mirror), exposes the maps `λ_a(b) = a ∘ (a⁻ + b)` and
//! `ρ_b(a) = (a⁻ + b)⁻ ∘ b`, builds the standard families of examples, and
//! checks the structural facts every finite left semi-brace must satisfy.

use std::collections::BTreeSet;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::finalg::{
    check_homomorphism, complete_regular_inverses, first_failure, CarrierMap, CayleyTable, CompletelyRegular,
    FiniteGroup, FiniteSemigroup, Triple, Verdict,
};
use crate::ybesol::SetSolution;

/// `(S, +, ∘)` with `∘` completely regular and the left identity verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedLeftSemiBrace {
    add: FiniteSemigroup,
    mul: CompletelyRegular,
}

fn key1_failure(add: &CayleyTable, mul: &CompletelyRegular) -> Option<Triple> {
    let n = add.order();
    first_failure(n, |a| {
        let ainv = mul.inv(a);
        for b in 0..n {
            let ab = mul.op(a, b);
            for c in 0..n {
                let lhs = mul.op(a, add.op(b, c));
                let rhs = add.op(ab, mul.op(a, add.op(ainv, c)));
                if lhs != rhs {
                    return Some((a, b, c));
                }
            }
        }
        None
    })
}

fn key2_failure(add: &CayleyTable, mul: &CompletelyRegular) -> Option<Triple> {
    let n = add.order();
    first_failure(n, |a| {
        for b in 0..n {
            let ab = add.op(a, b);
            for c in 0..n {
                let lhs = mul.op(ab, c);
                let rhs = add.op(mul.op(add.op(a, mul.inv(c)), c), mul.op(b, c));
                if lhs != rhs {
                    return Some((a, b, c));
                }
            }
        }
        None
    })
}

fn check_same_carrier(add: &CayleyTable, mul: &CayleyTable) -> Result<()> {
    if add.order() != mul.order() {
        return Err(Error::MalformedTable(format!(
            "additive table has order {}, multiplicative table has order {}",
            add.order(),
            mul.order()
        )));
    }
    Ok(())
}

impl GeneralizedLeftSemiBrace {
    pub fn new(add: FiniteSemigroup, mul: CompletelyRegular) -> Result<Self> {
        check_same_carrier(&add, &mul)?;
        if let Some((a, b, c)) = key1_failure(&add, &mul) {
            return Err(Error::KeyIdentityFailed(a, b, c));
        }
        Ok(GeneralizedLeftSemiBrace { add, mul })
    }

    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        let add = FiniteSemigroup::from_rows(add)?;
        let mul = CompletelyRegular::from_rows(mul)?;
        Self::new(add, mul)
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &FiniteSemigroup {
        &self.add
    }

    pub fn multiplicative(&self) -> &CompletelyRegular {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    /// `a⁻` in `(S, ∘)`.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// `a⁰ = a ∘ a⁻`
    #[inline]
    pub fn idem(&self, a: usize) -> usize {
        self.mul.idem(a)
    }

    /// `λ_a(b) = a ∘ (a⁻ + b)`
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.mul(a, self.add(self.inv(a), b))
    }

    /// `ρ_b(a) = (a⁻ + b)⁻ ∘ b`
    #[inline]
    pub fn rho(&self, b: usize, a: usize) -> usize {
        self.mul(self.inv(self.add(self.inv(a), b)), b)
    }

    pub fn is_generalized_right(&self) -> bool {
        key2_failure(&self.add, &self.mul).is_none()
    }

    /// Upgrades to a left semi-brace when `∘` is a group.
    pub fn to_left_semibrace(&self) -> Option<LeftSemiBrace> {
        let group = self.mul.to_group()?;
        Some(LeftSemiBrace {
            inner: self.clone(),
            group,
        })
    }
}

/// A generalized left semi-brace whose multiplicative semigroup is a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftSemiBrace {
    inner: GeneralizedLeftSemiBrace,
    group: FiniteGroup,
}

impl Deref for LeftSemiBrace {
    type Target = GeneralizedLeftSemiBrace;

    fn deref(&self) -> &GeneralizedLeftSemiBrace {
        &self.inner
    }
}

impl LeftSemiBrace {
    pub fn new(add: FiniteSemigroup, group: FiniteGroup) -> Result<Self> {
        let inner = GeneralizedLeftSemiBrace::new(add, group.completely_regular())?;
        Ok(LeftSemiBrace { inner, group })
    }

    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        Self::new(FiniteSemigroup::from_rows(add)?, FiniteGroup::from_rows(mul)?)
    }

    /// The identity of `(B, ∘)`.
    pub fn zero(&self) -> usize {
        self.group.identity()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn generalized(&self) -> &GeneralizedLeftSemiBrace {
        &self.inner
    }
}

/// Everything [`verify_generalized_left`] learns about a pair of tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemibraceVerdict {
    pub generalized_left: Verdict<Triple>,
    pub generalized_right: Verdict<Triple>,
    pub multiplicative_group: bool,
    pub left_cancellative: bool,
    pub completely_simple_additive: bool,
}

impl SemibraceVerdict {
    pub fn left_semibrace(&self) -> bool {
        self.multiplicative_group && self.generalized_left.holds()
    }

    pub fn generalized_two_sided(&self) -> bool {
        self.generalized_left.holds() && self.generalized_right.holds()
    }

    pub fn tags(&self) -> Vec<&'static str> {
        let mut tags = Vec::new();
        if self.left_semibrace() {
            tags.push("left_semibrace");
        }
        if self.generalized_left.holds() {
            tags.push("generalized_left");
        }
        if self.generalized_right.holds() {
            tags.push("generalized_right");
        }
        if self.generalized_two_sided() {
            tags.push("generalized_two_sided");
        }
        if self.left_cancellative {
            tags.push("left_cancellative");
        }
        if self.completely_simple_additive {
            tags.push("completely_simple_additive");
        }
        tags
    }
}

/// Scans the left identity on all triples and tags the structure.
pub fn verify_generalized_left(add: &FiniteSemigroup, mul: &FiniteSemigroup) -> Result<SemibraceVerdict> {
    check_same_carrier(add, mul)?;
    let cr = complete_regular_inverses(mul)?;
    Ok(SemibraceVerdict {
        generalized_left: Verdict::from_failure(key1_failure(add, &cr)),
        generalized_right: Verdict::from_failure(key2_failure(add, &cr)),
        multiplicative_group: cr.to_group().is_some(),
        left_cancellative: add.is_left_cancellative(),
        completely_simple_additive: add.is_completely_simple(),
    })
}

/// `(a + b) ∘ c = (a + c⁻) ∘ c + b ∘ c` on all triples.
pub fn verify_generalized_right(add: &FiniteSemigroup, mul: &FiniteSemigroup) -> Result<Verdict<Triple>> {
    check_same_carrier(add, mul)?;
    let cr = complete_regular_inverses(mul)?;
    Ok(Verdict::from_failure(key2_failure(add, &cr)))
}

pub fn lambda_of(s: &GeneralizedLeftSemiBrace, a: usize) -> CarrierMap {
    let n = s.order();
    CarrierMap::from_fn(n, n, |b| s.lambda(a, b)).expect("lambda stays in the carrier")
}

pub fn rho_of(s: &LeftSemiBrace, b: usize) -> CarrierMap {
    let n = s.order();
    CarrierMap::from_fn(n, n, |a| s.rho(b, a)).expect("rho stays in the carrier")
}

/// Which λ identity failed in [`check_lambda_identities`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaIdentity {
    /// `λ_a(x + y) = λ_a(x) + λ_a(y)`, witness `(a, x, y)`.
    Additive,
    /// `λ_{a∘b}(x) = (a∘b)⁰ + λ_a λ_b(x)`, witness `(a, b, x)`.
    Composition,
}

pub fn check_lambda_identities(s: &GeneralizedLeftSemiBrace) -> Verdict<(LambdaIdentity, Triple)> {
    let n = s.order();
    let additive = first_failure(n, |a| {
        for x in 0..n {
            for y in 0..n {
                if s.lambda(a, s.add(x, y)) != s.add(s.lambda(a, x), s.lambda(a, y)) {
                    return Some((LambdaIdentity::Additive, (a, x, y)));
                }
            }
        }
        None
    });
    let failure = additive.or_else(|| {
        first_failure(n, |a| {
            for b in 0..n {
                let ab = s.mul(a, b);
                for x in 0..n {
                    if s.lambda(ab, x) != s.add(s.idem(ab), s.lambda(a, s.lambda(b, x))) {
                        return Some((LambdaIdentity::Composition, (a, b, x)));
                    }
                }
            }
            None
        })
    });
    Verdict::from_failure(failure)
}

/// The five structural facts about `0` in a left semi-brace, with the sets
/// `B + 0` and `0 + B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop22Report {
    pub zero_is_middle_unit: bool,
    pub zero_is_idempotent: bool,
    pub sum_covers_carrier: bool,
    pub right_translate_is_subgroup: bool,
    pub left_translate_is_subsemigroup: bool,
    /// `B + 0`
    pub right_translate: Vec<usize>,
    /// `0 + B`
    pub left_translate: Vec<usize>,
}

impl Prop22Report {
    pub fn all_hold(&self) -> bool {
        self.zero_is_middle_unit
            && self.zero_is_idempotent
            && self.sum_covers_carrier
            && self.right_translate_is_subgroup
            && self.left_translate_is_subsemigroup
    }
}

fn is_subgroup(g: &FiniteGroup, subset: &[usize]) -> bool {
    !subset.is_empty() && g.is_closed(subset) && subset.iter().all(|&x| subset.contains(&g.inv(x)))
}

pub fn check_prop22(s: &LeftSemiBrace) -> Prop22Report {
    let n = s.order();
    let zero = s.zero();
    let all: Vec<usize> = (0..n).collect();
    let add = s.additive();
    let right_translate = add.product_set(&all, &[zero]);
    let left_translate = add.product_set(&[zero], &all);
    Prop22Report {
        zero_is_middle_unit: add.is_middle_unit(zero),
        zero_is_idempotent: add.op(zero, zero) == zero,
        sum_covers_carrier: add.product_set(&all, &all).len() == n,
        right_translate_is_subgroup: is_subgroup(s.group(), &right_translate),
        left_translate_is_subsemigroup: s.group().is_closed(&left_translate),
        right_translate,
        left_translate,
    }
}

/// Least middle unit `e` of the table with `e + e != e`.
pub fn middle_units_idempotent(add: &CayleyTable) -> Verdict<usize> {
    Verdict::from_failure(add.middle_units().into_iter().find(|&e| add.op(e, e) != e))
}

pub fn check_middle_units_idempotent(s: &LeftSemiBrace) -> Verdict<usize> {
    middle_units_idempotent(s.additive())
}

/// `B = I + G + Λ` for a completely simple additive semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangularDecomposition {
    /// `I = E(B + 0)`, a left zero semigroup.
    pub left_zero: Vec<usize>,
    /// `G = 0 + B + 0`, a group under `+`.
    pub group: Vec<usize>,
    /// `Λ = E(0 + B)`, a right zero semigroup.
    pub right_zero: Vec<usize>,
    /// `E(B) = I + Λ`
    pub idempotents: Vec<usize>,
}

pub fn rectangular_decomposition(s: &LeftSemiBrace) -> Result<RectangularDecomposition> {
    let n = s.order();
    let zero = s.zero();
    let add = s.additive();
    let all: Vec<usize> = (0..n).collect();
    let left_translate = add.product_set(&[zero], &all);
    if !is_subgroup(s.group(), &left_translate) {
        return Err(Error::NotCompletelySimple("0 + B is not a subgroup of (B, ∘)".into()));
    }
    if !add.is_completely_simple() {
        return Err(Error::NotCompletelySimple("(B, +) is not completely simple".into()));
    }
    let additive_idempotents =
        |xs: Vec<usize>| -> Vec<usize> { xs.into_iter().filter(|&x| add.op(x, x) == x).collect() };
    let left_zero = additive_idempotents(add.product_set(&all, &[zero]));
    let group = add.product_set(&left_translate, &[zero]);
    let right_zero = additive_idempotents(left_translate);
    let idempotents = add.idempotents();

    let fail = |what: &str| {
        Err(Error::InternalInconsistency(format!(
            "rectangular decomposition: {what}"
        )))
    };
    let mut sums = BTreeSet::new();
    for &i in &left_zero {
        for &g in &group {
            for &l in &right_zero {
                sums.insert(add.op(add.op(i, g), l));
            }
        }
    }
    if sums.len() != n || left_zero.len() * group.len() * right_zero.len() != n {
        return fail("sum map I × G × Λ → B is not bijective");
    }
    if add.product_set(&left_zero, &right_zero) != idempotents {
        return fail("E(B) != I + Λ");
    }
    let is_rectangular = idempotents.iter().all(|&x| {
        idempotents
            .iter()
            .all(|&y| idempotents.contains(&add.op(x, y)) && add.op(add.op(x, y), x) == x)
    });
    if !is_rectangular {
        return fail("E(B) is not a rectangular band");
    }
    if !left_zero.iter().all(|&x| left_zero.iter().all(|&y| add.op(x, y) == x)) {
        return fail("I is not a left zero semigroup");
    }
    if !right_zero
        .iter()
        .all(|&x| right_zero.iter().all(|&y| add.op(x, y) == y))
    {
        return fail("Λ is not a right zero semigroup");
    }
    let group_identity = group
        .iter()
        .copied()
        .find(|&e| group.iter().all(|&x| add.op(e, x) == x && add.op(x, e) == x));
    let is_group = add.is_closed(&group)
        && group_identity.is_some_and(|e| group.iter().all(|&x| group.iter().any(|&y| add.op(x, y) == e)));
    if !is_group {
        return fail("G is not a group under +");
    }
    Ok(RectangularDecomposition {
        left_zero,
        group,
        right_zero,
        idempotents,
    })
}

/// Re-runs the structural checks that hold on every finite left semi-brace.
pub fn assert_left_semibrace_facts(s: &LeftSemiBrace) -> Result<()> {
    if !check_prop22(s).all_hold() {
        return Err(Error::InternalInconsistency("structural facts about 0 fail".into()));
    }
    if let Verdict::Fails(e) = check_middle_units_idempotent(s) {
        return Err(Error::InternalInconsistency(format!(
            "middle unit {e} is not idempotent"
        )));
    }
    if let Verdict::Fails((which, t)) = check_lambda_identities(s) {
        return Err(Error::InternalInconsistency(format!(
            "lambda identity {which:?} fails at {t:?}"
        )));
    }
    Ok(())
}

fn check_idempotent_endomorphism(group: &FiniteGroup, f: &CarrierMap, name: &'static str) -> Result<()> {
    let endo = f.source_order() == group.order()
        && f.target_order() == group.order()
        && check_homomorphism(f, group, group)?.holds();
    if !endo || !f.is_idempotent() {
        return Err(Error::NotIdempotentEndomorphism(name));
    }
    Ok(())
}

/// `a + b = b ∘ fg(b⁻) ∘ f(a)` for commuting idempotent endomorphisms `f`, `g`.
pub fn build_fg_family(group: &FiniteGroup, f: &CarrierMap, g: &CarrierMap) -> Result<LeftSemiBrace> {
    if f.source_order() != group.order() || f.target_order() != group.order() {
        return Err(Error::NotIdempotentEndomorphism("f"));
    }
    if g.source_order() != group.order() || g.target_order() != group.order() {
        return Err(Error::NotIdempotentEndomorphism("g"));
    }
    check_idempotent_endomorphism(group, f, "f")?;
    check_idempotent_endomorphism(group, g, "g")?;
    let n = group.order();
    if let Some(x) = (0..n).find(|&x| f.apply(g.apply(x)) != g.apply(f.apply(x))) {
        return Err(Error::NonCommutingPair(x));
    }
    let add = FiniteSemigroup::from_fn(n, |a, b| {
        let fgb = f.apply(g.apply(group.inv(b)));
        group.op(group.op(b, fgb), f.apply(a))
    })?;
    let s = LeftSemiBrace::new(add, group.clone())?;
    assert_left_semibrace_facts(&s)?;
    Ok(s)
}

/// Data of the Zappa–Szép example: the group `G × H` with
/// `(a, u) ∘ (b, v) = (a ᵘb, uᵇ v)` and addition `(a, u) + (b, v) = (a, u φ(b) v)`.
///
/// `left_action[u][b]` is `ᵘb ∈ G` and `right_action[u][b]` is `uᵇ ∈ H`.
/// The pair `(a, u)` is stored at `a * |H| + u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZappaSzep {
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    pub left_action: Vec<Vec<usize>>,
    pub right_action: Vec<Vec<usize>>,
    pub phi: CarrierMap,
}

impl ZappaSzep {
    /// Both actions trivial: `ᵘb = b`, `uᵇ = u`.
    pub fn trivial(g: FiniteGroup, h: FiniteGroup, phi: CarrierMap) -> Self {
        let left_action = (0..h.order()).map(|_| (0..g.order()).collect()).collect();
        let right_action = (0..h.order()).map(|u| vec![u; g.order()]).collect();
        ZappaSzep {
            g,
            h,
            left_action,
            right_action,
            phi,
        }
    }

    /// Semidirect product `G ⋉ H`: `H` acts trivially on `G` and `G` acts on
    /// `H` on the right by the automorphisms `auto[b]`.
    pub fn semidirect(g: FiniteGroup, h: FiniteGroup, auto: &[CarrierMap], phi: CarrierMap) -> Self {
        let left_action = (0..h.order()).map(|_| (0..g.order()).collect()).collect();
        let right_action = (0..h.order())
            .map(|u| (0..g.order()).map(|b| auto[b].apply(u)).collect())
            .collect();
        ZappaSzep {
            g,
            h,
            left_action,
            right_action,
            phi,
        }
    }

    fn encode(&self, a: usize, u: usize) -> usize {
        a * self.h.order() + u
    }

    fn decode(&self, x: usize) -> (usize, usize) {
        (x / self.h.order(), x % self.h.order())
    }

    fn check_shapes(&self) -> Result<()> {
        let (gn, hn) = (self.g.order(), self.h.order());
        let bad = |m: &str| Err(Error::NotMatchedPair(m.into()));
        if self.left_action.len() != hn
            || self
                .left_action
                .iter()
                .any(|r| r.len() != gn || r.iter().any(|&v| v >= gn))
        {
            return bad("left action table must be |H| × |G| with values in G");
        }
        if self.right_action.len() != hn
            || self
                .right_action
                .iter()
                .any(|r| r.len() != gn || r.iter().any(|&v| v >= hn))
        {
            return bad("right action table must be |H| × |G| with values in H");
        }
        if self.phi.source_order() != gn || self.phi.target_order() != hn {
            return Err(Error::MalformedMap("phi must map G to H".into()));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<LeftSemiBrace> {
        self.check_shapes()?;
        if self.phi.apply(self.g.identity()) != self.h.identity() {
            return Err(Error::PhiIdentityViolated);
        }
        let n = self.g.order() * self.h.order();
        let mul = FiniteSemigroup::from_fn(n, |x, y| {
            let ((a, u), (b, v)) = (self.decode(x), self.decode(y));
            let first = self.g.op(a, self.left_action[u][b]);
            let second = self.h.op(self.right_action[u][b], v);
            self.encode(first, second)
        })
        .map_err(|e| Error::NotMatchedPair(e.to_string()))?;
        let group = FiniteGroup::new(mul).map_err(|e| Error::NotMatchedPair(e.to_string()))?;
        let add = FiniteSemigroup::from_fn(n, |x, y| {
            let ((a, u), (b, v)) = (self.decode(x), self.decode(y));
            self.encode(a, self.h.op(self.h.op(u, self.phi.apply(b)), v))
        })?;
        let s = LeftSemiBrace::new(add, group)?;
        assert_left_semibrace_facts(&s)?;
        Ok(s)
    }

    /// `φ(b) v φ(c) = φ(b ᵛc) vᶜ` for all `b, c ∈ G`, `v ∈ H`; witness `(b, c, v)`.
    ///
    /// Coordinate form of `ρ_b ρ_a = ρ_{a∘b}` for this family, kept as a
    /// cross-check of [`check_rho_antihom`].
    pub fn rho_antihom_in_coordinates(&self) -> Verdict<Triple> {
        let (g, h, phi) = (&self.g, &self.h, &self.phi);
        let gn = g.order();
        Verdict::from_failure((0..gn).find_map(|b| {
            (0..gn).find_map(|c| {
                (0..h.order())
                    .find(|&v| {
                        let lhs = h.op(h.op(phi.apply(b), v), phi.apply(c));
                        let rhs = h.op(phi.apply(g.op(b, self.left_action[v][c])), self.right_action[v][c]);
                        lhs != rhs
                    })
                    .map(|v| (b, c, v))
            })
        }))
    }
}

pub fn build_zappa_szep(
    g: &FiniteGroup,
    h: &FiniteGroup,
    left_action: Vec<Vec<usize>>,
    right_action: Vec<Vec<usize>>,
    phi: &CarrierMap,
) -> Result<LeftSemiBrace> {
    ZappaSzep {
        g: g.clone(),
        h: h.clone(),
        left_action,
        right_action,
        phi: phi.clone(),
    }
    .build()
}

/// `ρ_{a∘b}(c) = ρ_b(ρ_a(c))` for all `a, b, c`; witness `(a, b, c)`.
pub fn check_rho_antihom(s: &LeftSemiBrace) -> Verdict<Triple> {
    let n = s.order();
    Verdict::from_failure(first_failure(n, |a| {
        for b in 0..n {
            let ab = s.mul(a, b);
            for c in 0..n {
                if s.rho(ab, c) != s.rho(b, s.rho(a, c)) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }))
}

/// `a + b = a ∘ b` on a Clifford semigroup.
pub fn build_clifford_semibrace(c: &CompletelyRegular) -> Result<GeneralizedLeftSemiBrace> {
    if let Some((e, x)) = c.non_central_idempotent() {
        return Err(Error::NotClifford(e, x));
    }
    GeneralizedLeftSemiBrace::new(c.semigroup().clone(), c.clone())
}

/// `a + b = b` over any completely regular semigroup.
pub fn build_rightzero_semibrace(c: &CompletelyRegular) -> Result<GeneralizedLeftSemiBrace> {
    GeneralizedLeftSemiBrace::new(FiniteSemigroup::right_zero(c.order())?, c.clone())
}

/// `a + b = a` over any completely regular semigroup.
pub fn build_leftzero_semibrace(c: &CompletelyRegular) -> Result<GeneralizedLeftSemiBrace> {
    GeneralizedLeftSemiBrace::new(FiniteSemigroup::left_zero(c.order())?, c.clone())
}

/// `a + λ_b(c) ∘ (0 + ρ_c(b)) = a + b ∘ (0 + c)` for all `a, b, c`;
/// equivalent to the associated map being a solution.
pub fn check_solution_condition(s: &LeftSemiBrace) -> Verdict<Triple> {
    let n = s.order();
    let zero = s.zero();
    Verdict::from_failure(first_failure(n, |a| {
        for b in 0..n {
            for c in 0..n {
                let lhs = s.add(a, s.mul(s.lambda(b, c), s.add(zero, s.rho(c, b))));
                let rhs = s.add(a, s.mul(b, s.add(zero, c)));
                if lhs != rhs {
                    return Some((a, b, c));
                }
            }
        }
        None
    }))
}

/// `r(a, b) = (a ∘ (a⁻ + b), (a⁻ + b)⁻ ∘ b)`; the braid relation is not checked here.
pub fn associated_solution(s: &GeneralizedLeftSemiBrace) -> SetSolution {
    SetSolution::from_fn(s.order(), |a, b| (s.lambda(a, b), s.rho(b, a))).expect("operations stay in the carrier")
}
