//! Maps `r: X×X → X×X`, `r(x, y) = (λ_x(y), ρ_y(x))`, on a finite set:
//! braid verification, degeneracy flags, functional powers, index and period.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::finalg::{first_failure, CompletelyRegular, Triple, Verdict};

/// A candidate solution stored as its λ-table and ρ-table.
///
/// `lambda(x, y) = λ_x(y)` and `rho(y, x) = ρ_y(x)`, so `r(x, y) = (lambda(x, y), rho(y, x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSolution {
    order: usize,
    lam: Vec<usize>,
    rho: Vec<usize>,
}

fn flatten(rows: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::MalformedTable(format!(
            "{what} table has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "{what} row {i} has length {}",
                row.len()
            )));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedTable(format!("{what} entry {v} is outside 0..{n}")));
        }
        out.extend_from_slice(row);
    }
    Ok(out)
}

impl SetSolution {
    pub fn new(lam_rows: &[Vec<usize>], rho_rows: &[Vec<usize>]) -> Result<Self> {
        let n = lam_rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        Ok(SetSolution {
            order: n,
            lam: flatten(lam_rows, n, "lambda")?,
            rho: flatten(rho_rows, n, "rho")?,
        })
    }

    /// Builds the map from `r` given pointwise.
    pub fn from_fn(order: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        let mut lam = vec![0; order * order];
        let mut rho = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let (u, v) = r(x, y);
                if u >= order || v >= order {
                    return Err(Error::MalformedTable(format!(
                        "r({x}, {y}) = ({u}, {v}) leaves 0..{order}"
                    )));
                }
                lam[x * order + y] = u;
                rho[y * order + x] = v;
            }
        }
        Ok(SetSolution { order, lam, rho })
    }

    /// `r(x, y) = (y, x)`
    pub fn twist(order: usize) -> Result<Self> {
        Self::from_fn(order, |x, y| (y, x))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `λ_x(y)`
    #[inline]
    pub fn lambda(&self, x: usize, y: usize) -> usize {
        self.lam[x * self.order + y]
    }

    /// `ρ_y(x)`
    #[inline]
    pub fn rho(&self, y: usize, x: usize) -> usize {
        self.rho[y * self.order + x]
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.lambda(x, y), self.rho(y, x))
    }

    pub fn lam_rows(&self) -> Vec<Vec<usize>> {
        self.lam.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn rho_rows(&self) -> Vec<Vec<usize>> {
        self.rho.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// `r` as a self-map of `X×X`, pair `(x, y)` encoded as `x * n + y`.
    pub fn pair_map(&self) -> PairMap {
        let n = self.order;
        let image = (0..n * n)
            .map(|p| {
                let (u, v) = self.apply(p / n, p % n);
                u * n + v
            })
            .collect();
        PairMap { order: n, image }
    }

    pub fn from_pair_map(map: &PairMap) -> Result<Self> {
        let n = map.order;
        Self::from_fn(n, |x, y| {
            let p = map.image[x * n + y];
            (p / n, p % n)
        })
    }

    fn is_lambda_bijective(&self, x: usize) -> bool {
        is_permutation((0..self.order).map(|y| self.lambda(x, y)), self.order)
    }

    fn is_rho_bijective(&self, y: usize) -> bool {
        is_permutation((0..self.order).map(|x| self.rho(y, x)), self.order)
    }

    pub fn is_left_nondegenerate(&self) -> bool {
        (0..self.order).all(|x| self.is_lambda_bijective(x))
    }

    pub fn is_right_nondegenerate(&self) -> bool {
        (0..self.order).all(|y| self.is_rho_bijective(y))
    }
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    values.into_iter().all(|v| !std::mem::replace(&mut seen[v], true))
}

/// A self-map of `X×X` in pair encoding `x * n + y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairMap {
    order: usize,
    image: Vec<usize>,
}

impl PairMap {
    pub fn identity(order: usize) -> Self {
        PairMap {
            order,
            image: (0..order * order).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn get(&self, x: usize, y: usize) -> (usize, usize) {
        let p = self.image[x * self.order + y];
        (p / self.order, p % self.order)
    }

    /// `next ∘ self`
    pub fn then(&self, next: &PairMap) -> PairMap {
        PairMap {
            order: self.order,
            image: self.image.iter().map(|&p| next.image[p]).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        is_permutation(self.image.iter().copied(), self.image.len())
    }
}

/// Composite triple `(r×id)(id×r)(r×id)(x, y, z)`.
fn left_composite(s: &SetSolution, x: usize, y: usize, z: usize) -> Triple {
    let (a1, b1) = s.apply(x, y);
    let (b2, c2) = s.apply(b1, z);
    let (a3, b3) = s.apply(a1, b2);
    (a3, b3, c2)
}

/// Composite triple `(id×r)(r×id)(id×r)(x, y, z)`.
fn right_composite(s: &SetSolution, x: usize, y: usize, z: usize) -> Triple {
    let (b1, c1) = s.apply(y, z);
    let (a2, b2) = s.apply(x, b1);
    let (b3, c3) = s.apply(b2, c1);
    (a2, b3, c3)
}

/// Braid relation `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on all of `X³`.
pub fn is_solution(s: &SetSolution) -> Verdict<Triple> {
    let n = s.order();
    Verdict::from_failure(first_failure(n, |x| {
        for y in 0..n {
            for z in 0..n {
                if left_composite(s, x, y, z) != right_composite(s, x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }))
}

/// The braid relation checked through its three component identities:
///
/// ```text
/// λ_x λ_y(z)               = λ_{λ_x(y)} λ_{ρ_y(x)}(z)
/// λ_{ρ_{λ_y(z)}(x)}(ρ_z(y)) = ρ_{λ_{ρ_y(x)}(z)}(λ_x(y))
/// ρ_z ρ_y(x)               = ρ_{ρ_z(y)} ρ_{λ_y(z)}(x)
/// ```
pub fn is_solution_componentwise(s: &SetSolution) -> Verdict<Triple> {
    let n = s.order();
    let lam = |x, y| s.lambda(x, y);
    let rho = |y, x| s.rho(y, x);
    Verdict::from_failure(first_failure(n, |x| {
        for y in 0..n {
            for z in 0..n {
                let left = lam(x, lam(y, z)) == lam(lam(x, y), lam(rho(y, x), z));
                let centre = lam(rho(lam(y, z), x), rho(z, y)) == rho(lam(rho(y, x), z), lam(x, y));
                let right = rho(z, rho(y, x)) == rho(rho(z, y), rho(lam(y, z), x));
                if !(left && centre && right) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }))
}

/// `r^k` as a self-map of `X×X`; `r^0` is the identity.
pub fn power(s: &SetSolution, k: usize) -> PairMap {
    let step = s.pair_map();
    let mut acc = PairMap::identity(s.order());
    for _ in 0..k {
        acc = acc.then(&step);
    }
    acc
}

/// Least `j >= 0` with `r^j = r^l` for some `l != j`, and least `k >= 1`
/// with `r^(j+k) = r^j`. Bijective maps have index 0.
pub fn index_period(s: &SetSolution) -> (usize, usize) {
    let step = s.pair_map();
    let mut seen: HashMap<PairMap, usize> = HashMap::new();
    let mut current = PairMap::identity(s.order());
    let mut k = 0;
    loop {
        if let Some(&j) = seen.get(&current) {
            return (j, k - j);
        }
        let next = current.then(&step);
        seen.insert(current, k);
        current = next;
        k += 1;
    }
}

/// Degeneracy, order and braid flags of a finite map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionProfile {
    pub is_ybe: bool,
    pub braid_witness: Option<Triple>,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub bijective: bool,
    /// `r² = id`
    pub involutive: bool,
    /// `r² = r`
    pub idempotent: bool,
    /// `r³ = r`
    pub cubic: bool,
    pub index: usize,
    pub period: usize,
}

impl SolutionProfile {
    /// Neither left nor right non-degenerate.
    pub fn degenerate(&self) -> bool {
        !self.left_nondegenerate && !self.right_nondegenerate
    }

    pub fn nondegenerate(&self) -> bool {
        self.left_nondegenerate && self.right_nondegenerate
    }
}

pub fn classify(s: &SetSolution) -> SolutionProfile {
    let braid = is_solution(s);
    let r1 = s.pair_map();
    let r2 = r1.then(&r1);
    let r3 = r2.then(&r1);
    let (index, period) = index_period(s);
    SolutionProfile {
        is_ybe: braid.holds(),
        braid_witness: braid.witness().copied(),
        left_nondegenerate: s.is_left_nondegenerate(),
        right_nondegenerate: s.is_right_nondegenerate(),
        bijective: r1.is_bijective(),
        involutive: r2 == PairMap::identity(s.order()),
        idempotent: r2 == r1,
        cubic: r3 == r1,
        index,
        period,
    }
}

/// `(a b)⁰ = (a⁰ b)⁰` for all `a, b`; least failing `(a, b)` otherwise.
pub fn check_right_cryptogroup_criterion(c: &CompletelyRegular) -> Verdict<(usize, usize)> {
    let n = c.order();
    Verdict::from_failure((0..n).find_map(|a| {
        (0..n)
            .find(|&b| c.idem(c.op(a, b)) != c.idem(c.op(c.idem(a), b)))
            .map(|b| (a, b))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::FiniteSemigroup;

    #[test]
    fn twist_and_constant_are_solutions() {
        let t = SetSolution::twist(3).unwrap();
        assert!(is_solution(&t).holds());
        let c = SetSolution::from_fn(3, |_, _| (1, 1)).unwrap();
        assert!(is_solution(&c).holds());
    }

    #[test]
    fn non_solution_witness_is_least() {
        // r(x, y) = (x + 1 mod 2, y): λ_x is constant, ρ_y = id
        let s = SetSolution::from_fn(2, |x, y| ((x + 1) % 2, y)).unwrap();
        // lhs(0,0,0): r(0,0)=(1,0); r(0,0)=(1,0); r(1,1)=(0,1) -> (0,1,0)
        // rhs(0,0,0): r(0,0)=(1,0); r(0,1)=(1,1); r(1,0)=(0,0) -> (1,0,0)
        assert_eq!(is_solution(&s), Verdict::Fails((0, 0, 0)));
        assert_eq!(is_solution_componentwise(&s), Verdict::Fails((0, 0, 0)));
    }

    #[test]
    fn twist_profile() {
        let p = classify(&SetSolution::twist(2).unwrap());
        assert!(p.is_ybe && p.involutive && p.bijective && p.nondegenerate());
        assert!(!p.idempotent);
        assert_eq!((p.index, p.period), (0, 2));
    }

    #[test]
    fn projection_solution_is_idempotent_and_degenerate() {
        let s = SetSolution::from_fn(3, |x, _| (x, 2)).unwrap();
        let p = classify(&s);
        assert!(p.is_ybe && p.idempotent && p.cubic && p.degenerate());
        assert_eq!((p.index, p.period), (1, 1));
    }

    #[test]
    fn powers() {
        let t = SetSolution::twist(3).unwrap();
        assert_eq!(power(&t, 1), t.pair_map());
        assert_eq!(power(&t, 2), PairMap::identity(3));
        assert_eq!(power(&t, 0), PairMap::identity(3));
        assert_eq!(SetSolution::from_pair_map(&power(&t, 3)).unwrap(), t);
    }

    #[test]
    fn identity_map_has_period_one() {
        let id = SetSolution::from_fn(2, |x, y| (x, y)).unwrap();
        assert_eq!(index_period(&id), (0, 1));
    }

    #[test]
    fn cryptogroup_criterion() {
        let rz = CompletelyRegular::new(FiniteSemigroup::right_zero(3).unwrap()).unwrap();
        assert!(check_right_cryptogroup_criterion(&rz).holds());
        let g = crate::finalg::FiniteGroup::cyclic(5).unwrap().completely_regular();
        assert!(check_right_cryptogroup_criterion(&g).holds());
    }

    #[test]
    fn malformed_solution_tables() {
        assert!(SetSolution::new(&[vec![0, 1], vec![0]], &[vec![0, 0], vec![0, 0]]).is_err());
        assert!(SetSolution::new(&[vec![0, 1], vec![0, 1]], &[vec![0, 2], vec![0, 0]]).is_err());
        assert!(SetSolution::from_fn(2, |_, _| (0, 2)).is_err());
    }
}
