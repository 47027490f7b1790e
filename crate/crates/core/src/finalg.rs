//! Table-driven finite semigroups, groups and semilattices.
//!
//! Every structure lives on the dense carrier `{0, .., n-1}` and is described
//! by its Cayley table. Scans that report a failure always return the
//! lexicographically least failing tuple.

use std::collections::BTreeSet;
use std::ops::Deref;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Outcome of an exhaustive check, carrying the least failing tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn from_failure(witness: Option<W>) -> Self {
        match witness {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

pub type Triple = (usize, usize, usize);

/// Carriers at least this large are scanned in parallel over the outermost index.
const PAR_THRESHOLD: usize = 24;

/// Returns the first `Some` produced by `probe` over `0..n`, in index order.
pub(crate) fn first_failure<W, F>(n: usize, probe: F) -> Option<W>
where
    W: Send,
    F: Fn(usize) -> Option<W> + Sync + Send,
{
    if n >= PAR_THRESHOLD {
        (0..n).into_par_iter().find_map_first(probe)
    } else {
        (0..n).find_map(probe)
    }
}

/// A binary operation on `{0, .., n-1}` with no laws assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
}

impl CayleyTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("table is empty".into()));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {a} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry ({a}, {b}) = {v} is outside 0..{n}"
                    )));
                }
            }
            cells.extend_from_slice(row);
        }
        Ok(CayleyTable { order: n, cells })
    }

    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order).map(|a| (0..order).map(|b| op(a, b)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// Replaces one entry; used to build perturbed copies in tests and searches.
    pub fn with_entry(&self, a: usize, b: usize, value: usize) -> Result<Self> {
        if a >= self.order || b >= self.order || value >= self.order {
            return Err(Error::MalformedTable(format!(
                "entry ({a}, {b}) = {value} is outside 0..{}",
                self.order
            )));
        }
        let mut out = self.clone();
        out.cells[a * self.order + b] = value;
        Ok(out)
    }

    pub fn check_associative(&self) -> Verdict<Triple> {
        let n = self.order;
        Verdict::from_failure(first_failure(n, |a| {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        }))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.op(a, a) == a).collect()
    }

    pub fn is_middle_unit(&self, u: usize) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            let au = self.op(a, u);
            (0..n).all(|b| self.op(au, b) == self.op(a, b))
        })
    }

    pub fn middle_units(&self) -> Vec<usize> {
        (0..self.order).filter(|&u| self.is_middle_unit(u)).collect()
    }

    /// Two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        let n = self.order;
        (0..n).find(|&e| (0..n).all(|x| self.op(e, x) == x && self.op(x, e) == x))
    }

    pub fn is_left_cancellative(&self) -> bool {
        self.left_cancellation_failure().is_none()
    }

    /// Least `(a, b, c)` with `b < c` and `a*b == a*c`.
    pub fn left_cancellation_failure(&self) -> Option<Triple> {
        let n = self.order;
        (0..n)
            .find_map(|a| (0..n).find_map(|b| (b + 1..n).find(|&c| self.op(a, b) == self.op(a, c)).map(|c| (a, b, c))))
    }

    pub fn is_right_cancellative(&self) -> bool {
        self.right_cancellation_failure().is_none()
    }

    /// Least `(b, c, a)` with `b < c` and `b*a == c*a`.
    pub fn right_cancellation_failure(&self) -> Option<Triple> {
        let n = self.order;
        (0..n)
            .find_map(|a| (0..n).find_map(|b| (b + 1..n).find(|&c| self.op(b, a) == self.op(c, a)).map(|c| (b, c, a))))
    }

    /// `{ x*y : x in xs, y in ys }`, sorted.
    pub fn product_set(&self, xs: &[usize], ys: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = xs
            .iter()
            .flat_map(|&x| ys.iter().map(move |&y| self.op(x, y)))
            .collect();
        set.into_iter().collect()
    }

    pub fn is_closed(&self, subset: &[usize]) -> bool {
        let members: BTreeSet<usize> = subset.iter().copied().collect();
        subset
            .iter()
            .all(|&x| subset.iter().all(|&y| members.contains(&self.op(x, y))))
    }
}

/// An associative [`CayleyTable`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    table: CayleyTable,
}

impl Deref for FiniteSemigroup {
    type Target = CayleyTable;

    fn deref(&self) -> &CayleyTable {
        &self.table
    }
}

/// Checks associativity of a raw row-major table.
pub fn check_associative(rows: &[Vec<usize>]) -> Result<Verdict<Triple>> {
    Ok(CayleyTable::from_rows(rows)?.check_associative())
}

/// Tag returned by [`FiniteSemigroup::classify_band`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BandKind {
    LeftZero,
    RightZero,
    Semilattice,
    RectangularBand,
    None,
}

impl BandKind {
    pub fn name(self) -> &'static str {
        match self {
            BandKind::LeftZero => "left_zero",
            BandKind::RightZero => "right_zero",
            BandKind::Semilattice => "semilattice",
            BandKind::RectangularBand => "rectangular_band",
            BandKind::None => "none",
        }
    }
}

/// The semigroup of middle units `M_B` together with a closure certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleUnitSemigroup {
    pub elements: Vec<usize>,
    pub closed: bool,
}

impl FiniteSemigroup {
    pub fn new(table: CayleyTable) -> Result<Self> {
        match table.check_associative() {
            Verdict::Holds => Ok(FiniteSemigroup { table }),
            Verdict::Fails((a, b, c)) => Err(Error::NotAssociative(a, b, c)),
        }
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(CayleyTable::from_rows(rows)?)
    }

    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(CayleyTable::from_fn(order, op)?)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn left_zero(order: usize) -> Result<Self> {
        Self::from_fn(order, |a, _| a)
    }

    pub fn right_zero(order: usize) -> Result<Self> {
        Self::from_fn(order, |_, b| b)
    }

    /// Rectangular band `I x L` with `(i, l)(j, m) = (i, m)`, indexed `i * |L| + l`.
    pub fn rectangular_band(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows * cols, |a, b| (a / cols) * cols + b % cols)
    }

    /// Meet table of the chain `0 < 1 < .. < n-1`.
    pub fn chain(order: usize) -> Result<Self> {
        Self::from_fn(order, usize::min)
    }

    /// Componentwise product, with `(a, u)` stored at `a * |other| + u`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let m = other.order();
        let table = CayleyTable::from_fn(self.order() * m, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
        .expect("product of valid tables is in range");
        FiniteSemigroup { table }
    }

    pub fn classify_band(&self) -> BandKind {
        let n = self.order();
        if self.idempotents().len() != n {
            return BandKind::None;
        }
        let all = |law: &dyn Fn(usize, usize) -> bool| (0..n).all(|a| (0..n).all(|b| law(a, b)));
        if all(&|a, b| self.op(a, b) == a) {
            BandKind::LeftZero
        } else if all(&|a, b| self.op(a, b) == b) {
            BandKind::RightZero
        } else if self.is_commutative() {
            BandKind::Semilattice
        } else if all(&|a, b| self.op(self.op(a, b), a) == a) {
            BandKind::RectangularBand
        } else {
            BandKind::None
        }
    }

    /// Elements `x` owning an inverse `x'` (`x' = x'x x'`, `x = x x' x`) for
    /// which both `x x'` and `x' x` are middle units.
    pub fn middle_unit_semigroup(&self) -> MiddleUnitSemigroup {
        let n = self.order();
        let units: BTreeSet<usize> = self.middle_units().into_iter().collect();
        let elements: Vec<usize> = (0..n)
            .filter(|&x| {
                (0..n).any(|y| {
                    self.op(self.op(y, x), y) == y
                        && self.op(self.op(x, y), x) == x
                        && units.contains(&self.op(x, y))
                        && units.contains(&self.op(y, x))
                })
            })
            .collect();
        let closed = self.is_closed(&elements);
        MiddleUnitSemigroup { elements, closed }
    }

    /// Completely regular and simple: `S a S = S` for every `a`.
    pub fn is_completely_simple(&self) -> bool {
        if complete_regular_inverses(self).is_err() {
            return false;
        }
        let n = self.order();
        let all: Vec<usize> = (0..n).collect();
        (0..n).all(|a| {
            let left = self.product_set(&all, &[a]);
            self.product_set(&left, &all).len() == n
        })
    }
}

/// A completely regular semigroup with its canonical inverses `a⁻` and
/// idempotents `a⁰ = a a⁻`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletelyRegular {
    base: FiniteSemigroup,
    inv: Vec<usize>,
    idem: Vec<usize>,
}

impl Deref for CompletelyRegular {
    type Target = FiniteSemigroup;

    fn deref(&self) -> &FiniteSemigroup {
        &self.base
    }
}

/// Scans every candidate for the unique `a⁻` with `a = a a⁻ a`,
/// `a⁻ = a⁻ a a⁻`, `a a⁻ = a⁻ a`; fails at the smallest element without one.
pub fn complete_regular_inverses(s: &FiniteSemigroup) -> Result<CompletelyRegular> {
    let n = s.order();
    let mut inv = Vec::with_capacity(n);
    for a in 0..n {
        let mut found = None;
        for x in 0..n {
            let ax = s.op(a, x);
            if s.op(ax, a) == a && s.op(s.op(x, a), x) == x && ax == s.op(x, a) {
                if found.is_some() {
                    return Err(Error::InternalInconsistency(format!(
                        "element {a} has two completely regular inverses"
                    )));
                }
                found = Some(x);
            }
        }
        inv.push(found.ok_or(Error::NotCompletelyRegular(a))?);
    }
    let idem = (0..n).map(|a| s.op(a, inv[a])).collect();
    Ok(CompletelyRegular {
        base: s.clone(),
        inv,
        idem,
    })
}

impl CompletelyRegular {
    pub fn new(s: FiniteSemigroup) -> Result<Self> {
        complete_regular_inverses(&s)
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(FiniteSemigroup::from_rows(rows)?)
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.base
    }

    /// `a⁻`
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a⁰ = a a⁻`
    #[inline]
    pub fn idem(&self, a: usize) -> usize {
        self.idem[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    /// Least `(e, x)` with `e` idempotent and `e x != x e`.
    pub fn non_central_idempotent(&self) -> Option<(usize, usize)> {
        let n = self.order();
        self.idempotents()
            .into_iter()
            .find_map(|e| (0..n).find(|&x| self.op(e, x) != self.op(x, e)).map(|x| (e, x)))
    }

    pub fn is_clifford(&self) -> bool {
        self.non_central_idempotent().is_none()
    }

    pub fn to_group(&self) -> Option<FiniteGroup> {
        FiniteGroup::new(self.base.clone()).ok()
    }
}

/// Convenience wrapper for [`CompletelyRegular::is_clifford`].
pub fn is_clifford(c: &CompletelyRegular) -> bool {
    c.is_clifford()
}

/// A finite group; `identity` is the neutral element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    base: FiniteSemigroup,
    identity: usize,
    inv: Vec<usize>,
}

impl Deref for FiniteGroup {
    type Target = FiniteSemigroup;

    fn deref(&self) -> &FiniteSemigroup {
        &self.base
    }
}

impl FiniteGroup {
    pub fn new(s: FiniteSemigroup) -> Result<Self> {
        let identity = s
            .identity()
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        let n = s.order();
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| s.op(a, b) == identity && s.op(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inv.push(b);
        }
        Ok(FiniteGroup { base: s, identity, inv })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(FiniteSemigroup::from_rows(rows)?)
    }

    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(FiniteSemigroup::from_fn(order, op)?)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn completely_regular(&self) -> CompletelyRegular {
        CompletelyRegular {
            base: self.base.clone(),
            inv: self.inv.clone(),
            idem: vec![self.identity; self.order()],
        }
    }

    pub fn cyclic(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("cyclic group of order 0".into()));
        }
        Self::from_fn(order, |a, b| (a + b) % order)
    }

    /// Permutations of `{0, .., k-1}` in lexicographic order, composed as
    /// `(s t)(i) = s(t(i))`.
    pub fn symmetric(k: usize) -> Result<Self> {
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
        Self::from_fn(perms.len(), |a, b| {
            let composed: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
            index(&composed)
        })
    }

    /// Dihedral group of order `2m`; `r^i s^j` is stored at `j * m + i`.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::MalformedTable("dihedral group of order 0".into()));
        }
        Self::from_fn(2 * m, |a, b| {
            let (i, j) = (a % m, a / m);
            let (k, l) = (b % m, b / m);
            // r^i s^j r^k s^l = r^(i ± k) s^(j + l)
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            ((j + l) % 2) * m + rot
        })
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}` stored as `sign * 4 + unit`.
    pub fn quaternion() -> Result<Self> {
        // unit products: (sign, unit) for 1,i,j,k
        const PROD: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        Self::from_fn(8, |a, b| {
            let (s, t) = PROD[a % 4][b % 4];
            ((a / 4 + b / 4 + s) % 2) * 4 + t
        })
    }

    /// Direct product with `(a, u)` stored at `a * |other| + u`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        FiniteGroup::new(self.base.direct_product(&other.base)).expect("product of groups is a group")
    }

    /// All endomorphisms in lexicographic order of their value arrays.
    pub fn endomorphisms(&self) -> Vec<CarrierMap> {
        let n = self.order();
        let mut out = Vec::new();
        let mut values = vec![0usize; n];
        self.extend_endomorphism(0, &mut values, &mut out);
        out
    }

    fn extend_endomorphism(&self, next: usize, values: &mut Vec<usize>, out: &mut Vec<CarrierMap>) {
        let n = self.order();
        if next == n {
            out.push(CarrierMap {
                source_order: n,
                target_order: n,
                map: values.clone(),
            });
            return;
        }
        for v in 0..n {
            values[next] = v;
            let consistent = (0..=next).all(|a| {
                (0..=next).all(|b| {
                    let ab = self.op(a, b);
                    ab > next || values[ab] == self.op(values[a], values[b])
                })
            });
            if consistent {
                self.extend_endomorphism(next + 1, values, out);
            }
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..k {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

/// A commutative band; `alpha >= beta` iff `alpha beta = beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semilattice {
    base: FiniteSemigroup,
}

impl Deref for Semilattice {
    type Target = FiniteSemigroup;

    fn deref(&self) -> &FiniteSemigroup {
        &self.base
    }
}

impl Semilattice {
    pub fn new(s: FiniteSemigroup) -> Result<Self> {
        if let Some(a) = (0..s.order()).find(|&a| s.op(a, a) != a) {
            return Err(Error::NotSemilattice(format!("{a} is not idempotent")));
        }
        if !s.is_commutative() {
            return Err(Error::NotSemilattice("operation is not commutative".into()));
        }
        Ok(Semilattice { base: s })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(FiniteSemigroup::from_rows(rows)?)
    }

    pub fn chain(order: usize) -> Result<Self> {
        Self::new(FiniteSemigroup::chain(order)?)
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.base
    }

    #[inline]
    pub fn meet(&self, alpha: usize, beta: usize) -> usize {
        self.op(alpha, beta)
    }

    #[inline]
    pub fn geq(&self, alpha: usize, beta: usize) -> bool {
        self.op(alpha, beta) == beta
    }

    /// All pairs `(alpha, beta)` with `alpha >= beta`, lexicographic.
    pub fn comparable_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.order();
        (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .filter(|&(a, b)| self.geq(a, b))
            .collect()
    }
}

/// A total map between carriers `{0..source_order-1} -> {0..target_order-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CarrierMap {
    source_order: usize,
    target_order: usize,
    map: Vec<usize>,
}

impl CarrierMap {
    pub fn new(source_order: usize, target_order: usize, map: Vec<usize>) -> Result<Self> {
        if map.len() != source_order {
            return Err(Error::MalformedMap(format!(
                "map has {} entries, source carrier has {source_order}",
                map.len()
            )));
        }
        if let Some((x, &v)) = map.iter().enumerate().find(|(_, &v)| v >= target_order) {
            return Err(Error::MalformedMap(format!(
                "image {v} of {x} is outside 0..{target_order}"
            )));
        }
        Ok(CarrierMap {
            source_order,
            target_order,
            map,
        })
    }

    pub fn identity(order: usize) -> Self {
        CarrierMap {
            source_order: order,
            target_order: order,
            map: (0..order).collect(),
        }
    }

    pub fn constant(source_order: usize, target_order: usize, value: usize) -> Result<Self> {
        Self::new(source_order, target_order, vec![value; source_order])
    }

    pub fn from_fn(source_order: usize, target_order: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new(source_order, target_order, (0..source_order).map(f).collect())
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &CarrierMap) -> Result<CarrierMap> {
        if self.target_order != next.source_order {
            return Err(Error::MalformedMap(format!(
                "cannot compose: target {} != source {}",
                self.target_order, next.source_order
            )));
        }
        Ok(CarrierMap {
            source_order: self.source_order,
            target_order: next.target_order,
            map: self.map.iter().map(|&x| next.apply(x)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source_order == self.target_order && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order != self.target_order {
            return false;
        }
        let mut seen = vec![false; self.target_order];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// `f ∘ f = f`; false when source and target differ.
    pub fn is_idempotent(&self) -> bool {
        self.source_order == self.target_order && self.map.iter().all(|&v| self.map[v] == v)
    }
}

/// Checks `f(a b) = f(a) f(b)`; the witness is the least failing `(a, b)`.
pub fn check_homomorphism(f: &CarrierMap, s: &CayleyTable, t: &CayleyTable) -> Result<Verdict<(usize, usize)>> {
    if f.source_order() != s.order() || f.target_order() != t.order() {
        return Err(Error::MalformedMap(format!(
            "map {} -> {} does not match tables of order {} and {}",
            f.source_order(),
            f.target_order(),
            s.order(),
            t.order()
        )));
    }
    let n = s.order();
    Ok(Verdict::from_failure((0..n).find_map(|a| {
        (0..n)
            .find(|&b| f.apply(s.op(a, b)) != t.op(f.apply(a), f.apply(b)))
            .map(|b| (a, b))
    })))
}
