//! Exhaustive search over small Cayley tables.
//!
//! Tables are filled cell by cell in row-major order with values tried in
//! increasing order, so every search yields its results in lexicographic
//! order of the flattened table. After each assignment the partial table is
//! pruned against every law instance whose cells are all known.

use rayon::prelude::*;
use ybe_core::finalg::{CarrierMap, CompletelyRegular, FiniteGroup, FiniteSemigroup};
use ybe_core::semibrace::{build_fg_family, LeftSemiBrace};
use ybe_core::ybesol::check_right_cryptogroup_criterion;

const UNKNOWN: usize = usize::MAX;

/// A partially filled `n × n` table.
struct Partial {
    n: usize,
    cells: Vec<usize>,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            n,
            cells: vec![UNKNOWN; n * n],
        }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        match self.cells[a * self.n + b] {
            UNKNOWN => None,
            v => Some(v),
        }
    }

    /// No fully known instance of `(ab)c = a(bc)` fails.
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let Some(ab) = self.get(a, b) else { return true };
                (0..n).all(|c| {
                    let lhs = self.get(ab, c);
                    let rhs = self.get(b, c).and_then(|bc| self.get(a, bc));
                    !matches!((lhs, rhs), (Some(l), Some(r)) if l != r)
                })
            })
        })
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }
}

/// Depth-first fill of `table` starting at `cell`, calling `accept` on every
/// complete table that survives `prune`.
fn fill(table: &mut Partial, cell: usize, prune: &dyn Fn(&Partial) -> bool, accept: &mut dyn FnMut(&Partial)) {
    if cell == table.cells.len() {
        accept(table);
        return;
    }
    for v in 0..table.n {
        table.cells[cell] = v;
        if prune(table) {
            fill(table, cell + 1, prune, accept);
        }
    }
    table.cells[cell] = UNKNOWN;
}

/// Every associative table of order `n`, lexicographically.
pub fn semigroups(n: usize) -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    fill(&mut Partial::new(n), 0, &Partial::associative_so_far, &mut |t| {
        out.push(FiniteSemigroup::from_rows(&t.rows()).expect("search only accepts semigroups"));
    });
    out
}

/// Every group table of order `n` (any element may be the identity), lexicographically.
pub fn groups(n: usize) -> Vec<FiniteGroup> {
    let latin = |t: &Partial| {
        let n = t.n;
        let rows_ok = (0..n).all(|a| {
            let mut seen = vec![false; n];
            (0..n)
                .filter_map(|b| t.get(a, b))
                .all(|v| !std::mem::replace(&mut seen[v], true))
        });
        let cols_ok = (0..n).all(|b| {
            let mut seen = vec![false; n];
            (0..n)
                .filter_map(|a| t.get(a, b))
                .all(|v| !std::mem::replace(&mut seen[v], true))
        });
        rows_ok && cols_ok && t.associative_so_far()
    };
    let mut out = Vec::new();
    fill(&mut Partial::new(n), 0, &latin, &mut |t| {
        // an associative latin square is a group
        out.push(FiniteGroup::from_rows(&t.rows()).expect("associative quasigroups are groups"));
    });
    out
}

/// Every additive table making `(+, group)` a left semi-brace, lexicographically.
pub fn semibrace_additions(group: &FiniteGroup) -> Vec<LeftSemiBrace> {
    let g = group;
    let key_identity = |t: &Partial| {
        let n = t.n;
        t.associative_so_far()
            && (0..n).all(|a| {
                let ainv = g.inv(a);
                (0..n).all(|b| {
                    let ab = g.op(a, b);
                    (0..n).all(|c| {
                        let lhs = t.get(b, c).map(|bc| g.op(a, bc));
                        let rhs = t.get(ainv, c).and_then(|x| t.get(ab, g.op(a, x)));
                        !matches!((lhs, rhs), (Some(l), Some(r)) if l != r)
                    })
                })
            })
    };
    let mut out = Vec::new();
    fill(&mut Partial::new(g.order()), 0, &key_identity, &mut |t| {
        let add = FiniteSemigroup::from_rows(&t.rows()).expect("pruned tables are associative");
        out.push(LeftSemiBrace::new(add, g.clone()).expect("pruned tables satisfy the identity"));
    });
    out
}

/// All left semi-braces of order `n`: groups in lexicographic order, and
/// for each group its additions in lexicographic order.
pub fn semibraces(n: usize) -> Vec<LeftSemiBrace> {
    let per_group: Vec<Vec<LeftSemiBrace>> = groups(n).par_iter().map(semibrace_additions).collect();
    per_group.into_iter().flatten().collect()
}

/// The first completely regular table of order at most `max_order`
/// violating `(a b)⁰ = (a⁰ b)⁰`, with its least witness.
pub fn crypto_counterexample(max_order: usize) -> Option<(CompletelyRegular, (usize, usize))> {
    (1..=max_order).find_map(|n| {
        semigroups(n).into_iter().find_map(|s| {
            let c = CompletelyRegular::new(s).ok()?;
            check_right_cryptogroup_criterion(&c).witness().copied().map(|w| (c, w))
        })
    })
}

/// Ordered pairs `(f, g)` of commuting idempotent endomorphisms with their
/// left semi-braces, in lexicographic order of `(f, g)`.
pub fn fg_pairs(group: &FiniteGroup) -> Vec<(CarrierMap, CarrierMap, LeftSemiBrace)> {
    let n = group.order();
    let idempotent: Vec<CarrierMap> = group
        .endomorphisms()
        .into_iter()
        .filter(CarrierMap::is_idempotent)
        .collect();
    let mut out = Vec::new();
    for f in &idempotent {
        for g in &idempotent {
            if (0..n).all(|x| f.apply(g.apply(x)) == g.apply(f.apply(x))) {
                let s = build_fg_family(group, f, g).expect("commuting idempotent endomorphisms");
                out.push((f.clone(), g.clone(), s));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let semigroup_counts: Vec<usize> = (1..=3).map(|n| semigroups(n).len()).collect();
        assert_eq!(semigroup_counts, vec![1, 8, 113]);
        let group_counts: Vec<usize> = (1..=4).map(|n| groups(n).len()).collect();
        assert_eq!(group_counts, vec![1, 2, 3, 16]);
        let brace_counts: Vec<usize> = (1..=3).map(|n| semibraces(n).len()).collect();
        assert_eq!(brace_counts, vec![1, 6, 9]);
    }

    #[test]
    fn lexicographic_order() {
        let tables: Vec<Vec<usize>> = semigroups(2).iter().map(|s| s.cells().to_vec()).collect();
        let mut sorted = tables.clone();
        sorted.sort();
        assert_eq!(tables, sorted);
    }
}
