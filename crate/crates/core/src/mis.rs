//! Enumeration and counting of maximal independent sets.
//!
//! The workhorse is a pivoting recursion run directly on independent sets:
//! the candidate pool holds vertices compatible with everything chosen so
//! far, and branching is restricted to the pivot's closed neighborhood. This
//! is the clique-enumeration scheme applied to the complement without
//! materializing it, output-sensitive and worst-case `3^(n/3)`.
//!
//! Counting never materializes sets and multiplies exact per-component
//! counts, so unions of many small components stay cheap even when the total
//! far exceeds 64-bit range.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Largest `n` the subset-scan oracle accepts.
pub const BRUTE_FORCE_CAP: usize = 25;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MisError {
    #[error("enumeration exceeded the configured limit of {limit} sets; partial output discarded")]
    LimitExceeded { limit: usize },
    #[error("brute-force oracle refuses n = {n}: the 2^n subset scan is capped at n = {cap}")]
    BruteForceCap { n: usize, cap: usize },
    #[error("cycles need at least 3 vertices, got {n}")]
    CycleTooShort { n: usize },
}

/// Per-vertex complement of the closed neighborhood: the vertices that can
/// still join an independent set containing `v`.
fn compatibility_table(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertex_set();
    g.vertices()
        .map(|v| all.difference(&g.closed_neighborhood(v)))
        .collect()
}

/// Branch set for one recursion step: the candidates NOT compatible with the
/// pivot. The pivot maximizes eliminated candidates, ties to lowest index.
fn pivot_branches(compat: &[VertexSet], p: &VertexSet, x: &VertexSet) -> VertexSet {
    let mut best: Option<(usize, usize)> = None;
    for u in p.union(x).iter() {
        let eliminated = p.intersection(&compat[u]).len();
        match best {
            Some((_, e)) if eliminated <= e => {}
            _ => best = Some((u, eliminated)),
        }
    }
    match best {
        Some((u, _)) => p.difference(&compat[u]),
        None => *p,
    }
}

fn enumerate_rec(
    compat: &[VertexSet],
    current: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    limit: usize,
    out: &mut Vec<VertexSet>,
) -> Result<(), MisError> {
    if p.is_empty() && x.is_empty() {
        if out.len() >= limit {
            return Err(MisError::LimitExceeded { limit });
        }
        out.push(current);
        return Ok(());
    }
    for v in pivot_branches(compat, &p, &x).iter() {
        let mut chosen = current;
        chosen.insert(v);
        enumerate_rec(
            compat,
            chosen,
            p.intersection(&compat[v]),
            x.intersection(&compat[v]),
            limit,
            out,
        )?;
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

fn count_rec(compat: &[VertexSet], mut p: VertexSet, mut x: VertexSet) -> u128 {
    if p.is_empty() && x.is_empty() {
        return 1;
    }
    let mut total: u128 = 0;
    for v in pivot_branches(compat, &p, &x).iter() {
        total += count_rec(compat, p.intersection(&compat[v]), x.intersection(&compat[v]));
        p.remove(v);
        x.insert(v);
    }
    total
}

/// All maximal independent sets of `g`, each exactly once, in the recursion's
/// deterministic order. The edgeless zero-vertex graph has one: the empty set.
pub fn enumerate(g: &Graph) -> Vec<VertexSet> {
    enumerate_capped(g, usize::MAX).expect("no limit in force")
}

/// Like [`enumerate`], but fails (discarding output) once more than `limit`
/// sets are found.
pub fn enumerate_capped(g: &Graph, limit: usize) -> Result<Vec<VertexSet>, MisError> {
    let compat = compatibility_table(g);
    let mut out = Vec::new();
    enumerate_rec(&compat, VertexSet::EMPTY, g.vertex_set(), VertexSet::EMPTY, limit, &mut out)?;
    Ok(out)
}

/// Exact number of maximal independent sets, as a product over connected
/// components.
pub fn count(g: &Graph) -> BigUint {
    let compat = compatibility_table(g);
    let mut total = BigUint::one();
    for comp in g.components() {
        total *= BigUint::from(count_rec(&compat, comp, VertexSet::EMPTY));
    }
    total
}

/// Independent verification oracle: scans all `2^n` vertex subsets and keeps
/// those that are independent and maximal. Shares nothing with the pivoting
/// recursion.
pub fn brute_force(g: &Graph) -> Result<Vec<VertexSet>, MisError> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(MisError::BruteForceCap { n, cap: BRUTE_FORCE_CAP });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u32 << n {
        let independent = (0..n).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0);
        let maximal = (0..n).all(|v| mask >> v & 1 == 1 || adj[v] & mask != 0);
        if independent && maximal {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    Ok(out)
}

/// Recursive upper bound on the number of maximal independent sets: every
/// such set meets the closed neighborhood of the branch vertex, so the count
/// is at most the sum over `w` in `N[v]` of the bound on `G \ N[w]`.
///
/// The branch vertex is the minimum-degree vertex, ties to lowest index; the
/// bound is sound for any choice, the rule only affects tightness.
pub fn wood_bound(g: &Graph) -> BigUint {
    if g.n() == 0 {
        return BigUint::one();
    }
    let v = g
        .vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("nonempty graph");
    let mut total = BigUint::zero();
    for w in g.closed_neighborhood(v).iter() {
        let sub = g.delete_closed_neighborhood(w).expect("vertex in range");
        total += wood_bound(&sub.graph);
    }
    total
}

/// Closed-form count for cycles: 3, 2, 5 for the triangle, square, pentagon,
/// then `count(n) = count(n-2) + count(n-3)`.
pub fn cycle_count(n: usize) -> Result<BigUint, MisError> {
    if n < 3 {
        return Err(MisError::CycleTooShort { n });
    }
    let mut table: Vec<BigUint> =
        vec![BigUint::from(3u32), BigUint::from(2u32), BigUint::from(5u32)];
    for k in 6..=n {
        let next = &table[k - 2 - 3] + &table[k - 3 - 3];
        table.push(next);
    }
    Ok(table[n - 3].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::metrics::is_maximal_independent;
    use std::collections::BTreeSet;

    fn set_family(sets: &[VertexSet]) -> BTreeSet<Vec<usize>> {
        sets.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn triangle_has_three_singletons() {
        let sets = enumerate(&families::complete(3).unwrap());
        assert_eq!(set_family(&sets), BTreeSet::from([vec![0], vec![1], vec![2]]));
    }

    #[test]
    fn pentagon_has_five_pairs() {
        let c5 = families::cycle(5).unwrap();
        let sets = enumerate(&c5);
        assert_eq!(sets.len(), 5);
        for s in &sets {
            assert_eq!(s.len(), 2);
            assert!(is_maximal_independent(&c5, s).unwrap());
        }
        assert_eq!(set_family(&sets), set_family(&brute_force(&c5).unwrap()));
    }

    #[test]
    fn path_on_four_vertices() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let expected = BTreeSet::from([vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert_eq!(set_family(&enumerate(&p4)), expected);
        assert_eq!(set_family(&brute_force(&p4).unwrap()), expected);
    }

    #[test]
    fn zero_vertex_graph_has_the_empty_set() {
        let g = Graph::edgeless(0).unwrap();
        let sets = enumerate(&g);
        assert_eq!(sets.len(), 1);
        assert!(sets[0].is_empty());
        assert_eq!(count(&g), BigUint::one());
        assert_eq!(brute_force(&g).unwrap().len(), 1);
    }

    #[test]
    fn counts_on_small_families() {
        assert_eq!(count(&families::matching(2).unwrap()), BigUint::from(4u32));
        assert_eq!(count(&families::cycle(4).unwrap()), BigUint::from(2u32));
        // 2 triangles + 2 disjoint edges: 3^2 * 2^2
        let g = families::g_extremal(2, 10).unwrap();
        assert_eq!(count(&g), BigUint::from(36u32));
    }

    #[test]
    fn count_matches_enumeration_cardinality() {
        for g in [
            families::complete(6).unwrap(),
            families::cycle(9).unwrap(),
            families::moon_moser(7).unwrap(),
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap(),
        ] {
            assert_eq!(count(&g), BigUint::from(enumerate(&g).len()));
        }
    }

    #[test]
    fn enumeration_limit_is_enforced() {
        let k3 = families::complete(3).unwrap();
        assert_eq!(enumerate_capped(&k3, 3).unwrap().len(), 3);
        assert_eq!(enumerate_capped(&k3, 2), Err(MisError::LimitExceeded { limit: 2 }));
    }

    #[test]
    fn brute_force_basics_and_cap() {
        let k1 = families::complete(1).unwrap();
        assert_eq!(set_family(&brute_force(&k1).unwrap()), BTreeSet::from([vec![0]]));
        assert_eq!(brute_force(&families::complete(3).unwrap()).unwrap().len(), 3);
        let big = Graph::edgeless(26).unwrap();
        assert_eq!(brute_force(&big), Err(MisError::BruteForceCap { n: 26, cap: 25 }));
    }

    #[test]
    fn wood_bound_hand_unrolled() {
        // K3: each branch empties the graph.
        assert_eq!(wood_bound(&families::complete(3).unwrap()), BigUint::from(3u32));
        // C5: three branches each leave a single edge, worth 2 apiece.
        assert_eq!(wood_bound(&families::cycle(5).unwrap()), BigUint::from(6u32));
        assert_eq!(wood_bound(&Graph::edgeless(0).unwrap()), BigUint::one());
    }

    #[test]
    fn wood_bound_dominates_count() {
        for g in [
            families::cycle(7).unwrap(),
            families::moon_moser(9).unwrap(),
            families::hujter_tuza(8).unwrap(),
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ] {
            assert!(wood_bound(&g) >= count(&g));
        }
    }

    #[test]
    fn cycle_recurrence_values() {
        assert_eq!(cycle_count(3).unwrap(), BigUint::from(3u32));
        assert_eq!(cycle_count(4).unwrap(), BigUint::from(2u32));
        assert_eq!(cycle_count(5).unwrap(), BigUint::from(5u32));
        assert_eq!(cycle_count(6).unwrap(), BigUint::from(5u32));
        // Unrolled: c7 = c5 + c4 = 7; cross-checked against the subset oracle.
        assert_eq!(cycle_count(7).unwrap(), BigUint::from(7u32));
        assert_eq!(
            cycle_count(7).unwrap(),
            BigUint::from(brute_force(&families::cycle(7).unwrap()).unwrap().len())
        );
        assert_eq!(cycle_count(2), Err(MisError::CycleTooShort { n: 2 }));
    }

    #[test]
    fn every_enumerated_set_is_independent_and_dominating() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 4)])
            .unwrap();
        let sets = enumerate(&g);
        assert!(!sets.is_empty());
        for s in &sets {
            assert!(is_maximal_independent(&g, s).unwrap());
        }
    }
}
