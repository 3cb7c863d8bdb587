//! Cross-module invariants: serialization round-trips, surgery postconditions,
//! multiplicativity/additivity over disjoint unions, oracle agreement, and
//! labeled-vs-canonical-corpus cross-validation.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use proptest::prelude::*;

use miskit_core::graph::{upper_triangle_pairs, Graph};
use miskit_core::{bounds, families, graph6, metrics, mis, sweep};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let edges = upper_triangle_pairs(n)
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph(12)) {
        let encoded = graph6::encode(&g);
        prop_assert_eq!(graph6::parse(&encoded).unwrap(), g);
    }

    #[test]
    fn surgeries_preserve_graph_invariants(g in arb_graph(10), v in 0usize..10, keep_bits in any::<u16>()) {
        g.assert_valid();
        let comp = g.complement();
        comp.assert_valid();
        prop_assert_eq!(comp.complement(), g.clone());

        if g.n() > 0 {
            let v = v % g.n();
            let sub = g.delete_closed_neighborhood(v).unwrap();
            sub.graph.assert_valid();
            prop_assert_eq!(sub.graph.n(), g.n() - g.closed_neighborhood(v).len());
        }

        let keep: miskit_core::VertexSet =
            (0..g.n()).filter(|&i| keep_bits >> i & 1 == 1).collect();
        let sub = g.induced_subgraph(&keep).unwrap();
        sub.graph.assert_valid();
        prop_assert_eq!(sub.graph.n(), keep.len());
        // Lifting the full subgraph vertex set recovers the kept set.
        prop_assert_eq!(sub.lift(&sub.graph.vertex_set()), keep);
    }

    #[test]
    fn disjoint_union_is_associative(a in arb_graph(6), b in arb_graph(6), c in arb_graph(6)) {
        let left = a.disjoint_union(&b).unwrap().disjoint_union(&c).unwrap();
        let right = a.disjoint_union(&b.disjoint_union(&c).unwrap()).unwrap();
        prop_assert_eq!(left.edges(), right.edges());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn count_is_multiplicative_over_components(a in arb_graph(10), b in arb_graph(10)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(mis::count(&u), mis::count(&a) * mis::count(&b));
    }

    #[test]
    fn metrics_are_additive_over_components(a in arb_graph(8), b in arb_graph(8)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(
            metrics::triangle_matching_number(&u),
            metrics::triangle_matching_number(&a) + metrics::triangle_matching_number(&b)
        );
        prop_assert_eq!(
            metrics::induced_matching_number(&u),
            metrics::induced_matching_number(&a) + metrics::induced_matching_number(&b)
        );
    }

    #[test]
    fn metrics_are_monotone_under_induced_subgraphs(g in arb_graph(9), keep_bits in any::<u16>()) {
        let keep: miskit_core::VertexSet =
            (0..g.n()).filter(|&i| keep_bits >> i & 1 == 1).collect();
        let sub = g.induced_subgraph(&keep).unwrap().graph;
        prop_assert!(metrics::triangle_matching_number(&sub) <= metrics::triangle_matching_number(&g));
        prop_assert!(metrics::induced_matching_number(&sub) <= metrics::induced_matching_number(&g));
        // Triangle-freeness is inherited downward.
        if metrics::is_triangle_free(&g) {
            prop_assert!(metrics::is_triangle_free(&sub));
        }
    }

    #[test]
    fn enumeration_agrees_with_subset_oracle(g in arb_graph(8)) {
        let fast: BTreeSet<Vec<usize>> =
            mis::enumerate(&g).iter().map(|s| s.to_vec()).collect();
        let slow: BTreeSet<Vec<usize>> =
            mis::brute_force(&g).unwrap().iter().map(|s| s.to_vec()).collect();
        prop_assert_eq!(&fast, &slow);
        prop_assert_eq!(mis::count(&g), BigUint::from(fast.len()));
        for s in mis::enumerate(&g) {
            prop_assert!(metrics::is_maximal_independent(&g, &s).unwrap());
        }
    }
}

#[test]
fn wood_bound_dominates_exhaustively_to_n7() {
    use rayon::prelude::*;
    for n in 0..=7usize {
        let slots = n * n.saturating_sub(1) / 2;
        let bad = (0u64..1 << slots)
            .into_par_iter()
            .find_any(|&bits| {
                let g = Graph::from_edge_bits(n, bits).unwrap();
                mis::wood_bound(&g) < mis::count(&g)
            });
        assert_eq!(bad, None, "bound undercuts the count at n = {n}");
    }
}

#[test]
fn cycle_recurrence_matches_enumeration() {
    for n in 3..=24 {
        let direct = mis::count(&families::cycle(n).unwrap());
        assert_eq!(mis::cycle_count(n).unwrap(), direct, "n = {n}");
    }
}

#[test]
fn cycle_counts_stay_under_the_fifth_root_envelope() {
    // count^5 <= 5^n, exact integer comparison; n = 3 is the lone exception.
    assert!(mis::cycle_count(3).unwrap().pow(5) > BigUint::from(5u32).pow(3));
    for n in 4..=24u32 {
        let c = mis::cycle_count(n as usize).unwrap();
        assert!(c.pow(5) <= BigUint::from(5u32).pow(n), "n = {n}");
    }
}

/// One representative per isomorphism class, via minimum edge-mask over all
/// vertex permutations. Independent of the library's own machinery apart
/// from the shared slot order.
fn nonisomorphic_masks(n: usize) -> Vec<u64> {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let slot_of = |i: usize, j: usize| j * (j - 1) / 2 + i;
    let slots: Vec<(usize, usize)> = upper_triangle_pairs(n).collect();
    let perm_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| {
            slots
                .iter()
                .map(|&(i, j)| {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    slot_of(a, b)
                })
                .collect()
        })
        .collect();
    let remap = |bits: u64, map: &[usize]| -> u64 {
        let mut out = 0;
        for (k, &to) in map.iter().enumerate() {
            out |= (bits >> k & 1) << to;
        }
        out
    };
    let mut out = Vec::new();
    for bits in 0..1u64 << slots.len() {
        let canon = perm_maps.iter().map(|m| remap(bits, m)).min().unwrap();
        if canon == bits {
            out.push(bits);
        }
    }
    out
}

#[test]
fn labeled_and_canonical_corpus_sweeps_agree() {
    let class_counts = [(4usize, 11usize), (5, 34), (6, 156)];
    for (n, expected_classes) in class_counts {
        let masks = nonisomorphic_masks(n);
        assert_eq!(masks.len(), expected_classes, "isomorphism classes at n = {n}");

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(format!("nauty-style-{n}.g6"));
        let mut text = String::new();
        for &bits in &masks {
            text.push_str(&graph6::encode(&Graph::from_edge_bits(n, bits).unwrap()));
            text.push('\n');
        }
        std::fs::write(&path, text).unwrap();

        for theorem in [
            sweep::Theorem::GlobalMax,
            sweep::Theorem::TriangleFreeMax,
            sweep::Theorem::TriangleMatching,
            sweep::Theorem::InducedMatching,
        ] {
            let labeled = sweep::sweep_labeled(n, theorem).unwrap();
            let corpus = sweep::sweep_corpus(&path, theorem, n).unwrap();
            let lmax: Vec<_> = labeled.per_parameter.iter().map(|p| p.max_mis.clone()).collect();
            let cmax: Vec<_> = corpus.per_parameter.iter().map(|p| p.max_mis.clone()).collect();
            assert_eq!(lmax, cmax, "theorem {} n {n}", theorem.token());
            assert!(corpus.violations.is_empty());
        }
    }
}

#[test]
fn triangle_free_corpus_on_eight_vertices_has_no_violations() {
    // A non-exhaustive corpus: known triangle-free families on 8 vertices
    // plus seeded random graphs kept when triangle-free.
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut graphs = vec![
        families::hujter_tuza(8).unwrap(),
        families::cycle(8).unwrap(),
        families::matching(4).unwrap(),
        Graph::edgeless(8).unwrap(),
    ];
    while graphs.len() < 120 {
        let edges: Vec<(usize, usize)> =
            upper_triangle_pairs(8).filter(|_| rng.random_bool(0.25)).collect();
        let g = Graph::from_edges(8, edges).unwrap();
        if metrics::is_triangle_free(&g) {
            graphs.push(g);
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tf8.g6");
    let text: String = graphs.iter().map(|g| graph6::encode(g) + "\n").collect();
    std::fs::write(&path, text).unwrap();

    let report = sweep::sweep_corpus(&path, sweep::Theorem::InducedMatching, 8).unwrap();
    assert!(report.violations.is_empty());
    assert!(report.inconclusive.is_empty());
    assert_eq!(report.graphs_scanned, 120);
    // The perfect matching attains the t = 4 point bound 2^4.
    let row = &report.per_parameter[4];
    assert_eq!(row.max_mis, Some(BigUint::from(16u32)));
    assert!(row.attained);
}

#[test]
fn moon_moser_counts_blow_past_machine_range() {
    // 60 triangles: 3^60 maximal independent sets, far beyond u64/u128.
    let g = families::moon_moser(180).unwrap();
    assert_eq!(mis::count(&g), BigUint::from(3u32).pow(60));
    assert_eq!(bounds::mis_max(180).unwrap(), BigUint::from(3u32).pow(60));
}

#[test]
fn distinct_mis_sets_are_reported_once() {
    // A graph with overlapping structure: two triangles sharing a vertex,
    // plus a pendant. Enumeration must not duplicate.
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
    let sets = mis::enumerate(&g);
    let dedup: HashSet<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    assert_eq!(sets.len(), dedup.len());
}
