//! Shared fixtures for the benchmark targets.

use miskit_core::{families, graph6, Graph};

/// A mixed bag of graph6 strings exercising both size-prefix forms.
pub fn graph6_corpus() -> Vec<String> {
    let mut out = Vec::new();
    for n in [5, 9, 16, 24] {
        out.push(graph6::encode(&families::cycle(n).unwrap()));
        out.push(graph6::encode(&families::complete(n).unwrap()));
    }
    out.push(graph6::encode(&families::cycle(80).unwrap()));
    out.push(graph6::encode(&families::moon_moser(21).unwrap()));
    out
}

/// Dense-ish connected graph: a cycle with all short chords.
pub fn chorded_cycle(n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        edges.push((v, (v + 1) % n));
        edges.push((v, (v + 2) % n));
    }
    Graph::from_edges(n, edges).unwrap()
}
