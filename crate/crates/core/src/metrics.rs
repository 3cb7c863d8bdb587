//! Structural parameters indexing the extremal bounds: triangle-freeness,
//! the largest induced triangle matching, and the largest induced matching.
//!
//! Both maximization problems are solved exactly. The search works per
//! connected component (the parameters are additive over components) and
//! reduces to a maximum clique in the compatibility relation between
//! candidate blocks: two triangles (or edges) are compatible when they are
//! vertex-disjoint and no edge runs between them, which is exactly the
//! "no other induced edges" condition, checked pairwise.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

/// One candidate block of an induced family: its vertices plus everything
/// those vertices touch (their closed neighborhoods). A second block is
/// admissible next to this one iff the block avoids `reach` entirely.
struct Block {
    verts: VertexSet,
    reach: VertexSet,
}

impl Block {
    fn new(g: &Graph, verts: VertexSet) -> Block {
        let reach = verts.iter().fold(verts, |acc, v| acc.union(&g.neighbors(v)));
        Block { verts, reach }
    }

    fn compatible(&self, other: &Block) -> bool {
        other.verts.is_disjoint(&self.reach)
    }
}

/// Maximum number of pairwise-compatible blocks, by branch and bound.
fn max_compatible(blocks: &[Block], cands: Vec<usize>, size: usize, best: &mut usize) {
    if cands.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let mut cands = cands;
    while let Some(&c) = cands.first() {
        if size + cands.len() <= *best {
            return;
        }
        cands.remove(0);
        let rest: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|&d| blocks[c].compatible(&blocks[d]))
            .collect();
        max_compatible(blocks, rest, size + 1, best);
    }
    *best = (*best).max(size);
}

fn max_induced_family<F>(g: &Graph, blocks_of: F) -> usize
where
    F: Fn(&Graph, &VertexSet) -> Vec<Block>,
{
    let mut total = 0;
    for comp in g.components() {
        let blocks = blocks_of(g, &comp);
        let mut best = 0;
        max_compatible(&blocks, (0..blocks.len()).collect(), 0, &mut best);
        total += best;
    }
    total
}

fn triangles_within(g: &Graph, comp: &VertexSet) -> Vec<Block> {
    let mut out = Vec::new();
    for i in comp.iter() {
        let ni = g.neighbors(i).intersection(comp);
        for j in ni.iter().filter(|&j| j > i) {
            let common = ni.intersection(&g.neighbors(j));
            for k in common.iter().filter(|&k| k > j) {
                out.push(Block::new(g, [i, j, k].into_iter().collect()));
            }
        }
    }
    out
}

fn edges_within(g: &Graph, comp: &VertexSet) -> Vec<Block> {
    let mut out = Vec::new();
    for u in comp.iter() {
        for v in g.neighbors(u).intersection(comp).iter().filter(|&v| v > u) {
            out.push(Block::new(g, [u, v].into_iter().collect()));
        }
    }
    out
}

/// True iff no three vertices are mutually adjacent.
pub fn is_triangle_free(g: &Graph) -> bool {
    for v in g.vertices() {
        for u in g.neighbors(v).iter().filter(|&u| u > v) {
            if !g.neighbors(v).intersection(&g.neighbors(u)).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Largest `k` such that some `3k` vertices induce exactly `k` disjoint
/// triangles (no extra edges among them).
pub fn triangle_matching_number(g: &Graph) -> usize {
    max_induced_family(g, triangles_within)
}

/// Largest `k` such that some `2k` vertices induce exactly `k` disjoint
/// edges.
pub fn induced_matching_number(g: &Graph) -> usize {
    max_induced_family(g, edges_within)
}

/// The three structural parameters of a graph, computed together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureProfile {
    pub triangle_free: bool,
    pub triangle_matching_number: usize,
    pub induced_matching_number: usize,
}

impl StructureProfile {
    pub fn of(g: &Graph) -> StructureProfile {
        StructureProfile {
            triangle_free: is_triangle_free(g),
            triangle_matching_number: triangle_matching_number(g),
            induced_matching_number: induced_matching_number(g),
        }
    }
}

/// True iff `s` is independent in `g` and every vertex outside `s` has a
/// neighbor inside it.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    if !s.is_subset_of(&g.vertex_set()) {
        let v = s.difference(&g.vertex_set()).first().unwrap();
        return Err(GraphError::VertexOutOfRange { v, n: g.n() });
    }
    let independent = s.iter().all(|v| g.neighbors(v).is_disjoint(s));
    let dominating = g
        .vertices()
        .filter(|&v| !s.contains(v))
        .all(|v| !g.neighbors(v).is_disjoint(s));
    Ok(independent && dominating)
}
