//! Seeded random instances for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::VertexSet;
use crate::counting::relation::Relation;
use crate::graph::{BipartiteGraph, Graph, Vertex};

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g
}

/// Random subgraph of `K_{a,b}`, sides `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng + ?Sized>(
    rng: &mut R,
    a: usize,
    b: usize,
    p: f64,
) -> BipartiteGraph {
    let cells: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    BipartiteGraph::from_biadjacency(a, b, cells).expect("valid cells")
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> VertexSet {
    VertexSet::from_iter_with_capacity(n, (0..n).filter(|_| rng.gen_bool(p)))
}

/// Each ordered pair related independently with probability `p`.
pub fn random_relation<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Relation {
    Relation::from_fn(n, |_, _| rng.gen_bool(p))
}
