//! Epsilon-good splits of one side of a bipartite graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{BipartiteGraph, GraphError, Result, Vertex};

/// `(L1, L2)` splitting side 0 so that every side-1 vertex has
/// `|N(v) ∩ L_i|` within `epsilon * deg(v)` of `deg(v) / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct GoodPartition {
    pub first: Vec<Vertex>,
    pub second: Vec<Vertex>,
    pub epsilon: f64,
    /// Random draws made, including the successful one.
    pub tries: usize,
    pub by_local_search: bool,
}

impl GoodPartition {
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        let mut in_first = vec![false; g.graph().n()];
        for &v in &self.first {
            in_first[v] = true;
        }
        worst_violation(g, &in_first, self.epsilon).is_none()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionFailure {
    /// Side-1 vertex furthest outside its tolerance in the last partition.
    pub worst_vertex: Vertex,
    /// `|2a - deg| - 2 epsilon deg` at that vertex, positive.
    pub excess: f64,
    pub tries: usize,
}

fn excess(a: usize, deg: usize, epsilon: f64) -> f64 {
    (2.0 * a as f64 - deg as f64).abs() - 2.0 * epsilon * deg as f64
}

/// Worst side-1 vertex violating the tolerance, with its excess.
fn worst_violation(g: &BipartiteGraph, in_first: &[bool], epsilon: f64) -> Option<(Vertex, f64)> {
    let mut worst: Option<(Vertex, f64)> = None;
    for v in g.side_vertices(1) {
        let nb = g.graph().neighbors(v);
        let a = nb.iter().filter(|&w| in_first[w]).count();
        let x = excess(a, nb.len(), epsilon);
        if x > 0.0 && worst.is_none_or(|(_, w)| x > w) {
            worst = Some((v, x));
        }
    }
    worst
}

/// Total positive excess, used as the local-search objective.
fn total_excess(g: &BipartiteGraph, in_first: &[bool], epsilon: f64) -> f64 {
    g.side_vertices(1)
        .into_iter()
        .map(|v| {
            let nb = g.graph().neighbors(v);
            let a = nb.iter().filter(|&w| in_first[w]).count();
            excess(a, nb.len(), epsilon).max(0.0)
        })
        .sum()
}

/// Seeded random splits, then single-vertex moves from the best draw.
pub fn good_partition(
    g: &BipartiteGraph,
    epsilon: f64,
    seed: u64,
    max_tries: usize,
) -> Result<std::result::Result<GoodPartition, PartitionFailure>> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(GraphError::InvalidParameter(format!(
            "epsilon = {epsilon} must be in (0, 1/2)"
        )));
    }
    let left = g.side_vertices(0);
    let n = g.graph().n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, Vec<bool>)> = None;
    let finish = |in_first: &[bool], tries: usize, by_local_search: bool| {
        let (first, second) = left.iter().partition(|&&v| in_first[v]);
        GoodPartition {
            first,
            second,
            epsilon,
            tries,
            by_local_search,
        }
    };
    for t in 1..=max_tries {
        let mut in_first = vec![false; n];
        for &v in &left {
            in_first[v] = rng.gen_bool(0.5);
        }
        if worst_violation(g, &in_first, epsilon).is_none() {
            return Ok(Ok(finish(&in_first, t, false)));
        }
        let score = total_excess(g, &in_first, epsilon);
        if best.as_ref().is_none_or(|(s, _)| score < *s) {
            best = Some((score, in_first));
        }
    }
    let (mut score, mut in_first) = best.unwrap_or_else(|| {
        let in_first: Vec<bool> = (0..n)
            .map(|v| left.binary_search(&v).is_ok_and(|i| i % 2 == 0))
            .collect();
        (total_excess(g, &in_first, epsilon), in_first)
    });
    loop {
        if worst_violation(g, &in_first, epsilon).is_none() {
            return Ok(Ok(finish(&in_first, max_tries, true)));
        }
        let mut step: Option<(f64, Vertex)> = None;
        for &v in &left {
            in_first[v] = !in_first[v];
            let s = total_excess(g, &in_first, epsilon);
            in_first[v] = !in_first[v];
            if s < score && step.is_none_or(|(b, _)| s < b) {
                step = Some((s, v));
            }
        }
        match step {
            Some((s, v)) => {
                in_first[v] = !in_first[v];
                score = s;
            }
            None => {
                let (worst_vertex, excess) =
                    worst_violation(g, &in_first, epsilon).expect("violating");
                return Ok(Err(PartitionFailure {
                    worst_vertex,
                    excess,
                    tries: max_tries,
                }));
            }
        }
    }
}
