//! Balanced cuts and minimum-degree peeling.

use crate::graph::{BipartiteGraph, Graph, GraphError, Result, Vertex};

/// Balanced bipartite subgraph keeping at least `ceil(e / 2)` edges.
///
/// Vertices are assigned in id order to whichever side keeps the expected cut
/// of a uniformly random completion (with the remaining side capacities)
/// larger. That expectation starts above `e / 2` and never drops, so the
/// final cut does too. Improving swaps are then applied until none is left.
/// Side 0 gets `ceil(n / 2)` vertices.
pub fn balanced_bipartite_subgraph(g: &Graph) -> Result<BipartiteGraph> {
    let n = g.n();
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let mut side: Vec<Option<u8>> = vec![None; n];
    let mut cap = [n.div_ceil(2), n / 2];
    for v in 0..n {
        let choice = if cap[0] == 0 {
            1
        } else if cap[1] == 0 {
            0
        } else {
            side[v] = Some(0);
            cap[0] -= 1;
            let to_first = expected_cut_numerator(g, &side, cap);
            cap[0] += 1;
            side[v] = Some(1);
            cap[1] -= 1;
            let to_second = expected_cut_numerator(g, &side, cap);
            cap[1] += 1;
            u8::from(to_second > to_first)
        };
        side[v] = Some(choice);
        cap[choice as usize] -= 1;
    }
    let mut side: Vec<u8> = side.into_iter().map(|s| s.expect("assigned")).collect();
    improve_by_swaps(g, &mut side);
    let crossing: Vec<(Vertex, Vertex)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| side[a] != side[b])
        .collect();
    BipartiteGraph::new(Graph::from_edges(n, crossing)?, side)
}

/// Expected crossing edges times `r * (r - 1)` (each factor at least 1),
/// where `r` vertices are still unassigned.
fn expected_cut_numerator(g: &Graph, side: &[Option<u8>], cap: [usize; 2]) -> u128 {
    let r = (cap[0] + cap[1]) as u128;
    let r1 = r.saturating_sub(1).max(1);
    let denom = r.max(1) * r1;
    let mut total = 0u128;
    for (a, b) in g.edges() {
        total += match (side[a], side[b]) {
            (Some(x), Some(y)) => {
                if x != y {
                    denom
                } else {
                    0
                }
            }
            (Some(s), None) | (None, Some(s)) => cap[1 - s as usize] as u128 * r1,
            (None, None) => 2 * cap[0] as u128 * cap[1] as u128,
        };
    }
    total
}

fn improve_by_swaps(g: &Graph, side: &mut [u8]) {
    let n = g.n();
    let same = |side: &[u8], v: Vertex| {
        g.neighbors(v)
            .iter()
            .filter(|&w| side[w] == side[v])
            .count() as i64
    };
    loop {
        let mut improved = false;
        'scan: for u in 0..n {
            for v in u + 1..n {
                if side[u] == side[v] {
                    continue;
                }
                let gain = 2 * same(side, u) - g.degree(u) as i64 + 2 * same(side, v)
                    - g.degree(v) as i64
                    + 2 * i64::from(g.has_edge(u, v));
                if gain > 0 {
                    side.swap(u, v);
                    improved = true;
                    break 'scan;
                }
            }
        }
        if !improved {
            return;
        }
    }
}

/// Result of peeling low-degree vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeled {
    /// Induced subgraph on `kept`, relabeled `0..kept.len()`.
    pub graph: Graph,
    /// Original ids of the surviving vertices, ascending.
    pub kept: Vec<Vertex>,
    pub original_edges: usize,
    pub original_n: usize,
}

impl Peeled {
    /// `2 n0 deg(v) >= e0` for every survivor.
    pub fn min_degree_holds(&self) -> bool {
        (0..self.graph.n())
            .all(|v| 2 * self.original_n * self.graph.degree(v) >= self.original_edges)
    }

    /// `2 e >= e0`.
    pub fn edge_bound_holds(&self) -> bool {
        2 * self.graph.edge_count() >= self.original_edges
    }
}

/// Deletes vertices of degree below `e(G) / (2n)` (threshold from the input)
/// until none is left.
pub fn min_degree_peel(g: &Graph) -> Result<Peeled> {
    let n = g.n();
    let e = g.edge_count();
    if e == 0 {
        return Err(GraphError::InvalidParameter("graph has no edges".into()));
    }
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let below = |d: usize| 2 * n * d < e;
    let mut stack: Vec<Vertex> = (0..n).rev().filter(|&v| below(deg[v])).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for w in g.neighbors(v).iter() {
            if alive[w] {
                deg[w] -= 1;
                if below(deg[w]) && !below(deg[w] + 1) {
                    stack.push(w);
                }
            }
        }
    }
    let kept: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    Ok(Peeled {
        graph: g.induced_subgraph(&kept),
        kept,
        original_edges: e,
        original_n: n,
    })
}
