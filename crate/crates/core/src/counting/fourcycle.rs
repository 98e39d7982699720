//! Thin and thick 4-cycles, and the auxiliary graph on edges.

use std::collections::BTreeSet;

use crate::graph::{codegree, Graph, GraphError, Result, Vertex};

/// Codegree threshold separating thin from thick 4-cycles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThinCycleParams {
    pub tau: f64,
}

impl ThinCycleParams {
    pub fn new(tau: f64) -> Result<Self> {
        if tau.is_nan() || tau < 0.0 {
            return Err(GraphError::InvalidParameter(format!(
                "tau = {tau} must be >= 0"
            )));
        }
        Ok(ThinCycleParams { tau })
    }
}

/// A 4-cycle `x y z w` with `x` its smallest vertex and `y < w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCycle {
    pub vertices: [Vertex; 4],
    /// `codeg(x, z)`
    pub first_diagonal: usize,
    /// `codeg(y, w)`
    pub second_diagonal: usize,
}

impl FourCycle {
    /// The two pairs of opposite edges, each edge as `(min, max)`.
    pub fn opposite_pairs(&self) -> [((Vertex, Vertex), (Vertex, Vertex)); 2] {
        let [x, y, z, w] = self.vertices;
        let e = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
        [(e(x, y), e(z, w)), (e(y, z), e(w, x))]
    }

    pub fn is_thin(&self, params: ThinCycleParams) -> bool {
        self.first_diagonal as f64 <= params.tau && self.second_diagonal as f64 <= params.tau
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FourCycleCensus {
    pub thin: Vec<FourCycle>,
    pub thick: Vec<FourCycle>,
}

impl FourCycleCensus {
    pub fn total(&self) -> usize {
        self.thin.len() + self.thick.len()
    }
}

/// Every 4-cycle once, in lexicographic order of its canonical vertex tuple.
pub fn four_cycles(g: &Graph) -> Vec<FourCycle> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        let up: Vec<Vertex> = g.neighbors(x).iter().filter(|&v| v > x).collect();
        for (i, &y) in up.iter().enumerate() {
            for &w in &up[i + 1..] {
                let mut common = g.neighbors(y).clone();
                common.intersect_with(g.neighbors(w));
                for z in common.iter().filter(|&z| z > x) {
                    out.push(FourCycle {
                        vertices: [x, y, z, w],
                        first_diagonal: codegree(g, x, z).expect("distinct"),
                        second_diagonal: codegree(g, y, w).expect("distinct"),
                    });
                }
            }
        }
    }
    out.sort_by_key(|c| c.vertices);
    out
}

pub fn four_cycle_census(g: &Graph, params: ThinCycleParams) -> FourCycleCensus {
    let (thin, thick) = four_cycles(g).into_iter().partition(|c| c.is_thin(params));
    FourCycleCensus { thin, thick }
}

/// The auxiliary graph on `E(G)` joining opposite edges of thin 4-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinCycleAuxiliary {
    pub graph: Graph,
    /// `edge_of[i]` is the edge of `G` that vertex `i` stands for.
    pub edge_of: Vec<(Vertex, Vertex)>,
}

impl ThinCycleAuxiliary {
    pub fn vertex_of(&self, e: (Vertex, Vertex)) -> Option<Vertex> {
        let e = (e.0.min(e.1), e.0.max(e.1));
        self.edge_of.binary_search(&e).ok()
    }
}

pub fn thin_cycle_auxiliary(g: &Graph, params: ThinCycleParams) -> ThinCycleAuxiliary {
    let edge_of = g.edges();
    let index = |e: (Vertex, Vertex)| {
        edge_of
            .binary_search(&e)
            .expect("cycle edges are graph edges")
    };
    let mut pairs = BTreeSet::new();
    for c in four_cycle_census(g, params).thin {
        for (a, b) in c.opposite_pairs() {
            let (i, j) = (index(a), index(b));
            pairs.insert((i.min(j), i.max(j)));
        }
    }
    let graph = Graph::from_edges(edge_of.len(), pairs).expect("opposite edges are distinct");
    ThinCycleAuxiliary { graph, edge_of }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, star};
    use crate::counting::embed::count_copies;
    use crate::random::random_graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(tau: f64) -> ThinCycleParams {
        ThinCycleParams::new(tau).unwrap()
    }

    #[test]
    fn census_on_k23() {
        let g = complete_bipartite(2, 3);
        let c = four_cycle_census(&g, p(3.0));
        assert_eq!((c.thin.len(), c.thick.len()), (3, 0));
        let c = four_cycle_census(&g, p(2.0));
        assert_eq!((c.thin.len(), c.thick.len()), (0, 3));
        let c4 = four_cycle_census(&cycle(4).unwrap(), p(2.0));
        assert_eq!(c4.thin.len(), 1);
        assert_eq!(c4.thin[0].vertices, [0, 1, 2, 3]);
    }

    #[test]
    fn auxiliary_examples() {
        let a = thin_cycle_auxiliary(&cycle(4).unwrap(), p(2.0));
        assert_eq!((a.graph.n(), a.graph.edge_count()), (4, 2));
        let a = thin_cycle_auxiliary(&star(3), p(10.0));
        assert_eq!((a.graph.n(), a.graph.edge_count()), (3, 0));
        let a = thin_cycle_auxiliary(&complete_bipartite(2, 3), p(3.0));
        assert_eq!((a.graph.n(), a.graph.edge_count()), (6, 6));
        assert_eq!(a.vertex_of((3, 0)), Some(1));
    }

    #[test]
    fn negative_tau_rejected() {
        assert!(ThinCycleParams::new(-1.0).is_err());
        assert!(ThinCycleParams::new(f64::NAN).is_err());
    }

    #[test]
    fn total_matches_copy_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for i in 0..25 {
            let g = random_graph(&mut rng, 3 + i % 6, 0.5);
            let total = four_cycles(&g).len() as u64;
            assert_eq!(total, count_copies(&cycle(4).unwrap(), &g).unwrap());
        }
        assert_eq!(four_cycles(&complete(5)).len(), 15);
    }
}
