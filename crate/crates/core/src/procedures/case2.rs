//! The thin-4-cycle relation pipeline as a measured trace, and the
//! path-prism density predicate.

use num_rational::Ratio;

use crate::bitset::VertexSet;
use crate::constructions::{glued_prism, prism};
use crate::counting::embed::{contains, EmbedConstraints};
use crate::counting::fourcycle::{thin_cycle_auxiliary, ThinCycleParams};
use crate::counting::relation::{find_good_hom_cycle, min_nice_beta, Relation};
use crate::graph::{BipartiteGraph, Graph, GraphError, Result, Vertex};
use crate::procedures::cut::{balanced_bipartite_subgraph, min_degree_peel};

/// Ordered `key=value` records, plus where the run stopped early if it did.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub records: Vec<(String, String)>,
    pub halted: Option<String>,
}

impl Trace {
    fn put(&mut self, key: &str, value: impl ToString) {
        self.records.push((key.to_string(), value.to_string()));
    }

    fn halt(mut self, reason: &str) -> Self {
        self.halted = Some(reason.to_string());
        self.put("halted", reason);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.records
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn to_lines(&self) -> String {
        self.records
            .iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }
}

/// Vertices of an auxiliary subgraph with their edges of `G`.
struct EdgeGraph {
    graph: Graph,
    /// Ids in the graph this one was peeled from.
    kept: Vec<Vertex>,
    side: Vec<u8>,
    edge_of: Vec<(Vertex, Vertex)>,
}

impl EdgeGraph {
    /// Bipartite part, then peeled to the minimum-degree core.
    fn reduce(graph: &Graph, side: &[u8], edge_of: &[(Vertex, Vertex)]) -> Result<EdgeGraph> {
        let peeled = min_degree_peel(graph)?;
        Ok(EdgeGraph {
            side: peeled.kept.iter().map(|&v| side[v]).collect(),
            edge_of: peeled.kept.iter().map(|&v| edge_of[v]).collect(),
            graph: peeled.graph,
            kept: peeled.kept,
        })
    }
}

fn beta_string(b: Ratio<u64>) -> String {
    format!("{}/{}", b.numer(), b.denom())
}

/// Runs the auxiliary-graph argument on `g` and reports what it measures.
///
/// The cycle searches require the `2l` auxiliary vertices of a cycle to be
/// distinct (the relations are closed under equality for the search), so
/// every reported cycle spans `2l` distinct edges of `g`.
pub fn case2_relation_pipeline(g: &Graph, tau: f64, l: usize) -> Result<Trace> {
    if l < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "l = {l} must be >= 2"
        )));
    }
    let params = ThinCycleParams::new(tau)?;
    let mut trace = Trace::default();
    trace.put("graph_vertices", g.n());
    trace.put("graph_edges", g.edge_count());
    trace.put("tau", tau);
    trace.put("l", l);

    let aux = thin_cycle_auxiliary(g, params);
    trace.put("aux_vertices", aux.graph.n());
    trace.put("aux_edges", aux.graph.edge_count());
    if aux.graph.edge_count() == 0 {
        return Ok(trace.halt("aux_has_no_edges"));
    }

    let bip = balanced_bipartite_subgraph(&aux.graph)?;
    trace.put("bipartite_edges", bip.graph().edge_count());
    let core = EdgeGraph::reduce(bip.graph(), bip.sides(), &aux.edge_of)?;
    let core_edges = core.graph.edge_count();
    trace.put("core_vertices", core.graph.n());
    trace.put("core_edges", core_edges);
    trace.put("core_min_degree", core.graph.min_degree());

    let shares = Relation::shares_endpoint(&core.edge_of);
    let beta_shares = min_nice_beta(&core.graph, &shares)?;
    trace.put("beta_shares_endpoint", beta_string(beta_shares));

    // disjoint-on-side-0 good cycles while enough side-0 edges remain
    let search_rel = shares.with_diagonal();
    let n = core.graph.n();
    let mut used_left = VertexSet::new(n);
    let mut cycles: Vec<Vec<Vertex>> = Vec::new();
    loop {
        let mut keep = VertexSet::full(n);
        keep.difference_with(&used_left);
        let remaining = Graph::from_edges(
            n,
            core.graph.edges().into_iter().filter(|&(a, b)| {
                let left = if core.side[a] == 0 { a } else { b };
                keep.contains(left)
            }),
        )?;
        if 2 * remaining.edge_count() < core_edges {
            break;
        }
        let found = find_good_hom_cycle(&remaining, &search_rel, l, Some(5_000_000))?;
        let Some(cycle) = found.cycle else {
            if found.budget_exhausted {
                trace.put("cycle_search_budget_exhausted", true);
            }
            break;
        };
        for &x in &cycle {
            if core.side[x] == 0 {
                used_left.insert(x);
            }
        }
        cycles.push(cycle);
    }
    trace.put("good_cycles", cycles.len());
    let prism_pattern = prism(2 * l)?;
    for (i, c) in cycles.iter().enumerate() {
        let span = span_graph(g, c.iter().map(|&x| core.edge_of[x]));
        let is_prism = contains(&prism_pattern, &span, &EmbedConstraints::none())?;
        trace.put(&format!("cycle_{i}"), format_cycle(c, &core.edge_of));
        trace.put(&format!("cycle_{i}_spans_prism"), is_prism);
    }
    if cycles.is_empty() {
        return Ok(trace.halt("no_good_cycle"));
    }

    // X_e: the vertices of e's cycle on side 0, the edge's own ends on side 1
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, c) in cycles.iter().enumerate() {
        for &x in c {
            if core.side[x] == 0 {
                owner[x] = Some(i);
            }
        }
    }
    let mut keep = VertexSet::new(n);
    for v in 0..n {
        if core.side[v] == 1 || owner[v].is_some() {
            keep.insert(v);
        }
    }
    let restricted = core.graph.restrict_edges_to(&keep);
    trace.put("restricted_edges", restricted.edge_count());
    if restricted.edge_count() == 0 {
        return Ok(trace.halt("restricted_has_no_edges"));
    }
    let sets: Vec<VertexSet> = (0..n)
        .map(|v| match owner[v] {
            Some(i) => VertexSet::from_iter_with_capacity(
                g.n(),
                cycles[i].iter().flat_map(|&x| {
                    let (a, b) = core.edge_of[x];
                    [a, b]
                }),
            ),
            None => {
                let (a, b) = core.edge_of[v];
                VertexSet::from_iter_with_capacity(g.n(), [a, b])
            }
        })
        .collect();
    let arrow_all = Relation::from_vertex_sets(&core.edge_of, &sets)?;
    let tilde = EdgeGraph::reduce(&restricted, &core.side, &core.edge_of)?;
    trace.put("tilde_vertices", tilde.graph.n());
    trace.put("tilde_edges", tilde.graph.edge_count());
    let kept = &tilde.kept;
    let arrow = Relation::from_fn(kept.len(), |i, j| {
        i != j && arrow_all.holds(kept[i], kept[j])
    });
    let beta_arrow = min_nice_beta(&tilde.graph, &arrow)?;
    trace.put("beta_arrow", beta_string(beta_arrow));

    let found = find_good_hom_cycle(&tilde.graph, &arrow.with_diagonal(), l, Some(5_000_000))?;
    let Some(last) = found.cycle else {
        if found.budget_exhausted {
            trace.put("cycle_search_budget_exhausted", true);
        }
        return Ok(trace.halt("no_good_cycle_in_tilde"));
    };
    trace.put("final_cycle", format_cycle(&last, &tilde.edge_of));
    let anchor = last.iter().copied().find(|&x| tilde.side[x] == 0);
    if let Some(x) = anchor {
        let v = kept[x];
        let i = owner[v].expect("side-0 vertices of the restricted graph lie on cycles");
        let span = span_graph(
            g,
            cycles[i]
                .iter()
                .map(|&y| core.edge_of[y])
                .chain(last.iter().map(|&y| tilde.edge_of[y])),
        );
        let glued = contains(&glued_prism(l)?, &span, &EmbedConstraints::none())?;
        trace.put("anchor_edge", format_edge(core.edge_of[v]));
        trace.put("spans_glued_prism", glued);
    }
    Ok(trace)
}

/// Subgraph of `g` on the given edges plus all edges of `g` between their ends.
fn span_graph(g: &Graph, edges: impl Iterator<Item = (Vertex, Vertex)>) -> Graph {
    let mut vs = VertexSet::new(g.n());
    for (a, b) in edges {
        vs.insert(a);
        vs.insert(b);
    }
    g.restrict_edges_to(&vs)
}

fn format_edge((a, b): (Vertex, Vertex)) -> String {
    format!("{a}-{b}")
}

fn format_cycle(c: &[Vertex], edge_of: &[(Vertex, Vertex)]) -> String {
    c.iter()
        .map(|&x| format_edge(edge_of[x]))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Density hypothesis for finding `P_t □ K_2` in a bipartite `(X, Y)` graph
/// with `X` side 0: `e >= 20 t |Y|` and `deg(x) >= 20 t sqrt|Y|` on `X`.
pub fn path_prism_hypothesis(h: &BipartiteGraph, t: usize) -> bool {
    let y = h.side_vertices(1).len();
    let g = h.graph();
    g.edge_count() >= 20 * t * y
        && h.side_vertices(0).into_iter().all(|x| {
            let d = g.degree(x);
            d * d >= 400 * t * t * y
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, cycle};

    #[test]
    fn k23_trace() {
        let t = case2_relation_pipeline(&complete_bipartite(2, 3), 3.0, 2).unwrap();
        assert_eq!(t.get("aux_vertices"), Some("6"));
        assert_eq!(t.get("aux_edges"), Some("6"));
        // the auxiliary graph is a 6-cycle: every vertex's two neighbors share an endpoint
        assert_eq!(t.get("beta_shares_endpoint"), Some("1/1"));
        assert_eq!(t.halted.as_deref(), Some("no_good_cycle"));
    }

    #[test]
    fn no_thin_cycles_halts_early() {
        let t = case2_relation_pipeline(&complete_bipartite(2, 3), 2.0, 2).unwrap();
        assert_eq!(t.halted.as_deref(), Some("aux_has_no_edges"));
        let t = case2_relation_pipeline(&cycle(5).unwrap(), 9.0, 2).unwrap();
        assert_eq!(t.halted.as_deref(), Some("aux_has_no_edges"));
        assert!(t.to_lines().ends_with("halted=aux_has_no_edges\n"));
    }

    #[test]
    fn shares_endpoint_on_aux_is_symmetric() {
        let aux = thin_cycle_auxiliary(
            &complete_bipartite(2, 3),
            ThinCycleParams::new(3.0).unwrap(),
        );
        let r = Relation::shares_endpoint(&aux.edge_of);
        for a in 0..r.n() {
            for b in 0..r.n() {
                assert_eq!(r.holds(a, b), r.holds(b, a));
            }
        }
    }

    #[test]
    fn prism_rich_graph_runs_to_the_end() {
        // the 4 x 4 torus grid: every 4-cycle is thin at tau = 2
        let n = 16;
        let id = |i: usize, j: usize| (i % 4) * 4 + (j % 4);
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                edges.push((id(i, j), id(i + 1, j)));
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
        let g = Graph::from_edges(n, edges.into_iter().map(|(a, b)| (a.min(b), a.max(b)))).unwrap();
        let t = case2_relation_pipeline(&g, 2.0, 2).unwrap();
        assert!(t.get("aux_edges").is_some());
        assert!(t.get("beta_shares_endpoint").is_some());
    }

    #[test]
    fn path_prism_predicate() {
        // K_{a,b} meets it exactly when a >= 20t and b >= 400t^2
        let dense = BipartiteGraph::from_biadjacency(
            20,
            400,
            (0..20).flat_map(|i| (0..400).map(move |j| (i, j))),
        )
        .unwrap();
        assert!(path_prism_hypothesis(&dense, 1));
        assert!(!path_prism_hypothesis(&dense, 2));
        let thin = BipartiteGraph::from_biadjacency(
            19,
            400,
            (0..19).flat_map(|i| (0..400).map(move |j| (i, j))),
        )
        .unwrap();
        assert!(!path_prism_hypothesis(&thin, 1));
    }
}
