//! Finding a copy of a glued graph through peel, split and pack.

use crate::bitset::VertexSet;
use crate::constructions::glue;
use crate::counting::embed::{find_embedding, verify_embedding, EmbedConstraints, Embedding};
use crate::graph::{
    is_bipartite, BipartiteGraph, Bipartition, Graph, GraphError, Result, RootedGraph, Vertex,
};
use crate::procedures::cut::{balanced_bipartite_subgraph, min_degree_peel};
use crate::procedures::packing::greedy_pack;
use crate::procedures::partition::good_partition;

pub const PIPELINE_EPSILON: f64 = 0.25;
pub const PIPELINE_MAX_TRIES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Bipartize,
    Peel,
    Partition,
    Pack,
    SecondCopy,
    Verify,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Bipartize => "bipartize",
            Stage::Peel => "peel",
            Stage::Partition => "partition",
            Stage::Pack => "pack",
            Stage::SecondCopy => "second_copy",
            Stage::Verify => "verify",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    /// Built from a packed copy and a second copy rooted at its root.
    Pipeline { sides_swapped: bool },
    /// The pipeline stopped at `failed_at`; plain search found a copy.
    DirectSearch { failed_at: Stage },
}

/// Numbers gathered along the way, for the trace.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PipelineStats {
    pub bipartite_edges: usize,
    pub peeled_vertices: usize,
    pub peeled_edges: usize,
    pub partition_tries: usize,
    pub first_part_edges: usize,
    pub second_part_edges: usize,
    pub packed_copies: usize,
    pub threshold: f64,
}

#[derive(Clone, Debug)]
pub enum GluedOutcome {
    /// `embedding` maps `glue(H1, H2)` (labels as in [`glue`]) into `G`.
    Found {
        embedding: Embedding,
        glued: RootedGraph,
        route: Route,
        stats: PipelineStats,
    },
    NotFound {
        failed_at: Stage,
        stats: PipelineStats,
    },
}

/// `divisor` defaults to `48 v(H1)`; the packing threshold is `e(G1) / divisor`.
pub fn find_glued_copy(
    g: &Graph,
    h1: &RootedGraph,
    h2: &RootedGraph,
    divisor: Option<f64>,
    seed: u64,
) -> Result<GluedOutcome> {
    for h in [h1, h2] {
        if let Bipartition::OddCycle(_) = is_bipartite(h.graph()) {
            return Err(GraphError::InvalidParameter(
                "patterns must be bipartite".into(),
            ));
        }
    }
    let glued = glue(h1, h2)?;
    let divisor = divisor.unwrap_or(48.0 * h1.graph().n() as f64);
    if divisor.is_nan() || divisor <= 0.0 {
        return Err(GraphError::InvalidParameter(format!(
            "divisor {divisor} must be positive"
        )));
    }
    let mut stats = PipelineStats::default();
    let mut failed_at = Stage::Bipartize;
    for sides_swapped in [false, true] {
        match attempt(g, h1, h2, &glued, divisor, seed, sides_swapped, &mut stats)? {
            Ok(embedding) => {
                return Ok(GluedOutcome::Found {
                    embedding,
                    glued,
                    route: Route::Pipeline { sides_swapped },
                    stats,
                })
            }
            Err(stage) => failed_at = stage,
        }
    }
    match find_embedding(glued.graph(), g, &EmbedConstraints::none())? {
        Some(embedding) => Ok(GluedOutcome::Found {
            embedding,
            glued,
            route: Route::DirectSearch { failed_at },
            stats,
        }),
        None => Ok(GluedOutcome::NotFound { failed_at, stats }),
    }
}

#[allow(clippy::too_many_arguments)]
fn attempt(
    g: &Graph,
    h1: &RootedGraph,
    h2: &RootedGraph,
    glued: &RootedGraph,
    divisor: f64,
    seed: u64,
    sides_swapped: bool,
    stats: &mut PipelineStats,
) -> Result<std::result::Result<Embedding, Stage>> {
    if g.n() < 2 || g.edge_count() == 0 {
        return Ok(Err(Stage::Bipartize));
    }
    let bip = match is_bipartite(g) {
        Bipartition::Bipartite(b) => b,
        Bipartition::OddCycle(_) => balanced_bipartite_subgraph(g)?,
    };
    let bip = if sides_swapped { bip.swap_sides() } else { bip };
    stats.bipartite_edges = bip.graph().edge_count();
    if stats.bipartite_edges == 0 {
        return Ok(Err(Stage::Bipartize));
    }

    // peeled ids are compact; `kept` maps back to `g`
    let peeled = min_degree_peel(bip.graph())?;
    let kept = peeled.kept;
    let sides: Vec<u8> = kept.iter().map(|&v| bip.side(v)).collect();
    let star = BipartiteGraph::new(peeled.graph, sides)?;
    stats.peeled_vertices = star.graph().n();
    stats.peeled_edges = star.graph().edge_count();
    if star.side_vertices(0).is_empty() || star.side_vertices(1).is_empty() {
        return Ok(Err(Stage::Peel));
    }

    let split = match good_partition(&star, PIPELINE_EPSILON, seed, PIPELINE_MAX_TRIES)? {
        Ok(p) => p,
        Err(_) => return Ok(Err(Stage::Partition)),
    };
    stats.partition_tries = split.tries;
    let n = star.graph().n();
    let mut first_keep = star.side_set(1);
    for &v in &split.first {
        first_keep.insert(v);
    }
    let mut second_keep = star.side_set(1);
    for &v in &split.second {
        second_keep.insert(v);
    }
    let first = star.restrict_edges_to(&first_keep);
    let second = star.restrict_edges_to(&second_keep);
    stats.first_part_edges = first.graph().edge_count();
    stats.second_part_edges = second.graph().edge_count();

    stats.threshold = first.graph().edge_count() as f64 / divisor;
    let pack = match greedy_pack(&first, h1, stats.threshold) {
        Ok(p) => p,
        Err(_) => return Ok(Err(Stage::Pack)),
    };
    stats.packed_copies = pack.k();
    if pack.k() == 0 {
        return Ok(Err(Stage::Pack));
    }

    for (t, copy) in pack.copies.iter().enumerate() {
        let root = pack.roots[t];
        let mut forbidden = VertexSet::from_iter_with_capacity(n, copy.image());
        forbidden.remove(root);
        let c = EmbedConstraints::none()
            .with_root(h2.root(), VertexSet::from_iter_with_capacity(n, [root]))
            .with_forbidden(forbidden);
        let Some(other) = find_embedding(h2.graph(), second.graph(), &c)? else {
            continue;
        };
        let map = assemble(h2, &copy.map, &other.map, &kept);
        let embedding = Embedding {
            map,
            side_respecting: false,
            root_constrained: false,
        };
        if verify_embedding(glued.graph(), g, &embedding, &EmbedConstraints::none()).is_err() {
            return Ok(Err(Stage::Verify));
        }
        return Ok(Ok(embedding));
    }
    Ok(Err(Stage::SecondCopy))
}

/// Glued labeling: the first pattern's ids first, then `h2`'s non-root vertices in order.
fn assemble(h2: &RootedGraph, first: &[Vertex], second: &[Vertex], kept: &[Vertex]) -> Vec<Vertex> {
    let mut map: Vec<Vertex> = first.iter().map(|&v| kept[v]).collect();
    map.extend(
        (0..h2.graph().n())
            .filter(|&v| v != h2.root())
            .map(|v| kept[second[v]]),
    );
    map
}
