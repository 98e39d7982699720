//! Simple undirected graphs with bitset adjacency, plus the bipartite and
//! rooted wrappers used throughout the crate.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::bitset::VertexSet;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("codegree of vertex {0} with itself is undefined")]
    CodegreeWithSelf(Vertex),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("edge {0} {1} does not cross the bipartition")]
    EdgeWithinSide(Vertex, Vertex),
    #[error("side label vector has length {got}, expected {expected}")]
    SideLength { got: usize, expected: usize },
    #[error("vertex {vertex} is not on side {side}")]
    WrongSide { vertex: Vertex, side: u8 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            edges: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && !self.adj[u].contains(v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges += 1;
    }

    #[inline]
    pub(crate) fn remove_edge_unchecked(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(self.adj[u].contains(v));
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.edges -= 1;
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Same vertex set, keeping only edges with both ends in `keep`.
    pub fn restrict_edges_to(&self, keep: &VertexSet) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            if keep.contains(u) && keep.contains(v) {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub fn without_edges(&self, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(GraphError::InvalidParameter(format!(
                    "edge {u} {v} not present"
                )));
            }
            g.remove_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        (0..self.n).find(|&v| self.degree(v) == 0)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

pub(crate) fn check_permutation(perm: &[Vertex], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(GraphError::InvalidParameter(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(GraphError::InvalidParameter("not a permutation".into()));
        }
    }
    Ok(())
}

/// A graph with a proper two-sided vertex labeling (side 0 = L/A, side 1 = R/B).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    side: Vec<u8>,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, side: Vec<u8>) -> Result<Self> {
        if side.len() != graph.n() {
            return Err(GraphError::SideLength {
                got: side.len(),
                expected: graph.n(),
            });
        }
        if let Some(&bad) = side.iter().find(|&&s| s > 1) {
            return Err(GraphError::InvalidParameter(format!("side label {bad}")));
        }
        for (u, v) in graph.edges() {
            if side[u] == side[v] {
                return Err(GraphError::EdgeWithinSide(u, v));
            }
        }
        Ok(BipartiteGraph { graph, side })
    }

    /// Host `K_{a,b}`-style layout: vertices `0..a` on side 0, `a..a+b` on side 1.
    pub fn from_biadjacency(
        a: usize,
        b: usize,
        cells: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let graph = Graph::from_edges(a + b, cells.into_iter().map(|(i, j)| (i, a + j)))?;
        let side = (0..a + b).map(|v| u8::from(v >= a)).collect();
        BipartiteGraph::new(graph, side)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    #[inline]
    pub fn side(&self, v: Vertex) -> u8 {
        self.side[v]
    }

    pub fn side_vertices(&self, s: u8) -> Vec<Vertex> {
        (0..self.graph.n()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn side_set(&self, s: u8) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.graph.n(), self.side_vertices(s))
    }

    pub fn swap_sides(&self) -> BipartiteGraph {
        BipartiteGraph {
            graph: self.graph.clone(),
            side: self.side.iter().map(|s| 1 - s).collect(),
        }
    }

    /// Keeps the vertex ids; drops every edge not inside `keep`.
    pub fn restrict_edges_to(&self, keep: &VertexSet) -> BipartiteGraph {
        BipartiteGraph {
            graph: self.graph.restrict_edges_to(keep),
            side: self.side.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    root: Vertex,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: Vertex) -> Result<Self> {
        graph.check_vertex(root)?;
        Ok(RootedGraph { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

pub fn codegree(g: &Graph, u: Vertex, v: Vertex) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::CodegreeWithSelf(u));
    }
    Ok(g.neighbors(u).intersection_len(g.neighbors(v)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite(BipartiteGraph),
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<Vertex>),
}

/// BFS 2-coloring; the smallest vertex of each component gets side 0.
pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for v in g.neighbors(u).iter() {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Bipartition::OddCycle(tree_cycle(u, v, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let side = color.into_iter().map(|c| c.unwrap()).collect();
    Bipartition::Bipartite(BipartiteGraph::new(g.clone(), side).expect("2-coloring is proper"))
}

fn tree_cycle(u: Vertex, v: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Vertex ordering in which every vertex has at most `d` neighbors placed
/// before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<Vertex>,
    /// `back_degrees[i]` = neighbors of `order[i]` among `order[..i]`.
    pub back_degrees: Vec<usize>,
}

impl EliminationOrder {
    pub fn from_order(g: &Graph, order: Vec<Vertex>) -> Result<Self> {
        let mut pos = vec![usize::MAX; g.n()];
        if order.len() != g.n() {
            return Err(GraphError::InvalidParameter(
                "order is not a permutation".into(),
            ));
        }
        for (i, &v) in order.iter().enumerate() {
            g.check_vertex(v)?;
            if pos[v] != usize::MAX {
                return Err(GraphError::InvalidParameter(
                    "order is not a permutation".into(),
                ));
            }
            pos[v] = i;
        }
        let back_degrees = order
            .iter()
            .enumerate()
            .map(|(i, &v)| g.neighbors(v).iter().filter(|&w| pos[w] < i).count())
            .collect();
        Ok(EliminationOrder {
            order,
            back_degrees,
        })
    }

    /// Builds the order from a peeling sequence (first removed = last placed).
    pub fn from_removal_sequence(g: &Graph, removal: &[Vertex]) -> Result<Self> {
        let mut order = removal.to_vec();
        order.reverse();
        Self::from_order(g, order)
    }

    pub fn max_back_degree(&self) -> usize {
        self.back_degrees.iter().copied().max().unwrap_or(0)
    }

    /// Recomputes back-degrees against `g` and checks they are all `<= d`.
    pub fn witnesses(&self, g: &Graph, d: usize) -> bool {
        match Self::from_order(g, self.order.clone()) {
            Ok(fresh) => fresh == *self && fresh.max_back_degree() <= d,
            Err(_) => false,
        }
    }
}

/// Min-degree peeling with smallest-id tie-break.
pub fn degeneracy(g: &Graph) -> (usize, EliminationOrder) {
    let n = g.n();
    let mut deg = g.degrees();
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut sequence = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v] = true;
        sequence.push(v);
        for w in g.neighbors(v).iter() {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    let order =
        EliminationOrder::from_removal_sequence(g, &sequence).expect("peeling visits every vertex");
    (d, order)
}

/// `r`-degenerate with exactly one vertex of degree `r` and all others of
/// degree at least `r + 1`.
pub fn is_critical_r_degenerate(g: &Graph, r: usize) -> bool {
    if g.n() == 0 {
        return false;
    }
    let (d, _) = degeneracy(g);
    let degs = g.degrees();
    d <= r && degs.iter().filter(|&&x| x == r).count() == 1 && degs.iter().all(|&x| x >= r)
}

pub fn is_k_almost_regular(g: &Graph, k: f64) -> Result<bool> {
    if k.is_nan() || k < 1.0 {
        return Err(GraphError::InvalidParameter(format!(
            "K = {k} must be >= 1"
        )));
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(GraphError::IsolatedVertex(v));
    }
    Ok(g.max_degree() as f64 <= k * g.min_degree() as f64)
}

/// Compactly relabeled subgraph on `left ∪ right`, keeping exactly the edges
/// between the two sets.
#[derive(Clone, Debug)]
pub struct InducedBipartite {
    pub graph: BipartiteGraph,
    /// `vertices[i]` is the original id of new vertex `i`.
    pub vertices: Vec<Vertex>,
}

pub fn induced_bipartite_subgraph(
    g: &BipartiteGraph,
    left: &[Vertex],
    right: &[Vertex],
) -> Result<InducedBipartite> {
    for (set, s) in [(left, 0u8), (right, 1u8)] {
        for &v in set {
            g.graph().check_vertex(v)?;
            if g.side(v) != s {
                return Err(GraphError::WrongSide { vertex: v, side: s });
            }
        }
    }
    let mut vertices: Vec<Vertex> = left.iter().chain(right).copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    let sub = g.graph().induced_subgraph(&vertices);
    let side = vertices.iter().map(|&v| g.side(v)).collect();
    Ok(InducedBipartite {
        graph: BipartiteGraph::new(sub, side)?,
        vertices,
    })
}
