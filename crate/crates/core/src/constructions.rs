//! Graph families with fixed, documented vertex labelings.

use crate::graph::{
    BipartiteGraph, EliminationOrder, Graph, GraphError, Result, RootedGraph, Vertex,
};

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

/// `C_l` on `0..l`, edges `i ~ i+1 mod l`.
pub fn cycle(l: usize) -> Result<Graph> {
    if l < 3 {
        return Err(invalid(format!("cycle length {l} < 3")));
    }
    Graph::from_edges(l, (0..l).map(|i| (i, (i + 1) % l)))
}

/// The `t`-edge path `0 - 1 - ... - t`.
pub fn path(t: usize) -> Graph {
    Graph::from_edges(t + 1, (0..t).map(|i| (i, i + 1))).expect("path edges are valid")
}

pub fn complete(s: usize) -> Graph {
    Graph::from_edges(s, (0..s).flat_map(|u| (u + 1..s).map(move |v| (u, v)))).expect("valid")
}

/// `K_{a,b}` with side `0..a` and side `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("valid")
}

/// `K_{1,k}` centered at 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardGraph {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

pub fn standard_graph(which: StandardGraph) -> Result<Graph> {
    match which {
        StandardGraph::Cycle(l) => cycle(l),
        StandardGraph::Path(t) => Ok(path(t)),
        StandardGraph::Complete(0) => Err(invalid("complete graph needs at least one vertex")),
        StandardGraph::Complete(s) => Ok(complete(s)),
        StandardGraph::CompleteBipartite(a, b) if a == 0 || b == 0 => {
            Err(invalid("complete bipartite graph needs two nonempty sides"))
        }
        StandardGraph::CompleteBipartite(a, b) => Ok(complete_bipartite(a, b)),
    }
}

/// Identifies the root of `h2` with the root of `h1`.
///
/// `h1` keeps ids `0..v(h1)`; the non-root vertices of `h2` follow in their
/// original order. The result is rooted at the merged vertex.
pub fn glue(h1: &RootedGraph, h2: &RootedGraph) -> Result<RootedGraph> {
    let (g1, g2) = (h1.graph(), h2.graph());
    let n1 = g1.n();
    let mut map = vec![0; g2.n()];
    let mut next = n1;
    for (v, slot) in map.iter_mut().enumerate() {
        if v == h2.root() {
            *slot = h1.root();
        } else {
            *slot = next;
            next += 1;
        }
    }
    let edges = g1
        .edges()
        .into_iter()
        .chain(g2.edges().into_iter().map(|(u, v)| (map[u], map[v])));
    RootedGraph::new(Graph::from_edges(next, edges)?, h1.root())
}

/// Which factor an edge of `G □ H` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductEdgeType {
    /// Changes the `G` coordinate (`v = v'`).
    LeftFactor,
    /// Changes the `H` coordinate (`u = u'`).
    RightFactor,
}

#[derive(Clone, Debug)]
pub struct CartesianProduct {
    pub graph: Graph,
    /// Aligned with `graph.edges()`.
    pub tags: Vec<ProductEdgeType>,
    right_order: usize,
}

impl CartesianProduct {
    /// Id of `(u, v)`, i.e. `u * v(H) + v`.
    pub fn vertex(&self, u: Vertex, v: Vertex) -> Vertex {
        u * self.right_order + v
    }

    pub fn tag(&self, a: Vertex, b: Vertex) -> Option<ProductEdgeType> {
        if !self.graph.has_edge(a, b) {
            return None;
        }
        Some(if a / self.right_order == b / self.right_order {
            ProductEdgeType::RightFactor
        } else {
            ProductEdgeType::LeftFactor
        })
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<CartesianProduct> {
    if g.n() == 0 || h.n() == 0 {
        return Err(invalid("product factors must be nonempty"));
    }
    let k = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + k * g.edge_count());
    for u in 0..g.n() {
        for (a, b) in h.edges() {
            edges.push((u * k + a, u * k + b));
        }
    }
    for (a, b) in g.edges() {
        for v in 0..k {
            edges.push((a * k + v, b * k + v));
        }
    }
    let graph = Graph::from_edges(g.n() * k, edges)?;
    let mut product = CartesianProduct {
        graph,
        tags: Vec::new(),
        right_order: k,
    };
    product.tags = product
        .graph
        .edges()
        .into_iter()
        .map(|(a, b)| product.tag(a, b).unwrap())
        .collect();
    Ok(product)
}

/// `C_l □ K_2`: cycle vertex `i` on layer `s` is `2i + s`.
pub fn prism(l: usize) -> Result<Graph> {
    Ok(cartesian_product(&cycle(l)?, &complete(2))?.graph)
}

/// `P_t □ K_2` with the parity bipartition; path vertex `i` on layer `s` is `2i + s`.
pub fn path_prism(t: usize) -> Result<BipartiteGraph> {
    if t == 0 {
        return Err(invalid("path prism needs t >= 1"));
    }
    let graph = cartesian_product(&path(t), &complete(2))?.graph;
    let side = (0..graph.n())
        .map(|x| ((x / 2 + x % 2) % 2) as u8)
        .collect();
    BipartiteGraph::new(graph, side)
}

/// Bipartite critical `r`-degenerate graph, rooted at its unique degree-`r`
/// vertex `w`.
///
/// Labeling: `X = 0..r`, `Y = r..=2r` (`y0 = r`), then one vertex `z_S` per
/// `r`-subset `S` of `Y` other than `Y \ {y0}`, in lexicographic order of
/// `S`, and finally `w = 3r + 1`.
pub fn critical_family(r: usize) -> Result<RootedGraph> {
    if r < 2 {
        return Err(invalid(format!("critical family needs r >= 2, got {r}")));
    }
    let xs: Vec<Vertex> = (0..r).collect();
    let ys: Vec<Vertex> = (r..=2 * r).collect();
    let mut edges: Vec<(Vertex, Vertex)> = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .collect();
    // r-subsets of an (r+1)-set are complements of single elements; dropping
    // y_i yields lexicographic order when i runs from last to first
    let mut next = 2 * r + 1;
    let mut zs = Vec::new();
    for dropped in (1..ys.len()).rev() {
        for (i, &y) in ys.iter().enumerate() {
            if i != dropped {
                edges.push((y, next));
            }
        }
        zs.push(next);
        next += 1;
    }
    let w = next;
    edges.extend(zs.iter().map(|&z| (z, w)));
    RootedGraph::new(Graph::from_edges(w + 1, edges)?, w)
}

/// Vertex ids shared by [`glued_prism`] and [`glued_prism_minus`].
///
/// With `c = l - 1`, ids follow a 2-degenerate peeling order:
/// the right block's top row, its far end, its
/// second row reversed, the upper merged vertex, the left block, the lower
/// merged vertex, then the rest of the right block.
#[derive(Clone, Debug)]
pub struct GluedPrismLayout {
    c: usize,
}

impl GluedPrismLayout {
    pub fn new(l: usize) -> Result<Self> {
        if l < 3 {
            return Err(invalid(format!("glued prism needs l >= 3, got {l}")));
        }
        Ok(GluedPrismLayout { c: l - 1 })
    }

    pub fn n(&self) -> usize {
        8 * self.c + 6
    }

    fn rt(&self, j: usize) -> Vertex {
        j
    }
    fn rend_t(&self) -> Vertex {
        self.c
    }
    fn rn(&self, j: usize) -> Vertex {
        self.c + 1 + (self.c - 1 - j)
    }
    pub fn merged_top(&self) -> Vertex {
        2 * self.c + 1
    }
    fn lt(&self, j: usize) -> Vertex {
        2 * self.c + 2 + (self.c - 1 - j)
    }
    fn lend_t(&self) -> Vertex {
        3 * self.c + 2
    }
    fn ln(&self, j: usize) -> Vertex {
        3 * self.c + 3 + j
    }
    fn lb(&self, j: usize) -> Vertex {
        4 * self.c + 3 + (self.c - 1 - j)
    }
    fn lend_b(&self) -> Vertex {
        5 * self.c + 3
    }
    fn lu(&self, j: usize) -> Vertex {
        5 * self.c + 4 + j
    }
    pub fn merged_bottom(&self) -> Vertex {
        6 * self.c + 4
    }
    fn rb(&self, j: usize) -> Vertex {
        6 * self.c + 5 + j
    }
    fn rend_b(&self) -> Vertex {
        7 * self.c + 5
    }
    fn ru(&self, j: usize) -> Vertex {
        7 * self.c + 6 + (self.c - 1 - j)
    }

    /// The merged matching edge `e1`.
    pub fn e1(&self) -> (Vertex, Vertex) {
        (self.merged_top(), self.merged_bottom())
    }

    /// The cycle edge `e2` at the upper merged vertex; its other end is vertex 0.
    pub fn e2(&self) -> (Vertex, Vertex) {
        (self.rt(0), self.merged_top())
    }

    /// Map from `prism(2l)` ids (`2i + s`) to host ids for the left copy.
    pub fn left_copy(&self) -> Vec<Vertex> {
        let c = self.c;
        let mut outer = vec![self.lend_t()];
        outer.extend((0..c).map(|j| self.lt(j)));
        outer.push(self.merged_top());
        outer.extend((0..c).rev().map(|j| self.ln(j)));
        let partner = |v: Vertex| -> Vertex {
            if v == self.lend_t() {
                self.lend_b()
            } else if v == self.merged_top() {
                self.merged_bottom()
            } else if let Some(j) = (0..c).find(|&j| self.lt(j) == v) {
                self.lu(j)
            } else {
                let j = (0..c).find(|&j| self.ln(j) == v).unwrap();
                self.lb(j)
            }
        };
        outer.iter().flat_map(|&v| [v, partner(v)]).collect()
    }

    /// Map from `prism(2l)` ids to host ids for the right copy.
    pub fn right_copy(&self) -> Vec<Vertex> {
        let c = self.c;
        let mut outer = vec![self.merged_top()];
        outer.extend((0..c).map(|j| self.rt(j)));
        outer.push(self.rend_t());
        outer.extend((0..c).rev().map(|j| self.rn(j)));
        let partner = |v: Vertex| -> Vertex {
            if v == self.rend_t() {
                self.rend_b()
            } else if v == self.merged_top() {
                self.merged_bottom()
            } else if let Some(j) = (0..c).find(|&j| self.rt(j) == v) {
                self.ru(j)
            } else {
                let j = (0..c).find(|&j| self.rn(j) == v).unwrap();
                self.rb(j)
            }
        };
        outer.iter().flat_map(|&v| [v, partner(v)]).collect()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let c = self.c;
        let mut e = Vec::with_capacity(12 * c + 11);
        for j in 0..c {
            e.push((self.lt(j), self.lu(j)));
            e.push((self.ln(j), self.lb(j)));
            e.push((self.rt(j), self.ru(j)));
            e.push((self.rn(j), self.rb(j)));
        }
        for j in 0..c - 1 {
            for row in [
                Self::lt,
                Self::ln,
                Self::lb,
                Self::lu,
                Self::rt,
                Self::rn,
                Self::rb,
                Self::ru,
            ] {
                e.push((row(self, j), row(self, j + 1)));
            }
        }
        let last = c - 1;
        e.extend([
            (self.lend_t(), self.lend_b()),
            (self.lend_t(), self.lt(0)),
            (self.lend_t(), self.ln(0)),
            (self.lend_b(), self.lb(0)),
            (self.lend_b(), self.lu(0)),
            (self.rend_t(), self.rend_b()),
            (self.rend_t(), self.rt(last)),
            (self.rend_t(), self.rn(last)),
            (self.rend_b(), self.rb(last)),
            (self.rend_b(), self.ru(last)),
            (self.merged_top(), self.lt(last)),
            (self.merged_top(), self.ln(last)),
            (self.merged_bottom(), self.lb(last)),
            (self.merged_bottom(), self.lu(last)),
            (self.merged_top(), self.rn(0)),
            (self.merged_bottom(), self.rb(0)),
            (self.merged_bottom(), self.ru(0)),
            self.e2(),
            self.e1(),
        ]);
        e
    }
}

/// Two copies of `prism(2l)` sharing one matching edge and its endpoints.
/// Labeling per [`GluedPrismLayout`].
pub fn glued_prism(l: usize) -> Result<Graph> {
    let layout = GluedPrismLayout::new(l)?;
    Graph::from_edges(layout.n(), layout.edges())
}

/// [`glued_prism`] without `e1` and `e2`, rooted at vertex 0, the unique
/// degree-2 vertex.
pub fn glued_prism_minus(l: usize) -> Result<RootedGraph> {
    let layout = GluedPrismLayout::new(l)?;
    let g = glued_prism(l)?.without_edges(&[layout.e1(), layout.e2()])?;
    RootedGraph::new(g, 0)
}

/// Elimination order certifying 2-degeneracy of [`glued_prism_minus`]:
/// peeling vertices in id order never removes a vertex with more than two
/// remaining neighbors.
pub fn glued_prism_minus_witness(l: usize) -> Result<EliminationOrder> {
    let g = glued_prism_minus(l)?;
    let removal: Vec<Vertex> = (0..g.graph().n()).collect();
    EliminationOrder::from_removal_sequence(g.graph(), &removal)
}
