//! Binary relations on vertex sets, and good homomorphic cycles.

use num_rational::Ratio;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError, Result, Vertex};

/// `u -> w` stored as a boolean matrix, one row per `u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    rows: Vec<VertexSet>,
}

impl Relation {
    pub fn from_fn<F: FnMut(Vertex, Vertex) -> bool>(n: usize, mut holds: F) -> Self {
        let rows = (0..n)
            .map(|u| VertexSet::from_iter_with_capacity(n, (0..n).filter(|&w| holds(u, w))))
            .collect();
        Relation { rows }
    }

    pub fn empty(n: usize) -> Self {
        Relation {
            rows: vec![VertexSet::new(n); n],
        }
    }

    /// Every ordered pair, the diagonal included.
    pub fn total(n: usize) -> Self {
        Relation {
            rows: vec![VertexSet::full(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Relation::from_fn(n, |u, w| u == w)
    }

    /// Two distinct edges are related when they share an endpoint.
    /// Indices refer to `edges`.
    pub fn shares_endpoint(edges: &[(Vertex, Vertex)]) -> Self {
        Relation::from_fn(edges.len(), |i, j| {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            i != j && (a == c || a == d || b == c || b == d)
        })
    }

    /// `i -> j` when item `j`'s endpoints meet `sets[i]`.
    pub fn from_vertex_sets(items: &[(Vertex, Vertex)], sets: &[VertexSet]) -> Result<Self> {
        if items.len() != sets.len() {
            return Err(GraphError::InvalidParameter(format!(
                "{} items but {} sets",
                items.len(),
                sets.len()
            )));
        }
        Ok(Relation::from_fn(items.len(), |i, j| {
            let (c, d) = items[j];
            sets[i].contains(c) || sets[i].contains(d)
        }))
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn holds(&self, u: Vertex, w: Vertex) -> bool {
        self.rows[u].contains(w)
    }

    pub fn row(&self, u: Vertex) -> &VertexSet {
        &self.rows[u]
    }

    pub fn insert(&mut self, u: Vertex, w: Vertex) {
        self.rows[u].insert(w);
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum()
    }

    pub fn with_diagonal(&self) -> Self {
        let mut r = self.clone();
        for u in 0..r.n() {
            r.rows[u].insert(u);
        }
        r
    }

    fn check_for(&self, h: &Graph) -> Result<()> {
        if self.n() != h.n() {
            return Err(GraphError::InvalidParameter(format!(
                "relation on {} vertices, graph has {}",
                self.n(),
                h.n()
            )));
        }
        Ok(())
    }
}

/// The smallest `beta` such that `rel` is `beta`-nice on `h`: the largest
/// fraction `|{w in N(v) : u -> w}| / deg(v)` over all `u`, `v`.
pub fn min_nice_beta(h: &Graph, rel: &Relation) -> Result<Ratio<u64>> {
    rel.check_for(h)?;
    if let Some(v) = h.isolated_vertex() {
        return Err(GraphError::IsolatedVertex(v));
    }
    let mut best = Ratio::from_integer(0u64);
    for v in 0..h.n() {
        let deg = h.degree(v) as u64;
        for u in 0..h.n() {
            let hit = rel.row(u).intersection_len(h.neighbors(v)) as u64;
            best = best.max(Ratio::new(hit, deg));
        }
    }
    Ok(best)
}

pub fn is_beta_nice(h: &Graph, rel: &Relation, beta: Ratio<u64>) -> Result<bool> {
    Ok(min_nice_beta(h, rel)? <= beta)
}

/// A homomorphic `2l`-cycle `x_1 .. x_{2l}` with `x_i -/-> x_j` for all
/// `i != j`, found by depth-first search in vertex order. `None` when no such
/// cycle exists or `max_nodes` is hit first.
pub fn find_good_hom_cycle(
    h: &Graph,
    rel: &Relation,
    l: usize,
    max_nodes: Option<u64>,
) -> Result<GoodCycleSearch> {
    rel.check_for(h)?;
    if l < 1 {
        return Err(GraphError::InvalidParameter(
            "cycle half-length must be >= 1".into(),
        ));
    }
    let mut s = CycleSearch {
        h,
        rel,
        len: 2 * l,
        nodes: 0,
        max_nodes,
        walk: Vec::with_capacity(2 * l),
    };
    for start in 0..h.n() {
        if h.degree(start) == 0 {
            continue;
        }
        s.walk.push(start);
        let found = s.extend();
        if found || s.exhausted() {
            let cycle = found.then(|| s.walk.clone());
            return Ok(GoodCycleSearch {
                cycle,
                nodes: s.nodes,
                budget_exhausted: !found,
            });
        }
        s.walk.pop();
    }
    Ok(GoodCycleSearch {
        cycle: None,
        nodes: s.nodes,
        budget_exhausted: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodCycleSearch {
    pub cycle: Option<Vec<Vertex>>,
    pub nodes: u64,
    pub budget_exhausted: bool,
}

struct CycleSearch<'a> {
    h: &'a Graph,
    rel: &'a Relation,
    len: usize,
    nodes: u64,
    max_nodes: Option<u64>,
    walk: Vec<Vertex>,
}

impl CycleSearch<'_> {
    fn exhausted(&self) -> bool {
        self.max_nodes.is_some_and(|m| self.nodes >= m)
    }

    fn extend(&mut self) -> bool {
        self.nodes += 1;
        if self.exhausted() {
            return false;
        }
        let last = *self.walk.last().unwrap();
        if self.walk.len() == self.len {
            return self.h.has_edge(last, self.walk[0]);
        }
        for v in self.h.neighbors(last).iter() {
            let clash = self
                .walk
                .iter()
                .any(|&x| self.rel.holds(x, v) || self.rel.holds(v, x));
            if clash {
                continue;
            }
            self.walk.push(v);
            if self.extend() {
                return true;
            }
            self.walk.pop();
            if self.exhausted() {
                return false;
            }
        }
        false
    }
}

/// Checks the defining property of a good homomorphic cycle directly.
pub fn is_good_hom_cycle(h: &Graph, rel: &Relation, cycle: &[Vertex]) -> bool {
    let m = cycle.len();
    m >= 2
        && cycle.iter().all(|&v| v < h.n())
        && (0..m).all(|i| h.has_edge(cycle[i], cycle[(i + 1) % m]))
        && (0..m).all(|i| (0..m).all(|j| i == j || !rel.holds(cycle[i], cycle[j])))
}
