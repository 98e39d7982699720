//! Exact extremal and Zarankiewicz numbers by budgeted branch and bound.
//!
//! General hosts are searched by augmentation over isomorphism classes:
//! from an `H`-free graph, add one non-edge that keeps it `H`-free and
//! recurse, skipping any graph whose canonical form was already seen. Every
//! `H`-free graph is reachable this way, so the maximum over visited graphs
//! is exact. Bipartite hosts are filled cell by cell in row-major order with
//! rows and columns kept lexicographically non-increasing.

use std::collections::HashSet;
use std::time::Instant;

use crate::canon::{canonical_form, canonicalize, CanonicalForm};
use crate::counting::embed::contains_through_edge;
use crate::graph::{is_bipartite, BipartiteGraph, Bipartition, Graph, GraphError, Result, Vertex};

/// Largest host order accepted by [`extremal_number`].
pub const EXACT_GENERAL_LIMIT: usize = 10;

/// Largest side accepted by the bipartite searches.
pub const EXACT_BIPARTITE_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 50_000_000,
            max_seconds: 600.0,
        }
    }
}

impl Budget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Result<Self> {
        if max_nodes == 0 || max_seconds.is_nan() || max_seconds <= 0.0 {
            return Err(GraphError::InvalidParameter(format!(
                "budget must be positive, got {max_nodes} nodes and {max_seconds} s"
            )));
        }
        Ok(Budget {
            max_nodes,
            max_seconds,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    /// Exact value, or a lower bound when `budget_exhausted`.
    pub value: usize,
    pub witness: Graph,
    /// Side labels of the witness for the bipartite modes.
    pub witness_sides: Option<Vec<u8>>,
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
    pub elapsed: f64,
}

impl SearchReport {
    pub fn is_exact(&self) -> bool {
        !self.budget_exhausted
    }
}

struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || self.nodes.is_multiple_of(1024)
                && self.start.elapsed().as_secs_f64() > self.budget.max_seconds
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn report(&self, value: usize, witness: Graph, witness_sides: Option<Vec<u8>>) -> SearchReport {
        SearchReport {
            value,
            witness,
            witness_sides,
            nodes_explored: self.nodes,
            budget_exhausted: self.exhausted,
            elapsed: self.start.elapsed().as_secs_f64(),
        }
    }
}

fn check_pattern(h: &Graph) -> Result<()> {
    if h.edge_count() == 0 {
        return Err(GraphError::InvalidParameter(
            "pattern must have at least one edge".into(),
        ));
    }
    Ok(())
}

/// `ex(n, H)` with a canonical witness.
pub fn extremal_number(n: usize, h: &Graph, budget: Budget) -> Result<SearchReport> {
    check_pattern(h)?;
    if n > EXACT_GENERAL_LIMIT {
        return Err(GraphError::TooLarge {
            n,
            limit: EXACT_GENERAL_LIMIT,
        });
    }
    let mut meter = Meter::new(budget);
    if h.n() > n {
        meter.tick();
        let full = crate::constructions::complete(n);
        return Ok(meter.report(full.edge_count(), full, None));
    }
    let start = Graph::empty(n);
    let mut s = GeneralSearch {
        h,
        meter,
        seen: HashSet::new(),
        best: (canonical_form(&start)?, start.clone()),
    };
    s.seen.insert(s.best.0.clone());
    s.visit(start)?;
    let (_, best) = s.best;
    let witness = canonicalize(&best, EXACT_GENERAL_LIMIT)?;
    Ok(s.meter.report(witness.edge_count(), witness, None))
}

struct GeneralSearch<'a> {
    h: &'a Graph,
    meter: Meter,
    seen: HashSet<CanonicalForm>,
    best: (CanonicalForm, Graph),
}

impl GeneralSearch<'_> {
    fn visit(&mut self, mut g: Graph) -> Result<()> {
        if !self.meter.tick() {
            return Ok(());
        }
        let mut addable: Vec<(Vertex, Vertex)> = Vec::new();
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                if g.has_edge(a, b) {
                    continue;
                }
                g.add_edge_unchecked(a, b);
                if !contains_through_edge(self.h, &g, a, b, None) {
                    addable.push((a, b));
                }
                g.remove_edge_unchecked(a, b);
            }
        }
        let e = g.edge_count();
        let best = self.best.1.edge_count();
        if addable.is_empty() {
            let form = canonical_form(&g)?;
            if e > best || e == best && form < self.best.0 {
                self.best = (form, g);
            }
            return Ok(());
        }
        // ties still matter: among maximum graphs the smallest form wins
        if e + addable.len() < best {
            return Ok(());
        }
        for (a, b) in addable {
            g.add_edge_unchecked(a, b);
            let form = canonical_form(&g)?;
            if self.seen.insert(form) {
                self.visit(g.clone())?;
            }
            g.remove_edge_unchecked(a, b);
            if self.meter.exhausted {
                break;
            }
        }
        Ok(())
    }
}

/// `ex(n, m, H)`: copies of `H` in any orientation are forbidden.
pub fn bipartite_extremal_number(
    n: usize,
    m: usize,
    h: &Graph,
    budget: Budget,
) -> Result<SearchReport> {
    check_pattern(h)?;
    check_sides(n, m)?;
    if let Bipartition::OddCycle(_) = is_bipartite(h) {
        let mut meter = Meter::new(budget);
        meter.tick();
        let full = BipartiteGraph::from_biadjacency(
            n,
            m,
            (0..n).flat_map(|i| (0..m).map(move |j| (i, j))),
        )?;
        let sides = full.sides().to_vec();
        return Ok(meter.report(n * m, full.into_graph(), Some(sides)));
    }
    Ok(MatrixSearch::new(n, m, h, None, budget).run())
}

/// `z(n, m, H[L, R])`: only copies with side 0 of `H` among the `n` rows and
/// side 1 among the `m` columns are forbidden.
pub fn zarankiewicz_number(
    n: usize,
    m: usize,
    h: &BipartiteGraph,
    budget: Budget,
) -> Result<SearchReport> {
    check_pattern(h.graph())?;
    check_sides(n, m)?;
    Ok(MatrixSearch::new(n, m, h.graph(), Some(h.sides().to_vec()), budget).run())
}

fn check_sides(n: usize, m: usize) -> Result<()> {
    let big = n.max(m);
    if big > EXACT_BIPARTITE_LIMIT {
        return Err(GraphError::TooLarge {
            n: big,
            limit: EXACT_BIPARTITE_LIMIT,
        });
    }
    Ok(())
}

struct MatrixSearch<'a> {
    n: usize,
    m: usize,
    h: &'a Graph,
    pattern_sides: Option<Vec<u8>>,
    host_sides: Vec<u8>,
    host: Graph,
    /// Bit `m - 1 - j` of `rows[i]` is cell `(i, j)`, so integer order is
    /// lexicographic order with column 0 most significant.
    rows: Vec<u64>,
    best_rows: Vec<u64>,
    best: usize,
    meter: Meter,
}

impl<'a> MatrixSearch<'a> {
    fn new(
        n: usize,
        m: usize,
        h: &'a Graph,
        pattern_sides: Option<Vec<u8>>,
        budget: Budget,
    ) -> Self {
        let host_sides = (0..n + m).map(|v| u8::from(v >= n)).collect();
        MatrixSearch {
            n,
            m,
            h,
            pattern_sides,
            host_sides,
            host: Graph::empty(n + m),
            rows: vec![0; n],
            best_rows: vec![0; n],
            best: 0,
            meter: Meter::new(budget),
        }
    }

    fn run(mut self) -> SearchReport {
        self.meter.tick();
        if self.n > 0 && self.m > 0 {
            self.fill(0, 0);
        }
        let cells = (0..self.n).flat_map(|i| (0..self.m).map(move |j| (i, j)));
        let best_rows = self.best_rows.clone();
        let m = self.m;
        let w = BipartiteGraph::from_biadjacency(
            self.n,
            self.m,
            cells.filter(|&(i, j)| best_rows[i] >> (m - 1 - j) & 1 == 1),
        )
        .expect("cells in range");
        let sides = w.sides().to_vec();
        self.meter.report(self.best, w.into_graph(), Some(sides))
    }

    fn bit(&self, i: usize, j: usize) -> u64 {
        self.rows[i] >> (self.m - 1 - j) & 1
    }

    /// Row `i` restricted to columns `0..=j` must not exceed row `i - 1`'s,
    /// and column `j` restricted to rows `0..=i` must not exceed column `j - 1`'s.
    fn order_ok(&self, i: usize, j: usize) -> bool {
        let shift = self.m - 1 - j;
        if i > 0 && self.rows[i] >> shift > self.rows[i - 1] >> shift {
            return false;
        }
        if j > 0 {
            for r in 0..=i {
                let (prev, cur) = (self.bit(r, j - 1), self.bit(r, j));
                if prev != cur {
                    return prev > cur;
                }
            }
        }
        true
    }

    fn creates_pattern(&mut self, i: usize, j: usize) -> bool {
        let (a, b) = (i, self.n + j);
        let sides = self
            .pattern_sides
            .as_deref()
            .map(|p| (p, self.host_sides.as_slice()));
        contains_through_edge(self.h, &self.host, a, b, sides)
    }

    fn fill(&mut self, i: usize, j: usize) {
        if i == self.n {
            let e = self.host.edge_count();
            if e > self.best {
                self.best = e;
                self.best_rows = self.rows.clone();
            }
            return;
        }
        if !self.meter.tick() {
            return;
        }
        let left = (self.n - i) * self.m - j;
        if self.host.edge_count() + left <= self.best {
            return;
        }
        let (ni, nj) = if j + 1 == self.m {
            (i + 1, 0)
        } else {
            (i, j + 1)
        };
        let mask = 1u64 << (self.m - 1 - j);
        self.rows[i] |= mask;
        self.host.add_edge_unchecked(i, self.n + j);
        if self.order_ok(i, j) && !self.creates_pattern(i, j) {
            self.fill(ni, nj);
        }
        self.rows[i] &= !mask;
        self.host.remove_edge_unchecked(i, self.n + j);
        if self.order_ok(i, j) {
            self.fill(ni, nj);
        }
    }
}
