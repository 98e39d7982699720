//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest upper-triangle adjacency bit
//! string over all vertex orders reachable by individualization/refinement.
//! Refinement starts from the degree partition; twin vertices in a cell are
//! branched on only once, since swapping them is an automorphism.

use crate::graph::{Graph, GraphError, Result, Vertex};

pub const DEFAULT_CANONICAL_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, DEFAULT_CANONICAL_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    canonical_labeling(g, limit).map(|(form, _)| form)
}

/// Returns the form and a labeling: `labeling[v]` is the canonical id of `v`.
pub fn canonical_labeling(g: &Graph, limit: usize) -> Result<(CanonicalForm, Vec<Vertex>)> {
    let n = g.n();
    if n > limit {
        return Err(GraphError::TooLarge { n, limit });
    }
    let mut search = Search { g, best: None };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    search.descend(cells);
    let (bits, order) = search.best.expect("at least one leaf");
    let mut bytes = Vec::with_capacity(4 + bits.len() * 8);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for w in &bits {
        bytes.extend_from_slice(&w.to_be_bytes());
    }
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok((CanonicalForm(bytes), labeling))
}

/// Relabels `g` into its canonical labeling.
pub fn canonicalize(g: &Graph, limit: usize) -> Result<Graph> {
    let (_, labeling) = canonical_labeling(g, limit)?;
    g.relabel(&labeling)
}

/// Isomorphism test. Uses canonical forms under the limit and a
/// degree-filtered bijection search above it.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    if g.n() <= DEFAULT_CANONICAL_LIMIT {
        return canonical_form(g).unwrap() == canonical_form(h).unwrap();
    }
    // same edge count, so an injective edge-preserving map is an isomorphism
    crate::counting::embed::find_embedding(g, h, &Default::default())
        .ok()
        .flatten()
        .is_some()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<Vertex>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<Vertex>>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
            let bits = adjacency_bits(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
                self.best = Some((bits, order));
            }
            return;
        };
        let mut reps: Vec<Vertex> = Vec::new();
        for &v in &cells[target] {
            if reps.iter().any(|&r| are_twins(self.g, r, v)) {
                continue;
            }
            reps.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut next);
            self.descend(next);
        }
    }
}

fn are_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let mut a = g.neighbors(u).clone();
    let mut b = g.neighbors(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

/// Splits cells by neighbor counts into every other cell until stable.
/// Sub-cells are ordered by their count signature, so the result depends only
/// on the isomorphism type of (graph, ordered partition).
fn refine(g: &Graph, cells: &mut Vec<Vec<Vertex>>) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = ci;
            }
        }
        let k = cells.len();
        let mut changed = false;
        let mut next: Vec<Vec<Vertex>> = Vec::with_capacity(n);
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, Vertex)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for w in g.neighbors(v).iter() {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let start = next.len();
            let mut prev: Option<&Vec<u32>> = None;
            for (sig, v) in keyed.iter() {
                if prev == Some(sig) {
                    next.last_mut().unwrap().push(*v);
                } else {
                    next.push(vec![*v]);
                }
                prev = Some(sig);
            }
            changed |= next.len() - start > 1;
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn adjacency_bits(g: &Graph, order: &[Vertex]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; total.div_ceil(64).max(1)];
    let mut bit = 0usize;
    for i in 0..n {
        let row = g.neighbors(order[i]);
        for &oj in &order[i + 1..] {
            if row.contains(oj) {
                words[bit / 64] |= 1u64 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    words
}
