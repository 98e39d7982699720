//! Subgraph embeddings by bitset backtracking.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError, Result, Vertex};

/// Restrictions on where pattern vertices may land.
#[derive(Clone, Debug, Default)]
pub struct EmbedConstraints {
    /// Pattern root and the host vertices it may map to.
    pub root: Option<(Vertex, VertexSet)>,
    /// Host vertices no pattern vertex may use.
    pub forbidden: Option<VertexSet>,
    /// `(pattern sides, host sides)`: pattern side `s` must land on host side `s`.
    pub sides: Option<(Vec<u8>, Vec<u8>)>,
    /// Forced `(pattern, host)` pairs.
    pub fixed: Vec<(Vertex, Vertex)>,
}

impl EmbedConstraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_root(mut self, root: Vertex, targets: VertexSet) -> Self {
        self.root = Some((root, targets));
        self
    }

    pub fn with_forbidden(mut self, forbidden: VertexSet) -> Self {
        self.forbidden = Some(forbidden);
        self
    }

    pub fn with_sides(mut self, pattern: Vec<u8>, host: Vec<u8>) -> Self {
        self.sides = Some((pattern, host));
        self
    }

    pub fn with_fixed(mut self, pattern: Vertex, host: Vertex) -> Self {
        self.fixed.push((pattern, host));
        self
    }

    fn validate(&self, pattern: &Graph, host: &Graph) -> Result<()> {
        if pattern.n() == 0 {
            return Err(GraphError::InvalidParameter(
                "pattern must be nonempty".into(),
            ));
        }
        if let Some((r, targets)) = &self.root {
            pattern.check_vertex(*r)?;
            check_capacity(targets, host.n(), "root targets")?;
        }
        if let Some(f) = &self.forbidden {
            check_capacity(f, host.n(), "forbidden set")?;
        }
        if let Some((ps, hs)) = &self.sides {
            if ps.len() != pattern.n() || hs.len() != host.n() {
                return Err(GraphError::InvalidParameter(
                    "side labels do not match graph sizes".into(),
                ));
            }
        }
        for &(p, h) in &self.fixed {
            pattern.check_vertex(p)?;
            host.check_vertex(h)?;
        }
        Ok(())
    }
}

fn check_capacity(s: &VertexSet, n: usize, what: &str) -> Result<()> {
    if s.capacity() != n {
        return Err(GraphError::InvalidParameter(format!(
            "{what} sized for {} vertices, host has {n}",
            s.capacity()
        )));
    }
    Ok(())
}

/// Injective edge-preserving map `pattern -> host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<Vertex>,
    pub side_respecting: bool,
    pub root_constrained: bool,
}

impl Embedding {
    pub fn image(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.map.iter().copied()
    }

    pub fn image_set(&self, host_n: usize) -> VertexSet {
        VertexSet::from_iter_with_capacity(host_n, self.image())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingViolation {
    #[error("map has length {got}, pattern has {expected} vertices")]
    Length { got: usize, expected: usize },
    #[error("image {0} is not a host vertex")]
    OutOfRange(Vertex),
    #[error("host vertex {0} used twice")]
    NotInjective(Vertex),
    #[error("pattern edge {0} {1} not mapped to a host edge")]
    MissingEdge(Vertex, Vertex),
    #[error("pattern vertex {0} lands on the wrong side")]
    Side(Vertex),
    #[error("root lands outside its target set")]
    Root,
    #[error("pattern vertex {0} lands on a forbidden host vertex")]
    Forbidden(Vertex),
    #[error("pattern vertex {0} ignores its fixed image")]
    Fixed(Vertex),
}

/// Independent check of every [`Embedding`] invariant.
pub fn verify_embedding(
    pattern: &Graph,
    host: &Graph,
    emb: &Embedding,
    c: &EmbedConstraints,
) -> std::result::Result<(), EmbeddingViolation> {
    if emb.map.len() != pattern.n() {
        return Err(EmbeddingViolation::Length {
            got: emb.map.len(),
            expected: pattern.n(),
        });
    }
    let mut seen = vec![false; host.n()];
    for &h in &emb.map {
        if h >= host.n() {
            return Err(EmbeddingViolation::OutOfRange(h));
        }
        if std::mem::replace(&mut seen[h], true) {
            return Err(EmbeddingViolation::NotInjective(h));
        }
    }
    for (a, b) in pattern.edges() {
        if !host.has_edge(emb.map[a], emb.map[b]) {
            return Err(EmbeddingViolation::MissingEdge(a, b));
        }
    }
    if let Some((ps, hs)) = &c.sides {
        if let Some(p) = (0..pattern.n()).find(|&p| ps[p] != hs[emb.map[p]]) {
            return Err(EmbeddingViolation::Side(p));
        }
    }
    if let Some((r, targets)) = &c.root {
        if !targets.contains(emb.map[*r]) {
            return Err(EmbeddingViolation::Root);
        }
    }
    if let Some(f) = &c.forbidden {
        if let Some(p) = (0..pattern.n()).find(|&p| f.contains(emb.map[p])) {
            return Err(EmbeddingViolation::Forbidden(p));
        }
    }
    if let Some(&(p, _)) = c.fixed.iter().find(|&&(p, h)| emb.map[p] != h) {
        return Err(EmbeddingViolation::Fixed(p));
    }
    Ok(())
}

/// Order in which pattern vertices are assigned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOrder {
    /// Pattern ids ascending; the first embedding found is the
    /// lexicographically smallest map.
    Natural,
    /// Fixed vertices first, then greedily the vertex with most assigned
    /// neighbors. Faster; used when only existence or counts matter.
    Connected,
}

struct Matcher<'a> {
    host: &'a Graph,
    order: Vec<Vertex>,
    /// For each position, pattern neighbors assigned at earlier positions.
    back: Vec<Vec<Vertex>>,
    allowed: Vec<VertexSet>,
    map: Vec<Vertex>,
    used: VertexSet,
}

impl<'a> Matcher<'a> {
    fn new(
        pattern: &Graph,
        host: &'a Graph,
        c: &EmbedConstraints,
        how: SearchOrder,
    ) -> Option<Self> {
        let k = pattern.n();
        let n = host.n();
        if k > n {
            return None;
        }
        let mut base = VertexSet::full(n);
        if let Some(f) = &c.forbidden {
            base.difference_with(f);
        }
        let mut allowed = Vec::with_capacity(k);
        for p in 0..k {
            let dp = pattern.degree(p);
            let mut a = base.clone();
            for h in base.iter() {
                if host.degree(h) < dp {
                    a.remove(h);
                } else if let Some((ps, hs)) = &c.sides {
                    if ps[p] != hs[h] {
                        a.remove(h);
                    }
                }
            }
            if let Some((r, targets)) = &c.root {
                if *r == p {
                    a.intersect_with(targets);
                }
            }
            allowed.push(a);
        }
        for &(p, h) in &c.fixed {
            let keep = allowed[p].contains(h);
            allowed[p].clear();
            if keep {
                allowed[p].insert(h);
            }
        }
        if allowed.iter().any(|a| a.is_empty()) {
            return None;
        }

        let order = match how {
            SearchOrder::Natural => (0..k).collect(),
            SearchOrder::Connected => connected_order(pattern, &c.fixed, &allowed),
        };
        let mut pos = vec![usize::MAX; k];
        for (i, &p) in order.iter().enumerate() {
            pos[p] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                pattern
                    .neighbors(p)
                    .iter()
                    .filter(|&q| pos[q] < i)
                    .collect()
            })
            .collect();
        Some(Matcher {
            host,
            order,
            back,
            allowed,
            map: vec![usize::MAX; k],
            used: VertexSet::new(n),
        })
    }

    fn run<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let p = self.order[depth];
        let mut cand = self.allowed[p].clone();
        cand.difference_with(&self.used);
        for &q in &self.back[depth] {
            cand.intersect_with(self.host.neighbors(self.map[q]));
        }
        for h in cand.iter() {
            self.map[p] = h;
            self.used.insert(h);
            let flow = self.run(depth + 1, visit);
            self.used.remove(h);
            flow?;
        }
        self.map[p] = usize::MAX;
        ControlFlow::Continue(())
    }
}

fn connected_order(
    pattern: &Graph,
    fixed: &[(Vertex, Vertex)],
    allowed: &[VertexSet],
) -> Vec<Vertex> {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for &(p, _) in fixed {
        if !std::mem::replace(&mut placed[p], true) {
            order.push(p);
        }
    }
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let links = pattern.neighbors(p).iter().filter(|&q| placed[q]).count();
                (
                    links,
                    pattern.degree(p),
                    std::cmp::Reverse(allowed[p].len()),
                    std::cmp::Reverse(p),
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Calls `visit` on every embedding until it breaks. Returns `Break` if it did.
pub fn for_each_embedding<F>(
    pattern: &Graph,
    host: &Graph,
    c: &EmbedConstraints,
    how: SearchOrder,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    c.validate(pattern, host)?;
    Ok(match Matcher::new(pattern, host, c, how) {
        Some(mut m) => m.run(0, &mut visit),
        None => ControlFlow::Continue(()),
    })
}

/// Lexicographically first embedding satisfying `c`, if any.
pub fn find_embedding(
    pattern: &Graph,
    host: &Graph,
    c: &EmbedConstraints,
) -> Result<Option<Embedding>> {
    let mut found = None;
    let _ = for_each_embedding(pattern, host, c, SearchOrder::Natural, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found.map(|map| Embedding {
        map,
        side_respecting: c.sides.is_some(),
        root_constrained: c.root.is_some(),
    }))
}

/// Existence check without the lexicographic guarantee.
pub fn contains(pattern: &Graph, host: &Graph, c: &EmbedConstraints) -> Result<bool> {
    Ok(
        for_each_embedding(pattern, host, c, SearchOrder::Connected, |_| {
            ControlFlow::Break(())
        })?
        .is_break(),
    )
}

/// Number of labeled embeddings.
pub fn count_embeddings(pattern: &Graph, host: &Graph, c: &EmbedConstraints) -> Result<u64> {
    let mut count = 0u64;
    let _ = for_each_embedding(pattern, host, c, SearchOrder::Connected, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

pub fn automorphism_count(h: &Graph) -> u64 {
    if h.n() == 0 {
        return 1;
    }
    count_embeddings(h, h, &EmbedConstraints::none()).expect("self-embedding constraints are valid")
}

/// Unlabeled copies of `h` in `g`: labeled embeddings divided by `|Aut(h)|`.
pub fn count_copies(h: &Graph, g: &Graph) -> Result<u64> {
    let labeled = count_embeddings(h, g, &EmbedConstraints::none())?;
    Ok(labeled / automorphism_count(h))
}

/// Whether `host` has a copy of `pattern` using host edge `(a, b)`.
/// `sides` restricts to side-respecting copies.
pub fn contains_through_edge(
    pattern: &Graph,
    host: &Graph,
    a: Vertex,
    b: Vertex,
    sides: Option<(&[u8], &[u8])>,
) -> bool {
    for (p, q) in pattern.edges() {
        for (x, y) in [(p, q), (q, p)] {
            let mut c = EmbedConstraints::none().with_fixed(x, a).with_fixed(y, b);
            if let Some((ps, hs)) = sides {
                c.sides = Some((ps.to_vec(), hs.to_vec()));
            }
            if contains(pattern, host, &c).unwrap_or(false) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        complete, complete_bipartite, cycle, glued_prism, path, prism, star, GluedPrismLayout,
    };

    #[test]
    fn c4_into_k22_and_star() {
        let c4 = cycle(4).unwrap();
        let e = find_embedding(&c4, &complete_bipartite(2, 2), &EmbedConstraints::none())
            .unwrap()
            .unwrap();
        assert!(verify_embedding(
            &c4,
            &complete_bipartite(2, 2),
            &e,
            &EmbedConstraints::none()
        )
        .is_ok());
        assert_eq!(
            find_embedding(&c4, &star(3), &EmbedConstraints::none()).unwrap(),
            None
        );
    }

    #[test]
    fn rooted_c4_in_k23() {
        let c4 = cycle(4).unwrap();
        let k23 = complete_bipartite(2, 3);
        let targets = VertexSet::from_iter_with_capacity(5, [2, 3, 4]);
        let c = EmbedConstraints::none().with_root(0, targets.clone());
        let e = find_embedding(&c4, &k23, &c).unwrap().unwrap();
        assert!(targets.contains(e.map[0]));
        assert!(e.root_constrained);
        assert!(verify_embedding(&c4, &k23, &e, &c).is_ok());
        // first in lexicographic order: 0 -> 2, 1 -> 0, 2 -> 3, 3 -> 1
        assert_eq!(e.map, vec![2, 0, 3, 1]);
    }

    #[test]
    fn lexicographically_first() {
        let p = path(2);
        let host = complete(4);
        let e = find_embedding(&p, &host, &EmbedConstraints::none())
            .unwrap()
            .unwrap();
        assert_eq!(e.map, vec![0, 1, 2]);
        let c = EmbedConstraints::none().with_forbidden(VertexSet::from_iter_with_capacity(4, [1]));
        assert_eq!(
            find_embedding(&p, &host, &c).unwrap().unwrap().map,
            vec![0, 2, 3]
        );
    }

    #[test]
    fn invalid_constraints() {
        let c4 = cycle(4).unwrap();
        let bad = EmbedConstraints::none().with_root(9, VertexSet::new(4));
        assert!(find_embedding(&c4, &c4, &bad).is_err());
        let bad = EmbedConstraints::none().with_forbidden(VertexSet::new(3));
        assert!(find_embedding(&c4, &c4, &bad).is_err());
        assert!(find_embedding(&Graph::empty(0), &c4, &EmbedConstraints::none()).is_err());
    }

    #[test]
    fn copy_counts() {
        let c4 = cycle(4).unwrap();
        assert_eq!(count_copies(&c4, &complete_bipartite(2, 3)).unwrap(), 3);
        assert_eq!(count_copies(&c4, &c4).unwrap(), 1);
        let g = prism(5).unwrap();
        assert_eq!(
            count_copies(&complete(2), &g).unwrap(),
            g.edge_count() as u64
        );
        assert_eq!(count_copies(&c4, &complete(4)).unwrap(), 3);
        assert_eq!(automorphism_count(&c4), 8);
    }

    #[test]
    fn side_respecting() {
        // P_2 = a - b - c with b on side 1 only fits with b on the host's side 1
        let p2 = path(2);
        let host = complete_bipartite(1, 2); // 0 | 1 2
        let ps = vec![0, 1, 0];
        let hs = vec![0, 1, 1];
        let c = EmbedConstraints::none().with_sides(ps, hs);
        assert!(find_embedding(&p2, &host, &c).unwrap().is_none());
        let c = EmbedConstraints::none().with_sides(vec![1, 0, 1], vec![0, 1, 1]);
        let e = find_embedding(&p2, &host, &c).unwrap().unwrap();
        assert!(e.side_respecting);
    }

    #[test]
    fn through_edge() {
        let c4 = cycle(4).unwrap();
        let mut host = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!contains_through_edge(&c4, &host, 0, 1, None));
        host.add_edge_unchecked(0, 3);
        assert!(contains_through_edge(&c4, &host, 0, 3, None));
        assert!(!contains_through_edge(&c4, &host, 3, 4, None));
    }

    #[test]
    fn verifier_rejects_bad_maps() {
        let c4 = cycle(4).unwrap();
        let host = complete(4);
        let none = EmbeddingViolation::NotInjective(1);
        let e = Embedding {
            map: vec![0, 1, 1, 2],
            side_respecting: false,
            root_constrained: false,
        };
        assert_eq!(
            verify_embedding(&c4, &host, &e, &EmbedConstraints::none()),
            Err(none)
        );
        let e = Embedding {
            map: vec![0, 1, 2, 3],
            side_respecting: false,
            root_constrained: false,
        };
        let star_host = star(3);
        assert!(matches!(
            verify_embedding(&c4, &star_host, &e, &EmbedConstraints::none()),
            Err(EmbeddingViolation::MissingEdge(..))
        ));
    }

    #[test]
    fn two_prism_copies_in_glued_prism() {
        for l in [3usize, 4] {
            let host = glued_prism(l).unwrap();
            let layout = GluedPrismLayout::new(l).unwrap();
            let pattern = prism(2 * l).unwrap();
            let mut images = Vec::new();
            for copy in [layout.left_copy(), layout.right_copy()] {
                // search for a prism confined to the copy's vertex set
                let mut forbidden = VertexSet::full(host.n());
                for &v in &copy {
                    forbidden.remove(v);
                }
                let c = EmbedConstraints::none().with_forbidden(forbidden);
                let e = find_embedding(&pattern, &host, &c)
                    .unwrap()
                    .expect("copy hosts a prism");
                verify_embedding(&pattern, &host, &e, &c).unwrap();
                images.push(e.image_set(host.n()));
            }
            assert_ne!(images[0], images[1]);
            let mut common = images[0].clone();
            common.intersect_with(&images[1]);
            assert_eq!(common.len(), 2);
            let shared: Vec<_> = common.iter().collect();
            assert!(host.has_edge(shared[0], shared[1]));
        }
    }
}
