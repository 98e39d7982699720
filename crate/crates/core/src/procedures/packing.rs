//! Greedy packing of rooted copies with high-degree roots.

use crate::bitset::VertexSet;
use crate::counting::embed::{find_embedding, EmbedConstraints, Embedding};
use crate::graph::{
    is_bipartite, BipartiteGraph, Bipartition, GraphError, Result, RootedGraph, Vertex,
};

/// Copies `F_1 .. F_k` in the order picked.
#[derive(Clone, Debug)]
pub struct PackingResult {
    pub copies: Vec<Embedding>,
    /// `roots[i]`: image of the pattern root in copy `i`.
    pub roots: Vec<Vertex>,
    /// Side-1 vertices of each copy.
    pub s_sets: Vec<Vec<Vertex>>,
    /// Those of degree at most the root's.
    pub s_prime_sets: Vec<Vec<Vertex>>,
    /// Edges of the host between side 0 and side 1 minus all `s_prime_sets`.
    pub leftover_edges: usize,
    /// Whether the second packing claim applied (leftover below the threshold
    /// and below half the edges) and so was checked.
    pub degree_claim_checked: bool,
    pub halted: bool,
}

impl PackingResult {
    pub fn k(&self) -> usize {
        self.copies.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PackingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("pattern is not bipartite")]
    PatternNotBipartite,
    #[error("root {root} of copy {copy} also lies in the side-1 set of copy {other}")]
    RootShared {
        copy: usize,
        other: usize,
        root: Vertex,
    },
    #[error("copy {copy} meets an earlier low-degree set")]
    NotDisjoint { copy: usize },
    #[error("root degrees sum to {sum}, need {needed_twice} / (2 * {pattern_n})")]
    RootDegreeSum {
        sum: usize,
        needed_twice: usize,
        pattern_n: usize,
    },
}

/// Repeatedly takes a copy of `pattern` with root on side 1, avoiding all
/// earlier low-degree sets, whose root has the largest degree; ties go to the
/// lexicographically smallest embedding. Halts when no copy is left.
pub fn greedy_pack(
    host: &BipartiteGraph,
    pattern: &RootedGraph,
    threshold: f64,
) -> Result<PackingResult, PackingError> {
    if let Bipartition::OddCycle(_) = is_bipartite(pattern.graph()) {
        return Err(PackingError::PatternNotBipartite);
    }
    let g = host.graph();
    let n = g.n();
    let right = host.side_set(1);
    let mut levels: Vec<usize> = right.iter().map(|v| g.degree(v)).collect();
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();

    let mut blocked = VertexSet::new(n);
    let mut out = PackingResult {
        copies: Vec::new(),
        roots: Vec::new(),
        s_sets: Vec::new(),
        s_prime_sets: Vec::new(),
        leftover_edges: 0,
        degree_claim_checked: false,
        halted: true,
    };
    'pick: loop {
        for &level in &levels {
            let targets = VertexSet::from_iter_with_capacity(
                n,
                right
                    .iter()
                    .filter(|&v| g.degree(v) == level && !blocked.contains(v)),
            );
            if targets.is_empty() {
                continue;
            }
            let c = EmbedConstraints::none()
                .with_root(pattern.root(), targets)
                .with_forbidden(blocked.clone());
            if let Some(copy) = find_embedding(pattern.graph(), g, &c)? {
                let root = copy.map[pattern.root()];
                let s: Vec<Vertex> = {
                    let mut s: Vec<Vertex> = copy.image().filter(|&v| right.contains(v)).collect();
                    s.sort_unstable();
                    s
                };
                let s_prime: Vec<Vertex> = s
                    .iter()
                    .copied()
                    .filter(|&x| g.degree(x) <= g.degree(root))
                    .collect();
                for &x in &s_prime {
                    blocked.insert(x);
                }
                out.copies.push(copy);
                out.roots.push(root);
                out.s_sets.push(s);
                out.s_prime_sets.push(s_prime);
                continue 'pick;
            }
        }
        break;
    }
    check_claims(host, pattern, threshold, &blocked, &mut out)?;
    Ok(out)
}

fn check_claims(
    host: &BipartiteGraph,
    pattern: &RootedGraph,
    threshold: f64,
    blocked: &VertexSet,
    out: &mut PackingResult,
) -> Result<(), PackingError> {
    let g = host.graph();
    for (i, s) in out.s_sets.iter().enumerate() {
        for (j, &root) in out.roots.iter().enumerate() {
            if i != j && s.contains(&root) {
                return Err(PackingError::RootShared {
                    copy: j,
                    other: i,
                    root,
                });
            }
        }
    }
    let mut earlier = VertexSet::new(g.n());
    for (i, copy) in out.copies.iter().enumerate() {
        if copy.image().any(|v| earlier.contains(v)) {
            return Err(PackingError::NotDisjoint { copy: i });
        }
        for &x in &out.s_prime_sets[i] {
            earlier.insert(x);
        }
    }
    out.leftover_edges = host
        .side_vertices(1)
        .into_iter()
        .filter(|&v| !blocked.contains(v))
        .map(|v| g.degree(v))
        .sum();
    let e = g.edge_count();
    if (out.leftover_edges as f64) < threshold && 2 * out.leftover_edges < e {
        out.degree_claim_checked = true;
        let sum: usize = out.roots.iter().map(|&u| g.degree(u)).sum();
        let pattern_n = pattern.graph().n();
        if 2 * pattern_n * sum < e {
            return Err(PackingError::RootDegreeSum {
                sum,
                needed_twice: e,
                pattern_n,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cycle;
    use crate::graph::Graph;

    fn kab(a: usize, b: usize) -> BipartiteGraph {
        BipartiteGraph::from_biadjacency(a, b, (0..a).flat_map(|i| (0..b).map(move |j| (i, j))))
            .unwrap()
    }

    fn rooted_c4() -> RootedGraph {
        RootedGraph::new(cycle(4).unwrap(), 0).unwrap()
    }

    #[test]
    fn k22_halts_after_one_copy() {
        let r = greedy_pack(&kab(2, 2), &rooted_c4(), 1.0).unwrap();
        assert_eq!(r.k(), 1);
        assert_eq!(r.roots, vec![2]);
        assert_eq!(r.s_prime_sets[0], vec![2, 3]);
        assert_eq!(r.leftover_edges, 0);
    }

    #[test]
    fn no_copy_at_all() {
        let path = BipartiteGraph::from_biadjacency(2, 2, [(0, 0), (1, 0), (1, 1)]).unwrap();
        let r = greedy_pack(&path, &rooted_c4(), 1.0).unwrap();
        assert_eq!(r.k(), 0);
        assert!(r.roots.is_empty());
    }

    #[test]
    fn k44_claims_hold() {
        let r = greedy_pack(&kab(4, 4), &rooted_c4(), 16.0 / 48.0 / 4.0).unwrap();
        assert_eq!(r.k(), 2);
        for (i, s) in r.s_sets.iter().enumerate() {
            let hits: Vec<_> = r.roots.iter().filter(|u| s.contains(u)).collect();
            assert_eq!(hits, vec![&r.roots[i]]);
        }
    }

    #[test]
    fn prefers_high_degree_roots() {
        // side-1 vertex 5 has degree 3, the others 2
        let g = BipartiteGraph::from_biadjacency(
            3,
            3,
            [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)],
        )
        .unwrap();
        let r = greedy_pack(&g, &rooted_c4(), 0.0).unwrap();
        assert_eq!(r.roots[0], 5);
    }

    #[test]
    fn odd_pattern_rejected() {
        let tri =
            RootedGraph::new(Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap(), 0).unwrap();
        assert_eq!(
            greedy_pack(&kab(2, 2), &tri, 1.0).unwrap_err(),
            PackingError::PatternNotBipartite
        );
    }

    #[test]
    fn degree_claim_is_checked_when_it_applies() {
        // threshold above every possible leftover forces the check
        let r = greedy_pack(&kab(3, 5), &rooted_c4(), 1e9).unwrap();
        assert!(r.degree_claim_checked);
    }
}
