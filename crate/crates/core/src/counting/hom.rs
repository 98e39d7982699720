//! Exact walk and homomorphism counts.
//!
//! Homomorphic cycles and paths are counted as tuples (closed or open
//! walks), never up to rotation or reflection.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bitset::VertexSet;
use crate::counting::relation::Relation;
use crate::graph::{Graph, GraphError, Result, Vertex};

/// Dense `A^t` with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMatrix {
    pub steps: usize,
    rows: Vec<Vec<BigUint>>,
}

impl WalkMatrix {
    pub fn new(g: &Graph, steps: usize) -> Self {
        let n = g.n();
        let mut rows: Vec<Vec<BigUint>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigUint::one()
                        } else {
                            BigUint::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for _ in 0..steps {
            rows = rows
                .iter()
                .map(|row| {
                    (0..n)
                        .map(|w| {
                            g.neighbors(w)
                                .iter()
                                .fold(BigUint::zero(), |acc, v| acc + &row[v])
                        })
                        .collect()
                })
                .collect();
        }
        WalkMatrix { steps, rows }
    }

    /// Number of `steps`-edge walks from `a` to `b`.
    #[inline]
    pub fn get(&self, a: Vertex, b: Vertex) -> &BigUint {
        &self.rows[a][b]
    }

    /// `trace(A^(2 steps))`, using symmetry of `A`.
    pub fn trace_of_square(&self) -> BigUint {
        self.rows.iter().flatten().map(|x| x * x).sum()
    }
}

/// `hom(C_length, G)`: closed walks of the given even length.
/// `hom_cycle(0, G) = v(G)`.
pub fn hom_cycle(length: usize, g: &Graph) -> Result<BigUint> {
    if length % 2 == 1 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle length {length} must be even"
        )));
    }
    Ok(WalkMatrix::new(g, length / 2).trace_of_square())
}

/// `hom_{a,b}(P_t, G) = (A^t)_{a,b}`.
pub fn path_hom_between(a: Vertex, b: Vertex, t: usize, g: &Graph) -> Result<BigUint> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let mut cur = vec![BigUint::zero(); g.n()];
    cur[a] = BigUint::one();
    for _ in 0..t {
        cur = (0..g.n())
            .map(|w| {
                g.neighbors(w)
                    .iter()
                    .fold(BigUint::zero(), |acc, v| acc + &cur[v])
            })
            .collect();
    }
    Ok(std::mem::take(&mut cur[b]))
}

/// Dyadic class of a positive count: the `r` with `2^(r-1) <= x < 2^r`.
pub fn dyadic_class(x: &BigUint) -> u32 {
    x.bits() as u32
}

/// Calls `visit` on every closed walk `x_0 .. x_{len-1}` (edge `x_{len-1} x_0`
/// included) with `x_i` drawn from `allowed(i)`.
pub(crate) fn for_each_closed_walk<F>(g: &Graph, len: usize, allowed: &[&VertexSet], mut visit: F)
where
    F: FnMut(&[Vertex]),
{
    fn rec<F: FnMut(&[Vertex])>(
        g: &Graph,
        len: usize,
        allowed: &[&VertexSet],
        walk: &mut Vec<Vertex>,
        visit: &mut F,
    ) {
        let i = walk.len();
        if i == len {
            if g.has_edge(walk[len - 1], walk[0]) {
                visit(walk);
            }
            return;
        }
        let mut cand = allowed[i % allowed.len()].clone();
        if i > 0 {
            cand.intersect_with(g.neighbors(walk[i - 1]));
        }
        for v in cand.iter() {
            walk.push(v);
            rec(g, len, allowed, walk, visit);
            walk.pop();
        }
    }
    if len == 0 {
        return;
    }
    let mut walk = Vec::with_capacity(len);
    rec(g, len, allowed, &mut walk, &mut visit);
}

fn check_subset(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.capacity() != g.n() {
        return Err(GraphError::InvalidParameter(format!(
            "vertex set sized for {} vertices, graph has {}",
            s.capacity(),
            g.n()
        )));
    }
    Ok(())
}

/// Homomorphic `2k`-cycles alternating between `x1` and `x2` (in either
/// phase) with `x_i -> x_j` for some `i != j`. Brute-force enumeration.
pub fn bad_hom_cycle_count(
    g: &Graph,
    rel: &Relation,
    k: usize,
    x1: &VertexSet,
    x2: &VertexSet,
) -> Result<u64> {
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "k = {k} must be >= 2"
        )));
    }
    check_subset(g, x1)?;
    check_subset(g, x2)?;
    let mut either = x1.clone();
    either.union_with(x2);
    let mut count = 0u64;
    for_each_closed_walk(g, 2 * k, &[&either], |w| {
        let phase_a = w.iter().enumerate().all(|(i, &v)| {
            if i % 2 == 0 {
                x1.contains(v)
            } else {
                x2.contains(v)
            }
        });
        let phase_b = w.iter().enumerate().all(|(i, &v)| {
            if i % 2 == 0 {
                x2.contains(v)
            } else {
                x1.contains(v)
            }
        });
        if (phase_a || phase_b) && has_related_pair(rel, w) {
            count += 1;
        }
    });
    Ok(count)
}

/// Number of alternating homomorphic `2k`-cycles, bad or not.
pub fn alternating_hom_cycle_count(
    g: &Graph,
    k: usize,
    x1: &VertexSet,
    x2: &VertexSet,
) -> Result<u64> {
    bad_hom_cycle_count(g, &Relation::total(g.n()), k, x1, x2)
}

fn has_related_pair(rel: &Relation, w: &[Vertex]) -> bool {
    (0..w.len()).any(|i| (0..w.len()).any(|j| i != j && rel.holds(w[i], w[j])))
}

/// Degree parameters of the asymmetric bad-cycle bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternationParams {
    /// Max neighbors in `X2` of a vertex of `X1`.
    pub delta1: u64,
    /// Max over `u` and `v in X1` of neighbors `w in X2` of `v` with `u -> w`.
    pub s1: u64,
    pub delta2: u64,
    pub s2: u64,
}

impl AlternationParams {
    pub fn measure(g: &Graph, rel: &Relation, x1: &VertexSet, x2: &VertexSet) -> Result<Self> {
        check_subset(g, x1)?;
        check_subset(g, x2)?;
        let side = |from: &VertexSet, to: &VertexSet| -> (u64, u64) {
            let mut delta = 0;
            let mut s = 0;
            for v in from.iter() {
                let mut nb = g.neighbors(v).clone();
                nb.intersect_with(to);
                delta = delta.max(nb.len() as u64);
                for u in 0..g.n() {
                    s = s.max(rel.row(u).intersection_len(&nb) as u64);
                }
            }
            (delta, s)
        };
        let (delta1, s1) = side(x1, x2);
        let (delta2, s2) = side(x2, x1);
        Ok(AlternationParams {
            delta1,
            s1,
            delta2,
            s2,
        })
    }

    /// `M = max(delta1 * s2, delta2 * s1)`.
    pub fn m(&self) -> u64 {
        (self.delta1 * self.s2).max(self.delta2 * self.s1)
    }
}

/// The dyadic path and cycle tables used to bound bad cycles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DyadicProfile {
    pub k: usize,
    /// `alpha[r]`: `(k-1)`-edge walks whose endpoint walk count is in class `r`.
    pub alpha: BTreeMap<u32, BigUint>,
    /// `beta[t]`: the same for `k`-edge walks.
    pub beta: BTreeMap<u32, BigUint>,
    /// `gamma[(r, t)]`: alternating `2k`-cycles starting in `X1` with
    /// `x_i -> x_1` for some `i` in `2..=k+1`, classed by
    /// `hom_{x1,x_{k+2}}(P_{k-1})` and `hom_{x2,x_{k+2}}(P_k)`.
    pub gamma: BTreeMap<(u32, u32), u64>,
}

impl DyadicProfile {
    pub fn alpha_weighted_sum(&self) -> BigUint {
        weighted(&self.alpha)
    }

    pub fn beta_weighted_sum(&self) -> BigUint {
        weighted(&self.beta)
    }

    pub fn gamma_total(&self) -> u64 {
        self.gamma.values().sum()
    }
}

fn weighted(table: &BTreeMap<u32, BigUint>) -> BigUint {
    table
        .iter()
        .map(|(&r, count)| count << (r as usize - 1))
        .sum()
}

fn walk_class_table(w: &WalkMatrix) -> BTreeMap<u32, BigUint> {
    let mut table: BTreeMap<u32, BigUint> = BTreeMap::new();
    let n = w.rows.len();
    for a in 0..n {
        for b in 0..n {
            let c = w.get(a, b);
            if !c.is_zero() {
                *table.entry(dyadic_class(c)).or_default() += c;
            }
        }
    }
    table
}

pub fn profile_alpha_beta_gamma(
    g: &Graph,
    k: usize,
    rel: &Relation,
    x1: &VertexSet,
    x2: &VertexSet,
) -> Result<DyadicProfile> {
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "k = {k} must be >= 2"
        )));
    }
    check_subset(g, x1)?;
    check_subset(g, x2)?;
    let short = WalkMatrix::new(g, k - 1);
    let long = WalkMatrix::new(g, k);
    let mut gamma: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for_each_closed_walk(g, 2 * k, &[x1, x2], |w| {
        // 0-based: x_1 = w[0], x_2 = w[1], x_{k+2} = w[k + 1]
        if (1..=k).any(|i| rel.holds(w[i], w[0])) {
            let r = dyadic_class(short.get(w[0], w[k + 1]));
            let t = dyadic_class(long.get(w[1], w[k + 1]));
            *gamma.entry((r, t)).or_default() += 1;
        }
    });
    Ok(DyadicProfile {
        k,
        alpha: walk_class_table(&short),
        beta: walk_class_table(&long),
        gamma,
    })
}
