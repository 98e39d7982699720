//! Seeded batches of property checks, one row per comparison.
//!
//! Instance `i` of a batch draws from its own ChaCha stream `i` under the
//! batch seed, so rows do not depend on how work is split across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{critical_family, glue, glued_prism_minus, glued_prism_minus_witness};
use crate::counting::bounds::{bad_cycle_report, walk_interpolation, Comparison};
use crate::graph::{
    degeneracy, is_bipartite, is_critical_r_degenerate, BipartiteGraph, Bipartition, Graph,
    GraphError, Result,
};
use crate::procedures::cut::{balanced_bipartite_subgraph, min_degree_peel};
use crate::random::{random_graph, random_relation, random_subset};
use crate::search::{
    bipartite_extremal_number, extremal_number, zarankiewicz_number, Budget, SearchReport,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Chain,
    Interpolation,
    BadCycles,
    DyadicSums,
    CutAndPeel,
    Critical,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Chain,
        Suite::Interpolation,
        Suite::BadCycles,
        Suite::DyadicSums,
        Suite::CutAndPeel,
        Suite::Critical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chain => "chain",
            Suite::Interpolation => "lemma37",
            Suite::BadCycles => "lemma36",
            Suite::DyadicSums => "eqs",
            Suite::CutAndPeel => "facts",
            Suite::Critical => "critical",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Instances per batch when none is given.
    pub fn default_count(self) -> usize {
        match self {
            Suite::Interpolation => 200,
            Suite::BadCycles | Suite::DyadicSums => 50,
            Suite::CutAndPeel => 100,
            Suite::Chain | Suite::Critical => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub check: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl Row {
    fn new(check: impl Into<String>, lhs: impl ToString, rhs: impl ToString, pass: bool) -> Self {
        Row {
            check: check.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        }
    }

    fn le(check: impl Into<String>, c: &Comparison) -> Self {
        Row::new(check, &c.lhs, &c.rhs, c.holds())
    }

    fn flag(check: impl Into<String>, got: impl ToString, want: impl ToString) -> Self {
        let (got, want) = (got.to_string(), want.to_string());
        let pass = got == want;
        Row {
            check: check.into(),
            lhs: got,
            rhs: want,
            pass,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub rows: Vec<Row>,
    pub budget_exhausted: bool,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("check_id,lhs,rhs,pass\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{}\n", r.check, r.lhs, r.rhs, r.pass));
        }
        s
    }
}

fn instance_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

/// Extremal inequalities between host shapes for `h` at each `n`.
pub fn chain_suite(
    h: &Graph,
    sides: Option<&[u8]>,
    ns: &[usize],
    budget: Budget,
) -> Result<SuiteReport> {
    let h_sides: Vec<u8> = match sides {
        Some(s) => s.to_vec(),
        None => match is_bipartite(h) {
            Bipartition::Bipartite(b) => b.sides().to_vec(),
            Bipartition::OddCycle(_) => {
                return Err(GraphError::InvalidParameter(
                    "chain suite needs a bipartite pattern".into(),
                ))
            }
        },
    };
    let hb = BipartiteGraph::new(h.clone(), h_sides)?;
    let mut out = SuiteReport::default();
    for &n in ns {
        let z = zarankiewicz_number(n, n, &hb, budget)?;
        let bip = bipartite_extremal_number(n, n, h, budget)?;
        let general = extremal_number(2 * n, h, budget)?;
        let spent = |r: &SearchReport| r.budget_exhausted;
        out.budget_exhausted |= spent(&z) || spent(&bip) || spent(&general);
        out.rows.push(Row::new(
            format!("z_ge_bip_n{n}"),
            z.value,
            bip.value,
            z.value >= bip.value,
        ));
        out.rows.push(Row::new(
            format!("ex2n_ge_bip_n{n}"),
            general.value,
            bip.value,
            general.value >= bip.value,
        ));
        out.rows.push(Row::new(
            format!("twice_bip_ge_ex2n_n{n}"),
            2 * bip.value,
            general.value,
            2 * bip.value >= general.value,
        ));
    }
    Ok(out)
}

pub const INTERPOLATION_PAIRS: [(usize, usize); 4] = [(2, 0), (3, 0), (3, 1), (4, 2)];

/// Walk-count interpolation on `count` random graphs with `n <= 12`.
pub fn interpolation_suite(seed: u64, count: usize) -> SuiteReport {
    let rows: Vec<Vec<Row>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, i);
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            INTERPOLATION_PAIRS
                .iter()
                .map(|&(k, l)| {
                    Row::le(
                        format!("g{i}_k{k}_l{l}"),
                        &walk_interpolation(&g, k, l).expect("valid pair"),
                    )
                })
                .collect()
        })
        .collect();
    SuiteReport {
        rows: rows.into_iter().flatten().collect(),
        budget_exhausted: false,
    }
}

/// Bad-cycle bounds or the dyadic sums on random
/// `(G, ->, X1, X2)` with `n <= 8` and `k` alternating 2, 3.
fn bad_cycle_suite(seed: u64, count: usize, dyadic: bool) -> SuiteReport {
    let rows: Vec<Vec<Row>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, i);
            let n = rng.gen_range(2..=8);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            let q = rng.gen_range(0.0..0.5);
            let rel = random_relation(&mut rng, n, q);
            let x1 = random_subset(&mut rng, n, 0.5);
            let x2 = random_subset(&mut rng, n, 0.5);
            let k = 2 + i % 2;
            let r = bad_cycle_report(&g, &rel, k, &x1, &x2).expect("valid instance");
            if dyadic {
                vec![
                    Row::le(format!("i{i}_k{k}_gamma"), &r.gamma_bound),
                    Row::le(format!("i{i}_k{k}_alpha"), &r.alpha_bound),
                    Row::le(format!("i{i}_k{k}_beta"), &r.beta_bound),
                ]
            } else {
                r.power_bounds
                    .iter()
                    .enumerate()
                    .map(|(l, c)| Row::le(format!("i{i}_k{k}_l{l}_bad{}", r.bad), c))
                    .collect()
            }
        })
        .collect();
    SuiteReport {
        rows: rows.into_iter().flatten().collect(),
        budget_exhausted: false,
    }
}

pub fn bad_cycle_bound_suite(seed: u64, count: usize) -> SuiteReport {
    bad_cycle_suite(seed, count, false)
}

pub fn dyadic_sum_suite(seed: u64, count: usize) -> SuiteReport {
    bad_cycle_suite(seed, count, true)
}

/// Balanced cut and peel postconditions on random graphs with `n <= 20`.
pub fn cut_and_peel_suite(seed: u64, count: usize) -> SuiteReport {
    let rows: Vec<Vec<Row>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, i);
            let n = rng.gen_range(2..=20);
            let p = rng.gen_range(0.05..0.9);
            let g = random_graph(&mut rng, n, p);
            let e = g.edge_count();
            let cut = balanced_bipartite_subgraph(&g)
                .expect("n >= 2")
                .graph()
                .edge_count();
            let mut rows = vec![Row::new(
                format!("g{i}_cut"),
                cut,
                e.div_ceil(2),
                cut >= e.div_ceil(2),
            )];
            if e > 0 {
                let peeled = min_degree_peel(&g).expect("has edges");
                let kept_e = peeled.graph.edge_count();
                rows.push(Row::new(
                    format!("g{i}_peel_edges_x2"),
                    2 * kept_e,
                    e,
                    peeled.edge_bound_holds(),
                ));
                let min_deg = peeled.graph.min_degree();
                rows.push(Row::new(
                    format!("g{i}_peel_min_degree_x2n"),
                    2 * n * min_deg,
                    e,
                    peeled.min_degree_holds() && peeled.graph.n() > 0,
                ));
            }
            rows
        })
        .collect();
    SuiteReport {
        rows: rows.into_iter().flatten().collect(),
        budget_exhausted: false,
    }
}

/// Criticality of the three-step family for `r` in 2..=6, failure of its
/// self-glue, and the glued-prism family for `l` in 3..=8.
pub fn critical_suite() -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for r in 2..=6usize {
        let h = critical_family(r)?;
        let g = h.graph();
        rows.push(Row::flag(format!("r{r}_vertices"), g.n(), 3 * r + 2));
        rows.push(Row::flag(
            format!("r{r}_edges"),
            g.edge_count(),
            2 * r * r + 2 * r,
        ));
        rows.push(Row::flag(
            format!("r{r}_bipartite"),
            matches!(is_bipartite(g), Bipartition::Bipartite(_)),
            true,
        ));
        rows.push(Row::flag(
            format!("r{r}_critical"),
            is_critical_r_degenerate(g, r),
            true,
        ));
        let doubled = glue(&h, &h)?;
        let dg = doubled.graph();
        rows.push(Row::new(
            format!("r{r}_glued_min_degree"),
            dg.min_degree(),
            r + 1,
            dg.min_degree() > r,
        ));
        let (d, _) = degeneracy(dg);
        rows.push(Row::new(format!("r{r}_glued_degeneracy"), d, r, d > r));
    }
    for l in 3..=8usize {
        let h = glued_prism_minus(l)?;
        let g = h.graph();
        rows.push(Row::flag(format!("l{l}_vertices"), g.n(), 8 * l - 2));
        rows.push(Row::flag(format!("l{l}_edges"), g.edge_count(), 12 * l - 3));
        let twos = g.degrees().iter().filter(|&&d| d == 2).count();
        rows.push(Row::flag(format!("l{l}_degree2_count"), twos, 1));
        let threes = g.degrees().iter().filter(|&&d| d >= 3).count();
        rows.push(Row::flag(
            format!("l{l}_degree_ge3_count"),
            threes,
            g.n() - 1,
        ));
        let (d, _) = degeneracy(g);
        rows.push(Row::flag(format!("l{l}_degeneracy"), d, 2));
        let w = glued_prism_minus_witness(l)?;
        rows.push(Row::flag(format!("l{l}_witness"), w.witnesses(g, 2), true));
        rows.push(Row::flag(
            format!("l{l}_critical"),
            is_critical_r_degenerate(g, 2),
            true,
        ));
    }
    Ok(SuiteReport {
        rows,
        budget_exhausted: false,
    })
}
