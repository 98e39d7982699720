//! Exact-integer checks of the walk-count inequalities.
//!
//! Bounds with fractional exponents are raised to a common integer power so
//! both sides stay in `BigUint`.

use num_bigint::BigUint;
use num_traits::Pow;

use crate::bitset::VertexSet;
use crate::counting::hom::{
    bad_hom_cycle_count, hom_cycle, profile_alpha_beta_gamma, AlternationParams,
};
use crate::counting::relation::Relation;
use crate::graph::{Graph, GraphError, Result};

/// One side-by-side comparison `lhs <= rhs`, both in the compared form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// `hom(C_{2k-2})^(k-l) <= hom(C_{2l}) * hom(C_{2k})^(k-l-1)` for `0 <= l < k`.
pub fn walk_interpolation(g: &Graph, k: usize, l: usize) -> Result<Comparison> {
    if k < 1 || l >= k {
        return Err(GraphError::InvalidParameter(format!(
            "need 0 <= l < k, got k = {k}, l = {l}"
        )));
    }
    let d = (k - l) as u32;
    let lhs = hom_cycle(2 * k - 2, g)?.pow(d);
    let rhs = hom_cycle(2 * l, g)? * hom_cycle(2 * k, g)?.pow(d - 1);
    Ok(Comparison { lhs, rhs })
}

/// Everything measured on one `(G, ->, X1, X2, k)` instance.
#[derive(Clone, Debug)]
pub struct BadCycleReport {
    pub k: usize,
    pub bad: u64,
    pub params: AlternationParams,
    /// Per `l` in `0..k`: `bad^(2d) <= 64^(2d) k^(3d) M^d hom(C_2l) hom(C_2k)^(2d-1)`, `d = k - l`.
    pub power_bounds: Vec<Comparison>,
    /// `(sum gamma)^2 <= 64 k M hom(C_{2k-2}) hom(C_{2k})`.
    pub gamma_bound: Comparison,
    /// `sum alpha_r 2^(r-1) <= hom(C_{2k-2})`.
    pub alpha_bound: Comparison,
    /// `sum beta_t 2^(t-1) <= hom(C_{2k})`.
    pub beta_bound: Comparison,
}

impl BadCycleReport {
    pub fn all_hold(&self) -> bool {
        self.power_bounds.iter().all(Comparison::holds)
            && self.gamma_bound.holds()
            && self.alpha_bound.holds()
            && self.beta_bound.holds()
    }
}

pub fn bad_cycle_report(
    g: &Graph,
    rel: &Relation,
    k: usize,
    x1: &VertexSet,
    x2: &VertexSet,
) -> Result<BadCycleReport> {
    let bad = bad_hom_cycle_count(g, rel, k, x1, x2)?;
    let params = AlternationParams::measure(g, rel, x1, x2)?;
    let m = BigUint::from(params.m());
    let kk = BigUint::from(k);
    let long = hom_cycle(2 * k, g)?;
    let short = hom_cycle(2 * k - 2, g)?;
    let mut power_bounds = Vec::with_capacity(k);
    for l in 0..k {
        let d = (k - l) as u32;
        let lhs = BigUint::from(bad).pow(2 * d);
        let rhs = BigUint::from(64u32).pow(2 * d)
            * kk.clone().pow(3 * d)
            * m.clone().pow(d)
            * hom_cycle(2 * l, g)?
            * long.clone().pow(2 * d - 1);
        power_bounds.push(Comparison { lhs, rhs });
    }
    let profile = profile_alpha_beta_gamma(g, k, rel, x1, x2)?;
    let gamma_bound = Comparison {
        lhs: BigUint::from(profile.gamma_total()).pow(2u32),
        rhs: BigUint::from(64u32) * &kk * &m * &short * &long,
    };
    Ok(BadCycleReport {
        k,
        bad,
        params,
        power_bounds,
        gamma_bound,
        alpha_bound: Comparison {
            lhs: profile.alpha_weighted_sum(),
            rhs: short,
        },
        beta_bound: Comparison {
            lhs: profile.beta_weighted_sum(),
            rhs: long,
        },
    })
}
