//! Numerical recovery of the linear-δ_loc density constants, plus random
//! graph sampling for empirical probes.
//!
//! The probabilistic existence arguments boil down to closed-form entropy
//! conditions on a density c:
//!
//! * bipartite: H(d) + H(2c − d) − 1 ≤ 0 for all d ∈ (0, min(2c, 1)];
//! * general: (1 − d)·[H((c − d)/(1 − d)) − 1] + H(d) ≤ 0 for all d ∈ (0, c].
//!
//! The largest feasible c is ≈ 0.110 for the bipartite condition and
//! ≈ 0.189 for the general one. The surrounding probabilistic machinery
//! (the bad events A_D, their weights σ(A_D) = 1/(r·C(ν, dν)) and the
//! choice r = ν) only justifies these conditions and is not computed here.
//!
//! The d-range of the bipartite condition is clipped at min(2c, 1): past
//! d = 2c the underlying probability is zero, so H(2c − d) is never
//! evaluated outside its domain. The general scan honors the |D| ≤ cn cap
//! on the event family, hence d ≤ c.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::locmindeg;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionKind {
    Bipartite,
    General,
}

/// Solver knobs: coarse grid resolution, local refinement and bisection
/// tolerance. Defaults give three reliable decimals.
#[derive(Debug, Clone, Copy)]
pub struct EntropySolverConfig {
    pub grid_step: f64,
    pub refine_iters: u32,
    pub bisection_tol: f64,
}

impl Default for EntropySolverConfig {
    fn default() -> Self {
        EntropySolverConfig {
            grid_step: 1e-4,
            refine_iters: 80,
            bisection_tol: 1e-6,
        }
    }
}

/// Binary entropy H(t) = −t·log2(t) − (1−t)·log2(1−t), extended by
/// continuity with H(0) = H(1) = 0.
pub fn binary_entropy(t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) || t.is_nan() {
        return Err(Error::OutOfUnitInterval { value: t });
    }
    if t == 0.0 || t == 1.0 {
        return Ok(0.0);
    }
    Ok(-t * t.log2() - (1.0 - t) * (1.0 - t).log2())
}

#[inline]
fn entropy_unchecked(t: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 {
        0.0
    } else {
        -t * t.log2() - (1.0 - t) * (1.0 - t).log2()
    }
}

fn condition_lhs(kind: ConditionKind, c: f64, d: f64) -> f64 {
    match kind {
        ConditionKind::Bipartite => entropy_unchecked(d) + entropy_unchecked(2.0 * c - d) - 1.0,
        ConditionKind::General => {
            (1.0 - d) * (entropy_unchecked((c - d) / (1.0 - d)) - 1.0) + entropy_unchecked(d)
        }
    }
}

/// Worst case of an entropy condition over its d-range.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Margin {
    /// max over d of the condition's left-hand side; feasible iff ≤ 0.
    pub margin: f64,
    /// The maximizing d.
    pub worst_d: f64,
}

/// Maximize the condition's left-hand side over d: coarse grid, then
/// golden-section refinement around the best grid point.
pub fn condition_margin(kind: ConditionKind, c: f64) -> Result<Margin> {
    condition_margin_with(kind, c, &EntropySolverConfig::default())
}

pub fn condition_margin_with(
    kind: ConditionKind,
    c: f64,
    config: &EntropySolverConfig,
) -> Result<Margin> {
    if !(c > 0.0 && c <= 0.5) {
        return Err(Error::DensityOutOfRange { c });
    }
    let d_max = match kind {
        ConditionKind::Bipartite => (2.0 * c).min(1.0),
        ConditionKind::General => c,
    };
    let steps = ((d_max / config.grid_step).ceil() as usize).max(2);
    let mut best_d = d_max;
    let mut best = condition_lhs(kind, c, d_max);
    for i in 1..steps {
        let d = d_max * (i as f64) / (steps as f64);
        let v = condition_lhs(kind, c, d);
        if v > best {
            best = v;
            best_d = d;
        }
    }

    // golden-section around the best grid point
    let cell = d_max / (steps as f64);
    let mut lo = (best_d - cell).max(d_max * 1e-12);
    let mut hi = (best_d + cell).min(d_max);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let mut f1 = condition_lhs(kind, c, x1);
    let mut f2 = condition_lhs(kind, c, x2);
    for _ in 0..config.refine_iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = condition_lhs(kind, c, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = condition_lhs(kind, c, x1);
        }
    }
    let mid = 0.5 * (lo + hi);
    let f_mid = condition_lhs(kind, c, mid);
    if f_mid > best {
        best = f_mid;
        best_d = mid;
    }
    Ok(Margin {
        margin: best,
        worst_d: best_d,
    })
}

/// Largest density c whose condition margin stays nonpositive, by bisection
/// to `tol`. Feasibility is monotone in c on the scanned range (spot-checked
/// by the property suite).
pub fn solve_max_c(kind: ConditionKind, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::BadTolerance { tol });
    }
    let config = EntropySolverConfig {
        bisection_tol: tol,
        ..EntropySolverConfig::default()
    };
    let mut lo = 1e-4;
    let mut hi = 0.5;
    debug_assert!(condition_margin_with(kind, lo, &config)?.margin <= 0.0);
    debug_assert!(condition_margin_with(kind, hi, &config)?.margin > 0.0);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if condition_margin_with(kind, mid, &config)?.margin <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Sampled (d, margin-lhs) pairs for external plotting.
pub fn margin_curve(kind: ConditionKind, c: f64, points: usize) -> Result<Vec<(f64, f64)>> {
    if !(c > 0.0 && c <= 0.5) {
        return Err(Error::DensityOutOfRange { c });
    }
    let d_max = match kind {
        ConditionKind::Bipartite => (2.0 * c).min(1.0),
        ConditionKind::General => c,
    };
    let points = points.max(2);
    Ok((1..=points)
        .map(|i| {
            let d = d_max * (i as f64) / (points as f64);
            (d, condition_lhs(kind, c, d))
        })
        .collect())
}

/// G(n, 1/2): every pair is an edge with probability 1/2, pairs scanned in
/// lexicographic order. Deterministic under the seed.
pub fn random_graph(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_fn(n, |_, _| rng.random_bool(0.5))
}

/// Random bipartite graph with independent sides {0..nu} and {nu..2nu};
/// each cross pair is an edge with probability 1/2.
pub fn random_bipartite(nu: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * nu;
    let g = Graph::from_fn(n, |u, v| u < nu && v >= nu && rng.random_bool(0.5))?;
    if nu == 0 {
        return Graph::empty(0);
    }
    let left = VertexSet::from_indices(n, 0..nu)?;
    let right = left.complement();
    g.with_bipartition(left, right)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "shape")]
pub enum ProfileShape {
    General { n: usize },
    Bipartite { nu: usize },
}

/// Exact δ_loc histogram over random graphs.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileReport {
    pub shape: ProfileShape,
    pub samples: u64,
    /// δ_loc value → number of samples attaining it.
    pub histogram: BTreeMap<usize, u64>,
    pub max_delta_loc: usize,
    /// Fraction of samples with δ_loc strictly above c·n, when a density
    /// threshold was supplied.
    pub threshold_c: Option<f64>,
    pub exceed_fraction: Option<f64>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Per-sample seed derived from the master seed by counter splitting.
pub fn sample_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}

/// Exact δ_loc over `samples` random graphs of the given shape, as a
/// histogram. Every sample is checked against the δ_loc ≤ δ invariant.
pub fn empirical_profile(
    shape: ProfileShape,
    samples: u64,
    seed: u64,
    threshold_c: Option<f64>,
    exact_cap: usize,
    oneside_cap: usize,
) -> Result<ProfileReport> {
    let n = match shape {
        ProfileShape::General { n } => {
            if n > exact_cap {
                return Err(Error::SearchTooLarge { n, cap: exact_cap });
            }
            n
        }
        ProfileShape::Bipartite { nu } => {
            if nu > oneside_cap {
                return Err(Error::SearchTooLarge {
                    n: nu,
                    cap: oneside_cap,
                });
            }
            2 * nu
        }
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    let mut exceed = 0u64;
    let mut max_delta = 0usize;
    for i in 0..samples {
        let g = match shape {
            ProfileShape::General { n } => random_graph(n, sample_seed(seed, i))?,
            ProfileShape::Bipartite { nu } => random_bipartite(nu, sample_seed(seed, i))?,
        };
        let value = match shape {
            ProfileShape::General { .. } => locmindeg::delta_loc_exact(&g, exact_cap)?.value,
            ProfileShape::Bipartite { .. } => {
                locmindeg::delta_loc_bipartite(&g, oneside_cap)?.value
            }
        };
        debug_assert!(value <= g.min_degree()?);
        *histogram.entry(value).or_insert(0) += 1;
        max_delta = max_delta.max(value);
        if let Some(c) = threshold_c {
            if value as f64 > c * n as f64 {
                exceed += 1;
            }
        }
    }
    Ok(ProfileReport {
        shape,
        samples,
        histogram,
        max_delta_loc: max_delta,
        threshold_c,
        exceed_fraction: threshold_c.map(|_| {
            if samples == 0 {
                0.0
            } else {
                exceed as f64 / samples as f64
            }
        }),
    })
}
