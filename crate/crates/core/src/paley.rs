//! Paley graphs and exact verification of their character-sum identities.
//!
//! For a prime p ≡ 1 (mod 4), the Paley graph Pal_p has vertex set F_p and
//! an edge {i, j} whenever i − j is a nonzero square mod p. For a nonempty
//! S ⊆ F_p and f_S(i) = ∏_{j∈S}(i − j), the Legendre character sum
//! Σ_i χ_L(f_S(i)) equals ±(|S ∪ Odd(S)| − |S ∪ Even(S)|), and the Weil
//! bound caps its magnitude by (|S|−1)√p + 1. Chaining the two gives
//! δ_loc(Pal_p) ≥ √p − 3/2.
//!
//! Every equality below is checked in exact integer arithmetic; √p enters
//! only through squared comparisons such as (|sum|−1)² ≤ (|S|−1)²·p. The
//! measured δ_loc values are reported as-is: the √p bound is known to be a
//! lower bound only, and nothing here claims it is attained.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::locmindeg::{self, DeltaLocResult};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Default cap on p for building the Paley graph.
pub const DEFAULT_PALEY_CAP: u64 = 257;

/// Deterministic primality by trial division; fine at desk scale.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre character: 0 on multiples of p, +1 on nonzero squares, −1
/// otherwise, via x^{(p−1)/2} mod p.
pub fn legendre(p: u64, x: u64) -> Result<i32> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotPrime { p });
    }
    let r = mod_pow(x % p, (p - 1) / 2, p);
    Ok(match r {
        0 => 0,
        1 => 1,
        _ if r == p - 1 => -1,
        _ => unreachable!("x^((p-1)/2) mod p is 0 or ±1 for prime p"),
    })
}

/// A Paley graph together with its quadratic-residue table.
#[derive(Debug, Clone)]
pub struct PaleyContext {
    p: u64,
    residues: Vec<bool>,
    graph: Graph,
}

impl PaleyContext {
    pub fn new(p: u64) -> Result<Self> {
        Self::with_cap(p, DEFAULT_PALEY_CAP)
    }

    pub fn with_cap(p: u64, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        if p % 4 != 1 {
            return Err(Error::NotOneModFour { p });
        }
        if p > cap {
            return Err(Error::PaleyTooLarge { p, cap });
        }
        let mut residues = vec![false; p as usize];
        for i in 1..p {
            residues[((i as u128 * i as u128) % p as u128) as usize] = true;
        }
        let graph = Graph::from_fn(p as usize, |u, v| {
            residues[(v - u) % p as usize]
        })?;
        Ok(PaleyContext { p, residues, graph })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_residue(&self, x: u64) -> bool {
        self.residues[(x % self.p) as usize]
    }

    /// χ_L via the precomputed table.
    #[inline]
    fn chi(&self, x: u64) -> i64 {
        let r = (x % self.p) as usize;
        if r == 0 {
            0
        } else if self.residues[r] {
            1
        } else {
            -1
        }
    }
}

/// Exact evaluation of the character sum of f_S alongside the set sizes it
/// measures.
#[derive(Debug, Clone, Serialize)]
pub struct CharSumReport {
    pub s: VertexSet,
    /// Σ_{i=0}^{p−1} χ_L(f_S(i)), exact.
    pub sum: i64,
    /// |S ∪ Odd(S)|
    pub odd_size: usize,
    /// |S ∪ Even(S)|
    pub even_size: usize,
    /// (|S|−1)√p + 1, for display; comparisons stay in integers.
    pub weil_rhs: f64,
}

impl CharSumReport {
    /// |sum| = | |S∪Odd(S)| − |S∪Even(S)| |, exactly.
    pub fn identity_holds(&self) -> bool {
        self.sum.unsigned_abs() == (self.odd_size as i64 - self.even_size as i64).unsigned_abs()
    }

    /// |sum| ≤ (|S|−1)√p + 1, compared in integers: with |sum| ≥ 1 this is
    /// (|sum|−1)² ≤ (|S|−1)²·p.
    pub fn weil_holds(&self, p: u64, set_size: usize) -> bool {
        let a = self.sum.unsigned_abs();
        if a <= 1 {
            return true;
        }
        let lhs = (a - 1) as u128 * (a - 1) as u128;
        let s1 = (set_size - 1) as u128;
        lhs <= s1 * s1 * p as u128
    }
}

/// Character sum of f_S(i) = ∏_{j∈S}(i−j) over all i ∈ F_p, for nonempty S.
pub fn char_sum(ctx: &PaleyContext, s: &VertexSet) -> Result<CharSumReport> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let p = ctx.p;
    if s.universe() != p as usize {
        return Err(Error::UniverseMismatch {
            set_len: s.universe(),
            n: p as usize,
        });
    }
    let members: Vec<u64> = s.iter().map(|v| v as u64).collect();
    let mut sum: i64 = 0;
    for i in 0..p {
        let mut f: u64 = 1;
        for &j in &members {
            f = (f as u128 * ((i + p - j) % p) as u128 % p as u128) as u64;
            if f == 0 {
                break;
            }
        }
        sum += ctx.chi(f);
    }
    let odd = ctx.graph.odd_neighborhood(s)?;
    let even = ctx.graph.even_neighborhood(s)?;
    let odd_size = s.union(&odd).len();
    let even_size = s.union(&even).len();
    Ok(CharSumReport {
        s: s.clone(),
        sum,
        odd_size,
        even_size,
        weil_rhs: (members.len() as f64 - 1.0) * (p as f64).sqrt() + 1.0,
    })
}

/// Outcome of a batch identity check; `counterexample` is the first failure.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub checks: u64,
    pub passed: bool,
    pub counterexample: Option<CharSumReport>,
}

fn random_nonempty_subset(rng: &mut ChaCha8Rng, universe: usize) -> VertexSet {
    loop {
        let s = VertexSet::from_indices(universe, (0..universe).filter(|_| rng.random_bool(0.5)))
            .expect("indices in range");
        if !s.is_empty() {
            return s;
        }
    }
}

/// Sample random nonempty S and check the exact identity
/// |Σ χ_L(f_S(i))| = ||S∪Odd(S)| − |S∪Even(S)||.
pub fn verify_odd_even_identity(ctx: &PaleyContext, trials: u64, seed: u64) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0;
    for _ in 0..trials {
        let s = random_nonempty_subset(&mut rng, ctx.p as usize);
        let report = char_sum(ctx, &s)?;
        checks += 1;
        if !report.identity_holds() {
            return Ok(CheckOutcome {
                checks,
                passed: false,
                counterexample: Some(report),
            });
        }
    }
    Ok(CheckOutcome {
        checks,
        passed: true,
        counterexample: None,
    })
}

/// Check |Σ χ_L(f_S(i))| ≤ (|S|−1)√p + 1 for every S up to
/// `max_subset_size` exhaustively, plus `trials` random larger S.
pub fn verify_weil_bound(
    ctx: &PaleyContext,
    max_subset_size: usize,
    trials: u64,
    seed: u64,
) -> Result<CheckOutcome> {
    let p = ctx.p as usize;
    let mut checks = 0;
    for size in 1..=max_subset_size.min(p) {
        for combo in (0..p).combinations(size) {
            let s = VertexSet::from_indices(p, combo)?;
            let report = char_sum(ctx, &s)?;
            checks += 1;
            if !report.weil_holds(ctx.p, size) {
                return Ok(CheckOutcome {
                    checks,
                    passed: false,
                    counterexample: Some(report),
                });
            }
        }
    }
    // random subsets strictly larger than the exhaustive range
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut universe: Vec<usize> = (0..p).collect();
    for _ in 0..trials {
        let size = if max_subset_size >= p {
            rng.random_range(1..=p)
        } else {
            rng.random_range(max_subset_size + 1..=p)
        };
        for i in 0..size {
            let j = rng.random_range(i..p);
            universe.swap(i, j);
        }
        let s = VertexSet::from_indices(p, universe[..size].iter().copied())?;
        let report = char_sum(ctx, &s)?;
        checks += 1;
        if !report.weil_holds(ctx.p, size) {
            return Ok(CheckOutcome {
                checks,
                passed: false,
                counterexample: Some(report),
            });
        }
    }
    Ok(CheckOutcome {
        checks,
        passed: true,
        counterexample: None,
    })
}

/// How the √p − 3/2 bound was examined.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum PaleyVerification {
    /// δ_loc computed exactly by full enumeration.
    Verified { delta_loc: DeltaLocResult },
    /// p too large for enumeration; random search found no set below the
    /// bound (which would have disproven it).
    NotFalsified { threshold: usize, trials: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct PaleyTheoremReport {
    pub p: u64,
    /// √p − 3/2, for display.
    pub bound: f64,
    pub verification: PaleyVerification,
    /// δ_loc(Pal_p) ≥ √p − 3/2 (exact integer comparison), or in falsifier
    /// mode: no counterexample found.
    pub holds: bool,
    /// min over nonempty S of |S ∪ Odd(S)| ≥ √p − 1/2, from the same sweep.
    pub min_closed_odd_bound_holds: bool,
}

/// δ_loc(Pal_p) ≥ √p − 3/2 ⟺ (2·δ_loc + 3)² ≥ 4p.
fn delta_bound_holds(delta_loc: usize, p: u64) -> bool {
    let t = 2 * delta_loc as u128 + 3;
    t * t >= 4 * p as u128
}

/// m ≥ √p − 1/2 ⟺ (2m + 1)² ≥ 4p.
fn closed_odd_bound_holds(min_closed_odd: usize, p: u64) -> bool {
    let t = 2 * min_closed_odd as u128 + 1;
    t * t >= 4 * p as u128
}

/// Largest m that would still violate m ≥ √p − 1/2; a witness set of that
/// size or smaller would falsify the bound.
fn falsifier_threshold(p: u64) -> usize {
    let mut t = 0usize;
    while !closed_odd_bound_holds(t, p) {
        t += 1;
    }
    t.saturating_sub(1)
}

/// Verify δ_loc(Pal_p) ≥ √p − 3/2. Under `exact_cap` the sweep is
/// exhaustive and also certifies min |S ∪ Odd(S)| ≥ √p − 1/2; above it the
/// report downgrades to "not falsified" after `falsifier_trials` random
/// samples.
pub fn verify_paley_theorem(
    ctx: &PaleyContext,
    exact_cap: usize,
    falsifier_trials: u64,
    seed: u64,
) -> Result<PaleyTheoremReport> {
    let p = ctx.p;
    let bound = (p as f64).sqrt() - 1.5;
    if ctx.graph.n() <= exact_cap {
        let result = locmindeg::delta_loc_exact(&ctx.graph, exact_cap)?;
        let min_closed_odd = result.value + 1;
        Ok(PaleyTheoremReport {
            p,
            bound,
            holds: delta_bound_holds(result.value, p),
            min_closed_odd_bound_holds: closed_odd_bound_holds(min_closed_odd, p),
            verification: PaleyVerification::Verified { delta_loc: result },
        })
    } else {
        let threshold = falsifier_threshold(p);
        let hit = locmindeg::falsifier_sample(&ctx.graph, threshold, falsifier_trials, seed);
        let ok = hit.is_none();
        Ok(PaleyTheoremReport {
            p,
            bound,
            holds: ok,
            min_closed_odd_bound_holds: ok,
            verification: PaleyVerification::NotFalsified {
                threshold,
                trials: falsifier_trials,
            },
        })
    }
}
