//! Exact local minimum degree.
//!
//! Three independent routes are provided:
//!
//! * [`delta_loc_exact`] minimizes |D ∪ Odd(D)| over all nonempty subsets D,
//!   enumerated in Gray-code order so each step costs one adjacency-row XOR
//!   and one popcount.
//! * [`delta_loc_bipartite`] restricts D to a single side of a bipartition,
//!   which is enough for bipartite graphs and costs 2^|V1| + 2^|V2| instead
//!   of 2^n.
//! * [`delta_loc_via_orbit`] replays the definition directly: BFS over the
//!   local-complementation orbit of labeled graphs, taking the minimum of
//!   the minimum degrees. This is the cross-oracle the other two are checked
//!   against.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

/// Default cap on n for the full 2^n enumeration.
pub const DEFAULT_EXACT_CAP: usize = 30;
/// Default cap on a single side for one-sided enumeration.
pub const DEFAULT_ONESIDE_CAP: usize = 26;
/// Default bound on explored labeled graphs in the orbit BFS.
pub const DEFAULT_ORBIT_NODE_CAP: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FullEnumeration,
    OneSided,
    Orbit,
}

/// Result of a δ_loc computation, with the witness subset achieving
/// |D ∪ Odd(D)| = value + 1.
#[derive(Debug, Clone, Serialize)]
pub struct DeltaLocResult {
    pub value: usize,
    pub witness: VertexSet,
    pub sets_examined: u64,
    pub method: Method,
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Best {
    size: usize,
    index: u64,
}

impl Best {
    /// Smaller size wins; ties go to the earlier enumeration index.
    fn combine(self, other: Best) -> Best {
        if (other.size, other.index) < (self.size, self.index) {
            other
        } else {
            self
        }
    }
}

/// Minimum of |D ∪ Odd(D)| over all nonempty D drawn from `allowed`,
/// with the Gray-code index of the first minimizer.
fn sweep(g: &Graph, allowed: &[usize]) -> Best {
    let m = allowed.len();
    assert!(m >= 1 && m < 64, "sweep requires 1 <= |allowed| < 64");
    let total = 1u64 << m;

    // Contiguous index ranges are independent: a worker seeds its Gray state
    // at the range start in O(m) and walks forward. The reduction is a total
    // min over all indices, so results do not depend on the partitioning.
    const PAR_MIN_BITS: usize = 22;
    if m <= PAR_MIN_BITS {
        sweep_range(g, allowed, 1, total)
    } else {
        let chunks = (rayon::current_num_threads() * 8).max(8) as u64;
        let step = (total - 1).div_ceil(chunks);
        (0..chunks)
            .into_par_iter()
            .filter_map(|c| {
                let s = 1 + c * step;
                if s >= total {
                    None
                } else {
                    Some(sweep_range(g, allowed, s, (s + step).min(total)))
                }
            })
            .reduce_with(Best::combine)
            .expect("at least one chunk")
    }
}

fn sweep_range(g: &Graph, allowed: &[usize], start: u64, end: u64) -> Best {
    if g.n() <= 64 {
        sweep_range_single(g, allowed, start, end)
    } else {
        sweep_range_multi(g, allowed, start, end)
    }
}

/// Single-word hot loop for graphs on at most 64 vertices.
fn sweep_range_single(g: &Graph, allowed: &[usize], start: u64, end: u64) -> Best {
    let rows: Vec<u64> = allowed.iter().map(|&v| g.row(v).as_word()).collect();
    let vbits: Vec<u64> = allowed.iter().map(|&v| 1u64 << v).collect();

    let mut d = 0u64;
    let mut odd = 0u64;
    let g0 = gray(start);
    for t in 0..allowed.len() {
        if (g0 >> t) & 1 == 1 {
            d ^= vbits[t];
            odd ^= rows[t];
        }
    }
    let mut best = Best {
        size: (d | odd).count_ones() as usize,
        index: start,
    };
    for i in (start + 1)..end {
        let t = i.trailing_zeros() as usize;
        d ^= vbits[t];
        odd ^= rows[t];
        let size = (d | odd).count_ones() as usize;
        if size < best.size {
            best = Best { size, index: i };
        }
    }
    best
}

/// Word-vector fallback for graphs wider than one machine word.
fn sweep_range_multi(g: &Graph, allowed: &[usize], start: u64, end: u64) -> Best {
    let words = g.row(allowed[0]).words().len();
    let rows: Vec<&[u64]> = allowed.iter().map(|&v| g.row(v).words()).collect();

    let mut d = vec![0u64; words];
    let mut odd = vec![0u64; words];
    let g0 = gray(start);
    for t in 0..allowed.len() {
        if (g0 >> t) & 1 == 1 {
            d[allowed[t] / 64] ^= 1u64 << (allowed[t] % 64);
            for (o, r) in odd.iter_mut().zip(rows[t]) {
                *o ^= r;
            }
        }
    }
    let score = |d: &[u64], odd: &[u64]| -> usize {
        d.iter()
            .zip(odd)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    };
    let mut best = Best {
        size: score(&d, &odd),
        index: start,
    };
    for i in (start + 1)..end {
        let t = i.trailing_zeros() as usize;
        d[allowed[t] / 64] ^= 1u64 << (allowed[t] % 64);
        for (o, r) in odd.iter_mut().zip(rows[t]) {
            *o ^= r;
        }
        let size = score(&d, &odd);
        if size < best.size {
            best = Best { size, index: i };
        }
    }
    best
}

fn witness_from_index(n: usize, allowed: &[usize], index: u64) -> VertexSet {
    let bits = gray(index);
    VertexSet::from_indices(
        n,
        (0..allowed.len()).filter(|&t| (bits >> t) & 1 == 1).map(|t| allowed[t]),
    )
    .expect("allowed vertices are in range")
}

/// Minimum of |D ∪ Odd(D)| over nonempty D confined to `allowed`, with the
/// first minimizing subset in Gray-code enumeration order.
pub fn restricted_min_closed_odd(
    g: &Graph,
    allowed: &VertexSet,
    cap: usize,
) -> Result<(usize, VertexSet, u64)> {
    if allowed.universe() != g.n() {
        return Err(Error::UniverseMismatch {
            set_len: allowed.universe(),
            n: g.n(),
        });
    }
    if allowed.is_empty() {
        return Err(Error::EmptySet);
    }
    let list = allowed.to_vec();
    // the Gray index lives in a u64, so 63 is a hard ceiling on any cap
    if list.len() > cap.min(63) {
        return Err(Error::SearchTooLarge {
            n: list.len(),
            cap: cap.min(63),
        });
    }
    let best = sweep(g, &list);
    let witness = witness_from_index(g.n(), &list, best.index);
    Ok((best.size, witness, (1u64 << list.len()) - 1))
}

/// δ_loc by full enumeration of all 2^n − 1 nonempty subsets.
pub fn delta_loc_exact(g: &Graph, cap: usize) -> Result<DeltaLocResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > cap.min(63) {
        return Err(Error::SearchTooLarge {
            n: g.n(),
            cap: cap.min(63),
        });
    }
    let allowed: Vec<usize> = (0..g.n()).collect();
    let best = sweep(g, &allowed);
    Ok(DeltaLocResult {
        value: best.size - 1,
        witness: witness_from_index(g.n(), &allowed, best.index),
        sets_examined: (1u64 << g.n()) - 1,
        method: Method::FullEnumeration,
    })
}

/// δ_loc of a bipartite graph by one-sided enumeration: the minimum over
/// nonempty D confined to either side equals the unrestricted minimum.
/// The witness is the first minimizer, scanning the left side before the
/// right.
pub fn delta_loc_bipartite(g: &Graph, side_cap: usize) -> Result<DeltaLocResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (left, right) = match g.bipartition() {
        Some((l, r)) => (l.clone(), r.clone()),
        None => g.compute_bipartition()?.ok_or(Error::NotBipartite)?,
    };
    let mut best: Option<(usize, VertexSet)> = None;
    let mut examined = 0u64;
    for side in [&left, &right] {
        if side.is_empty() {
            continue;
        }
        if side.len() > side_cap {
            return Err(Error::SearchTooLarge {
                n: side.len(),
                cap: side_cap,
            });
        }
        let (size, witness, count) = restricted_min_closed_odd(g, side, side_cap)?;
        examined += count;
        if best.as_ref().is_none_or(|(s, _)| size < *s) {
            best = Some((size, witness));
        }
    }
    let (size, witness) = best.expect("a nonempty graph has a nonempty side");
    Ok(DeltaLocResult {
        value: size - 1,
        witness,
        sets_examined: examined,
        method: Method::OneSided,
    })
}

/// A δ_loc bound obtained from the orbit definition; `exact` is false when
/// the BFS hit its node cap and the value is only an upper bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OrbitBound {
    pub value: usize,
    pub exact: bool,
}

/// Report of a BFS over the local-complementation orbit of labeled graphs.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    /// Distinct labeled graphs reached (including the start graph).
    pub orbit_size: usize,
    pub min_degree_over_orbit: usize,
    /// Vertices to complement, in order, to reach a graph attaining
    /// `min_degree_over_orbit` from the start graph.
    pub generator_sequence: Vec<usize>,
    /// True when the node cap stopped the search early.
    pub truncated: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum OrbitKey {
    Small(u128),
    Big(Box<[u8]>),
}

fn orbit_key(g: &Graph) -> OrbitKey {
    let n = g.n();
    if n <= 16 {
        let mut bits: u128 = 0;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if g.has_edge(u, v) {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        OrbitKey::Small(bits)
    } else {
        OrbitKey::Big(g.adjacency_bytes().into_boxed_slice())
    }
}

fn graph_from_key(key: &OrbitKey, n: usize) -> Graph {
    match key {
        OrbitKey::Small(bits) => {
            let mut k = 0;
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if (bits >> k) & 1 == 1 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("key encodes a valid graph")
        }
        OrbitKey::Big(bytes) => {
            let words_per_row = n.div_ceil(64).max(1);
            let stride = words_per_row * 8;
            Graph::from_fn(n, |u, v| {
                let byte = bytes[u * stride + v / 8];
                (byte >> (v % 8)) & 1 == 1
            })
            .expect("key encodes a valid graph")
        }
    }
}

struct OrbitNode {
    key: OrbitKey,
    parent: u32,
    gen: u16,
}

const NO_PARENT: u32 = u32::MAX;

/// BFS over `u -> G*u` from `g`, deduplicating labeled graphs by their
/// serialized adjacency. Exploration stops once `node_cap` graphs have been
/// discovered; the report is then flagged truncated.
pub fn lc_orbit(g: &Graph, node_cap: usize) -> Result<OrbitReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n();
    let root_key = orbit_key(g);
    let mut nodes: Vec<OrbitNode> = vec![OrbitNode {
        key: root_key.clone(),
        parent: NO_PARENT,
        gen: 0,
    }];
    let mut index: HashMap<OrbitKey, u32> = HashMap::new();
    index.insert(root_key, 0);

    let mut best_degree = g.min_degree()?;
    let mut best_node = 0u32;
    let mut truncated = false;

    let mut queue = VecDeque::new();
    queue.push_back(0u32);
    'bfs: while let Some(idx) = queue.pop_front() {
        let graph = graph_from_key(&nodes[idx as usize].key, n);
        for u in 0..n {
            let child = graph.local_complement(u)?;
            let key = orbit_key(&child);
            if index.contains_key(&key) {
                continue;
            }
            if nodes.len() >= node_cap {
                truncated = true;
                break 'bfs;
            }
            let child_idx = nodes.len() as u32;
            index.insert(key.clone(), child_idx);
            nodes.push(OrbitNode {
                key,
                parent: idx,
                gen: u as u16,
            });
            queue.push_back(child_idx);
            let degree = child.min_degree()?;
            if degree < best_degree {
                best_degree = degree;
                best_node = child_idx;
            }
        }
    }

    let mut generator_sequence = Vec::new();
    let mut at = best_node;
    while nodes[at as usize].parent != NO_PARENT {
        generator_sequence.push(nodes[at as usize].gen as usize);
        at = nodes[at as usize].parent;
    }
    generator_sequence.reverse();

    Ok(OrbitReport {
        orbit_size: nodes.len(),
        min_degree_over_orbit: best_degree,
        generator_sequence,
        truncated,
    })
}

/// δ_loc straight from the definition: minimum min-degree over the orbit.
pub fn delta_loc_via_orbit(g: &Graph, node_cap: usize) -> Result<OrbitBound> {
    let report = lc_orbit(g, node_cap)?;
    Ok(OrbitBound {
        value: report.min_degree_over_orbit,
        exact: !report.truncated,
    })
}

/// Randomized search for a nonempty D with |D ∪ Odd(D)| at or below
/// `threshold`. Subset sizes mix a geometric (p = 1/2) draw with a uniform
/// one; the members are then a uniform size-`s` subset. Deterministic under
/// a fixed seed.
pub fn falsifier_sample(
    g: &Graph,
    threshold: usize,
    trials: u64,
    seed: u64,
) -> Option<VertexSet> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..trials {
        let size = if rng.random_bool(0.5) {
            let mut s = 1;
            while s < n && rng.random_bool(0.5) {
                s += 1;
            }
            s
        } else {
            rng.random_range(1..=n)
        };
        for i in 0..size {
            let j = rng.random_range(i..n);
            perm.swap(i, j);
        }
        let d = VertexSet::from_indices(n, perm[..size].iter().copied())
            .expect("sampled vertices are in range");
        let reached = g
            .closed_odd_size(&d)
            .expect("sampled set is nonempty and sized to g");
        if reached <= threshold {
            return Some(d);
        }
    }
    None
}
