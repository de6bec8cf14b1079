//! Brute-force oracles, kept independent of the bit-parallel paths they
//! check: plain adjacency lists, integer counting, and full subset
//! enumeration in counting order.
#![allow(dead_code)] // each test binary uses a different subset

use lcdeg::graph::Graph;

pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Odd(D) by counting neighbors one by one.
pub fn naive_odd(g: &Graph, d: &[usize]) -> Vec<usize> {
    let adj = adjacency_lists(g);
    (0..g.n())
        .filter(|&v| {
            let count = adj[v].iter().filter(|w| d.contains(w)).count();
            count % 2 == 1
        })
        .collect()
}

pub fn naive_closed_odd_size(g: &Graph, d: &[usize]) -> usize {
    let odd = naive_odd(g, d);
    let mut union: Vec<usize> = d.to_vec();
    for v in odd {
        if !union.contains(&v) {
            union.push(v);
        }
    }
    union.len()
}

/// δ_loc by enumerating every nonempty subset as an integer mask.
pub fn naive_delta_loc(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 1 && n <= 20, "oracle is for small graphs");
    let mut best = usize::MAX;
    for mask in 1u32..(1 << n) {
        let d: Vec<usize> = (0..n).filter(|&v| (mask >> v) & 1 == 1).collect();
        best = best.min(naive_closed_odd_size(g, &d));
    }
    best - 1
}

/// Every labeled graph on exactly n vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}
