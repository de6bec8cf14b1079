//! Core graph representation and the neighborhood primitives.
//!
//! Graphs are simple, undirected and loop-free, with adjacency stored as one
//! bit row per vertex. `Odd(D)` — the set of vertices with an odd number of
//! neighbors inside `D` — is the workhorse of the whole crate: its indicator
//! is the GF(2) matrix-vector product of the adjacency matrix with the
//! indicator of `D`, so it folds into one row-XOR per member of `D`.
//!
//! Values are immutable after construction; every operation is pure.

use crate::bits::BitRow;
use crate::error::{Error, Result};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Hard limit on graph order. Widths up to 64 use the single-word fast
/// paths; anything up to this limit runs on the multi-word fallback.
pub const MAX_VERTICES: usize = 512;

/// A subset of the vertices of a graph on a fixed number of vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: BitRow,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: BitRow::zeros(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = BitRow::zeros(universe);
        bits.complement();
        VertexSet { bits }
    }

    pub fn singleton(universe: usize, v: usize) -> Result<Self> {
        Self::from_indices(universe, [v])
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, vs: I) -> Result<Self> {
        let mut bits = BitRow::zeros(universe);
        for v in vs {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            bits.set(v, true);
        }
        Ok(VertexSet { bits })
    }

    pub(crate) fn from_bits(bits: BitRow) -> Self {
        VertexSet { bits }
    }

    /// Number of vertices of the owning graph (not the set's cardinality).
    #[inline]
    pub fn universe(&self) -> usize {
        self.bits.nbits()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe() && self.bits.get(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.set(v, true);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Set operations panic on mismatched universes; combining sets from
    /// different graphs is a programming error, not an input error.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits.or_assign(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits.and_assign(&other.bits);
        VertexSet { bits }
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe(), other.universe());
        let mut bits = other.bits.clone();
        bits.complement();
        bits.and_assign(&self.bits);
        VertexSet { bits }
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.complement();
        VertexSet { bits }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe(), other.universe());
        !self.bits.intersects(&other.bits)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<BitRow>,
    bipartition: Option<(VertexSet, VertexSet)>,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: (0..n).map(|_| BitRow::zeros(n)).collect(),
            bipartition: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            g.rows[u].set(v, true);
            g.rows[v].set(u, true);
        }
        Ok(g)
    }

    /// Build from an edge predicate evaluated on every pair `u < v`.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(n: usize, mut f: F) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                if f(u, v) {
                    g.rows[u].set(v, true);
                    g.rows[v].set(u, true);
                }
            }
        }
        Ok(g)
    }

    /// Attach a known bipartition, validating it.
    pub fn with_bipartition(mut self, left: VertexSet, right: VertexSet) -> Result<Self> {
        if left.universe() != self.n || right.universe() != self.n {
            return Err(Error::UniverseMismatch {
                set_len: left.universe().max(right.universe()),
                n: self.n,
            });
        }
        if !left.is_disjoint(&right) {
            return Err(Error::InvalidBipartition {
                reason: "sides overlap".into(),
            });
        }
        if left.union(&right).len() != self.n {
            return Err(Error::InvalidBipartition {
                reason: "sides do not cover all vertices".into(),
            });
        }
        for (u, v) in self.edges() {
            if left.contains(u) == left.contains(v) {
                return Err(Error::InvalidBipartition {
                    reason: format!("edge ({u},{v}) joins vertices on the same side"),
                });
            }
        }
        self.bipartition = Some((left, right));
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        }
    }

    fn check_set(&self, d: &VertexSet) -> Result<()> {
        if d.universe() == self.n {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                set_len: d.universe(),
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.rows[u].get(v)
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones()).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub(crate) fn row(&self, u: usize) -> &BitRow {
        &self.rows[u]
    }

    /// The stored bipartition, if one was attached at construction.
    pub fn bipartition(&self) -> Option<&(VertexSet, VertexSet)> {
        self.bipartition.as_ref()
    }

    /// N(u) as a vertex set; `u` itself is never a member.
    pub fn neighbors(&self, u: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        Ok(VertexSet::from_bits(self.rows[u].clone()))
    }

    /// Odd(D): vertices with an odd number of neighbors in `d`. Members of
    /// `d` themselves qualify when their neighbor count in `d` is odd.
    pub fn odd_neighborhood(&self, d: &VertexSet) -> Result<VertexSet> {
        self.check_set(d)?;
        let mut acc = BitRow::zeros(self.n);
        for v in d.iter() {
            acc.xor_assign(&self.rows[v]);
        }
        Ok(VertexSet::from_bits(acc))
    }

    /// Even(D): complement of Odd(D) within the vertex set.
    pub fn even_neighborhood(&self, d: &VertexSet) -> Result<VertexSet> {
        let mut odd = self.odd_neighborhood(d)?;
        odd.bits.complement();
        Ok(odd)
    }

    /// |D ∪ Odd(D)| for nonempty `d`.
    pub fn closed_odd_size(&self, d: &VertexSet) -> Result<usize> {
        if d.is_empty() {
            return Err(Error::EmptySet);
        }
        let odd = self.odd_neighborhood(d)?;
        Ok(d.bits.or_count_ones(&odd.bits))
    }

    /// Toggle every pair of distinct neighbors of `u`; everything else,
    /// including pairs involving `u`, is unchanged.
    pub fn local_complement(&self, u: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        let nb = self.rows[u].clone();
        let mut rows = self.rows.clone();
        for a in nb.ones() {
            rows[a].xor_assign(&nb);
            rows[a].set(a, false); // keep the diagonal zero
        }
        // A local complementation can break bipartiteness, so any stored
        // bipartition does not carry over.
        Ok(Graph {
            n: self.n,
            rows,
            bipartition: None,
        })
    }

    pub fn min_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.rows.iter().map(|r| r.count_ones()).min().unwrap())
    }

    /// Two-coloring by BFS: `Some((left, right))` when bipartite, `None`
    /// otherwise. Vertices of each component are rooted at its smallest
    /// vertex, which lands on the left side.
    pub fn compute_bipartition(&self) -> Result<Option<(VertexSet, VertexSet)>> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.rows[u].ones() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return Ok(None),
                        Some(_) => {}
                    }
                }
            }
        }
        let left = VertexSet::from_bits(BitRow::from_indices(
            self.n,
            (0..self.n).filter(|&v| color[v] == Some(false)),
        ));
        let right = left.complement();
        Ok(Some((left, right)))
    }

    /// Adjacency serialized to a canonical byte string (labeled graphs with
    /// identical adjacency produce identical bytes).
    pub fn adjacency_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 * self.rows.len() * self.rows.first().map_or(1, |r| r.words().len()));
        for row in &self.rows {
            for w in row.words() {
                out.extend_from_slice(&w.to_le_bytes());
            }
        }
        out
    }
}

/// Equality and hashing are labeled: bit-identical adjacency, ignoring any
/// stored bipartition metadata.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for row in &self.rows {
            row.words().hash(state);
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}
