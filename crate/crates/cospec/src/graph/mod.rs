//! Simple undirected graphs on 0-based vertex labels, stored as packed
//! adjacency bitsets, plus permutations, graph6 I/O, named generators,
//! exhaustive small-graph enumeration, and isomorphism search.

mod enumerate;
mod generators;
mod graph6;
mod iso;

pub use enumerate::{enumerate_nonisomorphic, EnumerateError, MAX_ENUMERATION_N};
pub use generators::{generate, GeneratorError, GeneratorSpec};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, MAX_GRAPH6_VERTICES};
pub use iso::{are_isomorphic, nontrivial_automorphism};

use crate::linalg::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Simple undirected graph: no loops, no multi-edges. Adjacency is a packed
/// bit matrix, one row of `stride` 64-bit words per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64);
        Graph { n, stride, bits: vec![0; n * stride] }
    }

    /// Builds a graph from an edge list; panics on loops or out-of-range
    /// endpoints (programming errors, not data errors).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        (total as usize) / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "loops are not allowed");
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
        self.bits[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn degree(&self, u: usize) -> usize {
        let row = &self.bits[u * self.stride..(u + 1) * self.stride];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[u * self.stride..(u + 1) * self.stride];
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi * 64;
            BitIter { word }.map(move |b| base + b)
        })
    }

    /// All edges as ordered pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// If every vertex has the same degree, returns it.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == d).then_some(d)
    }

    /// Complement within the simple-graph universe (diagonal stays empty).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; the right operand's vertices are shifted up by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Relabels along `p`: the result has edge (p(u), p(v)) exactly when this
    /// graph has edge (u, v).
    pub fn permute(&self, p: &Permutation) -> Graph {
        assert_eq!(p.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(p.apply(u), p.apply(v));
        }
        g
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if self.has_edge(i, j) { BigInt::one() } else { BigInt::zero() }
        })
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut frontier = vec![src];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.neighbors(u) {
                    if dist[v].is_none() {
                        dist[v] = Some(d);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_witness().is_none()
    }

    /// For a disconnected graph, returns a pair of vertices in different
    /// components (the first vertex and the least vertex unreachable from it).
    pub fn disconnected_witness(&self) -> Option<(usize, usize)> {
        if self.n == 0 {
            return None;
        }
        let dist = self.bfs_distances(0);
        dist.iter().position(|d| d.is_none()).map(|v| (0, v))
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationError {
    #[error("image {value} out of range for a permutation of {len} points")]
    OutOfRange { value: usize, len: usize },
    #[error("image {value} repeats; a permutation must be a bijection")]
    Repeated { value: usize },
}

/// Permutation of {0, …, n-1}, stored as the image list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(PermutationError::OutOfRange { value: v, len: n });
            }
            if seen[v] {
                return Err(PermutationError::Repeated { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, u: usize) -> usize {
        self.0[u]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `(self.compose(other)).apply(u) == self.apply(other.apply(u))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&u| self.0[u]).collect())
    }

    /// Uniform random permutation (Fisher–Yates). Used only by randomized
    /// property checks, never by verdict logic.
    pub fn random<R: rand::Rng>(n: usize, rng: &mut R) -> Permutation {
        let mut v: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            v.swap(i, j);
        }
        Permutation(v)
    }

    /// The permutation matrix P with P[p(u)][u] = 1, so that relabeling a
    /// graph by p conjugates its adjacency matrix: A' = P A P^T.
    pub fn matrix(&self) -> IntMatrix {
        let n = self.0.len();
        IntMatrix::from_fn(n, n, |i, j| {
            if self.0[j] == i { BigInt::one() } else { BigInt::zero() }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_basics() {
        let mut g = Graph::empty(4);
        assert_eq!(g.edge_count(), 0);
        g.add_edge(0, 1);
        g.add_edge(2, 1);
        assert!(g.has_edge(1, 0));
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn large_vertex_counts_cross_word_boundaries() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(63, 64);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(64, 63));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(k3.complement(), Graph::empty(3));
        assert_eq!(Graph::empty(3).complement(), k3);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.complement(), Graph::from_edges(3, &[(0, 2)]));
        assert_eq!(p3.complement().complement(), p3);
    }

    #[test]
    fn disjoint_union_shifts_right_operand() {
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn permute_relabels() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        let h = p3.permute(&p);
        // Edge (0,1) -> (2,0); edge (1,2) -> (0,1).
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
        // Conjugation by the permutation matrix matches relabeling.
        let pm = p.matrix();
        let conj = pm
            .mul(&p3.adjacency_matrix())
            .unwrap()
            .mul(&pm.transpose())
            .unwrap();
        assert_eq!(conj, h.adjacency_matrix());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 0, 2]).is_ok());
        assert_eq!(
            Permutation::new(vec![1, 3, 2]),
            Err(PermutationError::OutOfRange { value: 3, len: 3 })
        );
        assert_eq!(
            Permutation::new(vec![1, 1, 2]),
            Err(PermutationError::Repeated { value: 1 })
        );
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn connectivity_witness() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(c4.is_connected());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(two.disconnected_witness(), Some((0, 2)));
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn bfs_distances_on_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            p4.bfs_distances(0),
            vec![Some(0), Some(1), Some(2), Some(3)]
        );
    }
}
