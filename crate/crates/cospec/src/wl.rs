//! Color refinement over vertices and over ordered pairs, the histogram
//! equivalence tests built on them, and the 0/1 basis of the stable pair
//! partition (the coherent closure).
//!
//! Color ids are canonical: every round sorts the exact signatures and ranks
//! them, so isomorphic graphs produce identical histograms and refinement
//! never depends on hashing.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::linalg::IntMatrix;

/// Stable vertex coloring produced by 1-dimensional refinement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub class_count: usize,
    /// Signature-recomputation passes performed, including the final
    /// non-refining pass that certifies stability.
    pub rounds: usize,
}

impl Coloring {
    /// (color id, member count) for every realized color, ascending by id.
    pub fn histogram(&self) -> Vec<(usize, usize)> {
        histogram_of(&self.colors)
    }
}

/// Stable coloring of ordered vertex pairs produced by 2-dimensional
/// refinement; entry (u,v) lives at index `u*n + v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairColoring {
    pub n: usize,
    pub colors: Vec<usize>,
    pub class_count: usize,
    pub rounds: usize,
}

impl PairColoring {
    pub fn color(&self, u: usize, v: usize) -> usize {
        self.colors[u * self.n + v]
    }

    pub fn histogram(&self) -> Vec<(usize, usize)> {
        histogram_of(&self.colors)
    }
}

/// Verdict of a joint-refinement equivalence test, with the per-side stable
/// histograms that decided it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub left_histogram: Vec<(usize, usize)>,
    pub right_histogram: Vec<(usize, usize)>,
}

fn histogram_of(colors: &[usize]) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

/// Replaces arbitrary `Ord` signatures by their ranks among the distinct
/// realized signatures: the canonical dense ids.
fn canonical_ranks<S: Ord + Clone>(signatures: &[S]) -> (Vec<usize>, usize) {
    let mut distinct: Vec<S> = signatures.to_vec();
    distinct.sort();
    distinct.dedup();
    let ids = signatures
        .iter()
        .map(|s| distinct.binary_search(s).expect("signature was just inserted"))
        .collect();
    (ids, distinct.len())
}

/// 1-dimensional refinement from the uniform coloring: each round replaces a
/// vertex's color by (old color, sorted multiset of neighbor colors) and
/// canonicalizes, until the partition stops refining.
pub fn color_refinement(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let mut class_count = usize::from(n > 0);
    let mut rounds = 0;
    loop {
        if n == 0 {
            break;
        }
        rounds += 1;
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let (new_colors, new_count) = canonical_ranks(&signatures);
        let stable = new_count == class_count;
        colors = new_colors;
        class_count = new_count;
        if stable {
            break;
        }
        assert!(rounds <= n * n, "vertex refinement failed to stabilize");
    }
    Coloring { colors, class_count, rounds }
}

/// 2-dimensional refinement over ordered pairs. Initial colors distinguish
/// diagonal, adjacent, and non-adjacent pairs; each round replaces the color
/// of (u,v) by (old color, sorted multiset over w of (color(u,w), color(w,v)))
/// and canonicalizes, until stable.
pub fn wl2_refinement(g: &Graph) -> PairColoring {
    let n = g.vertex_count();
    let init: Vec<u8> = (0..n * n)
        .map(|i| {
            let (u, v) = (i / n, i % n);
            if u == v {
                0
            } else if g.has_edge(u, v) {
                1
            } else {
                2
            }
        })
        .collect();
    let (mut colors, mut class_count) = canonical_ranks(&init);
    let mut rounds = 0;
    loop {
        if n == 0 {
            break;
        }
        rounds += 1;
        let signatures: Vec<(usize, Vec<(usize, usize)>)> = (0..n * n)
            .map(|i| {
                let (u, v) = (i / n, i % n);
                let mut around: Vec<(usize, usize)> =
                    (0..n).map(|w| (colors[u * n + w], colors[w * n + v])).collect();
                around.sort_unstable();
                (colors[i], around)
            })
            .collect();
        let (new_colors, new_count) = canonical_ranks(&signatures);
        let stable = new_count == class_count;
        colors = new_colors;
        class_count = new_count;
        if stable {
            break;
        }
        assert!(rounds <= n * n, "pair refinement failed to stabilize");
    }
    PairColoring { n, colors, class_count, rounds }
}

fn side_histogram(colors: &[usize], keep: impl Fn(usize) -> bool) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &c) in colors.iter().enumerate() {
        if keep(i) {
            *counts.entry(c).or_insert(0) += 1;
        }
    }
    counts.into_iter().collect()
}

/// Joint 1-dimensional refinement on the disjoint union; the sides are
/// equivalent for two-variable counting logic iff their stable histograms
/// coincide.
pub fn c2_equivalence(g: &Graph, h: &Graph) -> EquivalenceReport {
    let ng = g.vertex_count();
    let joint = color_refinement(&g.disjoint_union(h));
    let left = side_histogram(&joint.colors, |v| v < ng);
    let right = side_histogram(&joint.colors, |v| v >= ng);
    EquivalenceReport { equivalent: left == right, left_histogram: left, right_histogram: right }
}

pub fn c2_equivalent(g: &Graph, h: &Graph) -> bool {
    c2_equivalence(g, h).equivalent
}

/// Joint 2-dimensional refinement on the disjoint union (cross pairs refine
/// like any other non-adjacent pair); the sides are equivalent for
/// three-variable counting logic iff the histograms over within-side pairs
/// coincide.
pub fn c3_equivalence(g: &Graph, h: &Graph) -> EquivalenceReport {
    let ng = g.vertex_count();
    let n = ng + h.vertex_count();
    let joint = wl2_refinement(&g.disjoint_union(h));
    let left = side_histogram(&joint.colors, |i| i / n < ng && i % n < ng);
    let right = side_histogram(&joint.colors, |i| i / n >= ng && i % n >= ng);
    EquivalenceReport { equivalent: left == right, left_histogram: left, right_histogram: right }
}

pub fn c3_equivalent(g: &Graph, h: &Graph) -> bool {
    c3_equivalence(g, h).equivalent
}

/// The 0/1 matrices of the stable pair partition, ordered by color id. This
/// is the unique basis of the smallest coherent algebra containing the
/// adjacency algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherentBasis {
    pub matrices: Vec<IntMatrix>,
}

pub fn coherent_closure_basis(g: &Graph) -> CoherentBasis {
    let pc = wl2_refinement(g);
    let n = pc.n;
    let mut matrices = vec![IntMatrix::zeros(n, n); pc.class_count];
    for u in 0..n {
        for v in 0..n {
            matrices[pc.color(u, v)].set(u, v, 1.into());
        }
    }
    CoherentBasis { matrices }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GeneratorSpec};

    fn cycle(n: usize) -> Graph {
        generate(&GeneratorSpec::Cycle(n)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generate(&GeneratorSpec::Complete(n)).unwrap()
    }

    fn path(n: usize) -> Graph {
        generate(&GeneratorSpec::Path(n)).unwrap()
    }

    #[test]
    fn vertex_refinement_examples() {
        let c = color_refinement(&cycle(6));
        assert_eq!(c.class_count, 1);
        assert_eq!(c.histogram(), vec![(0, 6)]);

        let c = color_refinement(&path(3));
        assert_eq!(c.class_count, 2);
        let mut counts: Vec<usize> = c.histogram().iter().map(|&(_, k)| k).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![1, 2]);
        // Endpoints share a color distinct from the midpoint's.
        assert_eq!(c.colors[0], c.colors[2]);
        assert_ne!(c.colors[0], c.colors[1]);

        assert_eq!(color_refinement(&Graph::empty(1)).class_count, 1);
        assert_eq!(color_refinement(&Graph::empty(0)).class_count, 0);
    }

    #[test]
    fn c2_examples() {
        let k3 = complete(3);
        let two_triangles = k3.disjoint_union(&k3);
        assert!(c2_equivalent(&two_triangles, &cycle(6)));
        assert!(!c2_equivalent(&k3, &path(3)));
        let g = path(5);
        assert!(c2_equivalent(&g, &g));
    }

    #[test]
    fn c2_report_carries_histograms() {
        let r = c2_equivalence(&complete(3), &path(3));
        assert!(!r.equivalent);
        assert_eq!(r.left_histogram.iter().map(|&(_, k)| k).sum::<usize>(), 3);
        assert_eq!(r.right_histogram.iter().map(|&(_, k)| k).sum::<usize>(), 3);
    }

    #[test]
    fn pair_refinement_examples() {
        assert_eq!(wl2_refinement(&complete(4)).class_count, 2);

        // Hand-run on the 9 pairs of the 3-path: the stable classes are
        // {00,22}, {11}, {01,21}, {10,12}, {02,20}.
        let pc = wl2_refinement(&path(3));
        assert_eq!(pc.class_count, 5);
        assert_eq!(pc.color(0, 0), pc.color(2, 2));
        assert_eq!(pc.color(0, 1), pc.color(2, 1));
        assert_eq!(pc.color(1, 0), pc.color(1, 2));
        assert_eq!(pc.color(0, 2), pc.color(2, 0));
        assert_ne!(pc.color(0, 0), pc.color(1, 1));
        assert_ne!(pc.color(0, 1), pc.color(1, 0));

        // Distance-partition classes of the 3-cube.
        let cube = generate(&GeneratorSpec::Cube).unwrap();
        let pc = wl2_refinement(&cube);
        assert_eq!(pc.class_count, 4);
        for u in 0..8 {
            let dist = cube.bfs_distances(u);
            for v in 0..8 {
                let pd = dist[v].unwrap();
                let qd = cube.bfs_distances(0)[u ^ v].unwrap();
                assert_eq!(pd, qd);
                // Pairs at equal distance share a class and conversely.
                assert_eq!(
                    pc.color(u, v),
                    pc.color(0, u ^ v),
                    "distance class mismatch at ({u},{v})"
                );
            }
        }
    }

    #[test]
    fn c3_examples() {
        let k3 = complete(3);
        let two_triangles = k3.disjoint_union(&k3);
        assert!(!c3_equivalent(&two_triangles, &cycle(6)));
        let g = path(4);
        assert!(c3_equivalent(&g, &g));
    }

    #[test]
    fn coherent_basis_examples() {
        let b = coherent_closure_basis(&complete(3));
        assert_eq!(b.matrices.len(), 2);
        let i = IntMatrix::identity(3);
        let j = IntMatrix::all_ones(3);
        assert!(b.matrices.contains(&i));
        assert!(b.matrices.contains(&j.sub(&i)));

        let petersen = generate(&GeneratorSpec::Petersen).unwrap();
        let b = coherent_closure_basis(&petersen);
        assert_eq!(b.matrices.len(), 3);
        let a = petersen.adjacency_matrix();
        let i = IntMatrix::identity(10);
        let j = IntMatrix::all_ones(10);
        assert!(b.matrices.contains(&i));
        assert!(b.matrices.contains(&a));
        assert!(b.matrices.contains(&j.sub(&i).sub(&a)));

        let b = coherent_closure_basis(&Graph::empty(1));
        assert_eq!(b.matrices, vec![IntMatrix::identity(1)]);
    }

    #[test]
    fn basis_axioms_on_small_graphs() {
        for g in [path(4), cycle(5), complete(4).complement()] {
            let n = g.vertex_count();
            let b = coherent_closure_basis(&g);
            let mut sum = IntMatrix::zeros(n, n);
            for m in &b.matrices {
                sum = sum.add(m);
            }
            assert_eq!(sum, IntMatrix::all_ones(n));
            // Transpose-closed.
            for m in &b.matrices {
                assert!(b.matrices.contains(&m.transpose()));
            }
            // Diagonal classes sum to the identity.
            let mut diag_sum = IntMatrix::zeros(n, n);
            for m in &b.matrices {
                if (0..n).any(|u| m.get(u, u) == &num_bigint::BigInt::from(1)) {
                    diag_sum = diag_sum.add(m);
                }
            }
            assert_eq!(diag_sum, IntMatrix::identity(n));
        }
    }
}
