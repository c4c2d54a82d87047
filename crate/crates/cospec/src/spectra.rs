//! Spectral and walk-based graph equivalences: cospectrality, generalized
//! cospectrality (equal char polys of graphs and of complements), walk
//! counts, walk equivalence, walk matrices, and the isomorphism
//! reconstruction available for controllable graphs.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{Graph, Permutation};
use crate::linalg::{IntMatrix, IntPoly, RatMatrix};

/// The pair of characteristic polynomials that determines det(xI − yJ − A)
/// for every y: the polynomial is affine in y because J has rank one, so the
/// y = 0 data plus the complement data pin it down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedSpectrum {
    pub phi: IntPoly,
    pub phi_complement: IntPoly,
}

fn adjacency_char_poly(g: &Graph) -> IntPoly {
    g.adjacency_matrix().char_poly().expect("adjacency matrices are square")
}

pub fn generalized_spectrum(g: &Graph) -> GeneralizedSpectrum {
    GeneralizedSpectrum {
        phi: adjacency_char_poly(g),
        phi_complement: adjacency_char_poly(&g.complement()),
    }
}

/// True iff the adjacency characteristic polynomials agree exactly.
pub fn cospectral(g: &Graph, h: &Graph) -> bool {
    adjacency_char_poly(g) == adjacency_char_poly(h)
}

/// True iff the graphs and their complements are both cospectral; equivalent
/// to equality of det(xI − yJ − A) as bivariate polynomials.
pub fn generalized_cospectral(g: &Graph, h: &Graph) -> bool {
    cospectral(g, h) && cospectral(&g.complement(), &h.complement())
}

/// det(xI − yJ − A) at a fixed integer y, as a polynomial in x.
pub fn gen_char_poly_at(g: &Graph, y: i64) -> IntPoly {
    let n = g.vertex_count();
    let mut m = g.adjacency_matrix();
    let yv = BigInt::from(y);
    for u in 0..n {
        for v in 0..n {
            let e = m.get(u, v) + &yv;
            m.set(u, v, e);
        }
    }
    m.char_poly().expect("adjacency matrices are square")
}

/// Number of closed walks of length `len`: tr(A^len).
pub fn closed_walks(g: &Graph, len: usize) -> BigInt {
    g.adjacency_matrix().pow(len).expect("adjacency matrices are square").trace()
}

/// Number of all walks of length `len`: 𝟙ᵀ A^len 𝟙.
pub fn total_walks(g: &Graph, len: usize) -> BigInt {
    let n = g.vertex_count();
    let mut v = vec![BigInt::one(); n];
    let a = g.adjacency_matrix();
    for _ in 0..len {
        v = a.mul_vec(&v);
    }
    v.into_iter().sum()
}

/// True iff the total-walk counts agree for every length. Checking lengths
/// 0..2·max(n) suffices: each sequence 𝟙ᵀA^ℓ𝟙 satisfies the order-≤n linear
/// recurrence given by its characteristic polynomial (Cayley–Hamilton), so
/// both generating functions are rational with denominator degree ≤ n, and
/// two such series that agree through order 2n−1 are identical.
pub fn walk_equivalent(g: &Graph, h: &Graph) -> bool {
    let bound = 2 * g.vertex_count().max(h.vertex_count());
    let walks = |g: &Graph| -> Vec<BigInt> {
        let a = g.adjacency_matrix();
        let mut v = vec![BigInt::one(); g.vertex_count()];
        let mut out = Vec::with_capacity(bound);
        for _ in 0..bound {
            out.push(v.iter().sum());
            v = a.mul_vec(&v);
        }
        out
    };
    walks(g) == walks(h)
}

/// The matrix (𝟙 A𝟙 ⋯ A^{n−1}𝟙) whose invertibility defines controllability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkMatrix {
    pub n: usize,
    pub matrix: IntMatrix,
}

pub fn walk_matrix(g: &Graph) -> WalkMatrix {
    let n = g.vertex_count();
    let a = g.adjacency_matrix();
    let mut m = IntMatrix::zeros(n, n);
    let mut col = vec![BigInt::one(); n];
    for l in 0..n {
        for u in 0..n {
            m.set(u, l, col[u].clone());
        }
        if l + 1 < n {
            col = a.mul_vec(&col);
        }
    }
    WalkMatrix { n, matrix: m }
}

/// True iff the walk matrix is invertible (nonzero exact determinant).
pub fn is_controllable(g: &Graph) -> bool {
    !walk_matrix(g).matrix.det().expect("walk matrices are square").is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectraError {
    #[error("graphs have different vertex counts ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("isomorphism reconstruction requires controllable graphs (left controllable: {left}, right controllable: {right})")]
    NotControllable { left: bool, right: bool },
}

/// Result of the walk-matrix isomorphism reconstruction.
#[derive(Debug, Clone, PartialEq)]
pub enum ControllableIsoOutcome {
    Isomorphic(Permutation),
    /// The candidate matrix W_g·W_h⁻¹ failed the permutation or conjugation
    /// check; it is carried for diagnostics.
    NotIsomorphic { q: RatMatrix },
}

/// Decides isomorphism of two controllable graphs from walk matrices alone:
/// any isomorphism P A_g Pᵀ = A_h maps walk vectors to walk vectors, forcing
/// Pᵀ = W_g·W_h⁻¹. The candidate is never trusted: it must be a permutation
/// matrix Q with Qᵀ A_g Q = A_h, otherwise the graphs are not isomorphic.
pub fn controllable_iso(g: &Graph, h: &Graph) -> Result<ControllableIsoOutcome, SpectraError> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    if ng != nh {
        return Err(SpectraError::SizeMismatch { left: ng, right: nh });
    }
    let (cg, ch) = (is_controllable(g), is_controllable(h));
    if !(cg && ch) {
        return Err(SpectraError::NotControllable { left: cg, right: ch });
    }
    let wh = walk_matrix(h).matrix.to_rational();
    let inv = wh.inverse().expect("controllable walk matrix is invertible");
    let q = walk_matrix(g).matrix.to_rational().mul(&inv).expect("square matrices conform");
    match q.as_permutation() {
        // Row u of Q holds its 1 in column p(u); verify the conjugation
        // Qᵀ A_g Q = A_h via the graph relabeling it encodes.
        Some(images) => {
            let p = Permutation::new(images).expect("permutation matrix rows are a bijection");
            if &g.permute(&p) == h {
                Ok(ControllableIsoOutcome::Isomorphic(p))
            } else {
                Ok(ControllableIsoOutcome::NotIsomorphic { q })
            }
        }
        None => Ok(ControllableIsoOutcome::NotIsomorphic { q }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_nonisomorphic, generate, GeneratorSpec};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn build(s: &str) -> Graph {
        generate(&s.parse::<GeneratorSpec>().unwrap()).unwrap()
    }

    fn two_triangles() -> Graph {
        let k3 = build("complete:3");
        k3.disjoint_union(&k3)
    }

    #[test]
    fn four_cycle_plus_isolate_matches_star() {
        let left = build("cycle:4").disjoint_union(&Graph::empty(1));
        let star = build("complete_multipartite:1,4");
        assert!(cospectral(&left, &star));
        assert_eq!(adjacency_char_poly(&left).to_string(), "x^5 - 4*x^3");
        // Their complements are not cospectral, so the pair is not
        // generalized cospectral.
        assert!(!generalized_cospectral(&left, &star));
    }

    #[test]
    fn triangles_vs_hexagon_closed_walks() {
        let hexagon = build("cycle:6");
        assert!(!cospectral(&two_triangles(), &hexagon));
        assert_eq!(closed_walks(&two_triangles(), 3), BigInt::from(12));
        assert_eq!(closed_walks(&hexagon, 3), BigInt::from(0));
        assert_eq!(closed_walks(&hexagon, 2), BigInt::from(12));
        assert!(cospectral(&hexagon, &hexagon));
    }

    #[test]
    fn generalized_char_poly_at_integer_points() {
        let g = build("path:4");
        assert_eq!(gen_char_poly_at(&g, 0), adjacency_char_poly(&g));
        let k2 = build("complete:2");
        assert_eq!(gen_char_poly_at(&k2, 1).to_string(), "x^2 - 2*x - 3");
        assert_eq!(gen_char_poly_at(&Graph::empty(1), 1).to_string(), "x - 1");
    }

    #[test]
    fn walk_counts() {
        let k3 = build("complete:3");
        for (l, expected) in [(0, 3), (1, 6), (2, 12)] {
            assert_eq!(total_walks(&k3, l), BigInt::from(expected));
        }
        let k1 = Graph::empty(1);
        assert_eq!(total_walks(&k1, 0), BigInt::from(1));
        assert_eq!(total_walks(&k1, 1), BigInt::from(0));
        assert_eq!(total_walks(&build("path:3"), 2), BigInt::from(6));
    }

    #[test]
    fn walk_equivalence_examples() {
        assert!(walk_equivalent(&two_triangles(), &build("cycle:6")));
        assert!(!walk_equivalent(&build("complete:3"), &build("path:3")));
        let g = build("petersen");
        assert!(walk_equivalent(&g, &g));
    }

    #[test]
    fn walk_matrix_examples() {
        let w = walk_matrix(&build("path:3"));
        assert_eq!(w.matrix, IntMatrix::from_rows(&[&[1, 1, 2], &[1, 2, 2], &[1, 1, 2]]));
        let w = walk_matrix(&build("complete:2"));
        assert_eq!(w.matrix, IntMatrix::from_rows(&[&[1, 1], &[1, 1]]));
        let w = walk_matrix(&Graph::empty(1));
        assert_eq!(w.matrix, IntMatrix::from_rows(&[&[1]]));
    }

    #[test]
    fn controllability_examples() {
        assert!(is_controllable(&Graph::empty(1)));
        assert!(!is_controllable(&build("path:3")));
        assert!(!is_controllable(&build("cycle:6")));
    }

    fn controllable_six_vertex_graphs() -> Vec<Graph> {
        enumerate_nonisomorphic(6)
            .unwrap()
            .into_iter()
            .filter(is_controllable)
            .collect()
    }

    #[test]
    fn reconstruction_recovers_relabelings() {
        let graphs = controllable_six_vertex_graphs();
        assert!(!graphs.is_empty(), "six-vertex controllable graphs exist");
        let g = &graphs[0];
        match controllable_iso(g, g).unwrap() {
            ControllableIsoOutcome::Isomorphic(p) => assert!(p.is_identity()),
            other => panic!("expected identity, got {other:?}"),
        }
        let mut rng = StdRng::seed_from_u64(11);
        let p = Permutation::random(6, &mut rng);
        let h = g.permute(&p);
        match controllable_iso(g, &h).unwrap() {
            ControllableIsoOutcome::Isomorphic(w) => assert_eq!(g.permute(&w), h),
            other => panic!("expected isomorphism, got {other:?}"),
        }
    }

    #[test]
    fn reconstruction_rejects_distinct_graphs() {
        let graphs = controllable_six_vertex_graphs();
        let (g, h) = (&graphs[0], &graphs[1]);
        match controllable_iso(g, h).unwrap() {
            ControllableIsoOutcome::NotIsomorphic { q } => {
                assert_eq!(q.rows(), 6);
            }
            other => panic!("distinct graphs reported isomorphic: {other:?}"),
        }
    }

    #[test]
    fn reconstruction_precondition_errors() {
        let p3 = build("path:3");
        let k1 = Graph::empty(1);
        assert_eq!(
            controllable_iso(&p3, &k1),
            Err(SpectraError::SizeMismatch { left: 3, right: 1 })
        );
        let g6 = &controllable_six_vertex_graphs()[0];
        assert_eq!(
            controllable_iso(&build("cycle:6"), g6),
            Err(SpectraError::NotControllable { left: false, right: true })
        );
    }
}
