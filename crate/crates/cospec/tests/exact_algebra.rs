//! Identities tying the polynomial layer to the graph layer, checked with
//! exact integer arithmetic over every graph on up to six vertices.

use cospec::graph::{enumerate_nonisomorphic, Graph};
use cospec::linalg::IntPoly;
use cospec::spectra::{closed_walks, cospectral, gen_char_poly_at};
use num_bigint::BigInt;

fn corpus(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(|n| enumerate_nonisomorphic(n).unwrap()).collect()
}

#[test]
fn adjacency_matrices_satisfy_their_characteristic_polynomial() {
    for g in corpus(6) {
        let a = g.adjacency_matrix();
        let p = a.char_poly().unwrap();
        assert!(p.is_monic() || g.vertex_count() == 0);
        assert!(p.eval_matrix(&a).unwrap().is_zero());
    }
}

#[test]
fn minimal_polynomial_divides_characteristic_polynomial() {
    for g in corpus(6) {
        let a = g.adjacency_matrix();
        let charpoly = a.char_poly().unwrap();
        let minpoly = a.min_poly().unwrap();
        assert!(minpoly.eval_matrix(&a).unwrap().is_zero());
        assert!(charpoly.div_exact(&minpoly).is_some(), "{g:?}");
        // Adjacency matrices are diagonalizable, so the minimal polynomial
        // has one root per distinct eigenvalue and is squarefree; its degree
        // never exceeds n but must reach the number of distinct eigenvalues.
        assert!(minpoly.degree() <= charpoly.degree());
    }
}

#[test]
fn bivariate_polynomial_is_affine_in_the_second_argument() {
    // det(xI - yJ - A) expands to phi(x) - y * (row-sum correction): a degree
    // one polynomial in y. Four sample points must therefore be collinear:
    // p(y) = p(0) + y * (p(1) - p(0)).
    for g in corpus(6) {
        let at_zero = gen_char_poly_at(&g, 0);
        let slope = gen_char_poly_at(&g, 1).sub(&at_zero);
        for y in [-1i64, 1, 2, 3] {
            let expected = at_zero.add(&slope.scale(&BigInt::from(y)));
            assert_eq!(gen_char_poly_at(&g, y), expected, "y = {y}, {g:?}");
        }
    }
}

#[test]
fn complement_spectrum_comes_from_the_bivariate_polynomial() {
    // char_poly(complement) = (-1)^n * p(-x - 1) where p(x) = det(xI + J - A).
    for g in corpus(6) {
        let n = g.vertex_count();
        let at_minus_one = gen_char_poly_at(&g, -1);
        let mut reflected =
            at_minus_one.compose_linear(&BigInt::from(-1), &BigInt::from(-1));
        if n % 2 == 1 {
            reflected = reflected.neg();
        }
        assert_eq!(g.complement().adjacency_matrix().char_poly().unwrap(), reflected, "{g:?}");
    }
}

#[test]
fn cospectrality_equals_matching_closed_walk_counts() {
    // Two n-vertex graphs share a characteristic polynomial exactly when
    // their closed-walk counts agree for every length below 2n; power sums
    // of the eigenvalues determine the spectrum and vice versa.
    let graphs = corpus(5);
    for g in &graphs {
        for h in &graphs {
            if g.vertex_count() != h.vertex_count() {
                continue;
            }
            let n = g.vertex_count();
            let walks_agree =
                (0..2 * n.max(1)).all(|len| closed_walks(g, len) == closed_walks(h, len));
            assert_eq!(cospectral(g, h), walks_agree, "{g:?} vs {h:?}");
        }
    }
}

#[test]
fn characteristic_polynomial_constant_term_is_the_determinant() {
    for g in corpus(6) {
        let a = g.adjacency_matrix();
        let n = g.vertex_count();
        let p = a.char_poly().unwrap();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(p.coeff(0) * sign, a.det().unwrap());
        // Trace is zero for simple graphs: the x^(n-1) coefficient vanishes.
        if n >= 1 {
            assert_eq!(p.coeff(n - 1), BigInt::from(0));
        }
        // The x^(n-2) coefficient counts edges (negated).
        if n >= 2 {
            assert_eq!(p.coeff(n - 2), BigInt::from(-(g.edge_count() as i64)));
        }
    }
}

#[test]
fn known_spectra_come_out_exactly() {
    let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    assert_eq!(k4.adjacency_matrix().char_poly().unwrap(), IntPoly::from_i64(&[-3, -8, -6, 0, 1]));
    // (x - 3)(x + 1)^3 = x^4 - 6x^2 - 8x - 3

    let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
    assert_eq!(p3.adjacency_matrix().char_poly().unwrap(), IntPoly::from_i64(&[0, -2, 0, 1]));

    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    assert_eq!(
        c5.adjacency_matrix().char_poly().unwrap(),
        IntPoly::from_i64(&[-2, 5, 0, -5, 0, 1])
    );
}
