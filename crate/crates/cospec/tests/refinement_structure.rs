//! Color refinement, coherent closure, and distance-regularity witnesses.

use cospec::algebraic::{
    drg_intersection_array, srg_parameters, DrgOutcome, IntersectionArray,
};
use cospec::graph::{enumerate_nonisomorphic, generate, Graph, Permutation};
use cospec::linalg::IntMatrix;
use cospec::wl::{
    c2_equivalent, c3_equivalent, coherent_closure_basis, color_refinement, wl2_refinement,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn corpus(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(|n| enumerate_nonisomorphic(n).unwrap()).collect()
}

#[test]
fn pair_refinement_implies_vertex_refinement() {
    // Distinguishing power grows with the arity of the refinement: anything
    // the vertex version separates, the pair version separates too.
    let graphs = corpus(6);
    for g in &graphs {
        for h in &graphs {
            if g.vertex_count() == h.vertex_count() && c3_equivalent(g, h) {
                assert!(c2_equivalent(g, h), "{g:?} vs {h:?}");
            }
        }
    }
}

#[test]
fn refinement_histograms_are_relabeling_invariant() {
    // Bucketing by histogram is only sound if the histogram ignores vertex
    // names; scrambled copies must hash identically.
    let mut rng = StdRng::seed_from_u64(99);
    for g in corpus(6) {
        let n = g.vertex_count();
        for _ in 0..3 {
            let h = g.permute(&Permutation::random(n, &mut rng));
            assert_eq!(
                color_refinement(&g).histogram(),
                color_refinement(&h).histogram(),
                "{g:?}"
            );
            assert_eq!(
                wl2_refinement(&g).histogram(),
                wl2_refinement(&h).histogram(),
                "{g:?}"
            );
        }
    }
}

#[test]
fn coherent_basis_is_a_closed_algebra() {
    // The stable pair partition must give a coherent algebra: 0/1 matrices
    // with disjoint supports summing to J, closed under transpose, containing
    // I and A, and with every product constant on every class.
    for g in corpus(5) {
        let n = g.vertex_count();
        if n == 0 {
            continue;
        }
        let basis = coherent_closure_basis(&g).matrices;
        let m = basis.len();

        let mut sum = IntMatrix::zeros(n, n);
        for b in &basis {
            sum = sum.add(b);
        }
        assert_eq!(sum, IntMatrix::all_ones(n), "supports partition all pairs");

        for b in &basis {
            let t = b.transpose();
            assert!(basis.contains(&t), "transpose closure fails for {g:?}");
        }

        let identity = IntMatrix::identity(n);
        assert!(basis.iter().any(|b| {
            // The diagonal classes together give I; each one is either fully
            // diagonal or fully off-diagonal.
            (0..n).all(|i| (0..n).all(|j| (i == j) || b.get(i, j) == &BigInt::from(0)))
        }) || n == 0);
        let mut diag_sum = IntMatrix::zeros(n, n);
        for b in &basis {
            if (0..n).any(|i| b.get(i, i) != &BigInt::from(0)) {
                diag_sum = diag_sum.add(b);
            }
        }
        assert_eq!(diag_sum, identity, "diagonal classes must tile I for {g:?}");

        let adjacency = g.adjacency_matrix();
        let mut adj_sum = IntMatrix::zeros(n, n);
        for b in &basis {
            let hits_edge = (0..n).any(|i| {
                (0..n).any(|j| b.get(i, j) != &BigInt::from(0) && g.has_edge(i, j))
            });
            if hits_edge {
                adj_sum = adj_sum.add(b);
            }
        }
        assert_eq!(adj_sum, adjacency, "adjacency must be a union of classes for {g:?}");

        // Structure constants: B_i * B_j restricted to the support of B_k is
        // a constant multiple of B_k.
        for bi in &basis {
            for bj in &basis {
                let product = bi.mul(bj).unwrap();
                for bk in basis.iter().take(m) {
                    let mut seen: Option<BigInt> = None;
                    for i in 0..n {
                        for j in 0..n {
                            if bk.get(i, j) == &BigInt::from(1) {
                                let v = product.get(i, j).clone();
                                match &seen {
                                    None => seen = Some(v),
                                    Some(prev) => assert_eq!(
                                        prev, &v,
                                        "product not constant on a class for {g:?}"
                                    ),
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn distance_regular_recurrence_holds_with_witnessed_arrays() {
    // For a distance-regular graph the distance matrices satisfy
    // A * A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}.
    let mut checked = 0;
    for g in corpus(7) {
        if !g.is_connected() || g.vertex_count() == 0 {
            continue;
        }
        let DrgOutcome::DistanceRegular(arr) = drg_intersection_array(&g).unwrap() else {
            continue;
        };
        assert_recurrence(&g, &arr);
        checked += 1;
    }
    assert!(checked >= 10, "expected a healthy population of small DRGs, got {checked}");

    for spec in ["petersen", "cube", "icosahedron", "dodecahedron", "rook:4,4"] {
        let g = generate(&spec.parse().unwrap()).unwrap();
        let DrgOutcome::DistanceRegular(arr) = drg_intersection_array(&g).unwrap() else {
            panic!("{spec} must be distance-regular");
        };
        assert_recurrence(&g, &arr);
    }
}

fn assert_recurrence(g: &Graph, arr: &IntersectionArray) {
    let n = g.vertex_count();
    let d = arr.diameter();
    let a = g.adjacency_matrix();
    let mut distance: Vec<IntMatrix> = vec![IntMatrix::zeros(n, n); d + 1];
    for u in 0..n {
        for (v, dist) in g.bfs_distances(u).into_iter().enumerate() {
            let dist = dist.expect("connected");
            distance[dist].set(u, v, 1.into());
        }
    }
    let zero = IntMatrix::zeros(n, n);
    for i in 0..=d {
        let lhs = a.mul(&distance[i]).unwrap();
        let prev = if i == 0 { &zero } else { &distance[i - 1] };
        let next = if i == d { &zero } else { &distance[i + 1] };
        let b_prev = if i == 0 { 0 } else { arr.b(i - 1) };
        let c_next = if i == d { 0 } else { arr.c(i + 1) };
        let rhs = prev
            .scale(&BigInt::from(b_prev))
            .add(&distance[i].scale(&BigInt::from(arr.a(i))))
            .add(&next.scale(&BigInt::from(c_next)));
        assert_eq!(lhs, rhs, "recurrence fails at distance {i} for {g:?}");
    }
}

#[test]
fn strongly_regular_matches_diameter_two_distance_regularity() {
    // SRG parameters exist exactly when the graph is distance-regular with
    // diameter <= 2 (connected, not complete), so the two detectors must
    // agree on that overlap.
    for g in corpus(7) {
        if !g.is_connected() || g.vertex_count() < 2 {
            continue;
        }
        let srg = srg_parameters(&g);
        let drg = drg_intersection_array(&g).unwrap();
        match (&srg, &drg) {
            (Some((n, k, _, _)), DrgOutcome::DistanceRegular(arr)) => {
                assert_eq!(*n, g.vertex_count());
                assert_eq!(arr.degree(), *k);
                assert!(arr.diameter() <= 2, "{g:?}");
            }
            (Some(_), DrgOutcome::NotDistanceRegular(v)) => {
                panic!("strongly regular but not distance-regular: {g:?} ({v:?})")
            }
            (None, DrgOutcome::DistanceRegular(arr)) => {
                // Distance-regular graphs of diameter <= 2 that are not SRGs
                // are exactly the complete graphs.
                assert!(
                    arr.diameter() > 2 || g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2,
                    "{g:?}"
                );
            }
            (None, DrgOutcome::NotDistanceRegular(_)) => {}
        }
    }
}

#[test]
fn srg_pins() {
    let petersen = generate(&"petersen".parse().unwrap()).unwrap();
    assert_eq!(srg_parameters(&petersen), Some((10, 3, 0, 1)));
    let paley13 = generate(&"paley:13".parse().unwrap()).unwrap();
    assert_eq!(srg_parameters(&paley13), Some((13, 6, 2, 3)));
    let c5 = generate(&"cycle:5".parse().unwrap()).unwrap();
    assert_eq!(srg_parameters(&c5), Some((5, 2, 0, 1)));
    let path = generate(&"path:4".parse().unwrap()).unwrap();
    assert_eq!(srg_parameters(&path), None);
}
