//! Implementation crate for the `cospec` binary: argument resolution,
//! report construction, and the verification suites. Lives behind a library
//! interface so integration tests can drive the same code paths the binary
//! uses.

pub mod input;
pub mod report;
pub mod suites;

use cospec::algebraic::{
    drg_intersection_array, is_quotient_polynomial, srg_parameters, CountKind, DrgOutcome,
    DrgViolation,
};
use cospec::graph::Graph;
use cospec::spectra::{controllable_iso, ControllableIsoOutcome, SpectraError};
use cospec::wl::{color_refinement, wl2_refinement};

use report::{ControllableIsoVerdict, StructureVerdicts};

/// Structure verdicts shared by `analyze` and `structure`.
pub fn structure_verdicts(g: &Graph) -> StructureVerdicts {
    let (distance_regular, intersection_array, drg_violation) = match drg_intersection_array(g) {
        Err(_) => (None, None, None),
        Ok(DrgOutcome::DistanceRegular(arr)) => (Some(true), Some(arr.to_string()), None),
        Ok(DrgOutcome::NotDistanceRegular(v)) => {
            (Some(false), None, Some(describe_drg_violation(&v)))
        }
    };
    let qp = is_quotient_polynomial(g);
    StructureVerdicts {
        srg: srg_parameters(g).map(|(n, k, a, c)| [n, k, a, c]),
        distance_regular,
        intersection_array,
        drg_violation,
        quotient_polynomial: qp.quotient_polynomial,
        walk_classes: qp.class_count,
        algebra_dimension: qp.algebra_dimension,
    }
}

fn describe_drg_violation(v: &DrgViolation) -> String {
    match v {
        DrgViolation::NotRegular { u, degree_u, v, degree_v } => {
            format!("vertices {u} and {v} have degrees {degree_u} and {degree_v}")
        }
        DrgViolation::InconstantCount { kind, distance, pair1, count1, pair2, count2 } => {
            let what = match kind {
                CountKind::Toward => "closer-neighbor",
                CountKind::Away => "farther-neighbor",
            };
            format!(
                "at distance {distance}, pair {pair1:?} has {what} count {count1} \
                 but pair {pair2:?} has {count2}"
            )
        }
    }
}

/// Controllable-isomorphism verdict for `compare`, folding the inapplicable
/// cases into a reason string.
pub fn controllable_iso_verdict(g: &Graph, h: &Graph) -> ControllableIsoVerdict {
    match controllable_iso(g, h) {
        Ok(ControllableIsoOutcome::Isomorphic(p)) => {
            ControllableIsoVerdict::Isomorphic { permutation: p.images().to_vec() }
        }
        Ok(ControllableIsoOutcome::NotIsomorphic { .. }) => ControllableIsoVerdict::NotIsomorphic,
        Err(e @ SpectraError::SizeMismatch { .. })
        | Err(e @ SpectraError::NotControllable { .. }) => {
            ControllableIsoVerdict::NotApplicable { reason: e.to_string() }
        }
    }
}

/// 1-WL and 2-WL class counts plus histograms, in one call.
pub fn refinement_summary(
    g: &Graph,
) -> (usize, Vec<(usize, usize)>, usize, Vec<(usize, usize)>) {
    let c1 = color_refinement(g);
    let c2 = wl2_refinement(g);
    (c1.class_count, c1.histogram(), c2.class_count, c2.histogram())
}
