//! Exact deciders for spectral, combinatorial, and logical equivalences of
//! finite simple graphs.
//!
//! Everything here computes over arbitrary-precision integers and rationals;
//! there is no floating point anywhere. The modules:
//!
//! * [`graph`] — adjacency-bitset graphs, permutations, graph6 I/O, named
//!   generators, exhaustive small-graph enumeration, isomorphism search.
//! * [`linalg`] — big-integer/rational matrices, fraction-free determinants,
//!   characteristic and minimal polynomials.
//! * [`spectra`] — cospectrality, generalized spectra, walk counts, walk
//!   matrices, and controllable-graph isomorphism recovery.
//! * [`wl`] — color refinement (1-WL) and refinement over ordered pairs
//!   (2-WL), the induced equivalence deciders, and coherent-closure bases.
//! * [`logic`] — a shared-subformula DAG for three-variable counting logic:
//!   parser, printer, evaluator, and the walk/distance/intersection-array
//!   sentence builders.
//! * [`pebble`] — the k-pebble game decided by greatest-fixpoint deletion.
//! * [`algebraic`] — distance matrices, distance-regularity with witnesses,
//!   strong regularity, walk-regular pair partitions, quotient-polynomial
//!   detection.

pub mod algebraic;
pub mod graph;
pub mod linalg;
pub mod logic;
pub mod pebble;
pub mod spectra;
pub mod wl;
