//! The verification suites behind `cospec verify`. Each suite checks one
//! implication or search claim over a corpus — either the built-in
//! enumeration of all nonisomorphic graphs up to a vertex bound, or a
//! graph6 file — and reports violations with minimal witness pairs.
//!
//! Corpora are kept as validated graph6 strings; adjacency structures are
//! materialized per check and dropped, so a file corpus never pins all of
//! its graphs in memory at once. Candidate pairs are distributed across the
//! rayon worker pool; aggregation is order-independent because violations
//! are sorted before emission.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use cospec::algebraic::{
    drg_intersection_array, is_quotient_polynomial, DrgOutcome, IntersectionArray,
};
use cospec::graph::{
    are_isomorphic, enumerate_nonisomorphic, generate, nontrivial_automorphism, parse_graph6,
    write_graph6, Graph, Graph6Error, Permutation, MAX_ENUMERATION_N,
};
use cospec::logic::{build_drg_sentence, evaluate};
use cospec::spectra::{
    generalized_cospectral, is_controllable, walk_equivalent, walk_matrix,
    ControllableIsoOutcome,
};
use cospec::wl::{c2_equivalent, c3_equivalent, color_refinement, wl2_refinement};

use crate::report::SuiteLine;

pub const SUITE_NAMES: [&str; 7] = ["thm1", "thm6", "lem2", "cor2", "thm5", "thm4", "fig1"];

/// Default enumeration bound per suite, chosen so the default run finishes
/// in minutes while still covering every graph the claim quantifies over.
pub fn default_max_n(suite: &str) -> usize {
    match suite {
        "thm6" | "lem2" | "cor2" => 6,
        _ => 7,
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (expected thm1, thm6, lem2, cor2, thm5, thm4, or fig1)")]
    UnknownSuite(String),
    #[error("corpus line {line}: {source}")]
    BadRecord {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(transparent)]
    Io(#[from] crate::input::InputError),
    #[error("enumerated corpora support n <= {max}; supply larger graphs with --file")]
    CorpusTooLarge { max: usize },
    #[error("suite {suite} accepts records with at most {max} vertices, found one with {n}")]
    RecordTooLarge { suite: &'static str, n: usize, max: usize },
    #[error("suite fig1 is an exhaustive search of the enumeration; --file is not supported")]
    FileUnsupported,
}

/// A validated corpus: graph6 records plus their vertex counts.
pub struct Corpus {
    pub description: String,
    items: Vec<(String, usize)>,
}

impl Corpus {
    pub fn enumerated(max_n: usize) -> Result<Corpus, SuiteError> {
        if max_n > MAX_ENUMERATION_N {
            return Err(SuiteError::CorpusTooLarge { max: MAX_ENUMERATION_N });
        }
        let mut items = Vec::new();
        for n in 0..=max_n {
            for g in enumerate_nonisomorphic(n).expect("bound checked above") {
                items.push((write_graph6(&g), n));
            }
        }
        Ok(Corpus {
            description: format!("all nonisomorphic graphs with n <= {max_n}"),
            items,
        })
    }

    pub fn from_file(path: &str) -> Result<Corpus, SuiteError> {
        let records = crate::input::read_corpus_records(path)?;
        let mut items = Vec::with_capacity(records.len());
        for (i, rec) in records.into_iter().enumerate() {
            let g = parse_graph6(&rec)
                .map_err(|source| SuiteError::BadRecord { line: i + 1, source })?;
            items.push((rec, g.vertex_count()));
        }
        Ok(Corpus { description: format!("graph6 file {path} ({} records)", items.len()), items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn record(&self, i: usize) -> &str {
        &self.items[i].0
    }

    fn vertex_count(&self, i: usize) -> usize {
        self.items[i].1
    }

    fn graph(&self, i: usize) -> Graph {
        parse_graph6(&self.items[i].0).expect("records are validated on corpus construction")
    }

    fn guard_record_size(&self, suite: &'static str, max: usize) -> Result<(), SuiteError> {
        match self.items.iter().map(|&(_, n)| n).max() {
            Some(n) if n > max => Err(SuiteError::RecordTooLarge { suite, n, max }),
            _ => Ok(()),
        }
    }
}

pub struct SuiteRun {
    /// Pair discoveries first, then sorted violations, then the summary.
    pub lines: Vec<SuiteLine>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Violation {
    left: String,
    right: String,
    detail: String,
}

struct SuiteTally {
    suite: &'static str,
    corpus: String,
    graphs: usize,
    pairs_examined: usize,
    checks: usize,
    violations: Vec<Violation>,
    notes: Vec<String>,
    extra_lines: Vec<SuiteLine>,
}

impl SuiteTally {
    fn new(suite: &'static str, corpus: &Corpus) -> SuiteTally {
        SuiteTally {
            suite,
            corpus: corpus.description.clone(),
            graphs: corpus.len(),
            pairs_examined: 0,
            checks: 0,
            violations: Vec::new(),
            notes: Vec::new(),
            extra_lines: Vec::new(),
        }
    }

    fn violation(&mut self, left: &str, right: &str, detail: String) {
        self.violations.push(Violation {
            left: left.to_string(),
            right: right.to_string(),
            detail,
        });
    }

    fn check(&mut self, left: &str, right: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violation(left, right, detail());
        }
    }

    fn finish(mut self, pass_beyond_violations: bool) -> SuiteRun {
        self.violations.sort();
        self.violations.dedup();
        let pass = self.violations.is_empty() && pass_beyond_violations;
        let mut lines = self.extra_lines;
        let suite = self.suite.to_string();
        lines.extend(self.violations.into_iter().map(|v| SuiteLine::Violation {
            v: crate::report::SCHEMA_VERSION,
            suite: suite.clone(),
            left: v.left,
            right: v.right,
            detail: v.detail,
        }));
        lines.push(SuiteLine::Summary {
            v: crate::report::SCHEMA_VERSION,
            suite,
            corpus: self.corpus,
            graphs: self.graphs,
            pairs_examined: self.pairs_examined,
            checks: self.checks,
            violations: lines.iter().filter(|l| matches!(l, SuiteLine::Violation { .. })).count(),
            pass,
            notes: self.notes,
        });
        SuiteRun { lines, pass }
    }
}

pub fn run_suite(name: &str, corpus: &Corpus, seed: u64) -> Result<SuiteRun, SuiteError> {
    match name {
        "thm1" => run_thm1(corpus),
        "thm6" => run_c2_implication(
            corpus,
            "thm6",
            "c2-equivalent but not walk-equivalent",
            |g, h| walk_equivalent(g, h),
        ),
        "lem2" => run_c2_implication(
            corpus,
            "lem2",
            "c2-equivalent but walk-matrix Gram products differ",
            |g, h| {
                let gram = |g: &Graph| {
                    let w = walk_matrix(g).matrix;
                    w.transpose().mul(&w).expect("square matrices conform")
                };
                gram(g) == gram(h)
            },
        ),
        "cor2" => run_cor2(corpus, seed),
        "thm5" => run_thm5(corpus),
        "thm4" => run_thm4(corpus),
        "fig1" => run_fig1(corpus),
        other => Err(SuiteError::UnknownSuite(other.to_string())),
    }
}

/// Groups corpus indices by a per-graph key computed in parallel; map order
/// (hence bucket order) is deterministic because keys are ordered.
fn buckets_by_key<K: Ord + Send>(
    corpus: &Corpus,
    key: impl Fn(&Graph) -> K + Sync,
) -> BTreeMap<K, Vec<usize>> {
    let keys: Vec<K> =
        (0..corpus.len()).into_par_iter().map(|i| key(&corpus.graph(i))).collect();
    let mut buckets: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        buckets.entry(k).or_default().push(i);
    }
    buckets
}

fn bucket_pairs<K: Ord + Send>(buckets: &BTreeMap<K, Vec<usize>>) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for members in buckets.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Outcome of one candidate pair: the hypothesis did not hold, or it held
/// and the conclusion was checked.
enum PairOutcome {
    HypothesisFailed,
    Confirmed,
    Violation(String),
}

fn check_pairs(
    corpus: &Corpus,
    pairs: &[(usize, usize)],
    tally: &mut SuiteTally,
    check: impl Fn(&Graph, &Graph) -> PairOutcome + Sync,
) -> usize {
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| check(&corpus.graph(i), &corpus.graph(j)))
        .collect();
    let mut confirmed = 0;
    for (&(i, j), outcome) in pairs.iter().zip(outcomes) {
        tally.pairs_examined += 1;
        match outcome {
            PairOutcome::HypothesisFailed => {}
            PairOutcome::Confirmed => {
                confirmed += 1;
                tally.checks += 1;
            }
            PairOutcome::Violation(detail) => {
                confirmed += 1;
                tally.checks += 1;
                tally.violation(corpus.record(i), corpus.record(j), detail);
            }
        }
    }
    confirmed
}

/// thm1: graphs that pair refinement cannot distinguish are generalized
/// cospectral. Candidates are bucketed by (n, standalone stable pair-color
/// histogram) — an invariant of the equivalence, so no candidate pair is
/// lost — then confirmed with the joint refinement before the spectral
/// check.
fn run_thm1(corpus: &Corpus) -> Result<SuiteRun, SuiteError> {
    corpus.guard_record_size("thm1", 2048)?;
    let mut tally = SuiteTally::new("thm1", corpus);
    let buckets =
        buckets_by_key(corpus, |g| (g.vertex_count(), wl2_refinement(g).histogram()));
    let multi = buckets.values().filter(|m| m.len() > 1).count();
    let pairs = bucket_pairs(&buckets);
    let confirmed = check_pairs(corpus, &pairs, &mut tally, |g, h| {
        if !c3_equivalent(g, h) {
            return PairOutcome::HypothesisFailed;
        }
        if generalized_cospectral(g, h) {
            PairOutcome::Confirmed
        } else {
            PairOutcome::Violation(
                "c3-equivalent but not generalized cospectral".to_string(),
            )
        }
    });
    tally.notes.push(format!(
        "{} buckets ({multi} with more than one graph), {confirmed} confirmed c3-equivalent pairs",
        buckets.len()
    ));
    Ok(tally.finish(true))
}

/// thm6 / lem2: shared driver for claims of the form "c2-equivalent implies
/// P(g, h)". Candidates are bucketed by (n, standalone stable vertex-color
/// histogram), an invariant of c2-equivalence.
fn run_c2_implication(
    corpus: &Corpus,
    suite: &'static str,
    violation_detail: &str,
    conclusion: impl Fn(&Graph, &Graph) -> bool + Sync,
) -> Result<SuiteRun, SuiteError> {
    corpus.guard_record_size(suite, 4096)?;
    let mut tally = SuiteTally::new(suite, corpus);
    let buckets =
        buckets_by_key(corpus, |g| (g.vertex_count(), color_refinement(g).histogram()));
    let pairs = bucket_pairs(&buckets);
    let confirmed = check_pairs(corpus, &pairs, &mut tally, |g, h| {
        if !c2_equivalent(g, h) {
            return PairOutcome::HypothesisFailed;
        }
        if conclusion(g, h) {
            PairOutcome::Confirmed
        } else {
            PairOutcome::Violation(violation_detail.to_string())
        }
    });
    tally.notes.push(format!("{confirmed} confirmed c2-equivalent pairs"));
    Ok(tally.finish(true))
}

/// cor2: among controllable graphs, c2-equivalence coincides with
/// isomorphism, and the walk-matrix quotient reconstructs the isomorphism.
/// Also checks the two side claims (the one-vertex graph is controllable;
/// no controllable graph has a nontrivial automorphism) and, seeded, that a
/// random relabeling of each controllable graph is recognized and
/// reconstructed.
fn run_cor2(corpus: &Corpus, seed: u64) -> Result<SuiteRun, SuiteError> {
    corpus.guard_record_size("cor2", 512)?;
    let mut tally = SuiteTally::new("cor2", corpus);

    let controllable: Vec<bool> =
        (0..corpus.len()).into_par_iter().map(|i| is_controllable(&corpus.graph(i))).collect();
    let controllable_count = controllable.iter().filter(|&&c| c).count();

    // Side claim: controllable graphs have trivial automorphism groups.
    let automorphic: Vec<Option<bool>> = (0..corpus.len())
        .into_par_iter()
        .map(|i| controllable[i].then(|| nontrivial_automorphism(&corpus.graph(i)).is_some()))
        .collect();
    for (i, aut) in automorphic.into_iter().enumerate() {
        if let Some(aut) = aut {
            tally.check(corpus.record(i), corpus.record(i), !aut, || {
                "controllable graph has a nontrivial automorphism".to_string()
            });
        }
    }

    // Side claim: the one-vertex graph is controllable.
    tally.check("@", "@", is_controllable(&Graph::empty(1)), || {
        "one-vertex graph reported as not controllable".to_string()
    });

    // Equivalence <=> isomorphism over controllable same-order pairs. Pairs
    // with different vertex counts satisfy both sides vacuously (both
    // false), so bucketing by n loses nothing.
    let mut by_n: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..corpus.len() {
        if controllable[i] {
            by_n.entry(corpus.vertex_count(i)).or_default().push(i);
        }
    }
    let pairs = bucket_pairs(&by_n);
    struct PairVerdict {
        c2: bool,
        iso: bool,
        reconstruction_ok: bool,
    }
    let verdicts: Vec<PairVerdict> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (corpus.graph(i), corpus.graph(j));
            let c2 = c2_equivalent(&g, &h);
            let iso = are_isomorphic(&g, &h).is_some();
            let reconstruction_ok = if c2 && iso {
                reconstructs_isomorphism(&g, &h)
            } else {
                true
            };
            PairVerdict { c2, iso, reconstruction_ok }
        })
        .collect();
    for (&(i, j), v) in pairs.iter().zip(&verdicts) {
        tally.pairs_examined += 1;
        tally.check(corpus.record(i), corpus.record(j), v.c2 == v.iso, || {
            format!(
                "controllable pair disagrees: c2-equivalent = {}, isomorphic = {}",
                v.c2, v.iso
            )
        });
        if v.c2 && v.iso {
            tally.check(corpus.record(i), corpus.record(j), v.reconstruction_ok, || {
                "walk-matrix quotient failed to reconstruct an isomorphism".to_string()
            });
        }
    }

    // Seeded property test: relabeling a controllable graph by a random
    // permutation must be detected as c2-equivalent and reconstructed. The
    // seed feeds only this block, never the verdicts above.
    struct RelabelOutcome {
        index: usize,
        relabeled: String,
        c2: bool,
        reconstruction_ok: bool,
    }
    let relabel: Vec<RelabelOutcome> = (0..corpus.len())
        .into_par_iter()
        .filter(|&i| controllable[i])
        .map(|i| {
            let g = corpus.graph(i);
            let mut rng = StdRng::seed_from_u64(
                seed.wrapping_add((i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            );
            let p = Permutation::random(g.vertex_count(), &mut rng);
            let h = g.permute(&p);
            RelabelOutcome {
                index: i,
                relabeled: write_graph6(&h),
                c2: c2_equivalent(&g, &h),
                reconstruction_ok: reconstructs_isomorphism(&g, &h),
            }
        })
        .collect();
    for r in relabel {
        tally.pairs_examined += 1;
        tally.check(corpus.record(r.index), &r.relabeled, r.c2, || {
            "random relabeling not recognized as c2-equivalent".to_string()
        });
        tally.check(corpus.record(r.index), &r.relabeled, r.reconstruction_ok, || {
            "walk-matrix quotient failed on a random relabeling".to_string()
        });
    }

    tally
        .notes
        .push(format!("{controllable_count} of {} graphs are controllable", corpus.len()));
    tally.notes.push(format!("relabeling property test seeded with {seed}"));
    Ok(tally.finish(true))
}

/// The walk-matrix quotient must yield a permutation carrying g to h.
fn reconstructs_isomorphism(g: &Graph, h: &Graph) -> bool {
    match cospec::spectra::controllable_iso(g, h) {
        Ok(ControllableIsoOutcome::Isomorphic(p)) => g.permute(&p) == *h,
        _ => false,
    }
}

/// thm5: every distance-regular graph passes the quotient-polynomial test,
/// and over quotient-polynomial graphs generalized cospectrality coincides
/// with c3-equivalence. The 16-vertex pair (shrikhande, rook:4,4) is pinned
/// as the classic quotient-polynomial witness: equivalent in both senses
/// yet nonisomorphic.
fn run_thm5(corpus: &Corpus) -> Result<SuiteRun, SuiteError> {
    corpus.guard_record_size("thm5", 2048)?;
    let mut tally = SuiteTally::new("thm5", corpus);

    struct GraphFacts {
        quotient_polynomial: bool,
        distance_regular: bool,
    }
    let facts: Vec<GraphFacts> = (0..corpus.len())
        .into_par_iter()
        .map(|i| {
            let g = corpus.graph(i);
            let distance_regular = g.vertex_count() > 0
                && matches!(drg_intersection_array(&g), Ok(DrgOutcome::DistanceRegular(_)));
            GraphFacts {
                quotient_polynomial: is_quotient_polynomial(&g).quotient_polynomial,
                distance_regular,
            }
        })
        .collect();

    for (i, f) in facts.iter().enumerate() {
        if f.distance_regular {
            tally.check(corpus.record(i), corpus.record(i), f.quotient_polynomial, || {
                "distance-regular graph fails the quotient-polynomial test".to_string()
            });
        }
    }
    let drg_count = facts.iter().filter(|f| f.distance_regular).count();
    let qp_count = facts.iter().filter(|f| f.quotient_polynomial).count();

    // Biconditional over quotient-polynomial pairs; different vertex counts
    // make both sides false, so same-order pairs suffice.
    let mut by_n: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, f) in facts.iter().enumerate() {
        if f.quotient_polynomial {
            by_n.entry(corpus.vertex_count(i)).or_default().push(i);
        }
    }
    let pairs = bucket_pairs(&by_n);
    let verdicts: Vec<(bool, bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (corpus.graph(i), corpus.graph(j));
            (generalized_cospectral(&g, &h), c3_equivalent(&g, &h))
        })
        .collect();
    for (&(i, j), &(gen, c3)) in pairs.iter().zip(&verdicts) {
        tally.pairs_examined += 1;
        tally.check(corpus.record(i), corpus.record(j), gen == c3, || {
            format!(
                "quotient-polynomial pair disagrees: generalized cospectral = {gen}, \
                 c3-equivalent = {c3}"
            )
        });
    }

    let shrikhande = generate(&"shrikhande".parse().unwrap()).unwrap();
    let rook = generate(&"rook:4,4".parse().unwrap()).unwrap();
    let (s6, r6) = (write_graph6(&shrikhande), write_graph6(&rook));
    tally.check(&s6, &r6, generalized_cospectral(&shrikhande, &rook), || {
        "pinned pair not generalized cospectral".to_string()
    });
    tally.check(&s6, &r6, c3_equivalent(&shrikhande, &rook), || {
        "pinned pair not c3-equivalent".to_string()
    });
    tally.check(&s6, &r6, are_isomorphic(&shrikhande, &rook).is_none(), || {
        "pinned pair reported isomorphic".to_string()
    });
    tally.pairs_examined += 1;

    tally.notes.push(format!(
        "{qp_count} quotient-polynomial graphs ({drg_count} distance-regular) in the corpus"
    ));
    tally.notes.push("pinned pair shrikhande vs rook:4,4 checked".to_string());
    Ok(tally.finish(true))
}

/// The five Platonic intersection arrays, used to seed thm4's array pool.
pub fn platonic_arrays() -> Vec<(&'static str, &'static str)> {
    vec![
        ("tetrahedron", "{3;1}"),
        ("cube", "{3,2,1;1,2,3}"),
        ("octahedron", "{4,1;1,4}"),
        ("icosahedron", "{5,2,1;1,2,5}"),
        ("dodecahedron", "{3,2,1,1,1;1,1,1,2,3}"),
    ]
}

/// thm4: the three-variable sentence built for an intersection array holds
/// on a connected graph exactly when the graph's intersection array is that
/// array. Arrays tested are all arrays detected in the corpus plus the five
/// Platonic ones; the Platonic generators are also pinned to their known
/// arrays.
fn run_thm4(corpus: &Corpus) -> Result<SuiteRun, SuiteError> {
    corpus.guard_record_size("thm4", 2048)?;
    let mut tally = SuiteTally::new("thm4", corpus);

    // Connected graphs only: distance-regularity (and the sentence's
    // distance talk) concerns connected graphs; the empty graph is excluded
    // because it has no vertices to witness the existential conjuncts.
    let connected: Vec<usize> = {
        let flags: Vec<bool> = (0..corpus.len())
            .into_par_iter()
            .map(|i| corpus.vertex_count(i) > 0 && corpus.graph(i).is_connected())
            .collect();
        (0..corpus.len()).filter(|&i| flags[i]).collect()
    };

    let detected: Vec<Option<IntersectionArray>> = connected
        .par_iter()
        .map(|&i| match drg_intersection_array(&corpus.graph(i)) {
            Ok(DrgOutcome::DistanceRegular(arr)) => Some(arr),
            _ => None,
        })
        .collect();

    let mut arrays: BTreeMap<String, IntersectionArray> = BTreeMap::new();
    for arr in detected.iter().flatten() {
        arrays.insert(arr.to_string(), arr.clone());
    }
    for (name, text) in platonic_arrays() {
        let arr: IntersectionArray =
            text.parse().unwrap_or_else(|e| panic!("{name} array {text} must parse: {e}"));
        arrays.insert(text.to_string(), arr);
    }

    let sentences: Vec<(String, IntersectionArray, cospec::logic::Formula)> = arrays
        .into_iter()
        .map(|(text, arr)| {
            let sentence = build_drg_sentence(&arr).expect("desk-scale arrays fit the budget");
            (text, arr, sentence)
        })
        .collect();

    struct EvalResult {
        corpus_index: usize,
        array_text: String,
        sentence_holds: bool,
        array_matches: bool,
    }
    let results: Vec<EvalResult> = connected
        .par_iter()
        .zip(&detected)
        .flat_map_iter(|(&i, det)| {
            let g = corpus.graph(i);
            sentences.iter().map(move |(text, arr, sentence)| EvalResult {
                corpus_index: i,
                array_text: text.clone(),
                sentence_holds: evaluate(&g, sentence, &[])
                    .expect("array sentences are closed formulas"),
                array_matches: det.as_ref() == Some(arr),
            })
        })
        .collect();
    for r in &results {
        tally.check(
            corpus.record(r.corpus_index),
            &r.array_text,
            r.sentence_holds == r.array_matches,
            || {
                format!(
                    "sentence for {} evaluates {} but the detector says {}",
                    r.array_text, r.sentence_holds, r.array_matches
                )
            },
        );
    }

    for (name, expected) in platonic_arrays() {
        let g = generate(&name.parse().unwrap()).unwrap();
        let got = match drg_intersection_array(&g) {
            Ok(DrgOutcome::DistanceRegular(arr)) => arr.to_string(),
            other => format!("not distance-regular ({other:?})"),
        };
        tally.check(name, expected, got == expected, || {
            format!("{name} generator yields intersection array {got}, expected {expected}")
        });
    }

    tally.notes.push(format!(
        "{} connected graphs evaluated against {} arrays",
        connected.len(),
        sentences.len()
    ));
    let array_list: Vec<&str> = sentences.iter().map(|(t, _, _)| t.as_str()).collect();
    tally.notes.push(format!("arrays: {}", array_list.join(" ")));
    Ok(tally.finish(true))
}

/// fig1: exhaustive search for nonisomorphic generalized-cospectral pairs.
/// Buckets by characteristic polynomial, then compares complements.
///
/// The pass verdict pins the known minimal situation: no pair exists below
/// n = 7, and among the pairs at n = 7 is the classic one — a six-cycle
/// plus an isolated vertex against the spider tree with three two-edge
/// legs — whose members a single c2 sentence already separates (one side
/// has an isolated vertex, the other is connected). The search reports
/// every pair it finds; at n = 7 there are twenty, four of which show the
/// isolated-versus-connected split.
fn run_fig1(corpus: &Corpus) -> Result<SuiteRun, SuiteError> {
    let mut tally = SuiteTally::new("fig1", corpus);

    let buckets = buckets_by_key(corpus, |g| {
        (
            g.vertex_count(),
            g.adjacency_matrix().char_poly().expect("adjacency matrices are square").to_string(),
        )
    });
    let pairs = bucket_pairs(&buckets);

    struct Found {
        i: usize,
        j: usize,
        n: usize,
        left_isolated: bool,
        right_isolated: bool,
        left_connected: bool,
        right_connected: bool,
        c2: bool,
    }
    let found: Vec<Option<Found>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (corpus.graph(i), corpus.graph(j));
            if !generalized_cospectral(&g, &h) || are_isomorphic(&g, &h).is_some() {
                return None;
            }
            let isolated = |g: &Graph| (0..g.vertex_count()).any(|v| g.degree(v) == 0);
            Some(Found {
                i,
                j,
                n: g.vertex_count(),
                left_isolated: isolated(&g),
                right_isolated: isolated(&h),
                left_connected: g.is_connected(),
                right_connected: h.is_connected(),
                c2: c2_equivalent(&g, &h),
            })
        })
        .collect();
    tally.pairs_examined = pairs.len();
    tally.checks = pairs.len();

    let mut found: Vec<Found> = found.into_iter().flatten().collect();
    found.sort_by(|a, b| {
        (a.n, corpus.record(a.i), corpus.record(a.j))
            .cmp(&(b.n, corpus.record(b.i), corpus.record(b.j)))
    });

    // The classic pair: a hexagon with a spare vertex, and the tree made by
    // growing three two-edge legs from a common center. Same generalized
    // spectrum, yet one has an isolated vertex and the other is connected.
    let hexagon_plus_vertex =
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
    let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);

    let mut all_at_seven = true;
    let mut split_count = 0usize;
    let mut classic_pair_ok = false;
    for f in &found {
        let detail = format!(
            "generalized cospectral, nonisomorphic; isolated vertex: left {}, right {}; \
             connected: left {}, right {}; c2-equivalent: {}",
            f.left_isolated, f.right_isolated, f.left_connected, f.right_connected, f.c2
        );
        tally.extra_lines.push(SuiteLine::Pair {
            v: crate::report::SCHEMA_VERSION,
            suite: "fig1".to_string(),
            n: f.n,
            left: corpus.record(f.i).to_string(),
            right: corpus.record(f.j).to_string(),
            detail,
        });
        all_at_seven &= f.n == 7;
        let isolated_split = (f.left_isolated && !f.right_isolated && f.right_connected)
            || (f.right_isolated && !f.left_isolated && f.left_connected);
        if isolated_split {
            split_count += 1;
        }
        if f.n == 7 {
            let (g, h) = (corpus.graph(f.i), corpus.graph(f.j));
            let matches_classic = (are_isomorphic(&g, &hexagon_plus_vertex).is_some()
                && are_isomorphic(&h, &spider).is_some())
                || (are_isomorphic(&g, &spider).is_some()
                    && are_isomorphic(&h, &hexagon_plus_vertex).is_some());
            if matches_classic {
                classic_pair_ok = isolated_split && !f.c2;
            }
        }
    }

    let pass = !found.is_empty() && all_at_seven && classic_pair_ok;
    tally.notes.push(format!(
        "{} nonisomorphic generalized-cospectral pairs found ({} with one member \
         holding an isolated vertex and the other connected)",
        found.len(),
        split_count
    ));
    if let Some(min_n) = found.first().map(|f| f.n) {
        tally.notes.push(format!("smallest pair has {min_n} vertices"));
    } else {
        tally.notes.push("no pair found in this corpus".to_string());
    }
    tally.notes.push(format!(
        "hexagon-plus-isolated-vertex versus three-legged-spider pair {}",
        if classic_pair_ok { "found, separated by c2" } else { "not confirmed" }
    ));
    Ok(tally.finish(pass))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip_through_the_dispatcher() {
        let corpus = Corpus::enumerated(3).unwrap();
        for name in SUITE_NAMES {
            // Tiny corpora keep this fast; every suite must at least run.
            run_suite(name, &corpus, 1).unwrap();
        }
        assert!(matches!(
            run_suite("thm99", &corpus, 1),
            Err(SuiteError::UnknownSuite(_))
        ));
    }

    #[test]
    fn default_scopes_match_the_claims() {
        assert_eq!(default_max_n("thm6"), 6);
        assert_eq!(default_max_n("lem2"), 6);
        assert_eq!(default_max_n("cor2"), 6);
        assert_eq!(default_max_n("thm1"), 7);
        assert_eq!(default_max_n("fig1"), 7);
    }

    #[test]
    fn violations_are_sorted_and_deduplicated() {
        let corpus = Corpus::enumerated(2).unwrap();
        let mut tally = SuiteTally::new("thm6", &corpus);
        for _ in 0..2 {
            tally.violation("Bw".into(), "@".into(), "z-later".into());
            tally.violation("@".into(), "Bw".into(), "a-earlier".into());
        }
        let run = tally.finish(true);
        assert!(!run.pass, "violations must force failure");
        let details: Vec<&str> = run
            .lines
            .iter()
            .filter_map(|l| match l {
                SuiteLine::Violation { detail, .. } => Some(detail.as_str()),
                _ => None,
            })
            .collect();
        assert_eq!(details, ["a-earlier", "z-later"]);
    }

    #[test]
    fn platonic_array_table_is_complete() {
        let arrays = platonic_arrays();
        assert_eq!(arrays.len(), 5);
        for (name, array) in arrays {
            let g = cospec::graph::generate(&name.parse().unwrap()).unwrap();
            match cospec::algebraic::drg_intersection_array(&g).unwrap() {
                cospec::algebraic::DrgOutcome::DistanceRegular(arr) => {
                    assert_eq!(arr.to_string(), array, "{name}");
                }
                other => panic!("{name}: {other:?}"),
            }
        }
    }

    #[test]
    fn enumerated_corpora_count_their_graphs() {
        assert_eq!(Corpus::enumerated(4).unwrap().len(), 1 + 1 + 2 + 4 + 11);
    }
}
