//! Report types for every subcommand. Field order in these structs is the
//! field order in the emitted JSON, and nothing here depends on wall-clock
//! time or iteration order of hashed containers, so identical inputs always
//! serialize to identical bytes. Timing information goes to stderr only.

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Debug, Serialize)]
pub struct StructureVerdicts {
    /// Strong-regularity parameters [n, k, a, c], when the graph is strongly
    /// regular with both pair kinds realized.
    pub srg: Option<[usize; 4]>,
    /// Whether the graph is distance-regular; absent when disconnected.
    pub distance_regular: Option<bool>,
    pub intersection_array: Option<String>,
    /// First distance-regularity violation, when there is one.
    pub drg_violation: Option<String>,
    pub quotient_polynomial: bool,
    /// Number of classes in the finest walk-regular pair partition.
    pub walk_classes: usize,
    /// Dimension of the adjacency algebra (minimal-polynomial degree).
    pub algebra_dimension: usize,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub v: &'static str,
    pub command: &'static str,
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub degree_sequence: Vec<usize>,
    pub regular_degree: Option<usize>,
    pub connected: bool,
    pub char_poly: String,
    pub complement_char_poly: String,
    pub controllable: bool,
    pub wl1_classes: usize,
    pub wl1_histogram: Vec<(usize, usize)>,
    pub wl2_classes: usize,
    pub wl2_histogram: Vec<(usize, usize)>,
    pub structure: StructureVerdicts,
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ControllableIsoVerdict {
    Isomorphic { permutation: Vec<usize> },
    NotIsomorphic,
    NotApplicable { reason: String },
}

#[derive(Debug, Serialize)]
pub struct CompareReport {
    pub v: &'static str,
    pub command: &'static str,
    pub left: String,
    pub right: String,
    pub isomorphic: bool,
    pub isomorphism: Option<Vec<usize>>,
    pub c2: bool,
    pub c3: bool,
    pub cospectral: bool,
    pub generalized_cospectral: bool,
    pub walk_equivalent: bool,
    pub controllable_iso: ControllableIsoVerdict,
}

#[derive(Debug, Serialize)]
pub struct EquivReport {
    pub v: &'static str,
    pub command: &'static str,
    pub logic: String,
    pub left: String,
    pub right: String,
    pub equivalent: bool,
    pub left_histogram: Vec<(usize, usize)>,
    pub right_histogram: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct StructureReport {
    pub v: &'static str,
    pub command: &'static str,
    pub graph: String,
    pub n: usize,
    pub regular_degree: Option<usize>,
    pub connected: bool,
    #[serde(flatten)]
    pub verdicts: StructureVerdicts,
}

#[derive(Debug, Serialize)]
pub struct ClosureClass {
    pub color: usize,
    pub size: usize,
    pub symmetric: bool,
    /// 0/1 rows of the class indicator matrix, one string per row.
    pub rows: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ClosureReport {
    pub v: &'static str,
    pub command: &'static str,
    pub graph: String,
    pub n: usize,
    pub class_count: usize,
    pub rounds: usize,
    pub basis: Vec<ClosureClass>,
}

#[derive(Debug, Serialize)]
pub struct EvalReport {
    pub v: &'static str,
    pub command: &'static str,
    pub graph: String,
    pub formula: String,
    pub bindings: Vec<(String, usize)>,
    pub value: bool,
}

#[derive(Debug, Serialize)]
pub struct FormulaReport {
    pub v: &'static str,
    pub command: &'static str,
    pub kind: String,
    pub params: Vec<(String, String)>,
    pub variables: usize,
    pub nodes: usize,
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct PebbleMove {
    pub pebble: usize,
    pub side: String,
    pub vertex: usize,
}

#[derive(Debug, Serialize)]
pub struct PebbleReport {
    pub v: &'static str,
    pub command: &'static str,
    pub left: String,
    pub right: String,
    pub pebbles: usize,
    pub winner: String,
    pub spoiler_moves: Option<Vec<PebbleMove>>,
}

#[derive(Debug, Serialize)]
pub struct EnumerateReport {
    pub v: &'static str,
    pub command: &'static str,
    pub n: usize,
    pub count: usize,
}

/// One JSON line of a verification suite's output.
#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SuiteLine {
    /// A counterexample to the claim under test.
    Violation { v: &'static str, suite: String, left: String, right: String, detail: String },
    /// A discovery the suite reports without judging (fig1's pairs).
    Pair {
        v: &'static str,
        suite: String,
        n: usize,
        left: String,
        right: String,
        detail: String,
    },
    Summary {
        v: &'static str,
        suite: String,
        corpus: String,
        graphs: usize,
        pairs_examined: usize,
        checks: usize,
        violations: usize,
        pass: bool,
        notes: Vec<String>,
    },
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types always serialize")
}

fn histogram_line(hist: &[(usize, usize)]) -> String {
    let cells: Vec<String> = hist.iter().map(|(c, k)| format!("{c}:{k}")).collect();
    cells.join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn pretty_analyze(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {}  (n = {}, edges = {})\n", r.graph, r.n, r.edges));
    match r.regular_degree {
        Some(k) => out.push_str(&format!("regular of degree {k}\n")),
        None => out.push_str(&format!("degree sequence {:?}\n", r.degree_sequence)),
    }
    out.push_str(&format!("connected: {}\n", yes_no(r.connected)));
    out.push_str(&format!("char poly:            {}\n", r.char_poly));
    out.push_str(&format!("complement char poly: {}\n", r.complement_char_poly));
    out.push_str(&format!("controllable: {}\n", yes_no(r.controllable)));
    out.push_str(&format!(
        "vertex refinement: {} classes  [{}]\n",
        r.wl1_classes,
        histogram_line(&r.wl1_histogram)
    ));
    out.push_str(&format!(
        "pair refinement:   {} classes  [{}]\n",
        r.wl2_classes,
        histogram_line(&r.wl2_histogram)
    ));
    out.push_str(&pretty_structure_verdicts(&r.structure));
    out
}

fn pretty_structure_verdicts(s: &StructureVerdicts) -> String {
    let mut out = String::new();
    match s.srg {
        Some([n, k, a, c]) => out.push_str(&format!("strongly regular: ({n},{k},{a},{c})\n")),
        None => out.push_str("strongly regular: no\n"),
    }
    match (s.distance_regular, &s.intersection_array, &s.drg_violation) {
        (Some(true), Some(arr), _) => {
            out.push_str(&format!("distance-regular: yes, intersection array {arr}\n"))
        }
        (Some(false), _, Some(why)) => {
            out.push_str(&format!("distance-regular: no ({why})\n"))
        }
        _ => out.push_str("distance-regular: not defined (disconnected)\n"),
    }
    out.push_str(&format!(
        "quotient-polynomial: {} ({} walk classes, algebra dimension {})\n",
        yes_no(s.quotient_polynomial),
        s.walk_classes,
        s.algebra_dimension
    ));
    out
}

pub fn pretty_compare(r: &CompareReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("left:  {}\nright: {}\n", r.left, r.right));
    out.push_str(&format!("isomorphic:              {}", yes_no(r.isomorphic)));
    if let Some(p) = &r.isomorphism {
        out.push_str(&format!("  via {p:?}"));
    }
    out.push('\n');
    out.push_str(&format!("c2 equivalent:           {}\n", yes_no(r.c2)));
    out.push_str(&format!("c3 equivalent:           {}\n", yes_no(r.c3)));
    out.push_str(&format!("cospectral:              {}\n", yes_no(r.cospectral)));
    out.push_str(&format!("generalized cospectral:  {}\n", yes_no(r.generalized_cospectral)));
    out.push_str(&format!("walk equivalent:         {}\n", yes_no(r.walk_equivalent)));
    match &r.controllable_iso {
        ControllableIsoVerdict::Isomorphic { permutation } => {
            out.push_str(&format!("walk-matrix reconstruction: isomorphic via {permutation:?}\n"))
        }
        ControllableIsoVerdict::NotIsomorphic => {
            out.push_str("walk-matrix reconstruction: not isomorphic\n")
        }
        ControllableIsoVerdict::NotApplicable { reason } => {
            out.push_str(&format!("walk-matrix reconstruction: not applicable ({reason})\n"))
        }
    }
    out
}

pub fn pretty_equiv(r: &EquivReport) -> String {
    format!(
        "{} equivalent: {}\nleft histogram:  [{}]\nright histogram: [{}]\n",
        r.logic,
        yes_no(r.equivalent),
        histogram_line(&r.left_histogram),
        histogram_line(&r.right_histogram)
    )
}

pub fn pretty_structure(r: &StructureReport) -> String {
    let mut out = format!("graph {}  (n = {})\n", r.graph, r.n);
    match r.regular_degree {
        Some(k) => out.push_str(&format!("regular of degree {k}\n")),
        None => out.push_str("not regular\n"),
    }
    out.push_str(&format!("connected: {}\n", yes_no(r.connected)));
    out.push_str(&pretty_structure_verdicts(&r.verdicts));
    out
}

pub fn pretty_closure(r: &ClosureReport) -> String {
    let mut out = format!(
        "graph {}  (n = {}): {} classes after {} rounds\n",
        r.graph, r.n, r.class_count, r.rounds
    );
    for class in &r.basis {
        out.push_str(&format!(
            "class {}  size {}  {}\n",
            class.color,
            class.size,
            if class.symmetric { "symmetric" } else { "asymmetric" }
        ));
        for row in &class.rows {
            out.push_str(&format!("  {row}\n"));
        }
    }
    out
}

pub fn pretty_eval(r: &EvalReport) -> String {
    let bindings: Vec<String> = r.bindings.iter().map(|(v, u)| format!("{v}={u}")).collect();
    format!(
        "{}\non {} with [{}]: {}\n",
        r.formula,
        r.graph,
        bindings.join(", "),
        r.value
    )
}

pub fn pretty_pebble(r: &PebbleReport) -> String {
    let mut out = format!("{} pebbles: {} wins\n", r.pebbles, r.winner);
    if let Some(moves) = &r.spoiler_moves {
        for m in moves {
            out.push_str(&format!("  pebble {} on {} vertex {}\n", m.pebble, m.side, m.vertex));
        }
    }
    out
}

pub fn pretty_suite_line(line: &SuiteLine) -> String {
    match line {
        SuiteLine::Violation { suite, left, right, detail, .. } => {
            format!("VIOLATION [{suite}] {left} vs {right}: {detail}")
        }
        SuiteLine::Pair { suite, n, left, right, detail, .. } => {
            format!("pair [{suite}] n={n} {left} vs {right}: {detail}")
        }
        SuiteLine::Summary {
            suite,
            corpus,
            graphs,
            pairs_examined,
            checks,
            violations,
            pass,
            notes,
            ..
        } => {
            let mut out = format!(
                "suite {suite} over {corpus}: {graphs} graphs, {pairs_examined} pairs examined, \
                 {checks} checks, {violations} violations -> {}",
                if *pass { "PASS" } else { "FAIL" }
            );
            for note in notes {
                out.push_str(&format!("\n  note: {note}"));
            }
            out
        }
    }
}
