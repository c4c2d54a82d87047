use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cospec::graph::{
    are_isomorphic, enumerate_nonisomorphic, generate, write_graph6, GeneratorSpec, Graph,
    Permutation,
};
use cospec::logic::{
    build_closed_walk_sentence, build_distance_formula, build_drg_sentence, build_walk_formula,
    evaluate, parse_formula, print_formula, Formula,
};
use cospec::pebble::{pebble_game_outcome, Side, Winner};
use cospec::spectra::{cospectral, generalized_cospectral, is_controllable, walk_equivalent};
use cospec::wl::{c2_equivalence, c3_equivalence, wl2_refinement};

use cospec_cli::input::{resolve_graph, resolve_text};
use cospec_cli::report::{self, to_json};
use cospec_cli::suites::{default_max_n, run_suite, Corpus, SUITE_NAMES};
use cospec_cli::{controllable_iso_verdict, refinement_summary, structure_verdicts};

/// Exact spectral, combinatorial, and logical equivalence tools for finite
/// graphs. GRAPH arguments take a literal graph6 record, `@FILE` for the
/// first record of a file, or `-` for standard input. Commands print one
/// JSON object (or JSON lines for `verify`) with a schema version field;
/// `--pretty` switches to human-readable text.
#[derive(Parser)]
#[command(name = "cospec", version, max_term_width = 100)]
struct Cli {
    /// Render human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single-graph report: polynomials, refinements, structure verdicts.
    Analyze {
        /// graph6 record, @FILE, or `-`.
        graph: String,
    },
    /// Every pairwise equivalence verdict for two graphs.
    Compare {
        left: String,
        right: String,
    },
    /// Counting-logic equivalence at width 2 or 3, with side histograms.
    Equiv {
        #[arg(long, value_enum)]
        logic: LogicFragment,
        left: String,
        right: String,
    },
    /// Structure detection: strong regularity, distance-regularity,
    /// quotient-polynomial test.
    Structure {
        graph: String,
    },
    /// 0/1 basis of the stable pair partition (the coherent closure).
    Closure {
        graph: String,
    },
    /// Evaluate a first-order formula with counting quantifiers on a graph.
    Eval {
        /// Formula text, or @FILE for a file holding the formula.
        #[arg(long)]
        formula: String,
        #[arg(long)]
        graph: String,
        /// Free-variable binding VAR=VERTEX; repeat for several variables.
        #[arg(long = "bind", value_name = "VAR=VERTEX")]
        bindings: Vec<String>,
    },
    /// Print a member of one of the built-in formula families.
    Formula {
        #[command(subcommand)]
        kind: FormulaKind,
    },
    /// Play the k-pebble game; prints the winner and, when the Spoiler
    /// wins, one winning line of play.
    Pebble {
        left: String,
        right: String,
        #[arg(short = 'k', long)]
        pebbles: usize,
    },
    /// Print the graph6 record of a named construction (cycle:6, paley:13,
    /// rook:4,4, shrikhande, ...).
    Generate {
        spec: String,
    },
    /// Print all nonisomorphic graphs on n vertices, one graph6 per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the class count as JSON.
        #[arg(long)]
        count_only: bool,
    },
    /// Run a verification suite; exits 0 when the suite passes, 1 when it
    /// finds violations.
    Verify {
        /// One of: thm1, thm6, lem2, cor2, thm5, thm4, fig1.
        suite: String,
        /// Enumerated-corpus bound (per-suite default; at most 7).
        #[arg(long)]
        max_n: Option<usize>,
        /// graph6 corpus file, one record per line, instead of enumerating.
        #[arg(long)]
        file: Option<String>,
        /// Seed for the randomized relabeling property test (cor2 only);
        /// never affects verdict logic.
        #[arg(long, default_value_t = 2026)]
        seed: u64,
        /// Worker threads for pair checking (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicFragment {
    C2,
    C3,
}

#[derive(Subcommand)]
enum FormulaKind {
    /// Formula over free x, y: the number of walks of length LEN from x to
    /// y is exactly COUNT.
    Walk {
        #[arg(long)]
        len: u32,
        #[arg(long)]
        count: u32,
    },
    /// Sentence: the number of closed walks of length LEN is exactly COUNT.
    ClosedWalk {
        #[arg(long)]
        len: u32,
        #[arg(long)]
        count: u32,
    },
    /// Formula over free x, y: the distance from x to y is exactly DISTANCE.
    Distance {
        #[arg(long)]
        distance: usize,
    },
    /// Sentence satisfied exactly by the connected graphs whose
    /// intersection array is ARRAY, e.g. "{3,2,1;1,2,3}".
    Drg {
        #[arg(long)]
        array: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] cospec_cli::input::InputError),
    #[error(transparent)]
    Generator(#[from] cospec::graph::GeneratorError),
    #[error(transparent)]
    Enumerate(#[from] cospec::graph::EnumerateError),
    #[error(transparent)]
    FormulaSyntax(#[from] cospec::logic::ParseError),
    #[error(transparent)]
    Formula(#[from] cospec::logic::FormulaError),
    #[error(transparent)]
    Eval(#[from] cospec::logic::EvalError),
    #[error(transparent)]
    Array(#[from] cospec::algebraic::ArrayError),
    #[error(transparent)]
    Pebble(#[from] cospec::pebble::PebbleError),
    #[error(transparent)]
    Suite(#[from] cospec_cli::suites::SuiteError),
    #[error("invalid binding `{0}`: expected VAR=VERTEX with a nonnegative vertex index")]
    Binding(String),
    #[error("worker pool: {0}")]
    Workers(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Clap exits 2 on usage errors and 0 for --help/--version.
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("cospec: error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Analyze { graph } => cmd_analyze(&graph, pretty),
        Command::Compare { left, right } => cmd_compare(&left, &right, pretty),
        Command::Equiv { logic, left, right } => cmd_equiv(logic, &left, &right, pretty),
        Command::Structure { graph } => cmd_structure(&graph, pretty),
        Command::Closure { graph } => cmd_closure(&graph, pretty),
        Command::Eval { formula, graph, bindings } => {
            cmd_eval(&formula, &graph, &bindings, pretty)
        }
        Command::Formula { kind } => cmd_formula(kind, pretty),
        Command::Pebble { left, right, pebbles } => cmd_pebble(&left, &right, pebbles, pretty),
        Command::Generate { spec } => cmd_generate(&spec),
        Command::Enumerate { n, count_only } => cmd_enumerate(n, count_only, pretty),
        Command::Verify { suite, max_n, file, seed, workers } => {
            cmd_verify(&suite, max_n, file.as_deref(), seed, workers, pretty)
        }
    }
}

fn emit<T: Serialize>(
    report: &T,
    pretty: bool,
    render: impl FnOnce(&T) -> String,
) -> Result<ExitCode, CliError> {
    if pretty {
        print!("{}", render(report));
    } else {
        println!("{}", to_json(report));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_analyze(graph: &str, pretty: bool) -> Result<ExitCode, CliError> {
    let (record, g) = resolve_graph(graph)?;
    let n = g.vertex_count();
    let mut degree_sequence: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
    let char_poly = g.adjacency_matrix().char_poly().expect("adjacency matrices are square");
    let complement_char_poly =
        g.complement().adjacency_matrix().char_poly().expect("adjacency matrices are square");
    let (wl1_classes, wl1_histogram, wl2_classes, wl2_histogram) = refinement_summary(&g);
    let report = report::AnalyzeReport {
        v: report::SCHEMA_VERSION,
        command: "analyze",
        graph: record,
        n,
        edges: g.edge_count(),
        degree_sequence,
        regular_degree: g.regular_degree(),
        connected: g.is_connected(),
        char_poly: char_poly.to_string(),
        complement_char_poly: complement_char_poly.to_string(),
        controllable: is_controllable(&g),
        wl1_classes,
        wl1_histogram,
        wl2_classes,
        wl2_histogram,
        structure: structure_verdicts(&g),
    };
    emit(&report, pretty, report::pretty_analyze)
}

fn cmd_compare(left: &str, right: &str, pretty: bool) -> Result<ExitCode, CliError> {
    let (left_record, g) = resolve_graph(left)?;
    let (right_record, h) = resolve_graph(right)?;
    // Equal records denote the same labeled graph, where the identity is an
    // isomorphism; otherwise search for one.
    let isomorphism = if g == h {
        Some(Permutation::identity(g.vertex_count()))
    } else {
        are_isomorphic(&g, &h)
    };
    let report = report::CompareReport {
        v: report::SCHEMA_VERSION,
        command: "compare",
        left: left_record,
        right: right_record,
        isomorphic: isomorphism.is_some(),
        isomorphism: isomorphism.map(|p| p.images().to_vec()),
        c2: cospec::wl::c2_equivalent(&g, &h),
        c3: cospec::wl::c3_equivalent(&g, &h),
        cospectral: cospectral(&g, &h),
        generalized_cospectral: generalized_cospectral(&g, &h),
        walk_equivalent: walk_equivalent(&g, &h),
        controllable_iso: controllable_iso_verdict(&g, &h),
    };
    emit(&report, pretty, report::pretty_compare)
}

fn cmd_equiv(
    logic: LogicFragment,
    left: &str,
    right: &str,
    pretty: bool,
) -> Result<ExitCode, CliError> {
    let (left_record, g) = resolve_graph(left)?;
    let (right_record, h) = resolve_graph(right)?;
    let (name, verdict) = match logic {
        LogicFragment::C2 => ("c2", c2_equivalence(&g, &h)),
        LogicFragment::C3 => ("c3", c3_equivalence(&g, &h)),
    };
    let report = report::EquivReport {
        v: report::SCHEMA_VERSION,
        command: "equiv",
        logic: name.to_string(),
        left: left_record,
        right: right_record,
        equivalent: verdict.equivalent,
        left_histogram: verdict.left_histogram,
        right_histogram: verdict.right_histogram,
    };
    emit(&report, pretty, report::pretty_equiv)
}

fn cmd_structure(graph: &str, pretty: bool) -> Result<ExitCode, CliError> {
    let (record, g) = resolve_graph(graph)?;
    let report = report::StructureReport {
        v: report::SCHEMA_VERSION,
        command: "structure",
        graph: record,
        n: g.vertex_count(),
        regular_degree: g.regular_degree(),
        connected: g.is_connected(),
        verdicts: structure_verdicts(&g),
    };
    emit(&report, pretty, report::pretty_structure)
}

fn cmd_closure(graph: &str, pretty: bool) -> Result<ExitCode, CliError> {
    let (record, g) = resolve_graph(graph)?;
    let pc = wl2_refinement(&g);
    let n = pc.n;
    let basis = (0..pc.class_count)
        .map(|color| {
            let size = pc.colors.iter().filter(|&&c| c == color).count();
            let symmetric =
                (0..n).all(|u| (0..n).all(|v| (pc.color(u, v) == color) == (pc.color(v, u) == color)));
            let rows = (0..n)
                .map(|u| {
                    (0..n).map(|v| if pc.color(u, v) == color { '1' } else { '0' }).collect()
                })
                .collect();
            report::ClosureClass { color, size, symmetric, rows }
        })
        .collect();
    let report = report::ClosureReport {
        v: report::SCHEMA_VERSION,
        command: "closure",
        graph: record,
        n,
        class_count: pc.class_count,
        rounds: pc.rounds,
        basis,
    };
    emit(&report, pretty, report::pretty_closure)
}

fn cmd_eval(
    formula: &str,
    graph: &str,
    bindings: &[String],
    pretty: bool,
) -> Result<ExitCode, CliError> {
    let text = resolve_text(formula)?;
    let parsed = parse_formula(&text)?;
    let (record, g) = resolve_graph(graph)?;
    let mut env = Vec::with_capacity(bindings.len());
    for b in bindings {
        let (var, val) = b.split_once('=').ok_or_else(|| CliError::Binding(b.clone()))?;
        let vertex: usize =
            val.trim().parse().map_err(|_| CliError::Binding(b.clone()))?;
        env.push((var.trim().to_string(), vertex));
    }
    let env_refs: Vec<(&str, usize)> = env.iter().map(|(v, u)| (v.as_str(), *u)).collect();
    let value = evaluate(&g, &parsed, &env_refs)?;
    let report = report::EvalReport {
        v: report::SCHEMA_VERSION,
        command: "eval",
        graph: record,
        formula: print_formula(&parsed)?,
        bindings: env,
        value,
    };
    emit(&report, pretty, report::pretty_eval)
}

fn cmd_formula(kind: FormulaKind, pretty: bool) -> Result<ExitCode, CliError> {
    let (name, params, formula): (&str, Vec<(String, String)>, Formula) = match kind {
        FormulaKind::Walk { len, count } => (
            "walk",
            vec![("len".into(), len.to_string()), ("count".into(), count.to_string())],
            build_walk_formula(len, count)?,
        ),
        FormulaKind::ClosedWalk { len, count } => (
            "closed-walk",
            vec![("len".into(), len.to_string()), ("count".into(), count.to_string())],
            build_closed_walk_sentence(len, count)?,
        ),
        FormulaKind::Distance { distance } => (
            "distance",
            vec![("distance".into(), distance.to_string())],
            build_distance_formula(distance)?,
        ),
        FormulaKind::Drg { array } => {
            let arr: cospec::algebraic::IntersectionArray = array.parse()?;
            (
                "drg",
                vec![("array".into(), arr.to_string())],
                build_drg_sentence(&arr)?,
            )
        }
    };
    let report = report::FormulaReport {
        v: report::SCHEMA_VERSION,
        command: "formula",
        kind: name.to_string(),
        params,
        variables: formula.count_variables(),
        nodes: formula.arena().node_count(),
        text: print_formula(&formula)?,
    };
    emit(&report, pretty, |r| format!("{}\n", r.text))
}

fn cmd_pebble(left: &str, right: &str, pebbles: usize, pretty: bool) -> Result<ExitCode, CliError> {
    let (left_record, g) = resolve_graph(left)?;
    let (right_record, h) = resolve_graph(right)?;
    let outcome = pebble_game_outcome(&g, &h, pebbles)?;
    let (winner, moves) = match outcome.winner {
        Winner::Duplicator => ("duplicator", None),
        Winner::Spoiler => (
            "spoiler",
            Some(
                outcome
                    .spoiler_moves
                    .iter()
                    .map(|m| report::PebbleMove {
                        pebble: m.pebble,
                        side: match m.side {
                            Side::Left => "left".to_string(),
                            Side::Right => "right".to_string(),
                        },
                        vertex: m.vertex,
                    })
                    .collect(),
            ),
        ),
    };
    let report = report::PebbleReport {
        v: report::SCHEMA_VERSION,
        command: "pebble",
        left: left_record,
        right: right_record,
        pebbles,
        winner: winner.to_string(),
        spoiler_moves: moves,
    };
    emit(&report, pretty, report::pretty_pebble)
}

fn cmd_generate(spec: &str) -> Result<ExitCode, CliError> {
    let parsed: GeneratorSpec = spec.parse()?;
    let g: Graph = generate(&parsed)?;
    println!("{}", write_graph6(&g));
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(n: usize, count_only: bool, pretty: bool) -> Result<ExitCode, CliError> {
    let graphs = enumerate_nonisomorphic(n)?;
    if count_only {
        let report = report::EnumerateReport {
            v: report::SCHEMA_VERSION,
            command: "enumerate",
            n,
            count: graphs.len(),
        };
        return emit(&report, pretty, |r| format!("{} graphs on {} vertices\n", r.count, r.n));
    }
    for g in &graphs {
        println!("{}", write_graph6(g));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    file: Option<&str>,
    seed: u64,
    workers: Option<usize>,
    pretty: bool,
) -> Result<ExitCode, CliError> {
    if !SUITE_NAMES.contains(&suite) {
        return Err(cospec_cli::suites::SuiteError::UnknownSuite(suite.to_string()).into());
    }
    if let Some(w) = workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| CliError::Workers(e.to_string()))?;
    }
    let corpus = match file {
        Some(path) => {
            if suite == "fig1" {
                return Err(cospec_cli::suites::SuiteError::FileUnsupported.into());
            }
            Corpus::from_file(path)?
        }
        None => Corpus::enumerated(max_n.unwrap_or_else(|| default_max_n(suite)))?,
    };
    let start = Instant::now();
    let run = run_suite(suite, &corpus, seed)?;
    // Timing must stay out of the reports so identical inputs give
    // byte-identical stdout; stderr carries it instead.
    eprintln!("cospec: suite {suite} finished in {:.3}s", start.elapsed().as_secs_f64());
    for line in &run.lines {
        if pretty {
            println!("{}", report::pretty_suite_line(line));
        } else {
            println!("{}", to_json(line));
        }
    }
    Ok(if run.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
