//! Named graph families with their standard labeled constructions.

use std::fmt;
use std::str::FromStr;

use super::graph6::MAX_GRAPH6_VERTICES;
use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("unknown generator `{0}`")]
    UnknownName(String),
    #[error("generator `{name}` expects {expected} parameter(s), got {found}")]
    Arity { name: String, expected: &'static str, found: usize },
    #[error("malformed parameter `{text}` for generator `{name}`")]
    MalformedParameter { name: String, text: String },
    #[error("invalid parameter for `{name}`: {reason}")]
    BadParameter { name: &'static str, reason: String },
}

/// A named construction plus its parameters, written `name` or `name:a,b,...`
/// (e.g. `cycle:6`, `paley:13`, `rook:4,4`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Hypercube(usize),
    Petersen,
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
    Dodecahedron,
    /// The rook's graph on an m × m board: the Cartesian square of K_m.
    Rook(usize),
    Shrikhande,
    Paley(usize),
    CubicPaley(usize),
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorSpec::*;
        match self {
            Cycle(n) => write!(f, "cycle:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteMultipartite(parts) => {
                write!(f, "complete_multipartite:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Hypercube(d) => write!(f, "hypercube:{d}"),
            Petersen => write!(f, "petersen"),
            Tetrahedron => write!(f, "tetrahedron"),
            Cube => write!(f, "cube"),
            Octahedron => write!(f, "octahedron"),
            Icosahedron => write!(f, "icosahedron"),
            Dodecahedron => write!(f, "dodecahedron"),
            Rook(m) => write!(f, "rook:{m},{m}"),
            Shrikhande => write!(f, "shrikhande"),
            Paley(q) => write!(f, "paley:{q}"),
            CubicPaley(q) => write!(f, "cubic_paley:{q}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, GeneratorError> {
        let (name, args) = match s.split_once(':') {
            Some((name, rest)) => {
                let mut args = Vec::new();
                for piece in rest.split(',') {
                    let v: usize = piece.trim().parse().map_err(|_| {
                        GeneratorError::MalformedParameter {
                            name: name.to_string(),
                            text: piece.trim().to_string(),
                        }
                    })?;
                    args.push(v);
                }
                (name, args)
            }
            None => (s, Vec::new()),
        };
        let arity = |expected: &'static str, want: usize| -> Result<(), GeneratorError> {
            if args.len() == want {
                Ok(())
            } else {
                Err(GeneratorError::Arity { name: name.to_string(), expected, found: args.len() })
            }
        };
        use GeneratorSpec::*;
        let spec = match name {
            "cycle" => {
                arity("1", 1)?;
                Cycle(args[0])
            }
            "path" => {
                arity("1", 1)?;
                Path(args[0])
            }
            "complete" => {
                arity("1", 1)?;
                Complete(args[0])
            }
            "complete_multipartite" => {
                if args.is_empty() {
                    return Err(GeneratorError::Arity {
                        name: name.to_string(),
                        expected: "at least 1",
                        found: 0,
                    });
                }
                CompleteMultipartite(args.clone())
            }
            "hypercube" => {
                arity("1", 1)?;
                Hypercube(args[0])
            }
            "petersen" => {
                arity("0", 0)?;
                Petersen
            }
            "tetrahedron" => {
                arity("0", 0)?;
                Tetrahedron
            }
            "cube" => {
                arity("0", 0)?;
                Cube
            }
            "octahedron" => {
                arity("0", 0)?;
                Octahedron
            }
            "icosahedron" => {
                arity("0", 0)?;
                Icosahedron
            }
            "dodecahedron" => {
                arity("0", 0)?;
                Dodecahedron
            }
            "rook" => {
                arity("2", 2)?;
                if args[0] != args[1] {
                    return Err(GeneratorError::BadParameter {
                        name: "rook",
                        reason: format!(
                            "only square boards are supported, got {}x{}",
                            args[0], args[1]
                        ),
                    });
                }
                Rook(args[0])
            }
            "shrikhande" => {
                arity("0", 0)?;
                Shrikhande
            }
            "paley" => {
                arity("1", 1)?;
                Paley(args[0])
            }
            "cubic_paley" => {
                arity("1", 1)?;
                CubicPaley(args[0])
            }
            other => return Err(GeneratorError::UnknownName(other.to_string())),
        };
        Ok(spec)
    }
}

/// Builds the labeled graph a spec describes, validating its parameters.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GeneratorError> {
    use GeneratorSpec::*;
    let g = match spec {
        Cycle(n) => {
            if *n < 3 {
                return Err(GeneratorError::BadParameter {
                    name: "cycle",
                    reason: format!("n = {n} violates n >= 3"),
                });
            }
            check_size("cycle", *n)?;
            let mut g = Graph::empty(*n);
            for i in 0..*n {
                g.add_edge(i, (i + 1) % n);
            }
            g
        }
        Path(n) => {
            if *n == 0 {
                return Err(GeneratorError::BadParameter {
                    name: "path",
                    reason: "n = 0 violates n >= 1".to_string(),
                });
            }
            check_size("path", *n)?;
            let mut g = Graph::empty(*n);
            for i in 1..*n {
                g.add_edge(i - 1, i);
            }
            g
        }
        Complete(n) => {
            check_size("complete", *n)?;
            complete(*n)
        }
        CompleteMultipartite(parts) => {
            if parts.iter().any(|&p| p == 0) {
                return Err(GeneratorError::BadParameter {
                    name: "complete_multipartite",
                    reason: "every part must be nonempty".to_string(),
                });
            }
            let n: usize = parts.iter().sum();
            check_size("complete_multipartite", n)?;
            let mut g = Graph::empty(n);
            let mut part_of = Vec::with_capacity(n);
            for (idx, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(idx).take(p));
            }
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        Hypercube(d) => hypercube(*d)?,
        Petersen => generalized_petersen(5, 2),
        Tetrahedron => complete(4),
        Cube => hypercube(3)?,
        Octahedron => generate(&CompleteMultipartite(vec![2, 2, 2]))?,
        Icosahedron => icosahedron(),
        Dodecahedron => generalized_petersen(10, 2),
        Rook(m) => {
            if *m == 0 {
                return Err(GeneratorError::BadParameter {
                    name: "rook",
                    reason: "m = 0 violates m >= 1".to_string(),
                });
            }
            check_size("rook", m.saturating_mul(*m))?;
            let mut g = Graph::empty(m * m);
            for u in 0..m * m {
                for v in u + 1..m * m {
                    if u / m == v / m || u % m == v % m {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        Shrikhande => {
            // Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
            let at = |i: usize, j: usize| (i % 4) * 4 + (j % 4);
            let mut g = Graph::empty(16);
            for i in 0..4 {
                for j in 0..4 {
                    let v = at(i, j);
                    g.add_edge(v, at(i + 1, j));
                    g.add_edge(v, at(i, j + 1));
                    g.add_edge(v, at(i + 1, j + 1));
                }
            }
            g
        }
        Paley(q) => {
            if q % 4 != 1 {
                return Err(GeneratorError::BadParameter {
                    name: "paley",
                    reason: format!("q = {q} violates q ≡ 1 (mod 4)"),
                });
            }
            if !is_prime(*q) {
                return Err(GeneratorError::BadParameter {
                    name: "paley",
                    reason: format!("q = {q} is not prime"),
                });
            }
            check_size("paley", *q)?;
            residue_graph(*q, 2)
        }
        CubicPaley(q) => {
            if q % 3 != 1 {
                return Err(GeneratorError::BadParameter {
                    name: "cubic_paley",
                    reason: format!("q = {q} violates q ≡ 1 (mod 3)"),
                });
            }
            if !is_prime(*q) {
                return Err(GeneratorError::BadParameter {
                    name: "cubic_paley",
                    reason: format!("q = {q} is not prime"),
                });
            }
            // -1 must be a cube so that i-j and j-i are cubes together; for a
            // prime q ≡ 1 (mod 3) this forces (q-1)/3 even (automatic for odd
            // q, but checked so the requirement is explicit).
            if ((q - 1) / 3) % 2 != 0 {
                return Err(GeneratorError::BadParameter {
                    name: "cubic_paley",
                    reason: format!("q = {q} violates (q-1)/3 ≡ 0 (mod 2)"),
                });
            }
            check_size("cubic_paley", *q)?;
            residue_graph(*q, 3)
        }
    };
    Ok(g)
}

fn check_size(name: &'static str, n: usize) -> Result<(), GeneratorError> {
    if n > MAX_GRAPH6_VERTICES {
        return Err(GeneratorError::BadParameter {
            name,
            reason: format!("{n} vertices exceeds the supported maximum {MAX_GRAPH6_VERTICES}"),
        });
    }
    Ok(())
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

fn hypercube(d: usize) -> Result<Graph, GeneratorError> {
    if d > 14 {
        return Err(GeneratorError::BadParameter {
            name: "hypercube",
            reason: format!("d = {d} gives 2^{d} vertices, exceeding the supported maximum"),
        });
    }
    let n = 1usize << d;
    let mut g = Graph::empty(n);
    for v in 0..n {
        for bit in 0..d {
            let u = v ^ (1 << bit);
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// GP(n, k): outer n-cycle 0..n, spokes to n..2n, inner vertices joined at
/// index distance k.
fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut g = Graph::empty(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    g
}

/// Two apexes over a pentagonal antiprism: 0 above ring 1..=5, 11 below ring
/// 6..=10, each upper ring vertex joined to two consecutive lower ones.
fn icosahedron() -> Graph {
    let mut g = Graph::empty(12);
    for j in 0..5 {
        let upper = 1 + j;
        let lower = 6 + j;
        g.add_edge(0, upper);
        g.add_edge(11, lower);
        g.add_edge(upper, 1 + (j + 1) % 5);
        g.add_edge(lower, 6 + (j + 1) % 5);
        g.add_edge(upper, lower);
        g.add_edge(upper, 6 + (j + 1) % 5);
    }
    g
}

/// Connection by nonzero e-th power residues: i ~ j iff i - j = x^e (mod q)
/// for some nonzero x.
fn residue_graph(q: usize, e: u32) -> Graph {
    let mut residue = vec![false; q];
    for x in 1..q as u64 {
        let mut p = 1u64;
        for _ in 0..e {
            p = p * x % q as u64;
        }
        residue[p as usize] = true;
    }
    let mut g = Graph::empty(q);
    for i in 0..q {
        for j in i + 1..q {
            if residue[j - i] {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        generate(&s.parse::<GeneratorSpec>().unwrap()).unwrap()
    }

    #[test]
    fn spec_strings_roundtrip() {
        for s in [
            "cycle:6",
            "path:4",
            "complete:5",
            "complete_multipartite:2,2,2",
            "hypercube:3",
            "petersen",
            "tetrahedron",
            "cube",
            "octahedron",
            "icosahedron",
            "dodecahedron",
            "rook:4,4",
            "shrikhande",
            "paley:13",
            "cubic_paley:13",
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn spec_parse_errors() {
        assert_eq!(
            "wheel:5".parse::<GeneratorSpec>(),
            Err(GeneratorError::UnknownName("wheel".to_string()))
        );
        assert_eq!(
            "cycle".parse::<GeneratorSpec>(),
            Err(GeneratorError::Arity { name: "cycle".to_string(), expected: "1", found: 0 })
        );
        assert_eq!(
            "cycle:3,4".parse::<GeneratorSpec>(),
            Err(GeneratorError::Arity { name: "cycle".to_string(), expected: "1", found: 2 })
        );
        assert!(matches!(
            "cycle:x".parse::<GeneratorSpec>(),
            Err(GeneratorError::MalformedParameter { .. })
        ));
        assert!(matches!(
            "rook:3,4".parse::<GeneratorSpec>(),
            Err(GeneratorError::BadParameter { name: "rook", .. })
        ));
    }

    #[test]
    fn paley_13() {
        let g = build("paley:13");
        assert_eq!(g.vertex_count(), 13);
        assert_eq!(g.regular_degree(), Some(6));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn cubic_paley_13() {
        let g = build("cubic_paley:13");
        assert_eq!(g.vertex_count(), 13);
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 5, 8, 12]);
    }

    #[test]
    fn residue_parameter_checks_name_the_violated_condition() {
        let err = generate(&GeneratorSpec::Paley(12)).unwrap_err();
        assert_eq!(
            err.to_string(),
            "invalid parameter for `paley`: q = 12 violates q ≡ 1 (mod 4)"
        );
        let err = generate(&GeneratorSpec::Paley(9)).unwrap_err();
        assert!(err.to_string().contains("q = 9 is not prime"));
        let err = generate(&GeneratorSpec::CubicPaley(11)).unwrap_err();
        assert!(err.to_string().contains("q = 11 violates q ≡ 1 (mod 3)"));
    }

    #[test]
    fn platonic_solids() {
        let tetra = build("tetrahedron");
        assert_eq!((tetra.vertex_count(), tetra.edge_count()), (4, 6));

        let cube = build("cube");
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));
        assert_eq!(cube.regular_degree(), Some(3));
        // Bipartite by bit parity, diameter 3.
        for (u, v) in cube.edges() {
            assert_ne!(u.count_ones() % 2, v.count_ones() % 2);
        }
        let dist = cube.bfs_distances(0);
        assert_eq!(dist.iter().map(|d| d.unwrap()).max(), Some(3));

        let octa = build("octahedron");
        assert_eq!((octa.vertex_count(), octa.edge_count()), (6, 12));
        assert_eq!(octa.regular_degree(), Some(4));
        assert_eq!(octa.complement().edges(), vec![(0, 1), (2, 3), (4, 5)]);

        let icosa = build("icosahedron");
        assert_eq!((icosa.vertex_count(), icosa.edge_count()), (12, 30));
        assert_eq!(icosa.regular_degree(), Some(5));
        let dist = icosa.bfs_distances(0);
        assert_eq!(dist.iter().map(|d| d.unwrap()).max(), Some(3));

        let dodeca = build("dodecahedron");
        assert_eq!((dodeca.vertex_count(), dodeca.edge_count()), (20, 30));
        assert_eq!(dodeca.regular_degree(), Some(3));
        let dist = dodeca.bfs_distances(0);
        assert_eq!(dist.iter().map(|d| d.unwrap()).max(), Some(5));
    }

    #[test]
    fn petersen_is_triangle_free_and_cubic() {
        let g = build("petersen");
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert_eq!(g.regular_degree(), Some(3));
        for (u, v) in g.edges() {
            for w in 0..10 {
                assert!(!(g.has_edge(u, w) && g.has_edge(v, w)), "triangle {u},{v},{w}");
            }
        }
    }

    #[test]
    fn shrikhande_vs_rook() {
        let s = build("shrikhande");
        let r = build("rook:4,4");
        for g in [&s, &r] {
            assert_eq!(g.vertex_count(), 16);
            assert_eq!(g.regular_degree(), Some(6));
        }
        // Row 0 of the board is a 4-clique.
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(r.has_edge(u, v));
            }
        }
        // The Shrikhande graph has no 4-clique.
        for a in 0..16 {
            for b in a + 1..16 {
                if !s.has_edge(a, b) {
                    continue;
                }
                for c in b + 1..16 {
                    if !(s.has_edge(a, c) && s.has_edge(b, c)) {
                        continue;
                    }
                    for d in c + 1..16 {
                        assert!(
                            !(s.has_edge(a, d) && s.has_edge(b, d) && s.has_edge(c, d)),
                            "4-clique {a},{b},{c},{d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn small_hypercubes() {
        assert_eq!(build("hypercube:0").vertex_count(), 1);
        let k2 = build("hypercube:1");
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let c4 = build("hypercube:2");
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.regular_degree(), Some(2));
    }

    #[test]
    fn degenerate_sizes_are_rejected() {
        assert!(generate(&GeneratorSpec::Cycle(2)).is_err());
        assert!(generate(&GeneratorSpec::Path(0)).is_err());
        assert!(generate(&GeneratorSpec::Rook(0)).is_err());
        assert!(generate(&GeneratorSpec::Hypercube(20)).is_err());
    }
}
