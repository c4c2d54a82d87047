//! Combinatorial structure detection: distance matrices, distance-regularity
//! with intersection arrays, strong regularity, walk-regular pair partitions,
//! and the quotient-polynomial test (class count = minimal-polynomial degree).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::graph::Graph;
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("graph is disconnected: no path joins vertex {u} and vertex {v}")]
    Disconnected { u: usize, v: usize },
}

/// The distance matrices A₀ = I, A₁ = A, …, A_d of a connected graph, where
/// d is the diameter; A_i is understood to be zero for i > d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrices {
    pub matrices: Vec<IntMatrix>,
    pub diameter: usize,
}

impl DistanceMatrices {
    /// A_i, with the zero matrix beyond the diameter.
    pub fn matrix(&self, i: usize) -> IntMatrix {
        self.matrices.get(i).cloned().unwrap_or_else(|| {
            let n = self.matrices[0].rows();
            IntMatrix::zeros(n, n)
        })
    }
}

pub fn distance_matrices(g: &Graph) -> Result<DistanceMatrices, StructureError> {
    if let Some((u, v)) = g.disconnected_witness() {
        return Err(StructureError::Disconnected { u, v });
    }
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|u| g.bfs_distances(u).into_iter().map(|d| d.expect("connected")).collect())
        .collect();
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut matrices = vec![IntMatrix::zeros(n, n); diameter + 1];
    for u in 0..n {
        for v in 0..n {
            matrices[dist[u][v]].set(u, v, BigInt::one());
        }
    }
    Ok(DistanceMatrices { matrices, diameter })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrayError {
    #[error("malformed intersection array: {0}")]
    Syntax(String),
    #[error("invalid intersection array: {0}")]
    Invalid(String),
}

/// An intersection array {b₀,…,b_{d−1}; c₁,…,c_d}. The derived quantities are
/// the degree k = b₀, the diameter d, and a_i = k − b_i − c_i with the
/// conventions b_d = c₀ = 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<usize>,
    c: Vec<usize>,
}

impl IntersectionArray {
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Result<Self, ArrayError> {
        if b.len() != c.len() {
            return Err(ArrayError::Invalid(format!(
                "b has {} entries but c has {}",
                b.len(),
                c.len()
            )));
        }
        if b.iter().chain(&c).any(|&x| x == 0) {
            return Err(ArrayError::Invalid("all entries must be positive".to_string()));
        }
        if let Some(&c1) = c.first() {
            if c1 != 1 {
                return Err(ArrayError::Invalid(format!("c_1 must be 1, got {c1}")));
            }
        }
        let arr = IntersectionArray { b, c };
        let k = arr.degree();
        for i in 0..=arr.diameter() {
            let (bi, ci) = (arr.b(i), arr.c(i));
            if bi + ci > k {
                return Err(ArrayError::Invalid(format!(
                    "a_{i} = k - b_{i} - c_{i} = {k} - {bi} - {ci} is negative"
                )));
            }
        }
        Ok(arr)
    }

    /// Valency k = b₀ (0 for the one-vertex array).
    pub fn degree(&self) -> usize {
        self.b.first().copied().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// b_i with the convention b_d = 0.
    pub fn b(&self, i: usize) -> usize {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// c_i with the convention c₀ = 0.
    pub fn c(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// a_i = k − b_i − c_i.
    pub fn a(&self, i: usize) -> usize {
        self.degree() - self.b(i) - self.c(i)
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    fn from_str(s: &str) -> Result<Self, ArrayError> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| ArrayError::Syntax("expected braces {b0,..;c1,..}".to_string()))?;
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| ArrayError::Syntax("expected ';' between b and c".to_string()))?;
        let nums = |part: &str| -> Result<Vec<usize>, ArrayError> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| ArrayError::Syntax(format!("bad entry `{}`", p.trim())))
                })
                .collect()
        };
        IntersectionArray::new(nums(bs)?, nums(cs)?)
    }
}

/// Which of the two distance-regularity counts failed to be constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    /// Neighbors of v one step closer to u (the c_i count).
    Toward,
    /// Neighbors of v one step farther from u (the b_i count).
    Away,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrgViolation {
    NotRegular { u: usize, degree_u: usize, v: usize, degree_v: usize },
    InconstantCount {
        kind: CountKind,
        distance: usize,
        pair1: (usize, usize),
        count1: usize,
        pair2: (usize, usize),
        count2: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrgOutcome {
    DistanceRegular(IntersectionArray),
    NotDistanceRegular(DrgViolation),
}

/// Tests distance-regularity: for every ordered pair at distance i, the
/// number of neighbors of the far vertex at distance i−1 (resp. i+1) from the
/// near one must depend on i alone. Returns the intersection array or the
/// first violation found (scanning distances ascending, pairs row-major).
pub fn drg_intersection_array(g: &Graph) -> Result<DrgOutcome, StructureError> {
    if let Some((u, v)) = g.disconnected_witness() {
        return Err(StructureError::Disconnected { u, v });
    }
    let n = g.vertex_count();
    if n == 0 {
        let arr = IntersectionArray::new(vec![], vec![]).expect("empty array is valid");
        return Ok(DrgOutcome::DistanceRegular(arr));
    }
    let k = g.degree(0);
    for v in 1..n {
        if g.degree(v) != k {
            let u = (0..n).find(|&u| g.degree(u) != g.degree(v)).expect("degrees differ");
            return Ok(DrgOutcome::NotDistanceRegular(DrgViolation::NotRegular {
                u,
                degree_u: g.degree(u),
                v,
                degree_v: g.degree(v),
            }));
        }
    }
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|u| g.bfs_distances(u).into_iter().map(|d| d.expect("connected")).collect())
        .collect();
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);

    // reference[i] = (c_i, b_i, first pair seen at distance i).
    let mut reference: Vec<Option<(usize, usize, (usize, usize))>> = vec![None; diameter + 1];
    for i in 1..=diameter {
        for u in 0..n {
            for v in 0..n {
                if dist[u][v] != i {
                    continue;
                }
                let mut toward = 0;
                let mut away = 0;
                for w in g.neighbors(v) {
                    if dist[u][w] == i - 1 {
                        toward += 1;
                    } else if dist[u][w] == i + 1 {
                        away += 1;
                    }
                }
                match reference[i] {
                    None => reference[i] = Some((toward, away, (u, v))),
                    Some((c, b, first)) => {
                        let (kind, count1, count2) = if toward != c {
                            (CountKind::Toward, c, toward)
                        } else if away != b {
                            (CountKind::Away, b, away)
                        } else {
                            continue;
                        };
                        return Ok(DrgOutcome::NotDistanceRegular(
                            DrgViolation::InconstantCount {
                                kind,
                                distance: i,
                                pair1: first,
                                count1,
                                pair2: (u, v),
                                count2,
                            },
                        ));
                    }
                }
            }
        }
    }
    let b: Vec<usize> = if diameter == 0 {
        Vec::new()
    } else {
        std::iter::once(k)
            .chain((1..diameter).map(|i| reference[i].expect("distance realized").1))
            .collect()
    };
    let c: Vec<usize> =
        (1..=diameter).map(|i| reference[i].expect("distance realized").0).collect();
    let arr = IntersectionArray::new(b, c)
        .expect("counts of a distance-regular graph form a valid array");
    Ok(DrgOutcome::DistanceRegular(arr))
}

/// Strong-regularity parameters (n, k, a, c): k-regular, adjacent pairs have
/// exactly a common neighbors, non-adjacent distinct pairs exactly c. Both
/// pair kinds must be realized, so complete and empty graphs yield none.
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.vertex_count();
    let k = g.regular_degree()?;
    let common = |u: usize, v: usize| g.neighbors(u).filter(|&w| g.has_edge(v, w)).count();
    let mut a: Option<usize> = None;
    let mut c: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let m = common(u, v);
            let slot = if g.has_edge(u, v) { &mut a } else { &mut c };
            match slot {
                None => *slot = Some(m),
                Some(seen) if *seen != m => return None,
                Some(_) => {}
            }
        }
    }
    Some((n, k, a?, c?))
}

/// One class of the walk-regular pair partition: every ordered pair in it has
/// the same vector ((A⁰)_{uv}, …, (A^d)_{uv}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    pub walk_vector: Vec<BigInt>,
    pub matrix: IntMatrix,
}

/// The finest walk-regular partition of V×V, classes ordered by
/// lexicographically smallest walk vector; d+1 is the minimal-polynomial
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPartition {
    pub d: usize,
    pub classes: Vec<PairClass>,
}

pub fn walk_regular_partition(g: &Graph) -> PairPartition {
    let n = g.vertex_count();
    if n == 0 {
        return PairPartition { d: 0, classes: Vec::new() };
    }
    let a = g.adjacency_matrix();
    let d = a.min_poly().expect("adjacency matrices are square").degree() - 1;
    let mut powers = Vec::with_capacity(d + 1);
    powers.push(IntMatrix::identity(n));
    for _ in 0..d {
        let next = powers.last().unwrap().mul(&a).expect("square matrices conform");
        powers.push(next);
    }
    let mut by_vector: std::collections::BTreeMap<Vec<BigInt>, IntMatrix> =
        std::collections::BTreeMap::new();
    for u in 0..n {
        for v in 0..n {
            let vector: Vec<BigInt> = powers.iter().map(|p| p.get(u, v).clone()).collect();
            by_vector
                .entry(vector)
                .or_insert_with(|| IntMatrix::zeros(n, n))
                .set(u, v, BigInt::one());
        }
    }
    let classes = by_vector
        .into_iter()
        .map(|(walk_vector, matrix)| PairClass { walk_vector, matrix })
        .collect();
    PairPartition { d, classes }
}

/// Verdict of the quotient-polynomial test: the adjacency algebra spans the
/// walk-regular classes iff the class count m equals d+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientPolynomialVerdict {
    pub quotient_polynomial: bool,
    /// m, the number of walk-regular classes.
    pub class_count: usize,
    /// d+1, the dimension of the adjacency algebra.
    pub algebra_dimension: usize,
}

pub fn is_quotient_polynomial(g: &Graph) -> QuotientPolynomialVerdict {
    if g.vertex_count() == 0 {
        return QuotientPolynomialVerdict {
            quotient_polynomial: true,
            class_count: 0,
            algebra_dimension: 0,
        };
    }
    let partition = walk_regular_partition(g);
    let m = partition.classes.len();
    let dim = partition.d + 1;
    assert!(m >= dim, "walk-regular classes cannot be fewer than the algebra dimension");
    QuotientPolynomialVerdict {
        quotient_polynomial: m == dim,
        class_count: m,
        algebra_dimension: dim,
    }
}
