//! Formula families over three variables: entry-counting formulas for
//! matrix powers of the adjacency matrix, exact-distance formulas, and
//! intersection-array sentences for distance-regularity.
//!
//! All constructions recycle the variables x, y, z. A subformula with its
//! first argument rebound to z is written ∃x(x=z ∧ ψ(x,y)), which keeps
//! every formula inside the three-variable fragment.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Arena, Formula, FormulaError, NodeId, VarId};
use crate::algebraic::IntersectionArray;

/// One integer partition in run-length form: (part, multiplicity) with
/// parts strictly decreasing.
pub type Partition = Vec<(u32, u32)>;

/// All partitions of a fixed integer, in descending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSet {
    pub partitions: Vec<Partition>,
}

impl PartitionSet {
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }
}

/// Partitions of `r`. The empty sum is the unique partition of 0.
pub fn integer_partitions(r: u32) -> PartitionSet {
    fn go(remaining: u32, max_part: u32, current: &mut Partition, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            for mult in (1..=remaining / part).rev() {
                current.push((part, mult));
                go(remaining - part * mult, part - 1, current, out);
                current.pop();
            }
        }
    }
    let mut partitions = Vec::new();
    go(r, r, &mut Vec::new(), &mut partitions);
    PartitionSet { partitions }
}

/// Builds the formulas ψ_ℓ^r ("the (x,y) entry of the ℓ-th adjacency power
/// equals r") and the sentences φ_ℓ^r ("the trace of the ℓ-th power equals
/// r") in a shared arena. Subformulas are memoized per builder, so families
/// over many r share almost everything below the top disjunction.
pub struct WalkBuilder<'a> {
    arena: &'a mut Arena,
    x: VarId,
    y: VarId,
    z: VarId,
    psi: HashMap<(u32, u32), NodeId>,
    rebound: HashMap<(u32, u32), NodeId>,
    count_body: HashMap<(u32, u32), NodeId>,
    guard: HashMap<(u32, Vec<u32>), NodeId>,
    diag: HashMap<(u32, u32), NodeId>,
    diag_guard: HashMap<(u32, Vec<u32>), NodeId>,
}

impl<'a> WalkBuilder<'a> {
    pub fn new(arena: &'a mut Arena) -> Result<Self, FormulaError> {
        let x = arena.var("x")?;
        let y = arena.var("y")?;
        let z = arena.var("z")?;
        Ok(WalkBuilder {
            arena,
            x,
            y,
            z,
            psi: HashMap::new(),
            rebound: HashMap::new(),
            count_body: HashMap::new(),
            guard: HashMap::new(),
            diag: HashMap::new(),
            diag_guard: HashMap::new(),
        })
    }

    /// ψ_len^r with free variables x and y.
    pub fn walk_formula(&mut self, len: u32, r: u32) -> Result<NodeId, FormulaError> {
        if len == 0 {
            return Err(FormulaError::InvalidParameter(
                "walk formulas require len >= 1".to_string(),
            ));
        }
        if let Some(&id) = self.psi.get(&(len, r)) {
            return Ok(id);
        }
        let id = if len == 1 {
            match r {
                0 => {
                    let e = self.arena.edge(self.x, self.y)?;
                    self.arena.not(e)?
                }
                1 => self.arena.edge(self.x, self.y)?,
                _ => self.arena.bottom()?,
            }
        } else {
            let prev = len - 1;
            let mut disjuncts = Vec::new();
            for partition in integer_partitions(r).partitions {
                let mut conj = Vec::with_capacity(partition.len() + 1);
                for &(part, mult) in &partition {
                    let body = self.neighbor_count_body(prev, part)?;
                    conj.push(self.arena.count_exact(mult, self.z, body)?);
                }
                conj.push(self.zero_guard(prev, &partition)?);
                disjuncts.push(self.arena.and(conj)?);
            }
            self.arena.or(disjuncts)?
        };
        self.psi.insert((len, r), id);
        Ok(id)
    }

    /// The sentence φ_len^r, true exactly when the number of closed walks of
    /// length `len` equals r.
    pub fn closed_walk_sentence(&mut self, len: u32, r: u32) -> Result<NodeId, FormulaError> {
        if len == 0 {
            return Err(FormulaError::InvalidParameter(
                "walk sentences require len >= 1".to_string(),
            ));
        }
        let mut disjuncts = Vec::new();
        for partition in integer_partitions(r).partitions {
            let mut conj = Vec::with_capacity(partition.len() + 1);
            for &(part, mult) in &partition {
                let d = self.diagonal(len, part)?;
                conj.push(self.arena.count_exact(mult, self.x, d)?);
            }
            conj.push(self.diagonal_guard(len, &partition)?);
            disjuncts.push(self.arena.and(conj)?);
        }
        self.arena.or(disjuncts)
    }

    /// ψ_len^part with x rebound to z: ∃x(x=z ∧ ψ(x,y)). Free: z, y.
    fn rebound_to_z(&mut self, len: u32, part: u32) -> Result<NodeId, FormulaError> {
        if let Some(&id) = self.rebound.get(&(len, part)) {
            return Ok(id);
        }
        let psi = self.walk_formula(len, part)?;
        let eq = self.arena.eq(self.x, self.z)?;
        let conj = self.arena.and(vec![eq, psi])?;
        let id = self.arena.exists(self.x, conj)?;
        self.rebound.insert((len, part), id);
        Ok(id)
    }

    /// E(x,z) ∧ ψ_len^part(z,y): one candidate step through a neighbor.
    fn neighbor_count_body(&mut self, len: u32, part: u32) -> Result<NodeId, FormulaError> {
        if let Some(&id) = self.count_body.get(&(len, part)) {
            return Ok(id);
        }
        let e = self.arena.edge(self.x, self.z)?;
        let at_z = self.rebound_to_z(len, part)?;
        let id = self.arena.and(vec![e, at_z])?;
        self.count_body.insert((len, part), id);
        Ok(id)
    }

    /// ∀z(E(x,z) → ψ_len^0(z,y) ∨ ⋁_parts ψ_len^part(z,y)): neighbors not
    /// counted by any partition class contribute zero. Shared between
    /// partitions with equal part sets.
    fn zero_guard(&mut self, len: u32, partition: &Partition) -> Result<NodeId, FormulaError> {
        let parts: Vec<u32> = partition.iter().map(|&(p, _)| p).collect();
        if let Some(&id) = self.guard.get(&(len, parts.clone())) {
            return Ok(id);
        }
        let mut alternatives = Vec::with_capacity(parts.len() + 1);
        alternatives.push(self.rebound_to_z(len, 0)?);
        for &part in &parts {
            alternatives.push(self.rebound_to_z(len, part)?);
        }
        let e = self.arena.edge(self.x, self.z)?;
        let disj = self.arena.or(alternatives)?;
        let body = self.arena.implies(e, disj)?;
        let id = self.arena.forall(self.z, body)?;
        self.guard.insert((len, parts), id);
        Ok(id)
    }

    /// ∃y(x=y ∧ ψ_len^part(x,y)): the diagonal entry at x equals part.
    fn diagonal(&mut self, len: u32, part: u32) -> Result<NodeId, FormulaError> {
        if let Some(&id) = self.diag.get(&(len, part)) {
            return Ok(id);
        }
        let psi = self.walk_formula(len, part)?;
        let eq = self.arena.eq(self.x, self.y)?;
        let conj = self.arena.and(vec![eq, psi])?;
        let id = self.arena.exists(self.y, conj)?;
        self.diag.insert((len, part), id);
        Ok(id)
    }

    /// ∀x(diag right0 ∨ ⋁_parts diag=part): vertices outside every counted
    /// class have diagonal entry zero.
    fn diagonal_guard(&mut self, len: u32, partition: &Partition) -> Result<NodeId, FormulaError> {
        let parts: Vec<u32> = partition.iter().map(|&(p, _)| p).collect();
        if let Some(&id) = self.diag_guard.get(&(len, parts.clone())) {
            return Ok(id);
        }
        let mut alternatives = Vec::with_capacity(parts.len() + 1);
        alternatives.push(self.diagonal(len, 0)?);
        for &part in &parts {
            alternatives.push(self.diagonal(len, part)?);
        }
        let disj = self.arena.or(alternatives)?;
        let id = self.arena.forall(self.x, disj)?;
        self.diag_guard.insert((len, parts), id);
        Ok(id)
    }
}

/// Builds exact-distance formulas δ_i and intersection-array sentences, all
/// within three variables.
pub struct DistanceBuilder<'a> {
    arena: &'a mut Arena,
    x: VarId,
    y: VarId,
    z: VarId,
    reach: Vec<NodeId>,
    exact: Vec<NodeId>,
}

impl<'a> DistanceBuilder<'a> {
    pub fn new(arena: &'a mut Arena) -> Result<Self, FormulaError> {
        let x = arena.var("x")?;
        let y = arena.var("y")?;
        let z = arena.var("z")?;
        Ok(DistanceBuilder { arena, x, y, z, reach: Vec::new(), exact: Vec::new() })
    }

    /// Walk formula: a walk of length exactly i joins x and y. Distance-i
    /// pairs are carved out by [`Self::exact_distance`], which rules out all
    /// shorter walks.
    fn walk_of_length(&mut self, i: usize) -> Result<NodeId, FormulaError> {
        while self.reach.len() <= i {
            let next = match self.reach.len() {
                0 => self.arena.eq(self.x, self.y)?,
                k => {
                    let prev = self.reach[k - 1];
                    // ∃z(E(x,z) ∧ ∃x(x=z ∧ walk_{k-1}(x,y)))
                    let eq = self.arena.eq(self.x, self.z)?;
                    let shift = self.arena.and(vec![eq, prev])?;
                    let inner = self.arena.exists(self.x, shift)?;
                    let e = self.arena.edge(self.x, self.z)?;
                    let body = self.arena.and(vec![e, inner])?;
                    self.arena.exists(self.z, body)?
                }
            };
            self.reach.push(next);
        }
        Ok(self.reach[i])
    }

    /// δ_i: the distance between x and y is exactly i.
    pub fn exact_distance(&mut self, i: usize) -> Result<NodeId, FormulaError> {
        while self.exact.len() <= i {
            let k = self.exact.len();
            let walk = self.walk_of_length(k)?;
            let mut conj = vec![walk];
            for j in 0..k {
                let shorter = self.reach[j];
                conj.push(self.arena.not(shorter)?);
            }
            let id = self.arena.and(conj)?;
            self.exact.push(id);
        }
        Ok(self.exact[i])
    }

    /// δ_dist with y rebound to z: ∃y(y=z ∧ δ_dist(x,y)). Free: x, z.
    fn exact_distance_at_z(&mut self, dist: usize) -> Result<NodeId, FormulaError> {
        let d = self.exact_distance(dist)?;
        let eq = self.arena.eq(self.y, self.z)?;
        let conj = self.arena.and(vec![eq, d])?;
        self.arena.exists(self.y, conj)
    }

    /// ∀x∀y(δ_i(x,y) → ∃^{=r}z(E(y,z) ∧ δ_inner(x,z))): every pair at
    /// distance i sees exactly r neighbors of y at distance `inner` from x.
    fn level_count(&mut self, i: usize, inner: usize, r: u32) -> Result<NodeId, FormulaError> {
        let here = self.exact_distance(i)?;
        let there = self.exact_distance_at_z(inner)?;
        let e = self.arena.edge(self.y, self.z)?;
        let body = self.arena.and(vec![e, there])?;
        let count = self.arena.count_exact(r, self.z, body)?;
        let imp = self.arena.implies(here, count)?;
        let inner_all = self.arena.forall(self.y, imp)?;
        self.arena.forall(self.x, inner_all)
    }

    /// The intersection-array sentence: a graph satisfies it iff it is
    /// connected with diameter exactly d and distance-regular with the given
    /// array.
    pub fn array_sentence(&mut self, arr: &IntersectionArray) -> Result<NodeId, FormulaError> {
        let d = arr.diameter();
        let mut conj = Vec::new();
        for i in 1..=d {
            conj.push(self.level_count(i - 1, i, arr.b(i - 1) as u32)?);
            conj.push(self.level_count(i, i - 1, arr.c(i) as u32)?);
        }
        // Connectivity: every pair is at one of the distances 0..=d.
        let mut level = Vec::with_capacity(d + 1);
        for j in 0..=d {
            level.push(self.exact_distance(j)?);
        }
        let any = self.arena.or(level)?;
        let inner = self.arena.forall(self.y, any)?;
        conj.push(self.arena.forall(self.x, inner)?);
        // Diameter exactly d: some pair at distance d, none at d+1.
        let at_d = self.exact_distance(d)?;
        let inner = self.arena.exists(self.y, at_d)?;
        conj.push(self.arena.exists(self.x, inner)?);
        let beyond = self.exact_distance(d + 1)?;
        let inner = self.arena.exists(self.y, beyond)?;
        let some = self.arena.exists(self.x, inner)?;
        conj.push(self.arena.not(some)?);
        self.arena.and(conj)
    }
}

/// ψ_len^r in a fresh arena with the default budget.
pub fn build_walk_formula(len: u32, r: u32) -> Result<Formula, FormulaError> {
    let mut arena = Arena::new();
    let root = WalkBuilder::new(&mut arena)?.walk_formula(len, r)?;
    Ok(Formula::from_parts(Arc::new(arena), root))
}

/// φ_len^r in a fresh arena with the default budget.
pub fn build_closed_walk_sentence(len: u32, r: u32) -> Result<Formula, FormulaError> {
    let mut arena = Arena::new();
    let root = WalkBuilder::new(&mut arena)?.closed_walk_sentence(len, r)?;
    Ok(Formula::from_parts(Arc::new(arena), root))
}

/// δ_i in a fresh arena.
pub fn build_distance_formula(i: usize) -> Result<Formula, FormulaError> {
    let mut arena = Arena::new();
    let root = DistanceBuilder::new(&mut arena)?.exact_distance(i)?;
    Ok(Formula::from_parts(Arc::new(arena), root))
}

/// The intersection-array sentence in a fresh arena.
pub fn build_drg_sentence(arr: &IntersectionArray) -> Result<Formula, FormulaError> {
    let mut arena = Arena::new();
    let root = DistanceBuilder::new(&mut arena)?.array_sentence(arr)?;
    Ok(Formula::from_parts(Arc::new(arena), root))
}
