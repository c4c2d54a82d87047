//! Counting first-order logic over graphs: a shared-subformula DAG, a
//! concrete-syntax parser and printer, an evaluator with counting
//! quantifiers, and builders for the walk-counting, distance, and
//! distance-regularity formula families.
//!
//! Formulas are nodes in an [`Arena`]. Construction hash-conses every node
//! kind except `And`/`Or` (whose child lists rarely repeat but number in the
//! millions for large walk counts), and applies sound simplifications —
//! dropping `false` disjuncts, collapsing conjunctions containing `false` —
//! so unsatisfiable branches of the inductive constructions vanish instead
//! of exploding. Nodes are 16 bytes; child lists live in one shared pool.

mod build;
mod parse;
mod print;

pub use build::{
    build_closed_walk_sentence, build_distance_formula, build_drg_sentence, build_walk_formula,
    integer_partitions, DistanceBuilder, Partition, PartitionSet, WalkBuilder,
};
pub use parse::{parse_formula, parse_formula_in, ParseError};
pub use print::{print_formula, print_formula_with_cap, DEFAULT_PRINT_CAP};

use std::collections::HashMap;
use std::sync::Arc;

use crate::graph::Graph;

/// Variables are interned per arena; at most [`MAX_VARIABLES`] distinct names.
pub type VarId = u16;

/// Free- and bound-variable sets are u64 bitmasks over `VarId`.
pub const MAX_VARIABLES: usize = 64;

/// Default cap on arena size; builders abort with
/// [`FormulaError::NodeBudget`] beyond it. Large closed-walk sentences
/// legitimately need more — callers opt in via [`Arena::with_budget`].
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeId(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct ListRef {
    offset: u32,
    len: u32,
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Node {
    Bottom,
    Edge(VarId, VarId),
    Eq(VarId, VarId),
    Not(NodeId),
    And(ListRef),
    Or(ListRef),
    Implies(NodeId, NodeId),
    Exists(VarId, NodeId),
    Forall(VarId, NodeId),
    CountAtLeast(u32, VarId, NodeId),
    CountExact(u32, VarId, NodeId),
}

/// Hash-cons key: every node kind except `And`/`Or`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum ConsKey {
    Bottom,
    Edge(VarId, VarId),
    Eq(VarId, VarId),
    Not(u32),
    Implies(u32, u32),
    Exists(VarId, u32),
    Forall(VarId, u32),
    CountAtLeast(u32, VarId, u32),
    CountExact(u32, VarId, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("formula construction exceeded the node budget of {budget} nodes")]
    NodeBudget { budget: usize },
    #[error("formulas support at most {MAX_VARIABLES} distinct variables")]
    TooManyVariables,
    #[error("printed formula exceeds {cap} bytes; shared subformulas expand exponentially")]
    PrintTooLarge { cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound free variable `{name}`")]
    UnboundVariable { name: String },
    #[error("environment binds `{name}` to vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { name: String, vertex: usize, n: usize },
}

/// Node store with hash-consing and structural simplification. All formula
/// construction goes through the methods here; node ids are only meaningful
/// together with the arena that produced them.
#[derive(Debug)]
pub struct Arena {
    nodes: Vec<Node>,
    lists: Vec<NodeId>,
    free_masks: Vec<u64>,
    names: Vec<String>,
    name_ids: HashMap<String, VarId>,
    cons: HashMap<ConsKey, NodeId>,
    budget: usize,
}

impl Default for Arena {
    fn default() -> Self {
        Self::new()
    }
}

impl Arena {
    pub fn new() -> Self {
        Self::with_budget(DEFAULT_NODE_BUDGET)
    }

    pub fn with_budget(budget: usize) -> Self {
        Arena {
            nodes: Vec::new(),
            lists: Vec::new(),
            free_masks: Vec::new(),
            names: Vec::new(),
            name_ids: HashMap::new(),
            cons: HashMap::new(),
            budget,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Interns a variable name.
    pub fn var(&mut self, name: &str) -> Result<VarId, FormulaError> {
        if let Some(&id) = self.name_ids.get(name) {
            return Ok(id);
        }
        if self.names.len() >= MAX_VARIABLES {
            return Err(FormulaError::TooManyVariables);
        }
        let id = self.names.len() as VarId;
        self.names.push(name.to_string());
        self.name_ids.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn var_name(&self, v: VarId) -> &str {
        &self.names[v as usize]
    }

    pub(crate) fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0 as usize]
    }

    pub(crate) fn list(&self, r: ListRef) -> &[NodeId] {
        &self.lists[r.offset as usize..(r.offset + r.len) as usize]
    }

    /// Free-variable bitmask of a node.
    pub(crate) fn free_mask(&self, id: NodeId) -> u64 {
        self.free_masks[id.0 as usize]
    }

    fn push(&mut self, node: Node, mask: u64) -> Result<NodeId, FormulaError> {
        if self.nodes.len() >= self.budget {
            return Err(FormulaError::NodeBudget { budget: self.budget });
        }
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(node);
        self.free_masks.push(mask);
        Ok(id)
    }

    fn cons(&mut self, key: ConsKey, node: Node, mask: u64) -> Result<NodeId, FormulaError> {
        if let Some(&id) = self.cons.get(&key) {
            return Ok(id);
        }
        let id = self.push(node, mask)?;
        self.cons.insert(key, id);
        Ok(id)
    }

    fn is_bottom(&self, id: NodeId) -> bool {
        matches!(self.node(id), Node::Bottom)
    }

    /// The canonical truth node ¬false (the grammar has no truth literal).
    fn is_truth(&self, id: NodeId) -> bool {
        matches!(*self.node(id), Node::Not(c) if self.is_bottom(c))
    }

    pub fn bottom(&mut self) -> Result<NodeId, FormulaError> {
        self.cons(ConsKey::Bottom, Node::Bottom, 0)
    }

    pub fn truth(&mut self) -> Result<NodeId, FormulaError> {
        let b = self.bottom()?;
        self.not(b)
    }

    /// Adjacency atom; operands are normalized (the relation is symmetric).
    pub fn edge(&mut self, a: VarId, b: VarId) -> Result<NodeId, FormulaError> {
        let (a, b) = (a.min(b), a.max(b));
        self.cons(ConsKey::Edge(a, b), Node::Edge(a, b), var_bit(a) | var_bit(b))
    }

    /// Equality atom; operands normalized as for `edge`.
    pub fn eq(&mut self, a: VarId, b: VarId) -> Result<NodeId, FormulaError> {
        let (a, b) = (a.min(b), a.max(b));
        self.cons(ConsKey::Eq(a, b), Node::Eq(a, b), var_bit(a) | var_bit(b))
    }

    pub fn not(&mut self, f: NodeId) -> Result<NodeId, FormulaError> {
        // ¬¬f collapses; double negations otherwise accumulate in δ chains.
        if let Node::Not(inner) = *self.node(f) {
            return Ok(inner);
        }
        self.cons(ConsKey::Not(f.0), Node::Not(f), self.free_mask(f))
    }

    pub fn and(&mut self, children: Vec<NodeId>) -> Result<NodeId, FormulaError> {
        let mut kept = Vec::with_capacity(children.len());
        for c in children {
            if self.is_bottom(c) {
                return self.bottom();
            }
            if !self.is_truth(c) {
                kept.push(c);
            }
        }
        match kept.len() {
            0 => self.truth(),
            1 => Ok(kept[0]),
            _ => {
                let mask = kept.iter().map(|&c| self.free_mask(c)).fold(0, |a, b| a | b);
                let list = self.alloc_list(&kept)?;
                self.push(Node::And(list), mask)
            }
        }
    }

    pub fn or(&mut self, children: Vec<NodeId>) -> Result<NodeId, FormulaError> {
        let mut kept = Vec::with_capacity(children.len());
        for c in children {
            if self.is_truth(c) {
                return self.truth();
            }
            if !self.is_bottom(c) {
                kept.push(c);
            }
        }
        match kept.len() {
            0 => self.bottom(),
            1 => Ok(kept[0]),
            _ => {
                let mask = kept.iter().map(|&c| self.free_mask(c)).fold(0, |a, b| a | b);
                let list = self.alloc_list(&kept)?;
                self.push(Node::Or(list), mask)
            }
        }
    }

    pub fn implies(&mut self, a: NodeId, b: NodeId) -> Result<NodeId, FormulaError> {
        if self.is_bottom(a) || self.is_truth(b) {
            return self.truth();
        }
        if self.is_truth(a) {
            return Ok(b);
        }
        if self.is_bottom(b) {
            return self.not(a);
        }
        let mask = self.free_mask(a) | self.free_mask(b);
        self.cons(ConsKey::Implies(a.0, b.0), Node::Implies(a, b), mask)
    }

    pub fn exists(&mut self, v: VarId, f: NodeId) -> Result<NodeId, FormulaError> {
        if self.is_bottom(f) {
            return self.bottom();
        }
        let mask = self.free_mask(f) & !var_bit(v);
        self.cons(ConsKey::Exists(v, f.0), Node::Exists(v, f), mask)
    }

    pub fn forall(&mut self, v: VarId, f: NodeId) -> Result<NodeId, FormulaError> {
        if self.is_truth(f) {
            return self.truth();
        }
        let mask = self.free_mask(f) & !var_bit(v);
        self.cons(ConsKey::Forall(v, f.0), Node::Forall(v, f), mask)
    }

    pub fn count_at_least(
        &mut self,
        r: u32,
        v: VarId,
        f: NodeId,
    ) -> Result<NodeId, FormulaError> {
        if r == 0 {
            return self.truth();
        }
        if self.is_bottom(f) {
            return self.bottom();
        }
        let mask = self.free_mask(f) & !var_bit(v);
        self.cons(ConsKey::CountAtLeast(r, v, f.0), Node::CountAtLeast(r, v, f), mask)
    }

    pub fn count_exact(&mut self, r: u32, v: VarId, f: NodeId) -> Result<NodeId, FormulaError> {
        if self.is_bottom(f) {
            return if r == 0 { self.truth() } else { self.bottom() };
        }
        let mask = self.free_mask(f) & !var_bit(v);
        self.cons(ConsKey::CountExact(r, v, f.0), Node::CountExact(r, v, f), mask)
    }

    fn alloc_list(&mut self, children: &[NodeId]) -> Result<ListRef, FormulaError> {
        let offset = self.lists.len();
        if offset + children.len() > u32::MAX as usize {
            return Err(FormulaError::NodeBudget { budget: self.budget });
        }
        self.lists.extend_from_slice(children);
        Ok(ListRef { offset: offset as u32, len: children.len() as u32 })
    }

    /// All variable names mentioned by the subgraph under `root` (free or
    /// bound), as a bitmask. Linear in the DAG via a visited set.
    pub(crate) fn all_vars_mask(&self, root: NodeId) -> u64 {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![root];
        let mut mask = 0u64;
        while let Some(id) = stack.pop() {
            if std::mem::replace(&mut seen[id.0 as usize], true) {
                continue;
            }
            match *self.node(id) {
                Node::Bottom => {}
                Node::Edge(a, b) | Node::Eq(a, b) => mask |= var_bit(a) | var_bit(b),
                Node::Not(f) => stack.push(f),
                Node::And(l) | Node::Or(l) => stack.extend_from_slice(self.list(l)),
                Node::Implies(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Node::Exists(v, f)
                | Node::Forall(v, f)
                | Node::CountAtLeast(_, v, f)
                | Node::CountExact(_, v, f) => {
                    mask |= var_bit(v);
                    stack.push(f);
                }
            }
        }
        mask
    }
}

fn var_bit(v: VarId) -> u64 {
    1u64 << v
}

/// A root in a frozen arena. Cheap to clone; formulas from one arena share
/// storage.
#[derive(Debug, Clone)]
pub struct Formula {
    arena: Arc<Arena>,
    root: NodeId,
}

impl Formula {
    pub fn from_parts(arena: Arc<Arena>, root: NodeId) -> Self {
        assert!((root.0 as usize) < arena.nodes.len(), "root outside arena");
        Formula { arena, root }
    }

    pub fn arena(&self) -> &Arc<Arena> {
        &self.arena
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// Number of distinct variable names occurring in the formula, bound or
    /// free; the walk and distance builders always report at most 3.
    pub fn count_variables(&self) -> usize {
        self.arena.all_vars_mask(self.root).count_ones() as usize
    }

    /// Names of free variables, sorted.
    pub fn free_variables(&self) -> Vec<String> {
        let mask = self.arena.free_mask(self.root);
        let mut names: Vec<String> = (0..MAX_VARIABLES as u16)
            .filter(|&v| mask & var_bit(v) != 0)
            .map(|v| self.arena.var_name(v).to_string())
            .collect();
        names.sort();
        names
    }
}

/// Largest dense memo table (entries) before a quantifier node falls back to
/// a hash map keyed by the projected environment.
const DENSE_MEMO_CAP: usize = 1 << 22;

enum Memo {
    Dense { vars: Vec<VarId>, table: Vec<u8> },
    Sparse { vars: Vec<VarId>, map: HashMap<Vec<u16>, bool> },
}

/// Evaluates formulas from one arena against one graph, memoizing quantifier
/// nodes on the restriction of the environment to their free variables.
/// Connective and atom nodes are recomputed — they cost one table lookup per
/// child, and caching them would dwarf the arena itself.
pub struct Evaluator<'a> {
    arena: &'a Arena,
    graph: &'a Graph,
    memo: Vec<Option<Box<Memo>>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(arena: &'a Arena, graph: &'a Graph) -> Self {
        let mut memo = Vec::new();
        memo.resize_with(arena.nodes.len(), || None);
        Evaluator { arena, graph, memo }
    }

    /// Evaluates a root under named bindings. Every free variable of the
    /// root must be bound to a vertex; extra bindings are ignored.
    pub fn eval(&mut self, root: NodeId, env: &[(&str, usize)]) -> Result<bool, EvalError> {
        let n = self.graph.vertex_count();
        let mut bound = vec![None; self.arena.names.len()];
        for &(name, vertex) in env {
            if let Some(&v) = self.arena.name_ids.get(name) {
                if vertex >= n {
                    return Err(EvalError::VertexOutOfRange {
                        name: name.to_string(),
                        vertex,
                        n,
                    });
                }
                bound[v as usize] = Some(vertex as u16);
            }
        }
        let free = self.arena.free_mask(root);
        for v in 0..self.arena.names.len() {
            if free & var_bit(v as VarId) != 0 && bound[v].is_none() {
                return Err(EvalError::UnboundVariable {
                    name: self.arena.var_name(v as VarId).to_string(),
                });
            }
        }
        Ok(self.run(root, &mut bound))
    }

    fn run(&mut self, id: NodeId, env: &mut Vec<Option<u16>>) -> bool {
        match *self.arena.node(id) {
            Node::Bottom => false,
            Node::Edge(a, b) => {
                let (u, v) = (env[a as usize].unwrap(), env[b as usize].unwrap());
                self.graph.has_edge(u as usize, v as usize)
            }
            Node::Eq(a, b) => env[a as usize].unwrap() == env[b as usize].unwrap(),
            Node::Not(f) => !self.run(f, env),
            Node::And(l) => {
                (0..l.len).all(|i| {
                    let c = self.arena.lists[(l.offset + i) as usize];
                    self.run(c, env)
                })
            }
            Node::Or(l) => {
                (0..l.len).any(|i| {
                    let c = self.arena.lists[(l.offset + i) as usize];
                    self.run(c, env)
                })
            }
            Node::Implies(a, b) => !self.run(a, env) || self.run(b, env),
            Node::Exists(v, f) => self.quantifier(id, env, |me, env| {
                let n = me.graph.vertex_count() as u16;
                let old = env[v as usize];
                let mut result = false;
                for w in 0..n {
                    env[v as usize] = Some(w);
                    if me.run(f, env) {
                        result = true;
                        break;
                    }
                }
                env[v as usize] = old;
                result
            }),
            Node::Forall(v, f) => self.quantifier(id, env, |me, env| {
                let n = me.graph.vertex_count() as u16;
                let old = env[v as usize];
                let mut result = true;
                for w in 0..n {
                    env[v as usize] = Some(w);
                    if !me.run(f, env) {
                        result = false;
                        break;
                    }
                }
                env[v as usize] = old;
                result
            }),
            Node::CountAtLeast(r, v, f) => self.quantifier(id, env, |me, env| {
                let n = me.graph.vertex_count() as u16;
                let old = env[v as usize];
                let mut count = 0u32;
                for w in 0..n {
                    env[v as usize] = Some(w);
                    if me.run(f, env) {
                        count += 1;
                        if count >= r {
                            break;
                        }
                    }
                }
                env[v as usize] = old;
                count >= r
            }),
            Node::CountExact(r, v, f) => self.quantifier(id, env, |me, env| {
                let n = me.graph.vertex_count() as u16;
                let old = env[v as usize];
                let mut count = 0u32;
                for w in 0..n {
                    env[v as usize] = Some(w);
                    if me.run(f, env) {
                        count += 1;
                        // Witnesses are counted exactly; only overflow past
                        // r+1 settles the comparison early.
                        if count > r {
                            break;
                        }
                    }
                }
                env[v as usize] = old;
                count == r
            }),
        }
    }

    fn quantifier(
        &mut self,
        id: NodeId,
        env: &mut Vec<Option<u16>>,
        compute: impl FnOnce(&mut Self, &mut Vec<Option<u16>>) -> bool,
    ) -> bool {
        let n = self.graph.vertex_count();
        if self.memo[id.0 as usize].is_none() {
            let mask = self.arena.free_mask(id);
            let vars: Vec<VarId> =
                (0..MAX_VARIABLES as u16).filter(|&v| mask & var_bit(v) != 0).collect();
            let table_size = n.checked_pow(vars.len() as u32).filter(|&s| s <= DENSE_MEMO_CAP);
            let memo = match table_size {
                Some(size) if n > 0 => Memo::Dense { vars, table: vec![0; size.max(1)] },
                _ => Memo::Sparse { vars, map: HashMap::new() },
            };
            self.memo[id.0 as usize] = Some(Box::new(memo));
        }
        // Index the memo by the values of the node's free variables.
        enum Slot {
            Dense(usize),
            Sparse(Vec<u16>),
        }
        let slot = match self.memo[id.0 as usize].as_deref().unwrap() {
            Memo::Dense { vars, table } => {
                let mut idx = 0usize;
                for &v in vars {
                    idx = idx * n + env[v as usize].unwrap() as usize;
                }
                match table[idx] {
                    1 => return false,
                    2 => return true,
                    _ => Slot::Dense(idx),
                }
            }
            Memo::Sparse { vars, map } => {
                let key: Vec<u16> = vars.iter().map(|&v| env[v as usize].unwrap()).collect();
                match map.get(&key) {
                    Some(&b) => return b,
                    None => Slot::Sparse(key),
                }
            }
        };
        let value = compute(self, env);
        match (self.memo[id.0 as usize].as_deref_mut().unwrap(), slot) {
            (Memo::Dense { table, .. }, Slot::Dense(idx)) => {
                table[idx] = if value { 2 } else { 1 };
            }
            (Memo::Sparse { map, .. }, Slot::Sparse(key)) => {
                map.insert(key, value);
            }
            _ => unreachable!("memo representation is fixed at first use"),
        }
        value
    }
}

/// One-shot evaluation. For many roots or repeated queries on one graph,
/// construct an [`Evaluator`] directly and reuse it.
pub fn evaluate(g: &Graph, f: &Formula, env: &[(&str, usize)]) -> Result<bool, EvalError> {
    Evaluator::new(f.arena(), g).eval(f.root(), env)
}
