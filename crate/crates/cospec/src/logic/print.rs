//! Precedence-aware printer emitting the same concrete syntax the parser
//! accepts. Shared subformulas are expanded at every occurrence, so output
//! length is capped; reparsing the output reconstructs the original DAG.

use super::{Arena, Formula, FormulaError, Node, NodeId};

/// Default output cap in bytes.
pub const DEFAULT_PRINT_CAP: usize = 1 << 20;

pub fn print_formula(f: &Formula) -> Result<String, FormulaError> {
    print_formula_with_cap(f, DEFAULT_PRINT_CAP)
}

pub fn print_formula_with_cap(f: &Formula, cap: usize) -> Result<String, FormulaError> {
    let mut out = String::new();
    render(f.arena(), f.root(), 0, cap, &mut out)?;
    Ok(out)
}

/// Binding strength: quantifiers 0 (maximal scope), `->` 1, `|` 2, `&` 3,
/// `!` 4, atoms 5. A node weaker than its context gets parentheses.
fn prec(node: &Node) -> u8 {
    match node {
        Node::Exists(..) | Node::Forall(..) | Node::CountAtLeast(..) | Node::CountExact(..) => 0,
        Node::Implies(..) => 1,
        Node::Or(..) => 2,
        Node::And(..) => 3,
        Node::Not(..) => 4,
        Node::Bottom | Node::Edge(..) | Node::Eq(..) => 5,
    }
}

fn render(
    arena: &Arena,
    id: NodeId,
    ctx: u8,
    cap: usize,
    out: &mut String,
) -> Result<(), FormulaError> {
    if out.len() > cap {
        return Err(FormulaError::PrintTooLarge { cap });
    }
    let node = arena.node(id);
    let me = prec(node);
    let parens = me < ctx;
    if parens {
        out.push('(');
    }
    match *node {
        Node::Bottom => out.push_str("false"),
        Node::Edge(a, b) => {
            out.push_str("E(");
            out.push_str(arena.var_name(a));
            out.push(',');
            out.push_str(arena.var_name(b));
            out.push(')');
        }
        Node::Eq(a, b) => {
            out.push_str(arena.var_name(a));
            out.push('=');
            out.push_str(arena.var_name(b));
        }
        Node::Not(f) => {
            out.push('!');
            render(arena, f, 4, cap, out)?;
        }
        Node::And(l) => {
            for (i, &c) in arena.list(l).iter().enumerate() {
                if i > 0 {
                    out.push_str(" & ");
                }
                render(arena, c, 4, cap, out)?;
            }
        }
        Node::Or(l) => {
            for (i, &c) in arena.list(l).iter().enumerate() {
                if i > 0 {
                    out.push_str(" | ");
                }
                render(arena, c, 3, cap, out)?;
            }
        }
        Node::Implies(a, b) => {
            render(arena, a, 2, cap, out)?;
            out.push_str(" -> ");
            // Right-associative: the consequent prints at this level.
            render(arena, b, 1, cap, out)?;
        }
        Node::Exists(v, f) => {
            out.push_str("exists ");
            out.push_str(arena.var_name(v));
            out.push_str(". ");
            render(arena, f, 0, cap, out)?;
        }
        Node::Forall(v, f) => {
            out.push_str("forall ");
            out.push_str(arena.var_name(v));
            out.push_str(". ");
            render(arena, f, 0, cap, out)?;
        }
        Node::CountAtLeast(r, v, f) => {
            out.push_str("exists>=");
            out.push_str(&r.to_string());
            out.push(' ');
            out.push_str(arena.var_name(v));
            out.push_str(". ");
            render(arena, f, 0, cap, out)?;
        }
        Node::CountExact(r, v, f) => {
            out.push_str("exists=");
            out.push_str(&r.to_string());
            out.push(' ');
            out.push_str(arena.var_name(v));
            out.push_str(". ");
            render(arena, f, 0, cap, out)?;
        }
    }
    if parens {
        out.push(')');
    }
    if out.len() > cap {
        return Err(FormulaError::PrintTooLarge { cap });
    }
    Ok(())
}
