//! Concrete-syntax parser.
//!
//! Grammar (precedence low to high, `->` right-associative, quantifiers
//! take maximal scope):
//!
//! ```text
//! formula := or ('->' formula)?
//! or      := and ('|' and)*
//! and     := unary ('&' unary)*
//! unary   := '!' unary | quantifier | atom
//! quant   := ('exists' count? | 'forall') var '.' formula
//! count   := '>=' integer | '=' integer
//! atom    := 'false' | 'E' '(' var ',' var ')' | var '=' var | '(' formula ')'
//! ```
//!
//! Free variables are permitted; query them via
//! [`Formula::free_variables`](super::Formula::free_variables).

use std::sync::Arc;

use super::{Arena, Formula, NodeId};

/// Syntax error with a 1-based byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

/// Parses a formula into a fresh arena with the default node budget.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut arena = Arena::new();
    let root = parse_formula_in(&mut arena, text)?;
    Ok(Formula::from_parts(Arc::new(arena), root))
}

/// Parses into an existing arena, sharing structure with whatever it already
/// holds.
pub fn parse_formula_in(arena: &mut Arena, text: &str) -> Result<NodeId, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { arena, tokens, pos: 0, eof_offset: text.len() + 1 };
    let root = p.formula()?;
    if let Some((_, offset)) = p.peek() {
        return Err(ParseError::new(offset, "unexpected trailing input"));
    }
    Ok(root)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Dot,
    Equals,
    Bang,
    Amp,
    Pipe,
    Arrow,
    AtLeast,
    Int(u32),
    Var(String),
    EdgeKw,
    ExistsKw,
    ForallKw,
    FalseKw,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let offset = i + 1;
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => push(&mut toks, Tok::LParen, offset, &mut i, 1),
            b')' => push(&mut toks, Tok::RParen, offset, &mut i, 1),
            b',' => push(&mut toks, Tok::Comma, offset, &mut i, 1),
            b'.' => push(&mut toks, Tok::Dot, offset, &mut i, 1),
            b'=' => push(&mut toks, Tok::Equals, offset, &mut i, 1),
            b'!' => push(&mut toks, Tok::Bang, offset, &mut i, 1),
            b'&' => push(&mut toks, Tok::Amp, offset, &mut i, 1),
            b'|' => push(&mut toks, Tok::Pipe, offset, &mut i, 1),
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    push(&mut toks, Tok::Arrow, offset, &mut i, 2);
                } else {
                    return Err(ParseError::new(offset, "expected `->`"));
                }
            }
            b'>' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    push(&mut toks, Tok::AtLeast, offset, &mut i, 2);
                } else {
                    return Err(ParseError::new(offset, "expected `>=`"));
                }
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value: u32 = digits
                    .parse()
                    .map_err(|_| ParseError::new(offset, format!("count `{digits}` too large")))?;
                toks.push((Tok::Int(value), offset));
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "exists" => Tok::ExistsKw,
                    "forall" => Tok::ForallKw,
                    "false" => Tok::FalseKw,
                    _ => Tok::Var(word.to_string()),
                };
                toks.push((tok, offset));
            }
            b'E' => push(&mut toks, Tok::EdgeKw, offset, &mut i, 1),
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(ParseError::new(offset, format!("unexpected character `{ch}`")));
            }
        }
    }
    Ok(toks)
}

fn push(toks: &mut Vec<(Tok, usize)>, tok: Tok, offset: usize, i: &mut usize, width: usize) {
    toks.push((tok, offset));
    *i += width;
}

struct Parser<'a> {
    arena: &'a mut Arena,
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    eof_offset: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(&Tok, usize)> {
        self.tokens.get(self.pos).map(|(t, o)| (t, *o))
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.eof_offset, |&(_, o)| o)
    }

    fn advance(&mut self) -> Option<(Tok, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().map(|(t, _)| t) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(ParseError::new(self.here(), format!("expected {what}")))
        }
    }

    fn lift<T>(&self, offset: usize, r: Result<T, super::FormulaError>) -> Result<T, ParseError> {
        r.map_err(|e| ParseError::new(offset, e.to_string()))
    }

    fn formula(&mut self) -> Result<NodeId, ParseError> {
        let offset = self.here();
        let lhs = self.or_expr()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.formula()?;
            let r = self.arena.implies(lhs, rhs);
            return self.lift(offset, r);
        }
        Ok(lhs)
    }

    fn or_expr(&mut self) -> Result<NodeId, ParseError> {
        let offset = self.here();
        let mut parts = vec![self.and_expr()?];
        while self.eat(&Tok::Pipe) {
            parts.push(self.and_expr()?);
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        let r = self.arena.or(parts);
        self.lift(offset, r)
    }

    fn and_expr(&mut self) -> Result<NodeId, ParseError> {
        let offset = self.here();
        let mut parts = vec![self.unary()?];
        while self.eat(&Tok::Amp) {
            parts.push(self.unary()?);
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        let r = self.arena.and(parts);
        self.lift(offset, r)
    }

    fn unary(&mut self) -> Result<NodeId, ParseError> {
        let offset = self.here();
        match self.peek() {
            Some((Tok::Bang, _)) => {
                self.pos += 1;
                let inner = self.unary()?;
                let r = self.arena.not(inner);
                self.lift(offset, r)
            }
            Some((Tok::ExistsKw, _)) | Some((Tok::ForallKw, _)) => self.quantifier(),
            _ => self.atom(),
        }
    }

    fn quantifier(&mut self) -> Result<NodeId, ParseError> {
        let (kw, offset) = self.advance().expect("caller checked");
        let count = if kw == Tok::ExistsKw {
            if self.eat(&Tok::AtLeast) {
                Some((false, self.integer("count after `>=`")?))
            } else if self.eat(&Tok::Equals) {
                Some((true, self.integer("count after `=`")?))
            } else {
                None
            }
        } else {
            None
        };
        let var = self.variable("quantified variable")?;
        self.expect(Tok::Dot, "`.` after quantified variable")?;
        let body = self.formula()?;
        let interned = self.arena.var(&var);
        let v = self.lift(offset, interned)?;
        let r = match (kw, count) {
            (Tok::ExistsKw, None) => self.arena.exists(v, body),
            (Tok::ExistsKw, Some((true, n))) => self.arena.count_exact(n, v, body),
            (Tok::ExistsKw, Some((false, n))) => self.arena.count_at_least(n, v, body),
            (Tok::ForallKw, None) => self.arena.forall(v, body),
            _ => unreachable!("count specs only follow `exists`"),
        };
        self.lift(offset, r)
    }

    fn integer(&mut self, what: &str) -> Result<u32, ParseError> {
        match self.advance() {
            Some((Tok::Int(n), _)) => Ok(n),
            Some((_, o)) => Err(ParseError::new(o, format!("expected {what}"))),
            None => Err(ParseError::new(self.eof_offset, format!("expected {what}"))),
        }
    }

    fn variable(&mut self, what: &str) -> Result<String, ParseError> {
        match self.advance() {
            Some((Tok::Var(name), _)) => Ok(name),
            Some((_, o)) => Err(ParseError::new(o, format!("expected {what}"))),
            None => Err(ParseError::new(self.eof_offset, format!("expected {what}"))),
        }
    }

    fn atom(&mut self) -> Result<NodeId, ParseError> {
        let offset = self.here();
        match self.advance() {
            Some((Tok::FalseKw, _)) => {
                let r = self.arena.bottom();
                self.lift(offset, r)
            }
            Some((Tok::EdgeKw, _)) => {
                self.expect(Tok::LParen, "`(` after `E`")?;
                let a = self.variable("variable")?;
                self.expect(Tok::Comma, "`,` between edge endpoints")?;
                let b = self.variable("variable")?;
                self.expect(Tok::RParen, "`)`")?;
                let ra = self.arena.var(&a);
                let va = self.lift(offset, ra)?;
                let rb = self.arena.var(&b);
                let vb = self.lift(offset, rb)?;
                let r = self.arena.edge(va, vb);
                self.lift(offset, r)
            }
            Some((Tok::LParen, _)) => {
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some((Tok::Var(name), _)) => {
                self.expect(Tok::Equals, "`=` after variable")?;
                let other = self.variable("variable")?;
                let ra = self.arena.var(&name);
                let va = self.lift(offset, ra)?;
                let rb = self.arena.var(&other);
                let vb = self.lift(offset, rb)?;
                let r = self.arena.eq(va, vb);
                self.lift(offset, r)
            }
            Some((_, o)) => Err(ParseError::new(o, "expected a formula")),
            None => Err(ParseError::new(self.eof_offset, "expected a formula")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::evaluate;
    use super::*;
    use crate::graph::{generate, GeneratorSpec};

    fn build(s: &str) -> crate::graph::Graph {
        generate(&s.parse::<GeneratorSpec>().unwrap()).unwrap()
    }

    #[test]
    fn parses_and_evaluates_reflexive_closure_of_adjacency() {
        let f = parse_formula("forall x. forall y. (x=y | E(x,y))").unwrap();
        assert_eq!(f.free_variables(), Vec::<String>::new());
        assert_eq!(evaluate(&build("complete:3"), &f, &[]), Ok(true));
        assert_eq!(evaluate(&build("path:3"), &f, &[]), Ok(false));
    }

    #[test]
    fn counting_quantifiers_parse() {
        let f = parse_formula("exists=6 x. exists=2 y. E(x,y)").unwrap();
        assert_eq!(evaluate(&build("cycle:6"), &f, &[]), Ok(true));
        assert_eq!(evaluate(&build("path:3"), &f, &[]), Ok(false));

        let f = parse_formula("exists>=2 y. E(x,y)").unwrap();
        assert_eq!(f.free_variables(), vec!["x".to_string()]);
        assert_eq!(evaluate(&build("path:3"), &f, &[("x", 1)]), Ok(true));
        assert_eq!(evaluate(&build("path:3"), &f, &[("x", 0)]), Ok(false));
    }

    #[test]
    fn truncated_edge_atom_reports_offset_one_past_end() {
        let err = parse_formula("E(x,y").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(err.to_string(), "syntax error at offset 6: expected `)`");
    }

    #[test]
    fn error_offsets_are_one_based_bytes() {
        assert_eq!(parse_formula("").unwrap_err().offset, 1);
        assert_eq!(parse_formula("E(x y)").unwrap_err().offset, 5);
        assert_eq!(parse_formula("x = ").unwrap_err().offset, 5);
        assert_eq!(parse_formula("forall . E(x,y)").unwrap_err().offset, 8);
        assert_eq!(parse_formula("E(x,y) ?").unwrap_err().offset, 8);
        assert_eq!(parse_formula("E(x,y) E").unwrap_err().offset, 8);
        assert_eq!(parse_formula("x > y").unwrap_err().offset, 3);
        assert_eq!(parse_formula("x - y").unwrap_err().offset, 3);
    }

    #[test]
    fn precedence_binds_not_then_and_then_or_then_implies() {
        let g = build("path:3");
        // a | b & c is a | (b & c): the other reading would be false here.
        let f = parse_formula("E(x,y) | x=y & false").unwrap();
        assert_eq!(evaluate(&g, &f, &[("x", 0), ("y", 1)]), Ok(true));

        let f = parse_formula("x=y -> false").unwrap();
        assert_eq!(evaluate(&g, &f, &[("x", 0), ("y", 0)]), Ok(false));
        assert_eq!(evaluate(&g, &f, &[("x", 0), ("y", 1)]), Ok(true));

        // a -> b -> c is a -> (b -> c); left association would give false.
        let f = parse_formula("false -> x=y -> false").unwrap();
        assert_eq!(evaluate(&g, &f, &[]), Ok(true));

        // !a & b is (!a) & b; !(a & b) would be true here.
        let f = parse_formula("!x=y & false").unwrap();
        assert_eq!(evaluate(&g, &f, &[("x", 0), ("y", 1)]), Ok(false));
    }

    #[test]
    fn quantifier_scope_is_maximal() {
        // forall y. x=y | E(x,y) means forall y. (x=y | E(x,y)).
        let f = parse_formula("forall y. x=y | E(x,y)").unwrap();
        let g = build("path:3");
        assert_eq!(evaluate(&g, &f, &[("x", 1)]), Ok(true));
        assert_eq!(evaluate(&g, &f, &[("x", 0)]), Ok(false));
    }

    #[test]
    fn shared_arena_parsing_reuses_structure() {
        let mut arena = Arena::new();
        let a = parse_formula_in(&mut arena, "E(x,y)").unwrap();
        let b = parse_formula_in(&mut arena, "E(y,x)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn count_overflow_is_reported() {
        let err = parse_formula("exists>=99999999999 x. E(x,y)").unwrap_err();
        assert!(err.message.contains("too large"), "{err}");
    }
}
