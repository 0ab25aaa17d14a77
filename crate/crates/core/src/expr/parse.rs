//! Expression grammar.
//!
//! ```text
//! expr    := primary (infix primary)*      infix, loosest first: '+' '*' '&'
//! primary := NUMBER '@' primary            count-fold sum
//!          | '(' expr ')'
//!          | atom
//! atom    := 'K' n | 'Kb' n | 'Q' d | 'C' m | 'P' m
//!          | 'Line' | 'Lattice' d | 'Tree' q | 'Free' d
//!          | 'lit:' PATH                   PATH runs to whitespace or ')'
//! ```
//!
//! Infix operators are left-associative. Whitespace between tokens is
//! ignored. `Q<d>` is sugar for `d@K2` and `Free<d>` for `Tree<2d>`
//! (`Free1` is the line).

use alloc::borrow::ToOwned;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::GraphExpr;
use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{self, FiniteGraph};

/// Resolves `lit:<path>` atoms to graphs.
pub trait LiteralLoader {
    fn load(&self, path: &str) -> Result<FiniteGraph, String>;
}

/// Loader that rejects every literal path.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoLiterals;

impl LiteralLoader for NoLiterals {
    fn load(&self, _path: &str) -> Result<FiniteGraph, String> {
        Err("literal files are not available here".to_owned())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(usize),
    Lit(String),
    Plus,
    Star,
    Amp,
    At,
    LParen,
    RParen,
}

type Spanned = (usize, Tok);

fn err(position: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { position, kind }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' | b'*' | b'&' | b'@' | b'(' | b')' => {
                toks.push((
                    start,
                    match c {
                        b'+' => Tok::Plus,
                        b'*' => Tok::Star,
                        b'&' => Tok::Amp,
                        b'@' => Tok::At,
                        b'(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                ));
                i += 1;
            }
            b'0'..=b'9' => {
                let mut n: usize = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add((bytes[i] - b'0') as usize))
                        .ok_or_else(|| err(start, ParseErrorKind::NumberOverflow))?;
                    i += 1;
                }
                toks.push((start, Tok::Number(n)));
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "lit" && bytes.get(i) == Some(&b':') {
                    i += 1;
                    let path_start = i;
                    while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b')' {
                        i += 1;
                    }
                    if i == path_start {
                        return Err(err(path_start, ParseErrorKind::Expected("literal path")));
                    }
                    toks.push((start, Tok::Lit(text[path_start..i].to_owned())));
                } else {
                    toks.push((start, Tok::Ident(word.to_owned())));
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(err(start, ParseErrorKind::UnexpectedChar(ch)));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a, L: ?Sized> {
    toks: Vec<Spanned>,
    pos: usize,
    end: usize,
    loader: &'a L,
}

#[derive(Clone, Copy)]
enum Infix {
    Sum,
    Product,
    Strong,
}

impl Infix {
    fn of(tok: &Tok) -> Option<Infix> {
        match tok {
            Tok::Plus => Some(Infix::Sum),
            Tok::Star => Some(Infix::Product),
            Tok::Amp => Some(Infix::Strong),
            _ => None,
        }
    }

    fn precedence(self) -> u8 {
        match self {
            Infix::Sum => 1,
            Infix::Product => 2,
            Infix::Strong => 3,
        }
    }

    fn apply(self, a: GraphExpr, b: GraphExpr) -> GraphExpr {
        match self {
            Infix::Sum => GraphExpr::sum(a, b),
            Infix::Product => GraphExpr::product(a, b),
            Infix::Strong => GraphExpr::strong(a, b),
        }
    }
}

impl<L: LiteralLoader + ?Sized> Parser<'_, L> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(p, _)| p)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    // precedence climbing
    fn expr(&mut self, min_prec: u8) -> Result<GraphExpr, ParseError> {
        let mut lhs = self.primary()?;
        while let Some(op) = self.peek().and_then(Infix::of) {
            if op.precedence() < min_prec {
                break;
            }
            self.pos += 1;
            let rhs = self.expr(op.precedence() + 1)?;
            lhs = op.apply(lhs, rhs);
        }
        Ok(lhs)
    }

    fn primary(&mut self) -> Result<GraphExpr, ParseError> {
        let Some((pos, tok)) = self.next() else {
            return Err(err(self.end, ParseErrorKind::UnexpectedEnd));
        };
        match tok {
            Tok::Number(n) => {
                if self.peek() != Some(&Tok::At) {
                    return Err(err(self.here(), ParseErrorKind::Expected("'@' after repeat count")));
                }
                self.pos += 1;
                if n == 0 {
                    return Err(err(pos, ParseErrorKind::ZeroRepeat));
                }
                Ok(GraphExpr::repeat(n, self.primary()?))
            }
            Tok::LParen => {
                let inner = self.expr(0)?;
                match self.next() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    Some((p, _)) => Err(err(p, ParseErrorKind::Expected("')'"))),
                    None => Err(err(self.end, ParseErrorKind::Expected("')'"))),
                }
            }
            Tok::Ident(name) => self.atom(pos, &name),
            Tok::Lit(path) => self
                .loader
                .load(&path)
                .map(GraphExpr::Literal)
                .map_err(|reason| err(pos, ParseErrorKind::Literal { path, reason })),
            _ => Err(err(pos, ParseErrorKind::Expected("an atom, '(' or a repeat count"))),
        }
    }

    fn parameter(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(&Tok::Number(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(err(self.here(), ParseErrorKind::Expected("atom parameter"))),
        }
    }

    fn atom(&mut self, pos: usize, name: &str) -> Result<GraphExpr, ParseError> {
        let bad = |e: crate::Error| err(pos, ParseErrorKind::BadParameter(e.to_string()));
        let too_small = |what: &str, min: usize, got: usize| {
            err(pos, ParseErrorKind::BadParameter(alloc::format!("{what} requires {min} or more, got {got}")))
        };
        let lit = |g: crate::Result<FiniteGraph>| g.map(GraphExpr::Literal).map_err(bad);
        match name {
            "Line" => Ok(GraphExpr::Line),
            "K" => lit(graph::complete_graph(self.parameter()?)),
            "Kb" => lit(graph::complete_bipartite(self.parameter()?)),
            "C" => lit(graph::cycle_graph(self.parameter()?)),
            "P" => lit(graph::path_graph(self.parameter()?)),
            "Q" => match self.parameter()? {
                0 => Err(too_small("hypercube dimension", 1, 0)),
                d => Ok(GraphExpr::repeat(d, lit(graph::complete_graph(2))?)),
            },
            "Lattice" => match self.parameter()? {
                0 => Err(too_small("lattice rank", 1, 0)),
                d => Ok(GraphExpr::Lattice(d)),
            },
            "Tree" => match self.parameter()? {
                q if q < 3 => Err(too_small("tree degree", 3, q)),
                q => Ok(GraphExpr::Tree(q)),
            },
            "Free" => match self.parameter()? {
                0 => Err(too_small("free group rank", 1, 0)),
                1 => Ok(GraphExpr::Line),
                d => Ok(GraphExpr::Tree(2 * d)),
            },
            _ => Err(err(pos, ParseErrorKind::UnknownAtom(name.to_owned()))),
        }
    }
}

/// Parses an expression; `lit:` atoms are rejected.
pub fn parse_expr(text: &str) -> Result<GraphExpr, ParseError> {
    parse_expr_with(text, &NoLiterals)
}

/// Parses an expression, resolving `lit:` atoms through `loader`.
pub fn parse_expr_with<L: LiteralLoader + ?Sized>(text: &str, loader: &L) -> Result<GraphExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), loader };
    let e = p.expr(0)?;
    if let Some(&(pos, _)) = p.toks.get(p.pos) {
        return Err(err(pos, ParseErrorKind::Expected("an infix operator or end of input")));
    }
    Ok(e)
}
