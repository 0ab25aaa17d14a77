//! Symbolic graph expressions and their band spectra.
//!
//! Leaves are finite graphs or infinite Cayley graphs whose spectrum is known
//! in closed form:
//!
//! | leaf        | graph                          | spectrum              |
//! |-------------|--------------------------------|-----------------------|
//! | `Line`      | `Cay(Z, {±1})`                 | `[-2, 2]`             |
//! | `Lattice(d)`| `Cay(Z^d, {±e_i})`             | `[-2d, 2d]`           |
//! | `Tree(q)`   | `q`-regular tree               | `[-2√(q-1), 2√(q-1)]` |
//!
//! Interior nodes combine operand spectra with the sum, product and strong
//! product rules of [`SpectrumSet`].

mod parse;

use alloc::boxed::Box;
use core::fmt;
use core::str::FromStr;

use crate::eigen::{eigenvalues_exact, DEFAULT_GROUPING_TOL};
use crate::graph::{CayleyMeta, FiniteGraph};
use crate::spectra::SpectrumSet;
use crate::{Error, Result};

pub use parse::{parse_expr, parse_expr_with, LiteralLoader, NoLiterals};

#[derive(Debug, Clone, PartialEq)]
pub enum GraphExpr {
    Literal(FiniteGraph),
    /// The bi-infinite path on `Z`.
    Line,
    /// Standard Cayley graph of `Z^d`, `d >= 1`.
    Lattice(usize),
    /// The `q`-regular tree, `q >= 3`.
    Tree(usize),
    Sum(Box<GraphExpr>, Box<GraphExpr>),
    Product(Box<GraphExpr>, Box<GraphExpr>),
    Strong(Box<GraphExpr>, Box<GraphExpr>),
    /// `count`-fold iterated sum of the child, `count >= 1`.
    Repeat(usize, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn sum(a: GraphExpr, b: GraphExpr) -> GraphExpr {
        GraphExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn product(a: GraphExpr, b: GraphExpr) -> GraphExpr {
        GraphExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn strong(a: GraphExpr, b: GraphExpr) -> GraphExpr {
        GraphExpr::Strong(Box::new(a), Box::new(b))
    }

    pub fn repeat(count: usize, child: GraphExpr) -> GraphExpr {
        GraphExpr::Repeat(count, Box::new(child))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, GraphExpr::Literal(_) | GraphExpr::Line | GraphExpr::Lattice(_) | GraphExpr::Tree(_))
    }

    /// True if some leaf satisfies `pred`.
    pub fn any_leaf(&self, pred: &impl Fn(&GraphExpr) -> bool) -> bool {
        match self {
            GraphExpr::Sum(a, b) | GraphExpr::Product(a, b) | GraphExpr::Strong(a, b) => {
                a.any_leaf(pred) || b.any_leaf(pred)
            }
            GraphExpr::Repeat(_, c) => c.any_leaf(pred),
            leaf => pred(leaf),
        }
    }

    /// Only finite literals at the leaves.
    pub fn is_finite(&self) -> bool {
        !self.any_leaf(&|l| !matches!(l, GraphExpr::Literal(_)))
    }

    pub fn contains_tree(&self) -> bool {
        self.any_leaf(&|l| matches!(l, GraphExpr::Tree(_)))
    }

    /// Closed-form spectrum of a leaf; finite literals are eigensolved.
    /// Composite expressions are forwarded to [`GraphExpr::eval_spectrum`].
    pub fn base_spectrum(&self) -> Result<SpectrumSet> {
        match *self {
            GraphExpr::Literal(ref g) => Ok(SpectrumSet::from_eigen(&eigenvalues_exact(g, DEFAULT_GROUPING_TOL)?)),
            GraphExpr::Line => Ok(SpectrumSet::interval(-2.0, 2.0)),
            GraphExpr::Lattice(d) => {
                check_at_least("lattice rank", 1, d)?;
                let r = 2.0 * d as f64;
                Ok(SpectrumSet::interval(-r, r))
            }
            GraphExpr::Tree(q) => {
                check_at_least("tree degree", 3, q)?;
                let r = 2.0 * libm::sqrt((q - 1) as f64);
                Ok(SpectrumSet::interval(-r, r))
            }
            _ => self.eval_spectrum(),
        }
    }

    /// Spectrum of the adjacency operator, by structural recursion.
    pub fn eval_spectrum(&self) -> Result<SpectrumSet> {
        match self {
            GraphExpr::Sum(a, b) => Ok(a.eval_spectrum()?.minkowski_sum(&b.eval_spectrum()?)),
            GraphExpr::Product(a, b) => Ok(a.eval_spectrum()?.pointwise_product(&b.eval_spectrum()?)),
            GraphExpr::Strong(a, b) => Ok(a.eval_spectrum()?.strong_combine(&b.eval_spectrum()?)),
            GraphExpr::Repeat(n, c) => {
                check_at_least("repeat count", 1, *n)?;
                Ok(c.eval_spectrum()?.repeat_sum(*n))
            }
            leaf => leaf.base_spectrum(),
        }
    }

    /// Cayley bookkeeping, or `None` when some finite literal was not built
    /// by a Cayley constructor.
    pub fn eval_meta(&self) -> Option<CayleyMeta> {
        match self {
            GraphExpr::Literal(g) => g.cayley().copied(),
            GraphExpr::Line => Some(CayleyMeta::infinite(2)),
            GraphExpr::Lattice(d) => Some(CayleyMeta::infinite(2 * d)),
            // free product of q copies of Z/2
            GraphExpr::Tree(q) => Some(CayleyMeta::infinite(*q)),
            GraphExpr::Sum(a, b) => Some(a.eval_meta()?.sum(&b.eval_meta()?)),
            GraphExpr::Product(a, b) => Some(a.eval_meta()?.product(&b.eval_meta()?)),
            GraphExpr::Strong(a, b) => Some(a.eval_meta()?.strong(&b.eval_meta()?)),
            GraphExpr::Repeat(n, c) => {
                let m = c.eval_meta()?;
                let mut acc = m;
                for _ in 1..*n {
                    acc = m.sum(&acc);
                }
                Some(acc)
            }
        }
    }

    /// Regular degree `k` of the whole graph, if every leaf is regular. Unlike
    /// [`GraphExpr::eval_meta`] this also covers regular literals without
    /// Cayley metadata.
    pub fn regular_degree(&self) -> Option<usize> {
        match self {
            GraphExpr::Literal(g) => g.regular_degree(),
            GraphExpr::Line => Some(2),
            GraphExpr::Lattice(d) => Some(2 * d),
            GraphExpr::Tree(q) => Some(*q),
            GraphExpr::Sum(a, b) => Some(a.regular_degree()? + b.regular_degree()?),
            GraphExpr::Product(a, b) => Some(a.regular_degree()? * b.regular_degree()?),
            GraphExpr::Strong(a, b) => {
                let (x, y) = (a.regular_degree()?, b.regular_degree()?);
                Some(x + y + x * y)
            }
            GraphExpr::Repeat(n, c) => Some(n * c.regular_degree()?),
        }
    }

    /// Spectrum of the adjacency, Laplacian, Markov or normalized Laplacian
    /// operator. All but the first need a known regular degree.
    pub fn derived_spectrum(&self, kind: OperatorKind) -> Result<SpectrumSet> {
        let adjacency = self.eval_spectrum()?;
        if kind == OperatorKind::Adjacency {
            return Ok(adjacency);
        }
        let k = self.regular_degree().ok_or(Error::UnknownDegree)?;
        let kf = k as f64;
        match kind {
            OperatorKind::Adjacency => unreachable!(),
            OperatorKind::Laplacian => Ok(adjacency.laplacian(kf)),
            OperatorKind::Markov if k == 0 => Err(Error::ZeroDegree(kind.name())),
            OperatorKind::Markov => Ok(adjacency.markov(kf)),
            OperatorKind::NormalizedLaplacian if k == 0 => Err(Error::ZeroDegree(kind.name())),
            OperatorKind::NormalizedLaplacian => Ok(adjacency.normalized_laplacian(kf)),
        }
    }
}

fn check_at_least(what: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

/// Operator whose spectrum is requested. For a `k`-regular graph the
/// Laplacian is `k - A`, the Markov operator `A / k` and the normalized
/// Laplacian `1 - A / k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OperatorKind {
    #[default]
    Adjacency,
    Laplacian,
    Markov,
    NormalizedLaplacian,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 4] = [
        OperatorKind::Adjacency,
        OperatorKind::Laplacian,
        OperatorKind::Markov,
        OperatorKind::NormalizedLaplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Adjacency => "adjacency",
            OperatorKind::Laplacian => "laplacian",
            OperatorKind::Markov => "markov",
            OperatorKind::NormalizedLaplacian => "normalized-laplacian",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = &'static str;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "adjacency" => Ok(OperatorKind::Adjacency),
            "laplacian" => Ok(OperatorKind::Laplacian),
            "markov" => Ok(OperatorKind::Markov),
            "normalized-laplacian" | "normalized_laplacian" => Ok(OperatorKind::NormalizedLaplacian),
            _ => Err("expected adjacency, laplacian, markov or normalized-laplacian"),
        }
    }
}
