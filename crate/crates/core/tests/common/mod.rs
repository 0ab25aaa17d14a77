#![allow(dead_code, clippy::needless_range_loop)]

use bandspec_core::graph::FiniteGraph;
use proptest::prelude::*;
use rand::Rng;

/// Random simple graph on `1..=max_n` vertices.
pub fn graph(max_n: usize) -> impl Strategy<Value = FiniteGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
    })
}

/// Random connected graph: a random spanning tree plus random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = FiniteGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            proptest::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(move |(parents, bits)| {
                let mut edges: Vec<(usize, usize)> =
                    parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
                edges.extend(pairs_of(n).zip(bits).filter(|(_, b)| *b).map(|(e, _)| e));
                FiniteGraph::new(n, edges).unwrap()
            })
    })
}

pub fn pairs_of(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

pub fn from_bits(n: usize, bits: &[bool]) -> FiniteGraph {
    let edges = pairs_of(n).zip(bits).filter(|(_, b)| **b).map(|(e, _)| e);
    FiniteGraph::new(n, edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> FiniteGraph {
    let edges: Vec<_> = pairs_of(n).filter(|_| rng.gen_bool(p)).collect();
    FiniteGraph::new(n, edges).unwrap()
}

/// Cyclic Jacobi eigenvalue iteration on a dense symmetric matrix. Slow but
/// entirely independent of the Householder/QL path.
pub fn jacobi_eigenvalues(g: &FiniteGraph) -> Vec<f64> {
    let n = g.n_vertices();
    let mut a: Vec<Vec<f64>> = (0..n).map(|_| vec![0.0; n]).collect();
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    vals.sort_by(f64::total_cmp);
    vals
}

/// Sorted pairwise combination of two multisets.
pub fn pairwise(xs: &[f64], ys: &[f64], f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
    let mut out: Vec<f64> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).map(|(x, y)| f(x, y)).collect();
    out.sort_by(f64::total_cmp);
    out
}

pub fn assert_multiset_close(a: &[f64], b: &[f64], tol: f64) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert!((x - y).abs() <= tol, "{x} vs {y}\n{a:?}\n{b:?}");
    }
}

/// Distinct values of a sorted list, merging neighbours within `tol`.
pub fn distinct(sorted: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &v in sorted {
        match out.last() {
            Some(&last) if v - last <= tol => {}
            _ => out.push(v),
        }
    }
    out
}

use bandspec_core::expr::GraphExpr;

/// Random expression tree with at most `max_leaves` finite leaves of at most
/// `max_vertices` vertices each. Trees whose materialized size
/// exceeds `max_size` are redrawn.
pub fn random_finite_expr<R: Rng>(rng: &mut R, max_leaves: usize, max_vertices: usize, max_size: usize) -> GraphExpr {
    fn size(e: &GraphExpr) -> usize {
        match e {
            GraphExpr::Literal(g) => g.n_vertices(),
            GraphExpr::Sum(a, b) | GraphExpr::Product(a, b) | GraphExpr::Strong(a, b) => size(a) * size(b),
            GraphExpr::Repeat(n, c) => size(c).pow(*n as u32),
            _ => unreachable!(),
        }
    }
    fn go<R: Rng>(rng: &mut R, leaves: usize, max_vertices: usize, max_size: usize) -> GraphExpr {
        let mut e = if leaves == 1 {
            let n = rng.gen_range(1..=max_vertices);
            let p = rng.gen_range(0.2..0.9);
            GraphExpr::Literal(random_graph(rng, n, p))
        } else {
            let left = rng.gen_range(1..leaves);
            let a = go(rng, left, max_vertices, max_size);
            let b = go(rng, leaves - left, max_vertices, max_size);
            match rng.gen_range(0..3) {
                0 => GraphExpr::sum(a, b),
                1 => GraphExpr::product(a, b),
                _ => GraphExpr::strong(a, b),
            }
        };
        if rng.gen_bool(0.25) && size(&e).pow(2) <= max_size {
            e = GraphExpr::repeat(2, e);
        }
        e
    }
    loop {
        let leaves = rng.gen_range(1..=max_leaves);
        let e = go(rng, leaves, max_vertices, max_size);
        if size(&e) <= max_size {
            return e;
        }
    }
}
