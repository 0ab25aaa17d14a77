//! Finite witnesses for symbolic band spectra.
//!
//! An expression is *materialized* by replacing each infinite leaf with a
//! finite graph whose spectrum lies inside the leaf's spectrum: the line
//! becomes the cycle `C_m` (eigenvalues `2cos(2πk/m) ∈ [-2, 2]`), the lattice
//! `Z^d` the torus `C_m + ... + C_m`, and the `q`-regular tree a breadth-first
//! ball (spectral radius below `2√(q-1)`). Compositions then act on the
//! eigenvalues exactly as the spectrum rules predict, so every computed
//! eigenvalue must land in the predicted set.

use alloc::vec::Vec;

use crate::eigen::{eigenvalues, EigenSpectrum};
use crate::expr::GraphExpr;
use crate::graph::{self, FiniteGraph};
use crate::spectra::SpectrumSet;
use crate::{Error, Result};

pub const DEFAULT_CAP: usize = 4000;
pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_TRUNCATIONS: [usize; 3] = [8, 16, 32];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Largest materialized vertex count accepted.
    pub cap: usize,
    /// Containment tolerance, also used to group computed eigenvalues.
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { cap: DEFAULT_CAP, tol: DEFAULT_TOL }
    }
}

/// Number of vertices in the ball of radius `radius` of the `q`-regular tree.
pub fn tree_ball_size(q: usize, radius: usize) -> usize {
    let mut total = 1usize;
    let mut layer = q;
    for _ in 0..radius {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(q - 1);
    }
    total
}

/// Smallest radius whose ball has at least `min_vertices` vertices.
pub fn tree_radius_for(q: usize, min_vertices: usize) -> usize {
    let mut r = 0;
    while tree_ball_size(q, r) < min_vertices {
        r += 1;
    }
    r
}

/// Ball of radius `radius` around a vertex of the `q`-regular tree, numbered
/// in breadth-first order.
pub fn tree_ball(q: usize, radius: usize) -> Result<FiniteGraph> {
    if q < 2 {
        return Err(Error::TooSmall { what: "tree degree", min: 2, got: q });
    }
    let mut edges = Vec::new();
    let mut frontier = alloc::vec![0usize];
    let mut next_id = 1;
    for depth in 0..radius {
        let mut next = Vec::new();
        for &v in &frontier {
            let children = if depth == 0 { q } else { q - 1 };
            for _ in 0..children {
                edges.push((v, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        frontier = next;
    }
    FiniteGraph::new(next_id, edges)
}

fn materialized_size(e: &GraphExpr, m: usize) -> Option<usize> {
    match e {
        GraphExpr::Literal(g) => Some(g.n_vertices()),
        GraphExpr::Line => Some(m),
        GraphExpr::Lattice(d) => m.checked_pow(u32::try_from(*d).ok()?),
        GraphExpr::Tree(q) => Some(tree_ball_size(*q, tree_radius_for(*q, m))),
        GraphExpr::Sum(a, b) | GraphExpr::Product(a, b) | GraphExpr::Strong(a, b) => {
            materialized_size(a, m)?.checked_mul(materialized_size(b, m)?)
        }
        GraphExpr::Repeat(n, c) => materialized_size(c, m)?.checked_pow(u32::try_from(*n).ok()?),
    }
}

/// Finite stand-in for `e` at truncation `m`, rejected when it would exceed
/// `cap` vertices.
pub fn materialize(e: &GraphExpr, truncation: usize, cap: usize) -> Result<FiniteGraph> {
    if truncation < 3 {
        return Err(Error::TooSmall { what: "truncation", min: 3, got: truncation });
    }
    let required = materialized_size(e, truncation).unwrap_or(usize::MAX);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    build(e, truncation)
}

fn build(e: &GraphExpr, m: usize) -> Result<FiniteGraph> {
    Ok(match e {
        GraphExpr::Literal(g) => g.clone(),
        GraphExpr::Line => graph::cycle_graph(m)?,
        GraphExpr::Lattice(d) => graph::graph_power_sum(&graph::cycle_graph(m)?, *d)?,
        GraphExpr::Tree(q) => {
            if *q < 3 {
                return Err(Error::TooSmall { what: "tree degree", min: 3, got: *q });
            }
            tree_ball(*q, tree_radius_for(*q, m))?
        }
        GraphExpr::Sum(a, b) => graph::graph_sum(&build(a, m)?, &build(b, m)?),
        GraphExpr::Product(a, b) => graph::graph_product(&build(a, m)?, &build(b, m)?),
        GraphExpr::Strong(a, b) => graph::graph_strong_product(&build(a, m)?, &build(b, m)?),
        GraphExpr::Repeat(n, c) => graph::graph_power_sum(&build(c, m)?, *n)?,
    })
}

/// Outcome of checking one truncation against the predicted spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub expression: GraphExpr,
    pub truncation: usize,
    pub vertices: usize,
    pub tol: f64,
    pub predicted: SpectrumSet,
    pub computed: EigenSpectrum,
    /// `(eigenvalue, distance to nearest band)` for each distinct computed
    /// eigenvalue farther than `tol` from the predicted set.
    pub containment_violations: Vec<(f64, f64)>,
    /// Indices of predicted bands with no computed eigenvalue within `tol`.
    pub uncovered_bands: Vec<usize>,
    /// Largest distance from a point of a predicted band to the nearest
    /// computed eigenvalue; distances within `tol` count as zero.
    pub max_band_distance: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.containment_violations.is_empty()
    }
}

fn nearest_distance(sorted: &[f64], x: f64) -> f64 {
    let i = sorted.partition_point(|&v| v < x);
    let mut best = f64::INFINITY;
    if i < sorted.len() {
        best = sorted[i] - x;
    }
    if i > 0 {
        best = best.min(x - sorted[i - 1]);
    }
    best
}

/// Supremum over the band of the distance to the nearest value. The distance
/// is piecewise linear, so the supremum sits at an endpoint or halfway
/// between consecutive values.
fn band_distance(sorted: &[f64], lo: f64, hi: f64) -> f64 {
    let mut best = nearest_distance(sorted, lo).max(nearest_distance(sorted, hi));
    for w in sorted.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        if mid > lo && mid < hi {
            best = best.max(nearest_distance(sorted, mid));
        }
    }
    best
}

/// Eigensolves the materialization of `e` at `truncation` and checks every
/// eigenvalue against `e.eval_spectrum()`.
pub fn verify_containment(e: &GraphExpr, truncation: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return Err(Error::BadTolerance);
    }
    let predicted = e.eval_spectrum()?;
    let g = materialize(e, truncation, cfg.cap)?;
    let computed = eigenvalues(&g, cfg.tol)?;
    Ok(assess(e, truncation, predicted, computed, cfg.tol))
}

fn assess(
    e: &GraphExpr,
    truncation: usize,
    predicted: SpectrumSet,
    computed: EigenSpectrum,
    tol: f64,
) -> VerificationReport {
    let values = computed.values();
    let containment_violations = values
        .iter()
        .map(|&v| (v, predicted.distance(v)))
        .filter(|&(_, d)| d > tol)
        .collect();
    let uncovered_bands = predicted
        .bands()
        .iter()
        .enumerate()
        .filter(|(_, b)| {
            let i = values.partition_point(|&v| v < b.lo - tol);
            !(i < values.len() && values[i] <= b.hi + tol)
        })
        .map(|(i, _)| i)
        .collect();
    let max_band_distance = predicted
        .bands()
        .iter()
        .map(|b| band_distance(values, b.lo, b.hi))
        .fold(0.0, f64::max);
    let max_band_distance = if max_band_distance <= tol { 0.0 } else { max_band_distance };

    VerificationReport {
        expression: e.clone(),
        truncation,
        vertices: computed.dimension(),
        tol,
        predicted,
        computed,
        containment_violations,
        uncovered_bands,
        max_band_distance,
    }
}

/// One report per truncation, in the given order.
pub fn verify_coverage(e: &GraphExpr, truncations: &[usize], cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    truncations.iter().map(|&m| verify_containment(e, m, cfg)).collect()
}

/// Whether `max_band_distance` is non-increasing across the reports, allowing
/// each step to grow by at most 10%.
pub fn coverage_is_monotone(reports: &[VerificationReport]) -> bool {
    reports
        .windows(2)
        .all(|w| w[1].max_band_distance <= 1.1 * w[0].max_band_distance)
}
