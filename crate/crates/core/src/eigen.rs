//! Dense symmetric eigensolver and multiplicity grouping.
//!
//! The solver reduces the matrix to tridiagonal form with Householder
//! reflections and then diagonalizes it with the implicitly shifted QL
//! iteration. Storage is column-major so the inner loops run over contiguous
//! memory. Everything is deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::FiniteGraph;
use crate::{Error, Result};

/// Default absolute tolerance for merging eigenvalues into one distinct value.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-8;

/// QL sweeps allowed per eigenvalue before giving up.
pub const MAX_QL_SWEEPS: usize = 60;

/// Largest graph for which [`EigenSpectrum::snap_integers`] attempts the exact
/// rank test.
pub const EXACT_SNAP_MAX_VERTICES: usize = 96;

/// Eigenvalues (ascending) and, optionally, orthonormal eigenvectors of a real
/// symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    n: usize,
    values: Vec<f64>,
    vectors: Option<Vec<f64>>,
}

impl SymmetricEigen {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Eigenvector belonging to `values()[j]`, if vectors were requested.
    pub fn vector(&self, j: usize) -> Option<&[f64]> {
        self.vectors.as_ref().map(|v| &v[j * self.n..(j + 1) * self.n])
    }
}

/// Decomposes the symmetric `n x n` matrix `a` (row-major, which for a
/// symmetric matrix is the same as column-major). Only the lower triangle is
/// read.
pub fn decompose(a: &[f64], n: usize, want_vectors: bool) -> Result<SymmetricEigen> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    if n == 0 {
        return Ok(SymmetricEigen { n, values: Vec::new(), vectors: want_vectors.then(Vec::new) });
    }
    let mut v = a.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, n, &mut d, &mut e, want_vectors);
    let vecs = if want_vectors { Some(&mut v[..]) } else { None };
    ql_implicit(n, &mut d, &mut e, vecs)?;

    // sort ascending, permuting vectors alongside
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&i| d[i]).collect();
    let vectors = want_vectors.then(|| {
        let mut out = Vec::with_capacity(n * n);
        for &i in &order {
            out.extend_from_slice(&v[i * n..(i + 1) * n]);
        }
        out
    });
    Ok(SymmetricEigen { n, values, vectors })
}

// Column-major access: element (row, col) lives at col * n + row.
#[inline(always)]
fn at(n: usize, row: usize, col: usize) -> usize {
    col * n + row
}

/// Householder reduction to tridiagonal form. On return `d` holds the
/// diagonal and `e[1..]` the subdiagonal. With `accumulate`, `v` holds the
/// orthogonal transformation.
fn tridiagonalize(v: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64], accumulate: bool) {
    for j in 0..n {
        d[j] = v[at(n, n - 1, j)];
    }
    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(n, i - 1, j)];
                v[at(n, i, j)] = 0.0;
                v[at(n, j, i)] = 0.0;
            }
        } else {
            for x in &mut d[..i] {
                *x /= scale;
                h += *x * *x;
            }
            let f = d[i - 1];
            let mut g = libm::sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            e[..i].fill(0.0);

            // e = A d (lower triangle of the active block)
            for j in 0..i {
                let f = d[j];
                v[at(n, j, i)] = f;
                let col = &v[at(n, 0, j)..at(n, i, j)];
                let mut g = e[j] + col[j] * f;
                for k in j + 1..i {
                    g += col[k] * d[k];
                    e[k] += col[k] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                let col = &mut v[at(n, 0, j)..at(n, i, j)];
                for k in j..i {
                    col[k] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(n, i - 1, j)];
                v[at(n, i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    if !accumulate {
        for j in 0..n {
            d[j] = v[at(n, j, j)];
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..n - 1 {
        v[at(n, n - 1, i)] = v[at(n, i, i)];
        v[at(n, i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(n, k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[at(n, k, i + 1)] * v[at(n, k, j)];
                }
                for k in 0..=i {
                    v[at(n, k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(n, k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(n, n - 1, j)];
        v[at(n, n - 1, j)] = 0.0;
    }
    v[at(n, n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit QL on the tridiagonal `(d, e)`; rotations are applied to the
/// columns of `vectors` when given.
fn ql_implicit(n: usize, d: &mut [f64], e: &mut [f64], mut vectors: Option<&mut [f64]>) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let eps = f64::EPSILON;
    let mut shift_total = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_QL_SWEEPS {
                    return Err(Error::NoConvergence(MAX_QL_SWEEPS));
                }
                // Wilkinson-style shift from the leading 2x2 block
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = libm::hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for x in &mut d[l + 2..n] {
                    *x -= h;
                }
                shift_total += h;

                p = d[m];
                let (mut c, mut c2, mut c3) = (1.0, 1.0, 1.0);
                let el1 = e[l + 1];
                let (mut s, mut s2) = (0.0, 0.0);
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = libm::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = vectors.as_deref_mut() {
                        let (left, right) = v.split_at_mut((i + 1) * n);
                        let col_i = &mut left[i * n..];
                        let col_next = &mut right[..n];
                        for (a, b) in col_i.iter_mut().zip(col_next.iter_mut()) {
                            let h = *b;
                            *b = s * *a + c * h;
                            *a = c * *a - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += shift_total;
        e[l] = 0.0;
    }
    Ok(())
}

/// Distinct eigenvalues of a finite graph with their multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSpectrum {
    values: Vec<f64>,
    multiplicities: Vec<usize>,
    dimension: usize,
}

impl EigenSpectrum {
    /// Groups an ascending list by single linkage: neighbours closer than
    /// `tol` fall into the same group. A group is represented by its mean.
    pub fn group_sorted(sorted: &[f64], tol: f64) -> EigenSpectrum {
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        let mut values = Vec::new();
        let mut multiplicities = Vec::new();
        let mut start = 0;
        for i in 1..=sorted.len() {
            if i == sorted.len() || sorted[i] - sorted[i - 1] > tol {
                let group = &sorted[start..i];
                values.push(group.iter().sum::<f64>() / group.len() as f64);
                multiplicities.push(group.len());
                start = i;
            }
        }
        EigenSpectrum { values, multiplicities, dimension: sorted.len() }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn distinct_count(&self) -> usize {
        self.values.len()
    }

    /// Every eigenvalue repeated by its multiplicity, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.values
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&v, &m)| core::iter::repeat_n(v, m))
            .collect()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0, |acc: f64, v| acc.max(v.abs()))
    }

    /// Replaces each distinct value lying within `tol` of an integer `r` by
    /// `r` exactly, provided `A - rI` has nullity equal to the grouped
    /// multiplicity over the rationals. Since `A` is symmetric, that proves the
    /// whole group equals `r`. The exact rank is computed with fraction-free
    /// elimination and skipped for graphs above [`EXACT_SNAP_MAX_VERTICES`] or
    /// on `i128` overflow.
    pub fn snap_integers(&mut self, g: &FiniteGraph, tol: f64) {
        let n = g.n_vertices();
        if n != self.dimension || n > EXACT_SNAP_MAX_VERTICES {
            return;
        }
        for (value, &mult) in self.values.iter_mut().zip(&self.multiplicities) {
            let r = libm::round(*value);
            if (*value - r).abs() > tol || *value == r {
                continue;
            }
            if exact_rank_shifted(g, r as i128) == Some(n - mult) {
                *value = r;
            }
        }
    }
}

/// Rank of `A - rI` over the rationals, or `None` on overflow.
fn exact_rank_shifted(g: &FiniteGraph, r: i128) -> Option<usize> {
    let n = g.n_vertices();
    let mut m = vec![0i128; n * n];
    for (u, v) in g.edges() {
        m[u * n + v] = 1;
        m[v * n + u] = 1;
    }
    for i in 0..n {
        m[i * n + i] = -r;
    }
    bareiss_rank(&mut m, n)
}

fn bareiss_rank(m: &mut [i128], n: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(p) = (row..n).find(|&r| m[r * n + col] != 0) else {
            continue;
        };
        if p != row {
            for c in 0..n {
                m.swap(p * n + c, row * n + c);
            }
        }
        let pivot = m[row * n + col];
        for r in row + 1..n {
            let lead = m[r * n + col];
            for c in col + 1..n {
                let num = m[r * n + c]
                    .checked_mul(pivot)?
                    .checked_sub(lead.checked_mul(m[row * n + c])?)?;
                if num % prev != 0 {
                    return None;
                }
                m[r * n + c] = num / prev;
            }
            m[r * n + col] = 0;
        }
        prev = pivot;
        row += 1;
    }
    Some(row)
}

/// All eigenvalues of the adjacency matrix of `g`, grouped within `tol`.
pub fn eigenvalues(g: &FiniteGraph, tol: f64) -> Result<EigenSpectrum> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::BadTolerance);
    }
    let n = g.n_vertices();
    let eig = decompose(&g.adjacency_matrix(), n, false)?;
    Ok(EigenSpectrum::group_sorted(eig.values(), tol))
}

/// Like [`eigenvalues`], then snaps provably integral eigenvalues to exact
/// integers (see [`EigenSpectrum::snap_integers`]).
pub fn eigenvalues_exact(g: &FiniteGraph, tol: f64) -> Result<EigenSpectrum> {
    let mut spec = eigenvalues(g, tol)?;
    spec.snap_integers(g, tol);
    Ok(spec)
}

/// Largest absolute eigenvalue.
pub fn spectral_radius(g: &FiniteGraph) -> Result<f64> {
    Ok(eigenvalues(g, DEFAULT_GROUPING_TOL)?.spectral_radius())
}
