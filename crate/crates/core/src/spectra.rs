//! Spectra as finite unions of disjoint closed intervals.
//!
//! If `A` and `B` are bounded self-adjoint operators with spectra `s` and `t`,
//! then
//!
//! - `A ⊗ 1 + 1 ⊗ B` has spectrum `{x + y}` ([`SpectrumSet::minkowski_sum`]),
//! - `A ⊗ B` has spectrum `{x y}` ([`SpectrumSet::pointwise_product`]),
//! - `A ⊗ 1 + 1 ⊗ B + A ⊗ B` has spectrum `{x + y + x y}`
//!   ([`SpectrumSet::strong_combine`]),
//!
//! with `x ∈ s`, `y ∈ t`. Each map is continuous and bilinear-affine on a box,
//! so the image of `[a, b] x [c, d]` is the interval spanned by the four
//! corner values, and the image of a union of boxes is the union of those
//! intervals. Multiplicities are not tracked.

use alloc::vec::Vec;
use core::fmt;

use crate::eigen::EigenSpectrum;

/// Intervals whose gap is at most this wide are merged on normalization.
pub const MERGE_TOL: f64 = 1e-12;

/// A closed interval `[lo, hi]`; an atom when `lo == hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
}

impl Band {
    pub fn new(lo: f64, hi: f64) -> Band {
        debug_assert!(lo <= hi, "band [{lo}, {hi}] is reversed");
        Band { lo, hi }
    }

    pub fn point(x: f64) -> Band {
        Band { lo: x, hi: x }
    }

    /// Smallest band containing all the given values.
    fn hull(values: [f64; 4]) -> Band {
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Band { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn is_atom(&self) -> bool {
        self.lo == self.hi
    }

    /// Distance from `x` to the band (zero inside).
    pub fn distance(&self, x: f64) -> f64 {
        if x < self.lo {
            self.lo - x
        } else if x > self.hi {
            x - self.hi
        } else {
            0.0
        }
    }
}

/// A nonempty, normalized union of disjoint closed intervals sorted by lower
/// endpoint. Consecutive intervals are separated by more than [`MERGE_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSet {
    bands: Vec<Band>,
}

impl SpectrumSet {
    /// Normalizes arbitrary bands. Returns `None` if `bands` is empty or
    /// contains a reversed or non-finite interval.
    pub fn new(bands: Vec<Band>) -> Option<SpectrumSet> {
        if bands.is_empty() || bands.iter().any(|b| !(b.lo <= b.hi && b.lo.is_finite() && b.hi.is_finite())) {
            return None;
        }
        Some(SpectrumSet { bands: normalize(bands) })
    }

    pub fn interval(lo: f64, hi: f64) -> SpectrumSet {
        SpectrumSet { bands: alloc::vec![Band::new(lo, hi)] }
    }

    pub fn point(x: f64) -> SpectrumSet {
        SpectrumSet::interval(x, x)
    }

    /// Atoms at the given values; `None` if empty.
    pub fn from_points(points: &[f64]) -> Option<SpectrumSet> {
        SpectrumSet::new(points.iter().map(|&x| Band::point(x)).collect())
    }

    /// One atom per distinct eigenvalue.
    pub fn from_eigen(e: &EigenSpectrum) -> SpectrumSet {
        SpectrumSet::from_points(e.values()).expect("eigen spectrum of a nonempty graph")
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn band_count(&self) -> usize {
        self.bands.len()
    }

    pub fn min(&self) -> f64 {
        self.bands[0].lo
    }

    pub fn max(&self) -> f64 {
        self.bands[self.bands.len() - 1].hi
    }

    /// Open gaps between consecutive bands, as `(hi_j, lo_{j+1})`.
    pub fn gaps(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.bands.windows(2).map(|w| (w[0].hi, w[1].lo))
    }

    /// Distance from `x` to the nearest band.
    pub fn distance(&self, x: f64) -> f64 {
        // bands are sorted, so find the first band with hi >= x
        let i = self.bands.partition_point(|b| b.hi < x);
        let mut best = f64::INFINITY;
        if i < self.bands.len() {
            best = self.bands[i].distance(x);
        }
        if i > 0 {
            best = best.min(self.bands[i - 1].distance(x));
        }
        best
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.distance(x) <= tol
    }

    /// Whether every band of `self` lies inside the `tol`-neighbourhood of
    /// `other`.
    pub fn is_subset(&self, other: &SpectrumSet, tol: f64) -> bool {
        let grown = other.dilate(tol);
        self.bands.iter().all(|b| {
            let i = grown.bands.partition_point(|g| g.hi < b.hi);
            i < grown.bands.len() && grown.bands[i].lo <= b.lo
        })
    }

    /// Symmetric difference empty up to `tol`: each set lies within `tol` of
    /// the other.
    pub fn equals(&self, other: &SpectrumSet, tol: f64) -> bool {
        self.is_subset(other, tol) && other.is_subset(self, tol)
    }

    /// Widens every band by `r` on both sides and renormalizes.
    pub fn dilate(&self, r: f64) -> SpectrumSet {
        SpectrumSet {
            bands: normalize(self.bands.iter().map(|b| Band::new(b.lo - r, b.hi + r)).collect()),
        }
    }

    fn combine(&self, other: &SpectrumSet, corners: impl Fn(Band, Band) -> Band) -> SpectrumSet {
        let mut out = Vec::with_capacity(self.bands.len() * other.bands.len());
        for &a in &self.bands {
            for &b in &other.bands {
                out.push(corners(a, b));
            }
        }
        SpectrumSet { bands: normalize(out) }
    }

    /// `{x + y : x ∈ self, y ∈ other}`.
    pub fn minkowski_sum(&self, other: &SpectrumSet) -> SpectrumSet {
        self.combine(other, |a, b| Band::new(a.lo + b.lo, a.hi + b.hi))
    }

    /// `{x y : x ∈ self, y ∈ other}`.
    pub fn pointwise_product(&self, other: &SpectrumSet) -> SpectrumSet {
        self.combine(other, |a, b| Band::hull([a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi]))
    }

    /// `{x + y + x y : x ∈ self, y ∈ other}`.
    pub fn strong_combine(&self, other: &SpectrumSet) -> SpectrumSet {
        // -1 is absorbing: (1 + x)(1 + y) - 1 = -1 whenever x or y is -1
        let f = |x: f64, y: f64| if x == -1.0 || y == -1.0 { -1.0 } else { x + y + x * y };
        self.combine(other, |a, b| Band::hull([f(a.lo, b.lo), f(a.lo, b.hi), f(a.hi, b.lo), f(a.hi, b.hi)]))
    }

    /// `count`-fold Minkowski sum of `self` with itself.
    pub fn repeat_sum(&self, count: usize) -> SpectrumSet {
        assert!(count >= 1, "repeat count must be positive");
        let mut acc = self.clone();
        for _ in 1..count {
            acc = self.minkowski_sum(&acc);
        }
        acc
    }

    /// `{scale·x + shift}`. Endpoints swap when `scale < 0`.
    pub fn affine(&self, scale: f64, shift: f64) -> SpectrumSet {
        let bands = self
            .bands
            .iter()
            .map(|b| {
                let (p, q) = (scale * b.lo + shift, scale * b.hi + shift);
                Band::new(p.min(q), p.max(q))
            })
            .collect();
        SpectrumSet { bands: normalize(bands) }
    }

    /// Laplacian `k - A` of a `k`-regular graph.
    pub fn laplacian(&self, k: f64) -> SpectrumSet {
        self.affine(-1.0, k)
    }

    /// Markov operator `A / k`.
    pub fn markov(&self, k: f64) -> SpectrumSet {
        self.affine(1.0 / k, 0.0)
    }

    /// Normalized Laplacian `1 - A / k`.
    pub fn normalized_laplacian(&self, k: f64) -> SpectrumSet {
        self.affine(-1.0 / k, 1.0)
    }

    /// Re-applies normalization; a no-op on values built by this module.
    pub fn normalized(&self) -> SpectrumSet {
        SpectrumSet { bands: normalize(self.bands.clone()) }
    }
}

/// Sorts by lower endpoint and merges bands whose gap is at most
/// [`MERGE_TOL`]. A result no wider than `MERGE_TOL` becomes an atom at its
/// midpoint, so rounding noise between equal eigenvalues never turns an
/// atom into a sliver of a band.
pub fn normalize(mut bands: Vec<Band>) -> Vec<Band> {
    bands.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
    let mut out: Vec<Band> = Vec::with_capacity(bands.len());
    for b in bands {
        match out.last_mut() {
            Some(last) if b.lo - last.hi <= MERGE_TOL => last.hi = last.hi.max(b.hi),
            _ => out.push(b),
        }
    }
    for b in &mut out {
        if b.lo != b.hi && b.hi - b.lo <= MERGE_TOL {
            *b = Band::point(b.midpoint());
        }
    }
    out
}

impl fmt::Display for SpectrumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.bands.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "[{}, {}]", b.lo, b.hi)?;
        }
        Ok(())
    }
}
