mod common;

use bandspec_core::eigen::{eigenvalues, eigenvalues_exact, DEFAULT_GROUPING_TOL};
use bandspec_core::graph::*;
use bandspec_core::spectra::{normalize, Band, SpectrumSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn band() -> impl Strategy<Value = Band> {
    (-40i32..40, prop_oneof![Just(0i32), 0i32..12]).prop_map(|(lo, w)| Band::new(lo as f64 / 8.0, (lo + w) as f64 / 8.0))
}

fn real_band() -> impl Strategy<Value = Band> {
    (-5.0f64..5.0, prop_oneof![Just(0.0f64), 0.0f64..2.0]).prop_map(|(lo, w)| Band::new(lo, lo + w))
}

fn spectrum_set() -> impl Strategy<Value = SpectrumSet> {
    prop_oneof![
        proptest::collection::vec(band(), 1..5),
        proptest::collection::vec(real_band(), 1..5),
    ]
    .prop_map(|bands| SpectrumSet::new(bands).unwrap())
}

type Rule = fn(f64, f64) -> f64;

const RULES: [(&str, Rule); 3] = [("sum", |x, y| x + y), ("product", |x, y| x * y), ("strong", |x, y| x + y + x * y)];

fn apply(name: &str, s: &SpectrumSet, t: &SpectrumSet) -> SpectrumSet {
    match name {
        "sum" => s.minkowski_sum(t),
        "product" => s.pointwise_product(t),
        _ => s.strong_combine(t),
    }
}

fn sample_point<R: Rng>(rng: &mut R, s: &SpectrumSet) -> f64 {
    let b = s.bands()[rng.gen_range(0..s.band_count())];
    match rng.gen_range(0..8) {
        0 => b.lo,
        1 => b.hi,
        _ => b.lo + rng.gen::<f64>() * b.width(),
    }
}

/// Bound on `|f(p) - f(center)|` over a box with half-widths `(rx, ry)`.
fn lipschitz(name: &str, (lx, hx): (f64, f64), (ly, hy): (f64, f64), rx: f64, ry: f64) -> f64 {
    let amax = |lo: f64, hi: f64| lo.abs().max(hi.abs());
    match name {
        "sum" => rx + ry,
        "product" => amax(ly, hy) * rx + amax(lx, hx) * ry,
        _ => amax(1.0 + ly, 1.0 + hy) * rx + amax(1.0 + lx, 1.0 + hx) * ry,
    }
}

/// Branch and bound: does `f(x, y) = z` have a solution in the box? Boxes
/// whose Lipschitz enclosure misses `z` are discarded; a box whose corner
/// values straddle `z` contains a solution by continuity.
fn reachable(name: &str, f: Rule, x: (f64, f64), y: (f64, f64), z: f64, depth: u32) -> bool {
    let (cx, cy) = (0.5 * (x.0 + x.1), 0.5 * (y.0 + y.1));
    let (rx, ry) = (0.5 * (x.1 - x.0), 0.5 * (y.1 - y.0));
    let slack = 1e-12 * (1.0 + z.abs());
    if (f(cx, cy) - z).abs() > lipschitz(name, x, y, rx, ry) + slack {
        return false;
    }
    let corners = [f(x.0, y.0), f(x.0, y.1), f(x.1, y.0), f(x.1, y.1), f(cx, cy)];
    let lo = corners.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = corners.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if lo <= z + slack && z - slack <= hi {
        return true;
    }
    assert!(depth < 80, "branch and bound did not resolve z = {z}");
    let xs = if rx > 0.0 { vec![(x.0, cx), (cx, x.1)] } else { vec![x] };
    let ys = if ry > 0.0 { vec![(y.0, cy), (cy, y.1)] } else { vec![y] };
    xs.iter().any(|&bx| ys.iter().any(|&by| reachable(name, f, bx, by, z, depth + 1)))
}

fn sampling_oracle(name: &str, f: Rule, s: &SpectrumSet, t: &SpectrumSet, seed: u64) {
    let result = apply(name, s, t);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = 1.0 + result.min().abs().max(result.max().abs());
    for _ in 0..10_000 {
        let z = f(sample_point(&mut rng, s), sample_point(&mut rng, t));
        assert!(result.contains(z, 1e-12 * scale), "{name}: {z} not in {result}");
    }
    // points in the gaps, and just outside the hull
    let mut gaps: Vec<(f64, f64)> = result.gaps().collect();
    gaps.push((result.max(), result.max() + 1.0));
    gaps.push((result.min() - 1.0, result.min()));
    for i in 0..10_000 {
        let (a, b) = gaps[i % gaps.len()];
        let margin = 1e-9 * scale;
        if b - a <= 2.0 * margin {
            continue;
        }
        let z = a + margin + rng.gen::<f64>() * (b - a - 2.0 * margin);
        let hit = s
            .bands()
            .iter()
            .any(|bx| t.bands().iter().any(|by| reachable(name, f, (bx.lo, bx.hi), (by.lo, by.hi), z, 0)));
        assert!(!hit, "{name}: gap point {z} is reachable; s = {s}, t = {t}, result = {result}");
    }
}

#[test]
fn sampling_containment_fixed_pairs() {
    let line = SpectrumSet::interval(-2.0, 2.0);
    let k5x3 = SpectrumSet::from_points(&[-3.0, 2.0, 7.0, 12.0]).unwrap();
    let mixed = SpectrumSet::new(vec![Band::new(-1.5, -0.5), Band::point(0.25), Band::new(1.0, 3.0)]).unwrap();
    let pairs = [(&line, &k5x3), (&mixed, &line), (&mixed, &k5x3), (&mixed, &mixed)];
    for (i, (s, t)) in pairs.into_iter().enumerate() {
        for (name, f) in RULES {
            sampling_oracle(name, f, s, t, i as u64);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sampling_containment_random(s in spectrum_set(), t in spectrum_set(), seed in any::<u64>()) {
        for (name, f) in RULES {
            sampling_oracle(name, f, &s, &t, seed);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn minkowski_commutes_and_associates(a in spectrum_set(), b in spectrum_set(), c in spectrum_set()) {
        prop_assert!(a.minkowski_sum(&b).equals(&b.minkowski_sum(&a), 1e-12));
        let left = a.minkowski_sum(&b).minkowski_sum(&c);
        let right = a.minkowski_sum(&b.minkowski_sum(&c));
        prop_assert!(left.equals(&right, 1e-12));
    }

    #[test]
    fn product_identity_and_annihilator(s in spectrum_set()) {
        prop_assert_eq!(SpectrumSet::point(1.0).pointwise_product(&s), s.clone());
        prop_assert_eq!(s.pointwise_product(&SpectrumSet::point(0.0)), SpectrumSet::point(0.0));
        prop_assert_eq!(s.minkowski_sum(&SpectrumSet::point(0.0)), s.clone());
        prop_assert_eq!(SpectrumSet::point(0.0).strong_combine(&s), s.clone());
        prop_assert_eq!(SpectrumSet::point(-1.0).strong_combine(&s), SpectrumSet::point(-1.0));
    }

    #[test]
    fn strong_is_shifted_product(s in spectrum_set(), t in spectrum_set()) {
        // 1 + z = (1 + x)(1 + y)
        let via_product = s.affine(1.0, 1.0).pointwise_product(&t.affine(1.0, 1.0)).affine(1.0, -1.0);
        prop_assert!(s.strong_combine(&t).equals(&via_product, 1e-12));
    }

    #[test]
    fn normalization_is_idempotent(bands in proptest::collection::vec(real_band(), 1..12)) {
        let once = normalize(bands);
        prop_assert_eq!(normalize(once.clone()), once.clone());
        let s = SpectrumSet::new(once).unwrap();
        prop_assert_eq!(s.normalized(), s.clone());
        prop_assert!(s.bands().windows(2).all(|w| w[1].lo - w[0].hi > bandspec_core::MERGE_TOL));
    }

    #[test]
    fn affine_round_trip(s in spectrum_set(), scale in prop_oneof![-3.0f64..-0.25, 0.25f64..3.0], shift in -5.0f64..5.0) {
        let back = s.affine(scale, shift).affine(1.0 / scale, -shift / scale);
        prop_assert!(back.equals(&s, 1e-9));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_compositions_match_eigensolves(g in common::graph(6), h in common::graph(6)) {
        let sg = SpectrumSet::from_eigen(&eigenvalues_exact(&g, DEFAULT_GROUPING_TOL).unwrap());
        let sh = SpectrumSet::from_eigen(&eigenvalues_exact(&h, DEFAULT_GROUPING_TOL).unwrap());
        let cases = [
            (graph_sum(&g, &h), sg.minkowski_sum(&sh)),
            (graph_product(&g, &h), sg.pointwise_product(&sh)),
            (graph_strong_product(&g, &h), sg.strong_combine(&sh)),
        ];
        for (composed, predicted) in cases {
            let direct = SpectrumSet::from_eigen(&eigenvalues(&composed, DEFAULT_GROUPING_TOL).unwrap());
            prop_assert!(direct.equals(&predicted, 1e-9), "{} vs {}", direct, predicted);
        }
    }
}

#[test]
fn from_eigen_examples() {
    let k5 = eigenvalues_exact(&complete_graph(5).unwrap(), DEFAULT_GROUPING_TOL).unwrap();
    assert_eq!(SpectrumSet::from_eigen(&k5), SpectrumSet::from_points(&[-1.0, 4.0]).unwrap());
    let c4 = eigenvalues_exact(&cycle_graph(4).unwrap(), DEFAULT_GROUPING_TOL).unwrap();
    assert_eq!(SpectrumSet::from_eigen(&c4), SpectrumSet::from_points(&[-2.0, 0.0, 2.0]).unwrap());
    let k1 = eigenvalues_exact(&complete_graph(1).unwrap(), DEFAULT_GROUPING_TOL).unwrap();
    assert_eq!(SpectrumSet::from_eigen(&k1), SpectrumSet::point(0.0));
}
