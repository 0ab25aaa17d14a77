mod common;

use bandspec_core::eigen::spectral_radius;
use bandspec_core::expr::parse_expr;
use bandspec_core::verify::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn tree_balls_stay_below_kesten_radius() {
    for q in [3usize, 4, 6] {
        let bound = 2.0 * ((q - 1) as f64).sqrt();
        let mut r = 0;
        while tree_ball_size(q, r) <= 400 {
            let ball = tree_ball(q, r).unwrap();
            assert!(spectral_radius(&ball).unwrap() <= bound + 1e-8);
            r += 1;
        }
    }
}

#[test]
fn gap_witness() {
    let cfg = VerifyConfig::default();
    for (n, copies, m) in [(5usize, 1usize, 16usize), (5, 2, 16), (6, 2, 12), (9, 1, 24)] {
        let e = parse_expr(&format!("Line + {copies}@K{n}")).unwrap();
        let report = verify_containment(&e, m, &cfg).unwrap();
        assert!(report.passed());
        let margin = (n as f64 - 4.0) / 2.0 - cfg.tol;
        for (lo, hi) in report.predicted.gaps() {
            let center = 0.5 * (lo + hi);
            for &v in report.computed.values() {
                assert!((v - center).abs() >= margin, "eigenvalue {v} inside gap ({lo}, {hi})");
            }
        }
    }
}

#[test]
fn shipped_examples_have_no_violations() {
    // skip the 4000-vertex truncation; a dense solve that size takes seconds
    let cfg = VerifyConfig { cap: 2000, ..VerifyConfig::default() };
    for text in [
        "Line",
        "Line + 1@K5",
        "Line + 2@K5",
        "Line + 3@K5",
        "Line + 2@Kb5",
        "Lattice2 + 1@K5",
        "Tree3 + 1@K6",
        "Free2",
        "Line * K3",
        "Line & K2",
        "Q3",
        "K3 * K2",
    ] {
        let e = parse_expr(text).unwrap();
        for &m in &DEFAULT_TRUNCATIONS {
            match verify_containment(&e, m, &cfg) {
                Ok(r) => assert!(r.passed(), "{text} at {m}: {:?}", r.containment_violations),
                Err(bandspec_core::Error::CapExceeded { .. }) => {}
                Err(other) => panic!("{text}: {other}"),
            }
        }
    }
}

#[test]
fn coverage_improves_for_periodic_truncations() {
    let cfg = VerifyConfig::default();
    for text in ["Line + 1@K5", "Line", "Lattice2"] {
        let e = parse_expr(text).unwrap();
        let reports = verify_coverage(&e, &DEFAULT_TRUNCATIONS, &cfg).unwrap();
        assert!(coverage_is_monotone(&reports), "{text}");
        assert!(reports.iter().all(|r| r.uncovered_bands.is_empty()));
    }
    let finite = parse_expr("K3 * K2 + K4").unwrap();
    for r in verify_coverage(&finite, &DEFAULT_TRUNCATIONS, &cfg).unwrap() {
        assert_eq!(r.max_band_distance, 0.0);
    }
}

#[test]
fn random_finite_trees_match() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cfg = VerifyConfig { cap: 1000, ..VerifyConfig::default() };
    for _ in 0..60 {
        let e = common::random_finite_expr(&mut rng, 4, 5, 625);
        let r = verify_containment(&e, 3, &cfg).unwrap();
        assert!(r.passed(), "{e:?}");
        assert_eq!(r.max_band_distance, 0.0, "{e:?}");
        assert!(r.uncovered_bands.is_empty());
    }
}
