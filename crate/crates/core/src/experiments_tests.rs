use std::sync::Arc;

use super::*;
use crate::cochain::Cochain0;
use crate::group::{build_group, GroupElement};

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(build_group(spec).unwrap())
}

fn single_edge_c2(n: u32) -> Cochain1 {
    let g = group("C2");
    let mut phi = Cochain1::identity(g, n);
    phi.set(2, 3, GroupElement(1));
    phi
}

#[test]
fn survival_of_a_coboundary_is_certain() {
    let g = group("C3");
    let phi = Cochain0::random(g, 6, 3).d0();
    let est = estimate_cocycle_probability(&phi, 0.7, 500, 11);
    assert_eq!(est.closed_form, 1.0);
    assert_eq!(est.empirical, 1.0);
    assert_eq!(est.d1_norm, 0);
}

#[test]
fn survival_at_p_one_is_impossible() {
    let phi = single_edge_c2(5);
    let est = estimate_cocycle_probability(&phi, 1.0, 200, 5);
    assert_eq!(est.closed_form, 0.0);
    assert_eq!(est.empirical, 0.0);
}

#[test]
fn survival_matches_closed_form_within_three_sigma() {
    // n = 5 single-edge cochain: ‖d1 φ‖ = 3, closed form (1-p)^3.
    let phi = single_edge_c2(5);
    for (i, p) in [0.2, 0.5, 0.8].into_iter().enumerate() {
        let est = estimate_cocycle_probability(&phi, p, 10_000, 40 + i as u64);
        assert_eq!(est.d1_norm, 3);
        let expected = (1.0 - p).powi(3);
        assert!((est.closed_form - expected).abs() < 1e-12);
        assert!(
            (est.empirical - est.closed_form).abs() <= 3.0 * est.std_error,
            "p={p}: empirical {} vs closed form {}",
            est.empirical,
            est.closed_form
        );
    }
}

#[test]
fn sweep_extreme_cells() {
    let g = group("C2");
    let mut config = ExperimentConfig::new(12);
    config.p_grid = vec![0.0, 1.0];
    config.trials = 20;
    config.seed = 3;
    let result = threshold_sweep(&config, &g).unwrap();
    assert_eq!(result.cells[0].estimate, 1.0, "triangle-free: free pi_1");
    assert_eq!(result.cells[1].estimate, 0.0, "full 2-skeleton: trivial H^1");
    assert_eq!(result.cells[0].infeasible, 0);
}

#[test]
fn shared_seeds_make_the_curve_monotone() {
    let g = group("C2");
    let mut config = ExperimentConfig::new(14);
    config.p_grid = (0..=6).map(|i| i as f64 / 6.0).collect();
    config.trials = 30;
    config.seed = 99;
    let result = threshold_sweep(&config, &g).unwrap();
    for pair in result.cells.windows(2) {
        assert!(
            pair[0].estimate >= pair[1].estimate,
            "estimates must be non-increasing under shared seeds"
        );
    }
}

#[test]
fn results_are_deterministic() {
    let g = group("C3");
    let mut config = ExperimentConfig::new(10);
    config.p_grid = vec![0.1, 0.3];
    config.trials = 25;
    config.seed = 123;
    let a = threshold_sweep(&config, &g).unwrap();
    let b = threshold_sweep(&config, &g).unwrap();
    assert_eq!(a.cells, b.cells);
    assert_eq!(a.payload_sha256, b.payload_sha256);
    assert_eq!(a.to_csv(), b.to_csv());
}

#[test]
fn quotient_experiment_defaults_from_c() {
    let mut config = ExperimentConfig::new(40);
    config.c = Some(0.3);
    config.trials = 5;
    config.seed = 8;
    let result = quotient_experiment(&config).unwrap();
    assert_eq!(result.config.max_index, Some(3), "floor(40^0.3) = 3");
    let p = result.cells[0].p;
    assert!((p - 8.1 * 40f64.ln() / 40.0).abs() < 1e-12);
}

#[test]
fn quotient_experiment_rejects_p_above_one() {
    let mut config = ExperimentConfig::new(10);
    config.c = Some(3.0);
    config.trials = 2;
    assert!(matches!(quotient_experiment(&config), Err(Error::Config(_))));
}

#[test]
fn quotient_experiment_with_p_zero_always_finds_quotients() {
    let mut config = ExperimentConfig::new(12);
    config.c = Some(0.3);
    config.p_grid = vec![0.0];
    config.trials = 10;
    let result = quotient_experiment(&config).unwrap();
    assert_eq!(result.cells[0].estimate, 1.0, "free group surjects onto C2");
}

#[test]
fn config_text_parsing() {
    let text = "# sweep setup\nn = 40\ngroup = C2\nalpha_list = 0.5, 1.0, 2.0\ntrials = 200\nseed = 7\nout = run1\n";
    let config = ExperimentConfig::from_text(text).unwrap();
    assert_eq!(config.n, 40);
    assert_eq!(config.group.as_deref(), Some("C2"));
    assert_eq!(config.trials, 200);
    assert_eq!(config.out.as_deref(), Some("run1"));
    let scale = 40f64.ln() / 40.0;
    assert_eq!(config.p_grid, vec![0.5 * scale, 1.0 * scale, 2.0 * scale]);

    let explicit = ExperimentConfig::from_text("n = 10\np_list = 0.1, 0.9\nmax_index = 3\n").unwrap();
    assert_eq!(explicit.p_grid, vec![0.1, 0.9]);
    assert_eq!(explicit.max_index, Some(3));

    assert!(ExperimentConfig::from_text("group = C2\n").is_err());
    assert!(ExperimentConfig::from_text("n = 10\nbogus = 1\n").is_err());
    assert!(ExperimentConfig::from_text("n = 10\np_list = 0.5\nalpha_list = 1\n").is_err());
    assert!(ExperimentConfig::from_text("n = 10\np_list = 1.5\n").is_err());
    assert!(ExperimentConfig::from_text("n = 10\np_list = 0.9, 0.1\n").is_err());
    assert!(ExperimentConfig::from_text("n = 10\ntrials = 0\n").is_err());
}

#[test]
fn union_bound_exponent_identity() {
    for i in 0..100 {
        let c = i as f64 * 0.13;
        let ub = union_bound_value(50, c, 5, None).unwrap();
        assert!(
            (ub.per_term_exponent - (-4.0 * c / 3.0)).abs() < 1e-12,
            "2 + c - (6+7c)/3 must equal -4c/3"
        );
    }
}

#[test]
fn union_bound_geometric_example() {
    // n = 100, c = 3: each simplified term is 10^{-8k}.
    let ub = union_bound_value(100, 3.0, 50, None).unwrap();
    let q: f64 = 1e-8;
    let expected = q / (1.0 - q);
    assert!(
        (ub.simplified_sum - expected).abs() / expected < 1e-12,
        "{} vs {}",
        ub.simplified_sum,
        expected
    );
    // p = 27 log(100)/100 > 1: the binomial chain collapses to zero.
    assert!(ub.p > 1.0);
    assert_eq!(ub.binomial_sum, 0.0);
}

#[test]
fn union_bound_degenerates_at_c_zero() {
    let ub = union_bound_value(30, 0.0, 17, None).unwrap();
    assert_eq!(ub.simplified_sum, 17.0);
    assert!(union_bound_value(30, -1.0, 5, None).is_err());
    assert!(union_bound_value(1, 1.0, 5, None).is_err());
}

#[test]
fn union_bound_binomial_chain_is_finite_and_small_in_regime() {
    // In the theorem regime the pre-simplification chain should be a small
    // number; it lower-bounds nothing, it is a diagnostic.
    let ub = union_bound_value(200, 0.5, 30, None).unwrap();
    assert!(ub.p < 1.0);
    assert!(ub.binomial_sum.is_finite());
    assert!(ub.binomial_sum > 0.0);
    // Each chain term dominates the corresponding simplified term only up to
    // the n^{2k} >= C(C(n,2), k)^{1/k} relaxation; sanity: both decrease.
    assert!(ub.simplified_sum < 1.0);
}

#[test]
fn csv_has_expected_shape() {
    let g = group("C2");
    let mut config = ExperimentConfig::new(8);
    config.p_grid = vec![0.2];
    config.trials = 4;
    let result = threshold_sweep(&config, &g).unwrap();
    let csv = result.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p,trials,successes,estimate,stderr"));
    assert_eq!(lines.count(), 1);
    let json = result.to_json();
    assert!(json.contains("payload_sha256"));
}
