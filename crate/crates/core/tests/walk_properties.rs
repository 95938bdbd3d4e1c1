//! Walk engine against its closed forms: the stationary vector must be a
//! fixed point of the two-step transition operator, the per-edge transition
//! probabilities must equal the joint distribution, and Monte Carlo
//! censuses must converge on it.

#![allow(clippy::needless_range_loop)]

mod common;

use common::{assert_close, g1, seeded_connected};
use lexnet::model;
use lexnet::walk::{self, StartPolicy, WalkConfig};
use lexnet::BipartiteGraph;

/// Deterministic set of connected test graphs with n, m <= 12.
fn connected_samples() -> Vec<BipartiteGraph> {
    let shapes = [
        (2, 2, 0.9),
        (3, 4, 0.6),
        (5, 3, 0.5),
        (6, 6, 0.4),
        (8, 5, 0.35),
        (10, 9, 0.3),
        (12, 12, 0.25),
        (12, 4, 0.4),
        (4, 12, 0.4),
        (7, 11, 0.3),
    ];
    shapes
        .iter()
        .enumerate()
        .map(|(k, &(n, m, p))| seeded_connected(n, m, p, 1000 + k as u64))
        .collect()
}

/// One application of the word -> meaning -> word operator.
fn two_step_word(g: &BipartiteGraph, phi: f64, pi: &[f64]) -> Vec<f64> {
    let mut meaning_mass = vec![0.0; g.m()];
    for i in 0..g.n() {
        let row = walk::transition_word_to_meaning(g, phi, i).unwrap();
        for j in 0..g.m() {
            meaning_mass[j] += pi[i] * row[j];
        }
    }
    let mut next = vec![0.0; g.n()];
    for j in 0..g.m() {
        if g.meaning_degree(j) == 0 {
            continue;
        }
        let row = walk::transition_meaning_to_word(g, phi, j).unwrap();
        for i in 0..g.n() {
            next[i] += meaning_mass[j] * row[i];
        }
    }
    next
}

#[test]
fn stationary_is_fixed_point_of_two_step_operator() {
    for g in connected_samples() {
        for phi in [0.0, 1.0, 2.0] {
            let s = walk::analytical_stationary(&g, phi).unwrap();
            let next = two_step_word(&g, phi, &s.word);
            for (a, b) in s.word.iter().zip(&next) {
                assert!(
                    (a - b).abs() <= 1e-10,
                    "fixed-point residual {} on {:?} phi {phi}",
                    (a - b).abs(),
                    (g.n(), g.m())
                );
            }
        }
    }
}

#[test]
fn stationary_halves_and_edge_identity() {
    for g in connected_samples() {
        for phi in [0.0, 1.0, 2.0] {
            let s = walk::analytical_stationary(&g, phi).unwrap();
            let word_sum: f64 = s.word.iter().sum();
            let meaning_sum: f64 = s.meaning.iter().sum();
            assert_close(word_sum, 0.5, 1e-12);
            assert_close(meaning_sum, 0.5, 1e-12);

            let joint = model::joint_probability(&g, phi).unwrap();
            for (a, b) in s.edge_transition.iter().zip(joint.probs()) {
                assert!((a - b).abs() <= 1e-12);
            }
        }
    }
}

fn tv_distance(census: &walk::WalkCensus, joint: &model::JointDistribution) -> f64 {
    let empirical = census.empirical_joint().unwrap();
    let mut acc = 0.0;
    for (&(i, j), &p) in joint.edges().iter().zip(joint.probs()) {
        acc += (empirical.get(i, j) - p).abs();
    }
    acc / 2.0
}

#[test]
fn census_tv_distance_is_within_the_statistical_bound() {
    let mut graphs = vec![g1()];
    graphs.push(seeded_connected(5, 5, 0.5, 50));
    graphs.push(seeded_connected(8, 6, 0.4, 60));
    graphs.push(seeded_connected(10, 10, 0.3, 70));
    let steps = 10_000u64;
    for (k, g) in graphs.iter().enumerate() {
        let joint = model::joint_probability(g, 1.0).unwrap();
        let census = walk::simulate_walk(
            g,
            &WalkConfig {
                steps,
                burn_in: steps / 100,
                phi: 1.0,
                start: StartPolicy::UniformWords,
                master_seed: 7 + k as u64,
                chains: 1,
            },
        )
        .unwrap();
        let tv = tv_distance(&census, &joint);
        let bound = 3.0 / (steps as f64).sqrt() * (g.edge_count() as f64).sqrt();
        assert!(
            tv < bound,
            "TV {tv} exceeds statistical bound {bound} on graph {k}"
        );
    }
}

#[test]
fn doubled_word_visit_frequencies_approach_the_word_marginal() {
    let g = seeded_connected(6, 7, 0.45, 90);
    let joint = model::joint_probability(&g, 1.0).unwrap();
    let expected = joint.word_marginal();
    let census = walk::simulate_walk(&g, &WalkConfig::new(100_000, 1.0, 13)).unwrap();
    let observed = census.empirical_word_probabilities().unwrap();
    // Word-slot frequencies estimate p(s_i) = 2 p_v(s_i) directly.
    let tv: f64 = observed
        .iter()
        .zip(&expected)
        .map(|(a, b)| (a - b).abs())
        .sum::<f64>()
        / 2.0;
    assert!(tv < 0.02, "word-slot TV {tv}");
}

#[test]
fn census_is_deterministic_and_alternating() {
    let g = seeded_connected(9, 8, 0.4, 110);
    let config = WalkConfig {
        steps: 30_001,
        burn_in: 97,
        phi: 2.0,
        start: StartPolicy::UniformVertices,
        master_seed: 99,
        chains: 3,
    };
    let a = walk::simulate_walk(&g, &config).unwrap();
    let b = walk::simulate_walk(&g, &config).unwrap();
    assert_eq!(a, b);

    assert_eq!(a.pair_transits.iter().sum::<u64>(), a.recorded_steps);
    let words: u64 = a.word_visits.iter().sum();
    let meanings: u64 = a.meaning_visits.iter().sum();
    assert_eq!(words + meanings, a.recorded_steps);
    assert!(words.abs_diff(meanings) <= u64::from(config.chains));
}

#[test]
fn entropy_rate_is_bounded_by_log_max_degree() {
    for g in connected_samples() {
        let degrees = g.degrees();
        let max_degree = degrees
            .mu
            .iter()
            .chain(&degrees.omega)
            .copied()
            .max()
            .unwrap() as f64;
        for phi in [0.0, 1.0, 2.0] {
            let h = walk::entropy_rate(&g, phi).unwrap();
            assert!(h >= 0.0);
            assert!(h <= max_degree.ln() + 1e-12);
        }
    }
}
