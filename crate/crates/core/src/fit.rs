//! Power-law fitting and the degree/probability law checks.
//!
//! Fitting is unweighted least squares on log-log pairs; every word
//! contributes one point (no degree binning). The bound checks implement the
//! two-sided relaxed law `T_min mu^(phi+1) <= p(s_i) <= T_max mu^(phi+1)`
//! and the linear comparison bounds `pi_min mu <= p(s_i) <= pi_max mu`.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lexicon::BipartiteGraph;
use crate::model::{self, JointDistribution, MeaningPrior};
use crate::numeric::{self, CompensatedSum};

/// Float slack applied to bound checks that are exact theorems; contrast
/// graphs attain the bounds with equality, so a pure `<=` would be at the
/// mercy of rounding.
const BOUND_SLACK: f64 = 1e-12;

/// Tolerance for the mean-independence checks.
pub const MEAN_INDEPENDENCE_TOL: f64 = 1e-9;

/// Least-squares line through log-log pairs.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FitResult {
    /// Slope in log-log space.
    pub exponent: f64,
    /// Log-space offset.
    pub intercept: f64,
    pub r_squared: f64,
    pub point_count: usize,
}

impl FitResult {
    /// Largest absolute log-space residual over the fitted points.
    pub fn max_residual(&self, pairs: &[(f64, f64)]) -> f64 {
        pairs
            .iter()
            .map(|&(x, y)| {
                numeric::abs(numeric::ln(y) - (self.intercept + self.exponent * numeric::ln(x)))
            })
            .fold(0.0, numeric::max)
    }
}

/// Ordinary least squares on `(ln x, ln y)`, mean-centered two-pass form.
pub fn fit_power_law(pairs: &[(f64, f64)]) -> Result<FitResult> {
    for &(x, y) in pairs {
        if x <= 0.0 || y <= 0.0 || !x.is_finite() || !y.is_finite() {
            return Err(Error::NonPositiveData);
        }
    }
    let distinct = {
        let mut xs: Vec<f64> = pairs.iter().map(|&(x, _)| x).collect();
        xs.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
        xs.dedup();
        xs.len()
    };
    if distinct < 2 {
        return Err(Error::DegenerateFit(distinct));
    }
    let logs: Vec<(f64, f64)> = pairs
        .iter()
        .map(|&(x, y)| (numeric::ln(x), numeric::ln(y)))
        .collect();
    let count = logs.len() as f64;
    let mean_x = numeric::compensated_sum(logs.iter().map(|&(x, _)| x)) / count;
    let mean_y = numeric::compensated_sum(logs.iter().map(|&(_, y)| y)) / count;
    let mut sxx = CompensatedSum::new();
    let mut sxy = CompensatedSum::new();
    for &(x, y) in &logs {
        let dx = x - mean_x;
        sxx.add(dx * dx);
        sxy.add(dx * (y - mean_y));
    }
    let exponent = sxy.value() / sxx.value();
    let intercept = mean_y - exponent * mean_x;
    let mut ss_res = CompensatedSum::new();
    let mut ss_tot = CompensatedSum::new();
    for &(x, y) in &logs {
        let dy = y - mean_y;
        let resid = dy - exponent * (x - mean_x);
        ss_res.add(resid * resid);
        ss_tot.add(dy * dy);
    }
    let r_squared = if ss_tot.value() <= 0.0 {
        1.0
    } else {
        numeric::min(
            numeric::max(1.0 - ss_res.value() / ss_tot.value(), 0.0),
            1.0,
        )
    };
    Ok(FitResult {
        exponent,
        intercept,
        r_squared,
        point_count: pairs.len(),
    })
}

/// Two-sided bound report for the relaxed law.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundsReport {
    /// Extremes of `T_j` over linked meanings.
    pub t_min: f64,
    pub t_max: f64,
    /// Per-word check of `T_min mu^(phi+1) <= p(s_i) <= T_max mu^(phi+1)`.
    pub word_within_bounds: Vec<bool>,
    /// `T_max / T_min`; equals `(omega_max / omega_min)^phi` for the
    /// degree-biased joint.
    pub gap_ratio: f64,
    /// `1 / (phi + 1)`.
    pub delta: f64,
    /// Degree-side constants: `b1 = T_max^-delta`, `b2 = T_min^-delta`, so
    /// `b1 p^delta <= mu <= b2 p^delta`.
    pub b1: f64,
    pub b2: f64,
}

impl BoundsReport {
    pub fn all_within(&self) -> bool {
        self.word_within_bounds.iter().all(|&b| b)
    }
}

fn bounds_from_parts(word_probs: &[f64], mu: &[usize], t_values: &[f64], phi: f64) -> BoundsReport {
    let t_min = t_values.iter().copied().fold(f64::INFINITY, numeric::min);
    let t_max = t_values
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, numeric::max);
    let word_within_bounds = word_probs
        .iter()
        .zip(mu)
        .map(|(&p, &d)| {
            let scale = numeric::pow(d as f64, phi + 1.0);
            p >= t_min * scale * (1.0 - BOUND_SLACK) && p <= t_max * scale * (1.0 + BOUND_SLACK)
        })
        .collect();
    let delta = 1.0 / (phi + 1.0);
    BoundsReport {
        t_min,
        t_max,
        word_within_bounds,
        gap_ratio: t_max / t_min,
        delta,
        b1: numeric::pow(t_max, -delta),
        b2: numeric::pow(t_min, -delta),
    }
}

/// Bounds for the degree-biased joint, where `T_j = c omega_j^phi` over
/// linked meanings.
pub fn check_bounds(g: &BipartiteGraph, phi: f64) -> Result<BoundsReport> {
    let joint = model::joint_probability(g, phi)?;
    let degrees = g.degrees();
    let t_values: Vec<f64> = degrees
        .omega
        .iter()
        .filter(|&&d| d > 0)
        .map(|&d| numeric::pow(d as f64, phi) / joint.normalizer())
        .collect();
    Ok(bounds_from_parts(
        &joint.word_marginal(),
        &degrees.mu,
        &t_values,
        phi,
    ))
}

/// Bounds for a model-family joint with an a-priori meaning prior, where
/// `T_j = p(r_j) / sum_i a_ij mu_i^phi` over linked meanings.
pub fn check_bounds_with_prior(
    g: &BipartiteGraph,
    prior: &MeaningPrior,
    phi: f64,
) -> Result<BoundsReport> {
    let joint = model::model_family_joint(g, prior, phi)?;
    let prior_vec = prior.resolve(g)?;
    let mu_pow: Vec<f64> = g
        .degrees()
        .mu
        .iter()
        .map(|&d| numeric::pow(d as f64, phi))
        .collect();
    let mut t_values = Vec::new();
    for (j, &prior_mass) in prior_vec.iter().enumerate() {
        let nbrs = g.meaning_neighbors(j);
        if nbrs.is_empty() {
            continue;
        }
        let denom = numeric::compensated_sum(nbrs.iter().map(|&(i, _)| mu_pow[i]));
        t_values.push(prior_mass / denom);
    }
    Ok(bounds_from_parts(
        &joint.word_marginal(),
        &g.degrees().mu,
        &t_values,
        phi,
    ))
}

/// Comparison of the power bounds against the trivial linear bounds
/// `pi_min mu <= p(s_i) <= pi_max mu` built from the joint-entry range.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TrivialBoundsReport {
    /// Extremes of the positive joint entries.
    pub pi_min: f64,
    pub pi_max: f64,
    /// Per-word check of the linear bounds.
    pub word_within_bounds: Vec<bool>,
    /// True when the power bounds constrain a genuinely nonlinear exponent:
    /// the implied `delta` differs from 1 and the graph has at least two
    /// distinct word degrees. At `delta = 1` the two bound families
    /// coincide.
    pub power_bounds_nontrivial: bool,
}

impl TrivialBoundsReport {
    pub fn all_within(&self) -> bool {
        self.word_within_bounds.iter().all(|&b| b)
    }
}

pub fn check_trivial_bounds(j: &JointDistribution) -> Result<TrivialBoundsReport> {
    let positive: Vec<f64> = j.probs().iter().copied().filter(|&p| p > 0.0).collect();
    if positive.is_empty() {
        return Err(Error::NoEdges);
    }
    let pi_min = positive.iter().copied().fold(f64::INFINITY, numeric::min);
    let pi_max = positive
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, numeric::max);
    let mu = j.word_degrees();
    let word_within_bounds = j
        .word_marginal()
        .iter()
        .zip(&mu)
        .map(|(&p, &d)| {
            let d = d as f64;
            p >= pi_min * d * (1.0 - BOUND_SLACK) && p <= pi_max * d * (1.0 + BOUND_SLACK)
        })
        .collect();
    let mut distinct_mu: Vec<usize> = mu.iter().copied().filter(|&d| d > 0).collect();
    distinct_mu.sort_unstable();
    distinct_mu.dedup();
    Ok(TrivialBoundsReport {
        pi_min,
        pi_max,
        word_within_bounds,
        power_bounds_nontrivial: j.kind().delta() != 1.0 && distinct_mu.len() > 1,
    })
}

/// Meaning-frequency law check on one graph.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LawReport {
    /// Fit of `mu` against `p(s)`; the exponent is the measured `delta`.
    pub fit: FitResult,
    /// Mirror fit of `p(s)` against `mu` (least squares is not symmetric).
    pub mirror_fit: FitResult,
    /// `1 / (phi + 1)`.
    pub predicted_delta: f64,
    pub bounds: BoundsReport,
}

/// Fit the degree/probability law for the degree-biased joint at `phi`.
/// On contrast graphs the fitted `delta` equals `1 / (phi + 1)` exactly.
/// Needs at least two distinct word degrees.
pub fn check_meaning_frequency_law(g: &BipartiteGraph, phi: f64) -> Result<LawReport> {
    let joint = model::joint_probability(g, phi)?;
    let pairs = law_points(g, &joint)?;
    let mirror: Vec<(f64, f64)> = pairs.iter().map(|&(x, y)| (y, x)).collect();
    Ok(LawReport {
        fit: fit_power_law(&pairs)?,
        mirror_fit: fit_power_law(&mirror)?,
        predicted_delta: 1.0 / (phi + 1.0),
        bounds: check_bounds(g, phi)?,
    })
}

/// `(p(s_i), mu_i)` pairs used by the law fit, one point per word.
pub fn law_points(g: &BipartiteGraph, joint: &JointDistribution) -> Result<Vec<(f64, f64)>> {
    let mu = g.degrees().mu;
    let probs = joint.word_marginal();
    let mut distinct: Vec<usize> = mu.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(Error::DegenerateFit(distinct.len()));
    }
    Ok(probs
        .into_iter()
        .zip(mu)
        .map(|(p, d)| (p, d as f64))
        .collect())
}

/// Per-degree conditional means for the mean-independence route.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MeanIndependenceRow {
    pub mu: usize,
    /// `E[omega^phi | mu]` over edges incident to words of this degree.
    pub mean_omega_phi: f64,
    /// Observed `E[p(s) | mu]` over words of this degree.
    pub mean_word_probability: f64,
    /// `c E[omega^phi] mu^(phi+1)` with the global edge mean.
    pub predicted_word_probability: f64,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MeanIndependenceReport {
    pub rows: Vec<MeanIndependenceRow>,
    /// `E[omega^phi]` over all edges.
    pub global_mean_omega_phi: f64,
    /// Whether `E[omega^phi | mu]` is constant across degrees within
    /// [`MEAN_INDEPENDENCE_TOL`].
    pub mean_independent: bool,
    /// When mean independence holds, whether the observed conditional means
    /// match the predicted `c E[omega^phi] mu^(phi+1)`; `None` otherwise
    /// (report only, nothing to assert).
    pub law_holds: Option<bool>,
}

pub fn check_mean_independence(g: &BipartiteGraph, phi: f64) -> Result<MeanIndependenceReport> {
    let joint = model::joint_probability(g, phi)?;
    let c = 1.0 / joint.normalizer();
    let degrees = g.degrees();
    let omega_pow: Vec<f64> = degrees
        .omega
        .iter()
        .map(|&d| numeric::pow(d as f64, phi))
        .collect();
    let word_probs = joint.word_marginal();

    let mut distinct_mu: Vec<usize> = degrees.mu.clone();
    distinct_mu.sort_unstable();
    distinct_mu.dedup();

    let global_mean_omega_phi =
        numeric::compensated_sum(g.edges().iter().map(|&(_, j)| omega_pow[j]))
            / g.edge_count() as f64;

    let mut rows = Vec::with_capacity(distinct_mu.len());
    for &d in &distinct_mu {
        let words: Vec<usize> = (0..g.n()).filter(|&i| degrees.mu[i] == d).collect();
        let edge_count = d * words.len();
        let mean_omega_phi = numeric::compensated_sum(
            words
                .iter()
                .flat_map(|&i| g.word_neighbors(i).iter().map(|&(j, _)| omega_pow[j])),
        ) / edge_count as f64;
        let mean_word_probability =
            numeric::compensated_sum(words.iter().map(|&i| word_probs[i])) / words.len() as f64;
        rows.push(MeanIndependenceRow {
            mu: d,
            mean_omega_phi,
            mean_word_probability,
            predicted_word_probability: c
                * global_mean_omega_phi
                * numeric::pow(d as f64, phi + 1.0),
        });
    }

    let spread_tol = MEAN_INDEPENDENCE_TOL * numeric::max(1.0, numeric::abs(global_mean_omega_phi));
    let mean_independent = rows
        .iter()
        .all(|r| numeric::abs(r.mean_omega_phi - global_mean_omega_phi) <= spread_tol);
    let law_holds = mean_independent.then(|| {
        rows.iter().all(|r| {
            numeric::abs(r.mean_word_probability - r.predicted_word_probability)
                <= MEAN_INDEPENDENCE_TOL
                    * numeric::max(1.0, numeric::abs(r.predicted_word_probability))
        })
    });

    Ok(MeanIndependenceReport {
        rows,
        global_mean_omega_phi,
        mean_independent,
        law_holds,
    })
}

/// Rebuild the classical rank-law chain on synthetic data: frequencies
/// `f_i = i^-alpha` and degrees `mu_i = i^-gamma` over ranks `1..=count`,
/// fitted as `mu` against `f`. The exponent comes out as `gamma / alpha`.
pub fn check_zipf_chain(alpha: f64, gamma: f64, rank_count: usize) -> Result<FitResult> {
    if alpha <= 0.0 || !alpha.is_finite() || gamma <= 0.0 || !gamma.is_finite() {
        return Err(Error::InvalidParameter(
            "rank-law exponents must be positive finite reals".to_string(),
        ));
    }
    if rank_count < 3 {
        return Err(Error::InvalidParameter(
            "rank count must be at least 3".to_string(),
        ));
    }
    let pairs: Vec<(f64, f64)> = (1..=rank_count)
        .map(|i| {
            let rank = i as f64;
            (numeric::pow(rank, -alpha), numeric::pow(rank, -gamma))
        })
        .collect();
    fit_power_law(&pairs)
}

/// `p_i = f_i / L` with an explicit check that `L` matches the counts.
pub fn counts_to_probabilities(frequencies: &[u64], token_total: u64) -> Result<Vec<f64>> {
    let sum: u128 = frequencies.iter().map(|&f| f as u128).sum();
    if token_total == 0 {
        return Err(Error::InvalidParameter("token total is zero".to_string()));
    }
    if sum != token_total as u128 {
        return Err(Error::CountMismatch {
            expected: token_total,
            actual: sum as u64,
        });
    }
    Ok(frequencies
        .iter()
        .map(|&f| f as f64 / token_total as f64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> BipartiteGraph {
        BipartiteGraph::new(2, 3, vec![(0, 0), (0, 1), (1, 1), (1, 2)]).unwrap()
    }

    fn assert_close(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn fit_exact_quadratic() {
        let fit = fit_power_law(&[(1.0, 1.0), (2.0, 4.0), (3.0, 9.0)]).unwrap();
        assert_close(fit.exponent, 2.0, 1e-12);
        assert_close(fit.r_squared, 1.0, 1e-15);
    }

    #[test]
    fn fit_constant_y() {
        let fit = fit_power_law(&[(1.0, 5.0), (2.0, 5.0), (4.0, 5.0)]).unwrap();
        assert_close(fit.exponent, 0.0, 1e-15);
        assert_close(fit.r_squared, 1.0, 0.0);
    }

    #[test]
    fn fit_contrast_graph_mirror_orientation() {
        let g3 = BipartiteGraph::contrast(&[1, 2, 3]).unwrap();
        let joint = model::joint_probability(&g3, 1.0).unwrap();
        let pairs: Vec<(f64, f64)> = g3
            .degrees()
            .mu
            .iter()
            .zip(joint.word_marginal())
            .map(|(&d, p)| (d as f64, p))
            .collect();
        let fit = fit_power_law(&pairs).unwrap();
        assert_close(fit.exponent, 2.0, 1e-12);
    }

    #[test]
    fn fit_input_validation() {
        assert!(matches!(
            fit_power_law(&[(1.0, 1.0), (1.0, 2.0)]),
            Err(Error::DegenerateFit(1))
        ));
        assert!(matches!(
            fit_power_law(&[(0.0, 1.0), (1.0, 2.0)]),
            Err(Error::NonPositiveData)
        ));
        assert!(matches!(
            fit_power_law(&[(1.0, -1.0), (2.0, 2.0)]),
            Err(Error::NonPositiveData)
        ));
    }

    #[test]
    fn law_on_contrast_graphs() {
        let g3 = BipartiteGraph::contrast(&[1, 2, 3]).unwrap();
        let report = check_meaning_frequency_law(&g3, 1.0).unwrap();
        assert_close(report.fit.exponent, 0.5, 1e-12);
        assert_close(report.fit.r_squared, 1.0, 1e-12);
        assert_close(report.predicted_delta, 0.5, 0.0);
        assert_close(report.mirror_fit.exponent, 2.0, 1e-12);

        let report = check_meaning_frequency_law(&g3, 0.0).unwrap();
        assert_close(report.fit.exponent, 1.0, 1e-12);
    }

    #[test]
    fn law_on_constant_omega_graph() {
        // Words of degrees 1, 2, 3 with every linked meaning of degree 2.
        let g = BipartiteGraph::new(3, 3, vec![(0, 2), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)])
            .unwrap();
        assert!(g.degrees().omega.iter().all(|&d| d == 2));
        for phi in [0.0, 0.5, 1.0, 2.0] {
            let report = check_meaning_frequency_law(&g, phi).unwrap();
            assert_close(report.fit.exponent, 1.0 / (phi + 1.0), 1e-12);
            assert_close(report.fit.r_squared, 1.0, 1e-12);
        }
    }

    #[test]
    fn law_requires_degree_variation() {
        let k22 = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(matches!(
            check_meaning_frequency_law(&k22, 1.0),
            Err(Error::DegenerateFit(1))
        ));
    }

    #[test]
    fn bounds_on_g1() {
        let report = check_bounds(&g1(), 1.0).unwrap();
        assert_close(report.t_min, 1.0 / 12.0, 1e-15);
        assert_close(report.t_max, 1.0 / 6.0, 1e-15);
        assert_close(report.gap_ratio, 2.0, 1e-12);
        assert!(report.all_within());
        // b-constants follow the degree-side orientation.
        assert_close(report.b1, numeric::pow(6.0, 0.5), 1e-12);
        assert_close(report.b2, numeric::pow(12.0, 0.5), 1e-12);
    }

    #[test]
    fn bounds_on_contrast_are_tight() {
        for phi in [0.0, 0.5, 1.0, 2.0] {
            let g = BipartiteGraph::contrast(&[1, 2, 3, 4]).unwrap();
            let report = check_bounds(&g, phi).unwrap();
            assert_eq!(report.gap_ratio, 1.0);
            assert!(report.all_within());
        }
    }

    #[test]
    fn bounds_with_prior_reduce_to_plain_bounds() {
        let marginal = model::closed_form_meaning_marginal(&g1(), 1.0).unwrap();
        let with_prior =
            check_bounds_with_prior(&g1(), &MeaningPrior::Explicit(marginal), 1.0).unwrap();
        let plain = check_bounds(&g1(), 1.0).unwrap();
        assert_close(with_prior.t_min, plain.t_min, 1e-15);
        assert_close(with_prior.t_max, plain.t_max, 1e-15);
        assert!(with_prior.all_within());

        let uniform = check_bounds_with_prior(&g1(), &MeaningPrior::Uniform, 0.0).unwrap();
        assert!(uniform.all_within());
    }

    #[test]
    fn trivial_bounds_examples() {
        let j = model::joint_probability(&g1(), 1.0).unwrap();
        let report = check_trivial_bounds(&j).unwrap();
        assert_close(report.pi_min, 1.0 / 6.0, 1e-15);
        assert_close(report.pi_max, 1.0 / 3.0, 1e-15);
        assert!(report.all_within());
        // G1 has equal word degrees, so the power bounds add nothing here.
        assert!(!report.power_bounds_nontrivial);

        let j0 = model::joint_probability(&g1(), 0.0).unwrap();
        let r0 = check_trivial_bounds(&j0).unwrap();
        assert_eq!(r0.pi_min, r0.pi_max);
        assert!(!r0.power_bounds_nontrivial);

        let g3 = BipartiteGraph::contrast(&[1, 2, 3]).unwrap();
        let j3 = model::joint_probability(&g3, 1.0).unwrap();
        let r3 = check_trivial_bounds(&j3).unwrap();
        assert!(r3.all_within());
        assert!(r3.power_bounds_nontrivial);
        // Power bounds are equalities on contrast graphs; the linear bound
        // is strict for words of degree > 1.
        let bounds = check_bounds(&g3, 1.0).unwrap();
        let p = j3.word_marginal();
        for (i, &d) in g3.degrees().mu.iter().enumerate() {
            let scale = numeric::pow(d as f64, 2.0);
            assert_close(p[i], bounds.t_min * scale, 1e-15);
            if d > 1 {
                assert!(p[i] > r3.pi_min * d as f64 + 1e-15);
            }
        }
    }

    #[test]
    fn mean_independence_examples() {
        let k22 = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let report = check_mean_independence(&k22, 1.0).unwrap();
        assert!(report.mean_independent);
        assert_eq!(report.law_holds, Some(true));
        assert_eq!(report.rows.len(), 1);
        assert_close(report.rows[0].mean_omega_phi, 2.0, 1e-15);
        assert_close(report.rows[0].mean_word_probability, 0.5, 1e-15);
        assert_close(report.rows[0].predicted_word_probability, 0.5, 1e-14);

        // Constant meaning degree with varying word degrees.
        let g = BipartiteGraph::new(3, 3, vec![(0, 2), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)])
            .unwrap();
        for phi in [0.5, 1.0, 2.0] {
            let report = check_mean_independence(&g, phi).unwrap();
            assert!(report.mean_independent);
            assert_eq!(report.law_holds, Some(true));
        }

        // Deliberately correlated: the high-degree words share high-degree
        // meanings while the degree-1 word has a private meaning.
        let g = BipartiteGraph::new(3, 3, vec![(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        let report = check_mean_independence(&g, 1.0).unwrap();
        assert!(!report.mean_independent);
        assert_eq!(report.law_holds, None);
    }

    #[test]
    fn zipf_chain_examples() {
        let fit = check_zipf_chain(1.0, 0.5, 100).unwrap();
        assert_close(fit.exponent, 0.5, 1e-12);
        let fit = check_zipf_chain(2.0, 1.0, 50).unwrap();
        assert_close(fit.exponent, 0.5, 1e-12);
        let fit = check_zipf_chain(1.0, 1.0, 25).unwrap();
        assert_close(fit.exponent, 1.0, 1e-12);

        assert!(check_zipf_chain(0.0, 1.0, 10).is_err());
        assert!(check_zipf_chain(1.0, 1.0, 2).is_err());
    }

    #[test]
    fn counts_conversion() {
        assert_eq!(counts_to_probabilities(&[2, 2], 4).unwrap(), vec![0.5, 0.5]);
        assert_eq!(
            counts_to_probabilities(&[3, 1], 4).unwrap(),
            vec![0.75, 0.25]
        );
        assert!(matches!(
            counts_to_probabilities(&[1], 2),
            Err(Error::CountMismatch { .. })
        ));
        assert!(counts_to_probabilities(&[0, 0], 0).is_err());
    }
}
