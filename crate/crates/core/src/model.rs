//! Joint word-meaning probability structures.
//!
//! The central object is the degree-biased joint distribution
//! `p(s_i, r_j) = a_ij (mu_i omega_j)^phi / M` with bias exponent `phi >= 0`
//! and normalizer `M`. The minimalist variant `p(s_i, r_j) = a_ij mu_i / sum
//! mu^2` and the prior-composed model family `p(s_i, r_j) = p(s_i|r_j) p(r_j)`
//! live here too. All operations are pure functions of immutable inputs.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lexicon::BipartiteGraph;
use crate::numeric::{self, CompensatedSum, Matrix};

/// Upper end of the bias range the walk interpretation discusses; larger
/// values are legal but reported as out of range by callers that care.
pub const DISCUSSED_PHI_MAX: f64 = 2.0;

pub fn phi_outside_discussed_range(phi: f64) -> bool {
    phi > DISCUSSED_PHI_MAX
}

fn validate_phi(phi: f64) -> Result<()> {
    if phi < 0.0 || !phi.is_finite() {
        return Err(Error::InvalidParameter(
            "bias exponent phi must be a finite nonnegative real".to_string(),
        ));
    }
    Ok(())
}

/// Which formula produced a [`JointDistribution`].
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum JointKind {
    /// `p(s_i, r_j) = a_ij (mu_i omega_j)^phi / M`.
    DegreeBiased { phi: f64 },
    /// `p(s_i, r_j) = a_ij mu_i / sum_k mu_k^2`.
    Minimalist,
    /// `p(s_i, r_j) = p(s_i | r_j) p(r_j)` with a caller-chosen meaning prior.
    ModelFamily { phi: f64 },
}

impl JointKind {
    pub fn phi(&self) -> Option<f64> {
        match *self {
            JointKind::DegreeBiased { phi } | JointKind::ModelFamily { phi } => Some(phi),
            JointKind::Minimalist => None,
        }
    }

    /// Exponent `delta` of the implied degree law `mu ~ p^delta`.
    pub fn delta(&self) -> f64 {
        match *self {
            JointKind::DegreeBiased { phi } | JointKind::ModelFamily { phi } => 1.0 / (phi + 1.0),
            JointKind::Minimalist => 0.5,
        }
    }
}

/// Joint distribution over word-meaning pairs, stored sparsely on the edge
/// set of the graph it was built from (entries are nonzero only where
/// `a_ij = 1`). Entries sum to one within 1e-12.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDistribution {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    probs: Vec<f64>,
    kind: JointKind,
    normalizer: f64,
}

impl JointDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Edge list in the graph's canonical order, aligned with [`Self::probs`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn kind(&self) -> JointKind {
        self.kind
    }

    /// The normalization constant: `M` for the degree-biased family,
    /// `sum mu^2` for the minimalist joint, `1` for model-family joints.
    pub fn normalizer(&self) -> f64 {
        self.normalizer
    }

    /// `p(s_i, r_j)`, zero off the edge set.
    pub fn entry(&self, word: usize, meaning: usize) -> f64 {
        match self.edges.binary_search(&(word, meaning)) {
            Ok(e) => self.probs[e],
            Err(_) => 0.0,
        }
    }

    /// Row sums `p(s_i)`.
    pub fn word_marginal(&self) -> Vec<f64> {
        let mut acc = vec![CompensatedSum::new(); self.n];
        for (&(i, _), &p) in self.edges.iter().zip(&self.probs) {
            acc[i].add(p);
        }
        acc.iter().map(CompensatedSum::value).collect()
    }

    /// Column sums `p(r_j)`.
    pub fn meaning_marginal(&self) -> Vec<f64> {
        let mut acc = vec![CompensatedSum::new(); self.m];
        for (&(_, j), &p) in self.edges.iter().zip(&self.probs) {
            acc[j].add(p);
        }
        acc.iter().map(CompensatedSum::value).collect()
    }

    /// Compensated sum of all entries (1 up to float error).
    pub fn total(&self) -> f64 {
        numeric::compensated_sum(self.probs.iter().copied())
    }

    /// Word degrees recovered from the edge list.
    pub fn word_degrees(&self) -> Vec<usize> {
        let mut mu = vec![0usize; self.n];
        for &(i, _) in &self.edges {
            mu[i] += 1;
        }
        mu
    }

    /// Meaning degrees recovered from the edge list.
    pub fn meaning_degrees(&self) -> Vec<usize> {
        let mut omega = vec![0usize; self.m];
        for &(_, j) in &self.edges {
            omega[j] += 1;
        }
        omega
    }

    /// The distributional-semantics row vector for one word: its joint
    /// probabilities against every meaning.
    pub fn word_vector(&self, word: usize) -> Vec<f64> {
        let mut row = vec![0.0; self.m];
        for (&(i, j), &p) in self.edges.iter().zip(&self.probs) {
            if i == word {
                row[j] = p;
            }
        }
        row
    }

    pub fn to_dense(&self) -> Matrix {
        let mut mt = Matrix::zeros(self.n, self.m);
        for (&(i, j), &p) in self.edges.iter().zip(&self.probs) {
            mt.set(i, j, p);
        }
        mt
    }
}

/// Per-word `mu^phi` and per-meaning `omega^phi` tables. `0^0 = 1`, so
/// `phi = 0` weights every edge equally.
pub(crate) fn degree_pows(g: &BipartiteGraph, phi: f64) -> (Vec<f64>, Vec<f64>) {
    let degrees = g.degrees();
    let mu_pow = degrees
        .mu
        .iter()
        .map(|&d| numeric::pow(d as f64, phi))
        .collect();
    let omega_pow = degrees
        .omega
        .iter()
        .map(|&d| numeric::pow(d as f64, phi))
        .collect();
    (mu_pow, omega_pow)
}

fn require_usable(g: &BipartiteGraph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    g.require_strict()
}

/// Degree-biased joint distribution `p(s_i, r_j) = a_ij (mu_i omega_j)^phi / M`.
pub fn joint_probability(g: &BipartiteGraph, phi: f64) -> Result<JointDistribution> {
    validate_phi(phi)?;
    require_usable(g)?;
    let (mu_pow, omega_pow) = degree_pows(g, phi);
    let mut weights = Vec::with_capacity(g.edge_count());
    let mut total = CompensatedSum::new();
    for &(i, j) in g.edges() {
        let w = mu_pow[i] * omega_pow[j];
        weights.push(w);
        total.add(w);
    }
    let normalizer = total.value();
    let probs = weights.iter().map(|w| w / normalizer).collect();
    Ok(JointDistribution {
        n: g.n(),
        m: g.m(),
        edges: g.edges().to_vec(),
        probs,
        kind: JointKind::DegreeBiased { phi },
        normalizer,
    })
}

/// Minimalist joint distribution `p(s_i, r_j) = a_ij mu_i / sum_k mu_k^2`.
pub fn minimalist_joint(g: &BipartiteGraph) -> Result<JointDistribution> {
    require_usable(g)?;
    let mu = g.degrees().mu;
    // Integer sum of squares stays exact well past desk scale.
    let sum_sq: u128 = mu.iter().map(|&d| (d as u128) * (d as u128)).sum();
    let normalizer = sum_sq as f64;
    let probs = g
        .edges()
        .iter()
        .map(|&(i, _)| mu[i] as f64 / normalizer)
        .collect();
    Ok(JointDistribution {
        n: g.n(),
        m: g.m(),
        edges: g.edges().to_vec(),
        probs,
        kind: JointKind::Minimalist,
        normalizer,
    })
}

/// Closed form for the word marginal of [`joint_probability`]:
/// `p(s_i) = mu_i^phi sum_j a_ij omega_j^phi / M`. Kept as an independent
/// arithmetic route from the row sums for cross-checks.
pub fn closed_form_word_marginal(g: &BipartiteGraph, phi: f64) -> Result<Vec<f64>> {
    validate_phi(phi)?;
    require_usable(g)?;
    let (mu_pow, omega_pow) = degree_pows(g, phi);
    let strengths: Vec<f64> = (0..g.n())
        .map(|i| numeric::compensated_sum(g.word_neighbors(i).iter().map(|&(j, _)| omega_pow[j])))
        .collect();
    let normalizer = numeric::compensated_sum((0..g.n()).map(|i| mu_pow[i] * strengths[i]));
    Ok((0..g.n())
        .map(|i| mu_pow[i] * strengths[i] / normalizer)
        .collect())
}

/// Closed form for the meaning marginal:
/// `p(r_j) = omega_j^phi sum_i a_ij mu_i^phi / M`.
pub fn closed_form_meaning_marginal(g: &BipartiteGraph, phi: f64) -> Result<Vec<f64>> {
    validate_phi(phi)?;
    require_usable(g)?;
    let (mu_pow, omega_pow) = degree_pows(g, phi);
    let strengths: Vec<f64> = (0..g.m())
        .map(|j| numeric::compensated_sum(g.meaning_neighbors(j).iter().map(|&(i, _)| mu_pow[i])))
        .collect();
    let normalizer = numeric::compensated_sum((0..g.m()).map(|j| omega_pow[j] * strengths[j]));
    Ok((0..g.m())
        .map(|j| omega_pow[j] * strengths[j] / normalizer)
        .collect())
}

/// Conditional `p(s_i | r_j) = a_ij mu_i^phi / sum_k a_kj mu_k^phi` as a
/// dense `n x m` matrix. Columns of unlinked meanings are zero, following
/// the convention `p(s_i | r_j) = 0` when `omega_j = 0`.
pub fn conditional_word_given_meaning(g: &BipartiteGraph, phi: f64) -> Result<Matrix> {
    validate_phi(phi)?;
    require_usable(g)?;
    let (mu_pow, _) = degree_pows(g, phi);
    let mut mt = Matrix::zeros(g.n(), g.m());
    for j in 0..g.m() {
        let nbrs = g.meaning_neighbors(j);
        if nbrs.is_empty() {
            continue;
        }
        let denom = numeric::compensated_sum(nbrs.iter().map(|&(i, _)| mu_pow[i]));
        for &(i, _) in nbrs {
            mt.set(i, j, mu_pow[i] / denom);
        }
    }
    Ok(mt)
}

/// Prior over meanings used to assemble model-family joints.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum MeaningPrior {
    /// Equal mass on every linked meaning.
    Uniform,
    /// Mass proportional to meaning degree.
    DegreeProportional,
    /// Caller-supplied vector over all `m` meanings; must sum to one and put
    /// no mass on unlinked meanings.
    Explicit(Vec<f64>),
}

impl MeaningPrior {
    /// Concrete probability vector over the graph's meanings.
    pub fn resolve(&self, g: &BipartiteGraph) -> Result<Vec<f64>> {
        match self {
            MeaningPrior::Uniform => {
                let linked = (0..g.m()).filter(|&j| g.meaning_degree(j) > 0).count();
                if linked == 0 {
                    return Err(Error::NoEdges);
                }
                Ok((0..g.m())
                    .map(|j| {
                        if g.meaning_degree(j) > 0 {
                            1.0 / linked as f64
                        } else {
                            0.0
                        }
                    })
                    .collect())
            }
            MeaningPrior::DegreeProportional => {
                let total = g.edge_count();
                if total == 0 {
                    return Err(Error::NoEdges);
                }
                Ok((0..g.m())
                    .map(|j| g.meaning_degree(j) as f64 / total as f64)
                    .collect())
            }
            MeaningPrior::Explicit(p) => {
                if p.len() != g.m() {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "prior has {} entries for {} meanings",
                        p.len(),
                        g.m()
                    )));
                }
                for (j, &mass) in p.iter().enumerate() {
                    if !mass.is_finite() || mass < 0.0 {
                        return Err(Error::InvalidParameter(
                            "prior entries must be finite and nonnegative".to_string(),
                        ));
                    }
                    if g.meaning_degree(j) == 0 && mass > 0.0 {
                        return Err(Error::PriorOnUnlinkedMeaning { meaning: j, mass });
                    }
                }
                let sum = numeric::compensated_sum(p.iter().copied());
                if numeric::abs(sum - 1.0) > 1e-9 {
                    return Err(Error::NotNormalized { sum });
                }
                Ok(p.clone())
            }
        }
    }
}

/// Model-family joint `p(s_i, r_j) = p(s_i | r_j) p(r_j)` with the biased
/// conditional and the chosen prior. A uniform prior gives the first model
/// of the family, a degree-proportional prior the second; feeding back the
/// closed-form meaning marginal reproduces [`joint_probability`] exactly.
pub fn model_family_joint(
    g: &BipartiteGraph,
    prior: &MeaningPrior,
    phi: f64,
) -> Result<JointDistribution> {
    validate_phi(phi)?;
    require_usable(g)?;
    let prior_vec = prior.resolve(g)?;
    let (mu_pow, _) = degree_pows(g, phi);
    let denoms: Vec<f64> = (0..g.m())
        .map(|j| numeric::compensated_sum(g.meaning_neighbors(j).iter().map(|&(i, _)| mu_pow[i])))
        .collect();
    let probs = g
        .edges()
        .iter()
        .map(|&(i, j)| mu_pow[i] / denoms[j] * prior_vec[j])
        .collect();
    Ok(JointDistribution {
        n: g.n(),
        m: g.m(),
        edges: g.edges().to_vec(),
        probs,
        kind: JointKind::ModelFamily { phi },
        normalizer: 1.0,
    })
}
