//! Entropies and mutual information over a [`JointDistribution`], plus the
//! structural characterisation of the configurations that maximise the
//! word-meaning mutual information.
//!
//! Everything is computed in nats; [`MIReport::to_bits`] gives the base-2
//! view.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lexicon::BipartiteGraph;
use crate::model::JointDistribution;
use crate::numeric::{self, CompensatedSum};

/// Absolute tolerance when comparing `I(S,R)` against its structural
/// maximum. Far above accumulated float error at desk scale and far below
/// the smallest structural gap the enumeration tests observe.
pub const MI_OPTIMALITY_TOL: f64 = 1e-9;

/// Tolerance on the input-normalization check of [`entropy`].
pub const ENTROPY_INPUT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum LogBase {
    Nats,
    Bits,
}

/// Entropy / mutual-information summary of a joint distribution.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MIReport {
    /// `H(S)`.
    pub h_words: f64,
    /// `H(S|R)`.
    pub h_words_given_meanings: f64,
    /// `I(S,R) = H(S) - H(S|R)`.
    pub mutual_info: f64,
    pub log_base: LogBase,
    /// Information-theoretic cap `log min(n', m')` over linked words and
    /// linked meanings.
    pub max_possible: f64,
    /// Whether `I(S,R)` reaches `log min(n, m)` (full repertoire sizes),
    /// the value attained exactly by the MI-maximal configurations, within
    /// [`MI_OPTIMALITY_TOL`].
    pub is_maximal: bool,
}

impl MIReport {
    /// The same report converted to bits.
    pub fn to_bits(&self) -> MIReport {
        let ln2 = core::f64::consts::LN_2;
        MIReport {
            h_words: self.h_words / ln2,
            h_words_given_meanings: self.h_words_given_meanings / ln2,
            mutual_info: self.mutual_info / ln2,
            log_base: LogBase::Bits,
            max_possible: self.max_possible / ln2,
            is_maximal: self.is_maximal,
        }
    }
}

/// Shannon entropy of a probability vector in nats, with `0 ln 0 = 0`.
/// The input must be nonnegative and sum to one within
/// [`ENTROPY_INPUT_TOL`].
pub fn entropy(dist: &[f64]) -> Result<f64> {
    let mut total = CompensatedSum::new();
    for &p in dist {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::InvalidParameter(
                "probabilities must be finite and nonnegative".to_string(),
            ));
        }
        total.add(p);
    }
    let sum = total.value();
    if numeric::abs(sum - 1.0) > ENTROPY_INPUT_TOL {
        return Err(Error::NotNormalized { sum });
    }
    Ok(entropy_unchecked(dist.iter().copied()))
}

fn entropy_unchecked<I: IntoIterator<Item = f64>>(probs: I) -> f64 {
    let mut acc = CompensatedSum::new();
    for p in probs {
        if p > 0.0 {
            acc.add(-p * numeric::ln(p));
        }
    }
    numeric::max(acc.value(), 0.0)
}

/// `H(S|R) = sum_j p(r_j) H(S|r_j)` over linked meanings, in nats.
pub fn conditional_entropy(j: &JointDistribution) -> f64 {
    let p_meaning = j.meaning_marginal();
    // Column contents p(s_i, r_j) grouped per meaning.
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); j.m()];
    for (&(_, col), &p) in j.edges().iter().zip(j.probs()) {
        columns[col].push(p);
    }
    let mut acc = CompensatedSum::new();
    for (col, probs) in columns.iter().enumerate() {
        let pr = p_meaning[col];
        if pr <= 0.0 {
            continue;
        }
        acc.add(pr * entropy_unchecked(probs.iter().map(|&p| p / pr)));
    }
    numeric::max(acc.value(), 0.0)
}

/// Mutual information report `I(S,R) = H(S) - H(S|R)`.
pub fn mutual_information(j: &JointDistribution) -> MIReport {
    let h_words = entropy_unchecked(j.word_marginal());
    let h_cond = conditional_entropy(j);
    let mut mutual_info = h_words - h_cond;
    // Exact arithmetic cannot go negative; tiny float residue is clamped.
    if mutual_info < 0.0 && mutual_info > -1e-12 {
        mutual_info = 0.0;
    }
    let linked_words = j.word_degrees().iter().filter(|&&d| d > 0).count();
    let linked_meanings = j.meaning_degrees().iter().filter(|&&d| d > 0).count();
    let max_possible = numeric::ln(core::cmp::min(linked_words, linked_meanings) as f64);
    let structural_max = numeric::ln(core::cmp::min(j.n(), j.m()) as f64);
    MIReport {
        h_words,
        h_words_given_meanings: h_cond,
        mutual_info,
        log_base: LogBase::Nats,
        max_possible,
        is_maximal: numeric::abs(mutual_info - structural_max) <= MI_OPTIMALITY_TOL,
    }
}

/// Outcome of the structural MI-optimality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum MiConfigVerdict {
    Optimal,
    /// Degrees on the smaller side are not all equal to one `d` in range.
    ViolatesCondition1,
    /// Degrees on the larger side leave the set `{0, 1}`.
    ViolatesCondition2,
}

/// Structural check of the two conditions characterising MI-maximal
/// configurations. With `n <= m`: (1) every word degree equals some
/// `d in [1, floor(m/n)]` and (2) every meaning degree is 0 or 1; with
/// `n >= m` the conditions are mirrored. Condition 2 is checked first.
/// Assumes a strict-mode graph.
pub fn check_mi_optimal_configuration(g: &BipartiteGraph) -> MiConfigVerdict {
    let degrees = g.degrees();
    if g.n() <= g.m() {
        verdict_for(&degrees.mu, &degrees.omega, g.m() / g.n())
    } else {
        verdict_for(&degrees.omega, &degrees.mu, g.n() / g.m())
    }
}

fn verdict_for(small_side: &[usize], large_side: &[usize], max_d: usize) -> MiConfigVerdict {
    if large_side.iter().any(|&d| d > 1) {
        return MiConfigVerdict::ViolatesCondition2;
    }
    let d = small_side[0];
    if d < 1 || d > max_d || small_side.iter().any(|&x| x != d) {
        return MiConfigVerdict::ViolatesCondition1;
    }
    MiConfigVerdict::Optimal
}
