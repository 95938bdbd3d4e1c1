//! Degree-biased random walks.
//!
//! On the bipartite graph the walker alternates between words and meanings;
//! jumping from a meaning to a word weights each neighbour by `mu^phi`, and
//! from a word to a meaning by `omega^phi`. The closed-form stationary
//! quantities live in [`analytical_stationary`]; [`simulate_walk`] produces
//! seeded Monte Carlo censuses for comparison. A small unipartite variant is
//! included because the bipartite formulas are adapted from it.

use alloc::string::ToString;
use alloc::vec::Vec;

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::lexicon::{BipartiteGraph, Vertex};
use crate::model::degree_pows;
use crate::numeric::{self, CompensatedSum, Matrix};
use crate::seed;

/// Where a chain starts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum StartPolicy {
    /// Uniform over words (the default).
    #[default]
    UniformWords,
    /// Uniform over all `n + m` vertices.
    UniformVertices,
    Fixed(Vertex),
}

/// Simulation parameters. `steps` is the total number of recorded
/// transitions across all chains; each chain discards its own `burn_in`
/// transitions first. Chain `c` draws its seed as a fixed function of
/// `(master_seed, c)`, so a config pins the census bit for bit.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WalkConfig {
    pub steps: u64,
    pub burn_in: u64,
    pub phi: f64,
    pub start: StartPolicy,
    pub master_seed: u64,
    pub chains: u32,
}

impl WalkConfig {
    /// Config with the default burn-in (1% of steps), uniform-over-words
    /// start, and a single chain.
    pub fn new(steps: u64, phi: f64, master_seed: u64) -> Self {
        Self {
            steps,
            burn_in: steps / 100,
            phi,
            start: StartPolicy::UniformWords,
            master_seed,
            chains: 1,
        }
    }
}

/// Visit and transit counts from a walk. A transition is recorded as one
/// arrival (word or meaning, they alternate) plus one undirected traversal
/// of the edge it used, so `sum(pair_transits) == recorded_steps` and the
/// two visit totals differ by at most one per chain.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WalkCensus {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    pub word_visits: Vec<u64>,
    pub meaning_visits: Vec<u64>,
    /// Undirected traversal counts, aligned with the graph's edge order.
    pub pair_transits: Vec<u64>,
    pub recorded_steps: u64,
}

impl WalkCensus {
    pub fn empty(g: &BipartiteGraph) -> Self {
        Self {
            n: g.n(),
            m: g.m(),
            edges: g.edges().to_vec(),
            word_visits: vec![0; g.n()],
            meaning_visits: vec![0; g.m()],
            pair_transits: vec![0; g.edge_count()],
            recorded_steps: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Add another census over the same graph into this one.
    pub fn merge(&mut self, other: &WalkCensus) -> Result<()> {
        if self.n != other.n || self.m != other.m || self.edges != other.edges {
            return Err(Error::CensusShapeMismatch);
        }
        for (a, b) in self.word_visits.iter_mut().zip(&other.word_visits) {
            *a += b;
        }
        for (a, b) in self.meaning_visits.iter_mut().zip(&other.meaning_visits) {
            *a += b;
        }
        for (a, b) in self.pair_transits.iter_mut().zip(&other.pair_transits) {
            *a += b;
        }
        self.recorded_steps += other.recorded_steps;
        Ok(())
    }

    /// Pair transit counts normalized by recorded steps, as a dense matrix.
    pub fn empirical_joint(&self) -> Result<Matrix> {
        if self.recorded_steps == 0 {
            return Err(Error::EmptyCensus);
        }
        let total = self.recorded_steps as f64;
        let mut mt = Matrix::zeros(self.n, self.m);
        for (&(i, j), &c) in self.edges.iter().zip(&self.pair_transits) {
            mt.set(i, j, c as f64 / total);
        }
        Ok(mt)
    }

    /// Word visit frequencies normalized by recorded word slots. The chain
    /// has period two, so this is the stationary probability conditioned on
    /// sitting in the word partition.
    pub fn empirical_word_probabilities(&self) -> Result<Vec<f64>> {
        let total: u64 = self.word_visits.iter().sum();
        if total == 0 {
            return Err(Error::EmptyCensus);
        }
        Ok(self
            .word_visits
            .iter()
            .map(|&c| c as f64 / total as f64)
            .collect())
    }

    pub fn empirical_meaning_probabilities(&self) -> Result<Vec<f64>> {
        let total: u64 = self.meaning_visits.iter().sum();
        if total == 0 {
            return Err(Error::EmptyCensus);
        }
        Ok(self
            .meaning_visits
            .iter()
            .map(|&c| c as f64 / total as f64)
            .collect())
    }
}

/// Transition distribution from meaning `j` to words:
/// `p_v(s_i | r_j) = a_ij mu_i^phi / sum_l a_lj mu_l^phi`.
pub fn transition_meaning_to_word(g: &BipartiteGraph, phi: f64, j: usize) -> Result<Vec<f64>> {
    if g.meaning_degree(j) == 0 {
        return Err(Error::UnlinkedMeaning(j));
    }
    let (mu_pow, _) = degree_pows(g, phi);
    let nbrs = g.meaning_neighbors(j);
    let denom = numeric::compensated_sum(nbrs.iter().map(|&(i, _)| mu_pow[i]));
    let mut out = vec![0.0; g.n()];
    for &(i, _) in nbrs {
        out[i] = mu_pow[i] / denom;
    }
    Ok(out)
}

/// Transition distribution from word `i` to meanings:
/// `p_v(r_j | s_i) = a_ij omega_j^phi / sum_l a_il omega_l^phi`.
pub fn transition_word_to_meaning(g: &BipartiteGraph, phi: f64, i: usize) -> Result<Vec<f64>> {
    if g.word_degree(i) == 0 {
        return Err(Error::ZeroDegreeWord(i));
    }
    let (_, omega_pow) = degree_pows(g, phi);
    let nbrs = g.word_neighbors(i);
    let denom = numeric::compensated_sum(nbrs.iter().map(|&(j, _)| omega_pow[j]));
    let mut out = vec![0.0; g.m()];
    for &(j, _) in nbrs {
        out[j] = omega_pow[j] / denom;
    }
    Ok(out)
}

/// Closed-form stationary quantities of the biased walk.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Stationary {
    /// `p_v(s_i)`; sums to 1/2.
    pub word: Vec<f64>,
    /// `p_v(r_j)`; sums to 1/2.
    pub meaning: Vec<f64>,
    /// Stationary probability of traversing each edge in either direction,
    /// aligned with the graph's edge order. Entrywise equal to the
    /// degree-biased joint distribution.
    pub edge_transition: Vec<f64>,
}

/// Stationary visit probabilities `p_v(s_i) = mu_i^phi sum_j a_ij
/// omega_j^phi / (2M)` (and mirrored for meanings), plus per-edge undirected
/// transition probabilities assembled from the conditional-times-stationary
/// composition. Requires a connected graph.
pub fn analytical_stationary(g: &BipartiteGraph, phi: f64) -> Result<Stationary> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (mu_pow, omega_pow) = degree_pows(g, phi);
    let word_strength: Vec<f64> = (0..g.n())
        .map(|i| numeric::compensated_sum(g.word_neighbors(i).iter().map(|&(j, _)| omega_pow[j])))
        .collect();
    let meaning_strength: Vec<f64> = (0..g.m())
        .map(|j| numeric::compensated_sum(g.meaning_neighbors(j).iter().map(|&(i, _)| mu_pow[i])))
        .collect();
    let total = numeric::compensated_sum((0..g.n()).map(|i| mu_pow[i] * word_strength[i]));
    let double_total = 2.0 * total;
    let word: Vec<f64> = (0..g.n())
        .map(|i| mu_pow[i] * word_strength[i] / double_total)
        .collect();
    let meaning: Vec<f64> = (0..g.m())
        .map(|j| omega_pow[j] * meaning_strength[j] / double_total)
        .collect();
    // p_v(s -> r) + p_v(s <- r), each as conditional times stationary.
    let edge_transition = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let forward = omega_pow[j] / word_strength[i] * word[i];
            let backward = mu_pow[i] / meaning_strength[j] * meaning[j];
            forward + backward
        })
        .collect();
    Ok(Stationary {
        word,
        meaning,
        edge_transition,
    })
}

// Per-vertex cumulative neighbour weights for O(log deg) sampling.
struct WalkWeights {
    word_prefix: Vec<Vec<f64>>,
    meaning_prefix: Vec<Vec<f64>>,
}

impl WalkWeights {
    fn new(g: &BipartiteGraph, phi: f64) -> Self {
        let (mu_pow, omega_pow) = degree_pows(g, phi);
        let word_prefix = (0..g.n())
            .map(|i| {
                let mut cum = 0.0;
                g.word_neighbors(i)
                    .iter()
                    .map(|&(j, _)| {
                        cum += omega_pow[j];
                        cum
                    })
                    .collect()
            })
            .collect();
        let meaning_prefix = (0..g.m())
            .map(|j| {
                let mut cum = 0.0;
                g.meaning_neighbors(j)
                    .iter()
                    .map(|&(i, _)| {
                        cum += mu_pow[i];
                        cum
                    })
                    .collect()
            })
            .collect();
        Self {
            word_prefix,
            meaning_prefix,
        }
    }
}

fn sample_slot(prefix: &[f64], rng: &mut seed::Rng) -> usize {
    let total = *prefix.last().expect("nonempty neighbour list");
    let u = rng.gen::<f64>() * total;
    let slot = prefix.partition_point(|&s| s <= u);
    slot.min(prefix.len() - 1)
}

fn pick_start(g: &BipartiteGraph, policy: StartPolicy, rng: &mut seed::Rng) -> Result<Vertex> {
    Ok(match policy {
        StartPolicy::UniformWords => Vertex::Word(rng.gen_range(0..g.n())),
        StartPolicy::UniformVertices => {
            let k = rng.gen_range(0..g.n() + g.m());
            if k < g.n() {
                Vertex::Word(k)
            } else {
                Vertex::Meaning(k - g.n())
            }
        }
        StartPolicy::Fixed(v) => {
            let ok = match v {
                Vertex::Word(i) => i < g.n(),
                Vertex::Meaning(j) => j < g.m(),
            };
            if !ok {
                return Err(Error::InvalidParameter(
                    "fixed start vertex out of range".to_string(),
                ));
            }
            v
        }
    })
}

fn run_chain(
    g: &BipartiteGraph,
    weights: &WalkWeights,
    mut at: Vertex,
    burn_in: u64,
    quota: u64,
    rng: &mut seed::Rng,
    census: &mut WalkCensus,
) {
    for step in 0..burn_in + quota {
        let record = step >= burn_in;
        match at {
            Vertex::Word(i) => {
                let slot = sample_slot(&weights.word_prefix[i], rng);
                let (j, e) = g.word_neighbors(i)[slot];
                if record {
                    census.meaning_visits[j] += 1;
                    census.pair_transits[e] += 1;
                }
                at = Vertex::Meaning(j);
            }
            Vertex::Meaning(j) => {
                let slot = sample_slot(&weights.meaning_prefix[j], rng);
                let (i, e) = g.meaning_neighbors(j)[slot];
                if record {
                    census.word_visits[i] += 1;
                    census.pair_transits[e] += 1;
                }
                at = Vertex::Word(i);
            }
        }
    }
}

fn validate_walk_inputs(g: &BipartiteGraph, phi: f64) -> Result<()> {
    if phi < 0.0 || !phi.is_finite() {
        return Err(Error::InvalidParameter(
            "bias exponent phi must be a finite nonnegative real".to_string(),
        ));
    }
    g.require_strict()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Run a single chain from an explicit chain seed and return its census.
/// [`simulate_walk`] is a merge of these with
/// `chain_seed = seed::derive_seed(master_seed, c)`.
pub fn simulate_walk_chain(
    g: &BipartiteGraph,
    phi: f64,
    start: StartPolicy,
    burn_in: u64,
    steps: u64,
    chain_seed: u64,
) -> Result<WalkCensus> {
    if steps == 0 {
        return Err(Error::InvalidParameter("steps must be >= 1".to_string()));
    }
    validate_walk_inputs(g, phi)?;
    let weights = WalkWeights::new(g, phi);
    let mut census = WalkCensus::empty(g);
    let mut rng = seed::rng_from_seed(chain_seed);
    let at = pick_start(g, start, &mut rng)?;
    run_chain(g, &weights, at, burn_in, steps, &mut rng, &mut census);
    census.recorded_steps = steps;
    Ok(census)
}

/// Run the biased walk and return the merged census of all chains.
///
/// The recorded-step budget is split as evenly as possible across chains
/// (earlier chains take the remainder). Deterministic in
/// `(graph, config)`: chain `c` uses `seed::derive_seed(master_seed, c)`.
pub fn simulate_walk(g: &BipartiteGraph, config: &WalkConfig) -> Result<WalkCensus> {
    if config.steps == 0 {
        return Err(Error::InvalidParameter("steps must be >= 1".to_string()));
    }
    if config.chains == 0 {
        return Err(Error::InvalidParameter("chains must be >= 1".to_string()));
    }
    validate_walk_inputs(g, config.phi)?;
    let weights = WalkWeights::new(g, config.phi);
    let mut census = WalkCensus::empty(g);
    let chains = config.chains as u64;
    let base = config.steps / chains;
    let extra = config.steps % chains;
    for c in 0..config.chains {
        let quota = base + if (c as u64) < extra { 1 } else { 0 };
        if quota == 0 {
            continue;
        }
        let mut rng = seed::rng_from_seed(seed::derive_seed(config.master_seed, c as u64));
        let start = pick_start(g, config.start, &mut rng)?;
        run_chain(
            g,
            &weights,
            start,
            config.burn_in,
            quota,
            &mut rng,
            &mut census,
        );
        census.recorded_steps += quota;
    }
    Ok(census)
}

/// Entropy rate of the induced chain over all vertices, in nats:
/// `h = -sum_x pi_x sum_y P(y|x) ln P(y|x)`.
pub fn entropy_rate(g: &BipartiteGraph, phi: f64) -> Result<f64> {
    let stationary = analytical_stationary(g, phi)?;
    let (mu_pow, omega_pow) = degree_pows(g, phi);
    let mut h = CompensatedSum::new();
    for i in 0..g.n() {
        let nbrs = g.word_neighbors(i);
        let total = numeric::compensated_sum(nbrs.iter().map(|&(j, _)| omega_pow[j]));
        let mut row = CompensatedSum::new();
        for &(j, _) in nbrs {
            let p = omega_pow[j] / total;
            if p > 0.0 {
                row.add(-p * numeric::ln(p));
            }
        }
        h.add(stationary.word[i] * row.value());
    }
    for j in 0..g.m() {
        let nbrs = g.meaning_neighbors(j);
        let total = numeric::compensated_sum(nbrs.iter().map(|&(i, _)| mu_pow[i]));
        let mut row = CompensatedSum::new();
        for &(i, _) in nbrs {
            let p = mu_pow[i] / total;
            if p > 0.0 {
                row.add(-p * numeric::ln(p));
            }
        }
        h.add(stationary.meaning[j] * row.value());
    }
    Ok(numeric::max(h.value(), 0.0))
}

/// Simple undirected unipartite graph (symmetric 0/1 adjacency, no loops).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipartiteGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl UnipartiteGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one node".to_string(),
            ));
        }
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfBounds {
                    word: u,
                    meaning: v,
                    words: n,
                    meanings: n,
                });
            }
            if u == v {
                return Err(Error::InvalidParameter(
                    "self loops are not allowed".to_string(),
                ));
            }
            normalized.push(if u < v { (u, v) } else { (v, u) });
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge {
                    word: w[0].0,
                    meaning: w[0].1,
                });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Self { n, adj })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1usize;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

/// One-step transition distribution of the biased unipartite walk:
/// `p(j | i) = b_ij k_j^phi / sum_l b_il k_l^phi`.
pub fn unipartite_transition(u: &UnipartiteGraph, phi: f64, i: usize) -> Result<Vec<f64>> {
    if u.degree(i) == 0 {
        return Err(Error::Disconnected);
    }
    let k_pow: Vec<f64> = (0..u.node_count())
        .map(|v| numeric::pow(u.degree(v) as f64, phi))
        .collect();
    let denom = numeric::compensated_sum(u.neighbors(i).iter().map(|&v| k_pow[v]));
    let mut out = vec![0.0; u.node_count()];
    for &v in u.neighbors(i) {
        out[v] = k_pow[v] / denom;
    }
    Ok(out)
}

/// Stationary distribution of the biased unipartite walk:
/// `p(i) = k_i^phi c_i / T` with `c_i = sum_j b_ij k_j^phi`.
pub fn unipartite_stationary(u: &UnipartiteGraph, phi: f64) -> Result<Vec<f64>> {
    if !u.is_connected() || u.node_count() < 2 {
        return Err(Error::Disconnected);
    }
    let k_pow: Vec<f64> = (0..u.node_count())
        .map(|v| numeric::pow(u.degree(v) as f64, phi))
        .collect();
    let c: Vec<f64> = (0..u.node_count())
        .map(|i| numeric::compensated_sum(u.neighbors(i).iter().map(|&v| k_pow[v])))
        .collect();
    let total = numeric::compensated_sum((0..u.node_count()).map(|i| c[i] * k_pow[i]));
    Ok((0..u.node_count())
        .map(|i| k_pow[i] * c[i] / total)
        .collect())
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::model::joint_probability;
    use std::vec::Vec;

    fn g1() -> BipartiteGraph {
        BipartiteGraph::new(2, 3, vec![(0, 0), (0, 1), (1, 1), (1, 2)]).unwrap()
    }

    fn star() -> BipartiteGraph {
        BipartiteGraph::new(1, 3, vec![(0, 0), (0, 1), (0, 2)]).unwrap()
    }

    fn k22() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
    }

    fn assert_close(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn transition_examples() {
        let t = transition_meaning_to_word(&g1(), 1.0, 1).unwrap();
        assert_close(t[0], 0.5, 1e-15);
        assert_close(t[1], 0.5, 1e-15);

        // Words of degree 1 and 3 share meaning 0.
        let g = BipartiteGraph::new(2, 3, vec![(0, 0), (1, 0), (1, 1), (1, 2)]).unwrap();
        let t = transition_meaning_to_word(&g, 1.0, 0).unwrap();
        assert_close(t[0], 0.25, 1e-15);
        assert_close(t[1], 0.75, 1e-15);

        let t = transition_word_to_meaning(&g1(), 1.0, 0).unwrap();
        assert_close(t[0], 1.0 / 3.0, 1e-15);
        assert_close(t[1], 2.0 / 3.0, 1e-15);
        let t = transition_word_to_meaning(&g1(), 0.0, 0).unwrap();
        assert_close(t[0], 0.5, 1e-15);
        assert_close(t[1], 0.5, 1e-15);
        for phi in [0.0, 1.0, 2.5] {
            let t = transition_word_to_meaning(&star(), phi, 0).unwrap();
            for p in t {
                assert_close(p, 1.0 / 3.0, 1e-15);
            }
        }

        let g = BipartiteGraph::new_permissive(1, 2, vec![(0, 0)]).unwrap();
        assert!(matches!(
            transition_meaning_to_word(&g, 1.0, 1),
            Err(Error::UnlinkedMeaning(1))
        ));
    }

    #[test]
    fn stationary_examples() {
        let s = analytical_stationary(&g1(), 1.0).unwrap();
        assert_close(s.word[0], 0.25, 1e-15);
        assert_close(2.0 * s.word[0], 0.5, 1e-15);

        for phi in [0.0, 1.0, 2.0] {
            let s = analytical_stationary(&star(), phi).unwrap();
            assert_close(s.word[0], 0.5, 1e-15);
        }

        let s = analytical_stationary(&k22(), 1.0).unwrap();
        for p in &s.word {
            assert_close(*p, 0.25, 1e-15);
        }

        let word_sum: f64 = s.word.iter().sum();
        let meaning_sum: f64 = s.meaning.iter().sum();
        assert_close(word_sum, 0.5, 1e-12);
        assert_close(meaning_sum, 0.5, 1e-12);
    }

    #[test]
    fn stationary_edge_transitions_match_joint() {
        for phi in [0.0, 0.7, 1.0, 2.0] {
            let s = analytical_stationary(&g1(), phi).unwrap();
            let j = joint_probability(&g1(), phi).unwrap();
            for (a, b) in s.edge_transition.iter().zip(j.probs()) {
                assert_close(*a, *b, 1e-14);
            }
        }
    }

    #[test]
    fn stationary_requires_connectivity() {
        let disjoint = BipartiteGraph::new(2, 2, vec![(0, 0), (1, 1)]).unwrap();
        assert!(matches!(
            analytical_stationary(&disjoint, 1.0),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn star_walk_alternates_exactly() {
        let config = WalkConfig {
            steps: 10_000,
            burn_in: 100,
            phi: 0.0,
            start: StartPolicy::UniformWords,
            master_seed: 3,
            chains: 1,
        };
        let census = simulate_walk(&star(), &config).unwrap();
        assert_eq!(census.word_visits[0], 5_000);
        assert_eq!(census.meaning_visits.iter().sum::<u64>(), 5_000);
        assert_eq!(census.pair_transits.iter().sum::<u64>(), 10_000);
    }

    #[test]
    fn walk_is_deterministic() {
        let config = WalkConfig::new(50_000, 1.0, 7);
        let a = simulate_walk(&g1(), &config).unwrap();
        let b = simulate_walk(&g1(), &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn chain_merge_is_plain_addition() {
        let merged = simulate_walk(
            &g1(),
            &WalkConfig {
                steps: 4_000,
                burn_in: 10,
                phi: 1.0,
                start: StartPolicy::UniformWords,
                master_seed: 11,
                chains: 4,
            },
        )
        .unwrap();
        // The same four chains run one by one and summed by merge.
        let mut manual = WalkCensus::empty(&g1());
        for c in 0..4u64 {
            let single = simulate_walk_chain(
                &g1(),
                1.0,
                StartPolicy::UniformWords,
                10,
                1_000,
                seed::derive_seed(11, c),
            )
            .unwrap();
            manual.merge(&single).unwrap();
        }
        assert_eq!(merged, manual);
    }

    #[test]
    fn alternation_bounds_visit_totals() {
        let config = WalkConfig {
            steps: 9_999,
            burn_in: 0,
            phi: 1.0,
            start: StartPolicy::UniformVertices,
            master_seed: 5,
            chains: 3,
        };
        let census = simulate_walk(&g1(), &config).unwrap();
        let words: u64 = census.word_visits.iter().sum();
        let meanings: u64 = census.meaning_visits.iter().sum();
        assert_eq!(words + meanings, census.recorded_steps);
        assert!(words.abs_diff(meanings) <= 3);
    }

    #[test]
    fn empirical_joint_single_edge() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0)]).unwrap();
        let census = simulate_walk(&g, &WalkConfig::new(100, 1.0, 1)).unwrap();
        let j = census.empirical_joint().unwrap();
        assert_eq!(j.get(0, 0), 1.0);
    }

    #[test]
    fn walk_input_validation() {
        let disjoint = BipartiteGraph::new(2, 2, vec![(0, 0), (1, 1)]).unwrap();
        assert!(matches!(
            simulate_walk(&disjoint, &WalkConfig::new(10, 1.0, 0)),
            Err(Error::Disconnected)
        ));
        assert!(simulate_walk(&g1(), &WalkConfig::new(0, 1.0, 0)).is_err());
        let mut config = WalkConfig::new(10, 1.0, 0);
        config.start = StartPolicy::Fixed(Vertex::Meaning(9));
        assert!(simulate_walk(&g1(), &config).is_err());
    }

    #[test]
    fn entropy_rate_examples() {
        let single = BipartiteGraph::new(1, 1, vec![(0, 0)]).unwrap();
        assert_close(entropy_rate(&single, 1.0).unwrap(), 0.0, 1e-15);

        for phi in [0.0, 1.0, 2.0] {
            assert_close(
                entropy_rate(&k22(), phi).unwrap(),
                core::f64::consts::LN_2,
                1e-12,
            );
        }

        // G1 reports both biased and unbiased rates; only finiteness and
        // nonnegativity are contractual.
        let h1 = entropy_rate(&g1(), 1.0).unwrap();
        let h0 = entropy_rate(&g1(), 0.0).unwrap();
        assert!(h1.is_finite() && h1 >= 0.0);
        assert!(h0.is_finite() && h0 >= 0.0);
    }

    #[test]
    fn unipartite_examples() {
        let triangle = UnipartiteGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        for phi in [0.0, 1.0, 2.0] {
            let p = unipartite_stationary(&triangle, phi).unwrap();
            for v in p {
                assert_close(v, 1.0 / 3.0, 1e-15);
            }
        }

        let path = UnipartiteGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        for phi in [0.0, 1.0] {
            let p = unipartite_stationary(&path, phi).unwrap();
            assert_close(p[0], 0.25, 1e-15);
            assert_close(p[1], 0.5, 1e-15);
            assert_close(p[2], 0.25, 1e-15);
        }

        let split = UnipartiteGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            unipartite_stationary(&split, 1.0),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn unipartite_stationary_is_a_fixed_point() {
        let g = UnipartiteGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        for phi in [0.0, 1.0, 2.0] {
            let p = unipartite_stationary(&g, phi).unwrap();
            let mut next = vec![0.0; 5];
            for i in 0..5 {
                let row = unipartite_transition(&g, phi, i).unwrap();
                for v in 0..5 {
                    next[v] += p[i] * row[v];
                }
            }
            let worst = p
                .iter()
                .zip(&next)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            assert!(worst < 1e-12, "fixed-point residual {worst}");
        }
    }

    #[test]
    fn unipartite_validation() {
        assert!(UnipartiteGraph::new(2, &[(0, 0)]).is_err());
        assert!(UnipartiteGraph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(UnipartiteGraph::new(2, &[(0, 5)]).is_err());
        let v: Vec<(usize, usize)> = Vec::new();
        assert!(matches!(
            unipartite_stationary(&UnipartiteGraph::new(1, &v).unwrap(), 1.0),
            Err(Error::Disconnected)
        ));
    }
}
