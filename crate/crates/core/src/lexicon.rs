//! Bipartite word-meaning graphs: construction, validation, generation, and
//! the edge-list text format.
//!
//! A graph has `n` words (rows) and `m` meanings (columns) with a 0/1
//! adjacency. Strict mode, the default, rejects words of degree zero;
//! meanings of degree zero are always allowed. Graphs are immutable after
//! construction and safe to share across threads.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::seed;

/// Retry cap for the rejection-sampled random generator.
pub const RANDOM_RETRY_CAP: u32 = 1000;

/// Word and meaning degree vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DegreeProfile {
    /// Degree of each word (number of meanings it is linked to).
    pub mu: Vec<usize>,
    /// Degree of each meaning (number of words it is linked to).
    pub omega: Vec<usize>,
}

/// Per-edge degrees and remaining degrees (degree minus the edge's own
/// contribution), aligned with [`BipartiteGraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDegreeView {
    pub word_degree: Vec<usize>,
    pub meaning_degree: Vec<usize>,
    pub word_remaining: Vec<usize>,
    pub meaning_remaining: Vec<usize>,
}

impl EdgeDegreeView {
    /// True iff the remaining meaning degree is zero on every edge, which is
    /// equivalent to every meaning having degree at most one.
    pub fn meaning_remaining_is_zero(&self) -> bool {
        self.meaning_remaining.iter().all(|&d| d == 0)
    }
}

/// Undirected bipartite word-meaning graph.
///
/// Edges are stored sorted by `(word, meaning)`; that order is the canonical
/// one used by every per-edge vector in the crate (joint probabilities, walk
/// transit counts, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    // (neighbour index, edge index) per vertex, sorted by neighbour.
    word_adj: Vec<Vec<(usize, usize)>>,
    meaning_adj: Vec<Vec<(usize, usize)>>,
}

impl BipartiteGraph {
    /// Build a graph in strict mode: every word must have degree at least one.
    pub fn new(n: usize, m: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = Self::new_permissive(n, m, edges)?;
        g.require_strict()?;
        Ok(g)
    }

    /// Build a graph admitting zero-degree words. Downstream probability
    /// operations still reject such graphs explicitly.
    pub fn new_permissive(n: usize, m: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one word and one meaning".to_string(),
            ));
        }
        for &(i, j) in &edges {
            if i >= n || j >= m {
                return Err(Error::EdgeOutOfBounds {
                    word: i,
                    meaning: j,
                    words: n,
                    meanings: m,
                });
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge {
                    word: w[0].0,
                    meaning: w[0].1,
                });
            }
        }
        let mut word_adj = vec![Vec::new(); n];
        let mut meaning_adj = vec![Vec::new(); m];
        for (e, &(i, j)) in edges.iter().enumerate() {
            word_adj[i].push((j, e));
            meaning_adj[j].push((i, e));
        }
        Ok(Self {
            n,
            m,
            edges,
            word_adj,
            meaning_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted ascending by `(word, meaning)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(meaning, edge index)` pairs for a word, sorted by meaning.
    pub fn word_neighbors(&self, word: usize) -> &[(usize, usize)] {
        &self.word_adj[word]
    }

    /// `(word, edge index)` pairs for a meaning, sorted by word.
    pub fn meaning_neighbors(&self, meaning: usize) -> &[(usize, usize)] {
        &self.meaning_adj[meaning]
    }

    pub fn word_degree(&self, word: usize) -> usize {
        self.word_adj[word].len()
    }

    pub fn meaning_degree(&self, meaning: usize) -> usize {
        self.meaning_adj[meaning].len()
    }

    pub fn has_edge(&self, word: usize, meaning: usize) -> bool {
        self.edge_index(word, meaning).is_some()
    }

    /// Position of `(word, meaning)` in the canonical edge order.
    pub fn edge_index(&self, word: usize, meaning: usize) -> Option<usize> {
        self.edges.binary_search(&(word, meaning)).ok()
    }

    pub fn degrees(&self) -> DegreeProfile {
        DegreeProfile {
            mu: self.word_adj.iter().map(Vec::len).collect(),
            omega: self.meaning_adj.iter().map(Vec::len).collect(),
        }
    }

    pub fn has_zero_degree_word(&self) -> bool {
        self.word_adj.iter().any(Vec::is_empty)
    }

    /// Error with the offending word if any word has degree zero.
    pub fn require_strict(&self) -> Result<()> {
        match self.word_adj.iter().position(Vec::is_empty) {
            Some(i) => Err(Error::ZeroDegreeWord(i)),
            None => Ok(()),
        }
    }

    /// True iff every meaning has degree at most one, i.e. the rows of the
    /// adjacency matrix are pairwise orthogonal.
    pub fn rows_pairwise_orthogonal(&self) -> bool {
        self.meaning_adj.iter().all(|a| a.len() <= 1)
    }

    /// Connectivity of the underlying undirected graph over all `n + m`
    /// vertices. Isolated meanings count as disconnecting.
    pub fn is_connected(&self) -> bool {
        let total = self.n + self.m;
        if total == 1 {
            return true;
        }
        let mut seen_word = vec![false; self.n];
        let mut seen_meaning = vec![false; self.m];
        let mut stack = vec![Vertex::Word(0)];
        seen_word[0] = true;
        let mut count = 1usize;
        while let Some(v) = stack.pop() {
            match v {
                Vertex::Word(i) => {
                    for &(j, _) in &self.word_adj[i] {
                        if !seen_meaning[j] {
                            seen_meaning[j] = true;
                            count += 1;
                            stack.push(Vertex::Meaning(j));
                        }
                    }
                }
                Vertex::Meaning(j) => {
                    for &(i, _) in &self.meaning_adj[j] {
                        if !seen_word[i] {
                            seen_word[i] = true;
                            count += 1;
                            stack.push(Vertex::Word(i));
                        }
                    }
                }
            }
        }
        count == total
    }

    pub fn edge_degree_view(&self) -> EdgeDegreeView {
        let mut view = EdgeDegreeView {
            word_degree: Vec::with_capacity(self.edges.len()),
            meaning_degree: Vec::with_capacity(self.edges.len()),
            word_remaining: Vec::with_capacity(self.edges.len()),
            meaning_remaining: Vec::with_capacity(self.edges.len()),
        };
        for &(i, j) in &self.edges {
            let mu = self.word_degree(i);
            let omega = self.meaning_degree(j);
            view.word_degree.push(mu);
            view.meaning_degree.push(omega);
            view.word_remaining.push(mu - 1);
            view.meaning_remaining.push(omega - 1);
        }
        view
    }

    /// Erdos-Renyi style generator: each `(word, meaning)` pair becomes an
    /// edge independently with `edge_probability`. Draws are rejected until
    /// no word has degree zero, which keeps the distribution the conditional
    /// one rather than a silently patched one.
    pub fn random(n: usize, m: usize, edge_probability: f64, rng_seed: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one word and one meaning".to_string(),
            ));
        }
        if edge_probability <= 0.0 || edge_probability > 1.0 || edge_probability.is_nan() {
            return Err(Error::InvalidParameter(
                "edge probability must satisfy 0 < p <= 1".to_string(),
            ));
        }
        let mut rng = seed::rng_from_seed(rng_seed);
        for _ in 0..RANDOM_RETRY_CAP {
            let mut edges = Vec::new();
            let mut all_covered = true;
            for i in 0..n {
                let mut covered = false;
                for j in 0..m {
                    if rng.gen_bool(edge_probability) {
                        edges.push((i, j));
                        covered = true;
                    }
                }
                all_covered &= covered;
            }
            if all_covered {
                return Self::new(n, m, edges);
            }
        }
        Err(Error::InfeasibleGeneration {
            attempts: RANDOM_RETRY_CAP,
            reason: "no draw produced a graph without zero-degree words",
        })
    }

    /// Graph realizing the principle of contrast: word `i` is linked to
    /// `mu_spec[i]` dedicated meanings, so every meaning has degree exactly
    /// one and the rows of the adjacency matrix are pairwise orthogonal.
    pub fn contrast(mu_spec: &[usize]) -> Result<Self> {
        if mu_spec.is_empty() {
            return Err(Error::InvalidParameter(
                "contrast spec needs at least one word".to_string(),
            ));
        }
        if let Some(i) = mu_spec.iter().position(|&d| d == 0) {
            return Err(Error::InvalidParameter(alloc::format!(
                "contrast spec requires degree >= 1, word {i} has 0"
            )));
        }
        let m: usize = mu_spec.iter().sum();
        let mut edges = Vec::with_capacity(m);
        let mut next_meaning = 0usize;
        for (i, &d) in mu_spec.iter().enumerate() {
            for _ in 0..d {
                edges.push((i, next_meaning));
                next_meaning += 1;
            }
        }
        Self::new(mu_spec.len(), m, edges)
    }

    /// Configuration with maximal word-meaning mutual information.
    ///
    /// With `n <= m` every word is linked to `d` private meanings
    /// (`1 <= d <= m / n`); with `n > m` the construction is mirrored and
    /// may leave words unlinked, so the result can fail strict-mode checks.
    pub fn mi_optimal(n: usize, m: usize, d: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one word and one meaning".to_string(),
            ));
        }
        if n <= m {
            let max = m / n;
            if d < 1 || d > max {
                return Err(Error::DegreeOutOfRange { d, max });
            }
            let mut edges = Vec::with_capacity(n * d);
            for i in 0..n {
                for k in 0..d {
                    edges.push((i, i * d + k));
                }
            }
            Self::new_permissive(n, m, edges)
        } else {
            let max = n / m;
            if d < 1 || d > max {
                return Err(Error::DegreeOutOfRange { d, max });
            }
            let mut edges = Vec::with_capacity(m * d);
            for j in 0..m {
                for k in 0..d {
                    edges.push((j * d + k, j));
                }
            }
            Self::new_permissive(n, m, edges)
        }
    }

    /// Canonical edge-list text: header `n m`, then one `i j` line per edge
    /// in ascending lexicographic order. Round-trips bit-exactly through
    /// [`BipartiteGraph::from_edge_list_permissive`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }

    /// Parse an edge list in strict mode. Lines starting with `#` are
    /// comments; blank lines are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let (n, m, edges) = parse_edge_list(text)?;
        Self::new(n, m, edges)
    }

    /// Parse an edge list without the strict-mode degree check.
    pub fn from_edge_list_permissive(text: &str) -> Result<Self> {
        let (n, m, edges) = parse_edge_list(text)?;
        Self::new_permissive(n, m, edges)
    }
}

type ParsedEdgeList = (usize, usize, Vec<(usize, usize)>);

fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let pair = parse_pair(line, idx + 1)?;
        match header {
            None => header = Some(pair),
            Some(_) => edges.push(pair),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing `n m` header line".to_string(),
    })?;
    Ok((n, m, edges))
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next();
    let b = it.next();
    let (a, b) = match (a, b, it.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => {
            return Err(Error::Parse {
                line: line_no,
                message: "expected exactly two integers".to_string(),
            })
        }
    };
    let parse = |tok: &str| {
        tok.parse::<usize>().map_err(|_| Error::Parse {
            line: line_no,
            message: alloc::format!("not a nonnegative integer: {tok:?}"),
        })
    };
    Ok((parse(a)?, parse(b)?))
}

/// A vertex of the bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Vertex {
    Word(usize),
    Meaning(usize),
}
