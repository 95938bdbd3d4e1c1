//! Word-meaning network laboratory: exact probability models, degree-biased
//! random walks, information metrics, and power-law analysis on bipartite
//! graphs.
//!
//! The crate is organised around five building blocks:
//!
//! - [`lexicon`]: bipartite word-meaning graphs, degree bookkeeping,
//!   generators, and the edge-list text format.
//! - [`model`]: the joint word-meaning distributions induced by a degree-bias
//!   exponent, their marginals and conditionals, and the prior-composed
//!   model family.
//! - [`walk`]: degree-biased random walks on bipartite (and unipartite)
//!   graphs, closed-form stationary distributions, and seeded Monte Carlo
//!   censuses.
//! - [`info`]: entropies, mutual information, and the structural check for
//!   MI-maximal configurations.
//! - [`fit`]: log-log power-law regression plus the degree/probability law
//!   and bound checks built on it.
//!
//! The crate is `no_std` (it requires `alloc`); transcendental math goes
//! through `libm` so results do not depend on the platform libm. All
//! randomness flows from explicit seeds (see [`seed`]), so every result is
//! reproducible bit for bit.

#![no_std]
#![forbid(unsafe_code)]

#[macro_use]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod fit;
pub mod info;
pub mod lexicon;
pub mod model;
pub mod numeric;
pub mod seed;
pub mod walk;

pub use error::{Error, Result};
pub use lexicon::{BipartiteGraph, DegreeProfile, EdgeDegreeView, Vertex};
pub use model::{JointDistribution, JointKind, MeaningPrior};
pub use walk::{StartPolicy, UnipartiteGraph, WalkCensus, WalkConfig};
