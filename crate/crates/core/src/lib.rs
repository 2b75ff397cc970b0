//! A toolkit for optimizing set functions with diminishing returns.
//!
//! The crate is organized around a memoizing [`SetFunction`] oracle over a
//! finite [`GroundSet`]. On top of it sit:
//!
//! - [`maximize`] — greedy maximization under cardinality, knapsack, matroid,
//!   and multiway-partition structures, with the classical guarantee constants
//!   attached to every result.
//! - [`minimize`] — unconstrained submodular minimization through the Lovász
//!   extension (projected subgradient and minimum-norm-point Frank-Wolfe).
//! - [`extensions`] — Lovász and multilinear extensions plus the continuous
//!   greedy algorithm with randomized rounding.
//! - [`weaksub`] — submodularity ratios and subset selection for regression
//!   (forward selection, orthogonal matching pursuit, oblivious).
//! - [`adaptive`] — sequence selection on state graphs with conditional
//!   marginal gains and the adaptive sequence greedy policy.
//! - [`distributed`] — the two-round merge protocol over simulated machines.
//! - [`supsub`] — difference-of-submodular maximization via tight modular
//!   upper bounds, with an automatic certified decomposition.
//! - [`continuous`] — DR-submodular quadratics on down-closed polytopes:
//!   Frank-Wolfe variant and projected gradient ascent.
//!
//! Every solver is deterministic given its inputs (ties break toward the
//! lowest element index) and desk-scale instances can be certified against
//! the exhaustive oracles in [`oracle`].

pub mod adaptive;
pub mod constraints;
pub mod continuous;
pub mod distributed;
pub mod error;
pub mod extensions;
pub mod maximize;
pub mod minimize;
pub mod objectives;
pub mod oracle;
pub mod set;
pub mod supsub;
pub mod weaksub;

pub use error::{Error, Result};
pub use oracle::SetFunction;
pub use set::{GroundSet, Subset};

/// The classical greedy guarantee constant, 1 - 1/e.
pub fn one_minus_inv_e() -> f64 {
    1.0 - std::f64::consts::E.recip()
}
