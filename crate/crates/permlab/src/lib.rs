//! A desk-scale laboratory for exact computations with permutation patterns.
//!
//! Everything here is exact: counts are big integers, ratios are big
//! rationals, and no floating point enters any computation (decimal rendering
//! of ratios is the one exception, and it happens only at output time).
//!
//! The crate is organized around a handful of themes:
//!
//! - [`perm`]: the [`Permutation`] type, the eight plot symmetries,
//!   structural operations (sums, inflation, composition), pattern
//!   containment, and entry statistics.
//! - [`order`]: principal downsets and intervals in the pattern containment
//!   order, compositions under the subword and componentwise orders, downsets
//!   in Young's lattice, and shape predicates on integer sequences
//!   (unimodality, log-concavity, log-convexity).
//! - [`classes`]: enumeration of avoidance classes Av(B), symmetry and
//!   Wilf-equivalence classification, the `g_k` statistics, and minimal bases
//!   extracted from membership oracles.
//! - [`boards`]: Ferrers boards, full rook placements, and shape-Wilf
//!   equivalence probing.
//! - [`derange`]: derangements inside permutation classes, fixed-point and
//!   excedance distributions, and the displacement-set dynamic program for
//!   separable permutations.
//! - [`machines`]: stack sorting in all the flavors covered here — greedy
//!   stack sort iteration, stacks in series, (r,s)-stacks, restricted
//!   containers, and bounded priority queues — with memoized reachability
//!   searches and explicit state budgets.
//! - [`series`]: exact diagnostics on counting sequences — Hankel
//!   determinants, Stieltjes continued fractions, ratio profiles, and
//!   algebraic-equation residuals.

pub mod boards;
pub mod classes;
pub mod derange;
pub mod error;
pub mod hash;
pub mod machines;
pub mod order;
pub mod perm;
pub mod poly;
pub mod series;

pub use error::Error;
pub use perm::{Permutation, Symmetry};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
