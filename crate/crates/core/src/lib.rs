//! Exact split reliability of multigraphs.
//!
//! Split reliability of a graph with terminals `s` and `t` is the
//! probability that independent edge failures (each edge up with
//! probability `p`) leave exactly two components, one holding `s` and the
//! other `t`. This crate computes it (and all-, two- and K-terminal
//! reliability) as exact integer polynomials in `p`, enumerates small
//! graphs up to isomorphism and decides, with rational certificates,
//! whether a uniformly optimal `(n, m)`-graph exists.

pub mod canon;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod optimality;
pub mod poly;
pub mod reliability;
pub mod scalar;

pub use canon::{canonical_key, terminal_classes, CanonicalKey};
pub use enumeration::{enumerate_graphs, enumerate_terminal_classes, GraphMode};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{GraphFile, Multigraph, TerminalPair};
pub use optimality::{dominates, find_optimal, DominanceVerdict, OptimalityReport};
pub use poly::{IntervalSign, NVector, Polynomial};
pub use reliability::{all_terminal_rel, split_rel, Engine, SplitResult};

/// Exact integer-coefficient polynomial in `p`.
pub type IntPolynomial = Polynomial<num_bigint::BigInt>;
/// Exact rational-coefficient polynomial, used for Sturm sequences.
pub type RatPolynomial = Polynomial<num_rational::BigRational>;
/// Floating-point polynomial for quick sampling; never used for verdicts.
pub type FloatPolynomial = Polynomial<f64>;
/// Exact rational point in `[0, 1]`.
pub type Rational = num_rational::BigRational;
