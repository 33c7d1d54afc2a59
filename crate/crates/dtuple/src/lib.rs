//! Diophantine tuple toolkit.
//!
//! A Diophantine m-tuple is a set of m distinct positive integers such that
//! the product of any two of them, plus one, is a perfect square. The classic
//! example is the Fermat set {1, 3, 8, 120}.
//!
//! This crate provides:
//!
//! - exact integer primitives ([`arith`]): integer square root and
//!   perfect-square certification on arbitrary-precision integers;
//! - tuple verification, regular extension d⁺ = a+b+c+2abc+2rst, and
//!   exhaustive enumeration of tuples up to a limit ([`tuples`]);
//! - solution sequences of the simultaneous Pellian equations
//!   Az²−Cx² = A−C, Bz²−Cy² = B−C as binary recurrences, and the
//!   intersection search that yields extension candidates D ([`pell`]);
//! - executable verifiers for the index relation n ≤ m ≤ 2n, the
//!   congruence Am²+λSm ≡ Bn²+λTn (mod 4C), and the gap lower bound
//!   m > 0.48·B^(−1/2)·C^(1/2) ([`lemmas`]);
//! - the analytic bound pipeline combining m ≥ 0.678·C^(1/4) with the
//!   Matveev-derived upper bound m/log(351m) < 2.786·10¹²·log²C, whose
//!   crossover places the largest element of any quintuple below 10⁷⁶
//!   ([`bounds`]).
//!
//! All integer arithmetic is exact at any magnitude; the analytic inequality
//! checks use 64-bit floats with directed rounding so that a "holds" verdict
//! is rigorous in the claimed direction.

pub mod arith;
pub mod bounds;
pub mod lemmas;
pub mod pell;
pub mod tuples;

pub use arith::Nat;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input that is not a Diophantine triple where one is required.
    #[error("{a} * {b} + 1 = {product} is not a perfect square, so the input is not a Diophantine triple")]
    NotATriple { a: Nat, b: Nat, product: Nat },

    /// Structurally invalid tuple input (zero, duplicates, not increasing).
    #[error("malformed tuple: {0}")]
    MalformedTuple(String),

    /// A stated hypothesis of a lemma or bound is violated.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// Bisection bracket where the inequality does not change verdict.
    #[error("bracket [1e{lo_exp}, 1e{hi_exp}] does not straddle a sign change of the combined inequality")]
    NoSignChange { lo_exp: f64, hi_exp: f64 },

    /// Out-of-range parameter for an operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
