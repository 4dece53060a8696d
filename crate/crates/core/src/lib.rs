//! flatsum: exact computation and machine verification of flat-sum
//! identities for multiple harmonic q-sums.
//!
//! The crate computes six families of finite nested sums as exact elements
//! of Q(q) — the harmonic q-sum, its flat re-expression, their star
//! variants, and the Schur-shape generalizations over skew Young diagrams —
//! and verifies the identities connecting them: the q-harmonic/flat
//! equality, its Schur extension, the duality at primitive roots of unity,
//! and the connector and transport relations that drive the proofs.
//!
//! Layering:
//! - [`exactq`]: Q, Q[q], Q(q), and cyclotomic quotients.
//! - [`combinat`]: indices, skew shapes, diagonal intervals, tuple orders,
//!   tableau and region enumeration.
//! - [`sums`]: the six sum families, each with a naive enumerator and a
//!   prefix-sum dynamic-programming evaluator.
//! - [`connect`]: connectors, determinant connectors, connected sums, and
//!   transport-chain verification.
//! - [`roots`]: evaluation at roots of unity and the duality theorem.
//! - [`verify`]: sweep suites, variant certification, and JSON reports.

pub mod combinat;
pub mod connect;
pub mod error;
pub mod exactq;
pub mod roots;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};
