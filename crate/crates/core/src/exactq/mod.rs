//! Exact arithmetic in Q, Q[q], the field Q(q), and the cyclotomic quotients
//! Q[q]/(Phi_N). Every value in the crate bottoms out here; there is no
//! floating point anywhere.
//!
//! All values are immutable and all operations are pure, so everything can be
//! shared across threads. The two memo tables (Gaussian binomials and
//! cyclotomic polynomials) sit behind mutexes and return identical results
//! regardless of call order.

pub(crate) mod accum;
mod cyclo;
mod poly;
mod qbinom;
mod ratfun;

pub use cyclo::{cyclotomic_polynomial, euler_phi, to_cyclo, Cyclo};
pub use poly::{rat_int, QPoly, Rat};
pub use qbinom::{q_binomial, q_binomial_by_factorials, q_factorial, q_integer};
pub use ratfun::{ops_count, ops_reset, RatFun};
pub(crate) use ratfun::bump as count_ring_op;
