//! Verification sweeps and reporting: theorem/lemma suites over parameter
//! grids, the builtin shape battery, and machine-readable reports with
//! variant certification.

mod battery;
mod report;
mod suites;

pub use battery::{builtin_shapes, compositions_up_to, weight_assignments};
pub use report::{CaseOutcome, ResolvedVariants, Summary, VerificationReport};
pub use suites::{run_suite, Suite, SweepConfig};
