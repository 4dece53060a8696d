//! The six sum families as exact elements of Q(q).
//!
//! Conventions forced by additivity: the empty index or shape sums to 1,
//! an empty summation region sums to 0, and upper bound 1 gives 0 for every
//! nonempty index. Each family has two evaluators, a naive region walk and
//! a prefix-sum DP, which agree bit-exactly on canonical forms.

pub(crate) mod classical;
pub(crate) mod linear;
pub(crate) mod schur;

use crate::combinat::{DiagIndex, LinearIndex};
use crate::error::{Error, Result};
use crate::exactq::{q_factorial, QPoly, Rat, RatFun};

/// Common denominator for naive flat/harmonic walks below `upper`: every
/// term denominator is a product of at most `factors` q-integers [m] with
/// m < upper, so all of them divide ([upper-1]!)^factors.
pub(crate) fn common_denominator(upper: u32, factors: u32) -> QPoly {
    q_factorial(upper.saturating_sub(1)).pow(factors)
}

pub use classical::{
    classical_flat, classical_harmonic, classical_schur, classical_schur_flat,
    classical_star_flat,
};
pub use linear::{
    zeta_bz, zeta_bz_naive, zeta_bz_star, zeta_bz_star_naive, zeta_qflat, zeta_qflat_naive,
    zeta_qstar_flat, zeta_qstar_flat_naive,
};
pub use schur::{schur_bz, schur_bz_naive, schur_qflat, schur_qflat_naive, NumeratorReading};

/// The six sum families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumKind {
    Bz,
    QFlat,
    BzStar,
    QStarFlat,
    SchurBz,
    SchurQFlat,
}

impl SumKind {
    pub fn token(&self) -> &'static str {
        match self {
            SumKind::Bz => "bz",
            SumKind::QFlat => "qflat",
            SumKind::BzStar => "bz-star",
            SumKind::QStarFlat => "qstar-flat",
            SumKind::SchurBz => "schur-bz",
            SumKind::SchurQFlat => "schur-qflat",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "bz" => Some(SumKind::Bz),
            "qflat" => Some(SumKind::QFlat),
            "bz-star" => Some(SumKind::BzStar),
            "qstar-flat" => Some(SumKind::QStarFlat),
            "schur-bz" => Some(SumKind::SchurBz),
            "schur-qflat" => Some(SumKind::SchurQFlat),
            _ => None,
        }
    }

    pub fn is_schur(&self) -> bool {
        matches!(self, SumKind::SchurBz | SumKind::SchurQFlat)
    }
}

/// Argument of a sum: a composition for the linear families, a shape with
/// diagonal weights for the Schur families.
#[derive(Clone, Debug)]
pub enum SumArg {
    Linear(LinearIndex),
    Shape(DiagIndex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evaluator {
    Dp,
    Naive,
}

/// Evaluate any sum family. Errors when the argument kind does not match
/// the sum kind; `reading` is only consulted for the Schur flat sum.
pub fn evaluate(
    kind: SumKind,
    arg: &SumArg,
    upper: u32,
    reading: NumeratorReading,
    evaluator: Evaluator,
) -> Result<RatFun> {
    if upper < 1 {
        return Err(Error::Usage("upper bound must be positive".into()));
    }
    match (kind, arg) {
        (SumKind::Bz, SumArg::Linear(k)) => Ok(match evaluator {
            Evaluator::Dp => zeta_bz(k, upper),
            Evaluator::Naive => zeta_bz_naive(k, upper),
        }),
        (SumKind::QFlat, SumArg::Linear(k)) => Ok(match evaluator {
            Evaluator::Dp => zeta_qflat(k, upper),
            Evaluator::Naive => zeta_qflat_naive(k, upper),
        }),
        (SumKind::BzStar, SumArg::Linear(k)) => Ok(match evaluator {
            Evaluator::Dp => zeta_bz_star(k, upper),
            Evaluator::Naive => zeta_bz_star_naive(k, upper),
        }),
        (SumKind::QStarFlat, SumArg::Linear(k)) => Ok(match evaluator {
            Evaluator::Dp => zeta_qstar_flat(k, upper),
            Evaluator::Naive => zeta_qstar_flat_naive(k, upper),
        }),
        (SumKind::SchurBz, SumArg::Shape(kk)) => Ok(match evaluator {
            Evaluator::Dp => schur_bz(kk, upper),
            Evaluator::Naive => schur_bz_naive(kk, upper),
        }),
        (SumKind::SchurQFlat, SumArg::Shape(kk)) => Ok(match evaluator {
            Evaluator::Dp => schur_qflat(kk, upper, reading),
            Evaluator::Naive => schur_qflat_naive(kk, upper, reading),
        }),
        (kind, _) => Err(Error::Usage(format!(
            "sum kind {} does not accept this argument",
            kind.token()
        ))),
    }
}

/// The classical value: the q-sum specialized at q = 1. Poles cannot occur
/// since every denominator is a product of [m]_q with 1 <= m < upper.
pub fn classical_value(
    kind: SumKind,
    arg: &SumArg,
    upper: u32,
    reading: NumeratorReading,
) -> Result<Rat> {
    evaluate(kind, arg, upper, reading, Evaluator::Dp)?.specialize_q1()
}

/// The independent rational-arithmetic oracle over the same region.
pub fn classical_direct(kind: SumKind, arg: &SumArg, upper: u32) -> Result<Rat> {
    match (kind, arg) {
        (SumKind::Bz, SumArg::Linear(k)) => Ok(classical_harmonic(k, upper, true)),
        (SumKind::BzStar, SumArg::Linear(k)) => Ok(classical_harmonic(k, upper, false)),
        (SumKind::QFlat, SumArg::Linear(k)) => Ok(classical_flat(k, upper)),
        (SumKind::QStarFlat, SumArg::Linear(k)) => Ok(classical_star_flat(k, upper)),
        (SumKind::SchurBz, SumArg::Shape(kk)) => Ok(classical_schur(kk, upper)),
        (SumKind::SchurQFlat, SumArg::Shape(kk)) => Ok(classical_schur_flat(kk, upper)),
        (kind, _) => Err(Error::Usage(format!(
            "sum kind {} does not accept this argument",
            kind.token()
        ))),
    }
}
