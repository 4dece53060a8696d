//! Connectors, determinant connectors, connected sums, and the transport
//! machinery that walks an index across the connector one entry at a time.
//!
//! Two connector normalizations coexist and are never mixed: the linear
//! connected sums divide by the full binomial at the upper bound and pair
//! with sums reaching one past it, while the Schur machinery divides by the
//! binomial one below and pairs with sums strictly below the bound.

mod detconn;
mod linear;
mod rules;
mod schur;

pub use detconn::{det_column_rule, det_connector, det_diff_rule};
pub use linear::{
    chain_is_constant, connected_sum_linear, transport_check_linear, LinearConnectedSpec,
    RegionVariant, TransportStep,
};
pub use rules::{
    linear_connector_rules, schur_column_rule, schur_diff_rule, RecurrencePair,
};
pub use schur::{
    connected_sum_schur, schur_chain_is_constant, transport_check_schur, SchurTransportStep,
};

use crate::error::{Error, Result};
use crate::exactq::{q_binomial, QPoly, RatFun};

/// Which binomial normalizes the connector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectorKind {
    /// binom(n, m)_q / binom(upper, m)_q, arguments in [0, upper].
    Linear,
    /// binom(n, m)_q / binom(upper-1, m)_q, arguments in [0, upper-1].
    /// Equals 1 at n = upper-1 and 0 for m > n.
    Schur,
}

impl ConnectorKind {
    fn denominator_top(&self, upper: u32) -> u32 {
        match self {
            ConnectorKind::Linear => upper,
            ConnectorKind::Schur => upper - 1,
        }
    }
}

/// The connector C(m, n): a ratio of Gaussian binomials. Zero when m > n,
/// one when n equals the normalizing top; out-of-range arguments are usage
/// errors.
pub fn connector(kind: ConnectorKind, m: i64, n: i64, upper: u32) -> Result<RatFun> {
    let top = kind.denominator_top(upper) as i64;
    if m < 0 || n < 0 || m > top || n > top {
        return Err(Error::Usage(format!(
            "connector arguments ({m}, {n}) out of range [0, {top}]"
        )));
    }
    RatFun::new(q_binomial(n as u32, m as u32), q_binomial(top as u32, m as u32))
}

/// q^e for a possibly negative exponent.
pub(crate) fn q_power_signed(e: i64) -> RatFun {
    if e >= 0 {
        RatFun::q_pow(e as usize)
    } else {
        RatFun::new(QPoly::one(), QPoly::q_pow((-e) as usize)).expect("q^k is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat_int;

    fn pl(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn zero_row_connector_is_one() {
        for n in 0..=3 {
            assert_eq!(
                connector(ConnectorKind::Linear, 0, n, 3).unwrap(),
                RatFun::one()
            );
        }
    }

    #[test]
    fn linear_connector_value() {
        // C(1, 2) at upper 3: [2]/[3]
        assert_eq!(
            connector(ConnectorKind::Linear, 1, 2, 3).unwrap(),
            RatFun::new(pl(&[1, 1]), pl(&[1, 1, 1])).unwrap()
        );
    }

    #[test]
    fn schur_connector_conventions() {
        for upper in 3..=6u32 {
            // zero above the diagonal
            assert!(connector(ConnectorKind::Schur, 2, 1, upper).unwrap().is_zero());
            // one at the right edge
            for m in 0..upper as i64 {
                assert_eq!(
                    connector(ConnectorKind::Schur, m, upper as i64 - 1, upper).unwrap(),
                    RatFun::one()
                );
            }
        }
    }

    #[test]
    fn out_of_range_is_usage_error() {
        assert!(connector(ConnectorKind::Linear, 4, 1, 3).is_err());
        assert!(connector(ConnectorKind::Schur, 3, 1, 3).is_err());
        assert!(connector(ConnectorKind::Linear, -1, 1, 3).is_err());
    }
}
