//! The scalar connector recurrences that power the transport relations.
//! Each check evaluates both sides exactly and reports equality; the sweep
//! suites grid these over all admissible arguments.

use super::{connector, q_power_signed, ConnectorKind};
use crate::error::{Error, Result};
use crate::exactq::{q_integer, QPoly, RatFun};

fn weight(v: i64) -> RatFun {
    // q^v / [v]
    RatFun::new(QPoly::q_pow(v as usize), q_integer(v as u32)).expect("[v] nonzero for v >= 1")
}

/// Verdicts for the two linear connector recurrences at (m, n); a rule that
/// does not apply at these arguments reports None.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecurrencePair {
    /// q^m/[m] C(m,n) = sum_{m<=b<=n} C(m,b) q^b/[b]   (needs m > 0)
    pub absorb: Option<bool>,
    /// sum_{m<a<=n} C(a,n)/[a] = sum_{m<=b<n} C(m,b)/[upper-b]   (needs m < n)
    pub exchange: Option<bool>,
}

impl RecurrencePair {
    pub fn all_hold(&self) -> bool {
        self.absorb != Some(false) && self.exchange != Some(false)
    }
}

/// Check both linear connector recurrences for 0 <= m <= n <= upper.
pub fn linear_connector_rules(m: i64, n: i64, upper: u32) -> Result<RecurrencePair> {
    if !(0 <= m && m <= n && n <= upper as i64) {
        return Err(Error::Usage(format!(
            "need 0 <= m <= n <= {upper}, got ({m}, {n})"
        )));
    }
    let kind = ConnectorKind::Linear;
    let absorb = (m > 0)
        .then(|| -> Result<bool> {
            let lhs = &weight(m) * &connector(kind, m, n, upper)?;
            let mut rhs = RatFun::zero();
            for b in m..=n {
                rhs = &rhs + &(&connector(kind, m, b, upper)? * &weight(b));
            }
            Ok(lhs == rhs)
        })
        .transpose()?;
    let exchange = (m < n)
        .then(|| -> Result<bool> {
            let mut lhs = RatFun::zero();
            for a in (m + 1)..=n {
                let inv = RatFun::new(QPoly::one(), q_integer(a as u32))?;
                lhs = &lhs + &(&inv * &connector(kind, a, n, upper)?);
            }
            let mut rhs = RatFun::zero();
            for b in m..n {
                let inv = RatFun::new(QPoly::one(), q_integer(upper - b as u32))?;
                rhs = &rhs + &(&connector(kind, m, b, upper)? * &inv);
            }
            Ok(lhs == rhs)
        })
        .transpose()?;
    Ok(RecurrencePair { absorb, exchange })
}

/// Schur connector difference rule for 0 < m < upper, 0 <= n <= n' < upper:
/// q^m/[m] (C(m,n') - C(m,n)) = sum_{b=n+1}^{n'} C(m,b) q^b/[b].
pub fn schur_diff_rule(m: i64, n: i64, n_hi: i64, upper: u32) -> Result<bool> {
    if !(0 < m && m < upper as i64 && 0 <= n && n <= n_hi && n_hi < upper as i64) {
        return Err(Error::Usage(format!(
            "need 0 < m < {upper} and 0 <= n <= n' < {upper}, got ({m}, {n}, {n_hi})"
        )));
    }
    let kind = ConnectorKind::Schur;
    let diff = &connector(kind, m, n_hi, upper)? - &connector(kind, m, n, upper)?;
    let lhs = &weight(m) * &diff;
    let mut rhs = RatFun::zero();
    for b in (n + 1)..=n_hi {
        rhs = &rhs + &(&connector(kind, m, b, upper)? * &weight(b));
    }
    Ok(lhs == rhs)
}

/// Schur connector column rule for 0 <= m <= m' < upper, 0 < n < upper:
/// sum_{a=m+1}^{m'} C(a,n) q^{n-a}/[n] = (C(m,n-1) - C(m',n-1)) / [upper-n].
pub fn schur_column_rule(m: i64, m_hi: i64, n: i64, upper: u32) -> Result<bool> {
    if !(0 <= m && m <= m_hi && m_hi < upper as i64 && 0 < n && n < upper as i64) {
        return Err(Error::Usage(format!(
            "need 0 <= m <= m' < {upper} and 0 < n < {upper}, got ({m}, {m_hi}, {n})"
        )));
    }
    let kind = ConnectorKind::Schur;
    let inv_n = RatFun::new(QPoly::one(), q_integer(n as u32))?;
    let mut lhs = RatFun::zero();
    for a in (m + 1)..=m_hi {
        let c = connector(kind, a, n, upper)?;
        if c.is_zero() {
            continue;
        }
        lhs = &lhs + &(&(&c * &q_power_signed(n - a)) * &inv_n);
    }
    let diff = &connector(kind, m, n - 1, upper)? - &connector(kind, m_hi, n - 1, upper)?;
    let inv_flat = RatFun::new(QPoly::one(), q_integer(upper - n as u32))?;
    Ok(lhs == &diff * &inv_flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_term_absorb() {
        let pair = linear_connector_rules(1, 1, 2).unwrap();
        assert_eq!(pair.absorb, Some(true));
        assert_eq!(pair.exchange, None);
    }

    #[test]
    fn three_term_cases() {
        assert_eq!(
            linear_connector_rules(1, 3, 4).unwrap().absorb,
            Some(true)
        );
        assert_eq!(
            linear_connector_rules(0, 2, 3).unwrap().exchange,
            Some(true)
        );
    }

    #[test]
    fn linear_rules_hold_on_a_grid() {
        for upper in 1..=7u32 {
            for n in 0..=upper as i64 {
                for m in 0..=n {
                    assert!(
                        linear_connector_rules(m, n, upper).unwrap().all_hold(),
                        "failed at ({m},{n}) upper {upper}"
                    );
                }
            }
        }
    }

    #[test]
    fn diff_rule_empty_sum() {
        // n = n' makes both sides zero.
        assert!(schur_diff_rule(1, 2, 2, 4).unwrap());
    }

    #[test]
    fn diff_and_column_rules_hold_on_a_grid() {
        for upper in 2..=6u32 {
            let top = upper as i64 - 1;
            for m in 1..=top {
                for n in 0..=top {
                    for n_hi in n..=top {
                        assert!(
                            schur_diff_rule(m, n, n_hi, upper).unwrap(),
                            "diff failed ({m},{n},{n_hi}) upper {upper}"
                        );
                    }
                }
            }
            for m in 0..=top {
                for m_hi in m..=top {
                    for n in 1..=top {
                        assert!(
                            schur_column_rule(m, m_hi, n, upper).unwrap(),
                            "column failed ({m},{m_hi},{n}) upper {upper}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn column_rule_empty_sum() {
        // m = m' makes both sides zero.
        assert!(schur_column_rule(2, 2, 1, 4).unwrap());
    }
}
