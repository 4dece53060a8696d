//! q-integers, q-factorials, and Gaussian binomial coefficients.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::One;

use super::poly::{QPoly, Rat};

/// [n]_q = 1 + q + ... + q^{n-1}, with [0]_q = 0.
pub fn q_integer(n: u32) -> QPoly {
    QPoly::from_coeffs(vec![Rat::one(); n as usize])
}

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
pub fn q_factorial(n: u32) -> QPoly {
    let mut acc = QPoly::one();
    for j in 1..=n {
        acc = &acc * &q_integer(j);
    }
    acc
}

fn binom_cache() -> &'static Mutex<HashMap<(u32, u32), QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), QPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gaussian binomial (n choose m)_q as a polynomial.
///
/// Computed by the Pascal recurrence
/// (n m)_q = (n-1 m-1)_q + q^m (n-1 m)_q with global memoization; the
/// factorial-quotient route lives in [`q_binomial_by_factorials`] as an
/// independent cross-check. Returns the zero polynomial when m > n, so the
/// connector conventions downstream need no special cases.
pub fn q_binomial(n: u32, m: u32) -> QPoly {
    if m > n {
        return QPoly::zero();
    }
    if m == 0 || m == n {
        return QPoly::one();
    }
    if let Some(hit) = binom_cache().lock().unwrap().get(&(n, m)) {
        return hit.clone();
    }
    let left = q_binomial(n - 1, m - 1);
    let right = q_binomial(n - 1, m);
    let value = &left + &(&QPoly::q_pow(m as usize) * &right);
    binom_cache()
        .lock()
        .unwrap()
        .insert((n, m), value.clone());
    value
}

/// (n choose m)_q via the exact quotient [n]_q! / ([m]_q! [n-m]_q!).
/// Independent of the Pascal route; used as its oracle.
pub fn q_binomial_by_factorials(n: u32, m: u32) -> QPoly {
    if m > n {
        return QPoly::zero();
    }
    let num = q_factorial(n);
    let den = &q_factorial(m) * &q_factorial(n - m);
    num.exact_div(&den)
        .expect("factorial quotient is a polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::poly::rat_int;
    use num::Zero;

    fn pl(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn q_integer_examples() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), QPoly::one());
        assert_eq!(q_integer(3), pl(&[1, 1, 1]));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), QPoly::one());
        assert_eq!(q_factorial(2), pl(&[1, 1]));
        // (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        assert_eq!(q_factorial(3), pl(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(7, 0), QPoly::one());
        assert_eq!(q_binomial(3, 1), pl(&[1, 1, 1]));
        assert_eq!(q_binomial(4, 2), pl(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3).is_zero());
    }

    #[test]
    fn pascal_matches_factorial_quotient() {
        for n in 0..=12 {
            for m in 0..=n {
                assert_eq!(
                    q_binomial(n, m),
                    q_binomial_by_factorials(n, m),
                    "mismatch at ({n},{m})"
                );
            }
        }
    }

    #[test]
    fn binomial_coefficients_nonnegative_and_palindromic() {
        for n in 0..=12u32 {
            for m in 0..=n {
                let b = q_binomial(n, m);
                let coeffs = b.coeffs_rat();
                assert!(coeffs.iter().all(|c| c.is_integer() && *c >= Rat::zero()));
                let rev: Vec<_> = coeffs.iter().rev().cloned().collect();
                assert_eq!(coeffs, rev, "not palindromic at ({n},{m})");
            }
        }
    }

    #[test]
    fn specializes_to_ordinary_binomial() {
        let mut pascal = vec![vec![rat_int(1)]];
        for n in 1..=12usize {
            let prev = &pascal[n - 1];
            let mut row = vec![rat_int(1)];
            for m in 1..n {
                row.push(&prev[m - 1] + &prev[m]);
            }
            row.push(rat_int(1));
            pascal.push(row);
        }
        for n in 0..=12u32 {
            for m in 0..=n {
                let v = q_binomial(n, m).eval(&Rat::one());
                assert_eq!(v, pascal[n as usize][m as usize]);
            }
        }
    }
}
