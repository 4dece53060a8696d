//! The rational function field Q(q), with canonical representatives.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{QPoly, Rat};
use crate::error::{Error, Result};

thread_local! {
    static RING_OPS: Cell<u64> = const { Cell::new(0) };
}

/// Reset this thread's field-operation counter.
pub fn ops_reset() {
    RING_OPS.with(|c| c.set(0));
}

/// Field operations (add/sub/mul/div/neg in Q(q)) performed by this thread
/// since the last reset.
pub fn ops_count() -> u64 {
    RING_OPS.with(|c| c.get())
}

pub(crate) fn bump() {
    RING_OPS.with(|c| c.set(c.get() + 1));
}

/// An element of Q(q) in canonical form: numerator and denominator coprime,
/// denominator monic. Equality is structural, so two values are equal as
/// field elements iff they are equal as data.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    /// Canonicalize num/den. Errors if den is the zero polynomial.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun {
                num: QPoly::zero(),
                den: QPoly::one(),
            });
        }
        let g = QPoly::gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lead_inv = den.leading().expect("nonzero denominator").recip();
        Ok(RatFun {
            num: num.scale(&lead_inv),
            den: den.monic(),
        })
    }

    pub fn zero() -> Self {
        RatFun {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn q() -> Self {
        QPoly::q().into()
    }

    pub fn q_pow(k: usize) -> Self {
        QPoly::q_pow(k).into()
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::from_int(n).into()
    }

    pub fn from_rat(r: Rat) -> Self {
        QPoly::constant(r).into()
    }

    /// 1/p for a nonzero polynomial.
    pub fn recip_poly(p: &QPoly) -> Result<Self> {
        RatFun::new(QPoly::one(), p.clone())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        bump();
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFun) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        bump();
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, mut e: u32) -> RatFun {
        let mut base = self.clone();
        let mut acc = RatFun::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at q = 1, or a pole error when the denominator vanishes
    /// there. No limit is attempted.
    pub fn specialize_q1(&self) -> Result<Rat> {
        let one = Rat::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval(&one) / d)
    }
}

impl From<QPoly> for RatFun {
    fn from(num: QPoly) -> Self {
        RatFun {
            num,
            den: QPoly::one(),
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        bump();
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // a/b + c/d over the lcm of b and d keeps the final gcd small.
        let g = QPoly::gcd(&self.den, &rhs.den);
        let db = self.den.exact_div(&g).expect("gcd divides");
        let dd = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &dd) + &(&rhs.num * &db);
        let den = &self.den * &dd;
        RatFun::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        bump();
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        // Cross-reduce before multiplying so intermediates stay small.
        let g1 = QPoly::gcd(&self.num, &rhs.den);
        let g2 = QPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lead_inv = den.leading().expect("nonzero").recip();
        RatFun {
            num: num.scale(&lead_inv),
            den: den.monic(),
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        bump();
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

pub(crate) fn coeffs_to_pairs(p: &QPoly) -> Vec<[String; 2]> {
    p.coeffs_rat()
        .iter()
        .map(|c| [c.numer().to_string(), c.denom().to_string()])
        .collect()
}

pub(crate) fn pairs_to_poly(pairs: &[[String; 2]]) -> std::result::Result<QPoly, String> {
    let mut coeffs = Vec::with_capacity(pairs.len());
    for [n, d] in pairs {
        let n: num::BigInt = n.parse().map_err(|_| format!("bad integer {n:?}"))?;
        let d: num::BigInt = d.parse().map_err(|_| format!("bad integer {d:?}"))?;
        if d <= num::BigInt::from(0) {
            return Err("denominator must be positive".into());
        }
        coeffs.push(Rat::new(n, d));
    }
    Ok(QPoly::from_coeffs(coeffs))
}

#[derive(Serialize, Deserialize)]
struct RatFunWire {
    num: Vec<[String; 2]>,
    den: Vec<[String; 2]>,
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunWire {
            num: coeffs_to_pairs(&self.num),
            den: coeffs_to_pairs(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = RatFunWire::deserialize(deserializer)?;
        let num = pairs_to_poly(&wire.num).map_err(D::Error::custom)?;
        let den = pairs_to_poly(&wire.den).map_err(D::Error::custom)?;
        RatFun::new(num, den).map_err(|e| D::Error::custom(e.to_string()))
    }
}
