//! Cyclotomic polynomials and exact arithmetic in Q[q]/(Phi_N), the field
//! generated by a primitive N-th root of unity. No complex floating point
//! appears anywhere; a root of unity is the class of q modulo Phi_N.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::QPoly;
use super::ratfun::{coeffs_to_pairs, pairs_to_poly, RatFun};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, QPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The N-th cyclotomic polynomial Phi_N, monic with integer coefficients,
/// from the exact division of q^N - 1 by the product of Phi_d over proper
/// divisors d of N.
pub fn cyclotomic_polynomial(n: u32) -> QPoly {
    assert!(n >= 1, "cyclotomic level must be positive");
    if let Some(hit) = cyclo_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let value = if n == 1 {
        // q - 1
        &QPoly::q() - &QPoly::one()
    } else {
        let mut den = QPoly::one();
        for d in 1..n {
            if n % d == 0 {
                den = &den * &cyclotomic_polynomial(d);
            }
        }
        let num = &QPoly::q_pow(n as usize) - &QPoly::one();
        num.exact_div(&den)
            .expect("cyclotomic division is exact")
    };
    cyclo_cache().lock().unwrap().insert(n, value.clone());
    value
}

/// An element of Q[q]/(Phi_N): a residue of degree < phi(N) at a fixed level.
/// Two elements are equal iff their levels and residues are identical.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclo {
    level: u32,
    residue: QPoly,
}

impl Cyclo {
    /// Reduce a polynomial modulo Phi_N.
    pub fn from_poly(level: u32, p: &QPoly) -> Self {
        assert!(level >= 1, "cyclotomic level must be positive");
        let (_, residue) = p.div_rem(&cyclotomic_polynomial(level));
        Cyclo { level, residue }
    }

    pub fn zero(level: u32) -> Self {
        Cyclo {
            level,
            residue: QPoly::zero(),
        }
    }

    pub fn one(level: u32) -> Self {
        Cyclo::from_poly(level, &QPoly::one())
    }

    /// The class of q itself: a primitive N-th root of unity.
    pub fn root(level: u32) -> Self {
        Cyclo::from_poly(level, &QPoly::q())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn residue(&self) -> &QPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn check_level(&self, other: &Cyclo) {
        assert_eq!(
            self.level, other.level,
            "mixed cyclotomic levels {} and {}",
            self.level, other.level
        );
    }

    /// Multiplicative inverse via extended Euclid against Phi_N. Phi_N is
    /// irreducible over Q, so every nonzero residue is invertible.
    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus = cyclotomic_polynomial(self.level);
        let (g, s, _) = QPoly::ext_gcd(&self.residue, &modulus);
        debug_assert!(g.is_one(), "residue shares a factor with Phi_N");
        Ok(Cyclo::from_poly(self.level, &s))
    }

    pub fn div(&self, rhs: &Cyclo) -> Result<Cyclo> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one(self.level);
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

    /// The Galois conjugate sending the root to its a-th power; a must be
    /// coprime to the level.
    pub fn galois(&self, a: u32) -> Cyclo {
        assert_eq!(
            num::integer::gcd(a, self.level),
            1,
            "galois exponent must be coprime to the level"
        );
        Cyclo::from_poly(self.level, &self.residue.compose_q_pow(a as usize))
    }
}

/// Evaluate a rational function at a primitive N-th root of unity, exactly.
/// Errors when Phi_N divides the denominator.
pub fn to_cyclo(f: &RatFun, level: u32) -> Result<Cyclo> {
    let num = Cyclo::from_poly(level, f.num());
    let den = Cyclo::from_poly(level, f.den());
    if den.is_zero() {
        return Err(Error::PoleAtRoot(level));
    }
    Ok(&num * &den.inv().expect("nonzero denominator"))
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.check_level(rhs);
        Cyclo {
            level: self.level,
            residue: &self.residue + &rhs.residue,
        }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self.check_level(rhs);
        Cyclo {
            level: self.level,
            residue: &self.residue - &rhs.residue,
        }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        self.check_level(rhs);
        Cyclo::from_poly(self.level, &(&self.residue * &rhs.residue))
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            level: self.level,
            residue: -&self.residue,
        }
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) mod Phi_{}", self.residue, self.level)
    }
}

#[derive(Serialize, Deserialize)]
struct CycloWire {
    level: u32,
    residue: Vec<[String; 2]>,
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycloWire {
            level: self.level,
            residue: coeffs_to_pairs(&self.residue),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = CycloWire::deserialize(deserializer)?;
        if wire.level == 0 {
            return Err(D::Error::custom("level must be positive"));
        }
        let residue = pairs_to_poly(&wire.residue).map_err(D::Error::custom)?;
        Ok(Cyclo::from_poly(wire.level, &residue))
    }
}
