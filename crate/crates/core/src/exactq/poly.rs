//! Dense univariate polynomials over Q, the coefficient layer under Q(q).
//!
//! A polynomial is stored as an integer coefficient vector over one scalar
//! denominator, kept primitive (no common factor between the content and
//! the denominator). Almost every polynomial in this crate is genuinely
//! integral, so coefficient arithmetic runs on plain big integers instead
//! of paying a fraction normalization per operation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar. Arbitrary precision throughout: coefficient sums
/// grow like n!, so fixed-width integers are never enough.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A polynomial in q with rational coefficients: integer coefficients
/// `coeffs` (ascending by degree, top coefficient nonzero) over the
/// positive scalar denominator `den`, with gcd(content, den) = 1. The zero
/// polynomial is the empty list over denominator one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
    den: BigInt,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn vec_content(v: &[BigInt]) -> BigInt {
    let mut content = BigInt::from(0);
    for c in v {
        content = num::integer::gcd(content, c.clone());
        if content.is_one() {
            break;
        }
    }
    content
}

impl QPoly {
    fn normalized(mut coeffs: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        trim(&mut coeffs);
        if coeffs.is_empty() {
            return QPoly {
                coeffs,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        let g = num::integer::gcd(vec_content(&coeffs), den.clone());
        if !g.is_one() {
            for c in &mut coeffs {
                *c = &*c / &g;
            }
            den = den / g;
        }
        QPoly { coeffs, den }
    }

    pub fn zero() -> Self {
        QPoly {
            coeffs: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        QPoly::from_int(1)
    }

    pub fn constant(c: Rat) -> Self {
        let (num, den) = c.into_raw();
        QPoly::normalized(vec![num], den)
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::normalized(vec![BigInt::from(n)], BigInt::one())
    }

    /// Build from an ascending rational coefficient list.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut den = BigInt::one();
        for c in &coeffs {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let ints = coeffs
            .into_iter()
            .map(|c| {
                let (n, d) = c.into_raw();
                n * (&den / d)
            })
            .collect();
        QPoly::normalized(ints, den)
    }

    /// c * q^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let (num, den) = c.into_raw();
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = num;
        QPoly::normalized(coeffs, den)
    }

    /// The variable q itself.
    pub fn q() -> Self {
        QPoly::q_pow(1)
    }

    /// q^k.
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly {
            coeffs,
            den: BigInt::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of q^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> Rat {
        match self.coeffs.get(i) {
            None => Rat::zero(),
            Some(c) => Rat::new(c.clone(), self.den.clone()),
        }
    }

    /// All coefficients ascending by degree, as exact rationals.
    pub fn coeffs_rat(&self) -> Vec<Rat> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading(&self) -> Option<Rat> {
        self.coeffs
            .last()
            .map(|c| Rat::new(c.clone(), self.den.clone()))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.den
    }

    /// True when the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&self.den)
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        if c.is_zero() || self.is_zero() {
            return QPoly::zero();
        }
        let coeffs = self.coeffs.iter().map(|a| a * c.numer()).collect();
        QPoly::normalized(coeffs, &self.den * c.denom())
    }

    /// Scalar multiple that makes the polynomial monic (zero stays zero).
    pub fn monic(&self) -> QPoly {
        match self.coeffs.last() {
            None => QPoly::zero(),
            Some(lead) => {
                if lead == &self.den {
                    return self.clone();
                }
                QPoly::normalized(self.coeffs.clone(), lead.clone())
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc / Rat::from_integer(self.den.clone())
    }

    /// Substitute q^k for q.
    pub fn compose_q_pow(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QPoly {
            coeffs,
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
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

    /// Euclidean division over Q: self = quotient * divisor + remainder
    /// with deg remainder < deg divisor. Runs as an integer pseudo-division
    /// with the scale factor folded into the result denominators. Panics on
    /// a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return (QPoly::zero(), self.clone());
        }
        let lead = divisor.coeffs.last().unwrap();
        let steps = self.coeffs.len() - db; // number of quotient coefficients
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); steps];
        // Invariant: lead^scaled * (true remainder) == rem, and similarly
        // for the quotient entries produced so far.
        let mut scaled = 0usize;
        for i in (db..rem.len()).rev() {
            let top = std::mem::replace(&mut rem[i], BigInt::zero());
            if top.is_zero() {
                continue;
            }
            if !lead.is_one() {
                for c in rem.iter_mut().take(i) {
                    *c = &*c * lead;
                }
                for qc in quot.iter_mut() {
                    *qc = &*qc * lead;
                }
                scaled += 1;
            }
            for (j, bc) in divisor.coeffs.iter().enumerate().take(db) {
                rem[i - db + j] = &rem[i - db + j] - &(&top * bc);
            }
            quot[i - db] = top;
        }
        let scale = lead.pow(scaled as u32);
        let quot_den = &self.den * &scale;
        let quot_poly = QPoly::normalized(
            quot.into_iter().map(|c| c * &divisor.den).collect(),
            quot_den,
        );
        let rem_poly = QPoly::normalized(rem, &self.den * &scale);
        (quot_poly, rem_poly)
    }

    /// Exact quotient, or None if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &QPoly) -> Option<QPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic gcd. Runs a primitive polynomial remainder sequence over the
    /// integers (pseudo-division plus content stripping per step), then
    /// normalizes monic over Q.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut u = int_primitive(a.coeffs.clone());
        let mut v = int_primitive(b.coeffs.clone());
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let r = int_pseudo_rem(&u, &v);
            u = v;
            v = int_primitive(r);
        }
        let lead = u.last().expect("gcd of nonzero polynomials").clone();
        QPoly::normalized(u, lead)
    }

    /// Extended Euclid: returns (g, s, t) with s*a + t*b = g and g monic
    /// (or zero when both inputs are zero).
    pub fn ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut s0 = QPoly::one();
        let mut s1 = QPoly::zero();
        let mut t0 = QPoly::zero();
        let mut t1 = QPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (QPoly::zero(), QPoly::zero(), QPoly::zero()),
            Some(lead) => {
                let inv = lead.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }
}

/// Divide out the integer content and make the leading coefficient
/// positive. Trims trailing zeros; empty input stays empty.
fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut content = vec_content(&v);
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

/// Pseudo-remainder of integer polynomials: repeatedly eliminate the top
/// term of `a` against `b` after scaling by lc(b), staying in the integers
/// throughout. Requires b nonzero.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(!b.is_empty());
    let lead = b.last().unwrap();
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    while rem.len() > db {
        let dr = rem.len() - 1;
        let top = rem.last().unwrap().clone();
        if top.is_zero() {
            rem.pop();
            continue;
        }
        if !lead.is_one() {
            for c in rem.iter_mut() {
                *c = &*c * lead;
            }
        }
        for (j, bc) in b.iter().enumerate() {
            rem[dr - db + j] = &rem[dr - db + j] - &(&top * bc);
        }
        trim(&mut rem);
    }
    rem
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = num::integer::gcd(self.den.clone(), rhs.den.clone());
        let ls = &rhs.den / &g; // multiplier for self
        let lr = &self.den / &g; // multiplier for rhs
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        let zero = BigInt::zero();
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = rhs.coeffs.get(i).unwrap_or(&zero);
            coeffs.push(a * &ls + b * &lr);
        }
        QPoly::normalized(coeffs, &self.den * &ls)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPoly::normalized(coeffs, &self.den * &rhs.den)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in 0..self.coeffs.len() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{}*q", c)?,
                _ if c.is_one() => write!(f, "q^{}", i)?,
                _ => write!(f, "{}*q^{}", c, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn canonical_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn rational_coefficients_share_one_denominator() {
        let a = QPoly::from_coeffs(vec![Rat::new(1.into(), 2.into()), Rat::new(1.into(), 3.into())]);
        assert_eq!(a.coeff(0), Rat::new(1.into(), 2.into()));
        assert_eq!(a.coeff(1), Rat::new(1.into(), 3.into()));
        assert_eq!(a.scale(&rat_int(6)), p(&[3, 2]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -2, 0, 7, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn div_rem_with_nonmonic_divisor() {
        let a = p(&[1, 0, 0, 2, 5]);
        let b = p(&[3, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        let common = p(&[1, 1]);
        let a = &common * &p(&[2, 0, 1]);
        let b = &common * &p(&[-1, 1]);
        assert_eq!(QPoly::gcd(&a, &b), common.monic());
    }

    #[test]
    fn gcd_ignores_rational_scaling() {
        let a = p(&[2, 2]).scale(&Rat::new(1.into(), 6.into()));
        let b = p(&[1, 2, 1]);
        assert_eq!(QPoly::gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[2, 1]);
        let (g, s, t) = QPoly::ext_gcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(g.is_monic());
    }

    #[test]
    fn compose_q_pow_matches_eval() {
        let a = p(&[1, 2, 3]);
        let sub = a.compose_q_pow(3);
        let x = Rat::new(BigInt::from(2), BigInt::from(5));
        let x3 = &(&x * &x) * &x;
        assert_eq!(sub.eval(&x), a.eval(&x3));
    }

    #[test]
    fn monic_divides_by_leading() {
        let a = p(&[2, 4]);
        assert!(a.monic().is_monic());
        assert_eq!(a.monic().coeff(0), Rat::new(1.into(), 2.into()));
    }
}
