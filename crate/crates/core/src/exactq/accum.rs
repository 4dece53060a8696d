//! Lazy fractions for summation-heavy inner loops.
//!
//! Region enumerators and DP tables add thousands of small fractions.
//! Normalizing to canonical form on every addition would run a full
//! polynomial gcd per term; a lazy fraction instead keeps a running
//! numerator over the lcm of the denominators seen so far (which
//! stabilizes after a few terms), multiplies by weights without any gcd,
//! and canonicalizes once when the final value is read off.

use super::poly::QPoly;
use super::ratfun::{bump, RatFun};

#[derive(Clone, Debug)]
pub(crate) struct FracSum {
    num: QPoly,
    den: QPoly,
}

impl FracSum {
    pub fn new() -> Self {
        FracSum {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn from_term(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        FracSum { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add_term(&mut self, t_num: &QPoly, t_den: &QPoly) {
        if t_num.is_zero() {
            return;
        }
        bump();
        if self.num.is_zero() {
            self.num = t_num.clone();
            self.den = t_den.clone();
            return;
        }
        let g = QPoly::gcd(&self.den, t_den);
        let self_red = self.den.exact_div(&g).expect("gcd divides");
        let term_red = t_den.exact_div(&g).expect("gcd divides");
        self.num = &(&self.num * &term_red) + &(t_num * &self_red);
        self.den = &self.den * &term_red;
    }

    pub fn add_frac(&mut self, other: &FracSum) {
        self.add_term(&other.num, &other.den);
    }

    /// Multiply by num/den without reducing; denominators accumulate.
    pub fn mul_term(&self, num: &QPoly, den: &QPoly) -> FracSum {
        if self.num.is_zero() || num.is_zero() {
            return FracSum::new();
        }
        bump();
        FracSum {
            num: &self.num * num,
            den: &self.den * den,
        }
    }

    pub fn mul_frac(&self, other: &FracSum) -> FracSum {
        self.mul_term(&other.num, &other.den)
    }

    pub fn mul_ratfun(&self, rf: &RatFun) -> FracSum {
        self.mul_term(rf.num(), rf.den())
    }

    pub fn value(self) -> RatFun {
        RatFun::new(self.num, self.den).expect("denominator is a product of nonzero factors")
    }
}
