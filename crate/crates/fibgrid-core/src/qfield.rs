//! Exact arithmetic in Q(sqrt(5)), the field generated by the golden
//! ratio, together with closed-form (Binet) evaluation of Fibonacci and
//! Lucas terms.
//!
//! Elements are stored as `rational + surd * sqrt(5)` with both
//! coordinates exact rationals. `BigRational` keeps itself reduced with a
//! positive denominator, so the representation is canonical and equality
//! is plain componentwise comparison — every check in this crate is exact
//! equality, never a tolerance.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::seq::Index;

/// An element `rational + surd * sqrt(5)` of Q(sqrt(5)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    pub rational: BigRational,
    pub surd: BigRational,
}

impl QuadNum {
    pub fn new(rational: BigRational, surd: BigRational) -> Self {
        QuadNum { rational, surd }
    }

    pub fn zero() -> Self {
        QuadNum::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        QuadNum::new(BigRational::one(), BigRational::zero())
    }

    pub fn sqrt5() -> Self {
        QuadNum::new(BigRational::zero(), BigRational::one())
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn golden() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        QuadNum::new(half.clone(), half)
    }

    /// The algebraic conjugate `(1 - sqrt(5)) / 2` of the golden ratio.
    pub fn golden_conj() -> Self {
        QuadNum::golden().conj()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    /// Galois conjugate: negate the surd coordinate.
    pub fn conj(&self) -> Self {
        QuadNum::new(self.rational.clone(), -self.surd.clone())
    }

    /// Field norm `rational^2 - 5 surd^2`; zero exactly on the zero
    /// element, since 5 is not a rational square.
    pub fn norm(&self) -> BigRational {
        &self.rational * &self.rational
            - BigRational::from_integer(BigInt::from(5)) * &self.surd * &self.surd
    }

    /// The rational coordinate, when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.surd.is_zero().then(|| self.rational.clone())
    }

    /// The integer value, when the element lies in Z.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.as_rational() {
            Some(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// Multiplicative inverse via the conjugate and the norm.
    pub fn inv(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conj = self.conj();
        Ok(QuadNum::new(conj.rational / &norm, conj.surd / &norm))
    }

    pub fn div(&self, rhs: &QuadNum) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power by binary exponentiation; `pow(x, 0) = 1` for every
    /// `x`, and negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(QuadNum::one());
        }
        if exp < 0 && self.is_zero() {
            return Err(Error::ZeroToNegativePower);
        }
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = QuadNum::one();
        let mut sq = base;
        let mut k = exp.unsigned_abs();
        loop {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            sq = &sq * &sq;
        }
        Ok(acc)
    }
}

impl From<BigInt> for QuadNum {
    fn from(v: BigInt) -> Self {
        QuadNum::new(BigRational::from_integer(v), BigRational::zero())
    }
}

impl From<BigRational> for QuadNum {
    fn from(v: BigRational) -> Self {
        QuadNum::new(v, BigRational::zero())
    }
}

impl From<i64> for QuadNum {
    fn from(v: i64) -> Self {
        QuadNum::from(BigInt::from(v))
    }
}

impl Add<&QuadNum> for &QuadNum {
    type Output = QuadNum;

    fn add(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.rational + &rhs.rational, &self.surd + &rhs.surd)
    }
}

impl Sub<&QuadNum> for &QuadNum {
    type Output = QuadNum;

    fn sub(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.rational - &rhs.rational, &self.surd - &rhs.surd)
    }
}

impl Mul<&QuadNum> for &QuadNum {
    type Output = QuadNum;

    fn mul(self, rhs: &QuadNum) -> QuadNum {
        // (p + q sqrt5)(r + s sqrt5) = (pr + 5qs) + (ps + qr) sqrt5
        let five = BigRational::from_integer(BigInt::from(5));
        QuadNum::new(
            &self.rational * &rhs.rational + five * &self.surd * &rhs.surd,
            &self.rational * &rhs.surd + &self.surd * &rhs.rational,
        )
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;

    fn neg(self) -> QuadNum {
        QuadNum::new(-self.rational.clone(), -self.surd.clone())
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                $imp::$method(&self, &rhs)
            }
        }
        impl $imp<&QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                $imp::$method(&self, rhs)
            }
        }
        impl $imp<QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                $imp::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QuadNum {
    type Output = QuadNum;

    fn neg(self) -> QuadNum {
        -&self
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return write!(f, "{}*sqrt(5)", self.surd);
        }
        if self.surd.is_negative() {
            write!(f, "{} - {}*sqrt(5)", self.rational, -self.surd.clone())
        } else {
            write!(f, "{} + {}*sqrt(5)", self.rational, self.surd)
        }
    }
}

/// `F_n` evaluated as `(phi^n - psi^n) / sqrt(5)` in exact field
/// arithmetic. The surd coordinate of the result is always zero.
pub fn binet_fib(n: Index) -> QuadNum {
    let phi = QuadNum::golden();
    let psi = QuadNum::golden_conj();
    let diff = phi.pow(n).expect("golden ratio is nonzero")
        - psi.pow(n).expect("conjugate is nonzero");
    diff.div(&QuadNum::sqrt5()).expect("sqrt(5) is nonzero")
}

/// `L_n` evaluated as `phi^n + psi^n`; the surd coordinate is always zero.
pub fn binet_lucas(n: Index) -> QuadNum {
    let phi = QuadNum::golden();
    let psi = QuadNum::golden_conj();
    phi.pow(n).expect("golden ratio is nonzero") + psi.pow(n).expect("conjugate is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn quad(p: (i64, i64), q: (i64, i64)) -> QuadNum {
        QuadNum::new(rat(p.0, p.1), rat(q.0, q.1))
    }

    #[test]
    fn golden_ratio_algebra() {
        let phi = QuadNum::golden();
        let psi = QuadNum::golden_conj();
        assert_eq!(&phi * &psi, QuadNum::from(-1)); // product of the two roots
        assert_eq!(&phi + &psi, QuadNum::from(1)); // sum of the two roots
        assert_eq!(&phi * &phi, quad((3, 2), (1, 2))); // phi^2 = phi + 1
    }

    #[test]
    fn conjugation() {
        let phi = QuadNum::golden();
        assert_eq!(phi.conj(), QuadNum::golden_conj());
        assert_eq!(QuadNum::from(3).conj(), QuadNum::from(3));
        let x = quad((7, 3), (-2, 5));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn powers() {
        let phi = QuadNum::golden();
        assert_eq!(phi.pow(0).unwrap(), QuadNum::one());
        assert_eq!(phi.pow(2).unwrap(), quad((3, 2), (1, 2)));
        // 1/phi = phi - 1
        assert_eq!(phi.pow(-1).unwrap(), quad((-1, 2), (1, 2)));

        // repeated-multiplication oracle for psi^4
        let psi = QuadNum::golden_conj();
        let mut by_mul = QuadNum::one();
        for _ in 0..4 {
            by_mul = &by_mul * &psi;
        }
        assert_eq!(psi.pow(4).unwrap(), by_mul);
        assert_eq!(by_mul, quad((7, 2), (-3, 2)));

        assert_eq!(psi.pow(-3).unwrap(), psi.pow(3).unwrap().inv().unwrap());
    }

    #[test]
    fn zero_and_division_errors() {
        assert_eq!(QuadNum::zero().pow(0).unwrap(), QuadNum::one());
        assert_eq!(QuadNum::zero().pow(-1).unwrap_err(), Error::ZeroToNegativePower);
        assert_eq!(QuadNum::one().div(&QuadNum::zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn division_round_trip() {
        let x = quad((7, 3), (-2, 5));
        let y = quad((1, 1), (4, 3));
        assert_eq!(x.div(&y).unwrap() * &y, x);
    }

    #[test]
    fn norm_matches_conjugate_product() {
        let x = quad((7, 3), (-2, 5));
        let prod = &x * &x.conj();
        assert_eq!(prod.surd, BigRational::zero());
        assert_eq!(prod.rational, x.norm());
    }

    #[test]
    fn binet_fib_values() {
        assert_eq!(binet_fib(0), QuadNum::zero());
        assert_eq!(binet_fib(10), QuadNum::from(55));
        assert_eq!(binet_fib(-5), QuadNum::from(5));
        assert_eq!(binet_fib(37).as_integer().unwrap(), seq::fib(37).unwrap());
    }

    #[test]
    fn binet_lucas_values() {
        assert_eq!(binet_lucas(0), QuadNum::from(2));
        assert_eq!(binet_lucas(1), QuadNum::from(1)); // phi + psi = 1
        assert_eq!(binet_lucas(6), QuadNum::from(18));
        assert_eq!(binet_lucas(-9).as_integer().unwrap(), seq::lucas(-9).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(QuadNum::golden().to_string(), "1/2 + 1/2*sqrt(5)");
        assert_eq!(QuadNum::golden_conj().to_string(), "1/2 - 1/2*sqrt(5)");
        assert_eq!(QuadNum::from(7).to_string(), "7");
        assert_eq!(QuadNum::sqrt5().to_string(), "1*sqrt(5)");
    }
}
