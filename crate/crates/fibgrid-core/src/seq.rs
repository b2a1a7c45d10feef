//! Integer sequence kernels: Fibonacci and Lucas numbers, and seeded
//! generalized Fibonacci terms, for any signed index.
//!
//! Terms are computed by fast doubling, O(log |n|) big-integer
//! multiplications, so the quadratically growing indices produced by the
//! grid module stay cheap. Negative indices follow the unique backward
//! extension of the recurrence:
//!
//! ```text
//! F(-n) = (-1)^(n+1) F(n)        L(-n) = (-1)^n L(n)
//! ```
//!
//! All functions are pure and allocate nothing globally; they are safe to
//! call from any number of threads.

use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Signed term index.
pub type Index = i64;

/// Default bound on |index| accepted by the term kernels. This is a
/// resource guard, not a mathematical limit; the `*_with_cap` variants
/// accept any bound.
pub const DEFAULT_INDEX_CAP: u64 = 1_000_000;

fn check_cap(n: Index, cap: u64) -> Result<()> {
    if n.unsigned_abs() > cap {
        Err(Error::IndexCapExceeded { index: n, cap })
    } else {
        Ok(())
    }
}

/// Initial values `(G_0, G_1)` of a generalized Fibonacci sequence.
///
/// The all-zero pair is rejected: it generates the zero sequence, for
/// which every ratio statement degenerates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeedPair {
    a: BigInt,
    b: BigInt,
}

impl SeedPair {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateSeeds);
        }
        Ok(SeedPair { a, b })
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        Self::new(a.into(), b.into())
    }

    /// Seeds `(0, 1)`: the Fibonacci sequence.
    pub fn fibonacci() -> Self {
        SeedPair { a: BigInt::zero(), b: BigInt::one() }
    }

    /// Seeds `(2, 1)`: the Lucas sequence.
    pub fn lucas() -> Self {
        SeedPair { a: BigInt::from(2), b: BigInt::one() }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }
}

impl fmt::Display for SeedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A value `coeff_a * A + coeff_b * B`, linear in the seeds.
///
/// Diagonal sums are accumulated in this shape so that seed independence
/// becomes a statement about two coefficient pairs being proportional,
/// checkable without sampling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeff_a: BigInt,
    pub coeff_b: BigInt,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm { coeff_a: BigInt::zero(), coeff_b: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_a.is_zero() && self.coeff_b.is_zero()
    }

    /// The concrete value of the form at a seed pair.
    pub fn eval(&self, seeds: &SeedPair) -> BigInt {
        &self.coeff_a * seeds.a() + &self.coeff_b * seeds.b()
    }

    /// Cross-multiplied proportionality test. A zero form is proportional
    /// to everything.
    pub fn proportional_to(&self, other: &LinearForm) -> bool {
        (&self.coeff_a * &other.coeff_b - &self.coeff_b * &other.coeff_a).is_zero()
    }
}

impl Add<&LinearForm> for LinearForm {
    type Output = LinearForm;

    fn add(mut self, rhs: &LinearForm) -> LinearForm {
        self += rhs;
        self
    }
}

impl AddAssign<&LinearForm> for LinearForm {
    fn add_assign(&mut self, rhs: &LinearForm) {
        self.coeff_a += &rhs.coeff_a;
        self.coeff_b += &rhs.coeff_b;
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff_b.sign() == num_bigint::Sign::Minus {
            write!(f, "{}*A - {}*B", self.coeff_a, -&self.coeff_b)
        } else {
            write!(f, "{}*A + {}*B", self.coeff_a, self.coeff_b)
        }
    }
}

/// Coefficients expressing a seeded sequence over the Fibonacci and Lucas
/// bases: `G_n = fib_coeff * F_n + lucas_coeff * L_n` for every `n`.
///
/// Both coefficients are half-integers; doubling either always yields an
/// integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub fib_coeff: BigRational,
    pub lucas_coeff: BigRational,
}

/// `(F_k, F_{k+1})` by fast doubling over the bits of `k`.
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    let mut f = BigInt::zero();
    let mut g = BigInt::one();
    if k == 0 {
        return (f, g);
    }
    let bits = 64 - k.leading_zeros();
    for i in (0..bits).rev() {
        // (F_j, F_{j+1}) -> (F_{2j}, F_{2j+1})
        let doubled = &f * ((&g << 1u32) - &f);
        let doubled_next = &f * &f + &g * &g;
        if (k >> i) & 1 == 1 {
            f = doubled_next;
            g = doubled + &f;
        } else {
            f = doubled;
            g = doubled_next;
        }
    }
    (f, g)
}

/// `F_n` under the default index cap.
pub fn fib(n: Index) -> Result<BigInt> {
    fib_with_cap(n, DEFAULT_INDEX_CAP)
}

pub fn fib_with_cap(n: Index, cap: u64) -> Result<BigInt> {
    check_cap(n, cap)?;
    let (f, _) = fib_pair(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        Ok(-f)
    } else {
        Ok(f)
    }
}

/// `L_n` under the default index cap.
pub fn lucas(n: Index) -> Result<BigInt> {
    lucas_with_cap(n, DEFAULT_INDEX_CAP)
}

pub fn lucas_with_cap(n: Index, cap: u64) -> Result<BigInt> {
    check_cap(n, cap)?;
    let (f, g) = fib_pair(n.unsigned_abs());
    let l = (g << 1u32) - f; // L_k = 2 F_{k+1} - F_k
    if n < 0 && n % 2 != 0 {
        Ok(-l)
    } else {
        Ok(l)
    }
}

/// `G_n = A * F_{n-1} + B * F_n`, which equals the value obtained by
/// running the recurrence from the seeds in either direction.
pub fn gen_term(seeds: &SeedPair, n: Index) -> Result<BigInt> {
    gen_term_with_cap(seeds, n, DEFAULT_INDEX_CAP)
}

pub fn gen_term_with_cap(seeds: &SeedPair, n: Index, cap: u64) -> Result<BigInt> {
    check_cap(n, cap)?;
    let prev = n.checked_sub(1).ok_or(Error::IndexCapExceeded { index: n, cap })?;
    // the n-1 lookup may sit one step past the cap; allow it the slack
    let slack = cap.saturating_add(1);
    Ok(seeds.a() * fib_with_cap(prev, slack)? + seeds.b() * fib_with_cap(n, slack)?)
}

/// The coefficients `(F_{n-1}, F_n)` such that `G_n = F_{n-1} A + F_n B`
/// for every seed pair.
pub fn gen_linear_form(n: Index) -> Result<LinearForm> {
    gen_linear_form_with_cap(n, DEFAULT_INDEX_CAP)
}

pub fn gen_linear_form_with_cap(n: Index, cap: u64) -> Result<LinearForm> {
    check_cap(n, cap)?;
    let prev = n.checked_sub(1).ok_or(Error::IndexCapExceeded { index: n, cap })?;
    let slack = cap.saturating_add(1);
    Ok(LinearForm {
        coeff_a: fib_with_cap(prev, slack)?,
        coeff_b: fib_with_cap(n, slack)?,
    })
}

/// Coefficients of the seeded sequence over the Fibonacci/Lucas basis.
///
/// Solves the 2x2 system pinning the coefficients at indices 0 and 1 by
/// Cramer's rule; the determinant is -2, so the system is always solvable
/// and the result is `((-A + 2B)/2, A/2)`.
pub fn decompose(seeds: &SeedPair) -> Decomposition {
    let f0 = BigInt::zero();
    let f1 = BigInt::one();
    let l0 = BigInt::from(2);
    let l1 = BigInt::one();
    let det = &f0 * &l1 - &l0 * &f1; // -2
    let fib_coeff = BigRational::new(seeds.a() * &l1 - &l0 * seeds.b(), det.clone());
    let lucas_coeff = BigRational::new(&f0 * seeds.b() - seeds.a() * &f1, det);
    Decomposition { fib_coeff, lucas_coeff }
}
