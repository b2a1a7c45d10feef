//! The classical Fibonacci/Lucas identity catalog, checked by residual:
//! every check returns `LHS - RHS`, which is zero exactly when the
//! identity holds at the probed indices. Returning the residual rather
//! than a boolean keeps failure magnitudes visible when debugging.
//!
//! Covered: the Simson and Gelin-Cesaro identities, the four
//! Hoggatt-Bergum cubic identities, the six Cerin consecutive-sum
//! identities, and the signed product identity
//! `F_m L_n = F_{m+n} + (-1)^n F_{m-n}`.
//!
//! All checks accept negative indices; the sequences are doubly infinite.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::seq::{fib, lucas, Index};

/// Upper bound on the Cerin block-length parameter swept by [`run_suite`].
pub const CERIN_MAX_BLOCK: u32 = 10;

/// One identity swept over a window, with every failing point recorded.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: &'static str,
    pub window: String,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    /// True when the identity held exactly at every tested point.
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A point where a residual was nonzero.
#[derive(Clone, Debug)]
pub struct Failure {
    pub indices: Vec<i64>,
    pub residual: BigInt,
}

fn shifted(n: i64, by: i64) -> Result<i64> {
    n.checked_add(by)
        .ok_or_else(|| Error::InvalidQuery(format!("index {n} + {by} overflows")))
}

fn sign(n: i64) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `F_{n-1} F_{n+1} - F_n^2 - (-1)^n`.
pub fn simson_residual(n: Index) -> Result<BigInt> {
    let lhs = fib(shifted(n, -1)?)? * fib(shifted(n, 1)?)? - fib(n)?.pow(2);
    Ok(lhs - sign(n))
}

/// `F_n^4 - F_{n-2} F_{n-1} F_{n+1} F_{n+2} - 1`.
pub fn gelin_cesaro_residual(n: Index) -> Result<BigInt> {
    let product = fib(shifted(n, -2)?)?
        * fib(shifted(n, -1)?)?
        * fib(shifted(n, 1)?)?
        * fib(shifted(n, 2)?)?;
    Ok(fib(n)?.pow(4) - product - BigInt::one())
}

/// Residuals of the four cubic identities at `n`, in catalog order:
///
/// 1. `F_n F_{n+3}^2 - F_{n+2}^3 = (-1)^{n+1} F_{n+1}`
/// 2. `F_{n+3} F_n^2 - F_{n+1}^3 = (-1)^{n+1} F_{n+2}`
/// 3. `F_n F_{n+3}^2 - F_{n+4} F_{n+1}^2 = (-1)^{n+1} L_{n+2}`
/// 4. `F_n L_{n+3}^2 - F_{n+4} L_{n+1}^2 = (-1)^{n+1} L_{n+2}`
pub fn hoggatt_bergum_residuals(n: Index) -> Result<[BigInt; 4]> {
    let f = |d: i64| -> Result<BigInt> { fib(shifted(n, d)?) };
    let l = |d: i64| -> Result<BigInt> { lucas(shifted(n, d)?) };
    let alt = sign(shifted(n, 1)?);
    Ok([
        f(0)? * f(3)?.pow(2) - f(2)?.pow(3) - &alt * f(1)?,
        f(3)? * f(0)?.pow(2) - f(1)?.pow(3) - &alt * f(2)?,
        f(0)? * f(3)?.pow(2) - f(4)? * f(1)?.pow(2) - &alt * l(2)?,
        f(0)? * l(3)?.pow(2) - f(4)? * l(1)?.pow(2) - &alt * l(2)?,
    ])
}

fn consecutive_fib_sum(k: i64, count: i64, alternating: bool) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for j in 0..count {
        let term = fib(shifted(k, j)?)?;
        if alternating && j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// Residuals of the six consecutive-sum identities at block parameter `i`
/// and start index `k`, in catalog order (plain and alternating sums of
/// `4i+4`, `4i+2`, and `4i+1` consecutive Fibonacci terms):
///
/// 1. `Σ_{j=0..4i+3} F_{k+j} = F_{2i+2} L_{k+2i+3}`
/// 2. `Σ_{j=0..4i+3} (-1)^j F_{k+j} = -F_{2i+2} L_{k+2i}`
/// 3. `Σ_{j=0..4i+1} F_{k+j} = L_{2i+1} F_{k+2i+2}`
/// 4. `Σ_{j=0..4i+1} (-1)^j F_{k+j} = -L_{2i+1} F_{k+2i-1}`
/// 5. `Σ_{j=0..4i} F_{k+j} = F_{2i} L_{k+2i} + L_{2i+1} F_{k+2i}`
/// 6. `Σ_{j=0..4i} (-1)^j F_{k+j} = F_{k+2i} L_{2i+1} - L_{k+2i} F_{2i}`
///
/// The alternating sums start on `+F_k`; with that convention the product
/// sides of 2 and 4 carry the leading minus sign.
pub fn cerin_residuals(i: u32, k: Index) -> Result<[BigInt; 6]> {
    let i = i64::from(i);
    let f = |d: i64| -> Result<BigInt> { fib(shifted(k, d)?) };
    let l = |d: i64| -> Result<BigInt> { lucas(shifted(k, d)?) };

    let plain_4 = consecutive_fib_sum(k, 4 * i + 4, false)?;
    let alt_4 = consecutive_fib_sum(k, 4 * i + 4, true)?;
    let plain_2 = consecutive_fib_sum(k, 4 * i + 2, false)?;
    let alt_2 = consecutive_fib_sum(k, 4 * i + 2, true)?;
    let plain_1 = consecutive_fib_sum(k, 4 * i + 1, false)?;
    let alt_1 = consecutive_fib_sum(k, 4 * i + 1, true)?;

    Ok([
        plain_4 - fib(2 * i + 2)? * l(2 * i + 3)?,
        alt_4 + fib(2 * i + 2)? * l(2 * i)?,
        plain_2 - lucas(2 * i + 1)? * f(2 * i + 2)?,
        alt_2 + lucas(2 * i + 1)? * f(2 * i - 1)?,
        plain_1 - (fib(2 * i)? * l(2 * i)? + lucas(2 * i + 1)? * f(2 * i)?),
        alt_1 - (f(2 * i)? * lucas(2 * i + 1)? - l(2 * i)? * fib(2 * i)?),
    ])
}

/// Residual of `F_m L_n = F_{m+n} + (-1)^n F_{m-n}`. For even `n` the
/// sign vanishes and the identity coincides with the unsigned form
/// `F_m L_n = F_{m+n} + F_{m-n}`.
pub fn fib_lucas_product_residual(m: Index, n: Index) -> Result<BigInt> {
    let sum = m.checked_add(n).ok_or_else(|| {
        Error::InvalidQuery(format!("index {m} + {n} overflows"))
    })?;
    let diff = m.checked_sub(n).ok_or_else(|| {
        Error::InvalidQuery(format!("index {m} - {n} overflows"))
    })?;
    Ok(fib(m)? * lucas(n)? - fib(sum)? - sign(n) * fib(diff)?)
}

fn sweep<F>(
    name: &'static str,
    window: String,
    points: impl Iterator<Item = Vec<i64>>,
    eval: F,
) -> Result<IdentityReport>
where
    F: Fn(&[i64]) -> Result<BigInt>,
{
    let mut failures = Vec::new();
    for point in points {
        let residual = eval(&point)?;
        if !residual.is_zero() {
            failures.push(Failure { indices: point, residual });
        }
    }
    Ok(IdentityReport { name, window, failures })
}

/// Sweeps the whole catalog over `lo..=hi`:
///
/// * single-index identities over `n` in the window;
/// * the Cerin identities over `i` in `[0, CERIN_MAX_BLOCK]` crossed with
///   `k` in the window;
/// * the product identity over all `(m, n)` pairs in the window.
///
/// Aggregation is order-independent; each report lists every failing
/// point, so an empty failure list certifies the identity on the window.
pub fn run_suite(lo: Index, hi: Index) -> Result<Vec<IdentityReport>> {
    if lo > hi {
        return Err(Error::InvalidQuery(format!("empty window: {lo} > {hi}")));
    }
    let n_window = format!("n in [{lo}, {hi}]");
    let ik_window = format!("i in [0, {CERIN_MAX_BLOCK}], k in [{lo}, {hi}]");
    let mn_window = format!("m, n in [{lo}, {hi}]");
    let singles = || (lo..=hi).map(|n| vec![n]);

    let mut reports = Vec::new();
    reports.push(sweep("simson", n_window.clone(), singles(), |p| simson_residual(p[0]))?);
    reports.push(sweep("gelin-cesaro", n_window.clone(), singles(), |p| {
        gelin_cesaro_residual(p[0])
    })?);

    let mut hoggatt: Vec<Vec<Failure>> = vec![Vec::new(); 4];
    for n in lo..=hi {
        for (which, residual) in hoggatt_bergum_residuals(n)?.into_iter().enumerate() {
            if !residual.is_zero() {
                hoggatt[which].push(Failure { indices: vec![n], residual });
            }
        }
    }
    const HOGGATT_NAMES: [&str; 4] = [
        "hoggatt-bergum-1",
        "hoggatt-bergum-2",
        "hoggatt-bergum-3",
        "hoggatt-bergum-4",
    ];
    for (which, failures) in hoggatt.into_iter().enumerate() {
        reports.push(IdentityReport {
            name: HOGGATT_NAMES[which],
            window: n_window.clone(),
            failures,
        });
    }

    let mut cerin: Vec<Vec<Failure>> = vec![Vec::new(); 6];
    for i in 0..=CERIN_MAX_BLOCK {
        for k in lo..=hi {
            for (which, residual) in cerin_residuals(i, k)?.into_iter().enumerate() {
                if !residual.is_zero() {
                    cerin[which].push(Failure { indices: vec![i64::from(i), k], residual });
                }
            }
        }
    }
    const CERIN_NAMES: [&str; 6] =
        ["cerin-1", "cerin-2", "cerin-3", "cerin-4", "cerin-5", "cerin-6"];
    for (which, failures) in cerin.into_iter().enumerate() {
        reports.push(IdentityReport {
            name: CERIN_NAMES[which],
            window: ik_window.clone(),
            failures,
        });
    }

    let pairs = (lo..=hi).flat_map(|m| (lo..=hi).map(move |n| vec![m, n]));
    reports.push(sweep("fib-lucas-product", mn_window, pairs, |p| {
        fib_lucas_product_residual(p[0], p[1])
    })?);

    Ok(reports)
}
