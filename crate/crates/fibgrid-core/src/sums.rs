//! Sums of equidistant subsequence terms `G_{stride*k + offset}` for
//! `k` in `[first, last]`, computed two mutually independent ways:
//!
//! * [`equidistant_sum_direct`] adds the terms one by one;
//! * [`equidistant_sum_closed`] evaluates the geometric-series closed form
//!   over Q(sqrt(5)),
//!
//! ```text
//!   1/(a^m - b^m) * [ (G_{m+i} - b^m G_i) (a^{m f} - a^{m (l+1)}) / (1 - a^m)
//!                   - (G_{m+i} - a^m G_i) (b^{m f} - b^{m (l+1)}) / (1 - b^m) ]
//! ```
//!
//! with `a` the golden ratio and `b` its conjugate. For `m >= 1` none of
//! `a^m - b^m`, `1 - a^m`, `1 - b^m` vanish, so the form is total on valid
//! queries. The two paths must agree exactly; the closed form failing to
//! produce an integer is reported as an [`Error::Invariant`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qfield::QuadNum;
use crate::seq::{gen_term, Index, SeedPair};

/// A validated description of the sum `Σ_{k=first..=last} G_{stride*k + offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumQuery {
    seeds: SeedPair,
    stride: i64,
    offset: i64,
    first: i64,
    last: i64,
}

impl SumQuery {
    /// Builds a query, enforcing `stride >= 1`, `0 <= offset < stride`,
    /// `first <= last`, and that every derived term index fits in an
    /// [`Index`].
    pub fn new(seeds: SeedPair, stride: i64, offset: i64, first: i64, last: i64) -> Result<Self> {
        if stride < 1 {
            return Err(Error::InvalidQuery(format!("stride {stride} must be at least 1")));
        }
        if offset < 0 || offset >= stride {
            return Err(Error::InvalidQuery(format!(
                "offset {offset} must lie in [0, {stride})"
            )));
        }
        if first > last {
            return Err(Error::InvalidQuery(format!("empty range: first {first} > last {last}")));
        }
        let q = SumQuery { seeds, stride, offset, first, last };
        // surface index overflow at construction, not term by term
        q.term_index(first)?;
        q.term_index(last)?;
        q.scaled(last.checked_add(1).ok_or_else(|| {
            Error::InvalidQuery(format!("range end {last} overflows"))
        })?)?;
        Ok(q)
    }

    pub fn seeds(&self) -> &SeedPair {
        &self.seeds
    }

    pub fn stride(&self) -> i64 {
        self.stride
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn first(&self) -> i64 {
        self.first
    }

    pub fn last(&self) -> i64 {
        self.last
    }

    fn scaled(&self, k: i64) -> Result<i64> {
        let wide = self.stride as i128 * k as i128;
        i64::try_from(wide)
            .map_err(|_| Error::InvalidQuery(format!("index {wide} overflows 64 bits")))
    }

    /// Term index for position `k`: `stride * k + offset`.
    pub fn term_index(&self, k: i64) -> Result<i64> {
        let wide = self.stride as i128 * k as i128 + self.offset as i128;
        i64::try_from(wide)
            .map_err(|_| Error::InvalidQuery(format!("index {wide} overflows 64 bits")))
    }
}

/// Adds the terms of the subsequence one by one.
pub fn equidistant_sum_direct(q: &SumQuery) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for k in q.first..=q.last {
        total += gen_term(&q.seeds, q.term_index(k)?)?;
    }
    Ok(total)
}

/// Evaluates the closed form over Q(sqrt(5)) and extracts the integer
/// value. Must always agree with [`equidistant_sum_direct`].
pub fn equidistant_sum_closed(q: &SumQuery) -> Result<BigInt> {
    let phi = QuadNum::golden();
    let psi = QuadNum::golden_conj();
    let phi_m = phi.pow(q.stride)?;
    let psi_m = psi.pow(q.stride)?;

    let g_offset = QuadNum::from(gen_term(&q.seeds, q.offset)?);
    let step_index = q
        .stride
        .checked_add(q.offset)
        .ok_or_else(|| Error::InvalidQuery("stride + offset overflows".into()))?;
    let g_step = QuadNum::from(gen_term(&q.seeds, step_index)?);

    let lo = q.scaled(q.first)?;
    let hi = q.scaled(q.last + 1)?;
    let one = QuadNum::one();

    let left = (&g_step - &(&psi_m * &g_offset))
        .mul(&(phi.pow(lo)? - phi.pow(hi)?))
        .div(&(&one - &phi_m))?;
    let right = (&g_step - &(&phi_m * &g_offset))
        .mul(&(psi.pow(lo)? - psi.pow(hi)?))
        .div(&(&one - &psi_m))?;
    let total = (left - right).div(&(phi_m - psi_m))?;

    total.as_integer().ok_or_else(|| {
        Error::Invariant(format!(
            "closed-form sum evaluated to the non-integer {total} for query {q:?}"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn fib_query(stride: i64, offset: i64, first: i64, last: i64) -> SumQuery {
        SumQuery::new(SeedPair::fibonacci(), stride, offset, first, last).unwrap()
    }

    #[test]
    fn direct_small_sums() {
        // F_0 + F_2 + F_4
        assert_eq!(equidistant_sum_direct(&fib_query(2, 0, 0, 2)).unwrap(), int(4));
        // F_1 + F_5
        assert_eq!(equidistant_sum_direct(&fib_query(4, 1, 0, 1)).unwrap(), int(6));
        // L_0 + .. + L_4 = 2 + 1 + 3 + 4 + 7
        let q = SumQuery::new(SeedPair::lucas(), 1, 0, 0, 4).unwrap();
        assert_eq!(equidistant_sum_direct(&q).unwrap(), int(17));
    }

    #[test]
    fn closed_matches_direct_on_examples() {
        assert_eq!(equidistant_sum_closed(&fib_query(2, 0, 0, 2)).unwrap(), int(4));
        // F_0 + F_4 + F_8
        assert_eq!(equidistant_sum_closed(&fib_query(4, 0, 0, 2)).unwrap(), int(24));
        // seeds (1,3): G_5 + G_8 + G_11 = 18 + 76 + 322
        let q = SumQuery::new(SeedPair::from_i64(1, 3).unwrap(), 3, 2, 1, 3).unwrap();
        assert_eq!(equidistant_sum_closed(&q).unwrap(), int(416));
        assert_eq!(equidistant_sum_direct(&q).unwrap(), int(416));
    }

    #[test]
    fn negative_window() {
        let q = fib_query(3, 1, -4, -1);
        let direct = equidistant_sum_direct(&q).unwrap();
        // F_{-11} + F_{-8} + F_{-5} + F_{-2} = 89 - 21 + 5 - 1
        assert_eq!(direct, int(72));
        assert_eq!(equidistant_sum_closed(&q).unwrap(), direct);
    }

    #[test]
    fn single_term_window() {
        let seeds = SeedPair::from_i64(4, -7).unwrap();
        let q = SumQuery::new(seeds.clone(), 5, 3, 2, 2).unwrap();
        let expected = gen_term(&seeds, 13).unwrap();
        assert_eq!(equidistant_sum_direct(&q).unwrap(), expected);
        assert_eq!(equidistant_sum_closed(&q).unwrap(), expected);
    }

    #[test]
    fn rejects_malformed_queries() {
        let seeds = SeedPair::fibonacci();
        assert!(matches!(
            SumQuery::new(seeds.clone(), 0, 0, 0, 1),
            Err(Error::InvalidQuery(_))
        ));
        assert!(matches!(
            SumQuery::new(seeds.clone(), 3, 3, 0, 1),
            Err(Error::InvalidQuery(_))
        ));
        assert!(matches!(
            SumQuery::new(seeds.clone(), 3, -1, 0, 1),
            Err(Error::InvalidQuery(_))
        ));
        assert!(matches!(SumQuery::new(seeds, 3, 0, 2, 1), Err(Error::InvalidQuery(_))));
    }
}
