//! Hilbert series numerators.
//!
//! The numerator of `H(S; t) = sum_{m ∈ S} t^m` over `prod (1 - t^{n_i})` is
//! obtained two ways: as `sum χ(Δ_m) t^m`, and by multiplying the truncated
//! indicator series of `S` with the denominator. Both are exact.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::divisor::{nonzero_euler_scan_parallel, scan_bound};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Integer polynomial stored as exponent → nonzero coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsePolynomial {
    terms: BTreeMap<u64, i64>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coefficient: i64, exponent: u64) -> Self {
        let mut p = Self::zero();
        if coefficient != 0 {
            p.terms.insert(exponent, coefficient);
        }
        p
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, i64)>) -> Result<Self> {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exponent: u64, coefficient: i64) -> Result<()> {
        let slot = self.terms.entry(exponent).or_insert(0);
        *slot = slot
            .checked_add(coefficient)
            .ok_or(Error::Overflow("polynomial coefficient"))?;
        if *slot == 0 {
            self.terms.remove(&exponent);
        }
        Ok(())
    }

    pub fn coefficient(&self, exponent: u64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Largest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `t = 1`.
    pub fn coefficient_sum(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("coefficient sum"))
    }

    /// Product, dropping every term of degree above `max_degree` when given.
    pub fn mul_truncated(&self, other: &Self, max_degree: Option<u64>) -> Result<Self> {
        let mut out = Self::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                let e = e1
                    .checked_add(e2)
                    .ok_or(Error::Overflow("polynomial exponent"))?;
                if max_degree.is_some_and(|n| e > n) {
                    continue;
                }
                let c = c1
                    .checked_mul(c2)
                    .ok_or(Error::Overflow("polynomial coefficient"))?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_truncated(other, None)
    }

    /// Terms rendered as `coeff*t^exp`, ascending by exponent.
    pub fn term_strings(&self) -> Vec<String> {
        self.terms().map(|(e, c)| format!("{c}*t^{e}")).collect()
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let magnitude = c.unsigned_abs();
            match (e, magnitude) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// `sum χ(Δ_m) t^m` over the scan range.
pub fn hilbert_numerator(semigroup: &NumericalSemigroup) -> Result<SparsePolynomial> {
    hilbert_numerator_parallel(semigroup, 1)
}

pub fn hilbert_numerator_parallel(
    semigroup: &NumericalSemigroup,
    threads: usize,
) -> Result<SparsePolynomial> {
    let scan = nonzero_euler_scan_parallel(semigroup, threads)?;
    SparsePolynomial::from_terms(scan.into_iter().map(|(m, chi)| (m as u64, chi)))
}

/// `(sum_{m ∈ S, m <= N} t^m) * prod (1 - t^{n_i})` truncated to degree `N`.
///
/// Coefficients up to degree `N` are exact because the omitted indicator terms
/// only reach higher degrees. `N` must cover the scan bound.
pub fn numerator_oracle(
    semigroup: &NumericalSemigroup,
    truncation: i64,
) -> Result<SparsePolynomial> {
    let bound = scan_bound(semigroup)?;
    if truncation < bound {
        return Err(Error::InvalidInput(format!(
            "truncation degree {truncation} is below F(S) + n = {bound}"
        )));
    }
    let max_degree = truncation as u64;
    let mut product = SparsePolynomial::from_terms(
        semigroup
            .elements_up_to(truncation)
            .into_iter()
            .map(|m| (m as u64, 1)),
    )?;
    for &n in semigroup.generators() {
        let factor = SparsePolynomial::from_terms([(0, 1), (n as u64, -1)])?;
        product = product.mul_truncated(&factor, Some(max_degree))?;
    }
    Ok(product)
}
