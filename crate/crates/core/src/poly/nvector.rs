use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::IntPolynomial;

/// Operational-state counts `N_{n-2}, ..., N_m` of a split-reliability instance.
///
/// `counts[j]` holds `N_{n-2+j}`; for `n = 2` the vector starts at `N_0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NVector {
    n: usize,
    m: usize,
    counts: Vec<BigInt>,
}

impl NVector {
    /// Builds a vector from the counts starting at index `n - 2`. Missing
    /// trailing entries are zero-filled up to `N_m`.
    pub fn new(n: usize, m: usize, counts: Vec<BigInt>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidNVector(format!("need n >= 2, got {n}")));
        }
        if m + 2 < n {
            return Err(Error::InvalidNVector(format!(
                "m = {m} is below n - 2 = {}",
                n - 2
            )));
        }
        let len = m + 2 - n + 1;
        if counts.len() > len {
            return Err(Error::InvalidNVector(format!(
                "{} entries supplied, at most {len} fit N_{}..N_{m}",
                counts.len(),
                n - 2
            )));
        }
        if let Some(c) = counts.iter().find(|c| c.is_negative()) {
            return Err(Error::InvalidNVector(format!("negative count {c}")));
        }
        let mut counts = counts;
        counts.resize(len, BigInt::zero());
        Ok(NVector { n, m, counts })
    }

    pub fn zeros(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, Vec::new())
    }

    pub fn from_u64(n: usize, m: usize, counts: &[u64]) -> Result<Self> {
        Self::new(n, m, counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Lowest stored index, `n - 2`.
    pub fn first_index(&self) -> usize {
        self.n - 2
    }

    /// All stored entries, `N_{n-2}` first.
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `N_i`, zero outside the stored range.
    pub fn get(&self, i: usize) -> BigInt {
        i.checked_sub(self.first_index())
            .and_then(|j| self.counts.get(j).cloned())
            .unwrap_or_default()
    }

    /// `(i, N_i)` pairs over the stored range.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        let base = self.first_index();
        self.counts.iter().enumerate().map(move |(j, c)| (base + j, c))
    }

    /// Entries `N_{n-2} ..= N_{upto}`.
    pub fn prefix(&self, upto: usize) -> &[BigInt] {
        let end = (upto + 1).saturating_sub(self.first_index()).min(self.counts.len());
        &self.counts[..end]
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(Zero::is_zero)
    }

    /// Largest index carrying a nonzero count.
    pub fn top_index(&self) -> Option<usize> {
        self.counts
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|j| j + self.first_index())
    }
}

impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = self.top_index().map_or(0, |t| t + 1 - self.first_index());
        write!(f, "[")?;
        for (j, c) in self.counts[..end].iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Expands `sum_i N_i p^i (1-p)^(m-i)` into the standard basis.
pub fn from_nvector(nv: &NVector) -> IntPolynomial {
    state_polynomial(nv.m, nv.iter())
}

/// `sum_i counts_i p^i (1-p)^(m-i)` for arbitrary `(i, count)` entries.
pub fn state_polynomial<'a>(m: usize, counts: impl IntoIterator<Item = (usize, &'a BigInt)>) -> IntPolynomial {
    let q = IntPolynomial::q();
    let mut q_pows = Vec::with_capacity(m + 1);
    q_pows.push(IntPolynomial::one());
    for k in 1..=m {
        let next = &q_pows[k - 1] * &q;
        q_pows.push(next);
    }
    counts
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| q_pows[m - i].shift(i).scale(c))
        .sum()
}

/// Inverts [`from_nvector`] for a fixed `(n, m)`.
///
/// The change of basis is unitriangular, so the solve is exact over the
/// integers; the result is rejected when the polynomial has support below
/// `p^(n-2)`, degree above `m`, or a negative count.
pub fn to_nvector(f: &IntPolynomial, n: usize, m: usize) -> Result<NVector> {
    if n < 2 || m + 2 < n {
        return Err(Error::InvalidNVector(format!("bad shape (n, m) = ({n}, {m})")));
    }
    if f.degree().is_some_and(|d| d > m) {
        return Err(Error::NotStatePolynomial(format!(
            "degree {} exceeds m = {m}",
            f.degree().unwrap_or(0)
        )));
    }
    let lo = n - 2;
    if let Some(v) = f.valuation() {
        if v < lo {
            return Err(Error::NotStatePolynomial(format!(
                "nonzero coefficient of p^{v} below p^{lo}"
            )));
        }
    }
    let binom = binomial_table(m);
    let mut counts: Vec<BigInt> = Vec::with_capacity(m + 1 - lo);
    for j in lo..=m {
        // [p^j] of sum_i N_i p^i (1-p)^(m-i) is sum_{i<=j} N_i C(m-i, j-i) (-1)^(j-i)
        let mut acc = f.coeff(j);
        for (idx, n_i) in counts.iter().enumerate() {
            let i = lo + idx;
            let term = n_i * &binom[m - i][j - i];
            if (j - i).is_multiple_of(2) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        if acc.is_negative() {
            return Err(Error::NotStatePolynomial(format!("N_{j} = {acc} is negative")));
        }
        counts.push(acc);
    }
    NVector::new(n, m, counts)
}

pub(crate) fn binomial_table(m: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m + 1);
    for r in 0..=m {
        let mut row = vec![BigInt::from(1); r + 1];
        for k in 1..r {
            row[k] = &rows[r - 1][k - 1] + &rows[r - 1][k];
        }
        rows.push(row);
    }
    rows
}
