//! Text form `-6*p^5 + 20*p^4 - 22*p^3 + 8*p^2`: descending powers, exact
//! coefficients, unit coefficients elided. Parsing accepts exactly what
//! `Display` produces plus optional whitespace and repeated powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::error::Error;
use crate::scalar::Scalar;

impl<T: Scalar + Signed + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "p")?,
                (1, false) => write!(f, "{a}*p")?,
                (_, true) => write!(f, "p^{k}")?,
                (_, false) => write!(f, "{a}*p^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial<BigInt> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::PolynomialSyntax("empty input".into()));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                end += 1;
            }
            let (c, k) = parse_term(&compact[start..end])?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
            start = end;
        }
        Ok(Polynomial::new(coeffs))
    }
}

fn parse_term(term: &str) -> Result<(BigInt, usize), Error> {
    let bad = || Error::PolynomialSyntax(format!("bad term `{term}`"));
    let (neg, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coeff_str, power_str) = match body.find('p') {
        None => (body, None),
        Some(i) => {
            let coeff = &body[..i];
            let coeff = if coeff.is_empty() {
                ""
            } else {
                match coeff.strip_suffix('*') {
                    Some(c) if !c.is_empty() => c,
                    _ => return Err(bad()),
                }
            };
            (coeff, Some(&body[i + 1..]))
        }
    };
    let coeff = if coeff_str.is_empty() {
        if power_str.is_none() {
            return Err(bad());
        }
        BigInt::one()
    } else {
        if !coeff_str.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        coeff_str.parse::<BigInt>().map_err(|_| bad())?
    };
    let power = match power_str {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let digits = rest.strip_prefix('^').ok_or_else(bad)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse::<usize>().map_err(|_| bad())?
        }
    };
    Ok((if neg { -coeff } else { coeff }, power))
}
