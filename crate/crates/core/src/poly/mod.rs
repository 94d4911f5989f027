//! Dense univariate polynomials in `p` with exact coefficients.

mod nvector;
mod sign;
mod text;

pub use nvector::{from_nvector, state_polynomial, to_nvector, NVector};
pub use sign::{
    classify_unit_interval, eval_rational, in_open_unit, isolate_unit_roots, sign_on_unit_interval, squarefree_decomposition, sturm_sequence,
    unit_root_count, IntervalSign, RootLocation,
};

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{FromInteger, OrderedField, Scalar};
use num_bigint::BigInt;

/// Polynomial with coefficients indexed by power; never stores trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * p^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate `p`.
    pub fn p() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `1 - p`, the failure probability of a single edge.
    pub fn q() -> Self {
        Self::new(vec![T::one(), T::zero() - T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `p^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `p^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_usize(k).expect("degree fits scalar"))
                .collect(),
        )
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: OrderedField> Polynomial<F> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.leading().expect("division by zero polynomial").clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = rem[k + ddeg].clone() / dlead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Self::new(quot), Self::new(rem))
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() / l.clone()).collect())
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Polynomial<BigInt> {
    /// Embed the integer coefficients into a field (or another ring).
    pub fn to_field<F: Scalar + FromInteger>(&self) -> Polynomial<F> {
        self.map(F::from_integer)
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Self) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, T: Scalar> $tr<&'a Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Scalar> std::iter::Sum for Polynomial<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntPolynomial, RatPolynomial};
    use num_rational::BigRational;

    fn int(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(int(&[1, 0, 0]).coeffs().len(), 1);
        assert!(int(&[0, 0]).is_zero());
        assert_eq!(int(&[]).degree(), None);
    }

    #[test]
    fn ring_operations() {
        let f = int(&[3, -1, 4]);
        assert!((&f - &f).is_zero());
        assert_eq!(&IntPolynomial::p() * &IntPolynomial::q(), int(&[0, 1, -1]));
        assert_eq!(IntPolynomial::q().pow(3), int(&[1, -3, 3, -1]));
        assert_eq!(f.scale(&BigInt::from(2)), int(&[6, -2, 8]));
        assert_eq!(f.shift(2), int(&[0, 0, 3, -1, 4]));
        assert_eq!(f.derivative(), int(&[-1, 8]));
    }

    #[test]
    fn b_family_expression_at_a_equal_one() {
        // (1-p) + (1-p)^2 - 2(1-p)^3 for m = 3
        let q = IntPolynomial::q();
        let lhs = &(&q + &q.pow(2)) - &q.pow(3).scale(&BigInt::from(2));
        // direct expansion: (1-p) + (1 - 2p + p^2) - 2(1 - 3p + 3p^2 - p^3)
        assert_eq!(lhs, int(&[0, 3, -5, 2]));
    }

    #[test]
    fn division_and_gcd() {
        let a: RatPolynomial = int(&[-1, 0, 1]).to_field(); // p^2 - 1
        let b: RatPolynomial = int(&[-1, 1]).to_field(); // p - 1
        let (qt, r) = a.div_rem(&b);
        assert_eq!(qt, int(&[1, 1]).to_field());
        assert!(r.is_zero());
        let g = a.gcd(&int(&[1, 2, 1]).to_field()); // gcd with (p+1)^2
        assert_eq!(g, int(&[1, 1]).to_field());
    }

    #[test]
    fn generic_over_machine_scalars() {
        let f = Polynomial::<i64>::new(vec![0, 8, -22, 20, -6]).shift(1);
        assert_eq!(f.eval(&1), 0);
        let g = Polynomial::<f64>::new(vec![0.0, 0.0, 8.0, -22.0, 20.0, -6.0]);
        assert!((g.eval(&0.5) - 0.3125).abs() < 1e-12);
        let r = RatPolynomial::new(vec![BigRational::from_integer(1.into())]);
        assert_eq!(r.degree(), Some(0));
    }
}
