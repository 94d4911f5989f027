//! Scalar abstractions shared by the polynomial code.
//!
//! Ring operations only need [`Scalar`]; sign classification and root
//! isolation need an ordered field, see [`OrderedField`]. Exact verdicts
//! run over `BigInt` / `BigRational`, but the same code accepts machine
//! integers or floats where that is good enough (sampling, plotting).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// Commutative ring element usable as a polynomial coefficient.
pub trait Scalar: Num + Clone + FromPrimitive + Debug {}

impl<T: Num + Clone + FromPrimitive + Debug> Scalar for T {}

/// Ordered field: what Sturm sequences and bisection require.
pub trait OrderedField: Scalar + Signed + PartialOrd {
    /// Midpoint of `a` and `b`.
    fn midpoint(a: &Self, b: &Self) -> Self {
        let two = Self::one() + Self::one();
        (a.clone() + b.clone()) / two
    }
}

impl<T: Scalar + Signed + PartialOrd> OrderedField for T {}

/// Lossless embedding of integer coefficients into a field.
pub trait FromInteger: Sized {
    fn from_integer(value: &BigInt) -> Self;
}

impl FromInteger for BigInt {
    fn from_integer(value: &BigInt) -> Self {
        value.clone()
    }
}

impl FromInteger for BigRational {
    fn from_integer(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
}

impl FromInteger for f64 {
    fn from_integer(value: &BigInt) -> Self {
        num_traits::ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
    }
}
