//! Scalar abstraction for the guarantee formulas.
//!
//! Every formula that is a finite rational expression is generic over
//! [`Scalar`], so it can be evaluated exactly with [`crate::Rational`] or
//! approximately with `f32`/`f64`. Only the closed forms involving pi need
//! [`RealScalar`].

use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive, Num};

pub trait Scalar: Num + FromPrimitive + Clone + PartialOrd + Debug {
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count is representable")
    }

    fn ratio(numerator: usize, denominator: usize) -> Self {
        Self::from_count(numerator) / Self::from_count(denominator)
    }
}

impl<T> Scalar for T where T: Num + FromPrimitive + Clone + PartialOrd + Debug {}

pub trait RealScalar: Scalar + Float + FloatConst {
    /// Sum of `1 / i^2` over all `i >= 1`.
    fn basel() -> Self {
        Self::PI() * Self::PI() / Self::from_count(6)
    }
}

impl<T> RealScalar for T where T: Scalar + Float + FloatConst {}
