use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the library is generic over: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + 'static
{
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + 'static
{
}

/// Converts a small nonnegative integer; counts in this crate stay well below
/// the scalar's exact-integer range.
pub(crate) fn from_usize<S: Scalar>(n: usize) -> S {
    S::from_usize(n).expect("integer count representable in scalar")
}

/// Converts a tolerance or other literal constant.
pub(crate) fn from_f64<S: Scalar>(x: f64) -> S {
    S::from_f64(x).expect("f64 literal representable in scalar")
}

pub(crate) fn two<S: Scalar>() -> S {
    S::one() + S::one()
}

pub(crate) fn half<S: Scalar>() -> S {
    S::one() / two()
}
