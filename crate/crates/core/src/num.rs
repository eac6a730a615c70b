//! Scalar abstraction: every numeric routine in this crate is generic over
//! [`Float`], implemented for `f32` and `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point scalar usable as the element type of [`crate::matrix::Matrix`].
pub trait Float:
    num_traits::Float
    + num_traits::NumAssignOps
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl Float for f32 {}
impl Float for f64 {}

/// Convert an `f64` constant into the working scalar type.
#[inline]
pub fn cast<T: Float>(v: f64) -> T {
    T::from_f64(v).expect("constant not representable in scalar type")
}
