//! Floating-point scalar abstraction.
//!
//! Everything numeric in this crate is generic over [`Real`] so the same
//! formulas run at `f32` and `f64`. The trait is a bundle of the num-traits
//! capabilities the modules actually use; both primitive float types
//! implement it via the blanket impl.

use std::fmt::{Debug, Display};

pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::NumAssign
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
}

impl<T> Real for T where
    T: num_traits::Float
        + num_traits::FloatConst
        + num_traits::FromPrimitive
        + num_traits::NumAssign
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` literal into the working scalar type.
///
/// Panics if the conversion fails, which cannot happen for finite literals
/// and the primitive float types.
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("finite f64 literal must convert to the scalar type")
}
