//! The coefficient bound shared by [`Poly`](crate::poly::Poly),
//! [`Matrix`](crate::matrix::Matrix) and [`Cyc`](crate::cyclotomic::Cyc).
//!
//! Exact work uses [`Rational`](crate::Rational); `f64` and `f32` satisfy the
//! same bound and give fast approximate evaluation of the same formulas.
//! Operations that divide (inverses, gcds, characteristic polynomials) assume
//! the scalar is a field.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}
