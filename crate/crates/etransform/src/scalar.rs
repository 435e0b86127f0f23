//! Floating point scalar abstraction used by every evaluation routine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// f32 or f64.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Absolute tolerance for wall tests in the fundamental-domain reduction.
    const WALL_EPS: f64;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal out of range")
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer out of range")
    }

    fn from_ratio(r: Ratio<i64>) -> Self {
        Self::from_int(*r.numer()) / Self::from_int(*r.denom())
    }
}

impl Scalar for f32 {
    const WALL_EPS: f64 = 1e-5;
}

impl Scalar for f64 {
    const WALL_EPS: f64 = 1e-12;
}
