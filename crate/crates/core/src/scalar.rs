//! Numeric abstraction shared by the scoring and evaluation code.
//!
//! The salience score and the precision/recall/F measures only use field
//! operations, so they are written once against [`Scalar`] and instantiated
//! either with `f64` or with exact rationals (`Ratio<i64>`).

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A numeric type usable for scores: a field with a total-enough order.
pub trait Scalar: Num + Copy + PartialOrd + FromPrimitive + ToPrimitive + Debug {
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits the scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
impl Scalar for Ratio<i64> {}

/// Exact rational scalar.
pub type Exact = Ratio<i64>;
