use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient field for polynomials and expansions.
///
/// Exact identities only hold for exact types such as `BigRational`; the
/// floating point instantiations are usable but compare coefficients exactly.
pub trait Scalar: Num + Clone + Debug + PartialOrd + Neg<Output = Self> + FromPrimitive + Send + Sync {}

impl<T> Scalar for T where T: Num + Clone + Debug + PartialOrd + Neg<Output = T> + FromPrimitive + Send + Sync {}

pub(crate) fn from_u64<T: Scalar>(v: u64) -> T {
    T::from_u64(v).expect("scalar type cannot represent an integer count")
}

pub(crate) fn from_i64<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent an integer count")
}
