use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer scalar usable for lattice matrices.
///
/// Implemented for `i64`, `i128` and `num_bigint::BigInt`. Fixed-width types
/// overflow silently in release builds, so use them only when entries are
/// known to stay small.
pub trait Integer:
    num_integer::Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
    fn of_u64(v: u64) -> Self {
        <Self as FromPrimitive>::from_u64(v).expect("u64 fits the scalar type")
    }

    fn of(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 fits the scalar type")
    }

    /// Residue in `[0, m)`.
    fn rem_u64(&self, m: u64) -> u64 {
        let m = Self::of_u64(m);
        self.mod_floor(&m).to_u64().expect("residue fits u64")
    }
}

impl<T> Integer for T where
    T: num_integer::Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}
