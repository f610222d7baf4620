use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use num_traits::{One, Zero};

/// Scalar arithmetic shared by the dense linear algebra.
///
/// Operators take the right operand by reference so generic code can avoid
/// cloning both sides of every product.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

/// Marker for fields whose zero test is exact, so elimination is reliable.
pub trait ExactField: Field {}
