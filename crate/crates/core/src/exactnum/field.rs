use num_traits::{One, Zero};

use super::{BiRatFun, ExactScalar, RatFun};

/// The handful of field operations the generic elimination routines need.
///
/// `div` may assume a nonzero divisor; callers check `is_zero` first.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for ExactScalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

macro_rules! impl_field {
    ($t:ty) => {
        impl Field for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn add(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn div(&self, rhs: &Self) -> Self {
                self.checked_div(rhs).expect("Field::div by zero")
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}

impl_field!(RatFun);
impl_field!(BiRatFun);
