//! Exact arithmetic tower: rationals, dense univariate polynomials, reduced
//! rational functions, sparse bivariate polynomials in `(x, t)` and their
//! fractions, and quadratic extensions `Q(x)[s]/(s^2 - d)`.

/// Owned/borrowed operator forwarding onto the `&T op &T` implementation.
macro_rules! forward_binops {
    ($t:ty) => {
        $crate::exactnum::forward_binops!(@one $t, Add, add);
        $crate::exactnum::forward_binops!(@one $t, Sub, sub);
        $crate::exactnum::forward_binops!(@one $t, Mul, mul);
    };
    (@one $t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binops;

mod bipoly;
mod biratfun;
mod field;
pub mod linalg;
mod poly;
mod quadext;
mod ratfun;
mod scalar;

pub use bipoly::BiPoly;
pub use biratfun::BiRatFun;
pub use field::Field;
pub use poly::Poly;
pub use quadext::QuadExtElem;
pub use ratfun::RatFun;
pub use scalar::{format_scalar, frac, int, parse_scalar, ExactScalar};
