use std::fmt;

use super::{BiPoly, RatFun};
use crate::error::{Error, Result};

/// Element `a + b*s` of `Q(x)[s] / (s^2 - d)`.
///
/// The discriminant `d` is carried by value; arithmetic between elements
/// with different `d` is refused.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    a: RatFun,
    b: RatFun,
    d: RatFun,
}

impl QuadExtElem {
    pub fn new(a: RatFun, b: RatFun, d: RatFun) -> Self {
        QuadExtElem { a, b, d }
    }

    pub fn from_rational(a: RatFun, d: RatFun) -> Self {
        Self::new(a, RatFun::zero(), d)
    }

    pub fn one(d: RatFun) -> Self {
        Self::from_rational(RatFun::one(), d)
    }

    /// The adjoined square root `s` itself.
    pub fn sqrt_d(d: RatFun) -> Self {
        Self::new(RatFun::zero(), RatFun::one(), d)
    }

    pub fn a(&self) -> &RatFun {
        &self.a
    }

    pub fn b(&self) -> &RatFun {
        &self.b
    }

    pub fn d(&self) -> &RatFun {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.d == rhs.d {
            Ok(())
        } else {
            Err(Error::MismatchedDiscriminant)
        }
    }

    fn lift(&self, r: &RatFun) -> Self {
        Self::from_rational(r.clone(), self.d.clone())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(Self::new(&self.a + &rhs.a, &self.b + &rhs.b, self.d.clone()))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(Self::new(&self.a - &rhs.a, &self.b - &rhs.b, self.d.clone()))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b, self.d.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &self.d);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Ok(Self::new(a, b, self.d.clone()))
    }

    pub fn add_rational(&self, r: &RatFun) -> Self {
        self.add(&self.lift(r)).expect("same discriminant")
    }

    pub fn mul_rational(&self, r: &RatFun) -> Self {
        Self::new(&self.a * r, &self.b * r, self.d.clone())
    }

    /// `a - b*s`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.d.clone())
    }

    /// `(a + b s)(a - b s) = a^2 - b^2 d`.
    pub fn norm(&self) -> RatFun {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &self.d)
    }

    pub fn inv(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let scale = norm.inv()?;
        Ok(self.conjugate().mul_rational(&scale))
    }

    /// Division by multiplying through with the conjugate of `rhs`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        self.mul(&rhs.inv()?)
    }

    /// Square-and-multiply power.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::one(self.d.clone());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same discriminant");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same discriminant");
            }
        }
        acc
    }

    /// Evaluates `p(x, t)` at `t = self`, by Horner in `t`.
    pub fn eval_bipoly_in_t(p: &BiPoly, t: &Self) -> Self {
        p.to_t_coeffs()
            .iter()
            .rev()
            .fold(Self::from_rational(RatFun::zero(), t.d.clone()), |acc, c| {
                acc.mul(t)
                    .expect("same discriminant")
                    .add_rational(&RatFun::from_poly(c.clone()))
            })
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*s", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Poly;

    fn d_x2_minus_1() -> RatFun {
        RatFun::from_poly(Poly::from_i64s(&[-1, 0, 1]))
    }

    fn poly(c: &[i64]) -> RatFun {
        RatFun::from_poly(Poly::from_i64s(c))
    }

    #[test]
    fn radical_squares_to_discriminant() {
        let s = QuadExtElem::sqrt_d(d_x2_minus_1());
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, QuadExtElem::from_rational(d_x2_minus_1(), d_x2_minus_1()));
    }

    #[test]
    fn conjugate_product_is_norm() {
        let e = QuadExtElem::new(poly(&[1, 2]), poly(&[0, 3]), d_x2_minus_1());
        let p = e.mul(&e.conjugate()).unwrap();
        assert!(p.is_rational());
        assert_eq!(p.a(), &e.norm());
    }

    #[test]
    fn root_times_conjugate_is_one() {
        // t1 = phi + s with d = phi^2 - 1, so t1 * (phi - s) = 1
        let phi = RatFun::new(Poly::from_i64s(&[1, -1]), Poly::from_i64s(&[0, 2])).unwrap();
        let d = &(&phi * &phi) - &RatFun::one();
        let t1 = QuadExtElem::new(phi.clone(), RatFun::one(), d.clone());
        let other = QuadExtElem::new(phi, -RatFun::one(), d.clone());
        assert_eq!(t1.mul(&other).unwrap(), QuadExtElem::one(d));
    }

    #[test]
    fn powers_follow_chebyshev_components() {
        let base = QuadExtElem::new(RatFun::x(), RatFun::one(), d_x2_minus_1());
        assert_eq!(base.pow(0), QuadExtElem::one(d_x2_minus_1()));
        let sq = base.pow(2);
        assert_eq!((sq.a(), sq.b()), (&poly(&[-1, 0, 2]), &poly(&[0, 2])));
        let cube = base.pow(3);
        assert_eq!((cube.a(), cube.b()), (&poly(&[0, -3, 0, 4]), &poly(&[-1, 0, 4])));
    }

    #[test]
    fn mismatched_discriminants_rejected() {
        let a = QuadExtElem::sqrt_d(d_x2_minus_1());
        let b = QuadExtElem::sqrt_d(RatFun::x());
        assert_eq!(a.add(&b), Err(Error::MismatchedDiscriminant));
        assert_eq!(a.mul(&b), Err(Error::MismatchedDiscriminant));
        assert_eq!(a.div(&b), Err(Error::MismatchedDiscriminant));
    }

    #[test]
    fn inverse_and_zero_division() {
        let e = QuadExtElem::new(poly(&[2, 1]), poly(&[1]), d_x2_minus_1());
        assert_eq!(e.mul(&e.inv().unwrap()).unwrap(), QuadExtElem::one(d_x2_minus_1()));
        let zero = QuadExtElem::from_rational(RatFun::zero(), d_x2_minus_1());
        assert_eq!(e.div(&zero), Err(Error::DivisionByZero));
    }
}
