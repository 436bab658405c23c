use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{BiPoly, ExactScalar, Poly, RatFun};
use crate::error::{Error, Result};

/// Quotient of bivariate polynomials in `(x, t)`.
///
/// Kept fully reduced (see [`BiPoly::gcd`]) with the denominator's
/// lexicographically first term scaled to `+1`, so `==` is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiRatFun {
    num: BiPoly,
    den: BiPoly,
}

impl BiRatFun {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        Self::normalized(num, den)
    }

    fn normalized(num: BiPoly, den: BiPoly) -> Self {
        let lead = den.first_coeff().expect("nonzero denominator").recip();
        if lead.is_one() {
            BiRatFun { num, den }
        } else {
            BiRatFun {
                num: num.scale(&lead),
                den: den.scale(&lead),
            }
        }
    }

    pub fn zero() -> Self {
        BiRatFun {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_bipoly(BiPoly::one())
    }

    pub fn x() -> Self {
        Self::from_bipoly(BiPoly::x())
    }

    pub fn t() -> Self {
        Self::from_bipoly(BiPoly::t())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_bipoly(BiPoly::constant(c))
    }

    pub fn from_bipoly(p: BiPoly) -> Self {
        BiRatFun {
            num: p,
            den: BiPoly::one(),
        }
    }

    /// Embeds a rational function of `x` alone.
    pub fn from_ratfun_x(r: &RatFun) -> Self {
        Self::normalized(BiPoly::from_poly_x(r.num()), BiPoly::from_poly_x(r.den()))
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &BiRatFun) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        if self.is_zero() {
            return if exp == 0 { Self::one() } else { Self::zero() };
        }
        Self::normalized(self.num.pow(exp), self.den.pow(exp))
    }

    /// Substitutes a rational value for `t`; `None` when the denominator
    /// vanishes there.
    pub fn eval_t(&self, value: &ExactScalar) -> Option<RatFun> {
        let den = self.den.eval_t(value);
        if den.is_zero() {
            return None;
        }
        RatFun::new(self.num.eval_t(value), den).ok()
    }

    /// The value as a function of `x` alone, if `t` does not occur.
    pub fn as_ratfun_x(&self) -> Option<RatFun> {
        if self.num.degree_t().unwrap_or(0) > 0 || self.den.degree_t().unwrap_or(0) > 0 {
            return None;
        }
        let n = self.num.to_t_coeffs().into_iter().next().unwrap_or_else(Poly::zero);
        let d = self.den.to_t_coeffs().into_iter().next().unwrap_or_else(Poly::one);
        RatFun::new(n, d).ok()
    }
}

impl<'a> Add<&'a BiRatFun> for &'a BiRatFun {
    type Output = BiRatFun;
    fn add(self, rhs: &BiRatFun) -> BiRatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return BiRatFun::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let (ld, rd) = if g.is_constant() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd divides"),
                rhs.den.exact_div(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        BiRatFun::reduced(num, &self.den * &rd)
    }
}

impl<'a> Sub<&'a BiRatFun> for &'a BiRatFun {
    type Output = BiRatFun;
    fn sub(self, rhs: &BiRatFun) -> BiRatFun {
        self + &(-rhs)
    }
}

fn cancel(a: &BiPoly, b: &BiPoly) -> (BiPoly, BiPoly) {
    if a.is_constant() || b.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_constant() {
        (a.clone(), b.clone())
    } else {
        (
            a.exact_div(&g).expect("gcd divides"),
            b.exact_div(&g).expect("gcd divides"),
        )
    }
}

impl<'a> Mul<&'a BiRatFun> for &'a BiRatFun {
    type Output = BiRatFun;
    fn mul(self, rhs: &BiRatFun) -> BiRatFun {
        if self.is_zero() || rhs.is_zero() {
            return BiRatFun::zero();
        }
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        BiRatFun::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &BiRatFun {
    type Output = BiRatFun;
    fn neg(self) -> BiRatFun {
        BiRatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for BiRatFun {
    type Output = BiRatFun;
    fn neg(self) -> BiRatFun {
        -&self
    }
}

super::forward_binops!(BiRatFun);

impl From<BiPoly> for BiRatFun {
    fn from(p: BiPoly) -> Self {
        BiRatFun::from_bipoly(p)
    }
}

impl fmt::Display for BiRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn geometric_sum_in_t_reduces() {
        // (1 - t^3) / (1 - t) = 1 + t + t^2
        let num = &BiPoly::one() - &BiPoly::t().pow(3);
        let den = &BiPoly::one() - &BiPoly::t();
        let r = BiRatFun::new(num, den).unwrap();
        let expected = &(&BiPoly::one() + &BiPoly::t()) + &BiPoly::t().pow(2);
        assert_eq!(r, BiRatFun::from_bipoly(expected));
    }

    #[test]
    fn sign_normalization() {
        let r = BiRatFun::new(BiPoly::one(), -&BiPoly::t()).unwrap();
        assert_eq!(r.num(), &BiPoly::constant(int(-1)));
        assert_eq!(r.den(), &BiPoly::t());
    }

    #[test]
    fn field_round_trips() {
        let a = BiRatFun::new(&BiPoly::x() + &BiPoly::t(), &BiPoly::one() - &BiPoly::x()).unwrap();
        let b = BiRatFun::new(BiPoly::t(), &BiPoly::x() * &BiPoly::t() - BiPoly::one()).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b).checked_div(&b).unwrap(), &a);
        assert_eq!(&a * &a.inv().unwrap(), BiRatFun::one());
        assert_eq!(BiRatFun::one().checked_div(&BiRatFun::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn t_substitution() {
        let r = BiRatFun::new(&BiPoly::x() * &BiPoly::t(), &BiPoly::one() - &BiPoly::t()).unwrap();
        assert_eq!(r.eval_t(&int(1)), None);
        assert_eq!(r.eval_t(&int(2)), Some(RatFun::from_poly(Poly::from_i64s(&[0, -2]))));
    }
}
