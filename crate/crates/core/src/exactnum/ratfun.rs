use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExactScalar, Poly};
use crate::error::{Error, Result};

/// Reduced quotient of univariate polynomials.
///
/// Invariants: `den != 0`, `gcd(num, den) = 1`, and the lowest-order nonzero
/// coefficient of `den` is `+1`. Zero is `0 / 1`. Under this normalization a
/// function regular at the origin has `den(0) = 1`, so equal functions have
/// identical representations and `==` is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let low = den.lowest_coeff().expect("nonzero denominator").recip();
        if low.is_one() {
            RatFun { num, den }
        } else {
            RatFun {
                num: num.scale(&low),
                den: den.scale(&low),
            }
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        // num and den stay coprime under powering
        let mut out = RatFun {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        };
        if out.num.is_zero() {
            out.den = Poly::one();
        }
        out
    }

    /// Substitutes `arg` for `x` in `p`.
    ///
    /// With `arg = N/D` and `n = deg p`, evaluates the homogenized form
    /// `sum c_i N^i D^(n-i)` over `D^n` in the polynomial ring and reduces
    /// once at the end.
    pub fn compose(p: &Poly, arg: &RatFun) -> RatFun {
        let Some(n) = p.degree() else {
            return RatFun::zero();
        };
        let mut num_pows = Vec::with_capacity(n + 1);
        num_pows.push(Poly::one());
        for i in 1..=n {
            let next = &num_pows[i - 1] * &arg.num;
            num_pows.push(next);
        }
        let mut den_pow = Poly::one();
        let mut acc = Poly::zero();
        for i in (0..=n).rev() {
            let c = p.coeff(i);
            if !c.is_zero() {
                acc = &acc + &(&num_pows[i] * &den_pow).scale(&c);
            }
            den_pow = &den_pow * &arg.den;
        }
        let den = arg.den.pow(n as u32);
        RatFun::reduced(acc, den)
    }

    /// `"[n0, n1, ...] / [d0, d1, ...]"`.
    pub fn to_coeff_lists(&self) -> String {
        format!("{} / {}", self.num.to_coeff_list(), self.den.to_coeff_list())
    }

    /// Parses `"num / den"` where both sides are coefficient lists.
    /// A bare list is read as a polynomial.
    pub fn parse_coeff_lists(text: &str) -> Result<Self> {
        match text.split_once("] /") {
            Some((num, den)) => RatFun::new(
                Poly::parse_coeff_list(&format!("{num}]"))?,
                Poly::parse_coeff_list(den)?,
            ),
            None => Ok(RatFun::from_poly(Poly::parse_coeff_list(text)?)),
        }
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let ld = self.den.exact_div(&g).expect("gcd divides");
        let rd = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        RatFun::reduced(num, &self.den * &rd)
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        // cross-cancel first so the final gcd works on smaller inputs
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let low = den.lowest_coeff().expect("nonzero").recip();
        RatFun {
            num: num.scale(&low),
            den: den.scale(&low),
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

super::forward_binops!(RatFun);

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl From<ExactScalar> for RatFun {
    fn from(c: ExactScalar) -> Self {
        RatFun::constant(c)
    }
}

/// `num / den` in the pretty polynomial form, e.g. `1 / 1 - 2*x`.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}
