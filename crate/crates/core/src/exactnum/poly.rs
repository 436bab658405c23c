use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{format_scalar, parse_scalar, ExactScalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, indexed by exponent of `x`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree = len - 1` otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<ExactScalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn x() -> Self {
        Self::monomial(ExactScalar::one(), 1)
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: ExactScalar, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from small integer coefficients, low to high.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactScalar> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    /// The nonzero coefficient of smallest exponent.
    pub fn lowest_coeff(&self) -> Option<&ExactScalar> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &ExactScalar) -> ExactScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &ExactScalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Reduction modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Self::from_coeffs(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![ExactScalar::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let delta = &c * dc;
                rem[i + j] -= delta;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Runs a primitive remainder sequence on integer images so that
    /// coefficient growth stays bounded by the content removal.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let mut a = primitive_integer_part(self);
        let mut b = primitive_integer_part(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = int_pseudo_rem(&a, &b);
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                return Poly::one();
            }
            a = b;
            b = int_primitive(r);
        }
        Poly::from_coeffs(b.into_iter().map(BigRational::from_integer).collect()).monic()
    }

    pub fn derivative(&self) -> Poly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// External coefficient-list form, low to high: `[1, -3/2, 0, 1]`.
    /// The zero polynomial prints as `[0]`.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "[0]".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_scalar).collect();
        format!("[{}]", parts.join(", "))
    }

    pub fn parse_coeff_list(text: &str) -> Result<Poly> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [c0, c1, ...], got {text:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(parse_scalar)
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Coefficients as decimal fraction strings, low to high.
    pub fn to_string_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(format_scalar).collect()
    }
}

/// Clears denominators and divides out the integer content; leading
/// coefficient made positive.
fn primitive_integer_part(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    int_primitive(ints)
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return Vec::new();
    }
    let negate = v.last().is_some_and(Signed::is_negative);
    for c in v.iter_mut() {
        *c = &*c / &content;
        if negate {
            *c = -&*c;
        }
    }
    v
}

/// `lc(b)^e * a mod b` computed by repeated leading-term cancellation.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
        // keep the remainder primitive as it shrinks
        r = int_primitive(r);
    }
    r
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

super::forward_binops!(Poly);

impl From<ExactScalar> for Poly {
    fn from(c: ExactScalar) -> Self {
        Poly::constant(c)
    }
}

/// Ascending powers with explicit `*`: `1 - 2*x + 3/2*x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let var = match i {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                };
                (c.clone(), var)
            });
        write_terms(f, terms)
    }
}

/// Shared term writer for the pretty printers: `(coefficient, monomial)`
/// pairs, an empty monomial meaning the constant term.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (ExactScalar, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, var) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { "-" } else { "+" })?;
        }
        first = false;
        if var.is_empty() {
            write!(f, "{}", format_scalar(&mag))?;
        } else if mag.is_one() {
            write!(f, "{var}")?;
        } else {
            write!(f, "{}*{var}", format_scalar(&mag))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
