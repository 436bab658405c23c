use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::write_terms;
use super::{ExactScalar, Poly};

/// Sparse polynomial in the two formal variables `x` and `t`.
///
/// Keys are `(deg_x, deg_t)`; zero coefficients are never stored. The map
/// order is lexicographic on that pair, which fixes the "first term" used for
/// sign normalization of fractions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), ExactScalar>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn x() -> Self {
        Self::monomial(ExactScalar::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(ExactScalar::one(), 0, 1)
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: ExactScalar, deg_x: u32, deg_t: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_x, deg_t), c);
        }
        BiPoly { terms }
    }

    /// Embeds a univariate polynomial in `x`.
    pub fn from_poly_x(p: &Poly) -> Self {
        Self::from_t_coeffs(std::slice::from_ref(p))
    }

    /// Builds `sum_j coeffs[j](x) * t^j`.
    pub fn from_t_coeffs(coeffs: &[Poly]) -> Self {
        let mut terms = BTreeMap::new();
        for (j, p) in coeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((i as u32, j as u32), c.clone());
                }
            }
        }
        BiPoly { terms }
    }

    /// Coefficients in `Q[x]` of successive powers of `t`, without trailing
    /// zero entries.
    pub fn to_t_coeffs(&self) -> Vec<Poly> {
        let Some(dt) = self.degree_t() else {
            return Vec::new();
        };
        let mut dense: Vec<Vec<ExactScalar>> = vec![Vec::new(); dt as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut dense[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, ExactScalar::zero());
            }
            row[i as usize] = c.clone();
        }
        dense.into_iter().map(Poly::from_coeffs).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ExactScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_x: u32, deg_t: u32) -> ExactScalar {
        self.terms
            .get(&(deg_x, deg_t))
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Coefficient of the lexicographically first term.
    pub fn first_coeff(&self) -> Option<&ExactScalar> {
        self.terms.values().next()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
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

    /// Substitutes a rational value for `t`.
    pub fn eval_t(&self, value: &ExactScalar) -> Poly {
        self.to_t_coeffs()
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &acc.scale(value) + c)
    }

    pub fn derivative_t(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                terms.insert((i, j - 1), c * ExactScalar::from_integer(j.into()));
            }
        }
        BiPoly { terms }
    }

    /// Greatest common divisor up to a rational scalar.
    ///
    /// Splits each input into its content in `Q[x]` and a primitive part in
    /// `Q[x][t]`, then runs a primitive pseudo-remainder sequence in `t` on the
    /// primitive parts. The product of the two gcds is the full gcd.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (ca, pa) = primitive(self.to_t_coeffs());
        let (cb, pb) = primitive(other.to_t_coeffs());
        let content = ca.gcd(&cb);
        let g = primitive_prs(pa, pb);
        let g: Vec<Poly> = g.iter().map(|p| p * &content).collect();
        BiPoly::from_t_coeffs(&g)
    }

    /// Quotient when `divisor` divides `self` exactly in `Q[x, t]`.
    pub fn exact_div(&self, divisor: &BiPoly) -> Option<BiPoly> {
        let q = exact_div_t(&self.to_t_coeffs(), &divisor.to_t_coeffs())?;
        Some(BiPoly::from_t_coeffs(&q))
    }
}

type TPoly = Vec<Poly>;

fn trim(v: &mut TPoly) {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
}

/// Splits into (monic content in `Q[x]`, primitive part).
fn primitive(v: TPoly) -> (Poly, TPoly) {
    let content = v.iter().fold(Poly::zero(), |acc, c| acc.gcd(c));
    if content.is_one() || content.is_zero() {
        return (Poly::one(), v);
    }
    let pp = v
        .iter()
        .map(|c| c.exact_div(&content).expect("content divides"))
        .collect();
    (content, pp)
}

fn pseudo_rem(a: &[Poly], b: &[Poly]) -> TPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&lr * bc);
        }
        trim(&mut r);
    }
    r
}

fn primitive_prs(mut a: TPoly, mut b: TPoly) -> TPoly {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 {
            return vec![Poly::one()];
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = primitive(r).1;
    }
}

fn exact_div_t(a: &[Poly], b: &[Poly]) -> Option<TPoly> {
    if b.is_empty() {
        return None;
    }
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let mut q = vec![Poly::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].exact_div(&b[db])?;
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&c * bc);
        }
        q[shift] = c;
        trim(&mut r);
    }
    r.is_empty().then(|| {
        trim(&mut q);
        q
    })
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            let entry = terms.entry(*k).or_insert_with(ExactScalar::zero);
            *entry += v;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        BiPoly { terms }
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut terms: BTreeMap<(u32, u32), ExactScalar> = BTreeMap::new();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                *terms.entry((i1 + i2, j1 + j2)).or_insert_with(ExactScalar::zero) += a * b;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        BiPoly { terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

super::forward_binops!(BiPoly);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(&(i, j), c)| {
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("t".to_string()),
                _ => parts.push(format!("t^{j}")),
            }
            (c.clone(), parts.join("*"))
        });
        write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn bp(terms: &[(i64, u32, u32)]) -> BiPoly {
        terms
            .iter()
            .fold(BiPoly::zero(), |acc, &(c, i, j)| &acc + &BiPoly::monomial(int(c), i, j))
    }

    #[test]
    fn product_and_display() {
        let a = &BiPoly::x() + &BiPoly::t();
        let b = &BiPoly::x() - &BiPoly::t();
        assert_eq!(&a * &b, bp(&[(1, 2, 0), (-1, 0, 2)]));
        assert_eq!((&a * &b).to_string(), "-t^2 + x^2");
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn gcd_finds_mixed_and_content_factors() {
        let common = bp(&[(1, 1, 1), (-1, 0, 0)]); // x t - 1
        let x_factor = bp(&[(1, 0, 0), (1, 1, 0)]); // 1 + x
        let a = &(&common * &x_factor) * &bp(&[(1, 0, 2), (3, 1, 0)]);
        let b = &(&common * &x_factor) * &bp(&[(2, 2, 1), (1, 0, 0)]);
        let g = a.gcd(&b);
        let expected = &common * &x_factor;
        let ratio = g.exact_div(&expected).expect("expected divides gcd");
        assert!(ratio.is_constant());
        assert!(bp(&[(1, 0, 1), (1, 1, 0)]).gcd(&bp(&[(1, 0, 1), (-1, 1, 0)])).is_constant());
    }

    #[test]
    fn exact_division() {
        let a = bp(&[(1, 0, 2), (-1, 2, 0)]);
        let b = bp(&[(1, 0, 1), (-1, 1, 0)]);
        assert_eq!(a.exact_div(&b), Some(bp(&[(1, 0, 1), (1, 1, 0)])));
        assert_eq!(b.exact_div(&a), None);
    }

    #[test]
    fn substitution_and_derivative() {
        let k = bp(&[(1, 2, 2), (1, 2, 0), (-1, 0, 1), (1, 1, 1)]);
        assert_eq!(k.eval_t(&int(1)), Poly::from_i64s(&[-1, 1, 2]));
        assert_eq!(k.derivative_t(), bp(&[(2, 2, 1), (-1, 0, 0), (1, 1, 0)]));
    }
}
