use num_bigint::BigInt;
use num_traits::One;

use crate::chebyshev::chebyshev_u;
use crate::error::{Error, Result};
use crate::exactnum::{int, ExactScalar, Poly, QuadExtElem, RatFun};
use crate::staircase::StaircaseParams;

fn xpow(n: u32) -> RatFun {
    RatFun::from_poly(Poly::monomial(ExactScalar::one(), n as usize))
}

fn c(v: i64) -> RatFun {
    RatFun::constant(int(v))
}

fn big(v: BigInt) -> RatFun {
    RatFun::constant(ExactScalar::from_integer(v))
}

fn div(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    a.checked_div(b)
}

/// `phi`, `beta` and `r1..r5` for fixed parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormContext {
    pub params: StaircaseParams,
    pub phi: RatFun,
    pub beta: RatFun,
    pub r: [RatFun; 5],
}

/// `phi = (1 - (x^{2L} - x)/(x - 1)) / (2 x^L)`.
pub fn phi(l: u32) -> RatFun {
    let x = RatFun::x();
    let inner = div(&(&xpow(2 * l) - &x), &(&x - &c(1))).expect("x - 1 is nonzero");
    div(&(&c(1) - &inner), &(&c(2) * &xpow(l))).expect("x^L is nonzero")
}

/// `beta = (1 - x^L)/(1 - x)`.
pub fn beta(l: u32) -> RatFun {
    div(&(&c(1) - &xpow(l)), &(&c(1) - &RatFun::x())).expect("1 - x is nonzero")
}

pub fn closed_form_context(params: StaircaseParams) -> ClosedFormContext {
    let l = params.l();
    let p = phi(l);
    let b = beta(l);
    let p2 = &p * &p;
    let b2 = &b * &b;
    let r1 = &(&(&(&(&c(4) * &p2) + &(&c(2) * &p)) - &c(1)) * &b2)
        - &(&(&c(4) * &(&(&c(2) * &p2) - &c(1))) * &b);
    let r1 = &(&r1 + &(&c(4) * &p2)) - &(&c(2) * &(&p + &c(1)));
    let r2 = &(&(-(&(&c(1) + &(&c(2) * &p)) * &b2)) + &(&(&c(4) * &b) * &p)) - &(&c(2) * &(&p - &c(1)));
    let r3 = &(-(&(&c(2) * &(&p - &c(1))) * &(&b - &c(1)))) - &b2;
    let r4 = &(&(&(&(&c(2) * &p2) - &c(1)) * &b2)
        - &(&(&c(2) * &(&(&(&c(2) * &p2) - &p) - &c(1))) * &b))
        + &(&(&c(2) * &p) * &(&p - &c(1)));
    let r5 = &(&(&c(2) * &(&p - &c(1))) * &(&b - &c(1))) - &(&b2 * &p);
    ClosedFormContext {
        params,
        phi: p,
        beta: b,
        r: [r1, r2, r3, r4, r5],
    }
}

/// `(r1 U_{k-1}(phi) + r2 U_k(phi) + r3) / (r4 U_{k-1}(phi) + r5 U_k(phi) + r3)`.
pub fn closed_form_ratio(ctx: &ClosedFormContext) -> Result<RatFun> {
    let k = i64::from(ctx.params.k());
    let u_prev = RatFun::compose(&chebyshev_u(k - 1), &ctx.phi);
    let u_k = RatFun::compose(&chebyshev_u(k), &ctx.phi);
    let [r1, r2, r3, r4, r5] = &ctx.r;
    let num = &(&(r1 * &u_prev) + &(r2 * &u_k)) + r3;
    let den = &(&(r4 * &u_prev) + &(r5 * &u_k)) + r3;
    if den.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    div(&num, &den)
}

/// The Chebyshev closed form
/// `f = beta/(1 - 2x - x^L) * (1 + (k-3)x + x * ratio)`.
pub fn closed_form_gf(params: StaircaseParams) -> Result<RatFun> {
    let ctx = closed_form_context(params);
    let ratio = closed_form_ratio(&ctx)?;
    let x = RatFun::x();
    let k = i64::from(params.k());
    let inner = &(&c(1) + &(&c(k - 3) * &x)) + &(&x * &ratio);
    let den = &(&c(1) - &(&c(2) * &x)) - &xpow(params.l());
    Ok(&div(&ctx.beta, &den)? * &inner)
}

/// The `L = 1` generating function
/// `1 + kx/(1-3x) - 2x^2/(1-3x)^2 * (U_k(phi) - U_{k-1}(phi) - 1)/U_k(phi)`
/// with `phi = (1-x)/(2x)`.
pub fn l1_chebyshev_gf(k: u32) -> Result<RatFun> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k must be at least 2, got {k}")));
    }
    let p = phi(1);
    let k = i64::from(k);
    let u_prev = RatFun::compose(&chebyshev_u(k - 1), &p);
    let u_k = RatFun::compose(&chebyshev_u(k), &p);
    let x = RatFun::x();
    let one_minus_3x = &c(1) - &(&c(3) * &x);
    let lin = div(&(&c(k) * &x), &one_minus_3x)?;
    let quad = div(&(&c(2) * &(&x * &x)), &(&one_minus_3x * &one_minus_3x))?;
    let frac = div(&(&(&u_k - &u_prev) - &c(1)), &u_k)?;
    Ok(&(&c(1) + &lin) - &(&quad * &frac))
}

/// `f_{1,...,1}` from the kernel root `t1 = phi + sqrt(phi^2 - 1)`:
///
/// `-((t1-1+beta) t1^k - t1 (t1 beta - t1 + 1)) beta
///   / (((t1-1+beta) t1^k + t1 beta - t1 + 1)(1 - t1))`.
///
/// The computation stays in `Q(x)[s]/(s^2 - phi^2 + 1)`; the result must have
/// zero radical part.
pub fn f11_from_t1(params: StaircaseParams) -> Result<RatFun> {
    let l = params.l();
    let p = phi(l);
    let b = beta(l);
    let d = &(&p * &p) - &c(1);
    let t1 = QuadExtElem::new(p, RatFun::one(), d.clone());
    let one = RatFun::one();
    let t1_k = t1.pow(u64::from(params.k()));
    let lead = t1.add_rational(&(&b - &one)).mul(&t1_k)?;
    let tail = t1.mul_rational(&(&b - &one)).add_rational(&one);
    let num = lead.sub(&t1.mul(&tail)?)?.mul_rational(&b).neg();
    let one_minus_t1 = t1.neg().add_rational(&one);
    let den = lead.add(&tail)?.mul(&one_minus_t1)?;
    let q = num.div(&den)?;
    if !q.b().is_zero() {
        return Err(Error::NonzeroRadicalPart);
    }
    Ok(q.a().clone())
}

/// The `L = 2` Chebyshev display
/// `((2x^4+2x^3-2) U_{k-1} + 2x^3 U_k + 2x) / ((x^4+2x^3-1) U_{k-1} + (x^3+x^2-x+1) U_k + 2x)`
/// at `phi = -(x^3+x^2+x-1)/(2x^2)`.
pub fn l2_chebyshev_display(k: u32) -> Result<RatFun> {
    let p = phi(2);
    let k = i64::from(k);
    let u_prev = RatFun::compose(&chebyshev_u(k - 1), &p);
    let u_k = RatFun::compose(&chebyshev_u(k), &p);
    let poly = |v: &[i64]| RatFun::from_poly(Poly::from_i64s(v));
    let two_x = poly(&[0, 2]);
    let num = &(&(&poly(&[-2, 0, 0, 2, 2]) * &u_prev) + &(&poly(&[0, 0, 0, 2]) * &u_k)) + &two_x;
    let den = &(&(&poly(&[-1, 0, 0, 2, 1]) * &u_prev) + &(&poly(&[1, -1, 1, 1]) * &u_k)) + &two_x;
    if den.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    div(&num, &den)
}

/// `sum_{i<L} (k + (k-1)(2^i - 2)) x^i`, the counts of words shorter than `L`.
pub fn short_word_polynomial(params: StaircaseParams) -> RatFun {
    let coeffs = (0..params.l())
        .map(|i| ExactScalar::from_integer(params.short_word_count(i).into()))
        .collect();
    RatFun::from_poly(Poly::from_coeffs(coeffs))
}

/// `f` from `f_{1,...,1}`:
///
/// `sum_{i<L} (k+(k-1)(2^i-2)) x^i + (2x f11 + (2^L-2-(2^L-1)k) x^L
///   + sum_{i=1}^{L-1} (2^i-2-(2^i-1)k) x^{i+L}) / (x^L + 2x - 1)`.
pub fn assemble_f_from_f11(params: StaircaseParams, f11: &RatFun) -> Result<RatFun> {
    let l = params.l();
    let k = BigInt::from(params.k());
    let coef = |i: u32| {
        let p = BigInt::one() << i;
        &p - 2 - (&p - 1) * &k
    };
    let x = RatFun::x();
    let mut num = &(&(&c(2) * &x) * f11) + &(&big(coef(l)) * &xpow(l));
    for i in 1..l {
        num = &num + &(&big(coef(i)) * &xpow(i + l));
    }
    let den = &(&xpow(l) + &(&c(2) * &x)) - &c(1);
    Ok(&short_word_polynomial(params) + &div(&num, &den)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::ratfun_series;
    use crate::staircase::{brute_force_series, suffix_class_series, SuffixState};

    fn p(k: u32, l: u32) -> StaircaseParams {
        StaircaseParams::new(k, l).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(Poly::from_i64s(num), Poly::from_i64s(den)).unwrap()
    }

    #[test]
    fn context_values() {
        let ctx = closed_form_context(p(3, 2));
        assert_eq!(ctx.phi, rf(&[1, -1, -1, -1], &[0, 0, 2]));
        assert_eq!(ctx.beta, rf(&[1, 1], &[1]));
        let ctx = closed_form_context(p(4, 1));
        assert_eq!(ctx.phi, rf(&[1, -1], &[0, 2]));
        assert!(ctx.beta.is_one());
        let [r1, r2, r3, r4, r5] = ctx.r;
        assert!(r1.is_one() && r2.is_one() && r4.is_one());
        assert_eq!(r3, c(-1));
        assert_eq!(r5, -ctx.phi);
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(closed_form_gf(p(2, 2)).unwrap(), rf(&[1], &[1, -2]));
        assert_eq!(closed_form_gf(p(3, 2)).unwrap(), rf(&[1, 1, 1], &[1, -2, 0, -1]));
        assert_eq!(closed_form_gf(p(2, 1)).unwrap(), rf(&[1], &[1, -2]));
    }

    #[test]
    fn closed_form_matches_brute_force() {
        for l in 1..=3 {
            for k in 2..=4 {
                let f = closed_form_gf(p(k, l)).unwrap();
                let brute = brute_force_series(p(k, l), 9).unwrap();
                let want: Vec<ExactScalar> = brute.into_iter().map(|b| ExactScalar::from_integer(b.into())).collect();
                assert_eq!(ratfun_series(&f, 9).unwrap(), want, "k={k} L={l}");
            }
        }
    }

    #[test]
    fn l1_formula_cases() {
        assert_eq!(l1_chebyshev_gf(2).unwrap(), rf(&[1], &[1, -2]));
        let s = ratfun_series(&l1_chebyshev_gf(3).unwrap(), 6).unwrap();
        assert_eq!(s, [1, 3, 7, 17, 41, 99].map(int));
        assert_eq!(l1_chebyshev_gf(4).unwrap(), closed_form_gf(p(4, 1)).unwrap());
        assert!(l1_chebyshev_gf(1).is_err());
    }

    #[test]
    fn f11_small_cases() {
        assert_eq!(f11_from_t1(p(2, 2)).unwrap(), rf(&[0, 0, 1], &[1, -2]));
        assert_eq!(f11_from_t1(p(3, 2)).unwrap(), rf(&[0, 0, 1], &[1, -2, 0, -1]));
        assert_eq!(f11_from_t1(p(2, 1)).unwrap(), rf(&[0, 1], &[1, -2]));
    }

    #[test]
    fn f11_matches_suffix_counts() {
        for l in 1..=3 {
            for k in 2..=4 {
                let params = p(k, l);
                let ones = SuffixState::new(vec![1; l as usize], params).unwrap();
                let counts = suffix_class_series(params, &ones, 12).unwrap();
                let want: Vec<ExactScalar> = counts.into_iter().map(|b| ExactScalar::from_integer(b.into())).collect();
                let f11 = f11_from_t1(params).unwrap();
                assert_eq!(ratfun_series(&f11, 12).unwrap(), want, "k={k} L={l}");
            }
        }
    }

    #[test]
    fn assembled_equals_closed_form() {
        for l in 1..=3 {
            for k in 2..=5 {
                let params = p(k, l);
                let f11 = f11_from_t1(params).unwrap();
                assert_eq!(assemble_f_from_f11(params, &f11).unwrap(), closed_form_gf(params).unwrap());
            }
        }
    }

    #[test]
    fn l2_display_equals_ratio() {
        // the L = 2 display coincides with the bracketed ratio of the closed form
        for k in 2..=5 {
            let ctx = closed_form_context(p(k, 2));
            assert_eq!(l2_chebyshev_display(k).unwrap(), closed_form_ratio(&ctx).unwrap());
        }
    }
}
