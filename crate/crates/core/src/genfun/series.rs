use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ExactScalar, Poly, RatFun};

/// First `terms` Taylor coefficients of `f` at the origin.
pub fn ratfun_series(f: &RatFun, terms: usize) -> Result<Vec<ExactScalar>> {
    let den = f.den();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let inv = d0.recip();
    let mut out: Vec<ExactScalar> = Vec::with_capacity(terms);
    for n in 0..terms {
        let mut acc = f.num().coeff(n);
        for i in 1..=n.min(den.coeffs().len().saturating_sub(1)) {
            let di = den.coeff(i);
            if !di.is_zero() {
                acc -= di * &out[n - i];
            }
        }
        out.push(acc * &inv);
    }
    Ok(out)
}

/// Shortest recurrence `sum_{i=0}^{len} c_i s_{n-i} = 0` (with `c_0 = 1`)
/// generating `s`, by Berlekamp-Massey over the rationals.
fn berlekamp_massey(s: &[ExactScalar]) -> (Vec<ExactScalar>, usize) {
    let mut c = vec![ExactScalar::one()];
    let mut b = vec![ExactScalar::one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_disc = ExactScalar::one();
    for n in 0..s.len() {
        let mut disc = s[n].clone();
        for i in 1..=len.min(c.len() - 1) {
            disc += &c[i] * &s[n - i];
        }
        if disc.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &disc / &last_disc;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, ExactScalar::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] -= &factor * bi;
        }
        if 2 * len <= n {
            len = n + 1 - len;
            b = prev;
            last_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    (c, len)
}

/// The lowest-degree rational function whose expansion matches all of
/// `series`, with reduced denominator degree at most `max_den_degree`.
///
/// Needs at least `2 * max_den_degree + 2` terms so that the fit is unique.
pub fn reconstruct_ratfun(series: &[ExactScalar], max_den_degree: usize) -> Result<RatFun> {
    let needed = 2 * max_den_degree + 2;
    if series.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: series.len(),
        });
    }
    let (conn, len) = berlekamp_massey(series);
    if len > max_den_degree + 1 {
        return Err(Error::NoFit(max_den_degree));
    }
    let den = Poly::from_coeffs(conn);
    let prefix = Poly::from_coeffs(series[..len].to_vec());
    let num = (&prefix * &den).truncate(len);
    let f = RatFun::new(num, den)?;
    if f.den().degree().unwrap_or(0) > max_den_degree || f.num().degree().unwrap_or(0) > max_den_degree {
        return Err(Error::NoFit(max_den_degree));
    }
    if ratfun_series(&f, series.len())? != series {
        return Err(Error::NoFit(max_den_degree));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<ExactScalar> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn series_examples() {
        let f = RatFun::new(Poly::one(), Poly::from_i64s(&[1, -2])).unwrap();
        assert_eq!(ratfun_series(&f, 5).unwrap(), ints(&[1, 2, 4, 8, 16]));
        let f = RatFun::new(Poly::from_i64s(&[1, 1, 1]), Poly::from_i64s(&[1, -2, 0, -1])).unwrap();
        assert_eq!(ratfun_series(&f, 6).unwrap(), ints(&[1, 3, 7, 15, 33, 73]));
        let p = RatFun::from_poly(Poly::from_i64s(&[3, 0, -1]));
        assert_eq!(ratfun_series(&p, 5).unwrap(), ints(&[3, 0, -1, 0, 0]));
        let pole = RatFun::new(Poly::one(), Poly::from_i64s(&[0, 1])).unwrap();
        assert_eq!(ratfun_series(&pole, 3), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn reconstruct_examples() {
        let pow2: Vec<ExactScalar> = (0..16).map(|i| int(1 << i)).collect();
        let f = reconstruct_ratfun(&pow2, 7).unwrap();
        assert_eq!(f, RatFun::new(Poly::one(), Poly::from_i64s(&[1, -2])).unwrap());
        let ones = ints(&[1; 8]);
        assert_eq!(
            reconstruct_ratfun(&ones, 3).unwrap(),
            RatFun::new(Poly::one(), Poly::from_i64s(&[1, -1])).unwrap()
        );
        assert_eq!(
            reconstruct_ratfun(&ones, 4),
            Err(Error::InsufficientTerms { needed: 10, got: 8 })
        );
    }

    #[test]
    fn reconstruct_polynomials_and_zero() {
        let s = ints(&[1, 2, 0, 0, 0, 0]);
        assert_eq!(reconstruct_ratfun(&s, 2).unwrap(), RatFun::from_poly(Poly::from_i64s(&[1, 2])));
        let z = ints(&[0; 6]);
        assert!(reconstruct_ratfun(&z, 2).unwrap().is_zero());
    }

    #[test]
    fn reconstruct_rejects_high_complexity() {
        // 1/(1 - x^5) needs a degree-5 denominator
        let s: Vec<ExactScalar> = (0..12).map(|i| int(i64::from(i % 5 == 0))).collect();
        assert_eq!(reconstruct_ratfun(&s, 3), Err(Error::NoFit(3)));
        assert!(reconstruct_ratfun(&s, 5).is_ok());
    }

    fn small_ratfun() -> impl Strategy<Value = RatFun> {
        (
            prop::collection::vec(-5i64..6, 0..4),
            prop::collection::vec(-5i64..6, 0..4),
            1i64..4,
        )
            .prop_map(|(n, d, scale)| {
                let mut den = vec![1];
                den.extend(d);
                let num: Vec<ExactScalar> = n.iter().map(|&c| frac(c, scale)).collect();
                RatFun::new(Poly::from_coeffs(num), Poly::from_i64s(&den)).unwrap()
            })
    }

    proptest! {
        #[test]
        fn reconstruct_inverts_series(f in small_ratfun()) {
            let d = 4;
            let s = ratfun_series(&f, 2 * d + 2).unwrap();
            prop_assert_eq!(reconstruct_ratfun(&s, d).unwrap(), f);
        }
    }
}
