//! Generating functions: series expansion and reconstruction, the Chebyshev
//! closed form, the assembly through `f_{1,...,1}`, and the `L = 1` formula.

mod closed;
mod series;

use num_bigint::BigUint;
use num_traits::One;

pub use closed::{
    assemble_f_from_f11, beta, closed_form_context, closed_form_gf, closed_form_ratio, l2_chebyshev_display,
    f11_from_t1, l1_chebyshev_gf, phi, short_word_polynomial, ClosedFormContext,
};
pub use series::{ratfun_series, reconstruct_ratfun};

use crate::error::{Error, Result};
use crate::exactnum::{ExactScalar, RatFun};
use crate::staircase::{transfer_series, StaircaseParams};

const REFERENCE_L2: &str = include_str!("../../data/reference_l2.txt");

/// Word counts by length, starting at the empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSample {
    params: StaircaseParams,
    coefficients: Vec<BigUint>,
}

impl SeriesSample {
    pub fn new(params: StaircaseParams, coefficients: Vec<BigUint>) -> Result<Self> {
        let ok0 = coefficients.first().is_none_or(One::is_one);
        let ok1 = coefficients.get(1).is_none_or(|c| *c == BigUint::from(params.k()));
        if !(ok0 && ok1) {
            return Err(Error::InvalidParams("series must start 1, k".into()));
        }
        Ok(SeriesSample { params, coefficients })
    }

    pub fn from_transfer(params: StaircaseParams, terms: usize) -> Result<Self> {
        Self::new(params, transfer_series(params, terms)?)
    }

    pub fn params(&self) -> StaircaseParams {
        self.params
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn to_scalars(&self) -> Vec<ExactScalar> {
        to_scalars(&self.coefficients)
    }

    /// Reconstructs the generating function with the denominator degree
    /// bounded by the automaton dimension, capped by what the sample length
    /// can determine.
    pub fn reconstruct(&self) -> Result<RatFun> {
        let dim = usize::try_from(&self.params.state_count()).unwrap_or(usize::MAX);
        let cap = self.coefficients.len().saturating_sub(2) / 2;
        reconstruct_ratfun(&self.to_scalars(), dim.min(cap))
    }
}

pub fn to_scalars(v: &[BigUint]) -> Vec<ExactScalar> {
    v.iter().map(|c| ExactScalar::from_integer(c.clone().into())).collect()
}

/// The published `L = 2` generating functions, keyed by `k`, normalized.
pub fn reference_l2() -> Vec<(u32, RatFun)> {
    REFERENCE_L2
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(|line| {
            let (k, f) = line.split_once(':').expect("fixture line has a key");
            let k = k.trim().parse().expect("fixture key is an integer");
            (k, RatFun::parse_coeff_lists(f.trim()).expect("fixture entry parses"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Poly;

    #[test]
    fn reference_loads_normalized() {
        let t = reference_l2();
        assert_eq!(t.len(), 5);
        assert_eq!(t[0], (2, RatFun::new(Poly::one(), Poly::from_i64s(&[1, -2])).unwrap()));
        assert_eq!(t[1].1, RatFun::new(Poly::from_i64s(&[1, 1, 1]), Poly::from_i64s(&[1, -2, 0, -1])).unwrap());
        for (_, f) in &t {
            assert!(f.den().coeff(0).is_one());
        }
    }

    #[test]
    fn reference_matches_all_routes() {
        for (k, want) in reference_l2() {
            let params = StaircaseParams::new(k, 2).unwrap();
            assert_eq!(closed_form_gf(params).unwrap(), want, "closed k={k}");
            let sample = SeriesSample::from_transfer(params, 30).unwrap();
            assert_eq!(sample.reconstruct().unwrap(), want, "reconstruct k={k}");
        }
    }

    #[test]
    fn sample_rejects_bad_prefix() {
        let params = StaircaseParams::new(3, 2).unwrap();
        assert!(SeriesSample::new(params, vec![BigUint::from(1u8), BigUint::from(2u8)]).is_err());
    }
}
