use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type ExactScalar = BigRational;

pub fn int(value: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(value))
}

pub fn frac(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` with optional surrounding whitespace.
pub fn parse_scalar(text: &str) -> Result<ExactScalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not an exact fraction: {text:?}"));
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// `p/q`, or just `p` for integers.
pub fn format_scalar(value: &ExactScalar) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_scalar("6/-4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar(" 0/5 ").unwrap(), int(0));
        assert_eq!(format_scalar(&parse_scalar("10/2").unwrap()), "5");
        assert_eq!(format_scalar(&frac(-3, 2)), "-3/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_scalar("1.5").is_err());
        assert_eq!(parse_scalar("1/0"), Err(Error::DivisionByZero));
    }
}
