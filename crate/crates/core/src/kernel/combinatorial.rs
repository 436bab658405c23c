use super::{build_kernel_system, solve_kernel_system, sum, t, x, xpow, KernelSystem, Rhs};
use crate::error::{Error, Result};
use crate::exactnum::{int, BiPoly, BiRatFun, ExactScalar, RatFun};
use crate::genfun::{f11_from_t1, short_word_polynomial};
use crate::staircase::StaircaseParams;

/// 1-based position of `F_{o_1,...,o_L}`: `1 + sum o_i 2^{i-1}`.
pub fn tuple_index(o: &[u8]) -> usize {
    1 + o.iter().enumerate().map(|(i, &b)| usize::from(b) << i).sum::<usize>()
}

fn tuple_of(index: usize, l: u32) -> Vec<u8> {
    (0..l).map(|i| (((index - 1) >> i) & 1) as u8).collect()
}

/// The coefficient matrix read off the suffix recursions, one equation per
/// class `F_o`.
///
/// The row for the constant class sums `f_{a,...,a} = x^L + x sum_{o in
/// {-1,0,1}} f_{a+o,a,...,a}` over `a`. Every other row prepends a letter
/// `a` or `a+1` to the shifted offsets; the all-ones offset is the constant
/// class shifted by one, which contributes `x/t` to column 1.
pub fn recursion_matrix(l: u32) -> Result<Vec<Vec<BiRatFun>>> {
    if l < 2 {
        return Err(Error::UnsupportedL(l));
    }
    let n = (1usize << l) - 1;
    let mut m = vec![vec![BiRatFun::zero(); n]; n];
    let zeros = vec![0u8; l as usize];
    let mut up = vec![1u8; l as usize];
    up[0] = 0;
    m[0][0] = x();
    m[0][tuple_index(&{
        let mut o = zeros.clone();
        o[0] = 1;
        o
    }) - 1] = x();
    m[0][tuple_index(&up) - 1] = &t() * &x();
    for row in 2..=n {
        let o = tuple_of(row, l);
        for first in 0..=1u8 {
            let mut pred = vec![first];
            pred.extend_from_slice(&o[..l as usize - 1]);
            let (col, coef) = if pred.iter().all(|&b| b == 1) {
                (1, x().checked_div(&t())?)
            } else {
                (tuple_index(&pred), x())
            };
            m[row - 1][col - 1] = &m[row - 1][col - 1] + &coef;
        }
    }
    Ok(m)
}

fn geometric_t(m: u32) -> BiRatFun {
    let terms = (0..m).fold(BiPoly::zero(), |acc, i| &acc + &BiPoly::monomial(int(1), 0, i));
    BiRatFun::from_bipoly(terms)
}

/// The system for the offset classes with `q = x^L (1-t^k)/(1-t)`,
/// `r = x^L (1-t^{k-1})/(1-t)`, `u = -x f11 / t` and `v = -x t^{k-1} f11`.
pub fn build_combinatorial_system(params: StaircaseParams) -> Result<KernelSystem> {
    let l = params.l();
    if l < 2 {
        return Err(Error::UnsupportedL(l));
    }
    let k = params.k();
    let xl = xpow(l);
    let q = &xl * &geometric_t(k);
    let r = &xl * &geometric_t(k - 1);
    let f11 = BiRatFun::from_ratfun_x(&f11_from_t1(params)?);
    let xf = &x() * &f11;
    let u = -(xf.checked_div(&t())?);
    let v = -(&xf * &t().pow(k - 1));
    build_kernel_system(l, q, r, u, v)
}

/// Value at `t = 1`, by substitution or, when both parts vanish there, by
/// one derivative step.
fn limit_t_to_one(f: &BiRatFun) -> Result<RatFun> {
    if let Some(v) = f.eval_t(&int(1)) {
        return Ok(v);
    }
    let one: ExactScalar = int(1);
    let num = f.num().derivative_t().eval_t(&one);
    let den = f.den().derivative_t().eval_t(&one);
    if den.is_zero() || !f.num().eval_t(&one).is_zero() {
        return Err(Error::LimitDoesNotCancel);
    }
    RatFun::new(num, den)
}

/// `f(x)` from the solved system: the short-word polynomial plus the limit
/// `t -> 1` of the summed solution components.
pub fn aggregate_f(system: &KernelSystem, params: StaircaseParams) -> Result<RatFun> {
    let c = solve_kernel_system(system, Rhs::Sum)?;
    let total = limit_t_to_one(&sum(&c))?;
    Ok(&short_word_polynomial(params) + &total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::closed_form_gf;
    use crate::kernel::b_matrix;

    fn p(k: u32, l: u32) -> StaircaseParams {
        StaircaseParams::new(k, l).unwrap()
    }

    #[test]
    fn index_map() {
        assert_eq!(tuple_index(&[0, 0]), 1);
        assert_eq!(tuple_index(&[1, 0]), 2);
        assert_eq!(tuple_index(&[0, 1]), 3);
        assert_eq!(tuple_index(&[1, 1, 0]), 4);
        assert_eq!(tuple_index(&[0, 0, 1]), 5);
        assert_eq!(tuple_index(&[0, 1, 1]), 7);
        for i in 1..8 {
            assert_eq!(tuple_index(&tuple_of(i, 3)), i);
        }
    }

    #[test]
    fn recursion_matches_case_rules() {
        for l in 2..=4 {
            assert_eq!(recursion_matrix(l).unwrap(), b_matrix(l).unwrap(), "L={l}");
        }
    }

    #[test]
    fn first_row_l2_k3() {
        let sys = build_combinatorial_system(p(3, 2)).unwrap();
        let q = BiRatFun::from_bipoly(
            &(&BiPoly::monomial(int(1), 2, 0) + &BiPoly::monomial(int(1), 2, 1)) + &BiPoly::monomial(int(1), 2, 2),
        );
        assert_eq!(sys.b()[0], q);
        let row: Vec<_> = sys.a()[0].iter().map(|e| -e).collect();
        assert_eq!(row[1], x());
        assert_eq!(row[2], &t() * &x());
        assert_eq!(&BiRatFun::one() - &sys.a()[0][0], x());
    }

    #[test]
    fn aggregate_matches_closed_form() {
        for (k, l) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
            let params = p(k, l);
            let sys = build_combinatorial_system(params).unwrap();
            assert_eq!(aggregate_f(&sys, params).unwrap(), closed_form_gf(params).unwrap(), "k={k} L={l}");
        }
    }

    #[test]
    fn l1_rejected() {
        assert_eq!(build_combinatorial_system(p(3, 1)).unwrap_err(), Error::UnsupportedL(1));
    }
}
