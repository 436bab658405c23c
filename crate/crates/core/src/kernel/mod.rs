//! The kernel-method linear system `A c = b` of size `2^L - 1` over
//! `Q(x, t)`, its determinant `-K(x,t)/t`, the root `t1` of `K`, and the
//! closed forms for `c_1`, `c'_1` and the component sums.

mod combinatorial;

pub use combinatorial::{aggregate_f, build_combinatorial_system, recursion_matrix, tuple_index};

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::linalg::{determinant, solve};
use crate::exactnum::{int, BiPoly, BiRatFun, ExactScalar, QuadExtElem, RatFun};
use crate::genfun::phi;
use crate::verify::CaseResult;

/// Right-hand side selector for [`solve_kernel_system`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rhs {
    B,
    BPrime,
    Sum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSystem {
    l: u32,
    a: Vec<Vec<BiRatFun>>,
    b: Vec<BiRatFun>,
    b_prime: Vec<BiRatFun>,
    q: BiRatFun,
    r: BiRatFun,
    u: BiRatFun,
    v: BiRatFun,
}

impl KernelSystem {
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Vec<BiRatFun>] {
        &self.a
    }

    pub fn b(&self) -> &[BiRatFun] {
        &self.b
    }

    pub fn b_prime(&self) -> &[BiRatFun] {
        &self.b_prime
    }

    /// `(q, r, u, v)`.
    pub fn rhs_functions(&self) -> [&BiRatFun; 4] {
        [&self.q, &self.r, &self.u, &self.v]
    }
}

fn x() -> BiRatFun {
    BiRatFun::x()
}

fn t() -> BiRatFun {
    BiRatFun::t()
}

fn xpow(n: u32) -> BiRatFun {
    BiRatFun::from_bipoly(BiPoly::monomial(ExactScalar::one(), n, 0))
}

fn c(v: i64) -> BiRatFun {
    BiRatFun::constant(int(v))
}

/// `B(x, t)` with 0-based storage of the 1-based case rules.
pub fn b_matrix(l: u32) -> Result<Vec<Vec<BiRatFun>>> {
    if l < 2 {
        return Err(Error::UnsupportedL(l));
    }
    let n = (1usize << l) - 1;
    let h = 1usize << (l - 1);
    let mut b = vec![vec![BiRatFun::zero(); n]; n];
    for j in 1..n {
        let row = j.div_ceil(2);
        b[row - 1][j - 1] = x();
        b[row + h - 1][j - 1] = x();
    }
    b[0][n - 1] = &t() * &x();
    b[h - 1][n - 1] = x();
    b[h - 1][0] = x().checked_div(&t())?;
    Ok(b)
}

pub fn build_kernel_system(l: u32, q: BiRatFun, r: BiRatFun, u: BiRatFun, v: BiRatFun) -> Result<KernelSystem> {
    let bm = b_matrix(l)?;
    let n = bm.len();
    let h = 1usize << (l - 1);
    let a = bm
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| if i == j { &BiRatFun::one() - e } else { -e })
                .collect()
        })
        .collect();
    let mut b = vec![r.clone(); n];
    b[0] = q.clone();
    let mut b_prime = vec![BiRatFun::zero(); n];
    b_prime[h - 1] = u.clone();
    b_prime[h] = v.clone();
    Ok(KernelSystem {
        l,
        a,
        b,
        b_prime,
        q,
        r,
        u,
        v,
    })
}

/// `K(x,t) = x^L t^2 + (x + x^2 + ... + x^{2L-1} - 1) t + x^L`.
pub fn kernel_polynomial(l: u32) -> BiPoly {
    let mut k = &BiPoly::monomial(int(1), l, 2) + &BiPoly::monomial(int(1), l, 0);
    k = &k - &BiPoly::t();
    for i in 1..2 * l {
        k = &k + &BiPoly::monomial(int(1), i, 1);
    }
    k
}

fn kernel_ratfun(l: u32) -> BiRatFun {
    BiRatFun::from_bipoly(kernel_polynomial(l))
}

pub fn kernel_determinant(system: &KernelSystem) -> BiRatFun {
    determinant(&system.a)
}

pub fn solve_kernel_system(system: &KernelSystem, rhs: Rhs) -> Result<Vec<BiRatFun>> {
    let vector: Vec<BiRatFun> = match rhs {
        Rhs::B => system.b.clone(),
        Rhs::BPrime => system.b_prime.clone(),
        Rhs::Sum => system.b.iter().zip(&system.b_prime).map(|(p, q)| p + q).collect(),
    };
    solve(&system.a, &vector)
}

fn sum(v: &[BiRatFun]) -> BiRatFun {
    v.iter().fold(BiRatFun::zero(), |acc, e| &acc + e)
}

/// `(1 - x^m)/(1 - x) = 1 + x + ... + x^{m-1}`.
fn geometric(m: u32) -> BiRatFun {
    (0..m).fold(BiRatFun::zero(), |acc, i| &acc + &xpow(i))
}

/// The closed forms for `c_1`, `c'_1`, `sum c_i` and `sum c'_i`, in that order.
pub fn kernel_closed_forms(system: &KernelSystem) -> Result<[BiRatFun; 4]> {
    let l = system.l;
    let [q, r, u, v] = system.rhs_functions();
    let k = kernel_ratfun(l);
    let tt = t();
    let one = BiRatFun::one();

    let mut inner = BiRatFun::zero();
    for i in 1..l {
        inner = &inner + &(&(q - &(&(&tt + &one) * r)) * &xpow(i));
    }
    let c1 = (&(&tt * &geometric(l)) * &inner).checked_div(&k)?;

    // (x - x^L)/(1 - x) = x + ... + x^{L-1}
    let x_to_l = &geometric(l) - &one;
    let bracket = &(u + &(&tt * v)) + &(&(&(&tt * u) + v) * &x_to_l);
    let c1p = -(&(&tt * &xpow(l - 1)) * &bracket).checked_div(&k)?;

    let weights = |i: u32| c((1i64 << (i + 1)) - 1);
    let alpha = &(r * &x()) * &(0..=l - 2).fold(BiRatFun::zero(), |acc, i| &acc + &(&weights(i) * &xpow(i)));
    let mut beta_poly = BiRatFun::zero();
    for i in 0..=l - 2 {
        let w = (i..=l - 2).fold(BiRatFun::zero(), |acc, j| &acc + &weights(j));
        beta_poly = &beta_poly + &(&w * &xpow(i));
    }
    let total_w = (0..=l - 2).fold(BiRatFun::zero(), |acc, j| &acc + &weights(j));
    let mut beta_fn = &(r * &xpow(l)) * &beta_poly;
    for i in 0..l {
        beta_fn = &beta_fn + &(&(q + &(r * &total_w)) * &xpow(l - 1 - i));
    }
    let mut gamma = BiRatFun::zero();
    for i in 1..l {
        let ci = c(i64::from(i));
        let lhs = &(&ci * &(q - r)) * &xpow(2 * l - 1 - i);
        let rhs = &(&(&ci * q) + &(&c((1i64 << i) - i64::from(i) - 1) * r)) * &xpow(i);
        gamma = &gamma + &(&lhs + &rhs);
    }
    let t2 = &tt * &tt;
    let sum_c = -(&(&(&alpha * &t2) + &(&beta_fn * &tt)) + &gamma).checked_div(&k)?;

    let delta = v * &xpow(l - 1);
    let epsilon = &(&(v * &geometric(2 * l - 1)) + &(v * &xpow(l - 1))) + &(u * &geometric(l));
    let zeta = &(v * &xpow(l)) * &geometric(l - 1);
    let sum_cp = -(&(&(&delta * &t2) + &(&epsilon * &tt)) - &zeta).checked_div(&k)?;
    Ok([c1, c1p, sum_c, sum_cp])
}

/// A labelled `(q, r, u, v)` test tuple.
pub type Instantiation = (String, [BiRatFun; 4]);

/// Test tuples for [`verify_kernel_formulas`].
pub fn default_instantiations() -> Vec<Instantiation> {
    let (x, t, one, zero) = (x(), t(), BiRatFun::one(), BiRatFun::zero());
    vec![
        ("(0,0,0,0)".into(), [zero.clone(), zero.clone(), zero.clone(), zero]),
        ("(1,1,1,1)".into(), [one.clone(), one.clone(), one.clone(), one.clone()]),
        ("(1,t,x,t^2)".into(), [one.clone(), t.clone(), x.clone(), &t * &t]),
        ("(x,1+t,t,xt)".into(), [x.clone(), &one + &t, t.clone(), &x * &t]),
    ]
}

/// Compares the solver's `c_1`, `c'_1`, `sum c_i`, `sum c'_i` with their
/// closed forms, one case per formula and instantiation.
pub fn verify_kernel_formulas(l: u32, instantiations: &[Instantiation]) -> Vec<CaseResult> {
    let names = ["c1", "c1'", "sum c", "sum c'"];
    let mut out = Vec::new();
    for (label, [q, r, u, v]) in instantiations {
        let id = |name: &str| format!("formula L={l} {label} {name}");
        let computed = build_kernel_system(l, q.clone(), r.clone(), u.clone(), v.clone()).and_then(|sys| {
            let c = solve_kernel_system(&sys, Rhs::B)?;
            let cp = solve_kernel_system(&sys, Rhs::BPrime)?;
            let forms = kernel_closed_forms(&sys)?;
            Ok((vec![c[0].clone(), cp[0].clone(), sum(&c), sum(&cp)], forms))
        });
        match computed {
            Ok((solved, forms)) => {
                for ((name, s), f) in names.iter().zip(solved).zip(forms) {
                    let diff = &s - &f;
                    out.push(CaseResult::new(
                        id(name),
                        "solver equals closed form",
                        diff.is_zero(),
                        format!("solver - formula = {diff}"),
                    ));
                }
            }
            Err(e) => out.extend(names.iter().map(|n| CaseResult::errored(id(n), "solver equals closed form", &e))),
        }
    }
    out
}

/// Checks `det A = -K/t`.
pub fn verify_determinant(l: u32) -> CaseResult {
    let id = format!("det L={l}");
    let expected = "det A = -K(x,t)/t";
    let zero = BiRatFun::zero();
    match build_kernel_system(l, zero.clone(), zero.clone(), zero.clone(), zero) {
        Ok(sys) => {
            let det = kernel_determinant(&sys);
            let target = -(kernel_ratfun(l).checked_div(&t()).expect("t is nonzero"));
            CaseResult::new(id, expected, det == target, format!("det = {det}"))
        }
        Err(e) => CaseResult::errored(id, expected, &e),
    }
}

/// Evaluates `K(x, t1)` with `t1 = phi + s`, `s^2 = phi^2 - 1`.
pub fn kernel_root_value(l: u32) -> QuadExtElem {
    let p = phi(l);
    let d = &(&p * &p) - &RatFun::one();
    let t1 = QuadExtElem::new(p, RatFun::one(), d);
    QuadExtElem::eval_bipoly_in_t(&kernel_polynomial(l), &t1)
}

pub fn kernel_root_check(l: u32) -> CaseResult {
    let value = kernel_root_value(l);
    CaseResult::new(
        format!("root L={l}"),
        "K(x, t1) = 0",
        value.is_zero(),
        format!("K(x, t1) = {value}"),
    )
}

/// `K(x, t)` at `t = phi`, with no radical part.
pub fn kernel_at_phi(l: u32) -> RatFun {
    let p = phi(l);
    let d = &(&p * &p) - &RatFun::one();
    let value = QuadExtElem::eval_bipoly_in_t(&kernel_polynomial(l), &QuadExtElem::from_rational(p, d));
    value.a().clone()
}

/// Number of nonzero entries of `B`.
pub fn b_nonzero_count(l: u32) -> Result<usize> {
    Ok(b_matrix(l)?.iter().flatten().filter(|e| !e.is_zero()).count())
}
