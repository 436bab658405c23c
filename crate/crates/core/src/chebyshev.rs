//! Chebyshev polynomials of both kinds as exact polynomials, and symbolic
//! checks of the product, power and Pell-type identities they satisfy.

use std::sync::RwLock;

use crate::exactnum::{frac, int, Poly, QuadExtElem, RatFun};
use crate::verify::CaseResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    /// `T_n`, seeded by `1, x`.
    First,
    /// `U_n`, seeded by `1, 2x`.
    Second,
}

/// Memoized `p_0, p_1, ...` of one kind, grown on demand under a lock.
///
/// Negative indices extend the recurrence backwards: for the second kind
/// `U_{-1} = 0` and `U_{-n-2} = -U_n`; for the first kind `T_{-n} = T_n`.
#[derive(Debug)]
pub struct ChebyshevTable {
    kind: ChebyshevKind,
    entries: RwLock<Vec<Poly>>,
}

impl ChebyshevTable {
    pub fn new(kind: ChebyshevKind) -> Self {
        let seed = match kind {
            ChebyshevKind::First => Poly::x(),
            ChebyshevKind::Second => Poly::from_i64s(&[0, 2]),
        };
        ChebyshevTable {
            kind,
            entries: RwLock::new(vec![Poly::one(), seed]),
        }
    }

    pub fn first_kind() -> Self {
        Self::new(ChebyshevKind::First)
    }

    pub fn second_kind() -> Self {
        Self::new(ChebyshevKind::Second)
    }

    pub fn kind(&self) -> ChebyshevKind {
        self.kind
    }

    /// Number of entries currently memoized.
    pub fn len(&self) -> usize {
        self.entries.read().expect("table lock").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Precomputes entries up to index `n` inclusive.
    pub fn extend_to(&self, n: usize) {
        if self.len() > n {
            return;
        }
        let mut entries = self.entries.write().expect("table lock");
        let two_x = Poly::from_i64s(&[0, 2]);
        while entries.len() <= n {
            let m = entries.len();
            let next = &(&two_x * &entries[m - 1]) - &entries[m - 2];
            entries.push(next);
        }
    }

    /// Entry at a signed index.
    pub fn get(&self, n: i64) -> Poly {
        if n < 0 {
            return match self.kind {
                ChebyshevKind::Second if n == -1 => Poly::zero(),
                ChebyshevKind::Second => -self.get(-n - 2),
                ChebyshevKind::First => self.get(-n),
            };
        }
        let idx = n as usize;
        self.extend_to(idx);
        self.entries.read().expect("table lock")[idx].clone()
    }
}

/// `U_n` for any signed `n`.
pub fn chebyshev_u(n: i64) -> Poly {
    ChebyshevTable::second_kind().get(n)
}

/// `T_n` for `n >= 0`.
pub fn chebyshev_t(n: u32) -> Poly {
    ChebyshevTable::first_kind().get(n.into())
}

fn compare(id: String, expected: &str, lhs: &Poly, rhs: &Poly) -> CaseResult {
    let diff = lhs - rhs;
    CaseResult::new(id, expected, diff.is_zero(), format!("lhs - rhs = {diff}"))
}

/// `2(1 - x^2) U_m U_n = U_{m-n} - x U_{m-n-1} - U_{m+n+2} + x U_{m+n+1}`,
/// compared with the denominator cleared.
pub fn verify_identity_i3(m: u32, n: u32) -> CaseResult {
    let u = ChebyshevTable::second_kind();
    let (m, n) = (i64::from(m), i64::from(n));
    let x = Poly::x();
    let lhs = &(&Poly::from_i64s(&[2, 0, -2]) * &u.get(m)) * &u.get(n);
    let rhs = &(&(&u.get(m - n) - &(&x * &u.get(m - n - 1))) - &u.get(m + n + 2)) + &(&x * &u.get(m + n + 1));
    compare(
        format!("i3(m={m}, n={n})"),
        "2(1-x^2) U_m U_n = U_{m-n} - x U_{m-n-1} - U_{m+n+2} + x U_{m+n+1}",
        &lhs,
        &rhs,
    )
}

/// `(x + sqrt(x^2-1))^n = (U_n - U_{n-2})/2 + U_{n-1} sqrt(x^2-1)`,
/// computed in `Q(x)[s]/(s^2 - (x^2 - 1))`.
pub fn verify_identity_i1(n: u32) -> CaseResult {
    let u = ChebyshevTable::second_kind();
    let n_signed = i64::from(n);
    let d = RatFun::from_poly(Poly::from_i64s(&[-1, 0, 1]));
    let power = QuadExtElem::new(RatFun::x(), RatFun::one(), d).pow(n.into());
    let rational = (&u.get(n_signed) - &u.get(n_signed - 2)).scale(&frac(1, 2));
    let radical = u.get(n_signed - 1);
    let ok_a = power.a() == &RatFun::from_poly(rational.clone());
    let ok_b = power.b() == &RatFun::from_poly(radical.clone());
    CaseResult::new(
        format!("i1(n={n})"),
        "(x + s)^n = (U_n - U_{n-2})/2 + U_{n-1} s, s^2 = x^2 - 1",
        ok_a && ok_b,
        format!(
            "power = {power}; expected ({rational}) + ({radical})*s"
        ),
    )
}

/// `U_n^2 = 1 + U_{n-1} U_{n+1}`.
pub fn verify_identity_i5(n: u32) -> CaseResult {
    let u = ChebyshevTable::second_kind();
    let n = i64::from(n);
    let lhs = &u.get(n) * &u.get(n);
    let rhs = &Poly::one() + &(&u.get(n - 1) * &u.get(n + 1));
    compare(format!("i5(n={n})"), "U_n^2 = 1 + U_{n-1} U_{n+1}", &lhs, &rhs)
}

/// `U_{k-1}^2 - 2x U_{k-1} U_k + U_k^2 = 1`.
pub fn verify_pell_identity(k: u32) -> CaseResult {
    let u = ChebyshevTable::second_kind();
    let k = i64::from(k);
    let (a, b) = (u.get(k - 1), u.get(k));
    let two_x = Poly::from_i64s(&[0, 2]);
    let lhs = &(&(&a * &a) - &(&(&two_x * &a) * &b)) + &(&b * &b);
    compare(
        format!("pell(k={k})"),
        "U_{k-1}^2 - 2x U_{k-1} U_k + U_k^2 = 1",
        &lhs,
        &Poly::one(),
    )
}

/// `T_n = (U_n - U_{n-2}) / 2`.
pub fn verify_t_from_u(n: u32) -> CaseResult {
    let u = ChebyshevTable::second_kind();
    let n_signed = i64::from(n);
    let rhs = (&u.get(n_signed) - &u.get(n_signed - 2)).scale(&frac(1, 2));
    compare(format!("t-from-u(n={n})"), "T_n = (U_n - U_{n-2})/2", &chebyshev_t(n), &rhs)
}

/// `U_n(1) = n + 1`.
pub fn u_at_one_matches(n: u32) -> bool {
    chebyshev_u(n.into()).eval(&int(1)) == int(i64::from(n) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn seeds_and_recurrence() {
        assert_eq!(chebyshev_u(0), Poly::one());
        assert_eq!(chebyshev_u(1), Poly::from_i64s(&[0, 2]));
        assert_eq!(chebyshev_u(-1), Poly::zero());
        assert_eq!(chebyshev_u(3), Poly::from_i64s(&[0, -4, 0, 8]));
        assert_eq!(chebyshev_u(-3), -Poly::from_i64s(&[0, 2]));
        assert_eq!(chebyshev_t(0), Poly::one());
        assert_eq!(chebyshev_t(1), Poly::x());
        assert_eq!(chebyshev_t(2), Poly::from_i64s(&[-1, 0, 2]));
    }

    #[test]
    fn negative_indices_satisfy_recurrence_backwards() {
        let u = ChebyshevTable::second_kind();
        let two_x = Poly::from_i64s(&[0, 2]);
        for n in -8i64..8 {
            assert_eq!(u.get(n + 1), &(&two_x * &u.get(n)) - &u.get(n - 1), "n = {n}");
        }
    }

    #[test]
    fn value_at_one() {
        for n in 0..=25 {
            assert!(u_at_one_matches(n));
        }
    }

    #[test]
    fn small_identity_instances() {
        assert!(verify_identity_i3(0, 0).passed);
        assert!(verify_identity_i3(1, 0).passed);
        assert!(verify_identity_i3(5, 3).passed);
        assert!(verify_identity_i3(2, 7).passed);
        for n in [0, 1, 6] {
            assert!(verify_identity_i1(n).passed);
        }
        for n in [0, 1, 12] {
            assert!(verify_identity_i5(n).passed);
        }
        for k in [1, 2, 15] {
            assert!(verify_pell_identity(k).passed);
        }
    }

    #[test]
    fn concurrent_lookup() {
        let table = Arc::new(ChebyshevTable::second_kind());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let table = Arc::clone(&table);
                std::thread::spawn(move || table.get(10 + 5 * i))
            })
            .collect();
        let results: Vec<Poly> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, p) in results.iter().enumerate() {
            assert_eq!(p, &chebyshev_u(10 + 5 * i as i64));
        }
    }
}
