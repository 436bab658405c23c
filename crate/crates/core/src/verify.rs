//! Verification reports and the named suites run by `verify`.

use std::fmt;

use crate::error::Result;
use crate::exactnum::{ExactScalar, RatFun};
use crate::staircase::{self, StaircaseParams, SuffixState};
use crate::{chebyshev, genfun, kernel};

/// One checked instance: an identity at given indices, a formula for given
/// parameters, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub id: String,
    pub expected: String,
    pub passed: bool,
    /// Evidence for the outcome, e.g. the nonzero difference on failure.
    pub witness: String,
}

impl CaseResult {
    pub fn new(id: impl Into<String>, expected: impl Into<String>, passed: bool, witness: impl Into<String>) -> Self {
        CaseResult {
            id: id.into(),
            expected: expected.into(),
            passed,
            witness: witness.into(),
        }
    }

    /// A case whose computation raised an error; always a failure.
    pub fn errored(id: impl Into<String>, expected: impl Into<String>, err: &crate::Error) -> Self {
        Self::new(id, expected, false, format!("error: {err}"))
    }
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.id, self.expected)?;
        if !self.passed {
            write!(f, " ({})", self.witness)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases: Vec::new(),
        }
    }

    pub fn push(&mut self, case: CaseResult) {
        self.cases.push(case);
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = CaseResult>) {
        self.cases.extend(cases);
    }

    pub fn passed_count(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn failed_count(&self) -> usize {
        self.cases.len() - self.passed_count()
    }

    /// Pass iff every case passed.
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

/// A deferred unit of verification work; jobs are independent and may run
/// in any order or in parallel.
pub type Job = Box<dyn Fn() -> Vec<CaseResult> + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Reference,
    ClosedForm,
    Kernel,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Reference => "table1",
            Suite::ClosedForm => "closed-form",
            Suite::Kernel => "kernel",
            Suite::All => "all",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        [Suite::Identities, Suite::Reference, Suite::ClosedForm, Suite::Kernel, Suite::All]
            .into_iter()
            .find(|s| s.name() == name)
    }
}

fn job(f: impl Fn() -> Vec<CaseResult> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn one(f: impl Fn() -> CaseResult + Send + Sync + 'static) -> Job {
    Box::new(move || vec![f()])
}

fn params(k: u32, l: u32) -> StaircaseParams {
    StaircaseParams::new(k, l).expect("suite parameters are valid")
}

fn equal_ratfun(id: String, expected: &str, lhs: Result<RatFun>, rhs: Result<RatFun>) -> CaseResult {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => {
            let ok = a == b;
            CaseResult::new(id, expected, ok, format!("{} vs {}", a.to_coeff_lists(), b.to_coeff_lists()))
        }
        (Err(e), _) | (_, Err(e)) => CaseResult::errored(id, expected, &e),
    }
}

fn identity_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for m in 0..=15 {
        for n in 0..=15 {
            jobs.push(one(move || chebyshev::verify_identity_i3(m, n)));
        }
    }
    jobs.extend((0..=20).map(|n| one(move || chebyshev::verify_identity_i1(n))));
    jobs.extend((0..=15).map(|n| one(move || chebyshev::verify_identity_i5(n))));
    jobs.extend((1..=20).map(|k| one(move || chebyshev::verify_pell_identity(k))));
    jobs.extend((0..=15).map(|n| one(move || chebyshev::verify_t_from_u(n))));
    jobs
}

fn reference_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for (k, want) in genfun::reference_l2() {
        let p = params(k, 2);
        let w = want.clone();
        jobs.push(one(move || {
            equal_ratfun(format!("reference k={k} closed"), "closed form equals the table", genfun::closed_form_gf(p), Ok(w.clone()))
        }));
        let w = want.clone();
        jobs.push(one(move || {
            let fit = genfun::SeriesSample::from_transfer(p, 30).and_then(|s| s.reconstruct());
            equal_ratfun(format!("reference k={k} reconstruct"), "reconstruction from 30 counts equals the table", fit, Ok(w.clone()))
        }));
        let w = want.clone();
        jobs.push(one(move || {
            let f = genfun::f11_from_t1(p).and_then(|f11| genfun::assemble_f_from_f11(p, &f11));
            equal_ratfun(format!("reference k={k} assembled"), "assembly through f11 equals the table", f, Ok(w.clone()))
        }));
        if k <= 4 {
            let w = want;
            jobs.push(one(move || {
                let f = kernel::build_combinatorial_system(p).and_then(|s| kernel::aggregate_f(&s, p));
                equal_ratfun(format!("reference k={k} kernel"), "kernel aggregate equals the table", f, Ok(w.clone()))
            }));
        }
    }
    jobs
}

fn closed_form_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for l in 1..=3 {
        for k in 2..=6 {
            let p = params(k, l);
            jobs.push(one(move || {
                let id = format!("series k={k} L={l}");
                let expected = "closed-form series equals transfer counts (16 terms)";
                let counts = staircase::transfer_series(p, 16).map(|c| genfun::to_scalars(&c));
                let series = genfun::closed_form_gf(p).and_then(|f| genfun::ratfun_series(&f, 16));
                match (series, counts) {
                    (Ok(s), Ok(c)) => CaseResult::new(id, expected, s == c, format!("series {}", join(&s))),
                    (Err(e), _) | (_, Err(e)) => CaseResult::errored(id, expected, &e),
                }
            }));
            jobs.push(one(move || {
                let f = genfun::f11_from_t1(p).and_then(|f11| genfun::assemble_f_from_f11(p, &f11));
                equal_ratfun(format!("assembled k={k} L={l}"), "assembly through f11 equals closed form", f, genfun::closed_form_gf(p))
            }));
        }
    }
    for k in 2..=6 {
        jobs.push(one(move || {
            equal_ratfun(
                format!("l1 formula k={k}"),
                "L=1 formula equals closed form at L=1",
                genfun::l1_chebyshev_gf(k),
                genfun::closed_form_gf(params(k, 1)),
            )
        }));
    }
    for l in 1..=3 {
        for k in 2..=5 {
            let p = params(k, l);
            jobs.push(one(move || {
                equal_ratfun(format!("f11 k={k} L={l}"), "f11 from t1 equals reconstruction of all-ones suffix counts", genfun::f11_from_t1(p), f11_reconstruction(p))
            }));
        }
    }
    for k in 2..=5 {
        jobs.push(one(move || {
            equal_ratfun(
                format!("L=2 display k={k}"),
                "f11 from t1 equals the L=2 Chebyshev display",
                genfun::f11_from_t1(params(k, 2)),
                genfun::l2_chebyshev_display(k),
            )
        }));
    }
    jobs
}

/// `f_{1,...,1}` reconstructed from suffix-class counts.
pub fn f11_reconstruction(p: StaircaseParams) -> Result<RatFun> {
    let ones = SuffixState::new(vec![1; p.l() as usize], p)?;
    let terms = 40;
    let counts = staircase::suffix_class_series(p, &ones, terms)?;
    let dim = usize::try_from(&p.state_count()).unwrap_or(usize::MAX);
    genfun::reconstruct_ratfun(&genfun::to_scalars(&counts), dim.min((terms - 2) / 2))
}

fn kernel_jobs(ls: &[u32]) -> Vec<Job> {
    let mut jobs = Vec::new();
    for &l in ls {
        jobs.push(one(move || kernel::verify_determinant(l)));
        jobs.push(one(move || kernel::kernel_root_check(l)));
        jobs.push(one(move || {
            let id = format!("structure L={l}");
            let expected = "B equals the matrix read off the suffix recursions";
            match (kernel::recursion_matrix(l), kernel::b_matrix(l)) {
                (Ok(a), Ok(b)) => CaseResult::new(id, expected, a == b, "entrywise comparison"),
                (Err(e), _) | (_, Err(e)) => CaseResult::errored(id, expected, &e),
            }
        }));
        for inst in kernel::default_instantiations() {
            jobs.push(job(move || kernel::verify_kernel_formulas(l, std::slice::from_ref(&inst))));
        }
        for k in 2..=4 {
            let p = match StaircaseParams::new(k, l) {
                Ok(p) => p,
                Err(_) => continue,
            };
            jobs.push(one(move || {
                let f = kernel::build_combinatorial_system(p).and_then(|s| kernel::aggregate_f(&s, p));
                equal_ratfun(format!("aggregate k={k} L={l}"), "kernel aggregate equals closed form", f, genfun::closed_form_gf(p))
            }));
        }
    }
    jobs
}

/// The independent jobs of a suite, in report order. `kernel_ls` selects
/// the `L` values for kernel checks.
pub fn suite_jobs(suite: Suite, kernel_ls: &[u32]) -> Vec<Job> {
    match suite {
        Suite::Identities => identity_jobs(),
        Suite::Reference => reference_jobs(),
        Suite::ClosedForm => closed_form_jobs(),
        Suite::Kernel => kernel_jobs(kernel_ls),
        Suite::All => {
            let mut jobs = identity_jobs();
            jobs.extend(reference_jobs());
            jobs.extend(closed_form_jobs());
            jobs.extend(kernel_jobs(kernel_ls));
            jobs
        }
    }
}

/// Runs a suite sequentially.
pub fn run_suite(suite: Suite, kernel_ls: &[u32]) -> VerificationReport {
    let mut report = VerificationReport::new(suite.name());
    for j in suite_jobs(suite, kernel_ls) {
        report.extend(j());
    }
    report
}

fn join(v: &[ExactScalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_all_pass() {
        let r = run_suite(Suite::Identities, &[]);
        assert_eq!(r.cases.len(), 256 + 21 + 16 + 20 + 16);
        assert!(r.passed());
    }

    #[test]
    fn reference_suite_passes() {
        assert!(run_suite(Suite::Reference, &[]).passed());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Identities, Suite::Reference, Suite::ClosedForm, Suite::Kernel, Suite::All] {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn report_counts() {
        let mut r = VerificationReport::new("x");
        r.push(CaseResult::new("a", "e", true, ""));
        r.push(CaseResult::new("b", "e", false, "w"));
        assert_eq!((r.passed_count(), r.failed_count(), r.passed()), (1, 1, false));
        assert_eq!(r.cases[1].to_string(), "[FAIL] b: e (w)");
    }
}
