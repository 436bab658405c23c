use serde_json::{json, Value};

/// `println!` that ignores a closed stdout (e.g. output piped into `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

use staircase_core::exactnum::{BiRatFun, Poly, RatFun};
use staircase_core::kernel::KernelSystem;
use staircase_core::verify::VerificationReport;

pub fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn coeffs(p: &Poly) -> Value {
    Value::from(p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn gf_json(k: u32, l: u32, method: &str, f: &RatFun) -> Value {
    json!({
        "k": k,
        "L": l,
        "method": method,
        "num": coeffs(f.num()),
        "den": coeffs(f.den()),
        "text": f.to_string(),
    })
}

pub fn report_json(r: &VerificationReport) -> Value {
    let cases: Vec<Value> = r
        .cases
        .iter()
        .map(|c| json!({ "id": c.id, "expected": c.expected, "passed": c.passed, "witness": c.witness }))
        .collect();
    json!({
        "suite": r.suite,
        "passed": r.passed_count(),
        "failed": r.failed_count(),
        "ok": r.passed(),
        "cases": cases,
    })
}

fn entries(v: &[BiRatFun]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn kernel_json(k: u32, s: &KernelSystem) -> Value {
    let a: Vec<Value> = s.a().iter().map(|row| entries(row)).collect();
    json!({
        "L": s.l(),
        "k": k,
        "size": s.size(),
        "A": a,
        "b": entries(s.b()),
        "b_prime": entries(s.b_prime()),
    })
}
