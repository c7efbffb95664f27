//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines always print; exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cdr_engine::cartan::Form;
use cdr_engine::checks::{axiom_suite, generator_invariance, iso_homomorphism, n2_report};
use cdr_engine::cli::GroupChoice;
use cdr_engine::invariants::{
    compare_current_invariants, compare_invariants, differential_spans, finite_group_invariants, generator_set, leading_term_check, span_contained,
    ProductMode,
};
use cdr_engine::{rat, ratio, State};

const SEED: u64 = 20240917;
const FORMS: [Form; 2] = [Form::Volume, Form::Symplectic];

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn axioms() -> Result<String, String> {
    let t = Instant::now();
    let r = axiom_suite(2, 2, 200, SEED);
    let bad: Vec<_> = r.checks.iter().filter(|(_, t)| t.failed > 0).map(|(n, t)| format!("{n}: {} failed", t.failed)).collect();
    ensure(r.checks.len() == 7 && bad.is_empty(), bad.join(", "))?;
    ensure(r.checks.values().all(|t| t.passed == 200), "not every identity ran on every pair")?;
    ensure(t.elapsed() < Duration::from_secs(30), format!("took {:?}", t.elapsed()))?;
    Ok(format!("7 identities x 200 pairs in {:.1?}", t.elapsed()))
}

fn n2_closure() -> Result<String, String> {
    let t = Instant::now();
    let mut problems = Vec::new();
    for d in 1..=3usize {
        let r = n2_report(d).map_err(|e| e.to_string())?;
        for p in r.products.iter().filter(|p| p.coordinates.is_none()) {
            problems.push(format!("d={d}: {}_({}){} outside the span", p.left, p.n, p.right));
        }
        let want = ratio(3 * d as i64, 2);
        if r.l3l_value() != Some(want.clone()) {
            problems.push(format!("d={d}: L_(3)L = {} (want {want})", r.l3l.as_deref().unwrap_or("not scalar")));
        }
        if r.j1j_value() != Some(rat(d as i64)) {
            problems.push(format!("d={d}: J_(1)J = {}", r.j1j.as_deref().unwrap_or("not scalar")));
        }
    }
    ensure(t.elapsed() < Duration::from_secs(60), format!("took {:?}", t.elapsed()))?;
    ensure(problems.is_empty(), problems.join("; "))?;
    Ok("closure and central terms for d = 1, 2, 3".into())
}

fn generator_invariance_all() -> Result<String, String> {
    let t = Instant::now();
    let mut evals = 0;
    for (d, form) in [(2, Form::Volume), (3, Form::Volume), (2, Form::Symplectic), (4, Form::Symplectic)] {
        let r = generator_invariance(d, form, 3).map_err(|e| e.to_string())?;
        ensure(r.failures.is_empty(), format!("d={d} {form:?}: {:?}", r.failures))?;
        ensure(r.control_detected, "control field went undetected")?;
        evals += r.evaluations;
    }
    ensure(t.elapsed() < Duration::from_secs(300), format!("took {:?}", t.elapsed()))?;
    Ok(format!("{evals} evaluations vanish"))
}

fn main_theorem() -> Result<String, String> {
    let t = Instant::now();
    let mut sectors = 0;
    for form in FORMS {
        let r = compare_invariants(2, form, 3, 3).map_err(|e| e.to_string())?;
        for row in &r.rows {
            ensure(row.matches && row.span_in_kernel, format!("{form:?} ({}, {}): kernel {} span {}", row.weight, row.fermion, row.kernel_dim, row.span_dim))?;
            ensure(row.stable, format!("{form:?} ({}, {}): kernel {} -> {}", row.weight, row.fermion, row.kernel_dim, row.kernel_dim_next))?;
        }
        ensure(r.w_plus_verified, "beta_(0) kernel is not W_+")?;
        ensure(r.rows.iter().map(|r| r.weight).max() == Some(3), "weights missing")?;
        sectors += r.rows.len();
    }
    ensure(t.elapsed() < Duration::from_secs(900), format!("took {:?}", t.elapsed()))?;
    Ok(format!("{sectors} sectors match, stable from N = 3 to 4"))
}

fn current_algebra() -> Result<String, String> {
    let t = Instant::now();
    let mut sectors = 0;
    for form in FORMS {
        let r = compare_current_invariants(2, form, 3).map_err(|e| e.to_string())?;
        for row in &r.rows {
            ensure(row.span_equal, format!("{form:?} ({}, {}): kernel {} span {}", row.weight, row.fermion, row.kernel_dim, row.span_dim))?;
        }
        sectors += r.rows.len();
    }
    ensure(t.elapsed() < Duration::from_secs(600), format!("took {:?}", t.elapsed()))?;
    Ok(format!("{sectors} sectors equal as subspaces"))
}

fn leading_terms() -> Result<String, String> {
    let mut total = 0;
    for form in FORMS {
        for row in leading_term_check(2, form, 3, 3).map_err(|e| e.to_string())? {
            ensure(
                row.invariant_leading_terms == row.kernel_dim,
                format!("{form:?} ({}, {}): {}/{}", row.weight, row.fermion, row.invariant_leading_terms, row.kernel_dim),
            )?;
            total += row.kernel_dim;
        }
    }
    Ok(format!("{total} kernel elements"))
}

fn linear_iso() -> Result<String, String> {
    let r = iso_homomorphism(2, 2, 100, SEED).map_err(|e| e.to_string())?;
    ensure(r.failed == 0 && r.passed == 100, format!("{} of 100 failed", r.failed))?;
    Ok("100 triples".into())
}

fn finite_group() -> Result<String, String> {
    let group = GroupChoice::Pm.elements(2);
    let (rows, spaces) = finite_group_invariants(&group, 2, 2, 0).map_err(|e| e.to_string())?;
    for r in &rows {
        ensure(r.projector_rank == r.fixed_dim, format!("({}, {}): rank {} fixed {}", r.weight, r.fermion, r.projector_rank, r.fixed_dim))?;
    }
    let gens: Vec<State> = generator_set(2, Form::Symplectic).unwrap().into_iter().map(|(_, s)| s).collect();
    for w in 0..=2 {
        for (f, span) in differential_spans(&gens, 2, w, ProductMode::Wick) {
            let fixed = spaces.get(&(w, f)).cloned().unwrap_or_default();
            ensure(span_contained(&span.basis, &fixed), format!("({w}, {f}) span leaves the fixed space"))?;
        }
    }
    Ok(format!("{} sectors", rows.len()))
}

fn main() {
    let criteria: [(&str, Check); 8] = [
        ("1 axiom suite", axioms),
        ("2 N=2 closure", n2_closure),
        ("3 generator invariance", generator_invariance_all),
        ("4 invariants = generated subalgebra", main_theorem),
        ("5 g0[t] invariants", current_algebra),
        ("6 leading terms", leading_terms),
        ("7 W(psi) homomorphism", linear_iso),
        ("8 finite group", finite_group),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("criterion {name}: pass ({msg}; {:.1?})", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({msg})");
            }
        }
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
