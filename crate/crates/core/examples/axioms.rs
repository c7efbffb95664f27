//! Randomized vertex algebra identities and the N=2 report.

use cdr_engine::checks::{axiom_suite, iso_homomorphism, n2_report};

fn main() {
    let r = axiom_suite(2, 2, 50, 1);
    for (name, t) in &r.checks {
        println!("{name:<24} {} ok, {} failed", t.passed, t.failed);
    }
    println!("linear isos: {:?}", iso_homomorphism(2, 2, 20, 1).unwrap());

    for d in 1..=3 {
        let n2 = n2_report(d).unwrap();
        println!(
            "d = {d}: J_(1)J = {}, c = {}, L_(3)L = {}, T_(3)T = {}",
            n2.j1j.as_deref().unwrap_or("?"),
            n2.central_charge.as_deref().unwrap_or("?"),
            n2.l3l.as_deref().unwrap_or("?"),
            n2.untwisted_central_term.as_deref().unwrap_or("?"),
        );
    }
}
