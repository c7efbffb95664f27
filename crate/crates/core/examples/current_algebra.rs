//! The current-algebra action of g_0[t] on the mode algebra and the
//! leading-term check.

use cdr_engine::cartan::{g0_basis, g0t_action, Form, G0tElement};
use cdr_engine::invariants::{compare_current_invariants, leading_term_check};
use cdr_engine::State;

fn main() {
    let g = &g0_basis(2, Form::Volume).unwrap()[0];
    let s: State = "B[1,-2] G[2,-3]".parse::<cdr_engine::Monomial>().unwrap().into();
    for power in 0..=2 {
        let e = G0tElement::new(g.clone(), power).unwrap();
        println!("t^{power}: {}", g0t_action(&e, &s).unwrap());
    }

    for form in [Form::Volume, Form::Symplectic] {
        let r = compare_current_invariants(2, form, 3).unwrap();
        println!("\n{form:?}: kernels equal the leading span in every sector: {}", r.passed());
        println!("generators whose full state moves: {:?}", r.non_invariant_preimages);
        for row in r.rows.iter().filter(|row| row.weight == 3) {
            println!("  ({}, {:>2}) domain {:>3} kernel {:>2}", row.weight, row.fermion, row.domain_dim, row.kernel_dim);
        }
        let lead = leading_term_check(2, form, 2, 3).unwrap();
        let ok = lead.iter().all(|row| row.invariant_leading_terms == row.kernel_dim);
        println!("leading terms of Cartan invariants are g_0[t]-invariant: {ok}");
    }
}
