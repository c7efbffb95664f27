//! Polynomial vector fields and their action through zero modes.

use cdr_engine::cartan::{cartan_action, lie_bracket, vect_basis, Form, PolyVectorField, Series};
use cdr_engine::invariants::generator_set;
use cdr_engine::rat;
use cdr_engine::vertex::standard_fields;

fn main() {
    for n in -1..=2 {
        let s = vect_basis(2, n, Series::Special).unwrap();
        let h = vect_basis(2, n, Series::Hamiltonian).unwrap();
        println!("degree {n}: S has {}, H has {}", s.len(), h.len());
    }
    let basis = vect_basis(2, 1, Series::Special).unwrap();
    for v in &basis {
        println!("  {v}");
    }

    let f = standard_fields(2).unwrap();
    let v = PolyVectorField::monomial(&[1, 0], 2, rat(1));
    println!("\nL(x1 d2) beta^1 = {}", cartan_action(&v, &cdr_engine::vertex::generator(cdr_engine::Kind::Beta, 1)));
    println!("L(x1 d2) L = {}", cartan_action(&v, &f.l));

    // the action is a Lie algebra map
    let w = PolyVectorField::monomial(&[0, 2], 1, rat(1));
    let lhs = cartan_action(&lie_bracket(&v, &w), &f.b);
    let rhs = &cartan_action(&v, &cartan_action(&w, &f.b)) - &cartan_action(&w, &cartan_action(&v, &f.b));
    println!("[L(v), L(w)] B == L([v, w]) B: {}", lhs == rhs);

    let gens = generator_set(2, Form::Volume).unwrap();
    for v in vect_basis(2, 2, Series::Special).unwrap() {
        let moved: Vec<_> = gens.iter().filter(|(_, g)| !cartan_action(&v, g).is_zero()).map(|(n, _)| *n).collect();
        println!("{v}: moves {moved:?}");
    }
    let euler = PolyVectorField::linear(2, 1, 1).add(&PolyVectorField::linear(2, 2, 2));
    let moved: Vec<_> = gens.iter().filter(|(_, g)| !cartan_action(&euler, g).is_zero()).map(|(n, _)| *n).collect();
    println!("{euler} (not divergence free): moves {moved:?}");
}
