//! The eight generators of the volume and symplectic subalgebras.

use cdr_engine::cartan::Form;
use cdr_engine::fock::gradings;
use cdr_engine::invariants::{generator_set, leading_component};

fn main() {
    for (d, form) in [(2, Form::Volume), (3, Form::Volume), (2, Form::Symplectic)] {
        println!("d = {d}, {form:?}");
        for (name, s) in generator_set(d, form).unwrap() {
            let (m, _) = s.terms().next().unwrap();
            let g = gradings(m);
            println!("  {name:<3} weight {} fermion {:>2} terms {:>2}  leading: {}", g.weight, g.fermion, s.len(), leading_component(&s));
        }
    }
    if let Err(e) = generator_set(3, Form::Symplectic) {
        println!("d = 3, Symplectic: {e}");
    }
}
