//! Truncated bigraded characters of W_+ and of the generated subalgebras.

use cdr_engine::cartan::Form;
use cdr_engine::fock::enumerate_basis;
use cdr_engine::invariants::{differential_spans, generator_set, hilbert_series, ProductMode};

fn main() {
    for form in [Form::Volume, Form::Symplectic] {
        let gens: Vec<_> = generator_set(2, form).unwrap().into_iter().map(|(_, s)| s).collect();
        let mut entries = Vec::new();
        for w in 0..=3 {
            let spans = differential_spans(&gens, 2, w, ProductMode::Wick);
            for (f, sector) in enumerate_basis(2, w, None, 0).by_fermion() {
                entries.push(((w, f), vec![sector.len(), spans.get(&f).map_or(0, |s| s.dim())]));
            }
        }
        let t = hilbert_series(&["w_plus", "generated"], entries);
        println!("{form:?}\n{t}generated: {}\n", t.series(1));
    }
}
