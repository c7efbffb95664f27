//! Joint kernels of the Cartan action against the subalgebra the eight
//! generators produce, sector by sector.

use cdr_engine::cartan::Form;
use cdr_engine::invariants::{compare_invariants, hilbert_series};

fn main() {
    let k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    for form in [Form::Volume, Form::Symplectic] {
        let r = compare_invariants(2, form, k, 3).unwrap();
        let table = hilbert_series(
            &["domain", "kernel", "span"],
            r.rows.iter().map(|row| ((row.weight, row.fermion), vec![row.domain_dim, row.kernel_dim, row.span_dim])),
        );
        println!("{form:?}, weight <= {k}\n{table}");
        println!("all sectors match: {}, stable under one more degree: {}\n", r.all_match(), r.stabilized);
    }
}
