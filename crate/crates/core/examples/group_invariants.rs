//! Fixed spaces of {±I} and of the diagonal sign group, with Reynolds ranks.

use cdr_engine::cli::GroupChoice;
use cdr_engine::invariants::{finite_group_invariants, hilbert_series};

fn main() {
    for choice in [GroupChoice::Pm, GroupChoice::Signs] {
        let group = choice.elements(2);
        let (rows, _) = finite_group_invariants(&group, 2, 2, 0).unwrap();
        let table = hilbert_series(
            &["domain", "fixed", "reynolds"],
            rows.iter().map(|r| ((r.weight, r.fermion), vec![r.domain_dim, r.fixed_dim, r.projector_rank])),
        );
        println!("{choice:?} (order {})\n{table}", group.len());
    }
}
