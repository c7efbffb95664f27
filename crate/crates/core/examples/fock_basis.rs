//! Weight spaces of the rank-2 βγ-bc system and the supercommutative product.

use cdr_engine::fock::{canonicalize, enumerate_basis, gradings};
use cdr_engine::{Monomial, ModeKey};

fn main() {
    for w in 0..=2 {
        let all = enumerate_basis(2, w, None, 1);
        let plus = enumerate_basis(2, w, None, 0);
        println!("weight {w}: {} monomials with at most one gamma_(-1), {} in W_+", all.len(), plus.len());
        for (f, sector) in plus.by_fermion() {
            println!("  fermion {f:>2}: {}", sector.len());
        }
    }

    // odd modes anticommute, so reordering picks up a sign
    let raw = [ModeKey::c(1, -1), ModeKey::b(2, -2), ModeKey::beta(1, -1)];
    let (sign, m) = canonicalize(&raw).unwrap().unwrap();
    let shown: Vec<String> = raw.iter().map(|k| k.to_string()).collect();
    println!("{} -> {sign} * {m}", shown.join(" "));
    assert!(canonicalize(&[ModeKey::c(1, -1), ModeKey::c(1, -1)]).unwrap().is_none());

    let m: Monomial = "B[1,-2] G[2,-1] c[1,-1]".parse().unwrap();
    let g = gradings(&m);
    println!("{m}: weight {} fermion {} sw-degree {} parity {:?}", g.weight, g.fermion, g.sw_degree, g.parity);
}
