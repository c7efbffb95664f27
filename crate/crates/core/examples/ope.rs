//! Singular products of the free fields and of the N=2 fields Q, L, J, G.

use cdr_engine::modes::translation;
use cdr_engine::vertex::{generator, ope_singular, standard_fields};
use cdr_engine::{ratio, Kind};

fn main() {
    let beta = generator(Kind::Beta, 1);
    let gamma = generator(Kind::Gamma, 1);
    let b = generator(Kind::B, 1);
    let c = generator(Kind::C, 1);
    for (name, x, y) in [("beta gamma", &beta, &gamma), ("gamma beta", &gamma, &beta), ("b c", &b, &c)] {
        for (n, s) in ope_singular(x, y) {
            println!("{name}: ({n}) -> {s}");
        }
    }

    let f = standard_fields(2).unwrap();
    println!("\nd = 2");
    let named = f.n2();
    for (ln, x) in named {
        for (rn, y) in named {
            for (n, s) in ope_singular(x, y) {
                println!("{ln}_({n}){rn} = {s}");
            }
        }
    }

    // L is the twisted stress tensor; T = L - ∂J/2 carries c/2 in its fourth pole
    let t = &f.l - &translation(&f.j).scaled(&ratio(1, 2));
    println!("\nT_(3)T = {}", cdr_engine::vertex::nth_product(&t, 3, &t));
}
