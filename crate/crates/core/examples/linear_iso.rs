//! A linear change of coordinates on V acts on the whole vertex algebra.

use cdr_engine::linalg::Matrix;
use cdr_engine::vertex::{apply_linear_iso, nth_product, standard_fields};

fn main() {
    let psi = Matrix::from_i64(&[&[2, 1], &[0, 1]]);
    let f = standard_fields(2).unwrap();
    let moved = apply_linear_iso(&psi, &f.b).unwrap();
    // B and C see the determinant
    println!("B   = {}\nψ.B = {}", f.b, moved);

    for (name, s) in f.n2() {
        assert_eq!(&apply_linear_iso(&psi, s).unwrap(), s);
        println!("{name} is fixed");
    }

    let a: cdr_engine::State = "B[1,-2] c[2,-1]".parse::<cdr_engine::Monomial>().unwrap().into();
    let b: cdr_engine::State = "G[1,-2] b[1,-1]".parse::<cdr_engine::Monomial>().unwrap().into();
    for n in -2..=1 {
        let lhs = apply_linear_iso(&psi, &nth_product(&a, n, &b)).unwrap();
        let rhs = nth_product(&apply_linear_iso(&psi, &a).unwrap(), n, &apply_linear_iso(&psi, &b).unwrap());
        println!("n = {n:>2}: {}", if lhs == rhs { "homomorphic" } else { "MISMATCH" });
    }
}
