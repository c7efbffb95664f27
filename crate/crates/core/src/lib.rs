//! Exact symbolic engine for the rank-d βγ-bc vertex superalgebra.
//!
//! The crate builds the free-field vertex superalgebra `W(V)` on a monomial
//! Fock basis with exact rational coefficients, evaluates n-th products and
//! OPEs, constructs the N=2 and Odake / small N=4 generating fields, realizes
//! the special and Hamiltonian Cartan-type Lie algebras acting on `W(V)`, and
//! compares invariant subspaces with differential spans of generators by
//! exact linear algebra on finite weight spaces.
pub mod cartan;
pub mod checks;
pub mod cli;
pub mod error;
pub mod fock;
pub mod invariants;
pub mod linalg;
pub mod modes;
pub mod vertex;

pub use error::{Error, Result};
pub use fock::{Kind, ModeKey, Monomial, State};

/// Exact coefficient type used everywhere.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
