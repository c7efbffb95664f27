use cdr_engine::cartan::{cartan_action, hamiltonian_field, lie_bracket, preserves_form, vect_basis, Form, PolyVectorField, Series};
use cdr_engine::cli::GroupChoice;
use cdr_engine::fock::enumerate_basis;
use cdr_engine::invariants::{differential_span, finite_group_invariants, generator_set, hilbert_series, invariant_kernels, leading_component, ProductMode};
use cdr_engine::rat;
use cdr_engine::vertex::standard_fields;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn cartan_series_dimensions() {
    for d in 1..=3usize {
        for n in -1..=3i32 {
            let general = binom((d as i32 + n) as u64, (n + 1) as u64) * d as u64;
            assert_eq!(vect_basis(d, n, Series::General).unwrap().len() as u64, general);
            // divergence maps W_n onto polynomials of degree n
            let special = if n < 0 { general } else { general - binom((d as i32 + n - 1) as u64, n as u64) };
            assert_eq!(vect_basis(d, n, Series::Special).unwrap().len() as u64, special);
        }
    }
    assert_eq!(vect_basis(4, 1, Series::Hamiltonian).unwrap().len(), 20);
    assert!(vect_basis(3, 0, Series::Hamiltonian).is_err());
}

#[test]
fn brackets_stay_in_the_series() {
    let a = vect_basis(3, 1, Series::Special).unwrap();
    let b = vect_basis(3, 0, Series::Special).unwrap();
    for v in &a {
        for w in &b {
            let u = lie_bracket(v, w);
            assert!(u.divergence().is_empty());
            assert!(preserves_form(&u, Form::Volume).unwrap());
        }
    }
    let h = vect_basis(2, 1, Series::Hamiltonian).unwrap();
    for v in &h {
        assert!(preserves_form(&lie_bracket(v, &h[0]), Form::Symplectic).unwrap());
    }
}

#[test]
fn euler_field_is_not_special() {
    let e = PolyVectorField::linear(2, 1, 1).add(&PolyVectorField::linear(2, 2, 2));
    assert!(!preserves_form(&e, Form::Volume).unwrap());
    let f = standard_fields(2).unwrap();
    // the Euler field scales gamma and beta oppositely, so it kills L but not every generator
    assert!(cartan_action(&e, &f.l).is_zero());
    let moved = generator_set(2, Form::Volume).unwrap().into_iter().filter(|(_, g)| !cartan_action(&e, g).is_zero()).count();
    assert!(moved > 0);
}

#[test]
fn hamiltonian_fields_of_quadrics_are_linear() {
    let mut h = std::collections::BTreeMap::new();
    h.insert(vec![2, 0], rat(1));
    let v = hamiltonian_field(2, &h).unwrap();
    assert_eq!(v.degree(), Some(0));
    assert!(preserves_form(&v, Form::Symplectic).unwrap());
}

#[test]
fn kernel_dimensions_at_weight_two() {
    let kernels = invariant_kernels(2, Form::Volume, 2, 2).unwrap();
    let dims: Vec<usize> = kernels.values().map(|h| h.last().unwrap().dim()).collect();
    assert_eq!(dims, vec![1, 2, 3, 4, 3, 2, 1]);
    let gens: Vec<_> = generator_set(2, Form::Volume).unwrap().into_iter().map(|(_, s)| s).collect();
    assert_eq!(differential_span(&gens, 2, 2, 1, ProductMode::Wick).dim(), 4);
}

#[test]
fn sign_group_fixed_spaces() {
    let group = GroupChoice::Signs.elements(2);
    assert_eq!(group.len(), 4);
    let (rows, _) = finite_group_invariants(&group, 2, 1, 0).unwrap();
    assert!(rows.iter().all(|r| r.projector_rank == r.fixed_dim));
    let w0: usize = rows.iter().filter(|r| r.weight == 0).map(|r| r.fixed_dim).sum();
    // diag(-1, 1) flips c1 c2, so only the vacuum survives
    assert_eq!(w0, 1);
    let (pm, _) = finite_group_invariants(&GroupChoice::Pm.elements(2), 2, 0, 0).unwrap();
    assert_eq!(pm.iter().map(|r| r.fixed_dim).sum::<usize>(), 2);
}

#[test]
fn leading_components_keep_the_top_degree() {
    let f = standard_fields(2).unwrap();
    let lead = leading_component(&f.l);
    assert!(!lead.is_zero());
    assert!(lead.terms().all(|(m, _)| m.modes().iter().any(|k| k.kind == cdr_engine::Kind::Gamma)));
}

#[test]
fn hilbert_table_round_trip() {
    let sectors = enumerate_basis(1, 2, None, 0).by_fermion();
    let t = hilbert_series(&["dim"], sectors.iter().map(|(f, b)| ((2, *f), vec![b.len()])));
    let total: usize = t.rows.iter().map(|r| r.dims[0]).sum();
    assert_eq!(total, enumerate_basis(1, 2, None, 0).len());
    assert!(t.to_csv().starts_with("weight,fermion,dim\n"));
}
