//! Invariant subspaces of weight spaces by exact linear algebra.
//!
//! Operators preserve conformal weight and fermion number, so every kernel
//! is computed one `(weight, fermion)` sector at a time. Joint kernels are
//! built incrementally: the kernel of the operators seen so far is restricted
//! by the next batch.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{g0_basis, vect_basis, CartanOperator, Form, G0tElement, PolyVectorField};
use crate::error::{Error, Result};
use crate::fock::{enumerate_basis, ModeKey, Monomial, State, WeightSpaceBasis};
use crate::linalg::{kernel_of_columns, kernel_of_sparse, span_echelon, Echelon, Matrix, SparseVec};
use crate::modes::{apply_mode, translation};
use crate::vertex::{standard_fields, wick, GeneratorSet, LinearIso};
use crate::{ratio, Rational};

/// A linear operator on states.
pub type Operator<'a> = Box<dyn Fn(&State) -> State + Send + Sync + 'a>;

/// Matrix of an operator between two monomial bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorMatrix {
    pub domain: WeightSpaceBasis,
    pub codomain: WeightSpaceBasis,
    columns: Vec<SparseVec<usize>>,
}

impl OperatorMatrix {
    /// Column `j` as `codomain index -> entry`.
    pub fn column(&self, j: usize) -> &SparseVec<usize> {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.columns[j].get(&i).cloned().unwrap_or_default()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for c in &self.columns {
            ech.insert(c.clone());
        }
        ech.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }
}

pub fn operator_matrix(op: &(dyn Fn(&State) -> State + Sync), domain: &WeightSpaceBasis, codomain: &WeightSpaceBasis) -> Result<OperatorMatrix> {
    let columns = (0..domain.len())
        .into_par_iter()
        .map(|j| {
            let image = op(&domain.state(j));
            codomain
                .coordinates(&image)
                .map(|c| c.into_iter().collect::<SparseVec<usize>>())
                .ok_or(Error::CodomainTooSmall { column: j })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OperatorMatrix {
        domain: domain.clone(),
        codomain: codomain.clone(),
        columns,
    })
}

/// Kernel of a family of operators on a subspace, as an exact basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kernel {
    pub basis: Vec<State>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `{x in span(basis) : op(x) = 0 for every op}`, returned in terms of a
/// deterministic echelon basis in the ambient coordinates.
pub fn restrict_kernel(basis: &[State], ops: &[Operator<'_>]) -> Vec<State> {
    if basis.is_empty() || ops.is_empty() {
        return basis.to_vec();
    }
    let columns: Vec<SparseVec<(usize, Monomial)>> = basis
        .par_iter()
        .map(|s| {
            let mut col = SparseVec::new();
            for (k, op) in ops.iter().enumerate() {
                for (m, c) in op(s).into_terms() {
                    col.insert((k, m), c);
                }
            }
            col
        })
        .collect();
    let kernel = kernel_of_sparse(&columns);
    let states: Vec<State> = kernel
        .iter()
        .map(|v| {
            let mut out = State::zero();
            for (j, c) in v {
                out.add_scaled(&basis[*j], c);
            }
            out
        })
        .collect();
    echelon_basis(&states)
}

/// Reduced echelon basis (rows in monomial coordinates) of a span.
pub fn echelon_basis(states: &[State]) -> Vec<State> {
    span_echelon(states)
        .into_reduced()
        .into_values()
        .map(|row| row.into_iter().collect())
        .collect()
}

pub fn joint_kernel(ops: &[Operator<'_>], domain: &WeightSpaceBasis) -> Kernel {
    let basis: Vec<State> = (0..domain.len()).map(|j| domain.state(j)).collect();
    Kernel {
        basis: restrict_kernel(&basis, ops),
    }
}

/// Whether every state of `inner` lies in the span of `outer`.
pub fn span_contained(inner: &[State], outer: &[State]) -> bool {
    let ech = span_echelon(outer);
    inner.iter().all(|s| ech.contains(s.clone().into_terms()))
}

/// How words in the generators are multiplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProductMode {
    /// normally ordered products in `W(V)`
    Wick,
    /// the supercommutative product of the mode algebra
    Commutative,
}

/// Span of the words in derivatives of a generating set at one weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub weight: i32,
    pub fermion: i32,
    pub basis: Vec<State>,
}

impl Span {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

struct Letter {
    state: State,
    weight: i32,
}

fn homogeneous_weight(s: &State) -> i32 {
    s.terms().next().map(|(m, _)| m.weight()).unwrap_or(0)
}

/// Spans at weight `weight` for every fermion number reached, built from
/// words of at most `weight + rank` letters `∂^k g` with `k <= weight`.
pub fn differential_spans(generators: &[State], rank: usize, weight: i32, mode: ProductMode) -> BTreeMap<i32, Span> {
    let mut letters = Vec::new();
    for g in generators {
        if g.is_zero() || *g == State::vacuum() {
            continue;
        }
        let w = homogeneous_weight(g);
        let mut cur = g.clone();
        for k in 0..=weight.max(0) {
            if w + k > weight || cur.is_zero() {
                break;
            }
            letters.push(Letter {
                state: cur.clone(),
                weight: w + k,
            });
            cur = translation(&cur);
        }
    }
    let max_len = weight.max(0) as usize + rank;
    let mut found: BTreeMap<i32, Echelon<Monomial>> = BTreeMap::new();
    let mut visit = |s: &State| {
        let f = s.terms().next().map(|(m, _)| m.gradings().fermion).unwrap_or(0);
        found.entry(f).or_default().insert(s.clone().into_terms());
    };
    extend_words(&letters, mode, &State::vacuum(), weight, max_len, 0, &mut visit);
    found
        .into_iter()
        .filter(|(_, e)| e.rank() > 0)
        .map(|(f, e)| {
            let basis = e.into_reduced().into_values().map(|r| r.into_iter().collect()).collect();
            (f, Span { weight, fermion: f, basis })
        })
        .collect()
}

fn extend_words(
    letters: &[Letter],
    mode: ProductMode,
    cur: &State,
    remaining: i32,
    len_left: usize,
    start: usize,
    visit: &mut dyn FnMut(&State),
) {
    if remaining == 0 {
        visit(cur);
    }
    if len_left == 0 {
        return;
    }
    // commutative words are taken as multisets; normally ordered words in every order
    let first = if mode == ProductMode::Commutative { start } else { 0 };
    for (i, letter) in letters.iter().enumerate().skip(first) {
        if letter.weight > remaining {
            continue;
        }
        let next = match mode {
            ProductMode::Wick => wick(&letter.state, cur),
            ProductMode::Commutative => letter.state.mul(cur),
        };
        if next.is_zero() {
            continue;
        }
        extend_words(letters, mode, &next, remaining - letter.weight, len_left - 1, i, visit);
    }
}

pub fn differential_span(generators: &[State], rank: usize, weight: i32, fermion: i32, mode: ProductMode) -> Span {
    differential_spans(generators, rank, weight, mode).remove(&fermion).unwrap_or(Span {
        weight,
        fermion,
        basis: Vec::new(),
    })
}

/// The eight generators matching a form.
pub fn generator_set(d: usize, form: Form) -> Result<Vec<(&'static str, State)>> {
    form.check_rank(d)?;
    let set = match form {
        Form::Volume => GeneratorSet::Odake,
        Form::Symplectic => GeneratorSet::SmallN4,
    };
    standard_fields(d)?.generators(set)
}

/// Sectors of `W_+(V)` at one weight, keyed by fermion number.
pub fn w_plus_sectors(d: usize, weight: i32) -> BTreeMap<i32, WeightSpaceBasis> {
    enumerate_basis(d, weight, None, 0).by_fermion()
}

fn sector_states(b: &WeightSpaceBasis) -> Vec<State> {
    (0..b.len()).map(|j| b.state(j)).collect()
}

/// `L(v)` for `v` in the bases of `Vect_n(V, ω)`, `n` in `degrees`.
pub fn cartan_operators(d: usize, form: Form, degrees: std::ops::RangeInclusive<i32>, max_weight: i32) -> Result<Vec<Operator<'static>>> {
    form.check_rank(d)?;
    let mut fields: Vec<PolyVectorField> = Vec::new();
    for n in degrees {
        fields.extend(vect_basis(d, n, form.series())?);
    }
    let compiled: Vec<CartanOperator> = fields.par_iter().map(|v| CartanOperator::new(v, max_weight)).collect();
    Ok(compiled
        .into_iter()
        .map(|op| Box::new(move |s: &State| op.apply(s)) as Operator<'static>)
        .collect())
}

/// Kernels of `L(Vect_n(V, ω))` on `W_+(V)` at one weight, per fermion number,
/// for the cumulative degree bounds `-1..=n`, `n` up to `degree_bound`.
pub fn invariant_kernels(d: usize, form: Form, weight: i32, degree_bound: i32) -> Result<BTreeMap<i32, Vec<Kernel>>> {
    let per_degree: Vec<Vec<Operator<'static>>> = (-1..=degree_bound)
        .map(|n| cartan_operators(d, form, n..=n, weight))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (f, sector) in w_plus_sectors(d, weight) {
        let mut cur = sector_states(&sector);
        let mut history = Vec::new();
        for ops in &per_degree {
            cur = restrict_kernel(&cur, ops);
            history.push(Kernel { basis: cur.clone() });
        }
        out.insert(f, history);
    }
    Ok(out)
}

/// One `(weight, fermion)` row of an invariant comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRow {
    pub weight: i32,
    pub fermion: i32,
    pub domain_dim: usize,
    pub kernel_dim: usize,
    /// kernel dimension with the degree bound raised by one
    pub kernel_dim_next: usize,
    pub span_dim: usize,
    pub span_in_kernel: bool,
    pub matches: bool,
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub rank: usize,
    pub form: Form,
    pub max_weight: i32,
    pub degree_bound: i32,
    pub rows: Vec<InvariantRow>,
    /// the kernel of every `beta^j_(0)` on weight spaces with `gamma_(-1)` is `W_+`
    pub w_plus_verified: bool,
    pub stabilized: bool,
}

impl InvariantReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches && r.span_in_kernel)
    }

    pub fn passed(&self) -> bool {
        self.all_match() && self.stabilized && self.w_plus_verified
    }
}

/// Checks that `beta^j_(0)` cuts the weight spaces with up to `gamma_bound`
/// factors of `gamma_(-1)` down to exactly `W_+(V)`.
pub fn verify_w_plus(d: usize, weight: i32, gamma_bound: usize) -> bool {
    let full = enumerate_basis(d, weight, None, gamma_bound);
    let ops: Vec<Operator<'static>> = (1..=d)
        .map(|j| Box::new(move |s: &State| apply_mode(&ModeKey::beta(j, 0), s)) as Operator<'static>)
        .collect();
    let kernel = joint_kernel(&ops, &full);
    let plus = enumerate_basis(d, weight, None, 0);
    kernel.dim() == plus.len() && kernel.basis.iter().all(|s| s.max_gamma_degree() == 0)
}

pub fn compare_invariants(d: usize, form: Form, max_weight: i32, degree_bound: i32) -> Result<InvariantReport> {
    form.check_rank(d)?;
    if degree_bound < 0 {
        return Err(Error::Config("the degree bound must be at least 0".into()));
    }
    let gens: Vec<State> = generator_set(d, form)?.into_iter().map(|(_, s)| s).collect();
    let mut rows = Vec::new();
    let mut w_plus_verified = true;
    for weight in 0..=max_weight {
        w_plus_verified &= verify_w_plus(d, weight, degree_bound as usize + 1);
        let kernels = invariant_kernels(d, form, weight, degree_bound + 1)?;
        let spans = differential_spans(&gens, d, weight, ProductMode::Wick);
        let ops = cartan_operators(d, form, -1..=degree_bound, weight)?;
        for (f, history) in kernels {
            let next = history.last().expect("at least one degree");
            let kernel = &history[history.len() - 2];
            let span = spans.get(&f).map(|s| s.basis.clone()).unwrap_or_default();
            let span_in_kernel = span.iter().all(|s| ops.iter().all(|op| op(s).is_zero()));
            let domain_dim = enumerate_basis(d, weight, Some(f), 0).len();
            rows.push(InvariantRow {
                weight,
                fermion: f,
                domain_dim,
                kernel_dim: kernel.dim(),
                kernel_dim_next: next.dim(),
                span_dim: span.len(),
                span_in_kernel,
                matches: kernel.dim() == span.len(),
                stable: kernel.dim() == next.dim(),
            });
        }
    }
    let stabilized = rows.iter().all(|r| r.stable);
    Ok(InvariantReport {
        rank: d,
        form,
        max_weight,
        degree_bound,
        rows,
        w_plus_verified,
        stabilized,
    })
}

/// The `g t^n` operators for a basis of `g_0` and `n <= max_power`.
pub fn g0t_operators(d: usize, form: Form, max_power: u32) -> Result<Vec<Operator<'static>>> {
    let mut ops: Vec<Operator<'static>> = Vec::new();
    for g in g0_basis(d, form)? {
        for n in 0..=max_power {
            let e = G0tElement::new(g.clone(), n)?;
            ops.push(Box::new(move |s: &State| crate::cartan::g0t_action(&e, s).expect("W_+ input")));
        }
    }
    Ok(ops)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurrentRow {
    pub weight: i32,
    pub fermion: i32,
    pub domain_dim: usize,
    pub kernel_dim: usize,
    /// span of the leading components of the generators
    pub span_dim: usize,
    /// the kernel and that span are the same subspace
    pub span_equal: bool,
    /// span of the full generators
    pub preimage_span_dim: usize,
    pub preimage_span_in_kernel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurrentReport {
    pub rank: usize,
    pub form: Form,
    pub max_weight: i32,
    /// generators whose full state is not `g_0[t]`-invariant
    pub non_invariant_preimages: Vec<String>,
    pub rows: Vec<CurrentRow>,
}

impl CurrentReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.span_equal)
    }
}

/// `g_0[t]`-invariants of the mode algebra against the differential ring
/// generated by the leading `#c + 2 #gamma` components of the eight
/// generators. The ring generated by the full generators is reported too.
pub fn compare_current_invariants(d: usize, form: Form, max_weight: i32) -> Result<CurrentReport> {
    let named = generator_set(d, form)?;
    let full: Vec<State> = named.iter().map(|(_, s)| s.clone()).collect();
    let leading: Vec<State> = full.iter().map(leading_component).collect();
    let probe = g0t_operators(d, form, named.iter().map(|(_, s)| s.max_weight()).max().unwrap_or(0).max(0) as u32)?;
    let non_invariant_preimages = named
        .iter()
        .filter(|(_, s)| probe.iter().any(|op| !op(s).is_zero()))
        .map(|(n, _)| n.to_string())
        .collect();
    let mut rows = Vec::new();
    for weight in 0..=max_weight {
        let ops = g0t_operators(d, form, weight.max(0) as u32)?;
        let spans = differential_spans(&leading, d, weight, ProductMode::Commutative);
        let preimage_spans = differential_spans(&full, d, weight, ProductMode::Commutative);
        for (f, sector) in w_plus_sectors(d, weight) {
            let kernel = restrict_kernel(&sector_states(&sector), &ops);
            let span = spans.get(&f).map(|s| s.basis.clone()).unwrap_or_default();
            let pre = preimage_spans.get(&f).map(|s| s.basis.clone()).unwrap_or_default();
            rows.push(CurrentRow {
                weight,
                fermion: f,
                domain_dim: sector.len(),
                kernel_dim: kernel.len(),
                span_dim: span.len(),
                span_equal: kernel.len() == span.len() && span_contained(&span, &kernel),
                preimage_span_dim: pre.len(),
                preimage_span_in_kernel: span_contained(&pre, &kernel),
            });
        }
    }
    Ok(CurrentReport {
        rank: d,
        form,
        max_weight,
        non_invariant_preimages,
        rows,
    })
}

/// Component of a state with the largest `#c + 2 #gamma`.
pub fn leading_component(s: &State) -> State {
    let top = s.terms().map(|(m, _)| m.gradings().sw_degree).max().unwrap_or(0);
    s.filter(|m| m.gradings().sw_degree == top)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingTermRow {
    pub weight: i32,
    pub fermion: i32,
    pub kernel_dim: usize,
    pub invariant_leading_terms: usize,
}

/// For each kernel basis element of `L(Vect(V, ω))`, whether its leading
/// component is killed by every `g t^n`.
pub fn leading_term_check(d: usize, form: Form, max_weight: i32, degree_bound: i32) -> Result<Vec<LeadingTermRow>> {
    let mut rows = Vec::new();
    for weight in 0..=max_weight {
        let ops = g0t_operators(d, form, weight.max(0) as u32)?;
        for (f, history) in invariant_kernels(d, form, weight, degree_bound)? {
            let kernel = history.last().expect("at least one degree");
            let good = kernel
                .basis
                .iter()
                .filter(|a| {
                    let top = leading_component(a);
                    ops.iter().all(|op| op(&top).is_zero())
                })
                .count();
            rows.push(LeadingTermRow {
                weight,
                fermion: f,
                kernel_dim: kernel.dim(),
                invariant_leading_terms: good,
            });
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRow {
    pub weight: i32,
    pub fermion: i32,
    pub domain_dim: usize,
    pub fixed_dim: usize,
    pub projector_rank: usize,
}

/// Checks closure under products.
pub fn check_group(group: &[Matrix]) -> Result<()> {
    for g in group {
        g.inverse()?;
        for h in group {
            let p = g.mul(h);
            if !group.contains(&p) {
                return Err(Error::GroupNotClosed);
            }
        }
    }
    Ok(())
}

/// Fixed-space bases keyed by `(weight, fermion)`.
pub type FixedSpaces = BTreeMap<(i32, i32), Vec<State>>;

/// Fixed points of `W(ψ_g)` over a finite group, per `(weight, fermion)`,
/// together with the fixed spaces themselves.
pub fn finite_group_invariants(group: &[Matrix], d: usize, max_weight: i32, gamma_bound: usize) -> Result<(Vec<GroupRow>, FixedSpaces)> {
    if group.is_empty() {
        return Err(Error::GroupNotClosed);
    }
    for g in group {
        g.require_square(d)?;
    }
    check_group(group)?;
    let isos: Vec<LinearIso> = group.iter().map(LinearIso::new).collect::<Result<_>>()?;
    let order = ratio(1, group.len() as i64);
    let mut rows = Vec::new();
    let mut spaces = BTreeMap::new();
    for weight in 0..=max_weight {
        for (f, sector) in enumerate_basis(d, weight, None, gamma_bound).by_fermion() {
            let states = sector_states(&sector);
            let ops: Vec<Operator<'_>> = isos
                .iter()
                .map(|iso| Box::new(move |s: &State| &iso.apply(s).expect("rank checked") - s) as Operator<'_>)
                .collect();
            let fixed = restrict_kernel(&states, &ops);
            let averaged: Vec<State> = states
                .par_iter()
                .map(|s| {
                    let mut acc = State::zero();
                    for iso in &isos {
                        acc.add_scaled(&iso.apply(s).expect("rank checked"), &order);
                    }
                    acc
                })
                .collect();
            let projector_rank = states.len() - kernel_of_columns(&averaged).len();
            rows.push(GroupRow {
                weight,
                fermion: f,
                domain_dim: sector.len(),
                fixed_dim: fixed.len(),
                projector_rank,
            });
            spaces.insert((weight, f), fixed);
        }
    }
    Ok((rows, spaces))
}

/// Bigraded dimension table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertTable {
    pub columns: Vec<String>,
    pub rows: Vec<HilbertRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRow {
    pub weight: i32,
    pub fermion: i32,
    pub dims: Vec<usize>,
}

/// Sorts entries `((weight, fermion), dims)` into a table.
pub fn hilbert_series(columns: &[&str], entries: impl IntoIterator<Item = ((i32, i32), Vec<usize>)>) -> HilbertTable {
    let mut rows: Vec<HilbertRow> = entries
        .into_iter()
        .map(|((weight, fermion), dims)| HilbertRow { weight, fermion, dims })
        .collect();
    rows.sort_by_key(|r| (r.weight, r.fermion));
    HilbertTable {
        columns: columns.iter().map(|c| c.to_string()).collect(),
        rows,
    }
}

impl HilbertTable {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["weight".to_string(), "fermion".to_string()];
        header.extend(self.columns.iter().cloned());
        w.write_record(&header).expect("in-memory csv");
        for r in &self.rows {
            let mut rec = vec![r.weight.to_string(), r.fermion.to_string()];
            rec.extend(r.dims.iter().map(|d| d.to_string()));
            w.write_record(&rec).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8")
    }

    /// Generating polynomial `sum dim q^weight y^fermion` of one column.
    pub fn series(&self, column: usize) -> String {
        let mut out = String::new();
        for r in &self.rows {
            if r.dims[column] == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let _ = write!(out, "{} q^{} y^{}", r.dims[column], r.weight, r.fermion);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl std::fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:>6} {:>7}", "weight", "fermion")?;
        for c in &self.columns {
            write!(f, " {c:>10}")?;
        }
        writeln!(f)?;
        for r in &self.rows {
            write!(f, "{:>6} {:>7}", r.weight, r.fermion)?;
            for d in &r.dims {
                write!(f, " {d:>10}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn trivial_operator_matrices() {
        let b = enumerate_basis(1, 1, None, 0);
        let zero = operator_matrix(&|_: &State| State::zero(), &b, &b).unwrap();
        assert!(zero.is_zero());
        let id = operator_matrix(&|s: &State| s.clone(), &b, &b).unwrap();
        for i in 0..b.len() {
            for j in 0..b.len() {
                assert_eq!(id.entry(i, j), if i == j { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn codomain_must_be_wide_enough() {
        let plus = enumerate_basis(1, 1, None, 0);
        // multiplying by gamma_(-1) leaves W_+
        let op = |s: &State| State::from(Monomial::from_sorted(vec![ModeKey::gamma(1, -1)])).mul(s);
        assert!(matches!(operator_matrix(&op, &plus, &plus), Err(Error::CodomainTooSmall { .. })));
        assert!(operator_matrix(&op, &plus, &enumerate_basis(1, 1, None, 1)).is_ok());
    }

    #[test]
    fn beta_zero_rank_by_hand() {
        // beta_(0) kills every gamma_(-1)-free monomial; on the K=1 basis with one
        // gamma_(-1) it contracts exactly the monomials containing gamma_(-1)
        let domain = enumerate_basis(1, 1, None, 1);
        let codomain = enumerate_basis(1, 1, None, 1);
        let m = operator_matrix(&|s: &State| apply_mode(&ModeKey::beta(1, 0), s), &domain, &codomain).unwrap();
        let hand = domain.elements().iter().filter(|x| x.gamma_degree() == 1).count();
        assert_eq!(m.rank(), hand);
        let plus = enumerate_basis(1, 1, None, 0);
        assert_eq!(plus.len(), 8);
        let m0 = operator_matrix(&|s: &State| apply_mode(&ModeKey::beta(1, 0), s), &plus, &codomain).unwrap();
        assert_eq!(m0.rank(), 0);
    }

    #[test]
    fn empty_family_keeps_everything() {
        let b = enumerate_basis(2, 1, None, 0);
        assert_eq!(joint_kernel(&[], &b).dim(), b.len());
    }

    #[test]
    fn weight_zero_invariants() {
        for form in [Form::Volume, Form::Symplectic] {
            let ops = cartan_operators(2, form, -1..=1, 0).unwrap();
            let k = joint_kernel(&ops, &enumerate_basis(2, 0, None, 0));
            assert_eq!(k.dim(), 2);
            let e = State::from("c[1,-1] c[2,-1]".parse::<Monomial>().unwrap());
            assert!(span_contained(&[State::vacuum(), e], &k.basis));
        }
    }

    #[test]
    fn spans_of_small_sets() {
        let one = [State::vacuum()];
        assert_eq!(differential_span(&one, 2, 0, 0, ProductMode::Wick).dim(), 1);
        for k in 1..=2 {
            assert!(differential_spans(&one, 2, k, ProductMode::Wick).is_empty());
        }
        let gens: Vec<State> = generator_set(2, Form::Volume).unwrap().into_iter().map(|(_, s)| s).collect();
        let total: usize = differential_spans(&gens, 2, 0, ProductMode::Wick).values().map(|s| s.dim()).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn hilbert_tables() {
        let t = hilbert_series(&["dim"], []);
        assert!(t.rows.is_empty());
        let t = hilbert_series(&["dim"], [((0, 0), vec![1])]);
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.series(0), "1 q^0 y^0");
        let t = hilbert_series(&["dim"], [((1, 0), vec![3]), ((0, 2), vec![1]), ((0, 0), vec![1])]);
        let keys: Vec<_> = t.rows.iter().map(|r| (r.weight, r.fermion)).collect();
        assert_eq!(keys, vec![(0, 0), (0, 2), (1, 0)]);
        assert_eq!(t.to_csv().lines().next(), Some("weight,fermion,dim"));
    }

    #[test]
    fn trivial_group_fixes_everything() {
        let (rows, _) = finite_group_invariants(&[Matrix::identity(2)], 2, 1, 0).unwrap();
        assert!(rows.iter().all(|r| r.fixed_dim == r.domain_dim && r.projector_rank == r.domain_dim));
        assert_eq!(finite_group_invariants(&[Matrix::identity(2), Matrix::from_i64(&[&[0, 2], &[2, 0]])], 2, 0, 0).err(), Some(Error::GroupNotClosed));
    }
}
