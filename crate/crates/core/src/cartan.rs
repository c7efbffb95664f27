//! Cartan-type Lie algebras of polynomial vector fields and their actions.
//!
//! `Vect_n(V)` is spanned by `x^a ∂/∂x_i` with `|a| = n + 1`. A vector field
//! `v = sum_i P_i ∂/∂x_i` acts on `W(V)` through the zero mode of the field
//! `sum_i Q_(0) :P_i(gamma) b^i:`, and the degree-zero part `g_0` extends to
//! a current algebra `g_0[t]` acting on the mode algebra of `W_+(V)` by
//! derivations that shift levels.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{Kind, ModeKey, Monomial, State};
use crate::linalg::{kernel_of_sparse, Matrix, SparseVec};
use crate::vertex::{generator, iterated_wick, nth_product, wick, ModeExpansion};
use crate::{rat, ratio, Rational};

/// Exponent vector of a monomial `x_1^{a_1} ... x_d^{a_d}`.
pub type Exponents = Vec<u32>;

/// Polynomial in `x_1..x_d`.
pub type Polynomial = BTreeMap<Exponents, Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    General,
    /// divergence free, preserving the volume form
    Special,
    /// preserving the standard symplectic form, even rank only
    Hamiltonian,
}

/// The two invariant forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    /// `dx_1 ∧ ... ∧ dx_d`
    Volume,
    /// `sum_i dx_{2i-1} ∧ dx_{2i}`
    Symplectic,
}

impl Form {
    pub fn series(self) -> Series {
        match self {
            Form::Volume => Series::Special,
            Form::Symplectic => Series::Hamiltonian,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if self == Form::Symplectic && rank % 2 == 1 {
            return Err(Error::OddRank {
                what: "the symplectic form",
                rank,
            });
        }
        Ok(())
    }
}

/// `sum P_i ∂/∂x_i` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyVectorField {
    rank: usize,
    /// `(exponents, direction)` with 0-based directions
    terms: BTreeMap<(Exponents, usize), Rational>,
}

impl PolyVectorField {
    pub fn zero(rank: usize) -> Self {
        PolyVectorField {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff * x^exps ∂/∂x_dir`, with `dir` counted from 1.
    pub fn monomial(exps: &[u32], dir: usize, coeff: Rational) -> Self {
        let mut v = PolyVectorField::zero(exps.len());
        v.add_term(exps.to_vec(), dir - 1, coeff);
        v
    }

    /// `∂/∂x_j`.
    pub fn partial(rank: usize, j: usize) -> Self {
        PolyVectorField::monomial(&vec![0; rank], j, Rational::one())
    }

    /// `x_a ∂/∂x_b`.
    pub fn linear(rank: usize, a: usize, b: usize) -> Self {
        let mut e = vec![0; rank];
        e[a - 1] = 1;
        PolyVectorField::monomial(&e, b, Rational::one())
    }

    /// `sum_{i,j} g_{ji} x_j ∂/∂x_i`.
    pub fn from_matrix(g: &Matrix) -> Result<Self> {
        let d = g.nrows();
        g.require_square(d)?;
        let mut v = PolyVectorField::zero(d);
        for j in 0..d {
            for i in 0..d {
                let mut e = vec![0; d];
                e[j] = 1;
                v.add_term(e, i, g[(j, i)].clone());
            }
        }
        Ok(v)
    }

    /// Inverse of [`from_matrix`](Self::from_matrix) on linear fields.
    pub fn to_matrix(&self) -> Option<Matrix> {
        let mut g = Matrix::zeros(self.rank, self.rank);
        for ((e, i), c) in &self.terms {
            let j = e.iter().position(|&x| x == 1)?;
            if e.iter().sum::<u32>() != 1 {
                return None;
            }
            g[(j, *i)] = c.clone();
        }
        Some(g)
    }

    fn add_term(&mut self, exps: Exponents, dir: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (exps, dir);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponents, direction from 1, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], usize, &Rational)> {
        self.terms.iter().map(|((e, i), c)| (e.as_slice(), i + 1, c))
    }

    /// The coefficient polynomial `P_i` (direction from 1).
    pub fn component(&self, dir: usize) -> Polynomial {
        self.terms
            .iter()
            .filter(|((_, i), _)| *i + 1 == dir)
            .map(|((e, _), c)| (e.clone(), c.clone()))
            .collect()
    }

    /// Homogeneous degree `n` (coefficients of degree `n + 1`); `None` for
    /// zero or inhomogeneous fields.
    pub fn degree(&self) -> Option<i32> {
        let mut degrees = self.terms.keys().map(|(e, _)| e.iter().sum::<u32>() as i32 - 1);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = PolyVectorField::zero(self.rank);
        for ((e, i), x) in &self.terms {
            out.add_term(e.clone(), *i, x * c);
        }
        out
    }

    pub fn add(&self, other: &PolyVectorField) -> Self {
        let mut out = self.clone();
        for ((e, i), x) in &other.terms {
            out.add_term(e.clone(), *i, x.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyVectorField) -> Self {
        self.add(&other.scaled(&rat(-1)))
    }

    pub fn divergence(&self) -> Polynomial {
        let mut out = Polynomial::new();
        for ((e, i), c) in &self.terms {
            if let Some((de, k)) = differentiate(e, *i) {
                add_poly_term(&mut out, de, c * rat(k as i64));
            }
        }
        out
    }

    /// Applies the field to a polynomial as a derivation.
    pub fn apply_to(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::new();
        for ((e, i), c) in &self.terms {
            for (pe, pc) in p {
                if let Some((de, k)) = differentiate(pe, *i) {
                    let prod: Exponents = de.iter().zip(e).map(|(a, b)| a + b).collect();
                    add_poly_term(&mut out, prod, c * pc * rat(k as i64));
                }
            }
        }
        out
    }
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((e, i), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            for (k, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "x{}*", k + 1)?,
                    _ => write!(f, "x{}^{}*", k + 1, p)?,
                }
            }
            write!(f, "d{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn differentiate(e: &[u32], i: usize) -> Option<(Exponents, u32)> {
    if e[i] == 0 {
        return None;
    }
    let mut de = e.to_vec();
    de[i] -= 1;
    Some((de, e[i]))
}

fn add_poly_term(p: &mut Polynomial, e: Exponents, c: Rational) {
    let slot = p.entry(e.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        p.remove(&e);
    }
}

fn poly_derivative(p: &Polynomial, i: usize) -> Polynomial {
    let mut out = Polynomial::new();
    for (e, c) in p {
        if let Some((de, k)) = differentiate(e, i) {
            add_poly_term(&mut out, de, c * rat(k as i64));
        }
    }
    out
}

/// Exponent vectors of total degree `total` in `d` variables, `x_1^total` first.
pub fn exponents(d: usize, total: u32) -> Vec<Exponents> {
    fn rec(d: usize, total: u32, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
        if prefix.len() + 1 == d {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=total).rev() {
            prefix.push(a);
            rec(d, total - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        rec(d, total, &mut Vec::new(), &mut out);
    }
    out
}

/// The Hamiltonian field `v_H = sum_i (∂H/∂x_{2i}) ∂_{2i-1} - (∂H/∂x_{2i-1}) ∂_{2i}`.
pub fn hamiltonian_field(d: usize, h: &Polynomial) -> Result<PolyVectorField> {
    Form::Symplectic.check_rank(d)?;
    let mut v = PolyVectorField::zero(d);
    for i in 0..d / 2 {
        let (odd, even) = (2 * i, 2 * i + 1);
        for (e, c) in poly_derivative(h, even) {
            v.add_term(e, odd, c);
        }
        for (e, c) in poly_derivative(h, odd) {
            v.add_term(e, even, -c);
        }
    }
    Ok(v)
}

/// A deterministic basis of `Vect_n(V)`, `Vect_n(V, ω_0)` or `Vect_n(V, ω_1)`.
pub fn vect_basis(d: usize, n: i32, series: Series) -> Result<Vec<PolyVectorField>> {
    if d == 0 {
        return Err(Error::ZeroRank);
    }
    if n < -1 {
        return Err(Error::Degree(n));
    }
    let monos = exponents(d, (n + 1) as u32);
    let general = || {
        monos
            .iter()
            .flat_map(|e| (1..=d).map(move |i| PolyVectorField::monomial(e, i, Rational::one())))
            .collect::<Vec<_>>()
    };
    match series {
        Series::General => Ok(general()),
        Series::Special => {
            let all = general();
            let cols: Vec<SparseVec<Exponents>> = all.iter().map(|v| v.divergence()).collect();
            let kernel = kernel_of_sparse(&cols);
            Ok(kernel
                .into_iter()
                .map(|k| {
                    k.iter()
                        .fold(PolyVectorField::zero(d), |acc, (j, c)| acc.add(&all[*j].scaled(c)))
                })
                .collect())
        }
        Series::Hamiltonian => exponents(d, (n + 2) as u32)
            .into_iter()
            .map(|e| hamiltonian_field(d, &Polynomial::from([(e, Rational::one())])))
            .collect(),
    }
}

/// `[v, w]` as derivations of the polynomial ring.
pub fn lie_bracket(v: &PolyVectorField, w: &PolyVectorField) -> PolyVectorField {
    let d = v.rank;
    let mut out = PolyVectorField::zero(d);
    for j in 1..=d {
        let vw = v.apply_to(&w.component(j));
        let wv = w.apply_to(&v.component(j));
        for (e, c) in vw {
            out.add_term(e, j - 1, c);
        }
        for (e, c) in wv {
            out.add_term(e, j - 1, -c);
        }
    }
    out
}

/// Whether the Lie derivative of `form` along `v` vanishes.
pub fn preserves_form(v: &PolyVectorField, form: Form) -> Result<bool> {
    form.check_rank(v.rank)?;
    match form {
        Form::Volume => Ok(v.divergence().is_empty()),
        Form::Symplectic => {
            // L_v ω = d(ι_v ω) with ι_v ω = sum_k θ_k dx_k
            let theta: Vec<Polynomial> = (0..v.rank)
                .map(|k| {
                    if k % 2 == 1 {
                        v.component(k)
                    } else {
                        v.component(k + 2).into_iter().map(|(e, c)| (e, -c)).collect()
                    }
                })
                .collect();
            for k in 0..v.rank {
                for l in k + 1..v.rank {
                    if poly_derivative(&theta[l], k) != poly_derivative(&theta[k], l) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}

fn supercharge(d: usize) -> State {
    let mut q = State::zero();
    for i in 1..=d {
        q += &wick(&generator(Kind::Beta, i), &generator(Kind::C, i));
    }
    q
}

/// The field `sum_i Q_(0) :P_i(gamma^1, ..., gamma^d) b^i:` whose zero mode is `L(v)`.
pub fn cartan_field(v: &PolyVectorField) -> State {
    let mut inner = State::zero();
    for (e, dir, c) in v.terms() {
        let mut factors = Vec::new();
        for (i, &p) in e.iter().enumerate() {
            factors.extend((0..p).map(|_| generator(Kind::Gamma, i + 1)));
        }
        factors.push(generator(Kind::B, dir));
        inner.add_scaled(&iterated_wick(&factors), c);
    }
    nth_product(&supercharge(v.rank), 0, &inner)
}

/// `L(v)` compiled for inputs of weight at most `max_weight`.
#[derive(Clone, Debug)]
pub struct CartanOperator {
    expansion: ModeExpansion,
}

impl CartanOperator {
    pub fn new(v: &PolyVectorField, max_weight: i32) -> Self {
        CartanOperator {
            expansion: ModeExpansion::new(&cartan_field(v), 0, max_weight),
        }
    }

    pub fn max_weight(&self) -> i32 {
        self.expansion.max_weight()
    }

    pub fn apply(&self, s: &State) -> State {
        self.expansion.apply(s)
    }
}

/// `L(v) s`.
pub fn cartan_action(v: &PolyVectorField, s: &State) -> State {
    if s.is_zero() {
        return State::zero();
    }
    CartanOperator::new(v, s.max_weight().max(0)).apply(s)
}

/// `g t^n` for `g` in `g_0`, a `d x d` matrix identified with the linear field
/// `sum g_{ji} x_j ∂/∂x_i`.
///
/// On the generators `beta_(-k)`, `b_(-k)`, `c_(-k)` and `alpha_(-k)`,
/// `alpha = ∂gamma`, it substitutes `g` and raises the level by `n`, giving
/// zero once the level would reach `0`. In `gamma` modes this reads
/// `gamma_(-k) -> (k-1-n)/(k-1) gamma^g_(-k+n)` for `n < k - 1`. With this
/// normalization `[g t^n, ∂] = n g t^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G0tElement {
    pub matrix: Matrix,
    pub power: u32,
}

impl G0tElement {
    pub fn new(matrix: Matrix, power: u32) -> Result<Self> {
        matrix.require_square(matrix.nrows())?;
        Ok(G0tElement { matrix, power })
    }

    /// Whether the matrix lies in `Vect_0(V, form)`.
    pub fn lies_in(&self, form: Form) -> Result<bool> {
        preserves_form(&PolyVectorField::from_matrix(&self.matrix)?, form)
    }

    fn image_of_mode(&self, key: &ModeKey) -> Result<State> {
        let d = self.matrix.nrows();
        let i = key.index as usize - 1;
        if i >= d {
            return Err(Error::IndexOutOfRange {
                index: key.index as usize,
                rank: d,
            });
        }
        let mut out = State::zero();
        let k = -key.level;
        let n = self.power as i32;
        let alive = match key.kind {
            Kind::Gamma => n < k - 1,
            _ => n < k,
        };
        if !alive {
            return Ok(out);
        }
        // the mode algebra is generated by alpha = ∂gamma, with alpha_(-m) = m gamma_(-m-1)
        let jet = match key.kind {
            Kind::Gamma => ratio((k - 1 - n) as i64, (k - 1) as i64),
            _ => Rational::one(),
        };
        for t in 0..d {
            let c = match key.kind {
                Kind::Gamma | Kind::C => self.matrix[(t, i)].clone(),
                Kind::Beta | Kind::B => -self.matrix[(i, t)].clone(),
            } * &jet;
            if !c.is_zero() {
                let image = ModeKey::new(key.kind, t + 1, key.level + n);
                out.add_term(Monomial::from_sorted(vec![image]), c);
            }
        }
        Ok(out)
    }

    /// The derivation on one monomial.
    pub fn apply_monomial(&self, m: &Monomial, coeff: &Rational, out: &mut State) -> Result<()> {
        if m.modes().iter().any(|k| k.kind == Kind::Gamma && k.level == -1) {
            return Err(Error::NotInWPlus);
        }
        let modes = m.modes();
        for pos in 0..modes.len() {
            // each factor is replaced in place; the replacements have the same parity
            let image = self.image_of_mode(&modes[pos])?;
            for (single, c) in image.terms() {
                if let Some((sign, out_m)) = m.replace_at(pos, single.modes()[0]) {
                    let v = coeff * c;
                    out.add_term(out_m, if sign < 0 { -v } else { v });
                }
            }
        }
        Ok(())
    }
}

/// `g t^n` applied to a state of `W_+(V)` read as an element of the mode algebra.
pub fn g0t_action(e: &G0tElement, s: &State) -> Result<State> {
    let mut out = State::zero();
    for (m, c) in s.terms() {
        e.apply_monomial(m, c, &mut out)?;
    }
    Ok(out)
}

/// `g_0` as matrices: the degree-zero basis of the series preserving `form`.
pub fn g0_basis(d: usize, form: Form) -> Result<Vec<Matrix>> {
    form.check_rank(d)?;
    Ok(vect_basis(d, 0, form.series())?
        .iter()
        .map(|v| v.to_matrix().expect("degree zero fields are linear"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::enumerate_basis;
    use crate::modes::{apply_mode, translation};

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn basis_sizes() {
        let s = vect_basis(2, -1, Series::Special).unwrap();
        assert_eq!(s, vec![PolyVectorField::partial(2, 1), PolyVectorField::partial(2, 2)]);
        assert_eq!(vect_basis(2, 0, Series::Special).unwrap().len(), 3);
        assert_eq!(vect_basis(2, 0, Series::Hamiltonian).unwrap().len(), 3);
        for d in 1..=3u64 {
            for n in -1..=3i32 {
                let expect = d * binom((d as i64 + n as i64) as u64, (n + 1) as u64);
                assert_eq!(vect_basis(d as usize, n, Series::General).unwrap().len() as u64, expect);
            }
        }
        assert!(matches!(vect_basis(3, 1, Series::Hamiltonian), Err(Error::OddRank { .. })));
        assert!(matches!(vect_basis(2, -2, Series::General), Err(Error::Degree(-2))));
    }

    #[test]
    fn brackets() {
        let d1 = PolyVectorField::partial(2, 1);
        let x1d2 = PolyVectorField::linear(2, 1, 2);
        let x2d1 = PolyVectorField::linear(2, 2, 1);
        assert_eq!(lie_bracket(&d1, &x1d2), PolyVectorField::partial(2, 2));
        assert!(lie_bracket(&x1d2, &x1d2).is_zero());
        let h = PolyVectorField::linear(2, 1, 1).sub(&PolyVectorField::linear(2, 2, 2));
        assert_eq!(lie_bracket(&x1d2, &x2d1), h);
        let v = PolyVectorField::monomial(&[2, 1], 2, rat(3));
        assert_eq!(lie_bracket(&v, &x1d2).degree(), Some(2));
    }

    #[test]
    fn matrices_bracket_like_fields() {
        let g = Matrix::from_i64(&[&[1, 2], &[0, -1]]);
        let h = Matrix::from_i64(&[&[0, 1], &[3, 0]]);
        let vg = PolyVectorField::from_matrix(&g).unwrap();
        let vh = PolyVectorField::from_matrix(&h).unwrap();
        let lhs = lie_bracket(&vg, &vh);
        assert_eq!(lhs, PolyVectorField::from_matrix(&g.commutator(&h)).unwrap());
        assert_eq!(vg.to_matrix().unwrap(), g);
    }

    #[test]
    fn forms() {
        let x1d2 = PolyVectorField::linear(2, 1, 2);
        let x1d1 = PolyVectorField::linear(2, 1, 1);
        let h = x1d1.sub(&PolyVectorField::linear(2, 2, 2));
        assert!(preserves_form(&x1d2, Form::Volume).unwrap());
        assert!(!preserves_form(&x1d1, Form::Volume).unwrap());
        assert!(preserves_form(&h, Form::Symplectic).unwrap());
        assert!(preserves_form(&PolyVectorField::partial(3, 1), Form::Symplectic).is_err());
        for n in -1..=2 {
            for v in vect_basis(2, n, Series::Special).unwrap() {
                assert!(preserves_form(&v, Form::Volume).unwrap());
            }
            for d in [2, 4] {
                for v in vect_basis(d, n, Series::Hamiltonian).unwrap() {
                    assert!(preserves_form(&v, Form::Symplectic).unwrap(), "{v}");
                }
            }
        }
        for n in 0..=2u32 {
            let mut e = vec![0; 2];
            e[0] = n + 1;
            let bad = PolyVectorField::monomial(&e, 1, Rational::one());
            assert!(!preserves_form(&bad, Form::Volume).unwrap());
            assert!(!preserves_form(&bad, Form::Symplectic).unwrap());
        }
    }

    #[test]
    fn translations_act_by_beta_zero() {
        let s = State::from("G[1,-1] G[2,-1] c[1,-1]".parse::<Monomial>().unwrap());
        for j in 1..=2 {
            let v = PolyVectorField::partial(2, j);
            assert_eq!(cartan_action(&v, &s), apply_mode(&ModeKey::beta(j, 0), &s));
        }
    }

    #[test]
    fn expanded_zero_mode_matches_recursion() {
        let v = PolyVectorField::monomial(&[2, 0], 2, rat(1)).add(&PolyVectorField::monomial(&[1, 1], 1, rat(-2)));
        let f = cartan_field(&v);
        for m in enumerate_basis(2, 2, None, 1).elements().iter().step_by(7) {
            let s = State::from(m.clone());
            assert_eq!(cartan_action(&v, &s), nth_product(&f, 0, &s), "{m}");
        }
    }

    #[test]
    fn matrix_convention_is_compatible() {
        let g = Matrix::from_i64(&[&[1, 2], &[-3, -1]]);
        let e = G0tElement::new(g.clone(), 0).unwrap();
        let v = PolyVectorField::from_matrix(&g).unwrap();
        for m in enumerate_basis(2, 2, None, 0).elements() {
            let s = State::from(m.clone());
            assert_eq!(g0t_action(&e, &s).unwrap(), cartan_action(&v, &s), "{m}");
        }
    }

    #[test]
    fn current_algebra_rules() {
        let g = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let t1 = G0tElement::new(g, 1).unwrap();
        let beta = |l| State::from(Monomial::from_sorted(vec![ModeKey::beta(1, l)]));
        assert!(g0t_action(&t1, &beta(-1)).unwrap().is_zero());
        // x_1 ∂_2 sends beta^1 to -beta^2
        let out = g0t_action(&t1, &beta(-2)).unwrap();
        assert_eq!(out, State::from(Monomial::from_sorted(vec![ModeKey::beta(2, -1)])).scaled(&rat(-1)));
        let gamma2 = State::from(Monomial::from_sorted(vec![ModeKey::gamma(1, -2)]));
        let t1b = G0tElement::new(Matrix::identity(2), 1).unwrap();
        assert!(g0t_action(&t1b, &gamma2).unwrap().is_zero());
        // gamma_(-3) = alpha_(-2) / 2 and g t^1 alpha_(-2) = alpha^g_(-1) = gamma^g_(-2)
        let gamma3 = State::from(Monomial::from_sorted(vec![ModeKey::gamma(2, -3)]));
        let half = State::from(Monomial::from_sorted(vec![ModeKey::gamma(2, -2)])).scaled(&ratio(1, 2));
        assert_eq!(g0t_action(&t1b, &gamma3).unwrap(), half);
        let gamma1 = State::from(Monomial::from_sorted(vec![ModeKey::gamma(1, -1)]));
        assert_eq!(g0t_action(&t1b, &gamma1), Err(Error::NotInWPlus));
    }

    #[test]
    fn currents_and_translation() {
        let g = Matrix::from_i64(&[&[1, 2], &[1, -1]]);
        for m in enumerate_basis(2, 3, None, 0).elements().iter().step_by(5) {
            let s = State::from(m.clone());
            for n in 1..=3 {
                let e = G0tElement::new(g.clone(), n).unwrap();
                let lower = G0tElement::new(g.clone(), n - 1).unwrap();
                let lhs = &g0t_action(&e, &translation(&s)).unwrap() - &translation(&g0t_action(&e, &s).unwrap());
                assert_eq!(lhs, g0t_action(&lower, &s).unwrap().scaled(&rat(n as i64)), "{m} n={n}");
            }
        }
    }

    #[test]
    fn current_brackets() {
        let g = Matrix::from_i64(&[&[1, 2], &[0, -1]]);
        let h = Matrix::from_i64(&[&[0, 1], &[3, 0]]);
        for m in enumerate_basis(2, 3, None, 0).elements().iter().step_by(3) {
            let s = State::from(m.clone());
            for (i, j) in [(0, 1), (1, 1), (1, 2)] {
                let gi = G0tElement::new(g.clone(), i).unwrap();
                let hj = G0tElement::new(h.clone(), j).unwrap();
                let both = G0tElement::new(g.commutator(&h), i + j).unwrap();
                let gh = g0t_action(&gi, &g0t_action(&hj, &s).unwrap()).unwrap();
                let hg = g0t_action(&hj, &g0t_action(&gi, &s).unwrap()).unwrap();
                assert_eq!(&gh - &hg, g0t_action(&both, &s).unwrap(), "{m}");
            }
        }
    }
}
