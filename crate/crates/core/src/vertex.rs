//! n-th products, Wick products, OPEs and the named generating fields.
//!
//! [`nth_product`] peels the leftmost mode of each monomial of `a`: a monomial
//! `x_(-j-1) r` is the Wick product `:u r:` with `u = ∂^j x / j!`, and
//!
//! ```text
//! :u r:_(n) s = sum_{k<0} u_(k) r_(n-k-1) s + (-1)^{|u||r|} sum_{k>=0} r_(n-k-1) u_(k) s
//! ```
//!
//! The sums are cut off by conformal weight, which is non-negative on `W(V)`.
//! [`ModeExpansion`] is the same expansion carried out once at the operator
//! level, for applying a fixed mode of a fixed field to many states.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{canonicalize, Kind, ModeKey, Monomial, Parity, State};
use crate::linalg::Matrix;
use crate::modes::{apply_mode, apply_mode_monomial, derivative_mode_coefficient, divided_translation};
use crate::{rat, Rational};

/// The state `x^i_(-1) 1` of a generator.
pub fn generator(kind: Kind, index: usize) -> State {
    State::from(Monomial::from_sorted(vec![ModeKey::new(kind, index, -1)]))
}

/// `a_(n) b`.
pub fn nth_product(a: &State, n: i32, b: &State) -> State {
    let mut out = State::zero();
    if b.is_zero() {
        return out;
    }
    for (m, c) in a.terms() {
        let part = monomial_product(m, n, b);
        out.add_scaled(&part, c);
    }
    out
}

fn monomial_product(m: &Monomial, n: i32, s: &State) -> State {
    if s.is_zero() {
        return State::zero();
    }
    if m.is_vacuum() {
        return if n == -1 { s.clone() } else { State::zero() };
    }
    let first = m.modes()[0];
    let (_, rest) = m.remove_at(0);
    let j = (-first.level - 1) as u32;
    let x = first.with_level(-1);
    let w_rest = rest.weight();
    let w_s = s.max_weight();
    let mut out = State::zero();

    // creation part of u
    let k_lo = n - w_rest - w_s;
    for k in k_lo..0 {
        let inner = monomial_product(&rest, n - k - 1, s);
        if inner.is_zero() {
            continue;
        }
        let coeff = derivative_mode_coefficient(k, j);
        let image = apply_mode(&x.with_level(k - j as i32), &inner);
        out.add_scaled(&image, &coeff);
    }

    // annihilation part of u
    let sign = first.kind.parity().koszul(rest.parity());
    let k_hi = j as i32 + w_s + x.kind.field_weight() - 1;
    for k in (j as i32)..=k_hi {
        let coeff = derivative_mode_coefficient(k, j);
        if coeff.is_zero() {
            continue;
        }
        let inner = apply_mode(&x.with_level(k - j as i32), s);
        if inner.is_zero() {
            continue;
        }
        let image = monomial_product(&rest, n - k - 1, &inner);
        out.add_scaled(&image, &(coeff * rat(sign as i64)));
    }
    out
}

/// `:a b:`
pub fn wick(a: &State, b: &State) -> State {
    nth_product(a, -1, b)
}

/// `:a_1 a_2 ... a_k:`, nested to the right. The empty product is the vacuum.
pub fn iterated_wick(factors: &[State]) -> State {
    match factors.split_first() {
        None => State::vacuum(),
        Some((head, tail)) => wick(head, &iterated_wick(tail)),
    }
}

/// The singular part of the OPE: every nonzero `a_(n) b` with `n >= 0`.
pub fn ope_singular(a: &State, b: &State) -> BTreeMap<i32, State> {
    let top = a.max_weight() + b.max_weight();
    (0..top.max(0))
        .filter_map(|n| {
            let p = nth_product(a, n, b);
            (!p.is_zero()).then_some((n, p))
        })
        .collect()
}

/// Right-hand side of the skew-symmetry identity
/// `a_(n) b = sum_k (-1)^{k+1} (-1)^{|a||b|} (b_(k) a)_(n-k-1) 1`,
/// evaluated bilinearly over parity components.
pub fn skew_symmetry_rhs(a: &State, b: &State, n: i32) -> State {
    let (a0, a1) = a.split_parity();
    let (b0, b1) = b.split_parity();
    let mut out = State::zero();
    for (ap, pa) in [(&a0, Parity::Even), (&a1, Parity::Odd)] {
        for (bp, pb) in [(&b0, Parity::Even), (&b1, Parity::Odd)] {
            if ap.is_zero() || bp.is_zero() {
                continue;
            }
            let koszul = pa.koszul(pb);
            let top = ap.max_weight() + bp.max_weight();
            // (X)_(n-k-1) 1 vanishes for n-k-1 >= 0 and is ∂^{k-n} X / (k-n)! otherwise
            for k in n..top {
                let inner = nth_product(bp, k, ap);
                if inner.is_zero() {
                    continue;
                }
                let term = divided_translation(&inner, (k - n) as u32);
                let sign = if (k + 1).rem_euclid(2) == 0 { 1 } else { -1 } * koszul;
                out.add_scaled(&term, &rat(sign as i64));
            }
        }
    }
    out
}

pub fn skew_symmetry_check(a: &State, b: &State, n: i32) -> bool {
    nth_product(a, n, b) == skew_symmetry_rhs(a, b, n)
}

/// The generating fields at rank `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCatalog {
    pub rank: usize,
    pub q: State,
    pub l: State,
    pub j: State,
    pub g: State,
    pub d: State,
    pub e: State,
    pub b: State,
    pub c: State,
    primed: Option<PrimedFields>,
}

/// `D', E', B', C'`, defined for even rank only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimedFields {
    pub d: State,
    pub e: State,
    pub b: State,
    pub c: State,
}

/// Which eight generators to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorSet {
    /// Q, L, J, G, B, C, D, E
    Odake,
    /// Q, L, J, G, B', C', D', E'
    SmallN4,
}

impl FieldCatalog {
    pub fn primed(&self) -> Result<&PrimedFields> {
        self.primed.as_ref().ok_or(Error::OddRank {
            what: "the fields D', E', B', C'",
            rank: self.rank,
        })
    }

    /// The N=2 fields `Q, L, J, G`.
    pub fn n2(&self) -> [(&'static str, &State); 4] {
        [("Q", &self.q), ("L", &self.l), ("J", &self.j), ("G", &self.g)]
    }

    pub fn generators(&self, set: GeneratorSet) -> Result<Vec<(&'static str, State)>> {
        let mut out: Vec<(&'static str, State)> = self.n2().iter().map(|(n, s)| (*n, (*s).clone())).collect();
        match set {
            GeneratorSet::Odake => {
                out.extend([("B", self.b.clone()), ("C", self.c.clone()), ("D", self.d.clone()), ("E", self.e.clone())]);
            }
            GeneratorSet::SmallN4 => {
                let p = self.primed()?;
                out.extend([("B'", p.b.clone()), ("C'", p.c.clone()), ("D'", p.d.clone()), ("E'", p.e.clone())]);
            }
        }
        Ok(out)
    }
}

/// Builds `Q, L, J, G, B, C, D, E` and, for even `d`, the primed fields.
pub fn standard_fields(d: usize) -> Result<FieldCatalog> {
    if d == 0 {
        return Err(Error::ZeroRank);
    }
    let beta = |i| generator(Kind::Beta, i);
    let gamma = |i| generator(Kind::Gamma, i);
    let b = |i| generator(Kind::B, i);
    let c = |i| generator(Kind::C, i);
    let d_gamma = |i| crate::modes::translation(&gamma(i));
    let d_c = |i| crate::modes::translation(&c(i));

    let mut q = State::zero();
    let mut l = State::zero();
    let mut j = State::zero();
    let mut g = State::zero();
    for i in 1..=d {
        q += &wick(&beta(i), &c(i));
        l += &(&wick(&beta(i), &d_gamma(i)) - &wick(&b(i), &d_c(i)));
        j += &-&wick(&b(i), &c(i));
        g += &wick(&b(i), &d_gamma(i));
    }
    let dd = iterated_wick(&(1..=d).map(b).collect::<Vec<_>>());
    let ee = iterated_wick(&(1..=d).map(c).collect::<Vec<_>>());
    let bb = nth_product(&q, 0, &dd);
    let cc = nth_product(&g, 0, &ee);

    let primed = (d % 2 == 0).then(|| {
        let mut dp = State::zero();
        let mut ep = State::zero();
        for i in 1..=d / 2 {
            dp += &wick(&b(2 * i - 1), &b(2 * i));
            ep += &wick(&c(2 * i - 1), &c(2 * i));
        }
        PrimedFields {
            b: nth_product(&q, 0, &dp),
            c: nth_product(&g, 0, &ep),
            d: dp,
            e: ep,
        }
    });

    Ok(FieldCatalog {
        rank: d,
        q,
        l,
        j,
        g,
        d: dd,
        e: ee,
        b: bb,
        c: cc,
        primed,
    })
}

/// The automorphism `W(ψ)` of an invertible `ψ ∈ GL(V)`:
/// `beta^{x'} -> beta^{ψ x'}`, `b^{x'} -> b^{ψ x'}`,
/// `gamma^x -> gamma^{(ψ*)^{-1} x}`, `c^x -> c^{(ψ*)^{-1} x}`.
#[derive(Clone, Debug)]
pub struct LinearIso {
    psi: Matrix,
    inv: Matrix,
}

impl LinearIso {
    pub fn new(psi: &Matrix) -> Result<Self> {
        psi.require_square(psi.nrows())?;
        let inv = psi.inverse()?;
        Ok(LinearIso { psi: psi.clone(), inv })
    }

    pub fn rank(&self) -> usize {
        self.psi.nrows()
    }

    fn image_of_mode(&self, key: &ModeKey) -> State {
        let i = key.index as usize - 1;
        let d = self.rank();
        let mut out = State::zero();
        for t in 0..d {
            // beta^{x'_i} -> sum_t psi_{ti} beta^t ; gamma^{x_i} -> sum_t (psi^{-1})_{it} gamma^t
            let c = match key.kind {
                Kind::Beta | Kind::B => self.psi[(t, i)].clone(),
                Kind::Gamma | Kind::C => self.inv[(i, t)].clone(),
            };
            if !c.is_zero() {
                out.add_term(Monomial::from_sorted(vec![key.with_index(t + 1)]), c);
            }
        }
        out
    }

    pub fn apply(&self, s: &State) -> Result<State> {
        let mut out = State::zero();
        for (m, c) in s.terms() {
            let mut acc = State::vacuum();
            for key in m.modes() {
                if key.index as usize > self.rank() {
                    return Err(Error::IndexOutOfRange {
                        index: key.index as usize,
                        rank: self.rank(),
                    });
                }
                acc = acc.mul(&self.image_of_mode(key));
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }
}

pub fn apply_linear_iso(psi: &Matrix, s: &State) -> Result<State> {
    LinearIso::new(psi)?.apply(s)
}

/// A fixed mode `F_(n)` of a fixed field, expanded into normally ordered
/// strings of generator modes (creators left, annihilators right).
///
/// The expansion is truncated to annihilator strings lowering the weight by
/// at most `max_weight`, so it is exact on states of weight `<= max_weight`.
#[derive(Clone, Debug)]
pub struct ModeExpansion {
    level: i32,
    max_weight: i32,
    groups: Vec<(Vec<ModeKey>, Vec<(Monomial, Rational)>)>,
}

struct Letter {
    key: ModeKey,
    j: u32,
}

impl Letter {
    fn max_k(&self, budget: i32) -> i32 {
        let top = budget + self.key.kind.field_weight() - 1;
        if top >= 0 {
            self.j as i32 + top
        } else {
            -1
        }
    }

    /// Weight lowered by the annihilator chosen for mode index `k >= j`.
    fn drop(&self, k: i32) -> i32 {
        let p = k - self.j as i32;
        p + 1 - self.key.kind.field_weight()
    }
}

impl ModeExpansion {
    pub fn new(field: &State, level: i32, max_weight: i32) -> Self {
        let mut acc: BTreeMap<Vec<ModeKey>, BTreeMap<Monomial, Rational>> = BTreeMap::new();
        for (m, c) in field.terms() {
            let letters: Vec<Letter> = m
                .modes()
                .iter()
                .map(|k| Letter {
                    key: k.with_level(-1),
                    j: (-k.level - 1) as u32,
                })
                .collect();
            if letters.is_empty() {
                // the vacuum field is the identity operator
                if level == -1 {
                    acc.entry(Vec::new()).or_default().insert(Monomial::vacuum(), c.clone());
                }
                continue;
            }
            let target = level + 1 - letters.len() as i32;
            let mut ks = Vec::with_capacity(letters.len());
            enumerate_modes(&letters, target, 0, max_weight, &mut ks, &mut |ks| {
                emit_term(&letters, ks, c, &mut acc);
            });
        }
        let groups = acc
            .into_iter()
            .map(|(ann, cre)| (ann, cre.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()))
            .filter(|(_, cre)| !cre.is_empty())
            .collect();
        ModeExpansion { level, max_weight, groups }
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn max_weight(&self) -> i32 {
        self.max_weight
    }

    pub fn term_count(&self) -> usize {
        self.groups.iter().map(|(_, c)| c.len()).sum()
    }

    pub fn apply_monomial(&self, m: &Monomial, coeff: &Rational, out: &mut State) {
        assert!(m.weight() <= self.max_weight, "mode expansion truncated below input weight");
        for (ann, cre) in &self.groups {
            let mut cur = (1i64, m.clone());
            let mut alive = true;
            for op in ann.iter().rev() {
                match apply_mode_monomial(op, &cur.1) {
                    Some((k, next)) => cur = (cur.0 * k, next),
                    None => {
                        alive = false;
                        break;
                    }
                }
            }
            if !alive {
                continue;
            }
            let base = coeff * rat(cur.0);
            for (c_mono, c) in cre {
                if let Some((sign, image)) = c_mono.mul(&cur.1) {
                    let v = &base * c;
                    out.add_term(image, if sign < 0 { -v } else { v });
                }
            }
        }
    }

    pub fn apply(&self, s: &State) -> State {
        let mut out = State::zero();
        for (m, c) in s.terms() {
            self.apply_monomial(m, c, &mut out);
        }
        out
    }
}

fn enumerate_modes(letters: &[Letter], target: i32, sum: i32, budget: i32, ks: &mut Vec<i32>, emit: &mut dyn FnMut(&[i32])) {
    let idx = ks.len();
    let letter = &letters[idx];
    let valid = |k: i32, budget: i32| -> Option<i32> {
        // returns the remaining budget if k is an admissible choice
        if k < 0 {
            Some(budget)
        } else if k < letter.j as i32 {
            None
        } else {
            let left = budget - letter.drop(k);
            (left >= 0).then_some(left)
        }
    };
    if idx + 1 == letters.len() {
        let k = target - sum;
        if valid(k, budget).is_some() {
            ks.push(k);
            emit(ks);
            ks.pop();
        }
        return;
    }
    let hi_rest: i32 = letters[idx + 1..].iter().map(|l| l.max_k(budget)).sum();
    let lo = target - sum - hi_rest;
    let hi = letter.max_k(budget);
    for k in lo..=hi {
        if let Some(left) = valid(k, budget) {
            ks.push(k);
            enumerate_modes(letters, target, sum + k, left, ks, emit);
            ks.pop();
        }
    }
}

fn emit_term(letters: &[Letter], ks: &[i32], coeff: &Rational, acc: &mut BTreeMap<Vec<ModeKey>, BTreeMap<Monomial, Rational>>) {
    let mut c = coeff.clone();
    let mut creators = Vec::new();
    let mut annihilators = Vec::new();
    let mut sign = 1i64;
    let mut odd_annihilators_seen = 0usize;
    for (letter, &k) in letters.iter().zip(ks) {
        c *= derivative_mode_coefficient(k, letter.j);
        let key = letter.key.with_level(k - letter.j as i32);
        if key.is_creation() {
            // moving this creator left past every odd annihilator already placed
            if key.is_odd() && odd_annihilators_seen % 2 == 1 {
                sign = -sign;
            }
            creators.push(key);
        } else {
            if key.is_odd() {
                odd_annihilators_seen += 1;
            }
            annihilators.push(key);
        }
    }
    if c.is_zero() {
        return;
    }
    let Some((s1, cre)) = canonicalize(&creators).expect("creation modes") else {
        return;
    };
    let Some(s2) = sort_annihilators(&mut annihilators) else {
        return;
    };
    let total = sign * s1 as i64 * s2 as i64;
    let v = if total < 0 { -c } else { c };
    let slot = acc.entry(annihilators).or_default().entry(cre).or_insert_with(Rational::zero);
    *slot += v;
}

fn sort_annihilators(word: &mut [ModeKey]) -> Option<i32> {
    let mut sign = 1;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i].is_odd() && word[j].is_odd() {
                if word[i] == word[j] {
                    return None;
                }
                if word[i] > word[j] {
                    sign = -sign;
                }
            }
        }
    }
    word.sort();
    Some(sign)
}

/// `a_(n) b` through a compiled [`ModeExpansion`].
pub fn nth_product_expanded(a: &State, n: i32, b: &State) -> State {
    ModeExpansion::new(a, n, b.max_weight()).apply(b)
}

/// J_(0) eigenvalue of `s`, when `s` is an eigenvector.
pub fn fermion_eigenvalue(j_field: &State, s: &State) -> Option<Rational> {
    let image = nth_product(j_field, 0, s);
    let (m, c) = s.terms().next()?;
    let lambda = image.coeff(m) / c;
    (image == s.scaled(&lambda)).then_some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> State {
        let raw: Vec<ModeKey> = s.split_whitespace().map(|t| t.parse().unwrap()).collect();
        State::from_word(&raw).unwrap()
    }

    #[test]
    fn basic_products() {
        let beta = generator(Kind::Beta, 1);
        let gamma = generator(Kind::Gamma, 1);
        assert_eq!(nth_product(&beta, 0, &gamma), State::vacuum());
        let b = generator(Kind::B, 1);
        let c = generator(Kind::C, 1);
        assert_eq!(nth_product(&b, -1, &c), st("b[1,-1] c[1,-1]"));
        assert!(wick(&c, &c).is_zero());
        assert_eq!(wick(&State::vacuum(), &b), b);
    }

    #[test]
    fn rank_one_fields() {
        let f = standard_fields(1).unwrap();
        assert_eq!(f.d, st("b[1,-1]"));
        assert_eq!(nth_product(&f.q, 0, &f.d), st("B[1,-1]"));
        assert_eq!(f.b, st("B[1,-1]"));
        assert_eq!(f.c, st("G[1,-2]"));
        assert!(f.primed().is_err());
    }

    #[test]
    fn rank_two_primed() {
        let f = standard_fields(2).unwrap();
        let p = f.primed().unwrap();
        assert_eq!(p.e, st("c[1,-1] c[2,-1]"));
        assert_eq!(f.e, iterated_wick(&[generator(Kind::C, 1), generator(Kind::C, 2)]));
    }

    #[test]
    fn jj_and_pairing() {
        for d in 1..=3 {
            let f = standard_fields(d).unwrap();
            let ope = ope_singular(&f.j, &f.j);
            assert_eq!(ope.get(&1), Some(&State::vacuum().scaled(&rat(d as i64))));
            assert!(!ope.contains_key(&0));
        }
        assert!(ope_singular(&generator(Kind::Beta, 1), &generator(Kind::Gamma, 2)).is_empty());
    }

    #[test]
    fn skew_symmetry_small() {
        let beta = generator(Kind::Beta, 1);
        let gamma = generator(Kind::Gamma, 1);
        assert!(skew_symmetry_check(&beta, &gamma, 0));
        let b = generator(Kind::B, 1);
        let c = generator(Kind::C, 1);
        assert!(skew_symmetry_check(&b, &c, 0));
        // c_(0) b = +1: the odd sign cancels the (-1)^{k+1} at k = 0
        assert_eq!(nth_product(&c, 0, &b), State::vacuum());
        let f = standard_fields(2).unwrap();
        for n in 0..3 {
            assert!(skew_symmetry_check(&f.q, &f.g, n), "n = {n}");
        }
    }

    #[test]
    fn linear_iso_examples() {
        let id = Matrix::identity(2);
        let f = standard_fields(2).unwrap();
        assert_eq!(apply_linear_iso(&id, &f.l).unwrap(), f.l);
        let two = Matrix::from_i64(&[&[2]]);
        let beta = generator(Kind::Beta, 1);
        let gamma = generator(Kind::Gamma, 1);
        assert_eq!(apply_linear_iso(&two, &beta).unwrap(), beta.scaled(&rat(2)));
        assert_eq!(apply_linear_iso(&two, &gamma).unwrap(), gamma.scaled(&crate::ratio(1, 2)));
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(apply_linear_iso(&swap, &f.q).unwrap(), f.q);
        let singular = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(apply_linear_iso(&singular, &f.q), Err(Error::SingularMatrix));
    }

    #[test]
    fn expansion_matches_recursion() {
        let f = standard_fields(2).unwrap();
        let targets = [st("B[1,-2] c[2,-1]"), st("b[1,-1] G[2,-2] G[1,-1]"), f.c.clone(), f.g.clone()];
        for field in [&f.q, &f.l, &f.j, &f.g, &f.b] {
            for t in &targets {
                for n in -2..3 {
                    assert_eq!(nth_product_expanded(field, n, t), nth_product(field, n, t), "field {field} n {n} on {t}");
                }
            }
        }
    }
}
