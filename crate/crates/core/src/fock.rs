//! Monomial Fock basis of the rank-d beta-gamma-bc system.
//!
//! Every vector of `W(V)` is a polynomial in the supercommuting creation
//! modes applied to the vacuum. A [`Monomial`] is such a word, kept in
//! canonical order; a [`State`] is a finite rational combination of them.
//! Gradings, basis enumeration and the stable text form live here too.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{rat, Rational};

/// Generator kind. The declaration order is the canonical kind rank
/// `b < c < beta < gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    B,
    C,
    Beta,
    Gamma,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::B, Kind::C, Kind::Beta, Kind::Gamma];

    pub fn is_odd(self) -> bool {
        matches!(self, Kind::B | Kind::C)
    }

    pub fn parity(self) -> Parity {
        if self.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Conformal weight of the generating field.
    pub fn field_weight(self) -> i32 {
        match self {
            Kind::Beta | Kind::B => 1,
            Kind::Gamma | Kind::C => 0,
        }
    }

    /// J_(0) eigenvalue of the generating field.
    pub fn fermion(self) -> i32 {
        match self {
            Kind::C => 1,
            Kind::B => -1,
            _ => 0,
        }
    }

    /// The kind whose modes pair with this one.
    pub fn partner(self) -> Kind {
        match self {
            Kind::B => Kind::C,
            Kind::C => Kind::B,
            Kind::Beta => Kind::Gamma,
            Kind::Gamma => Kind::Beta,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Kind::B => "b",
            Kind::C => "c",
            Kind::Beta => "B",
            Kind::Gamma => "G",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^{|a||b|}`
    pub fn koszul(self, other: Parity) -> i32 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// One mode `a^i_(n)` of a generator `a` in direction `i` (1-based).
///
/// Field order matters: the derived `Ord` is the canonical order
/// (level ascending, then kind rank, then index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModeKey {
    pub level: i32,
    pub kind: Kind,
    pub index: u8,
}

impl ModeKey {
    pub fn new(kind: Kind, index: usize, level: i32) -> Self {
        debug_assert!((1..=255).contains(&index));
        ModeKey {
            level,
            kind,
            index: index as u8,
        }
    }

    pub fn beta(index: usize, level: i32) -> Self {
        Self::new(Kind::Beta, index, level)
    }

    pub fn gamma(index: usize, level: i32) -> Self {
        Self::new(Kind::Gamma, index, level)
    }

    pub fn b(index: usize, level: i32) -> Self {
        Self::new(Kind::B, index, level)
    }

    pub fn c(index: usize, level: i32) -> Self {
        Self::new(Kind::C, index, level)
    }

    pub fn is_odd(&self) -> bool {
        self.kind.is_odd()
    }

    pub fn is_creation(&self) -> bool {
        self.level < 0
    }

    /// Change of conformal weight effected by this mode.
    pub fn weight(&self) -> i32 {
        self.kind.field_weight() - self.level - 1
    }

    /// The creation mode this annihilation mode contracts with.
    pub fn contraction_partner(&self) -> ModeKey {
        ModeKey {
            level: -self.level - 1,
            kind: self.kind.partner(),
            index: self.index,
        }
    }

    pub fn with_level(&self, level: i32) -> ModeKey {
        ModeKey { level, ..*self }
    }

    pub fn with_index(&self, index: usize) -> ModeKey {
        ModeKey::new(self.kind, index, self.level)
    }
}

impl fmt::Display for ModeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind.symbol(), self.index, self.level)
    }
}

impl FromStr for ModeKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        let open = s.find('[').ok_or_else(bad)?;
        let kind = match &s[..open] {
            "b" => Kind::B,
            "c" => Kind::C,
            "B" => Kind::Beta,
            "G" => Kind::Gamma,
            _ => return Err(bad()),
        };
        let inner = s[open + 1..].strip_suffix(']').ok_or_else(bad)?;
        let (idx, lvl) = inner.split_once(',').ok_or_else(bad)?;
        let index: usize = idx.trim().parse().map_err(|_| bad())?;
        let level: i32 = lvl.trim().parse().map_err(|_| bad())?;
        if index == 0 || index > 255 {
            return Err(bad());
        }
        Ok(ModeKey::new(kind, index, level))
    }
}

/// Sign of sorting `word` into canonical order, counting only transpositions
/// of odd modes. `None` when an odd mode repeats.
fn koszul_sort(word: &mut [ModeKey]) -> Option<i32> {
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

/// A canonical word of creation modes applied to the vacuum.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    modes: Vec<ModeKey>,
}

impl Monomial {
    pub fn vacuum() -> Self {
        Monomial { modes: Vec::new() }
    }

    /// Builds a monomial from a word that is already canonical.
    pub(crate) fn from_sorted(modes: Vec<ModeKey>) -> Self {
        debug_assert!(modes.windows(2).all(|w| w[0] <= w[1]));
        Monomial { modes }
    }

    pub fn modes(&self) -> &[ModeKey] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn is_vacuum(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn parity(&self) -> Parity {
        if self.modes.iter().filter(|m| m.is_odd()).count() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn weight(&self) -> i32 {
        self.modes.iter().map(ModeKey::weight).sum()
    }

    pub fn gamma_degree(&self) -> usize {
        self.modes
            .iter()
            .filter(|m| m.kind == Kind::Gamma && m.level == -1)
            .count()
    }

    pub fn count(&self, key: &ModeKey) -> usize {
        self.modes.iter().filter(|m| *m == key).count()
    }

    pub fn gradings(&self) -> GradingVector {
        gradings(self)
    }

    /// Supercommutative product of two creation words.
    pub fn mul(&self, other: &Monomial) -> Option<(i32, Monomial)> {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let mut sign = 1;
        let (mut i, mut j) = (0, 0);
        // odd modes of `self` not yet emitted
        let mut odd_left = self.modes.iter().filter(|m| m.is_odd()).count();
        while i < self.modes.len() || j < other.modes.len() {
            let take_left = match (self.modes.get(i), other.modes.get(j)) {
                (Some(a), Some(b)) => {
                    if a == b && a.is_odd() {
                        return None;
                    }
                    a <= b
                }
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                let a = self.modes[i];
                if a.is_odd() {
                    odd_left -= 1;
                }
                out.push(a);
                i += 1;
            } else {
                let b = other.modes[j];
                if b.is_odd() && odd_left % 2 == 1 {
                    sign = -sign;
                }
                out.push(b);
                j += 1;
            }
        }
        Some((sign, Monomial { modes: out }))
    }

    /// Removes the mode at `pos`, returning the Koszul sign of first moving
    /// it to the front.
    pub(crate) fn remove_at(&self, pos: usize) -> (i32, Monomial) {
        let key = self.modes[pos];
        let sign = if key.is_odd() && self.modes[..pos].iter().filter(|m| m.is_odd()).count() % 2 == 1 {
            -1
        } else {
            1
        };
        let mut modes = self.modes.clone();
        modes.remove(pos);
        (sign, Monomial { modes })
    }

    pub(crate) fn replace_at(&self, pos: usize, key: ModeKey) -> Option<(i32, Monomial)> {
        let mut word = self.modes.clone();
        word[pos] = key;
        let sign = koszul_sort(&mut word)?;
        Some((sign, Monomial { modes: word }))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modes.is_empty() {
            return write!(f, "1");
        }
        for (i, m) in self.modes.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses the text form. Modes may come in any order; the result is the
    /// canonical word (the reordering sign is dropped, see [`State::from_word`]).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::vacuum());
        }
        let raw = s
            .split_whitespace()
            .map(ModeKey::from_str)
            .collect::<Result<Vec<_>>>()?;
        match canonicalize(&raw)? {
            Some((_, m)) => Ok(m),
            None => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Sorts a raw creation word into canonical order.
///
/// Returns the Koszul sign of the sort together with the canonical word, or
/// `None` when an odd mode repeats (its square vanishes).
pub fn canonicalize(raw: &[ModeKey]) -> Result<Option<(i32, Monomial)>> {
    if let Some(bad) = raw.iter().find(|m| !m.is_creation()) {
        return Err(Error::AnnihilationMode(*bad));
    }
    let mut word = raw.to_vec();
    Ok(koszul_sort(&mut word).map(|sign| (sign, Monomial { modes: word })))
}

/// Gradings of a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingVector {
    /// Conformal weight (L_(1) eigenvalue).
    pub weight: i32,
    /// Fermion number (J_(0) eigenvalue).
    pub fermion: i32,
    /// `#c + 2 #gamma`. A gamma_(-1) factor counts 2 as well.
    pub sw_degree: u32,
    pub gamma_degree: u32,
    pub parity: Parity,
}

impl std::ops::Add for GradingVector {
    type Output = GradingVector;

    fn add(self, o: GradingVector) -> GradingVector {
        GradingVector {
            weight: self.weight + o.weight,
            fermion: self.fermion + o.fermion,
            sw_degree: self.sw_degree + o.sw_degree,
            gamma_degree: self.gamma_degree + o.gamma_degree,
            parity: self.parity.add(o.parity),
        }
    }
}

pub fn gradings(m: &Monomial) -> GradingVector {
    let mut g = GradingVector {
        weight: 0,
        fermion: 0,
        sw_degree: 0,
        gamma_degree: 0,
        parity: Parity::Even,
    };
    for key in m.modes() {
        g.weight += key.weight();
        g.fermion += key.kind.fermion();
        match key.kind {
            Kind::C => g.sw_degree += 1,
            Kind::Gamma => {
                g.sw_degree += 2;
                if key.level == -1 {
                    g.gamma_degree += 1;
                }
            }
            _ => {}
        }
        g.parity = g.parity.add(key.kind.parity());
    }
    g
}

/// A finite rational combination of monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct State {
    terms: BTreeMap<Monomial, Rational>,
}

impl State {
    pub fn zero() -> Self {
        State::default()
    }

    pub fn vacuum() -> Self {
        State::from(Monomial::vacuum())
    }

    pub fn term(coeff: Rational, m: Monomial) -> Self {
        let mut s = State::zero();
        s.add_term(m, coeff);
        s
    }

    /// State of a raw creation word (canonicalized with its sign).
    pub fn from_word(raw: &[ModeKey]) -> Result<Self> {
        Ok(match canonicalize(raw)? {
            Some((sign, m)) => State::term(rat(sign as i64), m),
            None => State::zero(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &State, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> State {
        let mut out = State::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn max_weight(&self) -> i32 {
        self.terms.keys().map(Monomial::weight).max().unwrap_or(0)
    }

    pub fn max_gamma_degree(&self) -> usize {
        self.terms.keys().map(Monomial::gamma_degree).max().unwrap_or(0)
    }

    /// Common parity of all terms, `None` for zero or mixed states.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Splits into (even part, odd part).
    pub fn split_parity(&self) -> (State, State) {
        let mut even = State::zero();
        let mut odd = State::zero();
        for (m, c) in &self.terms {
            let target = if m.parity().is_odd() { &mut odd } else { &mut even };
            target.terms.insert(m.clone(), c.clone());
        }
        (even, odd)
    }

    /// Keeps only terms accepted by `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&Monomial) -> bool) -> State {
        State {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| pred(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product in the supercommutative algebra of creation modes.
    pub fn mul(&self, other: &State) -> State {
        let mut out = State::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, m)) = a.mul(b) {
                    let c = ca * cb;
                    out.add_term(m, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }
}

impl From<Monomial> for State {
    fn from(m: Monomial) -> Self {
        State::term(Rational::one(), m)
    }
}

impl FromIterator<(Monomial, Rational)> for State {
    fn from_iter<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut s = State::zero();
        for (m, c) in iter {
            s.add_term(m, c);
        }
        s
    }
}

impl std::ops::Add<&State> for &State {
    type Output = State;
    fn add(self, o: &State) -> State {
        let mut s = self.clone();
        s.add_scaled(o, &Rational::one());
        s
    }
}

impl std::ops::Sub<&State> for &State {
    type Output = State;
    fn sub(self, o: &State) -> State {
        let mut s = self.clone();
        s.add_scaled(o, &-Rational::one());
        s
    }
}

impl std::ops::Neg for &State {
    type Output = State;
    fn neg(self) -> State {
        self.scaled(&-Rational::one())
    }
}

impl std::ops::AddAssign<&State> for State {
    fn add_assign(&mut self, o: &State) {
        self.add_scaled(o, &Rational::one());
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact linear combination `sum coeffs[i] * states[i]`.
pub fn linear_combine(coeffs: &[Rational], states: &[State]) -> State {
    let mut out = State::zero();
    for (c, s) in coeffs.iter().zip(states) {
        out.add_scaled(s, c);
    }
    out
}

/// Ordered basis of a graded piece of `W(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpaceBasis {
    pub rank: usize,
    pub weight: i32,
    pub fermion: Option<i32>,
    pub gamma_degree_bound: usize,
    elements: Vec<Monomial>,
}

impl WeightSpaceBasis {
    /// Basis from an explicit list of monomials (sorted, deduplicated).
    pub fn from_monomials(rank: usize, weight: i32, fermion: Option<i32>, gamma_degree_bound: usize, mut elements: Vec<Monomial>) -> Self {
        elements.sort();
        elements.dedup();
        WeightSpaceBasis {
            rank,
            weight,
            fermion,
            gamma_degree_bound,
            elements,
        }
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    pub fn state(&self, i: usize) -> State {
        State::from(self.elements[i].clone())
    }

    /// Coordinates of a state; `None` if it has a term outside the basis.
    pub fn coordinates(&self, s: &State) -> Option<Vec<(usize, Rational)>> {
        s.terms()
            .map(|(m, c)| self.position(m).map(|i| (i, c.clone())))
            .collect()
    }

    /// Splits into one basis per fermion number.
    pub fn by_fermion(&self) -> BTreeMap<i32, WeightSpaceBasis> {
        let mut out: BTreeMap<i32, Vec<Monomial>> = BTreeMap::new();
        for m in &self.elements {
            out.entry(m.gradings().fermion).or_default().push(m.clone());
        }
        out.into_iter()
            .map(|(f, elems)| (f, WeightSpaceBasis::from_monomials(self.rank, self.weight, Some(f), self.gamma_degree_bound, elems)))
            .collect()
    }
}

/// Creation modes of weight at most `max_weight`, in canonical order.
fn creation_alphabet(rank: usize, max_weight: i32, with_gamma_zero: bool) -> Vec<ModeKey> {
    let mut keys = Vec::new();
    for kind in Kind::ALL {
        for index in 1..=rank {
            let mut level = -1;
            loop {
                let key = ModeKey::new(kind, index, level);
                if key.weight() > max_weight {
                    break;
                }
                if !(kind == Kind::Gamma && level == -1 && !with_gamma_zero) {
                    keys.push(key);
                }
                level -= 1;
            }
        }
    }
    keys.sort();
    keys
}

/// All canonical monomials of conformal weight exactly `weight` with at most
/// `gamma_degree_bound` factors of gamma_(-1), optionally restricted to one
/// fermion number. The result is sorted.
pub fn enumerate_basis(rank: usize, weight: i32, fermion: Option<i32>, gamma_degree_bound: usize) -> WeightSpaceBasis {
    let alphabet = creation_alphabet(rank, weight.max(0), gamma_degree_bound > 0);
    let mut found = Vec::new();
    if weight >= 0 {
        let mut word = Vec::new();
        extend_words(&alphabet, 0, weight, gamma_degree_bound, &mut word, &mut found);
    }
    if let Some(f) = fermion {
        found.retain(|m| m.gradings().fermion == f);
    }
    WeightSpaceBasis::from_monomials(rank, weight, fermion, gamma_degree_bound, found)
}

fn extend_words(alphabet: &[ModeKey], start: usize, remaining: i32, gamma_left: usize, word: &mut Vec<ModeKey>, out: &mut Vec<Monomial>) {
    if remaining == 0 {
        out.push(Monomial::from_sorted(word.clone()));
    }
    for i in start..alphabet.len() {
        let key = alphabet[i];
        let w = key.weight();
        if w > remaining {
            continue;
        }
        let is_gamma_zero = key.kind == Kind::Gamma && key.level == -1;
        if is_gamma_zero && gamma_left == 0 {
            continue;
        }
        word.push(key);
        // even modes may repeat, odd modes may not
        let next = if key.is_odd() { i + 1 } else { i };
        extend_words(alphabet, next, remaining - w, gamma_left - usize::from(is_gamma_zero), word, out);
        word.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn odd_square_vanishes() {
        let b = ModeKey::b(1, -1);
        assert_eq!(canonicalize(&[b, b]).unwrap(), None);
    }

    #[test]
    fn odd_transposition_sign() {
        let (sign, mono) = canonicalize(&[ModeKey::c(2, -1), ModeKey::c(1, -1)]).unwrap().unwrap();
        assert_eq!(sign, -1);
        assert_eq!(mono.modes(), &[ModeKey::c(1, -1), ModeKey::c(2, -1)]);
    }

    #[test]
    fn even_modes_commute() {
        let raw = [ModeKey::beta(1, -2), ModeKey::gamma(1, -1), ModeKey::beta(1, -1)];
        let (sign, mono) = canonicalize(&raw).unwrap().unwrap();
        assert_eq!(sign, 1);
        assert_eq!(mono.modes(), &[ModeKey::beta(1, -2), ModeKey::beta(1, -1), ModeKey::gamma(1, -1)]);
    }

    #[test]
    fn rejects_annihilation_modes() {
        assert!(matches!(canonicalize(&[ModeKey::beta(1, 0)]), Err(Error::AnnihilationMode(_))));
        assert!(matches!(canonicalize(&[ModeKey::gamma(1, 0)]), Err(Error::AnnihilationMode(_))));
    }

    #[test]
    fn grading_examples() {
        let g = gradings(&m("B[1,-1]"));
        assert_eq!((g.weight, g.fermion), (1, 0));
        assert_eq!(gradings(&m("c[1,-1] G[2,-2]")).sw_degree, 3);
        let g = gradings(&Monomial::vacuum());
        assert_eq!((g.weight, g.fermion, g.sw_degree), (0, 0, 0));
    }

    #[test]
    fn small_bases() {
        let b = enumerate_basis(1, 0, None, 0);
        assert_eq!(b.elements(), &[Monomial::vacuum(), m("c[1,-1]")]);
        assert_eq!(enumerate_basis(1, 1, None, 0).len(), 8);
        assert_eq!(enumerate_basis(1, 0, Some(0), 0).elements(), &[Monomial::vacuum()]);
    }

    #[test]
    fn gamma_zero_is_bounded() {
        let b = enumerate_basis(1, 0, None, 2);
        // 1, G, G^2 each with or without c_(-1)
        assert_eq!(b.len(), 6);
        assert!(b.elements().iter().all(|x| x.gamma_degree() <= 2));
    }

    #[test]
    fn combine() {
        let s = State::from(m("b[1,-1] c[2,-3]"));
        let half = Rational::new(1.into(), 2.into());
        assert!(linear_combine(&[rat(1), rat(-1)], &[s.clone(), s.clone()]).is_zero());
        assert_eq!(linear_combine(&[rat(2)], &[s.scaled(&half)]), s);
        assert!(linear_combine(&[], &[]).is_zero());
    }

    #[test]
    fn text_form_round_trips() {
        let mono = m("b[1,-1] c[2,-3] G[1,-1]");
        assert_eq!(mono.to_string(), "c[2,-3] b[1,-1] G[1,-1]");
        assert_eq!(m(&mono.to_string()), mono);
        assert!("x[1,-1]".parse::<Monomial>().is_err());
    }

    #[test]
    fn monomial_product_sign() {
        let a = m("c[1,-1]");
        let b = m("b[1,-1]");
        // c1 * b1 = -(b1 c1)
        let (sign, prod) = a.mul(&b).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(prod, m("b[1,-1] c[1,-1]"));
        assert!(a.mul(&a).is_none());
    }
}
