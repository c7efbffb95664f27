//! Generator modes acting on states.
//!
//! Creation modes (level < 0) multiply; annihilation modes (level >= 0) act
//! as (super)derivations through the contractions
//! `[beta^i_(m), gamma^j_(n)] = delta_ij delta_{m+n+1,0}` and
//! `{b^i_(m), c^j_(n)} = delta_ij delta_{m+n+1,0}`.
//! In particular `gamma^i_(m)` for `m >= 0` is `-d/d beta^i_(-m-1)`.

use crate::fock::{Kind, ModeKey, Monomial, State};
use crate::{rat, Rational};

/// A generator mode with unrestricted level.
pub type ModeOperator = ModeKey;

/// Action of one mode on one monomial, as `(coefficient, monomial)` pairs.
pub(crate) fn apply_mode_monomial(op: &ModeKey, m: &Monomial) -> Option<(i64, Monomial)> {
    if op.is_creation() {
        let single = Monomial::from_sorted(vec![*op]);
        return single.mul(m).map(|(sign, out)| (sign as i64, out));
    }
    let partner = op.contraction_partner();
    let pos = m.modes().iter().position(|k| *k == partner)?;
    if op.is_odd() {
        let (sign, rest) = m.remove_at(pos);
        Some((sign as i64, rest))
    } else {
        let mult = m.count(&partner) as i64;
        let (_, rest) = m.remove_at(pos);
        let sign = if op.kind == Kind::Gamma { -1 } else { 1 };
        Some((sign * mult, rest))
    }
}

/// Applies a single generator mode to a state.
pub fn apply_mode(op: &ModeOperator, s: &State) -> State {
    let mut out = State::zero();
    for (m, c) in s.terms() {
        if let Some((k, image)) = apply_mode_monomial(op, m) {
            out.add_term(image, c * rat(k));
        }
    }
    out
}

/// Applies `ops[0] ops[1] ... ops[last]` to `s`, rightmost first.
pub fn apply_mode_sequence(ops: &[ModeOperator], s: &State) -> State {
    let mut cur = s.clone();
    for op in ops.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = apply_mode(op, &cur);
    }
    cur
}

/// The translation operator, the even derivation `P_(-k) -> k P_(-k-1)`.
pub fn translation(s: &State) -> State {
    let mut out = State::zero();
    for (m, c) in s.terms() {
        for (pos, key) in m.modes().iter().enumerate() {
            let k = -key.level;
            if let Some((sign, image)) = m.replace_at(pos, key.with_level(key.level - 1)) {
                out.add_term(image, c * rat(sign as i64 * k as i64));
            }
        }
    }
    out
}

/// `∂^j s / j!`, the state whose (-1)-mode is the (-j-1)-mode of `s`.
pub fn divided_translation(s: &State, j: u32) -> State {
    let mut cur = s.clone();
    for i in 1..=j {
        cur = translation(&cur).scaled(&Rational::new(1.into(), (i as i64).into()));
    }
    cur
}

/// `b^i_(m)` etc. where the mode coefficient of `∂^j x / j!` is
/// `(-1)^j binom(m, j) x_(m-j)` for any integer `m`.
pub fn derivative_mode_coefficient(m: i32, j: u32) -> Rational {
    let mut num = Rational::from_integer(1.into());
    for t in 0..j as i64 {
        num *= rat(m as i64 - t);
        num /= rat(t + 1);
    }
    if j % 2 == 1 {
        -num
    } else {
        num
    }
}
