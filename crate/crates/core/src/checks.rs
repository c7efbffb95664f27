//! Randomized and exhaustive consistency checks for the engine.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cartan::{cartan_action, vect_basis, Form, PolyVectorField};
use crate::error::Result;
use crate::fock::{enumerate_basis, Monomial, Parity, State, WeightSpaceBasis};
use crate::invariants::generator_set;
use crate::linalg::{solve_in_span, Matrix};
use crate::modes::translation;
use crate::vertex::{apply_linear_iso, nth_product, skew_symmetry_check, standard_fields, wick};
use crate::{rat, ratio, Rational};

/// Draws random homogeneous-weight states from cached monomial bases.
pub struct StateSampler {
    rng: ChaCha8Rng,
    bases: Vec<WeightSpaceBasis>,
}

impl StateSampler {
    pub fn new(rank: usize, max_weight: i32, gamma_bound: usize, seed: u64) -> Self {
        StateSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bases: (0..=max_weight).map(|w| enumerate_basis(rank, w, None, gamma_bound)).collect(),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// One to three monomials of a common weight with small rational coefficients.
    pub fn state(&mut self) -> State {
        let w = self.rng.gen_range(0..self.bases.len());
        let basis = &self.bases[w];
        let terms = self.rng.gen_range(1..=3);
        let mut out = State::zero();
        for _ in 0..terms {
            let m = basis.elements().choose(&mut self.rng).expect("nonempty weight space");
            let num = *[-3i64, -2, -1, 1, 2, 3].choose(&mut self.rng).unwrap();
            let den = *[1i64, 1, 2].choose(&mut self.rng).unwrap();
            out.add_term(m.clone(), ratio(num, den));
        }
        out
    }

    /// A random invertible integer matrix with entries in `-2..=2`.
    pub fn invertible(&mut self, d: usize) -> Matrix {
        loop {
            let rows: Vec<Vec<Rational>> = (0..d).map(|_| (0..d).map(|_| rat(self.rng.gen_range(-2..=2))).collect()).collect();
            let m = Matrix::from_rows(rows);
            if m.inverse().is_ok() {
                return m;
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub rank: usize,
    pub max_weight: i32,
    pub trials: usize,
    pub seed: u64,
    pub checks: BTreeMap<String, Tally>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0 && t.passed > 0)
    }
}

/// Right-hand side of
/// `:ab:_(n) c = sum_{k<0} a_(k) b_(n-k-1) c + (-1)^{|a||b|} sum_{k>=0} b_(n-k-1) a_(k) c`.
pub fn wick_expansion_rhs(a: &State, b: &State, c: &State, n: i32) -> State {
    let (a0, a1) = a.split_parity();
    let (b0, b1) = b.split_parity();
    let wc = c.max_weight();
    let mut out = State::zero();
    for (ap, pa) in [(&a0, Parity::Even), (&a1, Parity::Odd)] {
        for (bp, pb) in [(&b0, Parity::Even), (&b1, Parity::Odd)] {
            if ap.is_zero() || bp.is_zero() {
                continue;
            }
            let (wa, wb) = (ap.max_weight(), bp.max_weight());
            // b_(m) c = 0 for m >= wb + wc, a_(k) c = 0 for k >= wa + wc
            for k in (n - wb - wc)..0 {
                let inner = nth_product(bp, n - k - 1, c);
                out += &nth_product(ap, k, &inner);
            }
            let sign = rat(pa.koszul(pb) as i64);
            for k in 0..(wa + wc) {
                let inner = nth_product(ap, k, c);
                out.add_scaled(&nth_product(bp, n - k - 1, &inner), &sign);
            }
        }
    }
    out
}

/// Vacuum, translation, Wick-expansion and skew-symmetry identities on random
/// state pairs.
pub fn axiom_suite(rank: usize, max_weight: i32, trials: usize, seed: u64) -> AxiomReport {
    let mut sampler = StateSampler::new(rank, max_weight, 1, seed);
    let mut checks: BTreeMap<String, Tally> = BTreeMap::new();
    let one = State::vacuum();
    for _ in 0..trials {
        let a = sampler.state();
        let b = sampler.state();
        let c = sampler.state();
        let mut put = |name: &str, ok: bool| checks.entry(name.to_string()).or_default().record(ok);

        let top = a.max_weight() + 1;
        put("vacuum_annihilation", (0..=top).all(|n| nth_product(&a, n, &one).is_zero()));
        put("vacuum_creation", nth_product(&a, -1, &one) == a);
        put(
            "identity_field",
            (-2..=2).all(|n| nth_product(&one, n, &b) == if n == -1 { b.clone() } else { State::zero() }),
        );
        let da = translation(&a);
        put(
            "translation_derivative",
            (-2..=2).all(|n| nth_product(&da, n, &b) == nth_product(&a, n - 1, &b).scaled(&rat(-n as i64))),
        );
        put(
            "translation_derivation",
            (-2..=2).all(|n| translation(&nth_product(&a, n, &b)) == &nth_product(&da, n, &b) + &nth_product(&a, n, &translation(&b))),
        );
        let ab = wick(&a, &b);
        put("wick_expansion", (-2..=1).all(|n| nth_product(&ab, n, &c) == wick_expansion_rhs(&a, &b, &c, n)));
        put("skew_symmetry", (-1..=2).all(|n| skew_symmetry_check(&a, &b, n)));
    }
    AxiomReport {
        rank,
        max_weight,
        trials,
        seed,
        checks,
    }
}

/// One singular product among the N=2 fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N2Product {
    pub left: String,
    pub n: i32,
    pub right: String,
    pub value: String,
    /// coordinates on `1, Q, L, J, G, ∂Q, ∂J, ∂G` when in that span
    pub coordinates: Option<Vec<String>>,
    /// in the span enlarged by `∂L`
    pub in_extended_span: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N2Report {
    pub rank: usize,
    pub products: Vec<N2Product>,
    pub closes_on_span: bool,
    pub closes_on_extended_span: bool,
    pub l0l_is_translation: bool,
    /// `L_(3) L` as a multiple of the vacuum, when it is one
    pub l3l: Option<String>,
    pub j1j: Option<String>,
    /// `3 J_(1) J`
    pub central_charge: Option<String>,
    /// `T_(3) T` for `T = L - ∂J / 2`
    pub untwisted_central_term: Option<String>,
}

impl N2Report {
    pub fn l3l_value(&self) -> Option<Rational> {
        self.l3l.as_ref().map(|s| s.parse().expect("rational"))
    }

    pub fn j1j_value(&self) -> Option<Rational> {
        self.j1j.as_ref().map(|s| s.parse().expect("rational"))
    }

    /// N=2 structure with `c = 3d`: closure up to `∂L`, `J_(1)J = d`,
    /// and the untwisted Virasoro term `c/2`.
    pub fn structure_holds(&self) -> bool {
        let d = rat(self.rank as i64);
        let c = &d * rat(3);
        self.closes_on_extended_span
            && self.l0l_is_translation
            && self.j1j_value() == Some(d)
            && self.untwisted_central_term.as_ref().map(|s| s.parse::<Rational>().unwrap()) == Some(c / rat(2))
    }
}

fn vacuum_multiple(s: &State) -> Option<Rational> {
    if s.is_zero() {
        return Some(rat(0));
    }
    (s.len() == 1).then(|| s.coeff(&Monomial::vacuum())).filter(|c| *c != rat(0))
}

pub fn n2_report(rank: usize) -> Result<N2Report> {
    let f = standard_fields(rank)?;
    let named = f.n2();
    let span: Vec<State> = vec![
        State::vacuum(),
        f.q.clone(),
        f.l.clone(),
        f.j.clone(),
        f.g.clone(),
        translation(&f.q),
        translation(&f.j),
        translation(&f.g),
    ];
    let mut extended = span.clone();
    extended.push(translation(&f.l));
    let mut products = Vec::new();
    for (ln, a) in named {
        for (rn, b) in named {
            for n in 0..(a.max_weight() + b.max_weight()) {
                let p = nth_product(a, n, b);
                if p.is_zero() {
                    continue;
                }
                let coordinates = solve_in_span(&span, &p).map(|c| c.iter().map(|x| x.to_string()).collect());
                let in_extended_span = solve_in_span(&extended, &p).is_some();
                products.push(N2Product {
                    left: ln.to_string(),
                    n,
                    right: rn.to_string(),
                    value: p.to_string(),
                    coordinates,
                    in_extended_span,
                });
            }
        }
    }
    let closes_on_span = products.iter().all(|p| p.coordinates.is_some());
    let closes_on_extended_span = products.iter().all(|p| p.in_extended_span);
    let l0l_is_translation = nth_product(&f.l, 0, &f.l) == translation(&f.l);
    let l3l = vacuum_multiple(&nth_product(&f.l, 3, &f.l));
    let j1j = vacuum_multiple(&nth_product(&f.j, 1, &f.j));
    let t = &f.l - &translation(&f.j).scaled(&ratio(1, 2));
    let tt = vacuum_multiple(&nth_product(&t, 3, &t));
    Ok(N2Report {
        rank,
        products,
        closes_on_span,
        closes_on_extended_span,
        l0l_is_translation,
        l3l: l3l.map(|x| x.to_string()),
        central_charge: j1j.as_ref().map(|x| (x * rat(3)).to_string()),
        j1j: j1j.map(|x| x.to_string()),
        untwisted_central_term: tt.map(|x| x.to_string()),
    })
}

/// A vector field that kills the generator state, or not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceFailure {
    pub generator: String,
    pub field: String,
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInvarianceReport {
    pub rank: usize,
    pub form: Form,
    pub degree_bound: i32,
    /// basis sizes of `Vect_n(V, ω)` for `n = -1..=degree_bound`
    pub basis_sizes: Vec<usize>,
    pub evaluations: usize,
    pub failures: Vec<InvarianceFailure>,
    /// a field outside the series moves some generator
    pub control_detected: bool,
}

impl GeneratorInvarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.control_detected
    }
}

/// `L(v) g = 0` for the eight generators and every basis field of degree
/// `-1..=degree_bound`.
pub fn generator_invariance(rank: usize, form: Form, degree_bound: i32) -> Result<GeneratorInvarianceReport> {
    use rayon::prelude::*;
    let gens = generator_set(rank, form)?;
    let mut basis_sizes = Vec::new();
    let mut jobs = Vec::new();
    for n in -1..=degree_bound {
        let basis = vect_basis(rank, n, form.series())?;
        basis_sizes.push(basis.len());
        jobs.extend(basis.into_iter().map(|v| (n, v)));
    }
    let failures: Vec<InvarianceFailure> = jobs
        .par_iter()
        .flat_map_iter(|(n, v)| {
            gens.iter()
                .filter(|(_, g)| !cartan_action(v, g).is_zero())
                .map(|(name, _)| InvarianceFailure {
                    generator: name.to_string(),
                    field: v.to_string(),
                    degree: *n,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut e = vec![0; rank];
    e[0] = 1;
    let control = PolyVectorField::monomial(&e, 1, rat(1));
    let control_detected = gens.iter().any(|(_, g)| !cartan_action(&control, g).is_zero());
    Ok(GeneratorInvarianceReport {
        rank,
        form,
        degree_bound,
        evaluations: jobs.len() * gens.len(),
        basis_sizes,
        failures,
        control_detected,
    })
}

/// `W(ψ)(a_(n) b) = W(ψ)a _(n) W(ψ)b` on random triples.
pub fn iso_homomorphism(rank: usize, max_weight: i32, trials: usize, seed: u64) -> Result<Tally> {
    let mut sampler = StateSampler::new(rank, max_weight, 1, seed);
    let mut tally = Tally::default();
    for _ in 0..trials {
        let psi = sampler.invertible(rank);
        let a = sampler.state();
        let b = sampler.state();
        let n = sampler.rng().gen_range(-2..=2);
        let lhs = apply_linear_iso(&psi, &nth_product(&a, n, &b))?;
        let rhs = nth_product(&apply_linear_iso(&psi, &a)?, n, &apply_linear_iso(&psi, &b)?);
        tally.record(lhs == rhs);
    }
    Ok(tally)
}
