//! Group cochains on `EΓ`, the lazy form assignment `ψ(ω)` on its simplices,
//! integration `ι`, and sampled checks that `ι ∘ ψ` is a cochain map.
//!
//! `BΓ` has infinitely many simplices, so `ψ(ω)` is an evaluator. Forms
//! are computed on the normalized tuple `(e, γ_0⁻¹γ_1, …, γ_0⁻¹γ_p)` and
//! moved to `(γ_0, …, γ_p)` by `ρ_V(γ_0)`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hull::{pullback_along, theta, GroupElement, HullPresentation, SimplexBuilder};
use crate::liecomplex::{ce_differential_with, complex_of, lie_from_matrices, BracketSign};
use crate::polyform::PolyForm;
use crate::qkernel::{QPoly, Rational};

/// A tuple `(γ_0..γ_p)` together with its normalized translate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTuple {
    original: Vec<GroupElement>,
    normalized: Vec<GroupElement>,
}

impl GroupTuple {
    pub fn new(gs: &[GroupElement]) -> Result<Self> {
        assert!(!gs.is_empty(), "a tuple has at least one element");
        let inv = gs[0].inverse()?;
        let normalized = gs.iter().map(|g| inv.multiply(g)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            original: gs.to_vec(),
            normalized,
        })
    }

    pub fn degree(&self) -> usize {
        self.original.len() - 1
    }

    pub fn original(&self) -> &[GroupElement] {
        &self.original
    }

    pub fn normalized(&self) -> &[GroupElement] {
        &self.normalized
    }

    /// `γ_0`, the translation taking the normalized tuple to the original.
    pub fn base(&self) -> &GroupElement {
        &self.original[0]
    }
}

type Evaluator<'a> = Box<dyn Fn(&[GroupElement]) -> Result<Vec<Rational>> + 'a>;

/// A `V`-valued function on `(p+1)`-tuples of group elements.
pub struct GroupCochain<'a> {
    degree: usize,
    eval: Evaluator<'a>,
}

impl<'a> GroupCochain<'a> {
    pub fn new(degree: usize, eval: impl Fn(&[GroupElement]) -> Result<Vec<Rational>> + 'a) -> Self {
        Self {
            degree,
            eval: Box::new(eval),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, gs: &[GroupElement]) -> Result<Vec<Rational>> {
        if gs.len() != self.degree + 1 {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: gs.len().saturating_sub(1),
            });
        }
        (self.eval)(gs)
    }
}

fn alternating_sum(gs: &[GroupElement], mut f: impl FnMut(&[GroupElement]) -> Result<Vec<Rational>>) -> Result<Vec<Rational>> {
    let mut acc: Option<Vec<Rational>> = None;
    for i in 0..gs.len() {
        let mut fewer = gs.to_vec();
        fewer.remove(i);
        let v = f(&fewer)?;
        let acc = acc.get_or_insert_with(|| vec![Rational::zero(); v.len()]);
        for (a, x) in acc.iter_mut().zip(v) {
            if i % 2 == 0 {
                *a += x;
            } else {
                *a -= x;
            }
        }
    }
    Ok(acc.unwrap_or_default())
}

/// `dφ(γ_0..γ_{p+1}) = Σ_i (−1)^i φ(γ_0..γ̂_i..γ_{p+1})`.
pub fn group_cochain_d(phi: GroupCochain<'_>) -> GroupCochain<'_> {
    let degree = phi.degree + 1;
    GroupCochain::new(degree, move |gs| alternating_sum(gs, |fewer| phi.eval(fewer)))
}

/// `ψ(ω)`: the pullback of the invariant cochain `ω` (full coordinates)
/// along `σ` on every simplex of `EΓ`, evaluated on demand.
pub struct Psi<'h> {
    h: &'h HullPresentation,
    degree: usize,
    omega: Vec<Rational>,
    builder: Mutex<SimplexBuilder>,
    cache: Mutex<HashMap<Vec<GroupElement>, PolyForm>>,
}

impl<'h> Psi<'h> {
    pub fn new(h: &'h HullPresentation, degree: usize, omega: Vec<Rational>) -> Self {
        Self {
            h,
            degree,
            omega,
            builder: Mutex::new(SimplexBuilder::new()),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The form on the simplex `Δ_(γ_0..γ_p)`, with values in `V`.
    pub fn form(&self, gs: &[GroupElement]) -> Result<PolyForm> {
        let tuple = GroupTuple::new(gs)?;
        let base = self.normalized_form(tuple.normalized())?;
        let twist = self.h.rho(tuple.base())?;
        if twist.is_identity() {
            return Ok(base);
        }
        let p = tuple.degree();
        let rows: Vec<Vec<QPoly>> = twist
            .to_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|c| QPoly::constant(p, c)).collect())
            .collect();
        Ok(base.transform_values(&rows))
    }

    fn normalized_form(&self, normalized: &[GroupElement]) -> Result<PolyForm> {
        if let Some(f) = self.cache.lock().expect("cache lock").get(normalized) {
            return Ok(f.clone());
        }
        let m = self.builder.lock().expect("builder lock").sigma(normalized)?;
        let f = pullback_along(self.h, self.degree, &self.omega, &m)?;
        self.cache
            .lock()
            .expect("cache lock")
            .insert(normalized.to_vec(), f.clone());
        Ok(f)
    }

    /// `ι ∘ ψ(ω)` as a group cochain of the same degree.
    pub fn integrated(&self) -> GroupCochain<'_> {
        GroupCochain::new(self.degree, move |gs| iota(&self.form(gs)?))
    }
}

/// `∫_Δ` of a top-degree form on a simplex.
pub fn iota(form: &PolyForm) -> Result<Vec<Rational>> {
    if form.degree() != form.arity() {
        return Err(Error::DegreeMismatch {
            expected: form.arity(),
            found: form.degree(),
        });
    }
    form.integrate_simplex()
}

/// One failed identity, with the tuple written as words in the generators.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub check: String,
    pub degree: usize,
    pub cochain: Vec<String>,
    pub tuple: Vec<String>,
    /// Translating element, for the equivariance check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub translate: Option<String>,
    /// Face index, for the face check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face: Option<usize>,
    pub expected: Vec<String>,
    pub found: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degree: usize,
    pub cochain_dim: usize,
    pub samples: usize,
    pub cochain_map: usize,
    pub equivariance: usize,
    pub face_coherence: usize,
    pub integration_agrees_with_theta: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_word_length: usize,
    pub degrees: Vec<DegreeSummary>,
    /// At most [`MAX_WITNESSES`] are kept; `failures` counts all of them.
    pub counterexamples: Vec<Counterexample>,
    pub failures: usize,
    pub passed: bool,
}

pub const MAX_WORD_LENGTH: usize = 6;
pub const MAX_WITNESSES: usize = 20;

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn random_word(rng: &mut ChaCha8Rng, ngens: usize) -> Vec<i64> {
    let len = rng.gen_range(0..=MAX_WORD_LENGTH);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=ngens as i64);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

struct Sampler<'h> {
    h: &'h HullPresentation,
    rng: ChaCha8Rng,
}

impl Sampler<'_> {
    fn tuple(&mut self, len: usize) -> Result<(Vec<Vec<i64>>, Vec<GroupElement>)> {
        let ngens = self.h.generators().len();
        let words: Vec<Vec<i64>> = (0..len).map(|_| random_word(&mut self.rng, ngens)).collect();
        let gs = words.iter().map(|w| self.h.word(w)).collect::<Result<Vec<_>>>()?;
        Ok((words, gs))
    }

    fn cochain(&mut self, basis: &[Vec<Rational>], full_len: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); full_len];
        for b in basis {
            let c = Rational::from_integer(self.rng.gen_range(-3i64..=3).into());
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
        v
    }
}

/// Checks on `samples` random tuples for each cochain degree `k ≤ max_degree`:
///
/// * `ι ψ(dω) = d(ι ψ ω)` on `(k+2)`-tuples, with `d` on the left using `sign`;
/// * `θ(ω)(γ·g) = ρ_V(γ) ι ψ(ω)(g)`, computing the left side from scratch;
/// * each face of `ψ(ω)` on a `(k+2)`-tuple equals `ψ(ω)` on the shorter tuple;
/// * `ι ψ(ω) = θ(ω)` on `(k+1)`-tuples.
///
/// Words have length at most [`MAX_WORD_LENGTH`]; degree `k` draws from
/// stream `k` of a ChaCha8 generator seeded with `seed`.
pub fn verify_cochain_map(
    h: &HullPresentation,
    max_degree: usize,
    samples: usize,
    seed: u64,
    sign: BracketSign,
) -> Result<VerificationReport> {
    let c = complex_of(h)?;
    let l = lie_from_matrices(h.u_basis())?;
    let mut degrees = Vec::new();
    let mut counterexamples = Vec::new();
    let mut failures = 0;
    let words_of = |ws: &[Vec<i64>]| ws.iter().map(|w| h.word_to_string(w)).collect::<Vec<_>>();
    for k in 0..=max_degree.min(h.n()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        let mut sampler = Sampler { h, rng };
        let d = ce_differential_with(&l, h.module(), k, sign);
        let mut summary = DegreeSummary {
            degree: k,
            cochain_dim: c.basis(k).len(),
            samples: 0,
            cochain_map: 0,
            equivariance: 0,
            face_coherence: 0,
            integration_agrees_with_theta: 0,
            failures: 0,
        };
        if c.basis(k).is_empty() {
            degrees.push(summary);
            continue;
        }
        let full_len = d.cols();
        let mut record = |cx: Counterexample, summary: &mut DegreeSummary| {
            summary.failures += 1;
            failures += 1;
            if counterexamples.len() < MAX_WITNESSES {
                counterexamples.push(cx);
            }
        };
        for _ in 0..samples {
            summary.samples += 1;
            let omega = sampler.cochain(c.basis(k), full_len);
            let d_omega = d.mul_vec(&omega);
            let psi = Psi::new(h, k, omega.clone());
            let psi_d = Psi::new(h, k + 1, d_omega);
            let omega_s = strings(&omega);
            let base = |check: &str, words: &[Vec<i64>], expected: &[Rational], found: &[Rational]| Counterexample {
                check: check.into(),
                degree: k,
                cochain: omega_s.clone(),
                tuple: words_of(words),
                translate: None,
                face: None,
                expected: strings(expected),
                found: strings(found),
            };

            let (words, gs) = sampler.tuple(k + 2)?;
            let lhs = iota(&psi_d.form(&gs)?)?;
            let rhs = alternating_sum(&gs, |fewer| iota(&psi.form(fewer)?))?;
            if lhs == rhs {
                summary.cochain_map += 1;
            } else {
                record(base("cochain_map", &words, &rhs, &lhs), &mut summary);
            }

            let big = psi.form(&gs)?;
            let mut faces_ok = true;
            for i in 0..gs.len() {
                let mut fewer = gs.clone();
                fewer.remove(i);
                let restricted = big.restrict_face(i);
                let direct = psi.form(&fewer)?;
                if restricted != direct {
                    faces_ok = false;
                    let mut cx = base("face_coherence", &words, &[], &[]);
                    cx.face = Some(i);
                    record(cx, &mut summary);
                    break;
                }
            }
            if faces_ok {
                summary.face_coherence += 1;
            }

            let (words, gs) = sampler.tuple(k + 1)?;
            let via_psi = psi.integrated().eval(&gs)?;
            let direct = theta(h, k, &omega, &gs)?;
            if via_psi == direct {
                summary.integration_agrees_with_theta += 1;
            } else {
                record(base("integration_agrees_with_theta", &words, &direct, &via_psi), &mut summary);
            }

            let ngens = h.generators().len();
            let g_word = random_word(&mut sampler.rng, ngens);
            let g = h.word(&g_word)?;
            let moved = gs.iter().map(|x| g.multiply(x)).collect::<Result<Vec<_>>>()?;
            let lhs = theta(h, k, &omega, &moved)?;
            let rhs = h.rho(&g)?.mul_vec(&via_psi);
            if lhs == rhs {
                summary.equivariance += 1;
            } else {
                let mut cx = base("equivariance", &words, &rhs, &lhs);
                cx.translate = Some(h.word_to_string(&g_word));
                record(cx, &mut summary);
            }
        }
        degrees.push(summary);
    }
    Ok(VerificationReport {
        max_degree,
        samples,
        seed,
        max_word_length: MAX_WORD_LENGTH,
        degrees,
        counterexamples,
        failures,
        passed: failures == 0,
    })
}
