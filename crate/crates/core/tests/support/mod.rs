//! Independent reference computations shared by the integration tests.

#![allow(dead_code)]

use hullcoh_core::hull::{GroupElement, HullPresentation, PolyMatrix};
use hullcoh_core::liecomplex::CEComplex;
use hullcoh_core::polyform::PolyForm;
use hullcoh_core::qkernel::{rat, QPoly, Rational};
use rand::Rng;

/// `∫_{Δ^p} f dt_1…dt_p` by iterated one-variable integration: the last
/// variable runs from 0 to `1 − t_1 − … − t_{p−1}`, then the next, and so on.
pub fn iterated_simplex_integral(f: &QPoly) -> Rational {
    let mut g = f.clone();
    while g.nvars() > 0 {
        let p = g.nvars();
        let last = p - 1;
        // Antiderivative in the last variable.
        let mut anti = QPoly::zero(p);
        for (e, c) in g.terms() {
            let mut e2 = e.clone();
            e2[last] += 1;
            anti.add_scaled(
                &QPoly::monomial(p, e2, c / Rational::from_integer((e[last] + 1).into())),
                &rat(1),
            );
        }
        // Upper limit 1 − Σ_{j<last} t_j, expressed in p − 1 variables.
        let mut upper = QPoly::one(p - 1);
        for j in 0..last {
            upper = &upper - &QPoly::var(p - 1, j);
        }
        let subs: Vec<QPoly> = (0..last)
            .map(|j| QPoly::var(p - 1, j))
            .chain(std::iter::once(upper))
            .collect();
        g = anti.compose(&subs);
    }
    g.as_constant().expect("fully integrated")
}

pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32, max_terms: usize) -> QPoly {
    let mut p = QPoly::zero(nvars);
    let n = rng.gen_range(0..=max_terms);
    for _ in 0..n {
        let mut e = vec![0u32; nvars];
        let mut budget = rng.gen_range(0..=max_degree);
        while budget > 0 && nvars > 0 {
            let i = rng.gen_range(0..nvars);
            e[i] += 1;
            budget -= 1;
        }
        let c = Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
        p.add_scaled(&QPoly::monomial(nvars, e, c), &rat(1));
    }
    p
}

pub fn random_form<R: Rng>(rng: &mut R, arity: usize, degree: usize, max_poly_degree: u32) -> PolyForm {
    let masks = hullcoh_core::exterior::subsets(arity, degree);
    let terms: Vec<(u32, Vec<QPoly>)> = masks
        .into_iter()
        .map(|m| (m, vec![random_poly(rng, arity, max_poly_degree, 3)]))
        .collect();
    PolyForm::from_terms(arity, degree, 1, terms)
}

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32) -> QPoly {
    let mut e = vec![0u32; nvars];
    for x in e.iter_mut() {
        *x = rng.gen_range(0..=max_degree);
    }
    QPoly::monomial(nvars, e, rat(1))
}

/// Word of length `0..=max_len` in generators `±1..=±ngens`.
pub fn random_word<R: Rng>(rng: &mut R, ngens: usize, max_len: usize) -> Vec<i64> {
    let len = rng.gen_range(0..=max_len);
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

pub fn random_element<R: Rng>(rng: &mut R, h: &HullPresentation, max_len: usize) -> GroupElement {
    h.word(&random_word(rng, h.generators().len(), max_len)).unwrap()
}

pub fn random_tuple<R: Rng>(rng: &mut R, h: &HullPresentation, len: usize) -> Vec<GroupElement> {
    (0..len).map(|_| random_element(rng, h, 4)).collect()
}

/// Random combination of the degree-`k` invariant basis (full coordinates).
pub fn random_cochain<R: Rng>(rng: &mut R, c: &CEComplex, k: usize) -> Vec<Rational> {
    let coeffs: Vec<Rational> = (0..c.basis(k).len())
        .map(|_| Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into()))
        .collect();
    c.expand(k, &coeffs)
}

pub fn random_point<R: Rng>(rng: &mut R, nvars: usize) -> Vec<Rational> {
    (0..nvars)
        .map(|_| Rational::new(rng.gen_range(-7i64..=7).into(), rng.gen_range(1i64..=5).into()))
        .collect()
}

/// Image of a point of `Δ^{p−1}` under the `i`-th face map, written out
/// coordinate by coordinate.
pub fn face_point(u: &[Rational], i: usize) -> Vec<Rational> {
    if i == 0 {
        let rest: Rational = u.iter().sum();
        std::iter::once(rat(1) - rest).chain(u.iter().cloned()).collect()
    } else {
        let mut t = u.to_vec();
        t.insert(i - 1, rat(0));
        t
    }
}

pub fn volume(p: usize) -> PolyForm {
    (0..p).fold(PolyForm::function(QPoly::one(p)), |acc, i| {
        acc.wedge(&PolyForm::dt(p, i)).unwrap()
    })
}

/// `∫_Δ dω = Σ_i (−1)^i ∫_{∂_iΔ} ω`.
pub fn stokes_holds(w: &PolyForm) -> bool {
    let p = w.arity();
    let lhs = w.d().integrate_simplex().unwrap();
    let mut rhs = vec![rat(0); w.value_dim()];
    for i in 0..=p {
        let face = w.restrict_face(i).integrate_simplex().unwrap();
        for (r, f) in rhs.iter_mut().zip(face) {
            if i % 2 == 0 {
                *r += f;
            } else {
                *r -= f;
            }
        }
    }
    lhs == rhs
}

/// Strictly upper triangular `n×n` matrix of polynomials of degree ≤ 2.
pub fn strictly_upper<R: Rng>(rng: &mut R, n: usize, nvars: usize) -> PolyMatrix {
    let entries: Vec<Vec<QPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if j > i { random_poly(rng, nvars, 2, 3) } else { QPoly::zero(nvars) })
                .collect()
        })
        .collect();
    PolyMatrix::from_fn(n, n, nvars, |i, j| entries[i][j].clone())
}
