//! Polynomial differential forms on the standard simplex.
//!
//! The barycentric relations `t_0 + … + t_p = 1` and `dt_0 + … + dt_p = 0`
//! are solved for `t_0`, so a form of arity `p` lives in the free
//! coordinates `t_1..t_p` on `Δ^p = {t_i ≥ 0, Σ t_i ≤ 1}`. The `i`-th face is
//! `t_i = 0` for `i ≥ 1` and `t_0 = 0` (that is `Σ t_i = 1`) for `i = 0`;
//! `dt_1 ∧ … ∧ dt_p` is positively oriented. With these conventions
//! `∫_Δ dω = Σ_i (−1)^i ∫ restrict_face(ω, i)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{bits, insertion_sign, merge_sign};
use crate::qkernel::rational::factorial;
use crate::qkernel::{QPoly, Rational};

/// Coordinates of the `i`-th face map `Δ^{p−1} → Δ^p`, as polynomials in
/// the face coordinates `u_1..u_{p−1}`: for `i ≥ 1` a zero is inserted at
/// slot `i`; for `i = 0`, `t_1 = 1 − Σ u_j` and `t_{j+1} = u_j`.
pub fn face_substitution(p: usize, i: usize) -> Vec<QPoly> {
    assert!(p >= 1 && i <= p, "face index out of range");
    let q = p - 1;
    if i == 0 {
        let mut first = QPoly::one(q);
        for j in 0..q {
            first = &first - &QPoly::var(q, j);
        }
        return std::iter::once(first)
            .chain((0..q).map(|j| QPoly::var(q, j)))
            .collect();
    }
    (0..p)
        .map(|j| match (j + 1).cmp(&i) {
            std::cmp::Ordering::Less => QPoly::var(q, j),
            std::cmp::Ordering::Equal => QPoly::zero(q),
            std::cmp::Ordering::Greater => QPoly::var(q, j - 1),
        })
        .collect()
}

/// `Σ_S c_S(t) dt_S` with `c_S` a vector of `value_dim` polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyForm {
    arity: usize,
    degree: usize,
    value_dim: usize,
    terms: BTreeMap<u32, Vec<QPoly>>,
}

impl PolyForm {
    pub fn zero(arity: usize, degree: usize, value_dim: usize) -> Self {
        assert!(value_dim >= 1, "value dimension must be positive");
        PolyForm {
            arity,
            degree,
            value_dim,
            terms: BTreeMap::new(),
        }
    }

    /// Scalar 0-form.
    pub fn function(f: QPoly) -> Self {
        Self::vector_function(vec![f])
    }

    /// V-valued 0-form.
    pub fn vector_function(fs: Vec<QPoly>) -> Self {
        let arity = fs[0].nvars();
        let mut out = Self::zero(arity, 0, fs.len());
        out.insert(0, fs);
        out
    }

    /// `dt_{i+1}` on `Δ^arity`.
    pub fn dt(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut out = Self::zero(arity, 1, 1);
        out.insert(1 << i, vec![QPoly::one(arity)]);
        out
    }

    /// Builds a form from `(mask, coefficients)` pairs; masks must have
    /// `degree` bits below `arity`.
    pub fn from_terms(
        arity: usize,
        degree: usize,
        value_dim: usize,
        terms: impl IntoIterator<Item = (u32, Vec<QPoly>)>,
    ) -> Self {
        let mut out = Self::zero(arity, degree, value_dim);
        for (mask, coeffs) in terms {
            out.accumulate(mask, &coeffs, 1);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &[QPoly])> {
        self.terms.iter().map(|(&m, c)| (m, c.as_slice()))
    }

    pub fn coefficient(&self, mask: u32) -> Option<&[QPoly]> {
        self.terms.get(&mask).map(Vec::as_slice)
    }

    fn check_mask(&self, mask: u32) {
        debug_assert_eq!(mask.count_ones() as usize, self.degree, "mask degree");
        debug_assert!(self.arity >= 32 || mask >> self.arity == 0, "mask out of range");
    }

    fn insert(&mut self, mask: u32, coeffs: Vec<QPoly>) {
        self.check_mask(mask);
        assert_eq!(coeffs.len(), self.value_dim, "coefficient vector length");
        if coeffs.iter().all(QPoly::is_zero) {
            self.terms.remove(&mask);
        } else {
            self.terms.insert(mask, coeffs);
        }
    }

    /// `self[mask] += sign · coeffs`.
    fn accumulate(&mut self, mask: u32, coeffs: &[QPoly], sign: i32) {
        self.check_mask(mask);
        assert_eq!(coeffs.len(), self.value_dim, "coefficient vector length");
        let s = Rational::from_integer(BigInt::from(sign));
        let entry = self
            .terms
            .entry(mask)
            .or_insert_with(|| vec![QPoly::zero(self.arity); self.value_dim]);
        for (e, c) in entry.iter_mut().zip(coeffs) {
            e.add_scaled(c, &s);
        }
        if entry.iter().all(QPoly::is_zero) {
            self.terms.remove(&mask);
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(
            (self.arity, self.degree, self.value_dim),
            (other.arity, other.degree, other.value_dim),
            "incompatible forms"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.accumulate(m, c, 1);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.accumulate(m, c, -1);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.arity, self.degree, self.value_dim);
        for (&m, v) in &self.terms {
            out.insert(m, v.iter().map(|p| p.scale(c)).collect());
        }
        out
    }

    /// Scalar form times a constant vector.
    pub fn tensor_vector(&self, v: &[Rational]) -> Self {
        assert_eq!(self.value_dim, 1, "tensor_vector expects a scalar form");
        let mut out = Self::zero(self.arity, self.degree, v.len());
        for (&m, c) in &self.terms {
            out.insert(m, v.iter().map(|x| c[0].scale(x)).collect());
        }
        out
    }

    /// Applies a pointwise linear map to the values: `out = A(t) · coeffs`,
    /// with `A` given as rows of polynomials.
    pub fn transform_values(&self, a: &[Vec<QPoly>]) -> Self {
        let out_dim = a.len();
        let mut out = Self::zero(self.arity, self.degree, out_dim);
        for (&m, c) in &self.terms {
            let row: Vec<QPoly> = a
                .iter()
                .map(|arow| {
                    assert_eq!(arow.len(), self.value_dim);
                    arow.iter()
                        .zip(c)
                        .fold(QPoly::zero(self.arity), |acc, (x, y)| &acc + &(x * y))
                })
                .collect();
            out.insert(m, row);
        }
        out
    }

    /// Exterior derivative.
    pub fn d(&self) -> Self {
        let mut out = Self::zero(self.arity, self.degree + 1, self.value_dim);
        for (&mask, c) in &self.terms {
            for i in 0..self.arity {
                if mask & (1 << i) != 0 {
                    continue;
                }
                let dc: Vec<QPoly> = c.iter().map(|p| p.partial(i)).collect();
                if dc.iter().all(QPoly::is_zero) {
                    continue;
                }
                out.accumulate(mask | (1 << i), &dc, insertion_sign(mask, i));
            }
        }
        out
    }

    /// Graded-commutative product; at least one side must be scalar.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.arity, other.arity, "wedge of forms on different simplices");
        let value_dim = match (self.value_dim, other.value_dim) {
            (1, d) | (d, 1) => d,
            (a, b) => return Err(Error::ValueDimMismatch(a, b)),
        };
        let mut out = Self::zero(self.arity, self.degree + other.degree, value_dim);
        if out.degree > out.arity {
            return Ok(out);
        }
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                let s = merge_sign(ma, mb);
                if s == 0 {
                    continue;
                }
                let prod: Vec<QPoly> = if ca.len() == 1 {
                    cb.iter().map(|q| &ca[0] * q).collect()
                } else {
                    ca.iter().map(|p| p * &cb[0]).collect()
                };
                out.accumulate(ma | mb, &prod, s);
            }
        }
        Ok(out)
    }

    /// Pullback to the `i`-th face `Δ^{p−1} → Δ^p` (the face opposite vertex `i`).
    pub fn restrict_face(&self, i: usize) -> Self {
        let p = self.arity;
        assert!(p >= 1 && i <= p, "face index out of range");
        let q = p - 1;
        let mut out = Self::zero(q, self.degree, self.value_dim);
        if self.degree > q {
            return out;
        }
        let subs = face_substitution(p, i);
        if i >= 1 {
            let v = i - 1;
            for (&mask, c) in &self.terms {
                if mask & (1 << v) != 0 {
                    continue;
                }
                let low = mask & ((1 << v) - 1);
                let high = (mask >> (v + 1)) << v;
                let cc: Vec<QPoly> = c.iter().map(|f| f.compose(&subs)).collect();
                out.accumulate(low | high, &cc, 1);
            }
        } else {
            // dt_1 = −Σ du_j on face 0.
            for (&mask, c) in &self.terms {
                let cc: Vec<QPoly> = c.iter().map(|f| f.compose(&subs)).collect();
                let rest = mask >> 1;
                if mask & 1 == 0 {
                    out.accumulate(rest, &cc, 1);
                } else {
                    for j in 0..q {
                        if rest & (1 << j) != 0 {
                            continue;
                        }
                        out.accumulate(rest | (1 << j), &cc, -insertion_sign(rest, j));
                    }
                }
            }
        }
        out
    }

    /// Exact `∫_{Δ^p}` of a top-degree form, monomial by monomial:
    /// `∫ t^a dt_1…dt_p = (∏ a_i!) / (p + Σ a_i)!`.
    pub fn integrate_simplex(&self) -> Result<Vec<Rational>> {
        if self.degree != self.arity {
            return Err(Error::DegreeMismatch {
                expected: self.arity,
                found: self.degree,
            });
        }
        let mut out = vec![Rational::zero(); self.value_dim];
        let Some(c) = self.terms.get(&((1u32 << self.arity) - 1)) else {
            return Ok(out);
        };
        for (acc, poly) in out.iter_mut().zip(c) {
            for (e, coef) in poly.terms() {
                let num = e
                    .iter()
                    .fold(BigInt::one(), |a, &k| a * factorial(u64::from(k)));
                let total: u64 = e.iter().map(|&k| u64::from(k)).sum::<u64>() + self.arity as u64;
                *acc += coef * Rational::new(num, factorial(total));
            }
        }
        Ok(out)
    }

    /// Indices `i` with `dt_{i+1}` present in some term.
    pub fn support(&self) -> Vec<usize> {
        let all = self.terms.keys().fold(0u32, |a, &m| a | m);
        bits(all).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::{rat, ratio};

    fn t(p: usize, i: usize) -> QPoly {
        QPoly::var(p, i)
    }

    #[test]
    fn exterior_derivative_examples() {
        assert_eq!(PolyForm::function(t(1, 0)).d(), PolyForm::dt(1, 0));
        let w = PolyForm::function(t(2, 0)).wedge(&PolyForm::dt(2, 1)).unwrap();
        let expected = PolyForm::dt(2, 0).wedge(&PolyForm::dt(2, 1)).unwrap();
        assert_eq!(w.d(), expected);
        let f = PolyForm::function(&t(2, 0) * &t(2, 1));
        let expected = PolyForm::function(t(2, 1))
            .wedge(&PolyForm::dt(2, 0))
            .unwrap()
            .add(&PolyForm::function(t(2, 0)).wedge(&PolyForm::dt(2, 1)).unwrap());
        assert_eq!(f.d(), expected);
    }

    #[test]
    fn wedge_antisymmetry() {
        let a = PolyForm::dt(2, 0).wedge(&PolyForm::dt(2, 1)).unwrap();
        let b = PolyForm::dt(2, 1).wedge(&PolyForm::dt(2, 0)).unwrap();
        assert_eq!(a, b.scale(&rat(-1)));
        assert_eq!(a.coefficient(0b11).unwrap()[0], QPoly::one(2));
        assert!(PolyForm::dt(2, 0).wedge(&PolyForm::dt(2, 0)).unwrap().is_zero());
        let f = PolyForm::function(t(1, 0)).wedge(&PolyForm::dt(1, 0)).unwrap();
        assert_eq!(f.coefficient(1).unwrap()[0], t(1, 0));
    }

    #[test]
    fn vector_wedge_rejected() {
        let v = PolyForm::vector_function(vec![t(1, 0), QPoly::one(1)]);
        assert_eq!(v.wedge(&v), Err(Error::ValueDimMismatch(2, 2)));
        assert_eq!(v.wedge(&PolyForm::dt(1, 0)).unwrap().value_dim(), 2);
    }

    #[test]
    fn face_restrictions() {
        assert!(PolyForm::dt(1, 0).restrict_face(1).is_zero());
        assert!(PolyForm::function(t(2, 0)).restrict_face(1).is_zero());
        assert_eq!(
            PolyForm::function(t(2, 1)).restrict_face(1),
            PolyForm::function(t(1, 0))
        );
        // Face 0 of Δ¹ is the vertex t_1 = 1.
        let f = PolyForm::function(&t(1, 0) * &t(1, 0)).restrict_face(0);
        assert_eq!(f, PolyForm::function(QPoly::one(0)));
        // dt_1 on Δ² restricted to face 0 is −du_1.
        assert_eq!(
            PolyForm::dt(2, 0).restrict_face(0),
            PolyForm::dt(1, 0).scale(&rat(-1))
        );
    }

    #[test]
    fn simplex_integrals() {
        assert_eq!(PolyForm::dt(1, 0).integrate_simplex().unwrap(), vec![rat(1)]);
        let vol = PolyForm::dt(2, 0).wedge(&PolyForm::dt(2, 1)).unwrap();
        let f1 = PolyForm::function(t(2, 0)).wedge(&vol).unwrap();
        assert_eq!(f1.integrate_simplex().unwrap(), vec![ratio(1, 6)]);
        let f2 = PolyForm::function(&t(2, 0) * &t(2, 1)).wedge(&vol).unwrap();
        assert_eq!(f2.integrate_simplex().unwrap(), vec![ratio(1, 24)]);
        assert_eq!(
            PolyForm::dt(2, 0).integrate_simplex(),
            Err(Error::DegreeMismatch { expected: 2, found: 1 })
        );
    }
}
