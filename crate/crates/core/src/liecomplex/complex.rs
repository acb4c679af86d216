//! `⋀^k 𝔲* ⊗ V` in coordinates: entry `subset * dim V + component`, with
//! subsets in the lexicographic bitmask order of [`ExteriorBasis`].

use num_traits::{One, Zero};

use super::lie::{lie_from_matrices, LieAlgebra};
use crate::error::{Error, Result};
use crate::exterior::{bits, insertion_sign, ExteriorBasis};
use crate::hull::{HullPresentation, RationalModule};
use crate::qkernel::{QMatrix, Rational, SpanCoords};

/// Sign in front of the bracket term of the differential. `Flipped` exists
/// only to demonstrate that the cochain-map checks detect a wrong convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BracketSign {
    #[default]
    Standard,
    Flipped,
}

/// Matrix of `d: ⋀^k𝔲*⊗V → ⋀^{k+1}𝔲*⊗V`,
/// `(dω)(X_0..X_k) = Σ_a (−1)^a r(X_a) ω(..X̂_a..) + Σ_{a<b} (−1)^{a+b} ω([X_a,X_b], ..X̂_a..X̂_b..)`.
pub fn ce_differential(l: &LieAlgebra, module: &RationalModule, k: usize) -> QMatrix {
    ce_differential_with(l, module, k, BracketSign::Standard)
}

pub fn ce_differential_with(l: &LieAlgebra, module: &RationalModule, k: usize, sign: BracketSign) -> QMatrix {
    let n = l.dim();
    let dv = module.dim;
    let src = ExteriorBasis::new(n, k);
    let dst = ExteriorBasis::new(n, k + 1);
    let mut d = QMatrix::zeros(dst.len() * dv, src.len() * dv);
    let bracket_sign = match sign {
        BracketSign::Standard => Rational::one(),
        BracketSign::Flipped => -Rational::one(),
    };
    for (row, &mask) in dst.masks().iter().enumerate() {
        let idx: Vec<usize> = bits(mask).collect();
        for (a, &ia) in idx.iter().enumerate() {
            let col = src.index_of(mask & !(1 << ia)).expect("subset");
            let r = &module.r_basis[ia];
            if r.is_zero() {
                continue;
            }
            let s = if a % 2 == 0 { Rational::one() } else { -Rational::one() };
            for w in 0..dv {
                for v in 0..dv {
                    if !r[(w, v)].is_zero() {
                        d[(row * dv + w, col * dv + v)] += &s * &r[(w, v)];
                    }
                }
            }
        }
        for (a, &ia) in idx.iter().enumerate() {
            for (b, &ib) in idx.iter().enumerate().skip(a + 1) {
                let rest = mask & !(1 << ia) & !(1 << ib);
                for (m, c) in l.structure(ia, ib).iter().enumerate() {
                    if c.is_zero() || rest & (1 << m) != 0 {
                        continue;
                    }
                    let col = src.index_of(rest | (1 << m)).expect("subset");
                    let mut coef = c * &bracket_sign;
                    if (a + b) % 2 == 1 {
                        coef = -coef;
                    }
                    if insertion_sign(rest, m) < 0 {
                        coef = -coef;
                    }
                    for v in 0..dv {
                        d[(row * dv + v, col * dv + v)] += &coef;
                    }
                }
            }
        }
    }
    d
}

/// Action of a torus generator on `⋀^k𝔲*⊗V`: `ω ↦ R ∘ ω ∘ (Ad⁻¹)^{⊗k}`,
/// where column `i` of `ad` holds the coordinates of `S X_i S⁻¹`.
pub fn torus_action(ad: &QMatrix, r: &QMatrix, k: usize) -> Result<QMatrix> {
    let n = ad.rows();
    let dv = r.rows();
    let inv = ad.inverse()?;
    let basis = ExteriorBasis::new(n, k);
    let mut out = QMatrix::zeros(basis.len() * dv, basis.len() * dv);
    for (ki, &kmask) in basis.masks().iter().enumerate() {
        let kcols: Vec<usize> = bits(kmask).collect();
        for (ii, &imask) in basis.masks().iter().enumerate() {
            let irows: Vec<usize> = bits(imask).collect();
            let det = inv.select(&irows, &kcols).determinant();
            if det.is_zero() {
                continue;
            }
            for w in 0..dv {
                for v in 0..dv {
                    if !r[(w, v)].is_zero() {
                        out[(ki * dv + w, ii * dv + v)] = &r[(w, v)] * &det;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The subcomplex `(⋀𝔲*⊗V)^T` with bases in full coordinates and the
/// differentials in those bases.
#[derive(Clone, Debug)]
pub struct CEComplex {
    n: usize,
    module_dim: usize,
    bases: Vec<Vec<Vec<Rational>>>,
    full_d: Vec<QMatrix>,
    restricted_d: Vec<QMatrix>,
}

impl CEComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Basis of the invariant cochains of degree `k`, in full coordinates.
    pub fn basis(&self, k: usize) -> &[Vec<Rational>] {
        &self.bases[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `d_k` on all of `⋀^k𝔲*⊗V`.
    pub fn full_differential(&self, k: usize) -> &QMatrix {
        &self.full_d[k]
    }

    /// `d_k` in the invariant bases of degrees `k` and `k+1`.
    pub fn differential(&self, k: usize) -> &QMatrix {
        &self.restricted_d[k]
    }

    /// Full coordinates of `Σ c_i b_i` for the degree-`k` invariant basis.
    pub fn expand(&self, k: usize, c: &[Rational]) -> Vec<Rational> {
        let len = ExteriorBasis::new(self.n, k).len() * self.module_dim;
        let mut out = vec![Rational::zero(); len];
        for (a, b) in c.iter().zip(&self.bases[k]) {
            if a.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o += a * x;
            }
        }
        out
    }

    /// Applies the full differential to a cochain in full coordinates.
    pub fn apply_d(&self, k: usize, omega: &[Rational]) -> Vec<Rational> {
        self.full_d[k].mul_vec(omega)
    }
}

/// Builds `(⋀𝔲*⊗V)^T`; `t_action[j] = (Ad(S_j) on 𝔲, R_j on V)`.
pub fn invariant_subcomplex(
    l: &LieAlgebra,
    module: &RationalModule,
    t_action: &[(QMatrix, QMatrix)],
) -> Result<CEComplex> {
    invariant_subcomplex_with(l, module, t_action, BracketSign::Standard)
}

pub fn invariant_subcomplex_with(
    l: &LieAlgebra,
    module: &RationalModule,
    t_action: &[(QMatrix, QMatrix)],
    sign: BracketSign,
) -> Result<CEComplex> {
    let n = l.dim();
    let dv = module.dim;
    let mut bases = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let len = ExteriorBasis::new(n, k).len() * dv;
        if t_action.is_empty() {
            bases.push(
                (0..len)
                    .map(|i| {
                        let mut v = vec![Rational::zero(); len];
                        v[i] = Rational::one();
                        v
                    })
                    .collect(),
            );
            continue;
        }
        let mut stacked: Option<QMatrix> = None;
        for (ad, r) in t_action {
            let phi = &torus_action(ad, r, k)? - &QMatrix::identity(len);
            stacked = Some(match stacked {
                None => phi,
                Some(s) => s.vstack(&phi),
            });
        }
        bases.push(stacked.expect("non-empty").kernel_basis());
    }
    let full_d: Vec<QMatrix> = (0..=n).map(|k| ce_differential_with(l, module, k, sign)).collect();
    let mut restricted_d = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let next_len = ExteriorBasis::new(n, k + 1).len() * dv;
        let images: Vec<Vec<Rational>> = bases[k].iter().map(|b| full_d[k].mul_vec(b)).collect();
        if k == n || bases[k + 1].is_empty() {
            if images.iter().any(|v| v.iter().any(|x| !x.is_zero())) {
                return Err(Error::NotPreserved(k));
            }
            restricted_d.push(QMatrix::zeros(bases.get(k + 1).map_or(0, Vec::len), bases[k].len()));
            continue;
        }
        let coords = SpanCoords::new(next_len, &bases[k + 1])?;
        let cols: Vec<Vec<Rational>> = images
            .iter()
            .map(|v| coords.coords(v).ok_or(Error::NotPreserved(k)))
            .collect::<Result<_>>()?;
        restricted_d.push(QMatrix::from_columns(bases[k + 1].len(), &cols));
    }
    Ok(CEComplex {
        n,
        module_dim: dv,
        bases,
        full_d,
        restricted_d,
    })
}

/// The complex attached to a presentation.
pub fn complex_of(h: &HullPresentation) -> Result<CEComplex> {
    complex_of_with(h, BracketSign::Standard)
}

pub fn complex_of_with(h: &HullPresentation, sign: BracketSign) -> Result<CEComplex> {
    let l = lie_from_matrices(h.u_basis())?;
    let t_action = h
        .t_generators()
        .iter()
        .zip(&h.module().r_gens)
        .map(|(s, r)| Ok((h.adjoint(s)?, r.clone())))
        .collect::<Result<Vec<_>>>()?;
    invariant_subcomplex_with(&l, h.module(), &t_action, sign)
}
