use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qkernel::{QMatrix, Rational, SpanCoords};

/// Finite-dimensional Lie algebra over ℚ given by structure constants
/// `[X_i, X_j] = Σ_k c[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    n: usize,
    c: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            n,
            c: vec![vec![vec![Rational::zero(); n]; n]; n],
        }
    }

    /// From structure constants; antisymmetry and Jacobi are checked.
    pub fn from_structure(n: usize, c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let l = LieAlgebra { n, c };
        if !l.is_antisymmetric() || !l.satisfies_jacobi() {
            return Err(Error::InvalidPresentation("structure constants do not define a Lie algebra".into()));
        }
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().flatten().all(Zero::is_zero)
    }

    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.c[i][j].iter().zip(&self.c[j][i]).all(|(a, b)| (a + b).is_zero()))
        })
    }

    pub fn satisfies_jacobi(&self) -> bool {
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); self.n];
            v[i] = Rational::one();
            v
        };
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let a = self.bracket(&x, &self.bracket(&y, &z));
                    let b = self.bracket(&y, &self.bracket(&z, &x));
                    let c = self.bracket(&z, &self.bracket(&x, &y));
                    if a.iter().zip(&b).zip(&c).any(|((p, q), r)| !(p + q + r).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Spanning vectors of the bracket of two subspaces.
    fn bracket_span(&self, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let mut vecs = Vec::new();
        for x in a {
            for y in b {
                vecs.push(self.bracket(x, y));
            }
        }
        if vecs.is_empty() {
            return vecs;
        }
        QMatrix::from_columns(self.n, &vecs).image_basis()
    }

    /// Bases of the lower central series `𝔤_0 = 𝔲 ⊋ 𝔤_1 = [𝔲,𝔲] ⊋ … ⊋ 0`.
    pub fn lower_central_series(&self) -> Result<Vec<Vec<Vec<Rational>>>> {
        let all: Vec<Vec<Rational>> = (0..self.n)
            .map(|i| {
                let mut v = vec![Rational::zero(); self.n];
                v[i] = Rational::one();
                v
            })
            .collect();
        let mut series = vec![all.clone()];
        loop {
            let last = series.last().expect("non-empty");
            if last.is_empty() {
                return Ok(series);
            }
            let next = self.bracket_span(&all, last);
            if next.len() == last.len() {
                return Err(Error::NotNilpotent);
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().is_ok()
    }

    /// `dim [𝔲, 𝔲]`.
    pub fn derived_dim(&self) -> usize {
        let all: Vec<Vec<Rational>> = (0..self.n)
            .map(|i| {
                let mut v = vec![Rational::zero(); self.n];
                v[i] = Rational::one();
                v
            })
            .collect();
        self.bracket_span(&all, &all).len()
    }

    /// Structure constants in the basis `Y_j = Σ_i p[i][j] X_i`.
    pub fn change_basis(&self, p: &QMatrix) -> Result<Self> {
        let p_inv = p.inverse()?;
        let cols: Vec<Vec<Rational>> = (0..self.n).map(|j| p.column(j)).collect();
        let mut c = vec![vec![vec![Rational::zero(); self.n]; self.n]; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                c[a][b] = p_inv.mul_vec(&self.bracket(&cols[a], &cols[b]));
            }
        }
        Ok(LieAlgebra { n: self.n, c })
    }
}

/// Structure constants of the span of `basis` under the matrix commutator.
pub fn lie_from_matrices(basis: &[QMatrix]) -> Result<LieAlgebra> {
    let n = basis.len();
    if n == 0 {
        return Ok(LieAlgebra::abelian(0));
    }
    let len = basis[0].rows() * basis[0].cols();
    let flat: Vec<Vec<Rational>> = basis.iter().map(|m| m.entries().to_vec()).collect();
    let span = SpanCoords::new(len, &flat).map_err(|_| Error::InvalidPresentation("u_basis is linearly dependent".into()))?;
    let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let br = basis[i].commutator(&basis[j]);
            let coords = span.coords(br.entries()).ok_or(Error::NotClosed(i, j))?;
            c[j][i] = coords.iter().map(|x| -x).collect();
            c[i][j] = coords;
        }
    }
    Ok(LieAlgebra { n, c })
}
