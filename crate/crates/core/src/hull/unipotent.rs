//! Matrices with polynomial entries and the finite exp/log series on
//! nilpotent and unipotent matrices.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::qkernel::{QMatrix, QPoly, Rational};

/// Square-matrix algebra over ℚ, shared by constant and polynomial matrices.
pub trait MatrixAlgebra: Clone {
    fn size(&self) -> usize;
    fn identity_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn is_zero_matrix(&self) -> bool;
}

impl MatrixAlgebra for QMatrix {
    fn size(&self) -> usize {
        assert!(self.is_square());
        self.rows()
    }
    fn identity_like(&self) -> Self {
        QMatrix::identity(self.rows())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn is_zero_matrix(&self) -> bool {
        self.is_zero()
    }
}

/// Powers `x^0..x^{n-1}` of a nilpotent `x`, or `None` if `x^n ≠ 0`.
fn nilpotent_powers<M: MatrixAlgebra>(x: &M) -> Option<Vec<M>> {
    let n = x.size();
    let mut powers = vec![x.identity_like()];
    let mut cur = x.identity_like();
    for _ in 0..n {
        cur = cur.times(x);
        if cur.is_zero_matrix() {
            return Some(powers);
        }
        powers.push(cur.clone());
    }
    None
}

/// `Σ_{k<N} x^k / k!` for nilpotent `x`.
pub fn exp_nilpotent<M: MatrixAlgebra>(x: &M) -> Result<M> {
    let powers = nilpotent_powers(x).ok_or(Error::NotNilpotent)?;
    let mut out = x.identity_like();
    let mut fact = Rational::one();
    for (k, p) in powers.iter().enumerate().skip(1) {
        fact *= Rational::from_integer((k as i64).into());
        out = out.plus(&p.scaled(&fact.recip()));
    }
    Ok(out)
}

/// `Σ_{k≥1} (−1)^{k+1} (m − I)^k / k` for unipotent `m`.
pub fn log_unipotent<M: MatrixAlgebra>(m: &M) -> Result<M> {
    let y = m.minus(&m.identity_like());
    let powers = nilpotent_powers(&y).ok_or(Error::NotUnipotent)?;
    let mut out = y.identity_like().minus(&y.identity_like());
    for (k, p) in powers.iter().enumerate().skip(1) {
        let mut c = Rational::from_integer((k as i64).into()).recip();
        if k % 2 == 0 {
            c = -c;
        }
        out = out.plus(&p.scaled(&c));
    }
    Ok(out)
}

/// `m⁻¹ = Σ (I − m)^k` for unipotent `m`.
pub fn inverse_unipotent<M: MatrixAlgebra>(m: &M) -> Result<M> {
    let y = m.identity_like().minus(m);
    let powers = nilpotent_powers(&y).ok_or(Error::NotUnipotent)?;
    let mut out = powers[0].clone();
    for p in &powers[1..] {
        out = out.plus(p);
    }
    Ok(out)
}

pub fn is_unipotent<M: MatrixAlgebra>(m: &M) -> bool {
    nilpotent_powers(&m.minus(&m.identity_like())).is_some()
}

/// Matrix of polynomials in `t_1..t_nvars`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<QPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            data: vec![QPoly::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.data[i * n + i] = QPoly::one(nvars);
        }
        m
    }

    pub fn constant(m: &QMatrix, nvars: usize) -> Self {
        PolyMatrix {
            rows: m.rows(),
            cols: m.cols(),
            nvars,
            data: m
                .entries()
                .iter()
                .map(|c| QPoly::constant(nvars, c.clone()))
                .collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, nvars: usize, f: impl Fn(usize, usize) -> QPoly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert_eq!(p.nvars(), nvars);
                data.push(p);
            }
        }
        PolyMatrix {
            rows,
            cols,
            nvars,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &QPoly {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[QPoly] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<QPoly>> {
        self.data.chunks(self.cols.max(1)).map(<[QPoly]>::to_vec).collect()
    }

    /// Entry-wise `∂/∂t_{i+1}`.
    pub fn partial(&self, i: usize) -> Self {
        self.map(|p| p.partial(i))
    }

    pub fn map(&self, f: impl Fn(&QPoly) -> QPoly) -> Self {
        let data: Vec<QPoly> = self.data.iter().map(f).collect();
        let nvars = data.first().map_or(self.nvars, QPoly::nvars);
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            data,
        }
    }

    pub fn compose(&self, subs: &[QPoly]) -> Self {
        let target = subs.first().map_or(0, QPoly::nvars);
        let mut m = self.map(|p| p.compose(subs));
        m.nvars = target;
        m
    }

    pub fn embed(&self, nvars: usize, var_map: &[usize]) -> Self {
        let mut m = self.map(|p| p.embed(nvars, var_map));
        m.nvars = nvars;
        m
    }

    pub fn eval(&self, point: &[Rational]) -> QMatrix {
        let rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).eval(point)).collect())
            .collect();
        QMatrix::from_rows(rows).expect("rectangular")
    }

    /// The constant matrix, if every entry is constant.
    pub fn as_constant(&self) -> Option<QMatrix> {
        let rows: Option<Vec<Vec<Rational>>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).as_constant()).collect())
            .collect();
        rows.map(|r| QMatrix::from_rows(r).expect("rectangular"))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.nvars, other.nvars, "variable sets differ");
        let mut out = Self::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.data[i * other.cols + j].add_scaled(&prod, &Rational::one());
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(&QPoly, &QPoly) -> QPoly) -> Self {
        assert_eq!((self.rows, self.cols, self.nvars), (other.rows, other.cols, other.nvars));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn scale_poly(&self, c: &QPoly) -> Self {
        self.map(|p| p * c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QPoly::is_zero)
    }

    pub fn max_degree(&self) -> u32 {
        self.data.iter().filter_map(QPoly::total_degree).max().unwrap_or(0)
    }
}

impl MatrixAlgebra for PolyMatrix {
    fn size(&self) -> usize {
        assert_eq!(self.rows, self.cols);
        self.rows
    }
    fn identity_like(&self) -> Self {
        PolyMatrix::identity(self.rows, self.nvars)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn is_zero_matrix(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::{rat, ratio};

    #[test]
    fn log_of_identity_and_two_step() {
        assert!(log_unipotent(&QMatrix::identity(3)).unwrap().is_zero());
        let a = ratio(5, 7);
        let mut m = QMatrix::identity(2);
        m[(0, 1)] = a.clone();
        let mut expected = QMatrix::zeros(2, 2);
        expected[(0, 1)] = a;
        assert_eq!(log_unipotent(&m).unwrap(), expected);
    }

    #[test]
    fn not_unipotent_rejected() {
        let m = QMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert_eq!(log_unipotent(&m), Err(Error::NotUnipotent));
        assert_eq!(exp_nilpotent(&QMatrix::identity(2)), Err(Error::NotNilpotent));
    }

    #[test]
    fn heisenberg_exp() {
        let x = QMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let e = exp_nilpotent(&x).unwrap();
        let mut expected = QMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        expected[(0, 2)] = ratio(1, 2);
        assert_eq!(e, expected);
        assert_eq!(log_unipotent(&e).unwrap(), x);
        let inv = inverse_unipotent(&e).unwrap();
        assert!((&inv * &e).is_identity());
    }

    #[test]
    fn polynomial_roundtrip() {
        let t = QPoly::var(2, 0);
        let s = QPoly::var(2, 1);
        let x = PolyMatrix::from_fn(3, 3, 2, |i, j| match (i, j) {
            (0, 1) => t.clone(),
            (1, 2) => &s * &s,
            (0, 2) => QPoly::constant(2, rat(3)),
            _ => QPoly::zero(2),
        });
        let e = exp_nilpotent(&x).unwrap();
        assert_eq!(log_unipotent(&e).unwrap(), x);
        assert!(is_unipotent(&e));
    }
}
