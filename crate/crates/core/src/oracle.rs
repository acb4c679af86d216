//! Group cohomology of `ℤ^m` and `ℤ ⋉_A ℤ^m` with coefficients in a
//! finite-dimensional module, computed directly from the groups without
//! any Lie algebra: the Koszul complex of the commuting operators
//! `ρ(e_i) − 1`, and the mapping cone of `T* − 1` on it.
//!
//! Cochains are `V ⊗ ⋀^k(ℚ^m)*` with coordinates `subset * dim V + component`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exterior::{bits, insertion_sign, ExteriorBasis};
use crate::hull::HullPresentation;
use crate::qkernel::{rat, QMatrix, Rational};

/// `d(v ⊗ ξ_S) = Σ_i φ_i(v) ⊗ e_i* ∧ ξ_S`.
fn koszul_differential(phis: &[QMatrix], dv: usize, k: usize) -> QMatrix {
    let m = phis.len();
    let src = ExteriorBasis::new(m, k);
    let dst = ExteriorBasis::new(m, k + 1);
    let mut d = QMatrix::zeros(dst.len() * dv, src.len() * dv);
    for (col, &s) in src.masks().iter().enumerate() {
        for (i, phi) in phis.iter().enumerate() {
            if s & (1 << i) != 0 {
                continue;
            }
            let row = dst.index_of(s | (1 << i)).expect("subset");
            let sign = insertion_sign(s, i);
            for w in 0..dv {
                for v in 0..dv {
                    let x = &phi[(w, v)];
                    if !x.is_zero() {
                        let entry = &mut d[(row * dv + w, col * dv + v)];
                        if sign > 0 {
                            *entry += x;
                        } else {
                            *entry -= x;
                        }
                    }
                }
            }
        }
    }
    d
}

fn check_commuting(ops: &[QMatrix]) -> Result<()> {
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if &ops[i] * &ops[j] != &ops[j] * &ops[i] {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    Ok(())
}

fn phis(ops: &[QMatrix]) -> Vec<QMatrix> {
    ops.iter().map(|r| r - &QMatrix::identity(r.rows())).collect()
}

fn betti_from(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|k| dims[k] - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect()
}

/// `dim H^k(ℤ^m, V)` for `k = 0..m`, where `ops[i]` is the action of `e_i`.
pub fn koszul_betti(ops: &[QMatrix], module_dim: usize) -> Result<Vec<usize>> {
    check_commuting(ops)?;
    let m = ops.len();
    let phis = phis(ops);
    let dims: Vec<usize> = (0..=m).map(|k| ExteriorBasis::new(m, k).len() * module_dim).collect();
    let ranks: Vec<usize> = (0..=m).map(|k| koszul_differential(&phis, module_dim, k).rank()).collect();
    Ok(betti_from(&dims, &ranks))
}

/// `f ↦ P ∘ f ∘ (A⁻¹)^{⊗k}` on `V ⊗ ⋀^k(ℚ^m)*`, entry by entry from the
/// `k×k` minors of `A⁻¹`.
fn monodromy_action(a_inv: &QMatrix, p: &QMatrix, k: usize) -> QMatrix {
    let m = a_inv.rows();
    let dv = p.rows();
    let basis = ExteriorBasis::new(m, k);
    let mut t = QMatrix::zeros(basis.len() * dv, basis.len() * dv);
    for (r, &out_mask) in basis.masks().iter().enumerate() {
        let cols: Vec<usize> = bits(out_mask).collect();
        for (c, &in_mask) in basis.masks().iter().enumerate() {
            let rows: Vec<usize> = bits(in_mask).collect();
            let minor = a_inv.select(&rows, &cols).determinant();
            if minor.is_zero() {
                continue;
            }
            for w in 0..dv {
                for v in 0..dv {
                    if !p[(w, v)].is_zero() {
                        t[(r * dv + w, c * dv + v)] = &p[(w, v)] * &minor;
                    }
                }
            }
        }
    }
    t
}

/// `dim H^k(ℤ ⋉_A ℤ^m, V)` for `k = 0..m+1`. `base_ops[i]` is the action of
/// the `i`-th generator of `ℤ^m`, `stable_op` that of the generator of ℤ,
/// and column `j` of `a` is the image of base generator `j` under
/// conjugation by the stable generator. Computed as the cohomology of the
/// cone `D(a, b) = (da, (T* − 1)a − db)`.
pub fn wang_betti(a: &QMatrix, stable_op: &QMatrix, base_ops: &[QMatrix]) -> Result<Vec<usize>> {
    check_commuting(base_ops)?;
    let m = base_ops.len();
    let dv = stable_op.rows();
    let a_inv = a.inverse()?;
    let phis = phis(base_ops);
    let koszul: Vec<QMatrix> = (0..=m).map(|k| koszul_differential(&phis, dv, k)).collect();
    let t: Vec<QMatrix> = (0..=m).map(|k| monodromy_action(&a_inv, stable_op, k)).collect();
    let kdim = |k: usize| if k <= m { ExteriorBasis::new(m, k).len() * dv } else { 0 };
    for k in 0..m {
        if &t[k + 1] * &koszul[k] != &koszul[k] * &t[k] {
            return Err(Error::NotEquivariant(k));
        }
    }
    // D_k : K^k ⊕ K^{k-1} → K^{k+1} ⊕ K^k
    let cone: Vec<QMatrix> = (0..=m + 1)
        .map(|k| {
            let (a0, b0) = (kdim(k), if k == 0 { 0 } else { kdim(k - 1) });
            let (a1, b1) = (kdim(k + 1), kdim(k));
            let mut d = QMatrix::zeros(a1 + b1, a0 + b0);
            if k <= m && a1 > 0 {
                copy_block(&mut d, &koszul[k], 0, 0, &rat(1));
            }
            if k <= m {
                let t_minus = &t[k] - &QMatrix::identity(kdim(k));
                copy_block(&mut d, &t_minus, a1, 0, &rat(1));
            }
            if k >= 1 && k - 1 <= m && b1 > 0 {
                copy_block(&mut d, &koszul[k - 1], a1, a0, &rat(-1));
            }
            d
        })
        .collect();
    for k in 0..=m {
        debug_assert!((&cone[k + 1] * &cone[k]).is_zero());
    }
    let dims: Vec<usize> = (0..=m + 1).map(|k| kdim(k) + if k == 0 { 0 } else { kdim(k - 1) }).collect();
    let ranks: Vec<usize> = cone.iter().map(QMatrix::rank).collect();
    Ok(betti_from(&dims, &ranks))
}

fn copy_block(dst: &mut QMatrix, src: &QMatrix, row: usize, col: usize, scale: &Rational) {
    for i in 0..src.rows() {
        for j in 0..src.cols() {
            if !src[(i, j)].is_zero() {
                dst[(row + i, col + j)] = &src[(i, j)] * scale;
            }
        }
    }
}

/// Oracle Betti numbers for a presentation carrying a split-extension tag,
/// with the module actions `ρ_V` of the named generators.
pub fn wang_betti_for(h: &HullPresentation) -> Result<Option<Vec<usize>>> {
    let Some(tag) = h.split_extension() else {
        return Ok(None);
    };
    let op = |name: &str| -> Result<QMatrix> {
        let g = h
            .generator(name)
            .ok_or_else(|| Error::InvalidPresentation(format!("unknown generator {name}")))?;
        h.rho(g)
    };
    let stable = op(&tag.stable)?;
    let base = tag.base.iter().map(|b| op(b)).collect::<Result<Vec<_>>>()?;
    wang_betti(&tag.monodromy, &stable, &base).map(Some)
}
