//! Polynomial simplices in `U` spanned by tuples of group elements.
//!
//! For `(g_0..g_p)` with unipotent parts `z_i`, the simplex is
//! `z_0 · exp(x(t))` where `x` is a `𝔲`-valued polynomial on `Δ^p` built from
//! the points `y_i = z_0⁻¹ z_i` by induction on `p`:
//!
//! * on each face `t_i = 0` (`i ≥ 1`) it must equal the extension for the
//!   tuple without `y_i`; a Boolean sum over those faces interpolates all of
//!   them at once;
//! * on the face `t_0 = 0` it must equal `log(y_1 · exp(x'))`, with `x'` the
//!   extension for `(y_1⁻¹y_2, …, y_1⁻¹y_p)`; the residual vanishes on the
//!   boundary of that face, so it is divisible by `u_1⋯u_{p−1}(1 − Σu)` and
//!   is added back multiplied by the bubble `t_1⋯t_p`.
//!
//! Vertex `g_i` sits at `t_i = 1`, faces of the result are the simplices of
//! the shorter tuples, and the construction commutes with every `α(g)`.

use std::collections::HashMap;

use super::presentation::GroupElement;
use super::unipotent::{exp_nilpotent, inverse_unipotent, log_unipotent, PolyMatrix};
use crate::error::Result;
use crate::polyform::face_substitution;
use crate::qkernel::{QMatrix, QPoly};

/// Memoized builder; reuse one instance across many tuples.
#[derive(Default)]
pub struct SimplexBuilder {
    memo: HashMap<Vec<QMatrix>, PolyMatrix>,
}

impl SimplexBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// `σ(g_0..g_p)` as a unipotent polynomial matrix in `t_1..t_p`.
    pub fn sigma(&mut self, gs: &[GroupElement]) -> Result<PolyMatrix> {
        assert!(!gs.is_empty(), "sigma needs at least one vertex");
        let z0 = gs[0].u();
        let z0_inv = inverse_unipotent(z0)?;
        let ys: Vec<QMatrix> = gs[1..].iter().map(|g| &z0_inv * g.u()).collect();
        let x = self.extension(z0.rows(), &ys)?;
        let p = ys.len();
        Ok(PolyMatrix::constant(z0, p).mul(&exp_nilpotent(&x)?))
    }

    /// The `𝔲`-valued polynomial `x` with `exp(x)` at vertex `i` equal to
    /// `y_i` (and `I` at vertex 0).
    pub fn extension(&mut self, dim: usize, ys: &[QMatrix]) -> Result<PolyMatrix> {
        if let Some(x) = self.memo.get(ys) {
            return Ok(x.clone());
        }
        let x = self.build(dim, ys)?;
        self.memo.insert(ys.to_vec(), x.clone());
        Ok(x)
    }

    fn build(&mut self, dim: usize, ys: &[QMatrix]) -> Result<PolyMatrix> {
        let p = ys.len();
        if p == 0 {
            return Ok(PolyMatrix::zeros(dim, dim, 0));
        }

        // Boolean sum over the faces t_i = 0, i ≥ 1.
        let mut boolean = PolyMatrix::zeros(dim, dim, p);
        for drop in 1u32..(1 << p) {
            let kept: Vec<usize> = (0..p).filter(|&i| drop & (1 << i) == 0).collect();
            let sub: Vec<QMatrix> = kept.iter().map(|&i| ys[i].clone()).collect();
            let face = self.extension(dim, &sub)?.embed(p, &kept);
            boolean = if drop.count_ones() % 2 == 1 {
                boolean.add(&face)
            } else {
                boolean.sub(&face)
            };
        }

        // Target on the face t_0 = 0, in its coordinates u_1..u_{p-1}.
        let y1 = &ys[0];
        let y1_inv = inverse_unipotent(y1)?;
        let shifted: Vec<QMatrix> = ys[1..].iter().map(|y| &y1_inv * y).collect();
        let inner = self.extension(dim, &shifted)?;
        let target = log_unipotent(&PolyMatrix::constant(y1, p - 1).mul(&exp_nilpotent(&inner)?))?;

        let residual = target.sub(&boolean.compose(&face_substitution(p, 0)));
        let edge = vec![1u32; p - 1];
        let mut boundary = QPoly::one(p - 1);
        for j in 0..p - 1 {
            boundary = &boundary - &QPoly::var(p - 1, j);
        }
        let reduced = residual.map(|f| {
            f.div_monomial(&edge)
                .and_then(|g| g.div_exact(&boundary))
                .expect("face data agree on the boundary of face 0")
        });
        let shift: Vec<usize> = (1..p).collect();
        let bubble = QPoly::monomial(p, vec![1; p], crate::qkernel::rat(1));
        Ok(boolean.add(&reduced.embed(p, &shift).scale_poly(&bubble)))
    }
}

/// `σ(g_0..g_p)` with a fresh cache.
pub fn sigma(gs: &[GroupElement]) -> Result<PolyMatrix> {
    SimplexBuilder::new().sigma(gs)
}
