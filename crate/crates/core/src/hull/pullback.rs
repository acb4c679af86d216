//! Pulling invariant forms on `U` back along polynomial simplices.

use num_traits::Zero;

use super::presentation::{GroupElement, HullPresentation};
use super::sigma::SimplexBuilder;
use super::unipotent::{inverse_unipotent, PolyMatrix};
use crate::error::{Error, Result};
use crate::exterior::{bits, ExteriorBasis};
use crate::polyform::PolyForm;
use crate::qkernel::{QPoly, Rational};

/// Coefficients `c_k` of `M⁻¹dM = Σ_k c_k ⊗ X_k`, as scalar 1-forms.
pub fn maurer_cartan(h: &HullPresentation, m: &PolyMatrix) -> Result<Vec<PolyForm>> {
    let p = m.nvars();
    let m_inv = inverse_unipotent(m)?;
    let mut forms = vec![PolyForm::zero(p, 1, 1); h.n()];
    for i in 0..p {
        let coords = h.u_coords_poly(&m_inv.mul(&m.partial(i)))?;
        for (form, c) in forms.iter_mut().zip(coords) {
            if !c.is_zero() {
                *form = form.add(&PolyForm::dt(p, i).wedge(&PolyForm::function(c))?);
            }
        }
    }
    Ok(forms)
}

/// `ρ_V(M) · ω(c, …, c)` for a `V`-valued `k`-cochain `values` (coordinates
/// indexed by `subset * dim V + component`) and `M = σ(g_0..g_p)`.
pub fn pullback_along(
    h: &HullPresentation,
    degree: usize,
    values: &[Rational],
    m: &PolyMatrix,
) -> Result<PolyForm> {
    let p = m.nvars();
    let dv = h.module_dim();
    let basis = ExteriorBasis::new(h.n(), degree);
    assert_eq!(values.len(), basis.len() * dv, "cochain has the wrong length");
    let mut out = PolyForm::zero(p, degree, dv);
    if degree > p || values.iter().all(Zero::is_zero) {
        return Ok(out);
    }
    let mc = maurer_cartan(h, m)?;
    for (idx, &mask) in basis.masks().iter().enumerate() {
        let v = &values[idx * dv..(idx + 1) * dv];
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let mut wedge = PolyForm::function(QPoly::one(p));
        for b in bits(mask) {
            wedge = wedge.wedge(&mc[b])?;
            if wedge.is_zero() {
                break;
            }
        }
        if !wedge.is_zero() {
            out = out.add(&wedge.tensor_vector(v));
        }
    }
    if h.module().has_trivial_lie_action() {
        return Ok(out);
    }
    let rho = h.rho_u_poly(m)?;
    Ok(out.transform_values(&rho.to_rows()))
}

/// Pullback of the invariant form determined by a cochain along
/// `σ(g_0..g_p)`.
pub fn pullback_form(
    h: &HullPresentation,
    degree: usize,
    values: &[Rational],
    gs: &[GroupElement],
) -> Result<PolyForm> {
    let m = SimplexBuilder::new().sigma(gs)?;
    pullback_along(h, degree, values, &m)
}

/// `∫_{Δ^p} σ(g_0..g_p)^* ω`, defined when `deg ω = p`.
pub fn theta(
    h: &HullPresentation,
    degree: usize,
    values: &[Rational],
    gs: &[GroupElement],
) -> Result<Vec<Rational>> {
    let p = gs.len() - 1;
    if degree != p {
        return Err(Error::DegreeMismatch {
            expected: p,
            found: degree,
        });
    }
    pullback_form(h, degree, values, gs)?.integrate_simplex()
}
