use num_traits::Zero;

use super::lie::LieAlgebra;
use crate::error::Result;
use crate::qkernel::{QMatrix, Rational};

/// One term `coefficient · ξ_i ∧ ξ_j` (`i < j`) of a differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticTerm {
    pub coefficient: Rational,
    pub i: usize,
    pub j: usize,
}

/// The Sullivan minimal model `(⋀⟨ξ_1..ξ_n⟩, d)` of a nilpotent Lie
/// algebra, with `dξ_k = −Σ_{i<j} c^k_{ij} ξ_i∧ξ_j`.
#[derive(Clone, Debug)]
pub struct MinimalModelReport {
    /// Generators are dual to these vectors (columns in the input basis).
    pub basis: QMatrix,
    /// `true` when `basis` is a permutation of the input basis.
    pub is_permutation: bool,
    pub differential: Vec<Vec<QuadraticTerm>>,
    /// Generators listed so that each `dξ` only involves earlier ones.
    pub order: Vec<usize>,
    pub lcs_dims: Vec<usize>,
    pub decomposable: bool,
    pub triangular: bool,
}

fn differential_of(l: &LieAlgebra) -> Vec<Vec<QuadraticTerm>> {
    let n = l.dim();
    (0..n)
        .map(|k| {
            let mut terms = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let c = &l.structure(i, j)[k];
                    if !c.is_zero() {
                        terms.push(QuadraticTerm {
                            coefficient: -c,
                            i,
                            j,
                        });
                    }
                }
            }
            terms
        })
        .collect()
}

/// Order in which every generator follows those in its differential,
/// smallest index first among the available ones.
fn triangular_order(d: &[Vec<QuadraticTerm>]) -> Option<Vec<usize>> {
    let n = d.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&k| !placed[k] && d[k].iter().all(|t| placed[t.i] && placed[t.j]))?;
        placed[next] = true;
        order.push(next);
    }
    Some(order)
}

/// Basis adapted to the lower central series: complements of `𝔤_{l+1}` in
/// `𝔤_l`, from the top of the series downwards.
fn lcs_adapted_basis(series: &[Vec<Vec<Rational>>], n: usize) -> QMatrix {
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for level in 0..series.len() - 1 {
        let below = &series[level + 1];
        let mut candidate = below.clone();
        candidate.extend(series[level].iter().cloned());
        let (_, pivots) = QMatrix::from_columns(n, &candidate).rref();
        cols.extend(
            pivots
                .into_iter()
                .filter(|&p| p >= below.len())
                .map(|p| candidate[p].clone()),
        );
    }
    QMatrix::from_columns(n, &cols)
}

pub fn minimal_model_report(l: &LieAlgebra) -> Result<MinimalModelReport> {
    let n = l.dim();
    let series = l.lower_central_series()?;
    let lcs_dims: Vec<usize> = series.iter().map(Vec::len).collect();
    let direct = differential_of(l);
    let (basis, is_permutation, differential, order) = match triangular_order(&direct) {
        Some(order) => (QMatrix::identity(n), true, direct, order),
        None => {
            let p = lcs_adapted_basis(&series, n);
            let d = differential_of(&l.change_basis(&p)?);
            let order = triangular_order(&d).expect("adapted basis is triangular");
            (p, false, d, order)
        }
    };
    let position: Vec<usize> = {
        let mut pos = vec![0; n];
        for (i, &k) in order.iter().enumerate() {
            pos[k] = i;
        }
        pos
    };
    let triangular = differential
        .iter()
        .enumerate()
        .all(|(k, terms)| terms.iter().all(|t| position[t.i] < position[k] && position[t.j] < position[k]));
    Ok(MinimalModelReport {
        basis,
        is_permutation,
        differential,
        order,
        lcs_dims,
        // A quadratic differential lands in ⋀^2 by construction.
        decomposable: true,
        triangular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecomplex::lie_from_matrices;
    use crate::qkernel::rat;

    #[test]
    fn heisenberg_model() {
        let u = |i, j| QMatrix::unit(3, 3, i, j);
        let l = lie_from_matrices(&[u(0, 1), u(1, 2), u(0, 2)]).unwrap();
        let m = minimal_model_report(&l).unwrap();
        assert_eq!(m.order, vec![0, 1, 2]);
        assert_eq!(
            m.differential[2],
            vec![QuadraticTerm {
                coefficient: rat(-1),
                i: 0,
                j: 1
            }]
        );
        assert!(m.differential[0].is_empty() && m.differential[1].is_empty());
        assert!(m.triangular && m.is_permutation);
    }

    #[test]
    fn reordered_heisenberg_is_permuted() {
        let u = |i, j| QMatrix::unit(3, 3, i, j);
        let l = lie_from_matrices(&[u(0, 2), u(0, 1), u(1, 2)]).unwrap();
        let m = minimal_model_report(&l).unwrap();
        assert_eq!(m.order, vec![1, 2, 0]);
        assert!(m.triangular);
    }

    #[test]
    fn non_triangular_basis_is_changed() {
        // Heisenberg in the basis X, Y, X + Z: [X, Y] = (X + Z) − X puts ξ_0
        // into its own differential, so no permutation works.
        let u = |i, j| QMatrix::unit(3, 3, i, j);
        let w = &u(0, 1) + &u(0, 2);
        let l = lie_from_matrices(&[u(0, 1), u(1, 2), w]).unwrap();
        assert!(triangular_order(&differential_of(&l)).is_none());
        let m = minimal_model_report(&l).unwrap();
        assert!(!m.is_permutation);
        assert!(m.triangular);
        assert_eq!(m.lcs_dims, vec![3, 1, 0]);
        let nonzero: usize = m.differential.iter().map(Vec::len).sum();
        assert_eq!(nonzero, 1);
    }

    #[test]
    fn abelian_has_zero_differential() {
        let m = minimal_model_report(&LieAlgebra::abelian(3)).unwrap();
        assert!(m.differential.iter().all(Vec::is_empty));
        assert_eq!(m.order, vec![0, 1, 2]);
    }
}
