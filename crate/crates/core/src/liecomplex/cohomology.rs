use num_traits::Zero;

use super::complex::CEComplex;
use crate::error::{Error, Result};
use crate::qkernel::{QMatrix, Rational};

/// Betti numbers of an invariant complex with cocycle representatives and
/// coboundary bases, both in full coordinates.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub betti: Vec<usize>,
    pub cochain_dims: Vec<usize>,
    pub euler_characteristic: i64,
    pub representatives: Vec<Vec<Vec<Rational>>>,
    pub coboundaries: Vec<Vec<Vec<Rational>>>,
}

pub fn cohomology(c: &CEComplex) -> CohomologyReport {
    let n = c.n();
    let dims = c.dims();
    let mut betti = Vec::with_capacity(n + 1);
    let mut representatives = Vec::with_capacity(n + 1);
    let mut coboundaries = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let kernel = c.differential(k).kernel_basis();
        let image: Vec<Vec<Rational>> = if k == 0 {
            Vec::new()
        } else {
            c.differential(k - 1).image_basis()
        };
        // Kernel vectors that extend the image basis, in RREF order.
        let mut cols = image.clone();
        cols.extend(kernel.iter().cloned());
        let reps: Vec<Vec<Rational>> = if cols.is_empty() {
            Vec::new()
        } else {
            let (_, pivots) = QMatrix::from_columns(dims[k], &cols).rref();
            pivots
                .into_iter()
                .filter(|&p| p >= image.len())
                .map(|p| cols[p].clone())
                .collect()
        };
        betti.push(reps.len());
        representatives.push(reps.iter().map(|v| c.expand(k, v)).collect());
        coboundaries.push(image.iter().map(|v| c.expand(k, v)).collect());
    }
    let alt = |v: &[usize]| {
        v.iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum::<i64>()
    };
    let euler_characteristic = alt(&betti);
    debug_assert_eq!(euler_characteristic, alt(&dims));
    CohomologyReport {
        betti,
        cochain_dims: dims,
        euler_characteristic,
        representatives,
        coboundaries,
    }
}

impl CohomologyReport {
    /// Coordinates of the class of a degree-`k` cocycle (full coordinates)
    /// in the representative basis.
    pub fn class_of(&self, k: usize, cocycle: &[Rational]) -> Result<Vec<Rational>> {
        let reps = &self.representatives[k];
        let im = &self.coboundaries[k];
        if reps.is_empty() && im.is_empty() {
            return if cocycle.iter().all(Zero::is_zero) {
                Ok(Vec::new())
            } else {
                Err(Error::Inconsistent)
            };
        }
        let mut cols = reps.clone();
        cols.extend(im.iter().cloned());
        let sol = QMatrix::from_columns(cocycle.len(), &cols).solve(cocycle)?;
        Ok(sol[..reps.len()].to_vec())
    }
}
