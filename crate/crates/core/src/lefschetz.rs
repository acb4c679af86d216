//! Invariant symplectic forms in the cochain model and the hard Lefschetz
//! property of its cohomology ring. Cup products are wedges of invariant
//! representatives followed by projection to cohomology.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{subsets, wedge};
use crate::liecomplex::{CEComplex, CohomologyReport};
use crate::qkernel::{QMatrix, Rational};

/// Basis (full coordinates) of the closed invariant 2-forms.
pub fn closed_invariant_two_forms(c: &CEComplex) -> Result<Vec<Vec<Rational>>> {
    if c.module_dim() != 1 {
        return Err(Error::RequiresTrivialModule);
    }
    if c.n() < 2 {
        return Ok(Vec::new());
    }
    Ok(c.differential(2)
        .kernel_basis()
        .iter()
        .map(|v| c.expand(2, v))
        .collect())
}

/// `ω^m` for `ω ∈ ⋀^2` of a `2m`-dimensional space.
fn power(omega: &[Rational], n: usize, k: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::one()];
    for j in 0..k {
        acc = wedge(n, 2 * j, &acc, 2, omega);
    }
    acc
}

/// Whether `ω` is nondegenerate on an `n`-dimensional space, with the single
/// coefficient of `ω^{n/2}` as witness.
pub fn is_nondegenerate(omega: &[Rational], n: usize) -> Result<(bool, Rational)> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let top = power(omega, n, n / 2);
    let coefficient = top.into_iter().next().unwrap_or_else(Rational::one);
    Ok((!coefficient.is_zero(), coefficient))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    /// Bound on numerators and denominators of random coefficients.
    pub height: u32,
    pub draws: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            height: 8,
            draws: 1000,
        }
    }
}

/// Where in the search the form was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStage {
    /// Position in the list of `±1/0` combinations with at most 3 nonzero entries.
    Enumeration(usize),
    /// Index of the random draw.
    Random(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticCertificate {
    /// The form in full coordinates of `⋀^2𝔲*`.
    pub omega: Vec<Rational>,
    /// Its coordinates in the closed-form basis used by the search.
    pub coefficients: Vec<Rational>,
    pub half_dim: usize,
    /// Coefficient of `ω^{half_dim}` on the top basis element.
    pub top_coefficient: Rational,
    /// Least common denominator of `omega`; `denominator · ω` is integral.
    pub denominator: BigInt,
    pub stage: SearchStage,
}

impl SymplecticCertificate {
    /// Certificate for a given closed form, if nondegenerate.
    pub fn for_form(c: &CEComplex, omega: Vec<Rational>, stage: SearchStage) -> Result<Option<Self>> {
        let n = c.n();
        let (ok, top) = is_nondegenerate(&omega, n)?;
        if !ok {
            return Ok(None);
        }
        let denominator = omega
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        Ok(Some(Self {
            omega,
            coefficients: Vec::new(),
            half_dim: n / 2,
            top_coefficient: top,
            denominator,
            stage,
        }))
    }

    pub fn integral_omega(&self) -> Vec<Rational> {
        let d = Rational::from_integer(self.denominator.clone());
        self.omega.iter().map(|x| x * &d).collect()
    }

    /// Same certificate for `λω`.
    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::NotSymplectic("zero multiple".into()));
        }
        let omega: Vec<Rational> = self.omega.iter().map(|x| x * lambda).collect();
        let mut top = self.top_coefficient.clone();
        for _ in 0..self.half_dim {
            top *= lambda;
        }
        let denominator = omega.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        Ok(Self {
            omega,
            coefficients: self.coefficients.iter().map(|x| x * lambda).collect(),
            half_dim: self.half_dim,
            top_coefficient: top,
            denominator,
            stage: self.stage.clone(),
        })
    }
}

fn combine(basis: &[Vec<Rational>], coeffs: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); basis[0].len()];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    out
}

/// `±1/0` combinations with 1, 2, then 3 nonzero entries; supports in
/// lexicographic order, sign patterns with `+` before `−` from the left.
fn small_combinations(len: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for weight in 1..=3.min(len) {
        for mask in subsets(len, weight) {
            let support: Vec<usize> = (0..len).filter(|&i| mask & (1 << i) != 0).collect();
            for signs in 0..(1u32 << weight) {
                let mut v = vec![Rational::zero(); len];
                for (b, &i) in support.iter().enumerate() {
                    let bit = (signs >> (weight - 1 - b)) & 1;
                    v[i] = if bit == 0 { Rational::one() } else { -Rational::one() };
                }
                out.push(v);
            }
        }
    }
    out
}

/// Looks for a nondegenerate closed invariant 2-form: first small integer
/// combinations of the closed-form basis, then random rational ones. `None`
/// means the search failed, not that no such form exists.
pub fn find_symplectic(c: &CEComplex, opts: SearchOptions) -> Result<Option<SymplecticCertificate>> {
    let n = c.n();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let basis = closed_invariant_two_forms(c)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let attempt = |coeffs: Vec<Rational>, stage: SearchStage| -> Result<Option<SymplecticCertificate>> {
        let omega = combine(&basis, &coeffs);
        Ok(SymplecticCertificate::for_form(c, omega, stage)?.map(|mut cert| {
            cert.coefficients = coeffs;
            cert
        }))
    };
    for (i, coeffs) in small_combinations(basis.len()).into_iter().enumerate() {
        if let Some(cert) = attempt(coeffs, SearchStage::Enumeration(i))? {
            return Ok(Some(cert));
        }
    }
    let h = i64::from(opts.height.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for draw in 0..opts.draws {
        let coeffs: Vec<Rational> = (0..basis.len())
            .map(|_| Rational::new(rng.gen_range(-h..=h).into(), rng.gen_range(1..=h).into()))
            .collect();
        if let Some(cert) = attempt(coeffs, SearchStage::Random(draw))? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// `[ω]^k ∧ · : H^{m−k} → H^{m+k}` in the representative bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzLevel {
    pub k: usize,
    pub source_degree: usize,
    pub target_degree: usize,
    /// `target_dim × source_dim`; column `j` is the class of `ω^k ∧ rep_j`.
    pub matrix: QMatrix,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub isomorphism: bool,
    /// Rank of `(a, b) ↦ ∫ ω^k ∧ a ∧ b` on `H^{m−k}`.
    pub pairing_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzReport {
    pub levels: Vec<LefschetzLevel>,
    pub holds: bool,
    /// Pairing ranks agree with the Lefschetz ranks at every level.
    pub duality_consistent: bool,
}

impl LefschetzReport {
    pub fn first_failure(&self) -> Option<&LefschetzLevel> {
        self.levels.iter().find(|l| !l.isomorphism)
    }
}

/// Checks the hard Lefschetz property for `[ω]`.
pub fn hard_lefschetz_check(
    c: &CEComplex,
    cert: &SymplecticCertificate,
    report: &CohomologyReport,
) -> Result<LefschetzReport> {
    let n = c.n();
    if c.module_dim() != 1 {
        return Err(Error::RequiresTrivialModule);
    }
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let m = n / 2;
    if cert.half_dim != m || cert.omega.len() != n * (n - 1) / 2 {
        return Err(Error::NotSymplectic("form has the wrong shape".into()));
    }
    if c.apply_d(2, &cert.omega).iter().any(|x| !x.is_zero()) {
        return Err(Error::NotSymplectic("form is not closed".into()));
    }
    let (ok, _) = is_nondegenerate(&cert.omega, n)?;
    if !ok {
        return Err(Error::NotSymplectic("top power vanishes".into()));
    }
    let mut levels = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let (src, dst) = (m - k, m + k);
        let omega_k = power(&cert.omega, n, k);
        let sources = &report.representatives[src];
        let columns = sources
            .iter()
            .map(|r| report.class_of(dst, &wedge(n, 2 * k, &omega_k, src, r)))
            .collect::<Result<Vec<_>>>()?;
        let target_dim = report.betti[dst];
        let matrix = QMatrix::from_columns(target_dim, &columns);
        let rank = matrix.rank();
        let mut pairing = QMatrix::zeros(sources.len(), sources.len());
        for (i, a) in sources.iter().enumerate() {
            let oa = wedge(n, 2 * k, &omega_k, src, a);
            for (j, b) in sources.iter().enumerate() {
                pairing[(i, j)] = wedge(n, dst, &oa, src, b)[0].clone();
            }
        }
        levels.push(LefschetzLevel {
            k,
            source_degree: src,
            target_degree: dst,
            isomorphism: sources.len() == target_dim && rank == target_dim,
            rank,
            source_dim: sources.len(),
            target_dim,
            pairing_rank: pairing.rank(),
            matrix,
        });
    }
    Ok(LefschetzReport {
        holds: levels.iter().all(|l| l.isomorphism),
        duality_consistent: levels.iter().all(|l| l.pairing_rank == l.rank),
        levels,
    })
}
