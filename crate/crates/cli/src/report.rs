//! Report types. Every rational is a string `"p/q"` or `"p"`; see
//! `docs/report-schema.md`.

use hullcoh_core::exterior::{bits, ExteriorBasis};
use hullcoh_core::hull::{HullPresentation, ValidationCheck, ValidationReport};
use hullcoh_core::lefschetz::{LefschetzReport, SearchOptions, SearchStage, SymplecticCertificate};
use hullcoh_core::liecomplex::{CohomologyReport, MinimalModelReport};
use hullcoh_core::qkernel::{format_rational, QMatrix, Rational};
use hullcoh_core::simpclass::{Counterexample, DegreeSummary, VerificationReport};
use num_traits::Zero;
use serde::Serialize;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub exit_code: i32,
    pub report: Report,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
pub enum Report {
    Check(CheckReport),
    Betti(BettiReport),
    MinimalModel(MinimalModelOut),
    PsiTest(PsiOut),
    Lefschetz(LefschetzOut),
    Error(ErrorReport),
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
}

fn q(x: &Rational) -> String {
    format_rational(x)
}

fn qs(v: &[Rational]) -> Vec<String> {
    v.iter().map(q).collect()
}

fn matrix(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| qs(r)).collect()
}

/// `e1∧e3` for a subset mask (1-based names).
pub fn monomial(mask: u32, letter: &str) -> String {
    if mask == 0 {
        return "1".into();
    }
    bits(mask).map(|i| format!("{letter}{}", i + 1)).collect::<Vec<_>>().join("∧")
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: String,
    pub basis: String,
}

/// Nonzero coordinates of a scalar `k`-form on an `n`-dimensional space.
fn terms(n: usize, k: usize, v: &[Rational]) -> Vec<Term> {
    let basis = ExteriorBasis::new(n, k);
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| Term {
            coefficient: q(x),
            basis: monomial(basis.mask(i), "e"),
        })
        .collect()
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub ambient_dim: usize,
    pub lie_algebra_dim: usize,
    pub module_dim: usize,
    pub generators: Vec<String>,
    pub checks: Vec<ValidationCheck>,
}

impl CheckReport {
    pub fn new(h: &HullPresentation, v: ValidationReport) -> Self {
        Self {
            passed: v.passed(),
            ambient_dim: h.ambient_dim(),
            lie_algebra_dim: h.n(),
            module_dim: h.module_dim(),
            generators: h.generators().iter().map(|(n, _)| n.clone()).collect(),
            checks: v.checks,
        }
    }
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Agree,
    Disagree,
    NoOracle,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CeSide {
    pub betti: Vec<usize>,
    pub cochain_dims: Vec<usize>,
    pub euler_characteristic: i64,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct OracleSide {
    pub class: String,
    pub betti: Vec<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    pub lie_algebra_dim: usize,
    pub module_dim: usize,
    pub ce: CeSide,
    pub oracle: Option<OracleSide>,
    pub verdict: Verdict,
}

impl BettiReport {
    pub fn new(h: &HullPresentation, ce: &CohomologyReport, oracle: Option<Vec<usize>>) -> Self {
        let verdict = match &oracle {
            None => Verdict::NoOracle,
            Some(b) if *b == ce.betti => Verdict::Agree,
            Some(_) => Verdict::Disagree,
        };
        Self {
            lie_algebra_dim: h.n(),
            module_dim: h.module_dim(),
            ce: CeSide {
                betti: ce.betti.clone(),
                cochain_dims: ce.cochain_dims.clone(),
                euler_characteristic: ce.euler_characteristic,
            },
            oracle: oracle.map(|betti| OracleSide {
                class: hullcoh_core::hull::SPLIT_EXTENSION_CLASS.into(),
                betti,
            }),
            verdict,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct GeneratorOut {
    pub name: String,
    /// Coordinates of the dual Lie algebra vector in the input basis.
    pub dual_to: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct DifferentialOut {
    pub generator: String,
    pub terms: Vec<Term>,
    pub text: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct MinimalModelOut {
    pub generators: Vec<GeneratorOut>,
    pub differential: Vec<DifferentialOut>,
    pub order: Vec<String>,
    pub lcs_dims: Vec<usize>,
    pub basis_changed: bool,
    pub decomposable: bool,
    pub triangular: bool,
    pub minimal: bool,
    /// Matrices of the torus generators on the Lie algebra; the
    /// differential commutes with the dual action.
    pub torus_action: Vec<Vec<Vec<String>>>,
}

impl MinimalModelOut {
    pub fn new(mm: &MinimalModelReport, adjoints: &[QMatrix]) -> Self {
        let n = mm.basis.cols();
        let name = |k: usize| format!("xi{}", k + 1);
        let differential = mm
            .differential
            .iter()
            .enumerate()
            .map(|(k, ts)| {
                let terms: Vec<Term> = ts
                    .iter()
                    .map(|t| Term {
                        coefficient: q(&t.coefficient),
                        basis: format!("{}∧{}", name(t.i), name(t.j)),
                    })
                    .collect();
                let rhs = if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms
                        .iter()
                        .map(|t| format!("{} {}", t.coefficient, t.basis))
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                DifferentialOut {
                    generator: name(k),
                    text: format!("d{} = {rhs}", name(k)),
                    terms,
                }
            })
            .collect();
        Self {
            generators: (0..n)
                .map(|k| GeneratorOut {
                    name: name(k),
                    dual_to: qs(&mm.basis.column(k)),
                })
                .collect(),
            differential,
            order: mm.order.iter().map(|&k| name(k)).collect(),
            lcs_dims: mm.lcs_dims.clone(),
            basis_changed: !mm.is_permutation,
            decomposable: mm.decomposable,
            triangular: mm.triangular,
            minimal: mm.decomposable && mm.triangular,
            torus_action: adjoints.iter().map(matrix).collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct PsiOut {
    pub passed: bool,
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_word_length: usize,
    pub degrees: Vec<DegreeSummary>,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl From<VerificationReport> for PsiOut {
    fn from(r: VerificationReport) -> Self {
        Self {
            passed: r.passed,
            max_degree: r.max_degree,
            samples: r.samples,
            seed: r.seed,
            max_word_length: r.max_word_length,
            degrees: r.degrees,
            failures: r.failures,
            counterexamples: r.counterexamples,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SearchOut {
    pub seed: u64,
    pub height: u32,
    pub draws: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CertificateOut {
    pub omega: Vec<Term>,
    pub coefficients: Vec<String>,
    pub half_dim: usize,
    pub top_coefficient: String,
    pub denominator: String,
    pub integral_omega: Vec<Term>,
    /// `enumeration` or `random`.
    pub stage: String,
    pub stage_index: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LevelOut {
    pub k: usize,
    pub source_degree: usize,
    pub target_degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub isomorphism: bool,
    pub pairing_rank: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LefschetzVerdict {
    HlpVerified,
    HlpFailed,
    NoFormFound,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LefschetzOut {
    pub dimension: usize,
    pub closed_two_form_dim: usize,
    pub search: SearchOut,
    pub certificate: Option<CertificateOut>,
    pub levels: Vec<LevelOut>,
    pub duality_consistent: Option<bool>,
    pub first_failure: Option<usize>,
    pub verdict: LefschetzVerdict,
    pub note: String,
}

impl LefschetzOut {
    pub fn new(
        n: usize,
        closed: usize,
        opts: SearchOptions,
        cert: Option<&SymplecticCertificate>,
        hlp: Option<&LefschetzReport>,
    ) -> Self {
        let certificate = cert.map(|c| {
            let (stage, stage_index) = match c.stage {
                SearchStage::Enumeration(i) => ("enumeration", i),
                SearchStage::Random(i) => ("random", i),
            };
            CertificateOut {
                omega: terms(n, 2, &c.omega),
                coefficients: qs(&c.coefficients),
                half_dim: c.half_dim,
                top_coefficient: q(&c.top_coefficient),
                denominator: c.denominator.to_string(),
                integral_omega: terms(n, 2, &c.integral_omega()),
                stage: stage.into(),
                stage_index,
            }
        });
        let levels = hlp
            .map(|r| {
                r.levels
                    .iter()
                    .map(|l| LevelOut {
                        k: l.k,
                        source_degree: l.source_degree,
                        target_degree: l.target_degree,
                        source_dim: l.source_dim,
                        target_dim: l.target_dim,
                        rank: l.rank,
                        isomorphism: l.isomorphism,
                        pairing_rank: l.pairing_rank,
                        matrix: matrix(&l.matrix),
                    })
                    .collect()
            })
            .unwrap_or_default();
        let verdict = match hlp {
            None => LefschetzVerdict::NoFormFound,
            Some(r) if r.holds => LefschetzVerdict::HlpVerified,
            Some(_) => LefschetzVerdict::HlpFailed,
        };
        let note = match verdict {
            LefschetzVerdict::NoFormFound => {
                "no nondegenerate form was found; this is a search failure, not a proof that none exists"
            }
            LefschetzVerdict::HlpVerified => "every Lefschetz map is an isomorphism",
            LefschetzVerdict::HlpFailed => "a Lefschetz map is rank deficient",
        };
        Self {
            dimension: n,
            closed_two_form_dim: closed,
            search: SearchOut {
                seed: opts.seed,
                height: opts.height,
                draws: opts.draws,
            },
            certificate,
            levels,
            duality_consistent: hlp.map(|r| r.duality_consistent),
            first_failure: hlp.and_then(|r| r.first_failure()).map(|l| l.k),
            verdict,
            note: note.into(),
        }
    }
}
