//! JSON presentation files. All numbers are strings `"p/q"` or `"p"`.
//!
//! ```json
//! {
//!   "ambient_dim": 3,
//!   "u_basis": [[["0","1","0"],["0","0","0"],["0","0","0"]], ...],
//!   "t_generators": [],
//!   "gamma_generators": [{"name": "x", "s": [...], "u": [...], "t_word": [1]}],
//!   "declared_rank": 3,
//!   "module": {"dim": 1, "R_gens": [], "r_basis": [[["0"]], ...]},
//!   "oracle": {"class": "z_ltimes_zm", "stable": "x", "base": ["y","z"],
//!              "monodromy": [["1","0"],["1","1"]]}
//! }
//! ```
//!
//! `t_generators`, `declared_rank`, `module` (default: trivial
//! one-dimensional), `t_word` and `oracle` are optional.

use serde::{Deserialize, Serialize};

use super::presentation::{GammaGenerator, HullPresentation, RationalModule, SplitExtensionTag};
use crate::error::{Error, Result};
use crate::qkernel::{format_rational, parse_rational, QMatrix};

type MatrixText = Vec<Vec<String>>;

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub ambient_dim: usize,
    pub u_basis: Vec<MatrixText>,
    #[serde(default)]
    pub t_generators: Vec<MatrixText>,
    pub gamma_generators: Vec<GeneratorFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub name: String,
    pub s: MatrixText,
    pub u: MatrixText,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_word: Option<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dim: usize,
    #[serde(rename = "R_gens")]
    pub r_gens: Vec<MatrixText>,
    pub r_basis: Vec<MatrixText>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct OracleFile {
    pub class: String,
    pub stable: String,
    pub base: Vec<String>,
    pub monodromy: MatrixText,
}

pub const SPLIT_EXTENSION_CLASS: &str = "z_ltimes_zm";

fn matrix(text: &MatrixText, what: &str) -> Result<QMatrix> {
    let rows = text
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Parse(format!("{what}: {e}")))?;
    QMatrix::from_rows(rows).map_err(|_| Error::Parse(format!("{what}: ragged matrix")))
}

fn matrices(list: &[MatrixText], what: &str) -> Result<Vec<QMatrix>> {
    list.iter()
        .enumerate()
        .map(|(i, m)| matrix(m, &format!("{what}[{i}]")))
        .collect()
}

pub fn matrix_text(m: &QMatrix) -> MatrixText {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

/// Parses a presentation. Syntax errors report line, column and field path.
pub fn parse_presentation(text: &str) -> Result<HullPresentation> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: PresentationFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let inner = e.inner();
        Error::Parse(format!(
            "at `{}` (line {}, column {}): {}",
            e.path(),
            inner.line(),
            inner.column(),
            inner
        ))
    })?;
    file.build()
}

impl PresentationFile {
    pub fn build(&self) -> Result<HullPresentation> {
        let u_basis = matrices(&self.u_basis, "u_basis")?;
        let t_generators = matrices(&self.t_generators, "t_generators")?;
        let gamma = self
            .gamma_generators
            .iter()
            .map(|g| {
                Ok(GammaGenerator {
                    name: g.name.clone(),
                    s: matrix(&g.s, &format!("gamma_generators[{}].s", g.name))?,
                    u: matrix(&g.u, &format!("gamma_generators[{}].u", g.name))?,
                    t_word: g.t_word.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let module = self
            .module
            .as_ref()
            .map(|m| {
                Ok(RationalModule {
                    dim: m.dim,
                    r_gens: matrices(&m.r_gens, "module.R_gens")?,
                    r_basis: matrices(&m.r_basis, "module.r_basis")?,
                })
            })
            .transpose()?;
        let tag = self
            .oracle
            .as_ref()
            .map(|o| {
                if o.class != SPLIT_EXTENSION_CLASS {
                    return Err(Error::Parse(format!(
                        "oracle.class: unsupported group class {:?} (expected {SPLIT_EXTENSION_CLASS:?})",
                        o.class
                    )));
                }
                Ok(SplitExtensionTag {
                    stable: o.stable.clone(),
                    base: o.base.clone(),
                    monodromy: matrix(&o.monodromy, "oracle.monodromy")?,
                })
            })
            .transpose()?;
        HullPresentation::new(
            self.ambient_dim,
            u_basis,
            t_generators,
            gamma,
            self.declared_rank,
            module,
            tag,
        )
    }
}
