//! The model `G = T ⋉ U` with a faithful matrix realisation, the images of
//! the generators of Γ, and a finite-dimensional rational module `V`.

use num_traits::Zero;
use serde::Serialize;

use super::unipotent::{exp_nilpotent, inverse_unipotent, is_unipotent, log_unipotent, PolyMatrix};
use crate::error::{Error, Result};
use crate::qkernel::{QMatrix, QPoly, Rational, SpanCoords};

/// Element of `G` stored split. The ambient matrix is `u·s`; `sv` is the
/// action of the semisimple part on the module.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    s: QMatrix,
    u: QMatrix,
    sv: QMatrix,
}

impl GroupElement {
    pub fn new(s: QMatrix, u: QMatrix, sv: QMatrix) -> Result<Self> {
        if !s.is_square() || s.rows() != u.rows() || !u.is_square() || !sv.is_square() {
            return Err(Error::InvalidPresentation("group element has mismatched shapes".into()));
        }
        if !is_unipotent(&u) {
            return Err(Error::NotUnipotent);
        }
        if s.determinant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(GroupElement { s, u, sv })
    }

    pub fn identity(ambient_dim: usize, module_dim: usize) -> Self {
        GroupElement {
            s: QMatrix::identity(ambient_dim),
            u: QMatrix::identity(ambient_dim),
            sv: QMatrix::identity(module_dim),
        }
    }

    pub fn s(&self) -> &QMatrix {
        &self.s
    }

    pub fn u(&self) -> &QMatrix {
        &self.u
    }

    /// Action of the semisimple part on the module.
    pub fn sv(&self) -> &QMatrix {
        &self.sv
    }

    pub fn ambient(&self) -> QMatrix {
        &self.u * &self.s
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_identity() && self.u.is_identity() && self.sv.is_identity()
    }

    /// `(s_a s_b, u_a · s_a u_b s_a⁻¹)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let sa_inv = self.s.inverse()?;
        let u = &self.u * &(&(&self.s * &other.u) * &sa_inv);
        if !is_unipotent(&u) {
            return Err(Error::NotInU);
        }
        Ok(GroupElement {
            s: &self.s * &other.s,
            u,
            sv: &self.sv * &other.sv,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let s_inv = self.s.inverse()?;
        let u_inv = inverse_unipotent(&self.u)?;
        Ok(GroupElement {
            u: &(&s_inv * &u_inv) * &self.s,
            s: s_inv,
            sv: self.sv.inverse()?,
        })
    }

    /// `α(g)x = u · s x s⁻¹`.
    pub fn act(&self, x: &QMatrix) -> Result<QMatrix> {
        Ok(&self.u * &(&(&self.s * x) * &self.s.inverse()?))
    }

    pub fn act_poly(&self, m: &PolyMatrix) -> Result<PolyMatrix> {
        let nv = m.nvars();
        let left = PolyMatrix::constant(&(&self.u * &self.s), nv);
        let right = PolyMatrix::constant(&self.s.inverse()?, nv);
        Ok(left.mul(m).mul(&right))
    }
}

/// Finite-dimensional rational `G`-module: `R_gens[j]` is the action of the
/// `j`-th torus generator, `r_basis[i]` the action of `X_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalModule {
    pub dim: usize,
    pub r_gens: Vec<QMatrix>,
    pub r_basis: Vec<QMatrix>,
}

impl RationalModule {
    pub fn trivial(n: usize, m: usize) -> Self {
        RationalModule {
            dim: 1,
            r_gens: vec![QMatrix::identity(1); m],
            r_basis: vec![QMatrix::zeros(1, 1); n],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.dim == 1
            && self.r_gens.iter().all(QMatrix::is_identity)
            && self.r_basis.iter().all(QMatrix::is_zero)
    }

    pub fn has_trivial_lie_action(&self) -> bool {
        self.r_basis.iter().all(QMatrix::is_zero)
    }
}

/// A named generator of Γ as supplied in a presentation. `t_word` optionally
/// writes `s` as a word in the torus generators: entry `±(j+1)` stands for
/// `S_j^{±1}`; it determines the module action of `s`.
#[derive(Clone, Debug)]
pub struct GammaGenerator {
    pub name: String,
    pub s: QMatrix,
    pub u: QMatrix,
    pub t_word: Option<Vec<i64>>,
}

/// Marks a presentation as `Γ = ℤ ⋉_A ℤ^m`: `stable` names the generator of
/// the ℤ factor and `base` the generators of ℤ^m, with column `j` of
/// `monodromy` the image of `base[j]` under conjugation by `stable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitExtensionTag {
    pub stable: String,
    pub base: Vec<String>,
    pub monodromy: QMatrix,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ValidationCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(ValidationCheck {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure,
        });
    }

    pub fn into_result(self) -> Result<Self> {
        match self.first_failure() {
            Some(c) => Err(Error::InvalidPresentation(format!(
                "{}: {}",
                c.name,
                c.detail.as_deref().unwrap_or("failed")
            ))),
            None => Ok(self),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HullPresentation {
    ambient_dim: usize,
    u_basis: Vec<QMatrix>,
    t_generators: Vec<QMatrix>,
    gamma: Vec<(String, GroupElement)>,
    gamma_words: Vec<Option<Vec<i64>>>,
    declared_rank: Option<usize>,
    module: RationalModule,
    split_extension: Option<SplitExtensionTag>,
    span: SpanCoords,
}

fn flatten(m: &QMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidPresentation(msg.into())
}

impl HullPresentation {
    /// Builds a presentation after shape checks. Algebraic invariants are
    /// checked separately by [`HullPresentation::validate`].
    pub fn new(
        ambient_dim: usize,
        u_basis: Vec<QMatrix>,
        t_generators: Vec<QMatrix>,
        gamma_generators: Vec<GammaGenerator>,
        declared_rank: Option<usize>,
        module: Option<RationalModule>,
        split_extension: Option<SplitExtensionTag>,
    ) -> Result<Self> {
        let nn = ambient_dim;
        let square = |m: &QMatrix, d: usize| m.rows() == d && m.cols() == d;
        for (i, x) in u_basis.iter().enumerate() {
            if !square(x, nn) {
                return Err(invalid(format!("u_basis[{i}] is not {nn}x{nn}")));
            }
        }
        for (j, s) in t_generators.iter().enumerate() {
            if !square(s, nn) {
                return Err(invalid(format!("t_generators[{j}] is not {nn}x{nn}")));
            }
        }
        let n = u_basis.len();
        let module = module.unwrap_or_else(|| RationalModule::trivial(n, t_generators.len()));
        let dv = module.dim;
        if dv == 0 {
            return Err(invalid("module dimension must be positive"));
        }
        if module.r_gens.len() != t_generators.len() {
            return Err(invalid(format!(
                "module has {} R_gens for {} t_generators",
                module.r_gens.len(),
                t_generators.len()
            )));
        }
        if module.r_basis.len() != n {
            return Err(invalid(format!(
                "module has {} r_basis matrices for {n} u_basis elements",
                module.r_basis.len()
            )));
        }
        for m in module.r_gens.iter().chain(&module.r_basis) {
            if !square(m, dv) {
                return Err(invalid(format!("module matrices must be {dv}x{dv}")));
            }
        }
        let span = SpanCoords::new(nn * nn, &u_basis.iter().map(flatten).collect::<Vec<_>>())
            .map_err(|_| invalid("u_basis is linearly dependent"))?;

        let r_inv: Vec<QMatrix> = module
            .r_gens
            .iter()
            .enumerate()
            .map(|(j, r)| r.inverse().map_err(|_| invalid(format!("R_gens[{j}] is singular"))))
            .collect::<Result<_>>()?;
        let s_inv: Vec<QMatrix> = t_generators
            .iter()
            .enumerate()
            .map(|(j, s)| s.inverse().map_err(|_| invalid(format!("t_generators[{j}] is singular"))))
            .collect::<Result<_>>()?;

        let mut gamma = Vec::with_capacity(gamma_generators.len());
        let mut gamma_words = Vec::with_capacity(gamma_generators.len());
        for g in gamma_generators {
            if !square(&g.s, nn) || !square(&g.u, nn) {
                return Err(invalid(format!("generator {} is not {nn}x{nn}", g.name)));
            }
            if gamma.iter().any(|(name, _)| *name == g.name) {
                return Err(invalid(format!("duplicate generator name {}", g.name)));
            }
            let sv = match &g.t_word {
                Some(word) => {
                    let mut sv = QMatrix::identity(dv);
                    for &letter in word {
                        let j = letter.unsigned_abs() as usize;
                        if letter == 0 || j > t_generators.len() {
                            return Err(invalid(format!("generator {}: bad t_word letter {letter}", g.name)));
                        }
                        let r = if letter > 0 { &module.r_gens[j - 1] } else { &r_inv[j - 1] };
                        sv = &sv * r;
                    }
                    sv
                }
                None => {
                    if g.s.is_identity() || module.r_gens.iter().all(QMatrix::is_identity) {
                        QMatrix::identity(dv)
                    } else if let Some(j) = t_generators.iter().position(|s| *s == g.s) {
                        module.r_gens[j].clone()
                    } else if let Some(j) = s_inv.iter().position(|s| *s == g.s) {
                        r_inv[j].clone()
                    } else {
                        return Err(invalid(format!(
                            "generator {}: semisimple part is not a torus generator; supply t_word",
                            g.name
                        )));
                    }
                }
            };
            let el = GroupElement::new(g.s, g.u, sv).map_err(|e| invalid(format!("generator {}: {e}", g.name)))?;
            gamma.push((g.name, el));
            gamma_words.push(g.t_word);
        }
        if let Some(tag) = &split_extension {
            let m = tag.base.len();
            if tag.monodromy.rows() != m || tag.monodromy.cols() != m {
                return Err(invalid("monodromy must be square of size |base|"));
            }
            for name in std::iter::once(&tag.stable).chain(&tag.base) {
                if !gamma.iter().any(|(g, _)| g == name) {
                    return Err(invalid(format!("oracle tag names unknown generator {name}")));
                }
            }
        }
        Ok(HullPresentation {
            ambient_dim,
            u_basis,
            t_generators,
            gamma,
            gamma_words,
            declared_rank,
            module,
            split_extension,
            span,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// `dim 𝔲`.
    pub fn n(&self) -> usize {
        self.u_basis.len()
    }

    pub fn u_basis(&self) -> &[QMatrix] {
        &self.u_basis
    }

    pub fn t_generators(&self) -> &[QMatrix] {
        &self.t_generators
    }

    pub fn module(&self) -> &RationalModule {
        &self.module
    }

    pub fn module_dim(&self) -> usize {
        self.module.dim
    }

    pub fn declared_rank(&self) -> Option<usize> {
        self.declared_rank
    }

    pub fn split_extension(&self) -> Option<&SplitExtensionTag> {
        self.split_extension.as_ref()
    }

    pub fn generators(&self) -> &[(String, GroupElement)] {
        &self.gamma
    }

    pub fn generator(&self, name: &str) -> Option<&GroupElement> {
        self.gamma.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.ambient_dim, self.module.dim)
    }

    /// Product of generators; letter `±(i+1)` is generator `i` or its inverse.
    pub fn word(&self, letters: &[i64]) -> Result<GroupElement> {
        let mut g = self.identity();
        for &l in letters {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i > self.gamma.len() {
                return Err(invalid(format!("bad word letter {l}")));
            }
            let x = &self.gamma[i - 1].1;
            g = if l > 0 { g.multiply(x)? } else { g.multiply(&x.inverse()?)? };
        }
        Ok(g)
    }

    /// Human-readable word, e.g. `a b^-1`.
    pub fn word_to_string(&self, letters: &[i64]) -> String {
        if letters.is_empty() {
            return "e".into();
        }
        letters
            .iter()
            .map(|&l| {
                let name = &self.gamma[l.unsigned_abs() as usize - 1].0;
                if l > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Coordinates of `x ∈ 𝔲` in `u_basis`.
    pub fn u_coords(&self, x: &QMatrix) -> Result<Vec<Rational>> {
        self.span.coords(x.entries()).ok_or(Error::NotInSpan)
    }

    /// Coordinates of a polynomial matrix with values in `𝔲`.
    pub fn u_coords_poly(&self, x: &PolyMatrix) -> Result<Vec<QPoly>> {
        let nv = x.nvars();
        let picked: Vec<&QPoly> = self.span.pivot_rows().iter().map(|&i| &x.entries()[i]).collect();
        let inv = self.span.block_inverse();
        let coords: Vec<QPoly> = (0..self.n())
            .map(|k| {
                let mut acc = QPoly::zero(nv);
                for (j, p) in picked.iter().enumerate() {
                    if !inv[(k, j)].is_zero() {
                        acc.add_scaled(p, &inv[(k, j)]);
                    }
                }
                acc
            })
            .collect();
        if self.u_combination_poly(&coords, nv) != *x {
            return Err(Error::NotInSpan);
        }
        Ok(coords)
    }

    pub fn u_combination(&self, c: &[Rational]) -> QMatrix {
        let mut out = QMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for (a, x) in c.iter().zip(&self.u_basis) {
            if !a.is_zero() {
                out = &out + &x.scale(a);
            }
        }
        out
    }

    fn u_combination_poly(&self, c: &[QPoly], nv: usize) -> PolyMatrix {
        combination_poly(&self.u_basis, c, nv)
    }

    /// Matrix of `X ↦ s X s⁻¹` on `𝔲`: column `i` holds the coordinates of
    /// `s X_i s⁻¹`.
    pub fn adjoint(&self, s: &QMatrix) -> Result<QMatrix> {
        let s_inv = s.inverse()?;
        let cols: Vec<Vec<Rational>> = self
            .u_basis
            .iter()
            .map(|x| self.u_coords(&(&(s * x) * &s_inv)))
            .collect::<Result<_>>()?;
        Ok(QMatrix::from_columns(self.n(), &cols))
    }

    /// `r(Σ c_i X_i)`.
    pub fn r_of(&self, c: &[Rational]) -> QMatrix {
        let dv = self.module.dim;
        let mut out = QMatrix::zeros(dv, dv);
        for (a, r) in c.iter().zip(&self.module.r_basis) {
            if !a.is_zero() {
                out = &out + &r.scale(a);
            }
        }
        out
    }

    /// `ρ_V(u) = exp(r(log u))` for `u ∈ U`.
    pub fn rho_u(&self, u: &QMatrix) -> Result<QMatrix> {
        if self.module.has_trivial_lie_action() {
            return Ok(QMatrix::identity(self.module.dim));
        }
        let c = self.u_coords(&log_unipotent(u)?)?;
        exp_nilpotent(&self.r_of(&c))
    }

    pub fn rho_u_poly(&self, m: &PolyMatrix) -> Result<PolyMatrix> {
        let nv = m.nvars();
        if self.module.has_trivial_lie_action() {
            return Ok(PolyMatrix::identity(self.module.dim, nv));
        }
        let c = self.u_coords_poly(&log_unipotent(m)?)?;
        exp_nilpotent(&combination_poly(&self.module.r_basis, &c, nv))
    }

    /// `ρ_V(g) = ρ_V(u)·R(s)`.
    pub fn rho(&self, g: &GroupElement) -> Result<QMatrix> {
        Ok(&self.rho_u(g.u())? * g.sv())
    }

    /// Checks every algebraic invariant of the presentation.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let nn = self.ambient_dim;
        let n = self.n();

        let bad: Vec<usize> = (0..n).filter(|&i| !self.u_basis[i].is_nilpotent()).collect();
        rep.push(
            "u_basis nilpotent",
            (!bad.is_empty()).then(|| format!("X{} is not nilpotent", bad[0] + 1)),
        );

        let mut closure = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                if self.u_coords(&self.u_basis[i].commutator(&self.u_basis[j])).is_err() {
                    closure = Some(format!("[X{}, X{}] leaves span(u_basis)", i + 1, j + 1));
                    break 'outer;
                }
            }
        }
        rep.push("u_basis bracket-closed", closure);

        let mut normal = None;
        for (j, s) in self.t_generators.iter().enumerate() {
            if self.adjoint(s).is_err() {
                normal = Some(format!("S{} does not normalize span(u_basis)", j + 1));
                break;
            }
        }
        rep.push("t_generators normalize u", normal);

        rep.push(
            "full representation rank",
            self.declared_rank
                .filter(|&r| r != n)
                .map(|r| format!("dim u = {n} but declared rank is {r}")),
        );

        let m = &self.module;
        let bad: Vec<usize> = (0..n).filter(|&i| !m.r_basis[i].is_nilpotent()).collect();
        rep.push(
            "module r nilpotent",
            (!bad.is_empty()).then(|| format!("r(X{}) is not nilpotent", bad[0] + 1)),
        );

        let mut hom = None;
        'hom: for i in 0..n {
            for j in i + 1..n {
                let br = self.u_basis[i].commutator(&self.u_basis[j]);
                let Ok(c) = self.u_coords(&br) else { continue };
                if self.r_of(&c) != m.r_basis[i].commutator(&m.r_basis[j]) {
                    hom = Some(format!("r([X{a}, X{b}]) != [r(X{a}), r(X{b})]", a = i + 1, b = j + 1));
                    break 'hom;
                }
            }
        }
        rep.push("module r bracket homomorphism", hom);

        let mut compat = None;
        'compat: for (j, s) in self.t_generators.iter().enumerate() {
            let Ok(ad) = self.adjoint(s) else { continue };
            let r = &m.r_gens[j];
            let r_inv = r.inverse().expect("checked at construction");
            for i in 0..n {
                let lhs = &(r * &m.r_basis[i]) * &r_inv;
                if lhs != self.r_of(&ad.column(i)) {
                    compat = Some(format!("R{a} r(X{b}) R{a}^-1 != r(S{a} X{b} S{a}^-1)", a = j + 1, b = i + 1));
                    break 'compat;
                }
            }
        }
        rep.push("module compatible with torus", compat);

        let mut gens = None;
        for (name, g) in &self.gamma {
            if self.u_coords(&log_unipotent(g.u()).expect("unipotent")).is_err() {
                gens = Some(format!("unipotent part of {name} is not in U"));
                break;
            }
        }
        rep.push("gamma unipotent parts in U", gens);

        let mut semis = None;
        for ((name, g), word) in self.gamma.iter().zip(&self.gamma_words) {
            let ok = match word {
                Some(w) => {
                    let mut s = QMatrix::identity(nn);
                    for &l in w {
                        let t = &self.t_generators[l.unsigned_abs() as usize - 1];
                        s = if l > 0 { &s * t } else { &s * &t.inverse().expect("checked") };
                    }
                    s == *g.s()
                }
                None => {
                    g.s().is_identity()
                        || self.t_generators.iter().any(|t| t == g.s())
                        || self.t_generators.iter().any(|t| t.inverse().ok().as_ref() == Some(g.s()))
                }
            };
            if !ok {
                semis = Some(format!("semisimple part of {name} is not the given torus word"));
                break;
            }
        }
        rep.push("gamma semisimple parts in T", semis);

        let mut relations = None;
        if let Some(tag) = &self.split_extension {
            relations = self.check_split_relations(tag).err().map(|e| e.to_string());
        }
        rep.push("oracle tag relations", relations);
        rep
    }

    /// Checks that the base generators commute and that conjugation by the
    /// stable generator acts on them by the monodromy matrix.
    fn check_split_relations(&self, tag: &SplitExtensionTag) -> Result<()> {
        let get = |name: &str| self.generator(name).expect("checked at construction");
        let base: Vec<&GroupElement> = tag.base.iter().map(|b| get(b)).collect();
        for (i, a) in base.iter().enumerate() {
            for (j, b) in base.iter().enumerate().skip(i + 1) {
                if a.multiply(b)? != b.multiply(a)? {
                    return Err(invalid(format!("{} and {} do not commute", tag.base[i], tag.base[j])));
                }
            }
        }
        let t = get(&tag.stable);
        let t_inv = t.inverse()?;
        for j in 0..base.len() {
            let lhs = t.multiply(base[j])?.multiply(&t_inv)?;
            let mut rhs = self.identity();
            for (i, b) in base.iter().enumerate() {
                let e = &tag.monodromy[(i, j)];
                if !e.is_integer() {
                    return Err(invalid("monodromy must be integral"));
                }
                let k: i64 = e.to_integer().try_into().map_err(|_| invalid("monodromy entry too large"))?;
                let step = if k >= 0 { (*b).clone() } else { b.inverse()? };
                for _ in 0..k.unsigned_abs() {
                    rhs = rhs.multiply(&step)?;
                }
            }
            if lhs != rhs {
                return Err(invalid(format!(
                    "{s} {b} {s}^-1 does not match monodromy column {c}",
                    s = tag.stable,
                    b = tag.base[j],
                    c = j + 1
                )));
            }
        }
        Ok(())
    }
}

/// `Σ c_i B_i` with polynomial coefficients and constant matrices.
pub fn combination_poly(basis: &[QMatrix], c: &[QPoly], nv: usize) -> PolyMatrix {
    let (r, k) = basis.first().map_or((0, 0), |b| (b.rows(), b.cols()));
    PolyMatrix::from_fn(r, k, nv, |i, j| {
        let mut acc = QPoly::zero(nv);
        for (p, b) in c.iter().zip(basis) {
            if !b[(i, j)].is_zero() {
                acc.add_scaled(p, &b[(i, j)]);
            }
        }
        acc
    })
}
