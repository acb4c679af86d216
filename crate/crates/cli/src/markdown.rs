use std::fmt::Write;

use crate::report::{Envelope, Report, Term};

fn form(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|t| format!("{} {}", t.coefficient, t.basis))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn render(env: &Envelope) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# hullcoh {}\n", env.command);
    let _ = writeln!(s, "- input: `{}`", env.input);
    let _ = writeln!(s, "- schema version: {}", env.schema_version);
    let _ = writeln!(s, "- exit code: {}\n", env.exit_code);
    match &env.report {
        Report::Error(e) => {
            let _ = writeln!(s, "**Error** ({}): {}", e.kind, e.message);
        }
        Report::Check(r) => {
            let _ = writeln!(
                s,
                "Ambient dimension {}, Lie algebra dimension {}, module dimension {}, generators {}.\n",
                r.ambient_dim,
                r.lie_algebra_dim,
                r.module_dim,
                list(&r.generators)
            );
            let _ = writeln!(s, "| check | result | detail |\n|---|---|---|");
            for c in &r.checks {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} |",
                    c.name,
                    if c.passed { "pass" } else { "FAIL" },
                    c.detail.as_deref().unwrap_or("")
                );
            }
            let _ = writeln!(s, "\n**{}**", if r.passed { "PASS" } else { "FAIL" });
        }
        Report::Betti(r) => {
            let _ = writeln!(s, "| side | Betti numbers |\n|---|---|");
            let _ = writeln!(s, "| invariant cochains | {} |", list(&r.ce.betti));
            if let Some(o) = &r.oracle {
                let _ = writeln!(s, "| group oracle ({}) | {} |", o.class, list(&o.betti));
            }
            let _ = writeln!(
                s,
                "\nCochain dimensions {}; Euler characteristic {}.\n",
                list(&r.ce.cochain_dims),
                r.ce.euler_characteristic
            );
            let verdict = serde_json::to_value(r.verdict).expect("verdict");
            let _ = writeln!(s, "**{}**", verdict.as_str().unwrap_or_default());
        }
        Report::MinimalModel(r) => {
            let _ = writeln!(s, "Generators (dual to the listed vectors):\n");
            for g in &r.generators {
                let _ = writeln!(s, "- {} ↔ ({})", g.name, list(&g.dual_to));
            }
            let _ = writeln!(s, "\nDifferential:\n");
            for d in &r.differential {
                let _ = writeln!(s, "- {}", d.text);
            }
            let _ = writeln!(s, "\nOrder: {}", list(&r.order));
            let _ = writeln!(s, "Lower central series dimensions: {}", list(&r.lcs_dims));
            let _ = writeln!(s, "Basis changed: {}", r.basis_changed);
            if !r.torus_action.is_empty() {
                let _ = writeln!(
                    s,
                    "Torus generators act on the generators ({} matrices); the differential is equivariant.",
                    r.torus_action.len()
                );
            }
            let _ = writeln!(s, "\n**{}**", if r.minimal { "MINIMAL" } else { "NOT MINIMAL" });
        }
        Report::PsiTest(r) => {
            let _ = writeln!(
                s,
                "{} samples per degree, seed {}, words of length ≤ {}.\n",
                r.samples, r.seed, r.max_word_length
            );
            let _ = writeln!(
                s,
                "| degree | cochains | samples | cochain map | equivariance | faces | ι∘ψ = θ | failures |\n|---|---|---|---|---|---|---|---|"
            );
            for d in &r.degrees {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    d.degree,
                    d.cochain_dim,
                    d.samples,
                    d.cochain_map,
                    d.equivariance,
                    d.face_coherence,
                    d.integration_agrees_with_theta,
                    d.failures
                );
            }
            if !r.counterexamples.is_empty() {
                let _ = writeln!(s, "\nCounterexamples ({} total):\n", r.failures);
                for c in &r.counterexamples {
                    let _ = writeln!(
                        s,
                        "- {} in degree {} on ({}): expected [{}], found [{}]",
                        c.check,
                        c.degree,
                        c.tuple.join(", "),
                        c.expected.join(", "),
                        c.found.join(", ")
                    );
                }
            }
            let _ = writeln!(s, "\n**{}**", if r.passed { "PASS" } else { "FAIL" });
        }
        Report::Lefschetz(r) => {
            let _ = writeln!(
                s,
                "Dimension {}; closed invariant 2-forms: {}.\n",
                r.dimension, r.closed_two_form_dim
            );
            if let Some(c) = &r.certificate {
                let _ = writeln!(s, "ω = {}", form(&c.omega));
                let _ = writeln!(s, "ω^{} top coefficient: {}", c.half_dim, c.top_coefficient);
                let _ = writeln!(s, "{} · ω = {}", c.denominator, form(&c.integral_omega));
                let _ = writeln!(s, "found by {} (index {})\n", c.stage, c.stage_index);
            }
            if !r.levels.is_empty() {
                let _ = writeln!(s, "| k | map | rank | isomorphism |\n|---|---|---|---|");
                for l in &r.levels {
                    let _ = writeln!(
                        s,
                        "| {} | H^{} ({}) → H^{} ({}) | {} | {} |",
                        l.k, l.source_degree, l.source_dim, l.target_degree, l.target_dim, l.rank, l.isomorphism
                    );
                }
                let _ = writeln!(s);
            }
            let verdict = serde_json::to_value(r.verdict).expect("verdict");
            let _ = writeln!(s, "**{}**: {}", verdict.as_str().unwrap_or_default(), r.note);
        }
    }
    s
}
