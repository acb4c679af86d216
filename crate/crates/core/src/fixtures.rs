//! The presentation files shipped in `fixtures/`, embedded at compile time.

use crate::error::Result;
use crate::hull::{parse_presentation, HullPresentation};

pub const NAMES: [&str; 8] = [
    "heisenberg",
    "heisenberg_std",
    "sol",
    "sol_std",
    "paper_k1",
    "paper_k2",
    "torus4",
    "kodaira_thurston",
];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "heisenberg" => include_str!("../../../fixtures/heisenberg.json"),
        "heisenberg_std" => include_str!("../../../fixtures/heisenberg_std.json"),
        "sol" => include_str!("../../../fixtures/sol.json"),
        "sol_std" => include_str!("../../../fixtures/sol_std.json"),
        "paper_k1" => include_str!("../../../fixtures/paper_k1.json"),
        "paper_k2" => include_str!("../../../fixtures/paper_k2.json"),
        "torus4" => include_str!("../../../fixtures/torus4.json"),
        "kodaira_thurston" => include_str!("../../../fixtures/kodaira_thurston.json"),
        _ => return None,
    })
}

/// Parses a shipped fixture. Panics on an unknown name.
pub fn load(name: &str) -> Result<HullPresentation> {
    parse_presentation(source(name).unwrap_or_else(|| panic!("unknown fixture {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_validate() {
        for name in NAMES {
            let h = load(name).unwrap();
            let report = h.validate();
            assert!(report.passed(), "{name}: {:?}", report.first_failure());
        }
    }
}
