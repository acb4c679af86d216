//! The group `G = T ⋉ U`, its unipotent exp/log, polynomial simplices and
//! the pullback of invariant forms.

pub mod format;
pub mod presentation;
pub mod pullback;
pub mod sigma;
pub mod unipotent;

pub use format::{parse_presentation, PresentationFile, SPLIT_EXTENSION_CLASS};
pub use presentation::{
    GammaGenerator, GroupElement, HullPresentation, RationalModule, SplitExtensionTag, ValidationCheck,
    ValidationReport,
};
pub use pullback::{maurer_cartan, pullback_along, pullback_form, theta};
pub use sigma::{sigma, SimplexBuilder};
pub use unipotent::{exp_nilpotent, inverse_unipotent, is_unipotent, log_unipotent, MatrixAlgebra, PolyMatrix};
