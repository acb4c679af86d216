pub mod error;
pub mod exterior;
pub mod fixtures;
pub mod hull;
pub mod lefschetz;
pub mod liecomplex;
pub mod oracle;
pub mod polyform;
pub mod qkernel;
pub mod simpclass;

pub use error::{Error, Result};
