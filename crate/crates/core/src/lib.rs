pub mod classical;
mod decimal;
pub mod error;
pub mod experiment;
pub mod ff;
pub mod grr;
pub mod numthy;
pub mod perm;

pub use error::{Error, Result};
