//! File formats, batch driver, verification suite and command line for
//! `stokeslab-core`.

pub mod cli;
pub mod csv;
pub mod error;
pub mod manifest;
pub mod meshio;
pub mod study;
pub mod verify;

pub use error::{Error, Result};
