//! Map documents, scripts and the `holomap` command-line tool built on
//! `holomap-core`.

pub mod cli;
pub mod document;
pub mod error;
pub mod report;
pub mod script;

pub use document::MapDocument;
pub use error::{CliError, InputError};
