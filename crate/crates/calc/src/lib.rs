//! Command-line front end and file formats for [`blowup_core`].
//!
//! Every JSON object written carries `"schema": "blowup-calc/1"`.

pub mod acceptance;
pub mod cli;
pub mod config;
pub mod error;
pub mod parse;

pub use config::{Config, OutputFormat};
pub use error::CliError;
