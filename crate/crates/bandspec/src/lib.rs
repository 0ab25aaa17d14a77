//! File formats, JSON documents, SVG diagrams and the command-line front end
//! for `bandspec-core`.

pub mod cli;
pub mod diagram;
pub mod document;
pub mod formats;

pub use document::{format_sig, SpectrumDocument, VerificationSummary};
pub use formats::{parse_edge_list, parse_mult_table, write_edge_list, FileLoader, FormatError};
