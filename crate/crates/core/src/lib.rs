//! Important separators, principal-set enumeration and kernelization for
//! vertex multiway cut.

pub mod error;
pub mod family;
pub mod graph;
pub mod kernel;
pub mod oracle;
pub mod separator;

pub use error::{Error, ParseError, ParseErrorKind, Result};
