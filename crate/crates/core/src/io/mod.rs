//! Incidence files, exporters and check reports.

mod document;
mod dot;
mod report;
mod tikz;

pub use document::{
    parse_incidence, to_canonical_json, IncidenceDocument, ParseError, META_CENTER,
    META_TRIANGLE, META_TRIANGLE_PRIME,
};
pub use dot::export_dot;
pub use report::{CheckEntry, CheckReport};
pub use tikz::export_tikz;
