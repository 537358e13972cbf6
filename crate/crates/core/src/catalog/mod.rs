//! Feasible-tuple enumeration, bound-comparison scans and their output formats.

pub mod annotations;
mod emit;
mod scan;

pub use annotations::{annotation, known_nonexistent, Annotation, Existence, Sharpness};
pub use emit::{emit, emit_to_string, parse_json, OutputFormat, CSV_HEADER};
pub use scan::{
    conjecture_scan, enumerate_feasible, scan_compare, Filter, ScanConfig, ScanOutcome, ScanRecord, ScanStats,
};
