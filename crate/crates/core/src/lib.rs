//! Exact clique-number bounds for strongly regular and edge-regular graph parameters.

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod graph;
pub mod identities;
pub mod poly;
pub mod srg;

pub use error::{Error, Result};
pub use exactnum::{QuadExt, Rational};
pub use srg::{EdgeRegularParams, SrgParams};
