//! Exact subgraph densities, W-random graphs and closure tests for
//! hereditary graph classes.
//!
//! Graphs live in [`graph`], exact densities in [`density`] and
//! [`graphon`], sampling in [`sampler`], hereditary classes in [`classes`],
//! closure verdicts in [`limit`] and random-freeness certificates in
//! [`certificates`]. The `limitlab` binary wraps all of it via [`cli`].

pub mod certificates;
pub mod classes;
pub mod cli;
pub mod density;
pub mod error;
pub mod exec;
pub mod graph;
pub mod graphon;
pub mod limit;
pub mod sampler;

pub use density::Rational;
pub use error::{Error, Result};
pub use exec::Exec;
