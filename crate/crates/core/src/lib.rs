//! Exact average connectivity of graphs and digraphs, and search for
//! orientations that maximize it.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`] holds the shared representations ([`Graph`], [`Digraph`],
//!   [`Orientation`]) plus graph6 / edge-list codecs and basic predicates.
//! * [`connectivity`] computes pairwise and average connectivities by
//!   unit-capacity max-flow, potentials, and full-pair accounting.
//! * [`search`] finds the maximum average connectivity over all
//!   orientations, with certificates.
//! * [`families`] and [`transforms`] generate the named graph families and
//!   structural transforms (inflation, subdivision, weak dual).
//! * [`bounds`] evaluates closed-form bounds and checks them against
//!   computed values.
//! * [`cli`] and [`repro`] back the `avgconn` binary.

pub mod bounds;
pub mod cli;
pub mod connectivity;
mod error;
pub mod families;
mod flow;
pub mod graph;
mod rational;
pub mod repro;
pub mod search;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph, Orientation};
pub use rational::Rational;
