//! Binary angle labelings of plane quadrangulations and related graph classes.
//!
//! The crate is organized bottom-up:
//!
//! * [`embed`]: rotation-system plane graphs and derived graphs (split-dual,
//!   completion, the suspension `S_G`), structural predicates, canonical codes.
//! * [`rules`]: angle labelings and validators for the weak, strong,
//!   generalized and extended weak rule families.
//! * [`orient`]: alpha-orientations by max-flow and the bijections between
//!   labelings, orientations and separating decompositions.
//! * [`build`]: constructive labeling algorithms and split/merge moves.
//! * [`book`]: face-counting coordinates and 2-book embeddings.
//! * [`flip`]: directed-cycle flips and the lattice minimum.
//! * [`laman`]: Laman graphs, Henneberg sequences, extended weak labelings.
//! * [`oracle`]: exhaustive generators used as test oracles.
//! * [`format`]: the line-based text formats.

pub mod book;
pub mod build;
pub mod embed;
pub mod error;
pub mod flip;
pub mod format;
mod flow;
pub mod laman;
pub mod oracle;
pub mod orient;
pub mod rules;

pub use embed::{Color, ColorMode, PlaneGraph};
pub use error::{Error, Result};
