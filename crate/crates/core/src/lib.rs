//! Facial nonrepetitive colourings of outerplane and plane graphs.
//!
//! A colouring of an embedded graph is *facially nonrepetitive* when no
//! path running along a face boundary has a colour sequence of the form
//! `xx`. This crate builds such colourings with at most 11 colours for
//! outerplane graphs and 22 for plane graphs, and certifies every result
//! with an independent verifier.

pub mod blocking;
pub mod colour;
pub mod embed;
pub mod error;
pub mod gen;
pub mod util;
pub mod verify;
pub mod words;

pub use embed::EmbeddedGraph;
pub use error::{Error, Result};
