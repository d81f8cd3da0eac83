//! Legendrian fronts in J¹R: parsing, validation, classical invariants, and
//! the Lagrangian resolution.

mod builtins;
mod classical;
mod front;
mod parse;
mod resolve;

pub use builtins::{builtin, odd_twist_word, parse_twist_word, twist_knot, twist_word_string, HalfTwist, BUILTIN_NAMES};
pub use classical::{maslov_potential, orientation, orientation_from, rotation_number, rotation_number_from, thurston_bennequin, writhe, MaslovPotential, Orientation};
pub use front::{Arc, ArcId, Event, FrontDiagram};
pub use parse::parse_front;
pub use resolve::{lagrangian_resolution, CrossingKind, ResolvedCrossing, ResolvedDiagram};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}: {message} (at `{token}`)")]
    Syntax { line: usize, token: String, message: String },
    #[error("event {event} ({tag}): position {pos} out of range with {strands} strands")]
    OutOfRange { event: usize, tag: char, pos: usize, strands: usize },
    #[error("diagram does not close: {strands} strands remain after the last event")]
    NotClosed { strands: usize },
    #[error("diagram has {components} components; only knots are supported")]
    MultiComponent { components: usize },
    #[error("diagram has no events")]
    Empty,
    #[error("unknown built-in diagram `{0}`")]
    UnknownBuiltin(String),
    #[error("invalid twist knot: {0}")]
    InvalidTwist(String),
}
