//! Crate-wide error type.

use crate::families::Family;
use crate::formulas::VertexClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse `{input}` as a rational: {reason}")]
    InvalidRational { input: String, reason: &'static str },

    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(u32),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: u32, order: usize },

    #[error("invalid edge list at line {line}: {reason}")]
    InvalidEdgeList { line: usize, reason: String },

    #[error("{family} requires m >= {min}, got m = {m}")]
    InvalidFamilyParameter { family: Family, min: u32, m: u32 },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("product factors must be nonempty")]
    EmptyFactor,

    #[error("graph of order {order} is degenerate here: {reason}")]
    DegenerateGraph { order: usize, reason: &'static str },

    #[error("centralization needs at least 3 values, got {0}")]
    TooFewValues(usize),

    #[error("no closed form for {family} at m = {m}: {reason}")]
    FormulaDomain {
        family: Family,
        m: u32,
        reason: &'static str,
    },

    #[error("vertex class `{class}` does not apply to {family} with m = {m}")]
    ClassDomain {
        class: VertexClass,
        family: Family,
        m: u32,
    },

    #[error("vertex class `{class}` is not an orbit at m = {m}: member centralities differ")]
    ClassNotAnOrbit { class: VertexClass, m: u32 },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}
