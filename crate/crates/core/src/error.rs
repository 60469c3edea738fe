use crate::dimvec::DimVec;
use thiserror::Error;

/// Errors shared across the crate. Input validation failures keep enough
/// context to be reported verbatim by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {found} out of range 1..={max}")]
    VertexOutOfRange { found: i64, max: usize },

    #[error("more than one edge between vertices {a} and {b}")]
    DuplicateEdge { a: usize, b: usize },

    #[error("loop at vertex {v}")]
    LoopEdge { v: usize },

    #[error("underlying graph is not a disjoint union of A/D/E diagrams: {0}")]
    NotDynkin(String),

    #[error("bad quiver descriptor `{descriptor}`: {msg}")]
    Descriptor { descriptor: String, msg: String },

    #[error("dimension vector has {found} entries, quiver has {expected} vertices")]
    LengthMismatch { found: usize, expected: usize },

    #[error("negative entry {value} at vertex {vertex}")]
    NegativeEntry { vertex: usize, value: i64 },

    #[error("entry {value} at vertex {vertex} exceeds the supported bound {bound}")]
    EntryTooLarge { vertex: usize, value: i64, bound: i64 },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("{0} is not a positive root of this quiver")]
    NotARoot(DimVec),

    #[error("total dimension {total} exceeds the brute-force bound {bound}")]
    BruteForceBound { total: i64, bound: i64 },

    #[error("quiver is not a connected type A path")]
    NotTypeA,

    #[error("orientation is not equioriented or single-sink")]
    NotSingleSink,

    #[error("representation shape mismatch: {0}")]
    RepShape(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
