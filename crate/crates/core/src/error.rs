use core::fmt;

/// Errors raised by graph construction, coloring checks, exploration and synthesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A self-loop `(v, v)` was supplied.
    InvalidEdge {
        u: usize,
        v: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    /// Quotient classes overlap or do not cover every vertex.
    InvalidPartition,
    /// A quotient class contains both endpoints of an edge.
    NotIndependent {
        class: usize,
    },
    /// The supplied vertex classes are not a bipartition of the graph.
    NotBipartition,
    /// The graph is not bipartite.
    NotBipartite,
    /// A coloring's length does not match the graph.
    ShapeError {
        expected: usize,
        found: usize,
    },
    ColorOutsidePalette {
        vertex: usize,
        color: usize,
        k: usize,
    },
    /// A coloring carries a different palette size than the one requested.
    PaletteMismatch {
        expected: usize,
        found: usize,
    },
    NotProper,
    /// A vertex carries a color the operation does not accept there.
    UnexpectedColor {
        vertex: usize,
        color: usize,
    },
    /// Step `index` of a sequence produced a monochromatic edge.
    ImproperStep(usize),
    /// Step `index` would not change the vertex's color.
    NoOpStep(usize),
    /// Step `index` uses a color outside the palette.
    PaletteError(usize),
    /// Step `index` names a vertex that does not exist.
    StepOutOfRange(usize),
    /// The configuration space exceeds the state budget.
    TooLarge {
        estimate: Option<u64>,
        cap: u64,
    },
    /// `k^n` does not fit in a 64-bit state code.
    EncodingOverflow {
        n: usize,
        k: usize,
    },
    MethodMismatch {
        k: usize,
    },
    PaletteTooSmall {
        needed: usize,
        k: usize,
    },
    PaletteClash {
        color: usize,
    },
    BadWitness,
    BadPermutation,
    NotMixing,
    NotClassConstant {
        class: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidEdge { u, v } => write!(f, "invalid edge ({u}, {v}): loops are not allowed"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::InvalidPartition => write!(f, "classes must be disjoint and cover every vertex"),
            Error::NotIndependent { class } => write!(f, "class {class} is not an independent set"),
            Error::NotBipartition => write!(f, "classes do not form a bipartition of the graph"),
            Error::NotBipartite => write!(f, "graph is not bipartite"),
            Error::ShapeError { expected, found } => {
                write!(f, "coloring has {found} entries, graph has {expected} vertices")
            }
            Error::ColorOutsidePalette { vertex, color, k } => {
                write!(f, "vertex {vertex} has color {color} outside palette 0..{k}")
            }
            Error::PaletteMismatch { expected, found } => {
                write!(f, "coloring has palette size {found}, expected {expected}")
            }
            Error::NotProper => write!(f, "coloring is not proper"),
            Error::UnexpectedColor { vertex, color } => {
                write!(f, "vertex {vertex} has unexpected color {color}")
            }
            Error::ImproperStep(i) => write!(f, "step {i} produces an improper coloring"),
            Error::NoOpStep(i) => write!(f, "step {i} does not change the vertex color"),
            Error::PaletteError(i) => write!(f, "step {i} uses a color outside the palette"),
            Error::StepOutOfRange(i) => write!(f, "step {i} names a vertex outside the graph"),
            Error::TooLarge {
                estimate: Some(e),
                cap,
            } => {
                write!(f, "state space estimate {e} exceeds the budget of {cap} states")
            }
            Error::TooLarge { estimate: None, cap } => {
                write!(f, "state space estimate overflows u64 (budget {cap} states)")
            }
            Error::EncodingOverflow { n, k } => {
                write!(f, "{k}^{n} colorings do not fit in a 64-bit state code")
            }
            Error::MethodMismatch { k } => {
                write!(f, "the lemma3 method only applies to k = 3 (got k = {k})")
            }
            Error::PaletteTooSmall { needed, k } => {
                write!(f, "palette of {k} colors is too small (need at least {needed})")
            }
            Error::PaletteClash { color } => write!(f, "color {color} is assigned to both B and X"),
            Error::BadWitness => write!(f, "the supplied coloring is not a stuck coloring"),
            Error::BadPermutation => write!(f, "not a permutation of the palette"),
            Error::NotMixing => write!(f, "graph is not mixing"),
            Error::NotClassConstant { class } => {
                write!(f, "coloring is not constant on quotient class {class}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
