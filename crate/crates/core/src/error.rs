//! Error type shared by all layers of the library.
//!
//! Every fallible operation returns [`Error`]; the variants mirror the
//! distinct failure modes of the exact-arithmetic kernel, the projective
//! geometry layer, and the configuration machinery, so callers can react
//! to precondition violations without parsing strings.

use alloc::string::String;
use core::fmt;

/// All errors produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Attempt to invert or divide by zero in a coefficient field.
    DivisionByZero,
    /// Two field elements with different conductors were combined.
    FieldMismatch { left: u32, right: u32 },
    /// A square-matrix operation received a non-square matrix.
    NonSquare { rows: usize, cols: usize },
    /// A linear substitution required an invertible matrix.
    SingularMatrix,
    /// The given point does not satisfy the hypersurface equation.
    NotOnHypersurface,
    /// All partial derivatives vanish at the point; no tangent hyperplane.
    SingularPoint,
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// The queried point is not on the zero locus, so the test is undefined.
    NotApplicable,
    /// The polar form vanishes identically.
    ZeroPolar,
    /// The line lies inside the hypersurface.
    LineInX,
    /// A point supplied as a certified star point fails the star test.
    KnownPointNotStar,
    /// Supplied points are not pairwise distinct.
    RootsNotDistinct,
    /// The vertex of a triple does not lie on its plane.
    VertexNotOnPlane,
    /// The cone equation does not have full multiplicity at its vertex.
    NotACone,
    /// The cone is singular outside its vertex.
    BadCone,
    /// A form has a different degree than required.
    WrongDegree { expected: usize, found: usize },
    /// The linear system is zero, so no witness can exist.
    EmptySystem,
    /// A configuration vertex lies on the hyperplane being restricted to.
    PointOnPlane,
    /// The parameter is not a root of unity of an admissible order.
    NotRootOfUnity,
    /// An exact polynomial division left a remainder.
    InexactDivision,
    /// Configuration data coincide where distinct triples are required.
    DegenerateTriple,
    /// A builder received parameter polynomials of the wrong degree.
    DegreeMismatch,
    /// The ambient dimension is too small for the requested construction.
    AmbientTooSmall,
    /// The configuration is not suited for its degree.
    NotSuited,
    /// A decomposition failed to match its guaranteed normal-form shape.
    ShapeViolation(String),
    /// An internal postcondition failed; indicates a bug in this crate.
    Assertion(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch { left, right } => {
                write!(f, "mixed field conductors {left} and {right}")
            }
            Error::NonSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, not square")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::NotOnHypersurface => write!(f, "point is not on the hypersurface"),
            Error::SingularPoint => write!(f, "hypersurface is singular at the point"),
            Error::ZeroPolynomial => write!(f, "polynomial is identically zero"),
            Error::NotApplicable => write!(f, "point is not on the zero locus"),
            Error::ZeroPolar => write!(f, "polar form vanishes identically"),
            Error::LineInX => write!(f, "line is contained in the hypersurface"),
            Error::KnownPointNotStar => write!(f, "supplied point is not a star point"),
            Error::RootsNotDistinct => write!(f, "supplied points are not pairwise distinct"),
            Error::VertexNotOnPlane => write!(f, "vertex does not lie on the plane"),
            Error::NotACone => write!(f, "form is not a cone with the given vertex"),
            Error::BadCone => write!(f, "cone is singular outside its vertex"),
            Error::WrongDegree { expected, found } => {
                write!(f, "degree {found} where {expected} is required")
            }
            Error::EmptySystem => write!(f, "linear system is zero"),
            Error::PointOnPlane => write!(f, "configuration vertex lies on the hyperplane"),
            Error::NotRootOfUnity => {
                write!(f, "parameter is not a root of unity of admissible order")
            }
            Error::InexactDivision => write!(f, "polynomial division left a remainder"),
            Error::DegenerateTriple => write!(f, "triples contain coincident data"),
            Error::DegreeMismatch => write!(f, "parameter polynomial has the wrong degree"),
            Error::AmbientTooSmall => write!(f, "ambient dimension is too small"),
            Error::NotSuited => write!(f, "configuration is not suited for its degree"),
            Error::ShapeViolation(msg) => write!(f, "invalid shape: {msg}"),
            Error::Assertion(msg) => write!(f, "internal assertion failed: {msg}"),
        }
    }
}
