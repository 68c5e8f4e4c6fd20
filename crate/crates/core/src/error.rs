//! Error type shared by all modules.

use thiserror::Error;

/// All failure modes of the library.
///
/// Contract violations that indicate programmer error (e.g. mismatched
/// vector lengths in internal helpers) panic instead; everything reachable
/// from file input or user-supplied data is represented here.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must share dimensions do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A composite value has inconsistent component shapes.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The bracket/twisting data fails the algebra axioms.
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    /// A local base algebra fails commutativity, associativity, or nilpotency.
    #[error("invalid base: {0}")]
    InvalidBase(String),

    /// A claimed Harrison cocycle fails the cocycle condition.
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),

    /// A base morphism or push-out received mismatched bases.
    #[error("incompatible bases: {0}")]
    IncompatibleBases(String),

    /// A base extension does not extend the deformation's base.
    #[error("incompatible extension: {0}")]
    IncompatibleExtension(String),

    /// An operation requiring m^2 = 0 received a thicker base.
    #[error("not an infinitesimal base: {0}")]
    NotInfinitesimal(String),

    /// A claimed deformation fails its defining equations.
    #[error("not a deformation: {0}")]
    NotADeformation(String),

    /// quotient_complement received w that is not contained in v.
    #[error("not a subspace: {0}")]
    NotASubspace(String),

    /// The versal step supports only the first extension step.
    #[error("unsupported base: {0}")]
    UnsupportedBase(String),

    /// A kernel class reported zero obstruction but the linear solve failed.
    /// Signals an internal inconsistency; never expected on valid input.
    #[error("obstructed everywhere: {0}")]
    ObstructedEverywhere(String),

    /// An order-by-order obstruction left the cochain complex (its
    /// differential is nonzero), which happens when a deformation family
    /// contains cochains outside the equivariant subcomplex.
    #[error("obstruction is not a cocycle: {0}")]
    ObstructionNotClosed(String),

    /// File or string input could not be parsed. `context` locates the
    /// offending field (JSON path or line/column).
    #[error("parse error at {context}: {detail}")]
    Parse { context: String, detail: String },

    /// A parametric template placeholder was left unbound.
    #[error("unbound parameter: {0}")]
    UnboundParameter(String),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Shorthand for a [`Error::Parse`] with a field context.
    pub fn parse(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            detail: detail.into(),
        }
    }
}
