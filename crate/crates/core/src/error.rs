use thiserror::Error;

/// Errors raised across the crate.
///
/// The variants are grouped so that front ends can map them onto the
/// exit-code protocol: [`Error::Schema`] for malformed input,
/// [`Error::Resource`] for size guards, everything else is semantic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    Schema(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error(
        "invariant ring is not finitely generated: the group is not generated by 2-cycles \
         ({transpositions_order} of {order} elements lie in the subgroup generated by its 2-cycles)"
    )]
    NotFinitelyGenerated { order: usize, transpositions_order: usize },

    #[error("sampling error: {0}")]
    Sampling(String),
}

impl Error {
    pub(crate) fn dim(expected: usize, got: usize) -> Self {
        Error::Dimension { expected, got }
    }

    pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
        if expected == got {
            Ok(())
        } else {
            Err(Error::dim(expected, got))
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
