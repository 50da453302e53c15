use std::fmt;

use thiserror::Error;

/// Why an ID table fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdFailure {
    /// Rows `i` and `j` (0-based) anticommute.
    NonCommuting(usize, usize),
    /// The product of all rows is not proportional to the identity.
    ProductNotIdentity,
    /// The product is `±i` times the identity.
    ImaginaryProductPhase,
    /// Qubit `j` carries only `I` in every row.
    IdentityColumn(usize),
    /// The declared sign disagrees with the computed product.
    SignMismatch { declared: i8, computed: i8 },
    /// The eigenvalues do not multiply to the sign.
    EigenvalueProduct { product: i8, sign: i8 },
}

impl fmt::Display for IdFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdFailure::NonCommuting(i, j) => {
                write!(f, "rows {} and {} anticommute", i + 1, j + 1)
            }
            IdFailure::ProductNotIdentity => write!(f, "row product is not proportional to I"),
            IdFailure::ImaginaryProductPhase => write!(f, "row product is ±i·I"),
            IdFailure::IdentityColumn(j) => write!(f, "qubit {} is I in every row", j + 1),
            IdFailure::SignMismatch { declared, computed } => {
                write!(
                    f,
                    "declared sign {declared:+} but rows multiply to {computed:+}·I"
                )
            }
            IdFailure::EigenvalueProduct { product, sign } => {
                write!(
                    f,
                    "eigenvalues multiply to {product:+}, expected sign {sign:+}"
                )
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    Resource {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("qubits {0} and {1} are not nearest neighbours")]
    Topology(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid ID: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    InvalidId(Vec<IdFailure>),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Resource-limit failures map to a distinct process exit code.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
