//! Character tables and irreducible representations of finite groups
//! with a unitary multiplier (projective representations).
//!
//! Three independent routes are provided: floating-point class matrices
//! ([`burnside`]), exact arithmetic modulo a prime ([`dixon`]) and
//! numerical splitting of representations ([`decompose`]).

use thiserror::Error as ThisError;

pub mod burnside;
pub mod catalog;
pub mod check;
pub mod cocycle;
pub mod decompose;
pub mod dixon;
pub mod group;
pub mod io;
pub mod modp;
pub mod rep;

pub use burnside::{character_table_float, FloatCharacterTable, FloatOptions};
pub use cocycle::Multiplier;
pub use decompose::{
    all_irreps_iterative, all_irreps_regular, decompose, is_irreducible, DecomposeOptions,
};
pub use dixon::{character_table_exact, ExactCharacterTable};
pub use group::FiniteGroup;
pub use num_complex::Complex64;
pub use rep::ProjectiveRep;

/// Any failure, grouped by the exit code a front end should report.
#[derive(Debug, ThisError, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group has {order} elements, above the limit of {max}")]
    GroupTooLarge { order: usize, max: usize },
    #[error(transparent)]
    Group(#[from] group::GroupError),
    #[error(transparent)]
    Cocycle(#[from] cocycle::CocycleError),
    #[error(transparent)]
    Rep(#[from] rep::RepError),
    #[error(transparent)]
    Burnside(#[from] burnside::BurnsideError),
    #[error(transparent)]
    Dixon(#[from] dixon::DixonError),
    #[error(transparent)]
    Decompose(#[from] decompose::DecomposeError),
}

impl Error {
    /// 2 for unreadable input, 3 for inputs that are not a group or
    /// cocycle, 4 for pipeline failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::GroupTooLarge { .. } | Error::Group(_) | Error::Cocycle(_) => 3,
            Error::Rep(rep::RepError::Cocycle(_))
            | Error::Dixon(dixon::DixonError::Cocycle(_))
            | Error::Burnside(burnside::BurnsideError::Cocycle(_))
            | Error::Decompose(decompose::DecomposeError::Cocycle(_)) => 3,
            Error::Rep(_) | Error::Burnside(_) | Error::Dixon(_) | Error::Decompose(_) => 4,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
