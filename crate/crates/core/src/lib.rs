//! Exact stable-model counting for ground programs whose variables are split
//! into standard (freely chosen) and founded (must be derivable) ones.
//!
//! The crate is `no_std` and only needs `alloc`. Parsing, the command line
//! and the instance generators live in the `stablecount` crate.

#![no_std]

extern crate alloc;

pub mod counter;
pub mod decimal;
pub mod error;
pub mod fixtures;
pub mod inference;
pub mod oracle;
pub mod program;
pub mod propagation;
pub mod transform;

pub use counter::{count_stable, weighted_count, CountOptions, CountResult, Counter, Mode, Stats};
pub use error::{CountError, InferenceError, OracleError, ProgramError};
pub use inference::{marginal, InferenceTask};
pub use program::{check_stratified, Assignment, Clause, Lit, Program, ProgramBuilder, Rule, Var, VarKind};
