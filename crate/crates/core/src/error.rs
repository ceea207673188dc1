use alloc::string::String;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProgramError {
    #[error("variable `{0}` declared twice")]
    DuplicateDeclaration(String),
    #[error("variable `{0}` used before declaration")]
    Undeclared(String),
    #[error("rule head `{0}` is not a founded variable")]
    HeadNotFounded(String),
    #[error("probability attached to founded variable `{0}`")]
    WeightOnFounded(String),
    #[error("probability of `{0}` outside [0, 1]")]
    ProbabilityOutOfRange(String),
    #[error("probability of `{0}` given twice")]
    DuplicateWeight(String),
    #[error("constraint contains a variable with both polarities")]
    TautologicalClause,
    #[error("constraint has no literals")]
    EmptyClause,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("standard-variable search requires a stratified program")]
    UnsupportedMode,
    #[error("assumptions contain both polarities of variable {0}")]
    InconsistentAssumptions(u32),
    #[error("component has unfixed variables but nothing the search may decide")]
    Stuck,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("program has {vars} variables, enumeration bound is {bound}")]
    SizeLimit { vars: usize, bound: usize },
    #[error("evidence has probability zero")]
    ZeroEvidenceWeight,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InferenceError {
    #[error("program is not stratified")]
    NotStratified,
    #[error("evidence has probability zero")]
    ZeroEvidenceWeight,
    #[error(transparent)]
    Count(#[from] CountError),
}
