//! Crate-wide error type. Variants mirror the failure classes the checkers
//! distinguish: bad inputs, missing capabilities (e.g. two-sided orbits of a
//! non-invertible map), resource caps, infeasible constructions and violated
//! theorem hypotheses.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DynError {
    #[error("domain violation: {0}")]
    Domain(String),

    #[error("capability error: {0}")]
    Capability(String),

    #[error("scale error: {0}")]
    Scale(String),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("precondition error: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type DynResult<T> = Result<T, DynError>;
