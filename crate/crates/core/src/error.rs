use core::fmt;

/// Errors reported by the numerical routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument is outside the domain of the function.
    Domain(&'static str),
    /// The arguments would overflow the intermediate representation.
    Range(&'static str),
    /// A series did not meet its truncation rule within `terms` terms.
    Truncation { terms: usize, last_term: f64 },
    /// Two evaluation paths that must agree did not.
    Consistency { residue: f64, reference: f64 },
    /// A bracketing search found no interior extremum.
    Bracket(&'static str),
    /// An iterative method stopped before reaching its tolerance.
    NoConvergence { iterations: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Range(what) => write!(f, "range error: {what}"),
            Error::Truncation { terms, last_term } => write!(
                f,
                "series not converged after {terms} terms (last term {last_term:e})"
            ),
            Error::Consistency { residue, reference } => write!(
                f,
                "internal consistency violated: residue {residue:e} against {reference:e}"
            ),
            Error::Bracket(what) => write!(f, "bracket error: {what}"),
            Error::NoConvergence { iterations } => {
                write!(f, "no convergence after {iterations} iterations")
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn ensure_positive(value: f64, what: &'static str) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(what))
    }
}

pub(crate) fn ensure_finite(value: f64, what: &'static str) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(what))
    }
}
