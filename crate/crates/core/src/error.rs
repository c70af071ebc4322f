use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} = {value} is outside its domain: {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error(
        "quadrature did not converge within {limit} refinements \
         (estimate {estimate:e}, error estimate {error:e})"
    )]
    Convergence {
        limit: usize,
        estimate: f64,
        error: f64,
    },

    #[error("integrand does not decay on [0, inf): |f({at})| = {value:e}")]
    NonDecaying { at: f64, value: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        expected,
    }
}
