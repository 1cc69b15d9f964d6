use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("x-degree mismatch: {left} vs {right}")]
    XDegreeMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    #[error("divergent product: {0}")]
    Divergent(String),

    #[error("invalid multisum spec: {0}")]
    InvalidSpec(String),

    #[error("invalid product spec: {0}")]
    InvalidProduct(String),

    #[error("invalid predicate: {0}")]
    InvalidPredicate(String),

    #[error("unknown catalog entry `{name}`{}", suggestion_suffix(.suggestions))]
    UnknownName {
        name: String,
        suggestions: Vec<String>,
    },

    #[error("cannot compare a univariate side with a bivariate side in `{0}`")]
    ShapeMismatch(String),

    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    Io(String),
}

fn suggestion_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!("; did you mean: {}", suggestions.join(", "))
    }
}
