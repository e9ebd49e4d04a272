use thiserror::Error;

/// Refusal to run an exponential or otherwise oversized computation.
/// The CLI maps this to its own exit code.
#[derive(Debug, Error)]
#[error("{what}: input size {actual} exceeds limit {limit}")]
pub struct SizeLimitError {
    pub what: &'static str,
    pub limit: usize,
    pub actual: usize,
}
