use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("non-integral χ; inconsistent Chern data (c1·c2 = {c1c2} is odd)")]
    NonIntegralChi { c1c2: i64 },

    #[error("non-integral genus")]
    NonIntegralGenus,

    #[error("normal-bundle Euler characteristic is only available for genus 0 or 1, got {0}")]
    UnsupportedGenus(i64),

    #[error("effective residual class {0:?} is not covered by any exclusion argument")]
    UncoveredResidualClass([i64; 3]),

    #[error("intermediate case c1 = {alpha:?}, c2 = {beta:?} has no verdict")]
    UncoveredCase { alpha: [i64; 3], beta: [i64; 3] },

    #[error("golden data: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, Error>;
