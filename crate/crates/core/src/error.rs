//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0}: parts must be positive and weakly decreasing")]
    InvalidPartition(String),

    #[error("cannot parse partition from '{0}'")]
    ParsePartition(String),

    #[error("weight mismatch: |lambda| = {lambda} but |mu| = {mu}")]
    WeightMismatch { lambda: u32, mu: u32 },

    #[error("cycle profile weight {rho} exceeds ambient n = {ambient}")]
    ProfileExceedsAmbient { rho: u32, ambient: u32 },

    #[error("cycle profile contains a part equal to 1; unary parts are padding")]
    UnaryProfilePart,

    #[error("polynomial division left a remainder")]
    InexactDivision,
}
