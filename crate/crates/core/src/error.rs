use num_complex::Complex64;
use thiserror::Error;

use crate::geometry::Domain;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {point} is not an interior point of {domain}")]
    PointNotInDomain { point: Complex64, domain: Domain },

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("boundary infimum on {0} has no closed form for this pair")]
    NumericFallbackRequired(Domain),

    #[error("{what} is not supported on {domain}")]
    UnsupportedDomain { what: &'static str, domain: Domain },

    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(&'static str),

    #[error("theta = {theta} is outside the range {range} of record {record}")]
    InvalidTheta {
        record: String,
        theta: f64,
        range: String,
    },

    #[error("maximal dilatation K = {0} must be >= 1")]
    InvalidK(f64),

    #[error("{name} = {value} is out of range ({expected})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("record {record} has no {side} witness")]
    NoWitness { record: String, side: &'static str },

    #[error("no distortion bound for the pair {source_domain} -> {target_domain}")]
    UnsupportedPair {
        source_domain: Domain,
        target_domain: Domain,
    },

    #[error("unknown record id {0}")]
    UnknownRecord(String),
}
