//! Hyperbolic-type metrics on planar domains.
//!
//! The crate evaluates the triangular ratio metric `s`, the `j*` metric, the
//! point pair function `p` and the hyperbolic metric `ρ` on the upper
//! half-plane, the unit disk, sectors `S_θ`, strips and the punctured plane,
//! and numerically certifies the sharp inequalities that relate them.
//!
//! Modules, bottom up:
//!
//! - [`geometry`]: domains, rays, reflections and the boundary infimum
//!   `inf_{z ∈ ∂G}(|x - z| + |z - y|)`.
//! - [`metrics`]: closed forms for `s`, `j*`, `p`, `th(ρ/2)`.
//! - [`normalization`]: Möbius and conformal maps that move a pair of points
//!   into a position symmetric about the bisector of a sector or strip.
//! - [`catalog`]: the registry of sharp inequalities with witness families
//!   and a seeded sampler that certifies each bound.
//! - [`qc`]: Hölder-type bounds for quasiconformal maps between sectors.
//! - [`cli`]: run configuration and JSON/CSV reports for the binary.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod normalization;
pub mod qc;
mod sampling;

pub use error::{Error, Result};
pub use geometry::{BoundaryInfimum, Domain, InfimumCase, Ray};
pub use metrics::MetricKind;
