//! Stochastic dominance with distorted expectations.
//!
//! The crate compares distributions under distortion-weighted quantile
//! orders, locates the tightest power-distortion order separating a pair,
//! and evaluates distortion risk measures consistent with those orders.

pub mod distributions;
pub mod error;
pub mod special;

pub use distributions::{
    DiscreteDistribution, Distribution, DistributionSpec, Extreme, Family,
    LocationScaleDistribution,
};
pub use error::{DsdError, Result};
