//! Standalone reference implementations used by the test suites.
//!
//! Everything in this crate is written independently of the main library so
//! that tests can cross-check results through a second algebraic route
//! (covariance-form filtering vs. information-form least squares,
//! projected-gradient vs. Khachiyan MVEE, and so on). Nothing here should
//! ever depend on `nbv-core`.

pub mod disc;
pub mod kalman;
pub mod kmeans;
pub mod mvee;
pub mod raycast;
