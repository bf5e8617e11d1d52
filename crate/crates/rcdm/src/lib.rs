//! Robustness laboratory for classifier-free-guided conditional diffusion.
//!
//! The crate has three layers:
//!
//! - **Analysis**: closed-form propagation of a fixed denoiser bias through
//!   the reverse chain ([`propagation`]), and the guidance-weight filter
//!   mathematics built on Gaussian overlap ([`filter`]).
//! - **Laboratory**: a from-scratch conditional denoiser ([`neural`]), the
//!   training / sampling engine with error injection ([`engine`]), and
//!   two-sample distances for judging robustness ([`metrics`]).
//! - **Surface**: JSON configuration, hex-float checkpoints, and the `rcdm`
//!   command-line harness ([`cli`]).
//!
//! See the book under `book/` for a guided tour; its code snippets are
//! compiled and run as doc-tests (the [`docs`] module).

pub mod error;
pub mod schedule;

pub use error::{Error, Result};
