//! Foresight pruning toolkit: score and remove network weights at
//! initialization, train the surviving sparse network, and analyze the
//! result through the lens of gradient flow and linearized (NTK) dynamics.
//!
//! The crate is organized around a small tape-based reverse-mode autodiff
//! engine ([`tape`]) that supports differentiating through a gradient
//! computation (double backward). On top of it sit:
//!
//! - [`model`]: MLP / ConvNet definitions, initializers, and the
//!   temperature-scaled softmax cross-entropy loss,
//! - [`prune`]: per-weight importance scores (GraSP, SNIP, random,
//!   magnitude) and global mask construction,
//! - [`train`]: masked SGD with momentum,
//! - [`ntk`]: empirical neural tangent kernel, its eigendecomposition,
//!   and the closed-form linearized error curve,
//! - [`data`]: synthetic datasets and the class-balanced scoring batch.
//!
//! The crate is `no_std` (alloc required); file formats and the experiment
//! CLI live in the companion `foresight-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod data;
pub mod eigen;
pub mod error;
pub mod model;
pub mod ntk;
pub mod prune;
pub mod tape;
pub mod tensor;
pub mod train;

pub use error::{Error, Result};
pub use tensor::Tensor;
