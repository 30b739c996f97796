//! Rotation-invariant dense correspondence between non-rigid 3D shapes.
//!
//! The pipeline: triangle meshes go in, discrete spectral operators are built
//! (cotangent Laplacian, tangent frames, intrinsic gradient, connection
//! Laplacian), an SO(3)-equivariant vector-neuron network extracts
//! rotation-invariant per-vertex features, and three coupled map
//! representations (functional map, complex functional map, soft pointwise
//! map) are solved from those features. An unsupervised objective ties the
//! representations together for training; an evaluation harness scores
//! correspondences by mean geodesic error.

pub mod autodiff;
pub mod config;
pub mod container;
pub mod error;
pub mod eval;
pub mod maps;
pub mod mesh;
pub mod operators;
pub mod rinonet;
pub mod sparse;
pub mod training;

pub use error::{Error, Result};
