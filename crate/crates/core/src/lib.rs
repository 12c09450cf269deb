//! Exact computations with complex differential forms of constant coefficients,
//! Schur polynomials in them, and the signatures of the resulting intersection
//! forms.

pub mod augmentation;
pub mod bilinear;
pub mod error;
pub mod exterior;
pub mod json;
pub mod linalg;
pub mod positivity;
pub mod random;
pub mod rational;
pub mod ring;
pub mod symfunc;

pub use error::{Error, Result};
pub use rational::{GaussianRational, Rational};
