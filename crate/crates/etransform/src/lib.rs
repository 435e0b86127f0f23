//! Continuous and discrete E-function transforms for the rank-two compact
//! Lie groups A1×A1, A2, C2 and G2.
//!
//! Weights are integer pairs in the basis of fundamental weights ω_i; torus
//! points are real pairs in the dual basis ω̌_i. Root-system data and grid
//! geometry are exact rationals; function values are complex floating point
//! of either precision.

pub mod a1;
pub mod algebra;
pub mod cartan;
pub mod error;
pub mod io;
pub mod mat;
pub mod orbitfunc;
pub mod quadrature;
pub mod scalar;
pub mod sum;
pub mod tables;
pub mod transform_cont;
pub mod transform_disc;
pub mod verify;
pub mod weyl;

pub use cartan::{Basis, CartanData, GroupId};
pub use error::{Error, Result};
pub use orbitfunc::OrbitFunctionKind;
pub use quadrature::QuadratureSpec;
pub use scalar::Scalar;
pub use transform_disc::{Grid, LabelSet};
pub use weyl::{DomainPoint, Weight, WeylElement};

pub type Rational = mat::Rational;
pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;
pub type Point = DomainPoint<f64>;
pub type Point32 = DomainPoint<f32>;
pub type Spectrum = transform_disc::Spectrum<f64>;
pub type ContinuousSpectrum = transform_cont::ContinuousSpectrum<f64>;
