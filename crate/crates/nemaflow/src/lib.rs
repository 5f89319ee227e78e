//! nemaflow: a pseudo-spectral solver for the density-dependent
//! Ericksen-Leslie equations of nematic liquid-crystal hydrodynamics on a
//! periodic box, with an optional biharmonic velocity regularization.
//!
//! The crate provides
//!
//! - spectral calculus on the torus ([`grid`], [`field`]): exact
//!   differentiation of trigonometric interpolants, Leray projection,
//!   two-thirds dealiasing, and quadrature norms;
//! - admissible initial data ([`initial`]): bounded densities,
//!   divergence-free velocities, unit director fields, velocity
//!   mollification with density lift, and the initial pressure /
//!   compatibility decomposition;
//! - an IMEX time stepper ([`dynamics`]): implicit spectral diffusion,
//!   explicit extrapolated transport and elastic coupling, exact
//!   incompressibility after every step, and hard director
//!   renormalization;
//! - per-step diagnostics ([`diagnostics`]): energies, dissipations,
//!   Sobolev norms, the algebraic identity residuals behind the model's
//!   energy law, and weighted difference norms for stability studies;
//! - experiment drivers and file formats ([`experiments`], [`config`],
//!   [`snapshot`]) used by the `nemaflow` command-line binary.

pub mod config;
pub mod diagnostics;
pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod fft;
pub mod field;
pub mod grid;
pub mod initial;
pub mod plot;
pub mod randfield;
pub mod snapshot;
mod spectral;

pub use error::{Error, Result};
pub use field::{Lp, Repr, ScalarField, TensorField, VectorField};
pub use grid::Grid;
