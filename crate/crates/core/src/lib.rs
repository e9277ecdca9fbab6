//! Symbolic-numeric toolkit for spectral actions of scalar-perturbed Dirac
//! operators.
//!
//! The crate is organised by subsystem:
//!
//! - [`ratpoly`]: exact rationals, univariate and bivariate polynomials,
//!   rational functions, and the shifted-basis expansion of the sphere
//!   multiplicity polynomial.
//! - [`sphere_action`]: direct eigenvalue summation of `Tr f(D_t / Λ)` on odd
//!   spheres, its three-term moment expansion and remainder-order probing.
//! - [`heat_kernel`]: the two leading heat-kernel coefficient densities, the
//!   three-dimensional collapse and the sphere bracket polynomials.
//! - [`qsphere`]: normal ordering in the SU_q(2) coordinate algebra, quantum
//!   binomials, torsion elements and the noncommutative action coefficients.
//! - [`verify`]: cross-validation checks that back the `report` command.
//!
//! Data-parallel sweeps go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and falls back to sequential iteration
//! otherwise.

pub mod dimension;
pub mod error;
pub mod heat_kernel;
pub mod par;
pub mod qsphere;
pub mod ratpoly;
pub mod sphere_action;
pub mod verify;

pub use dimension::OddDimension;
pub use error::{Error, Result};
