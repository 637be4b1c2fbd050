//! Spectral toolkit for the logarithmic (2D) and Newton (3D) volume potential
//! operators on bounded domains.
//!
//! The crate has two legs that check each other:
//!
//! * closed-form spectra for the unit disc and unit 3-ball, built from zeros
//!   of Bessel functions of the first kind ([`bessel`], [`spectra`]);
//! * a piecewise-constant Galerkin/Nyström discretization on uniform meshes
//!   over arbitrary domains from a small shape menu, with a dense symmetric
//!   eigensolver and Schatten-norm evaluation ([`domains`], [`discretize`],
//!   [`eigen`]).
//!
//! [`experiments`] drives the isoperimetric comparison suites (disc/ball/
//! equilateral-triangle extremizers among equal-measure domains) and the
//! convergence studies that calibrate their tolerances.
//!
//! With the default `parallel` feature the heavy inner loops (matrix assembly,
//! Householder tridiagonalization, series summation, experiment batches) run
//! on rayon; without it every code path falls back to a sequential
//! implementation with identical results.

pub mod bessel;
pub mod discretize;
pub mod domains;
pub mod eigen;
mod error;
pub mod experiments;
pub mod kernels;
pub mod report;
pub mod spectra;

pub use error::{Error, Result};
