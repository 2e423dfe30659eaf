//! Numerical toolkit for decay envelopes of Schrödinger eigenfunctions at the
//! threshold of the essential spectrum.
//!
//! The crate builds and verifies upper/lower decay envelopes for zero-energy
//! radial problems (compact attractive well plus repulsive tail) and checks
//! the pointwise inequalities behind the two-electron (helium-like) estimates
//! by seeded sampling and finite differences.
//!
//! Verification scans are data-parallel: with the default `parallel` feature
//! they run on a rayon pool, without it they fall back to sequential loops.
//! Results are identical either way — reductions are order-independent and
//! sample sets are generated up front from a fixed seed.

pub mod bessel;
pub mod error;
pub mod exec;
pub mod fd;
pub mod potential;
pub mod quad;

pub use error::{Error, Result};
