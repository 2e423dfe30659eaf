//! One-particle radial potentials: a compactly supported attractive well plus
//! a strictly positive repulsive tail.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Repulsive tail shape. The tail must be positive for r > 0.
#[derive(Clone)]
pub enum Tail {
    /// c / r with 0 < c < 1.
    CoulombLike { c: f64 },
    /// a · r^p with a > 0.
    Power { a: f64, p: f64 },
    /// Arbitrary positive profile supplied by the caller.
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tail::CoulombLike { c } => write!(f, "CoulombLike {{ c: {c} }}"),
            Tail::Power { a, p } => write!(f, "Power {{ a: {a}, p: {p} }}"),
            Tail::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

/// Radial potential: V(r) = depth · 1[r ≤ R] (attractive, subtracted in the
/// Hamiltonian) and a positive repulsive tail U(r).
///
/// The boundary point r = R belongs to the well (closed ball convention).
#[derive(Clone, Debug)]
pub struct RadialPotential {
    well_depth: f64,
    well_radius: f64,
    tail: Tail,
    dimension: u32,
}

impl RadialPotential {
    /// Validates: depth ≥ 0, radius > 0, and for Coulomb-like tails 0 < c < 1.
    pub fn new(well_depth: f64, well_radius: f64, tail: Tail) -> Result<Self> {
        if !(well_depth >= 0.0) {
            return Err(Error::Domain(format!("well_depth must be ≥ 0, got {well_depth}")));
        }
        if !(well_radius > 0.0) {
            return Err(Error::Domain(format!("well_radius must be > 0, got {well_radius}")));
        }
        match tail {
            Tail::CoulombLike { c } if !(c > 0.0 && c < 1.0) => {
                return Err(Error::Domain(format!("coulomb_like tail needs 0 < c < 1, got {c}")));
            }
            Tail::Power { a, .. } if !(a > 0.0) => {
                return Err(Error::Domain(format!("power tail needs a > 0, got {a}")));
            }
            _ => {}
        }
        Ok(RadialPotential { well_depth, well_radius, tail, dimension: 3 })
    }

    pub fn well_depth(&self) -> f64 {
        self.well_depth
    }

    pub fn well_radius(&self) -> f64 {
        self.well_radius
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// Same potential with a different well depth (used by the critical-depth
    /// bisection, which treats depth as the tunable).
    pub fn with_depth(&self, well_depth: f64) -> Self {
        RadialPotential { well_depth, ..self.clone() }
    }

    /// Attractive part V(r): `well_depth` inside the closed ball r ≤ R, zero outside.
    pub fn attractive(&self, r: f64) -> f64 {
        if r <= self.well_radius {
            self.well_depth
        } else {
            0.0
        }
    }

    /// Repulsive part U(r) for r > 0.
    pub fn repulsive(&self, r: f64) -> f64 {
        debug_assert!(r > 0.0, "repulsive tail evaluated at r = {r}");
        match &self.tail {
            Tail::CoulombLike { c } => c / r,
            Tail::Power { a, p } => a * r.powf(*p),
            Tail::Custom(f) => f(r),
        }
    }

    /// Checked variant of [`repulsive`](Self::repulsive) for external inputs.
    pub fn try_repulsive(&self, r: f64) -> Result<f64> {
        if r < 0.0 || r.is_nan() {
            return Err(Error::Domain(format!("tail evaluated at r = {r}")));
        }
        if r == 0.0 {
            return Err(Error::Singular("repulsive tail at r = 0".into()));
        }
        Ok(self.repulsive(r))
    }
}
