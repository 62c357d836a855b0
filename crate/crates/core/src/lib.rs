//! Synthesis of lattice walks whose radial projections accumulate on a
//! prescribed compact connected subset of the spherical simplex.
//!
//! The pipeline: a target set is given as a piecewise-geodesic skeleton
//! ([`TargetSet`]). Each phase tours the skeleton, approximates the tour by a
//! vertex-directed path ([`simplex`]), and shadows that path with unit lattice
//! steps ([`walk`]). The phases tighten geometrically, so the boundary limit
//! of the walk is the target. [`verify`] measures the convergence and
//! [`cat0`] translates positive walks into group words and half-plane walks.

pub mod cat0;
pub mod error;
pub mod simplex;
pub mod sphere;
pub mod target;
pub mod verify;
pub mod walk;

pub use error::{Error, Result};
pub use simplex::{DirectedPath, PathStep, Polyline, SimplexPoint, StepKind};
pub use sphere::{Angle, SpherePoint};
pub use target::TargetSet;
pub use walk::{LatticePoint, LatticeWalk, Run};
