//! Lattice walks over the basis vectors and their construction.

mod lattice;
mod plan;
mod shadow;
mod stationary;
mod synth;

pub use lattice::{LatticePoint, LatticeWalk, Run};
pub use plan::{plan_phases, PhasePlan, PhasePlanner, PhaseSpec};
pub use shadow::{shadow_radius, shadow_walk, AuditEntry, ShadowCase, ShadowOutcome, ShadowParams};
pub use stationary::{stationary_radius, stationary_walk, StationaryWalker};
pub use synth::{synthesize, IndexStream, PhaseBlock, Synthesizer};
