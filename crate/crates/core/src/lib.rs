//! Nonrelativistic quantum mechanics in a uniform gravitational field.
//!
//! * [`gravishift`] maps free-particle solutions into a frame at rest in the
//!   field and back, with plane-wave, interferometer, redshift and
//!   falling-box results built on that map.
//! * [`bouncer`] solves the linear potential above a hard floor with
//!   [`airy`] functions.
//! * [`dynamics`] propagates wave packets on a grid and checks the analytic
//!   results against the numerics.
//!
//! Every routine is generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the scalar for the common cases.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod airy;
pub mod bouncer;
pub mod dynamics;
pub mod error;
pub mod field;
pub mod gravishift;
pub mod grid;
pub mod scalar;
pub mod system;

#[cfg(test)]
mod oracle;

pub use error::{Error, Result};
pub use field::ComplexField;
pub use grid::Grid;
pub use scalar::Real;
pub use system::PhysicalSystem;

pub type PhysicalSystemF64 = system::PhysicalSystem<f64>;
pub type GridF64 = grid::Grid<f64>;
pub type ComplexFieldF64 = field::ComplexField<f64>;
pub type AiryValueF64 = airy::AiryValue<f64>;
pub type BouncerLevelF64 = bouncer::BouncerLevel<f64>;
pub type FrameTransformF64 = gravishift::FrameTransform<f64>;
pub type PlaneWaveStateF64 = gravishift::PlaneWaveState<f64>;
pub type InterferometerGeometryF64 = gravishift::InterferometerGeometry<f64>;
pub type FallingBoxF64 = gravishift::FallingBox<f64>;
pub type PropagationReportF64 = dynamics::PropagationReport<f64>;

pub type PhysicalSystemF32 = system::PhysicalSystem<f32>;
pub type GridF32 = grid::Grid<f32>;
pub type ComplexFieldF32 = field::ComplexField<f32>;
pub type AiryValueF32 = airy::AiryValue<f32>;
pub type BouncerLevelF32 = bouncer::BouncerLevel<f32>;
pub type FrameTransformF32 = gravishift::FrameTransform<f32>;
