//! Grid propagation of the time-dependent Schrodinger equation in a uniform
//! field, plus the numerical oracles built on it.

mod frame;
mod heisenberg;
mod moments;
mod propagator;
mod residual;
mod tridiagonal;

pub use frame::{align_global_phase, frame_equivalence_test, FrameComparison};
pub use heisenberg::{
    heisenberg_checks, HeisenbergSummary, MOMENTUM_SLOPE_TOL, POSITION_CURVATURE_TOL,
    SPREAD_DRIFT_TOL, UNCERTAINTY_SLACK,
};
pub use moments::{free_gaussian_width, moments, Moments};
pub use propagator::{
    propagate_linear_potential, propagate_with_options, CrankNicolson, MomentSample,
    PropagationOptions, PropagationReport, CONTACT_TOL, EDGE_POINTS, INITIAL_EDGE_TOL,
};
pub use residual::{pde_residual, SpaceTimeSamples, MIN_STENCIL};
pub use tridiagonal::{Tridiagonal, TridiagonalLu};
