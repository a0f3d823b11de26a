use num_complex::Complex;

use super::propagator::{propagate_with_options, PropagationOptions, PropagationReport};
use crate::error::{Error, Result};
use crate::field::ComplexField;
use crate::gravishift::{free_to_stationary, to_stationary_frame, FrameTransform};
use crate::grid::Grid;
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// Result of comparing the two routes to the stationary-frame field.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameComparison<T> {
    /// Largest `|direct - phase * transformed|` over the grid.
    pub max_mismatch: T,
    /// Unit-modulus constant applied to `transformed` before comparing.
    pub phase_factor: Complex<T>,
    /// Free evolution carried into the stationary frame.
    pub transformed: ComplexField<T>,
    /// Evolution in the field, with `max_frame_mismatch` filled in.
    pub direct: PropagationReport<T>,
    pub free_norm_drift: T,
}

/// Distance between `a` and `b` modulo one global phase. Returns the phase
/// `arg <b, a>` and `max_k |a_k - e^{i arg} b_k|`; if the unaligned distance is
/// smaller (identical inputs, for instance), that one is reported with a unit factor.
pub fn align_global_phase<T: Real>(
    a: &ComplexField<T>,
    b: &ComplexField<T>,
) -> Result<(Complex<T>, T)> {
    let overlap = b.inner_product(a)?;
    let raw = max_distance(a.values(), b.values(), Complex::new(T::one(), T::zero()));
    let magnitude = overlap.norm();
    if !(magnitude > T::zero()) {
        return Ok((Complex::new(T::one(), T::zero()), raw));
    }
    let factor = overlap / magnitude;
    let aligned = max_distance(a.values(), b.values(), factor);
    Ok(if raw <= aligned {
        (Complex::new(T::one(), T::zero()), raw)
    } else {
        (factor, aligned)
    })
}

fn max_distance<T: Real>(a: &[Complex<T>], b: &[Complex<T>], factor: Complex<T>) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |m, (x, y)| m.max((x - y * factor).norm()))
}

/// Runs the free packet and, independently, its stationary-frame image in the
/// field `m_g g`, then compares the two at the final time. The frame
/// kinematics `v`, `a` come from the system; when `m_i a != m_g g` the two
/// routes disagree, which is the intended control.
pub fn frame_equivalence_test<T: Real>(
    psi0_free: &ComplexField<T>,
    system: &PhysicalSystem<T>,
    grid: &Grid<T>,
) -> Result<FrameComparison<T>> {
    if !psi0_free.grid().same_sampling(grid) {
        return Err(Error::parameter(
            "psi0_free",
            "initial field is not sampled on the propagation grid",
        ));
    }
    let ft = FrameTransform::from_system(system);
    let psi0_stationary = to_stationary_frame(&ft, psi0_free, T::zero(), grid)?;
    let quiet = PropagationOptions { sample_every: None };

    let (free, direct) = std::thread::scope(|scope| {
        let free =
            scope.spawn(|| propagate_with_options(psi0_free, system, T::zero(), grid, quiet));
        let direct = propagate_with_options(&psi0_stationary, system, system.force(), grid, quiet);
        (free.join().expect("free propagation panicked"), direct)
    });
    let free = free?;
    let mut direct = direct?;

    let transformed = free_to_stationary(&ft, &free.final_field, grid.duration())?;
    let (phase_factor, max_mismatch) = align_global_phase(&direct.final_field, &transformed)?;
    direct.max_frame_mismatch = Some(max_mismatch);
    Ok(FrameComparison {
        max_mismatch,
        phase_factor,
        transformed,
        direct,
        free_norm_drift: free.norm_drift,
    })
}
