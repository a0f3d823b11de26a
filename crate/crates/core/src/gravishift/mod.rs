//! Analytic map between a free-falling frame and a frame at rest in a
//! uniform field.
//!
//! A solution `psi'(z', t')` of the free Schrodinger equation in the primed
//! frame, `z' = z + v t + a t^2 / 2`, becomes a solution of
//! `i hbar psi_t = -(hbar^2 / 2 m_i) psi_zz + m_i a z psi` in the unprimed frame
//! after multiplication by `exp(i phi(z, t))`, with
//! `phi = -(m_i / hbar) [v (z + v t / 2) + a t (z + v t / 2 + a t^2 / 6)]`.
//! When `m_i a = m_g g` the potential is the gravitational one. The same
//! multiplication, read the other way, describes an accelerated observer of
//! a free particle.

mod cow;
mod falling_box;
mod plane_wave;

pub use cow::{
    cow_phase_shift, cow_phase_shift_via_transit_time, fringe_count, InterferometerGeometry,
};
pub use falling_box::{box_eigenvalues, falling_box_state, FallingBox};
pub use plane_wave::{
    energy_eigenvalue, free_plane_wave, frequency_shift, momentum_eigenvalue,
    photon_frequency_shift, redshift_ratio, stationary_plane_wave, wavelength_at,
    wavelength_dilation, PlaneWaveState,
};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::field::ComplexField;
use crate::grid::Grid;
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// Kinematics of the primed frame together with `m_i` and `hbar`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameTransform<T> {
    pub v: T,
    pub a: T,
    pub m_i: T,
    pub hbar: T,
}

impl<T: Real> FrameTransform<T> {
    pub fn new(v: T, a: T, m_i: T, hbar: T) -> Result<Self> {
        if !(m_i > T::zero()) || !m_i.is_finite() {
            return Err(Error::parameter(
                "m_i",
                format!("must be positive and finite, got {m_i}"),
            ));
        }
        if !(hbar > T::zero()) || !hbar.is_finite() {
            return Err(Error::parameter(
                "hbar",
                format!("must be positive and finite, got {hbar}"),
            ));
        }
        if !v.is_finite() || !a.is_finite() {
            return Err(Error::parameter("v", "frame kinematics must be finite"));
        }
        Ok(Self { v, a, m_i, hbar })
    }

    /// Takes `v`, `a`, `m_i` and `hbar` from the system.
    pub fn from_system(system: &PhysicalSystem<T>) -> Self {
        Self {
            v: system.v(),
            a: system.a(),
            m_i: system.m_i(),
            hbar: system.hbar(),
        }
    }

    /// Displacement `v t + a t^2 / 2` between the two origins.
    pub fn shift(&self, t: T) -> T {
        self.v * t + T::lit(0.5) * self.a * t * t
    }

    /// Primed coordinate of the stationary point `z` at time `t`.
    pub fn primed(&self, z: T, t: T) -> T {
        z + self.shift(t)
    }

    /// `S(z', t')` in primed coordinates.
    pub fn phase_s(&self, z_prime: T, t_prime: T) -> T {
        let half = T::lit(0.5);
        let k = self.m_i / self.hbar;
        -k * self.v * (z_prime - half * self.v * t_prime)
            - k * self.a
                * t_prime
                * (z_prime - self.v * t_prime - self.a * t_prime * t_prime / T::lit(3.0))
    }

    /// The same phase in stationary coordinates.
    pub fn stationary_phase(&self, z: T, t: T) -> T {
        let half = T::lit(0.5);
        let k = self.m_i / self.hbar;
        let drift = z + half * self.v * t;
        -k * (self.v * drift + self.a * t * (drift + self.a * t * t / T::lit(6.0)))
    }

    /// `exp(i phi(z, t))`.
    pub fn phase_factor(&self, z: T, t: T) -> Complex<T> {
        Complex::from_polar(T::one(), self.stationary_phase(z, t))
    }

    /// Pointwise map: `psi_free(z', t)` evaluated at the primed point, times the phase factor.
    pub fn transform_pointwise(
        &self,
        psi_free: impl Fn(T, T) -> Complex<T>,
        z: T,
        t: T,
    ) -> Complex<T> {
        psi_free(self.primed(z, t), t) * self.phase_factor(z, t)
    }
}

/// Multiplies samples of `psi'(z + v t + a t^2/2, t)`, already taken on the
/// stationary grid, by the phase factor. Moduli are unchanged.
pub fn to_stationary_frame<T: Real>(
    ft: &FrameTransform<T>,
    psi_shifted: &ComplexField<T>,
    t: T,
    grid: &Grid<T>,
) -> Result<ComplexField<T>> {
    if !psi_shifted.grid().same_sampling(grid) {
        return Err(Error::parameter(
            "psi_shifted",
            "field is not sampled on the stationary grid",
        ));
    }
    let values = psi_shifted
        .values()
        .iter()
        .zip(grid.positions())
        .map(|(psi, z)| psi * ft.phase_factor(z, t))
        .collect();
    Ok(psi_shifted.with_values(values, psi_shifted.is_normalized()))
}

/// Resamples a free-frame field at the primed points by interpolation, then
/// applies [`to_stationary_frame`]. Points whose primed image leaves the grid
/// read as zero.
pub fn free_to_stationary<T: Real>(
    ft: &FrameTransform<T>,
    free: &ComplexField<T>,
    t: T,
) -> Result<ComplexField<T>> {
    let shifted = free.translated(ft.shift(t));
    to_stationary_frame(ft, &shifted, t, free.grid())
}

/// Galilean boost: [`to_stationary_frame`] restricted to `a = 0`.
pub fn galilean_boost<T: Real>(
    ft: &FrameTransform<T>,
    psi_shifted: &ComplexField<T>,
    t: T,
    grid: &Grid<T>,
) -> Result<ComplexField<T>> {
    if ft.a != T::zero() {
        return Err(Error::parameter(
            "a",
            format!("a Galilean boost needs a = 0, got {}", ft.a),
        ));
    }
    to_stationary_frame(ft, psi_shifted, t, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ft(v: f64, a: f64) -> FrameTransform<f64> {
        FrameTransform::<f64>::new(v, a, 1.0, 1.0).unwrap()
    }

    #[test]
    fn phase_s_special_cases() {
        let rest = ft(0.0, 0.0);
        for (z, t) in [(0.0, 0.0), (3.0, 1.5), (-7.0, 20.0)] {
            assert_eq!(rest.phase_s(z, t), 0.0);
        }
        let boost = FrameTransform::<f64>::new(0.7, 0.0, 2.0, 0.5).unwrap();
        let (z, t) = (1.3, 0.4);
        let galilean = -(2.0 * 0.7 / 0.5) * (z - 0.7 * t / 2.0);
        assert!((boost.phase_s(z, t) - galilean).abs() < 1e-15);
    }

    #[test]
    fn phase_s_monomials() {
        // v = 1, a = 2, m = hbar = 1, z' = 3, t' = 0.5, expanded term by term:
        // -v z' + v^2 t'/2 - a t' z' + a v t'^2 + a^2 t'^3 / 3
        let terms: [f64; 5] = [-3.0, 0.25, -3.0, 0.5, 4.0 * 0.125 / 3.0];
        let expected: f64 = terms.iter().sum();
        assert!((ft(1.0, 2.0).phase_s(3.0, 0.5) - expected).abs() < 1e-14);
    }

    #[test]
    fn stationary_phase_is_s_at_primed_point() {
        let f = FrameTransform::<f64>::new(0.3, -1.7, 1.9, 0.8).unwrap();
        for (z, t) in [(0.0, 0.0), (1.0, 2.0), (-4.2, 0.33), (10.0, 5.5)] {
            let a = f.stationary_phase(z, t);
            let b = f.phase_s(f.primed(z, t), t);
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "({z}, {t})");
        }
    }

    fn sample_field() -> ComplexField<f64> {
        let grid = Grid::spatial(-10.0, 10.0, 401).unwrap();
        ComplexField::gaussian(grid, 1.0, 1.3, 0.8).unwrap()
    }

    #[test]
    fn identity_at_origin() {
        let f = sample_field();
        let out = to_stationary_frame(&ft(0.0, 3.0), &f, 0.0, f.grid()).unwrap();
        assert_eq!(out, f);
        assert_eq!(free_to_stationary(&ft(0.0, 3.0), &f, 0.0).unwrap(), f);
    }

    #[test]
    fn grid_mismatch_rejected() {
        let f = sample_field();
        let other = Grid::spatial(-10.0, 10.0, 400).unwrap();
        assert!(matches!(
            to_stationary_frame(&ft(0.1, 0.2), &f, 1.0, &other),
            Err(Error::Parameter { .. })
        ));
    }

    #[test]
    fn galilean_boost_contract() {
        let f = sample_field();
        assert!(galilean_boost(&ft(0.2, 1.0), &f, 0.5, f.grid()).is_err());
        assert_eq!(galilean_boost(&ft(0.0, 0.0), &f, 0.5, f.grid()).unwrap(), f);
        let boost = ft(0.9, 0.0);
        assert_eq!(
            galilean_boost(&boost, &f, 0.5, f.grid()).unwrap(),
            to_stationary_frame(&boost, &f, 0.5, f.grid()).unwrap()
        );
    }

    #[test]
    fn composition_of_boost_and_acceleration() {
        let (v, a) = (0.6, 1.4);
        let full = ft(v, a);
        let boost = ft(v, 0.0);
        let accel = ft(0.0, a);
        let psi = |z: f64, t: f64| Complex::from_polar((-z * z / 8.0).exp(), 0.7 * z - 0.3 * t);
        let t = 0.85;
        let mut ratios = Vec::new();
        for k in 0..41 {
            let z = -5.0 + 0.25 * k as f64;
            let single = full.transform_pointwise(psi, z, t);
            let two_step =
                accel.transform_pointwise(|zp, tp| boost.transform_pointwise(psi, zp, tp), z, t);
            ratios.push((two_step / single).arg());
        }
        let spread = ratios
            .iter()
            .fold(0.0f64, |m, r| m.max((r - ratios[0]).abs()));
        assert!(spread <= 1e-9, "phase difference not flat: {spread}");
    }

    proptest! {
        #[test]
        fn modulus_preserved(v in -5.0f64..5.0, a in -5.0f64..5.0, t in 0.0f64..3.0) {
            let f = sample_field();
            let out = to_stationary_frame(&ft(v, a), &f, t, f.grid()).unwrap();
            for (x, y) in f.values().iter().zip(out.values()) {
                prop_assert!((x.norm() - y.norm()).abs() <= 4.0 * f64::EPSILON * x.norm());
            }
            prop_assert_eq!(out.is_normalized(), f.is_normalized());
        }
    }
}
