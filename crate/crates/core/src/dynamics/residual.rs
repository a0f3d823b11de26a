use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// Minimum samples per axis for the five-point stencils.
pub const MIN_STENCIL: usize = 5;

/// A complex function sampled on a uniform `(z, t)` lattice, stored time-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceTimeSamples<T> {
    pub z0: T,
    pub dz: T,
    pub nz: usize,
    pub t0: T,
    pub dt: T,
    pub nt: usize,
    values: Vec<Complex<T>>,
}

impl<T: Real> SpaceTimeSamples<T> {
    /// Samples `f(z, t)` at `z0 + i dz`, `t0 + j dt`.
    pub fn from_fn(
        z0: T,
        dz: T,
        nz: usize,
        t0: T,
        dt: T,
        nt: usize,
        f: impl Fn(T, T) -> Complex<T>,
    ) -> Self {
        let mut values = Vec::with_capacity(nz * nt);
        for j in 0..nt {
            let t = t0 + T::from_count(j) * dt;
            for i in 0..nz {
                values.push(f(z0 + T::from_count(i) * dz, t));
            }
        }
        Self {
            z0,
            dz,
            nz,
            t0,
            dt,
            nt,
            values,
        }
    }

    /// `n x n` stencil centred on `(z, t)` with spacing `h` on both axes.
    pub fn centred(z: T, t: T, h: T, n: usize, f: impl Fn(T, T) -> Complex<T>) -> Self {
        let back = h * T::from_count(n / 2);
        Self::from_fn(z - back, h, n, t - back, h, n, f)
    }

    pub fn value(&self, iz: usize, it: usize) -> Complex<T> {
        self.values[it * self.nz + iz]
    }

    pub fn z(&self, iz: usize) -> T {
        self.z0 + T::from_count(iz) * self.dz
    }
}

/// Largest residual `|i hbar psi_t + (hbar^2/2m) psi_zz - F z psi|` over the
/// interior points, divided by the largest `|psi|` of the samples. The result
/// has units of energy. Both derivatives use five-point fourth-order central
/// differences, so at least five samples per axis are required.
pub fn pde_residual<T: Real>(
    samples: &SpaceTimeSamples<T>,
    system: &PhysicalSystem<T>,
    slope: T,
) -> Result<T> {
    if samples.nz < MIN_STENCIL || samples.nt < MIN_STENCIL {
        return Err(Error::parameter(
            "samples",
            format!(
                "need at least {MIN_STENCIL} points per axis, got {} x {}",
                samples.nz, samples.nt
            ),
        ));
    }
    if !(samples.dz > T::zero()) || !(samples.dt > T::zero()) {
        return Err(Error::parameter("samples", "spacings must be positive"));
    }
    let scale = samples
        .values
        .iter()
        .fold(T::zero(), |m, c| m.max(c.norm()));
    if !(scale > T::zero()) {
        return Err(Error::numeric("all samples vanish"));
    }
    let hbar = system.hbar();
    let kin = hbar * hbar / (T::lit(2.0) * system.m_i());
    let i_hbar = Complex::new(T::zero(), hbar);
    let twelve = T::lit(12.0);
    let (c1, c2) = (T::lit(16.0), T::lit(30.0));
    let eight = T::lit(8.0);

    let mut worst = T::zero();
    for it in 2..samples.nt - 2 {
        for iz in 2..samples.nz - 2 {
            let v = |dz: isize, dt: isize| {
                samples.value((iz as isize + dz) as usize, (it as isize + dt) as usize)
            };
            let psi_t =
                (v(0, -2) - v(0, -1) * eight + v(0, 1) * eight - v(0, 2)) / (twelve * samples.dt);
            let psi_zz = (-v(-2, 0) + v(-1, 0) * c1 - v(0, 0) * c2 + v(1, 0) * c1 - v(2, 0))
                / (twelve * samples.dz * samples.dz);
            let r = i_hbar * psi_t + psi_zz * kin - v(0, 0) * (slope * samples.z(iz));
            worst = worst.max(r.norm());
        }
    }
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> PhysicalSystem<f64> {
        PhysicalSystem::new(1.0, 1.0, 0.0, 0.0, 0.0, 1.0).unwrap()
    }

    fn free_plane(k: f64) -> impl Fn(f64, f64) -> Complex<f64> {
        move |z, t| Complex::from_polar(1.0, k * z - 0.5 * k * k * t)
    }

    #[test]
    fn free_plane_wave_solves_free_equation() {
        let s = SpaceTimeSamples::centred(0.4, 1.1, 1e-3, 7, free_plane(1.7));
        assert!(pde_residual(&s, &unit(), 0.0).unwrap() < 1e-6);
        // the same wave does not solve the equation with a field
        assert!(pde_residual(&s, &unit(), 1.0).unwrap() > 0.3);
    }

    #[test]
    fn coarse_stencil_rejected() {
        let s = SpaceTimeSamples::from_fn(0.0, 0.1, 4, 0.0, 0.1, 9, free_plane(1.0));
        assert!(matches!(
            pde_residual(&s, &unit(), 0.0),
            Err(Error::Parameter { .. })
        ));
    }

    #[test]
    fn indexing() {
        let s = SpaceTimeSamples::from_fn(1.0, 0.5, 3, 2.0, 0.25, 2, Complex::new);
        assert_eq!(s.value(2, 1), Complex::new(2.0, 2.25));
        assert_eq!(s.z(1), 1.5);
    }
}
