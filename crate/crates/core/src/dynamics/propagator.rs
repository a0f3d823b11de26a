use num_complex::Complex;

use super::moments::raw_moments;
use super::tridiagonal::{Tridiagonal, TridiagonalLu};
use crate::error::{Error, Result};
use crate::field::{normalized_tol, ComplexField};
use crate::grid::Grid;
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// Grid points at each end that must stay empty.
pub const EDGE_POINTS: usize = 5;
/// Largest initial amplitude allowed in the edge band.
pub const INITIAL_EDGE_TOL: f64 = 1e-12;
/// Edge amplitude that aborts a run.
pub const CONTACT_TOL: f64 = 1e-6;

/// Crank-Nicolson stepper for `i hbar psi_t = -(hbar^2/2m) psi_zz + V psi`
/// with zero Dirichlet values just outside the grid.
///
/// The second derivative is the compact fourth-order form
/// `M^{-1} delta^2 / dz^2` with `M = (1, 10, 1) / 12`. Multiplying the
/// scheme through by `M` keeps one tridiagonal solve per step:
/// `(M + i tau H) psi^{n+1} = (M - i tau H) psi^n`, `tau = dt / 2 hbar`,
/// `H = -(hbar^2 / 2m) delta^2 / dz^2 + M V`. The iteration matrix is the
/// Cayley transform of a symmetric operator and conserves the discrete norm.
#[derive(Debug, Clone)]
pub struct CrankNicolson<T> {
    implicit: TridiagonalLu<T>,
    explicit: Tridiagonal<T>,
    scratch: Vec<Complex<T>>,
}

impl<T: Real> CrankNicolson<T> {
    pub fn new(
        grid: &Grid<T>,
        mass: T,
        hbar: T,
        dt: T,
        potential: impl Fn(T) -> T,
    ) -> Result<Self> {
        if !(mass > T::zero()) || !(hbar > T::zero()) {
            return Err(Error::parameter("mass", "mass and hbar must be positive"));
        }
        if !(dt > T::zero()) || !dt.is_finite() {
            return Err(Error::parameter(
                "dt",
                format!("must be positive and finite, got {dt}"),
            ));
        }
        let n = grid.n_points();
        let dz = grid.spacing();
        let kin = hbar * hbar / (T::lit(2.0) * mass * dz * dz);
        let tau = dt / (T::lit(2.0) * hbar);
        let twelfth = T::lit(1.0 / 12.0);
        let v: Vec<T> = grid.positions().map(&potential).collect();
        if let Some(k) = v.iter().position(|x| !x.is_finite()) {
            return Err(Error::numeric(format!(
                "potential is not finite at grid point {k}"
            )));
        }

        let mut lo_a = Vec::with_capacity(n);
        let mut di_a = Vec::with_capacity(n);
        let mut up_a = Vec::with_capacity(n);
        let mut lo_b = Vec::with_capacity(n);
        let mut di_b = Vec::with_capacity(n);
        let mut up_b = Vec::with_capacity(n);
        for j in 0..n {
            let h_diag = T::lit(2.0) * kin + T::lit(10.0) * twelfth * v[j];
            let h_lo = if j > 0 {
                -kin + twelfth * v[j - 1]
            } else {
                T::zero()
            };
            let h_up = if j + 1 < n {
                -kin + twelfth * v[j + 1]
            } else {
                T::zero()
            };
            let m_diag = T::lit(10.0) * twelfth;
            di_a.push(Complex::new(m_diag, tau * h_diag));
            di_b.push(Complex::new(m_diag, -tau * h_diag));
            lo_a.push(Complex::new(twelfth, tau * h_lo));
            lo_b.push(Complex::new(twelfth, -tau * h_lo));
            up_a.push(Complex::new(twelfth, tau * h_up));
            up_b.push(Complex::new(twelfth, -tau * h_up));
        }
        Ok(Self {
            implicit: Tridiagonal::new(lo_a, di_a, up_a)?.factor()?,
            explicit: Tridiagonal::new(lo_b, di_b, up_b)?,
            scratch: vec![Complex::new(T::zero(), T::zero()); n],
        })
    }

    /// Uniform field potential `V = slope * z`.
    pub fn linear(grid: &Grid<T>, mass: T, hbar: T, dt: T, slope: T) -> Result<Self> {
        Self::new(grid, mass, hbar, dt, |z| slope * z)
    }

    /// Advances `psi` by one time step in place.
    pub fn step(&mut self, psi: &mut [Complex<T>]) {
        self.explicit.apply(psi, &mut self.scratch);
        self.implicit.solve_in_place(&mut self.scratch);
        psi.copy_from_slice(&self.scratch);
    }
}

/// One row of the moment time series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSample<T> {
    pub t: T,
    pub mean_z: T,
    pub mean_p: T,
    pub sigma_z: T,
    pub sigma_p: T,
}

/// Outcome of a propagation.
#[derive(Debug, Clone, PartialEq)]
pub struct PropagationReport<T> {
    pub final_field: ComplexField<T>,
    /// `|norm^2(final) - norm^2(initial)|`.
    pub norm_drift: T,
    /// Filled in by frame comparisons; `None` for a plain run.
    pub max_frame_mismatch: Option<T>,
    pub moment_series: Vec<MomentSample<T>>,
}

/// Controls moment sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropagationOptions {
    /// Record moments every this many steps (and at `t = 0` and the end);
    /// `None` records nothing.
    pub sample_every: Option<usize>,
}

impl Default for PropagationOptions {
    fn default() -> Self {
        Self {
            sample_every: Some(1),
        }
    }
}

/// Evolves `psi0` under `V = slope * z` for `grid.n_steps()` steps of
/// `grid.dt()`, recording moments after every step.
pub fn propagate_linear_potential<T: Real>(
    psi0: &ComplexField<T>,
    system: &PhysicalSystem<T>,
    slope: T,
    grid: &Grid<T>,
) -> Result<PropagationReport<T>> {
    propagate_with_options(psi0, system, slope, grid, PropagationOptions::default())
}

pub fn propagate_with_options<T: Real>(
    psi0: &ComplexField<T>,
    system: &PhysicalSystem<T>,
    slope: T,
    grid: &Grid<T>,
    options: PropagationOptions,
) -> Result<PropagationReport<T>> {
    if !psi0.grid().same_sampling(grid) {
        return Err(Error::parameter(
            "psi0",
            "initial field is not sampled on the propagation grid",
        ));
    }
    let n0 = psi0.norm_squared()?;
    if (n0 - T::one()).abs() > normalized_tol::<T>() {
        return Err(Error::parameter(
            "psi0",
            format!("initial field must be normalized, norm^2 = {n0}"),
        ));
    }
    if grid.n_points() < 2 * EDGE_POINTS + 1 {
        return Err(Error::parameter(
            "grid",
            format!("need more than {} points", 2 * EDGE_POINTS),
        ));
    }
    let initial_edge = edge_amplitude(psi0.values());
    if initial_edge >= T::lit(INITIAL_EDGE_TOL) {
        return Err(Error::parameter(
            "psi0",
            format!(
                "initial amplitude {:e} near the boundary; enlarge the domain",
                initial_edge.as_f64()
            ),
        ));
    }
    if let Some(0) = options.sample_every {
        return Err(Error::parameter("sample_every", "must be at least 1"));
    }

    let hbar = system.hbar();
    let mut moment_series = Vec::new();
    let mut record = |t: T, values: &[Complex<T>]| {
        let m = raw_moments(grid, values, hbar);
        moment_series.push(MomentSample {
            t,
            mean_z: m.mean_z,
            mean_p: m.mean_p,
            sigma_z: m.sigma_z,
            sigma_p: m.sigma_p,
        });
    };

    let mut psi = psi0.values().to_vec();
    if options.sample_every.is_some() {
        record(T::zero(), &psi);
    }
    let steps = grid.n_steps();
    if steps > 0 {
        let mut stepper = CrankNicolson::linear(grid, system.m_i(), hbar, grid.dt(), slope)?;
        for s in 1..=steps {
            stepper.step(&mut psi);
            let t = T::from_count(s) * grid.dt();
            let edge = edge_amplitude(&psi);
            if !(edge <= T::lit(CONTACT_TOL)) {
                return Err(Error::BoundaryContact {
                    time: t.as_f64(),
                    amplitude: edge.as_f64(),
                });
            }
            if let Some(every) = options.sample_every {
                if s % every == 0 || s == steps {
                    record(t, &psi);
                }
            }
        }
    }

    let final_field = ComplexField::new(*grid, psi)?;
    let n1 = final_field.norm_squared()?;
    Ok(PropagationReport {
        final_field: final_field.with_normalized_flag(),
        norm_drift: (n1 - n0).abs(),
        max_frame_mismatch: None,
        moment_series,
    })
}

fn edge_amplitude<T: Real>(values: &[Complex<T>]) -> T {
    let n = values.len();
    let band = EDGE_POINTS.min(n);
    values[..band]
        .iter()
        .chain(&values[n - band..])
        .fold(T::zero(), |m, c| m.max(c.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::moments::free_gaussian_width;

    fn natural(g: f64) -> PhysicalSystem<f64> {
        PhysicalSystem::new(1.0, 1.0, g, 0.0, 0.0, 1.0).unwrap()
    }

    #[test]
    fn norm_conserved_over_many_steps() {
        let grid = Grid::new(-20.0, 30.0, 1024, 1e-4, 10_000).unwrap();
        let psi0 = ComplexField::gaussian(grid, 8.0, 0.5, 1.0).unwrap();
        let report = propagate_with_options(
            &psi0,
            &natural(1.0),
            1.0,
            &grid,
            PropagationOptions { sample_every: None },
        )
        .unwrap();
        assert!(report.norm_drift <= 1e-9, "{}", report.norm_drift);
        assert!(report.moment_series.is_empty());
    }

    #[test]
    fn free_width_follows_analytic_curve() {
        let t_double = 2.0 * 3f64.sqrt() * 0.25;
        let steps = 2000;
        let grid = Grid::new(-20.0, 20.0, 2048, t_double / steps as f64, steps).unwrap();
        let psi0 = ComplexField::gaussian(grid, 0.0, 0.5, 0.0).unwrap();
        let report = propagate_linear_potential(&psi0, &natural(0.0), 0.0, &grid).unwrap();
        let last = report.moment_series.last().unwrap();
        assert!((last.t - t_double).abs() < 1e-12);
        assert!((last.sigma_z / free_gaussian_width(0.5, 1.0, 1.0, last.t) - 1.0).abs() < 1e-4);
        assert!((last.sigma_z - 1.0).abs() < 1e-4);
        assert_eq!(report.moment_series.len(), steps + 1);
    }

    #[test]
    fn preconditions() {
        let grid = Grid::new(-5.0, 5.0, 201, 1e-3, 10).unwrap();
        let wide = ComplexField::gaussian(grid, 0.0, 2.0, 0.0).unwrap();
        assert!(matches!(
            propagate_linear_potential(&wide, &natural(0.0), 0.0, &grid),
            Err(Error::Parameter { name: "psi0", .. })
        ));
        let narrow = ComplexField::gaussian(grid, 0.0, 0.3, 0.0).unwrap();
        let unnormalized = narrow.scaled(Complex::new(2.0, 0.0));
        assert!(propagate_linear_potential(&unnormalized, &natural(0.0), 0.0, &grid).is_err());
        let other = Grid::new(-5.0, 5.0, 202, 1e-3, 10).unwrap();
        assert!(propagate_linear_potential(&narrow, &natural(0.0), 0.0, &other).is_err());
    }

    #[test]
    fn boundary_contact_reports_time() {
        // a fast packet heading for the right wall
        let grid = Grid::new(-5.0, 5.0, 401, 1e-3, 2000).unwrap();
        let psi0 = ComplexField::gaussian(grid, 0.0, 0.4, 20.0).unwrap();
        match propagate_linear_potential(&psi0, &natural(0.0), 0.0, &grid) {
            Err(Error::BoundaryContact { time, amplitude }) => {
                assert!(time > 0.0 && time < 0.3, "t = {time}");
                assert!(amplitude > CONTACT_TOL);
            }
            other => panic!("expected boundary contact, got {other:?}"),
        }
    }

    #[test]
    fn zero_steps_is_identity() {
        let grid = Grid::spatial(-10.0, 10.0, 301).unwrap();
        let psi0 = ComplexField::gaussian(grid, 0.0, 0.8, 0.5).unwrap();
        let report = propagate_linear_potential(&psi0, &natural(0.0), 0.0, &grid).unwrap();
        assert_eq!(report.final_field.values(), psi0.values());
        assert_eq!(report.norm_drift, 0.0);
        assert_eq!(report.moment_series.len(), 1);
    }
}
