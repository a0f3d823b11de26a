use crate::error::{Error, Result};
use crate::scalar::Real;

/// Uniform 1-D spatial grid plus a uniform time stepping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid<T> {
    z_min: T,
    z_max: T,
    n_points: usize,
    dt: T,
    n_steps: usize,
}

impl<T: Real> Grid<T> {
    pub fn new(z_min: T, z_max: T, n_points: usize, dt: T, n_steps: usize) -> Result<Self> {
        if !z_min.is_finite() || !z_max.is_finite() || !(z_max > z_min) {
            return Err(Error::parameter(
                "z_max",
                format!("need finite bounds with z_max > z_min, got [{z_min}, {z_max}]"),
            ));
        }
        if n_points < 3 {
            return Err(Error::parameter(
                "n_points",
                format!("need at least 3 points, got {n_points}"),
            ));
        }
        if n_steps > 0 && (!(dt > T::zero()) || !dt.is_finite()) {
            return Err(Error::parameter(
                "dt",
                format!("must be positive when stepping, got {dt}"),
            ));
        }
        let grid = Self {
            z_min,
            z_max,
            n_points,
            dt,
            n_steps,
        };
        if !(grid.spacing() > T::zero()) {
            return Err(Error::parameter("n_points", "grid spacing underflows"));
        }
        Ok(grid)
    }

    /// Purely spatial grid (no time stepping).
    pub fn spatial(z_min: T, z_max: T, n_points: usize) -> Result<Self> {
        Self::new(z_min, z_max, n_points, T::zero(), 0)
    }

    /// Same spatial sampling with a different time stepping.
    pub fn with_time_steps(&self, dt: T, n_steps: usize) -> Result<Self> {
        Self::new(self.z_min, self.z_max, self.n_points, dt, n_steps)
    }

    pub fn z_min(&self) -> T {
        self.z_min
    }

    pub fn z_max(&self) -> T {
        self.z_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn dt(&self) -> T {
        self.dt
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// `dz = (z_max - z_min) / (n_points - 1)`.
    pub fn spacing(&self) -> T {
        (self.z_max - self.z_min) / T::from_count(self.n_points - 1)
    }

    /// Total simulated time `n_steps * dt`.
    pub fn duration(&self) -> T {
        T::from_count(self.n_steps) * self.dt
    }

    /// Position of sample `k`.
    pub fn position(&self, k: usize) -> T {
        self.z_min + T::from_count(k) * self.spacing()
    }

    pub fn positions(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n_points).map(move |k| self.position(k))
    }

    /// True when both grids sample the same points.
    pub fn same_sampling(&self, other: &Self) -> bool {
        self.z_min == other.z_min && self.z_max == other.z_max && self.n_points == other.n_points
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_and_positions() {
        let g = Grid::<f64>::new(0.0, 1.0, 101, 0.1, 10).unwrap();
        assert!((g.spacing() - 0.01).abs() < 1e-15);
        assert_eq!(g.position(0), 0.0);
        assert!((g.position(100) - 1.0).abs() < 1e-14);
        assert!((g.duration() - 1.0).abs() < 1e-14);
        assert_eq!(g.positions().count(), 101);
    }

    #[test]
    fn invariants_enforced() {
        assert!(Grid::<f64>::new(1.0, 1.0, 10, 0.1, 1).is_err());
        assert!(Grid::<f64>::new(0.0, 1.0, 2, 0.1, 1).is_err());
        assert!(Grid::<f64>::new(0.0, 1.0, 10, 0.0, 1).is_err());
        assert!(Grid::<f64>::new(0.0, 1.0, 10, 0.0, 0).is_ok());
        assert!(Grid::<f64>::new(0.0, f64::INFINITY, 10, 0.1, 1).is_err());
    }
}
