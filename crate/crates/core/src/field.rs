use num_complex::Complex;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::scalar::Real;

/// Tolerance on `|norm^2 - 1|` for a field flagged normalized, in double precision.
pub const NORMALIZED_TOL: f64 = 1e-10;

/// Normalization tolerance for `T`: [`NORMALIZED_TOL`] or `1000 eps`, whichever is larger.
pub fn normalized_tol<T: Real>() -> T {
    T::lit(NORMALIZED_TOL).max(T::lit(1e3) * T::epsilon())
}

/// Number of nodes used by [`ComplexField::translated`].
const INTERPOLATION_NODES: usize = 8;

/// Complex wave function sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField<T> {
    grid: Grid<T>,
    values: Vec<Complex<T>>,
    normalized: bool,
}

impl<T: Real> ComplexField<T> {
    pub fn new(grid: Grid<T>, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::parameter(
                "values",
                format!("expected {} samples, got {}", grid.n_points(), values.len()),
            ));
        }
        Ok(Self {
            grid,
            values,
            normalized: false,
        })
    }

    pub fn zeros(grid: Grid<T>) -> Self {
        Self {
            values: vec![Complex::new(T::zero(), T::zero()); grid.n_points()],
            grid,
            normalized: false,
        }
    }

    /// Samples `f(z)` at every grid point.
    pub fn from_fn(grid: Grid<T>, f: impl Fn(T) -> Complex<T>) -> Self {
        Self {
            values: grid.positions().map(f).collect(),
            grid,
            normalized: false,
        }
    }

    /// Gaussian packet `(2 pi sigma^2)^(-1/4) exp(-(z - c)^2 / (4 sigma^2) + i k0 z)`,
    /// rescaled so the grid norm is exactly one. `sigma` is the position spread.
    pub fn gaussian(grid: Grid<T>, center: T, sigma: T, wavenumber: T) -> Result<Self> {
        if !(sigma > T::zero()) {
            return Err(Error::parameter(
                "sigma",
                format!("must be positive, got {sigma}"),
            ));
        }
        let pref = (T::lit(2.0) * T::PI() * sigma * sigma).powf(T::lit(-0.25));
        let four_var = T::lit(4.0) * sigma * sigma;
        Self::from_fn(grid, |z| {
            let d = z - center;
            Complex::from_polar(pref * (-(d * d) / four_var).exp(), wavenumber * z)
        })
        .normalized()
    }

    /// Replaces the samples; the caller vouches for the normalized flag.
    pub(crate) fn with_values(&self, values: Vec<Complex<T>>, normalized: bool) -> Self {
        debug_assert_eq!(values.len(), self.values.len());
        Self {
            grid: self.grid,
            values,
            normalized,
        }
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex<T>> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Trapezoidal integral of `|psi|^2` over the grid.
    pub fn norm_squared(&self) -> Result<T> {
        if let Some(k) = self
            .values
            .iter()
            .position(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::numeric(format!("non-finite sample at index {k}")));
        }
        Ok(trapezoid(
            self.grid.spacing(),
            self.values.iter().map(|c| c.norm_sqr()),
        ))
    }

    /// Trapezoidal inner product `<self, other> = sum conj(self) other dz`.
    pub fn inner_product(&self, other: &Self) -> Result<Complex<T>> {
        if !self.grid.same_sampling(&other.grid) {
            return Err(Error::parameter("other", "fields live on different grids"));
        }
        let dz = self.grid.spacing();
        let n = self.values.len();
        let half = T::lit(0.5);
        let mut acc = Complex::new(T::zero(), T::zero());
        for (k, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            let w = if k == 0 || k + 1 == n { half } else { T::one() };
            acc = acc + a.conj() * b * w;
        }
        Ok(acc * dz)
    }

    /// Rescales to unit norm and sets the normalized flag.
    pub fn normalized(self) -> Result<Self> {
        let n2 = self.norm_squared()?;
        if !(n2 > T::zero()) {
            return Err(Error::numeric("cannot normalize a zero field"));
        }
        let s = n2.sqrt().recip();
        let values = self.values.into_iter().map(|c| c * s).collect();
        Ok(Self {
            grid: self.grid,
            values,
            normalized: true,
        })
    }

    /// Sets the normalized flag iff `|norm^2 - 1| <= 1e-10`.
    pub fn with_normalized_flag(mut self) -> Self {
        self.normalized = self
            .norm_squared()
            .map(|n2| (n2 - T::one()).abs() <= normalized_tol::<T>())
            .unwrap_or(false);
        self
    }

    /// Multiplies every sample by `c`. The normalized flag is cleared unless `|c| = 1`.
    pub fn scaled(&self, c: Complex<T>) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|v| v * c).collect(),
            normalized: self.normalized && c.norm() == T::one(),
        }
    }

    pub fn max_abs(&self) -> T {
        self.values.iter().fold(T::zero(), |m, c| m.max(c.norm()))
    }

    /// Samples `psi(z_k + shift)` by 8-point Lagrange interpolation; points outside
    /// the grid read as zero. A zero shift returns an exact copy.
    pub fn translated(&self, shift: T) -> Self {
        if shift == T::zero() {
            return self.clone();
        }
        let dz = self.grid.spacing();
        let n = self.values.len();
        let values = (0..n)
            .map(|k| {
                let z = self.grid.position(k) + shift;
                self.interpolate_at(z, dz)
            })
            .collect();
        Self {
            grid: self.grid,
            values,
            normalized: false,
        }
        .with_normalized_flag()
    }

    fn interpolate_at(&self, z: T, dz: T) -> Complex<T> {
        let n = self.values.len();
        let zero = Complex::new(T::zero(), T::zero());
        let s = (z - self.grid.z_min()) / dz;
        if !(s >= T::zero()) || s > T::from_count(n - 1) {
            return zero;
        }
        let base = s.floor().to_usize().unwrap_or(0).min(n - 1);
        let frac = s - T::from_count(base);
        if frac == T::zero() {
            return self.values[base];
        }
        let nodes = INTERPOLATION_NODES.min(n);
        // Window of `nodes` samples centred on [base, base + 1], clamped to the grid.
        let start = (base + 1).saturating_sub(nodes / 2).min(n - nodes);
        let x = s - T::from_count(start);
        let mut acc = zero;
        for j in 0..nodes {
            let xj = T::from_count(j);
            let mut w = T::one();
            for l in (0..nodes).filter(|&l| l != j) {
                let xl = T::from_count(l);
                w = w * (x - xl) / (xj - xl);
            }
            acc = acc + self.values[start + j] * w;
        }
        acc
    }
}

/// Trapezoidal rule over uniformly spaced samples.
pub(crate) fn trapezoid<T: Real>(dz: T, samples: impl ExactSizeIterator<Item = T>) -> T {
    let n = samples.len();
    let half = T::lit(0.5);
    let mut acc = T::zero();
    for (k, s) in samples.enumerate() {
        acc = acc + if k == 0 || k + 1 == n { s * half } else { s };
    }
    acc * dz
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unit_grid() -> Grid<f64> {
        Grid::spatial(0.0, 1.0, 101).unwrap()
    }

    #[test]
    fn constant_field_has_unit_norm() {
        let f = ComplexField::from_fn(unit_grid(), |_| Complex::new(1.0, 0.0));
        assert!((f.norm_squared().unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(
            ComplexField::zeros(unit_grid()).norm_squared().unwrap(),
            0.0
        );
    }

    #[test]
    fn analytic_gaussian_norm() {
        // (2 pi)^(-1/2) exp(-z^2 / 2) integrates to one; truncation at |z| = 10 is ~1e-23.
        let grid = Grid::spatial(-10.0, 10.0, 2001).unwrap();
        let f = ComplexField::from_fn(grid, |z: f64| {
            Complex::new(
                (2.0 * std::f64::consts::PI).powf(-0.25) * (-z * z / 4.0).exp(),
                0.0,
            )
        });
        assert!((f.norm_squared().unwrap() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn nan_is_a_numeric_error() {
        let mut v = vec![Complex::new(0.0, 0.0); 101];
        v[7] = Complex::new(f64::NAN, 0.0);
        let f = ComplexField::new(unit_grid(), v).unwrap();
        assert!(matches!(f.norm_squared(), Err(Error::Numeric(_))));
    }

    #[test]
    fn length_mismatch_rejected() {
        assert!(ComplexField::new(unit_grid(), vec![Complex::new(0.0, 0.0); 3]).is_err());
    }

    #[test]
    fn gaussian_is_flagged_normalized() {
        let grid = Grid::<f64>::spatial(-10.0, 10.0, 801).unwrap();
        let g = ComplexField::gaussian(grid, 0.5, 1.0, 2.0).unwrap();
        assert!(g.is_normalized());
        assert!((g.norm_squared().unwrap() - 1.0).abs() <= 1e-12);
        assert!(!g.scaled(Complex::new(2.0, 0.0)).is_normalized());
    }

    #[test]
    fn translation_matches_analytic_shift() {
        let grid = Grid::spatial(-20.0, 20.0, 1601).unwrap();
        let g = |z: f64| Complex::from_polar((-(z - 1.0) * (z - 1.0) / 2.0).exp(), 1.5 * z);
        let f = ComplexField::from_fn(grid, g);
        let shifted = f.translated(0.3337);
        for (k, v) in shifted.values().iter().enumerate() {
            let z = grid.position(k);
            if z + 0.3337 < 19.0 {
                assert!((v - g(z + 0.3337)).norm() < 1e-9, "k = {k}");
            }
        }
        assert_eq!(f.translated(0.0), f);
    }

    proptest! {
        #[test]
        fn norm_invariant_under_global_phase(phase in -10.0f64..10.0, seed in 0u64..1000) {
            let grid = unit_grid();
            let f = ComplexField::from_fn(grid, |z| {
                Complex::new((z * 7.0 + seed as f64).sin(), (z * 3.0 - seed as f64).cos())
            });
            let n0 = f.norm_squared().unwrap();
            let n1 = f.scaled(Complex::from_polar(1.0, phase)).norm_squared().unwrap();
            prop_assert!((n0 - n1).abs() <= 1e-14 * n0.max(1.0));
        }

        #[test]
        fn norm_scales_quadratically(re in -5.0f64..5.0, im in -5.0f64..5.0) {
            let grid = unit_grid();
            let f = ComplexField::from_fn(grid, |z: f64| Complex::new(1.0 + z, z * z));
            let c = Complex::new(re, im);
            let n0 = f.norm_squared().unwrap();
            let n1 = f.scaled(c).norm_squared().unwrap();
            let expected = c.norm_sqr() * n0;
            prop_assert!((n1 - expected).abs() <= 1e-12 * expected.max(1e-300));
        }
    }
}
