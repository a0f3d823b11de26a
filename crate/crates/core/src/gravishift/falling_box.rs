use num_complex::Complex;

use super::FrameTransform;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Particle in a box of width `L` whose walls fall with the primed frame,
/// occupying `0 <= z + v t + a t^2/2 <= L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FallingBox<T> {
    n: usize,
    length: T,
}

impl<T: Real> FallingBox<T> {
    pub fn new(n: usize, length: T) -> Result<Self> {
        if n == 0 {
            return Err(Error::parameter("n", "quantum number must be at least 1"));
        }
        if !(length > T::zero()) || !length.is_finite() {
            return Err(Error::parameter(
                "length",
                format!("must be positive and finite, got {length}"),
            ));
        }
        Ok(Self { n, length })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> T {
        self.length
    }

    /// Free-frame momentum `n pi hbar / L`.
    pub fn free_momentum(&self, hbar: T) -> T {
        T::from_count(self.n) * T::PI() * hbar / self.length
    }

    /// Whether `z` lies inside the falling walls at time `t`.
    pub fn contains(&self, ft: &FrameTransform<T>, z: T, t: T) -> bool {
        let zp = ft.primed(z, t);
        zp >= T::zero() && zp <= self.length
    }

    fn phase(&self, ft: &FrameTransform<T>, z: T, t: T) -> T {
        let half = T::lit(0.5);
        let p = self.free_momentum(ft.hbar);
        let m = ft.m_i;
        let bracket = p * p / (T::lit(2.0) * m)
            + half * m * ft.v * ft.v
            + m * ft.a * (z + half * ft.v * t + ft.a * t * t / T::lit(6.0));
        -(m * ft.v * z + t * bracket) / ft.hbar
    }

    /// `sqrt(2/L) sin[(n pi / L)(z + v t + a t^2/2)]` times the frame phase and
    /// the free energy phase; zero outside the walls.
    pub fn state(&self, ft: &FrameTransform<T>, z: T, t: T) -> Complex<T> {
        if !self.contains(ft, z, t) {
            return Complex::new(T::zero(), T::zero());
        }
        let k = self.free_momentum(ft.hbar) / ft.hbar;
        let amplitude = (T::lit(2.0) / self.length).sqrt() * (k * ft.primed(z, t)).sin();
        Complex::from_polar(amplitude, self.phase(ft, z, t))
    }

    /// The state split as `(forward - backward) / 2i` into its two travelling
    /// components. Only the forward one carries momentum `p_n(t)`; the
    /// backward one carries `-n h / 2L - m_i (v + a t)`.
    pub fn components(&self, ft: &FrameTransform<T>, z: T, t: T) -> (Complex<T>, Complex<T>) {
        let zero = Complex::new(T::zero(), T::zero());
        if !self.contains(ft, z, t) {
            return (zero, zero);
        }
        let k = self.free_momentum(ft.hbar) / ft.hbar;
        let amplitude = (T::lit(2.0) / self.length).sqrt();
        let theta = k * ft.primed(z, t);
        let phase = self.phase(ft, z, t);
        (
            Complex::from_polar(amplitude, phase + theta),
            Complex::from_polar(amplitude, phase - theta),
        )
    }

    /// `p_n(t) = n h / 2L - m_i (v + a t)` and `E_n = p_n^2 / 2 m_i + m_i a z`.
    pub fn eigenvalues(&self, ft: &FrameTransform<T>, z: T, t: T) -> (T, T) {
        let p = self.free_momentum(ft.hbar) - ft.m_i * (ft.v + ft.a * t);
        (p, p * p / (T::lit(2.0) * ft.m_i) + ft.m_i * ft.a * z)
    }
}

/// Validating shorthand for [`FallingBox::state`].
pub fn falling_box_state<T: Real>(
    n: usize,
    box_length: T,
    ft: &FrameTransform<T>,
    z: T,
    t: T,
) -> Result<Complex<T>> {
    Ok(FallingBox::new(n, box_length)?.state(ft, z, t))
}

/// Validating shorthand for [`FallingBox::eigenvalues`].
pub fn box_eigenvalues<T: Real>(
    n: usize,
    box_length: T,
    ft: &FrameTransform<T>,
    z: T,
    t: T,
) -> Result<(T, T)> {
    Ok(FallingBox::new(n, box_length)?.eigenvalues(ft, z, t))
}
