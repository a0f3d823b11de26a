use num_complex::Complex;

use crate::error::{Error, Result};
use crate::field::{normalized_tol, ComplexField};
use crate::grid::Grid;
use crate::scalar::Real;

/// Eighth-order central first-derivative weights for offsets 1..=4.
const D1: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];

/// Position and momentum expectation values and spreads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments<T> {
    pub mean_z: T,
    pub mean_p: T,
    pub sigma_z: T,
    pub sigma_p: T,
}

/// Moments of a normalized field. `<p>` and `<p^2>` use an eighth-order
/// central difference, with zero samples assumed beyond the grid.
pub fn moments<T: Real>(psi: &ComplexField<T>, hbar: T) -> Result<Moments<T>> {
    let n2 = psi.norm_squared()?;
    if (n2 - T::one()).abs() > normalized_tol::<T>() {
        return Err(Error::parameter(
            "psi",
            format!("field must be normalized, norm^2 = {n2}"),
        ));
    }
    Ok(raw_moments(psi.grid(), psi.values(), hbar))
}

pub(crate) fn raw_moments<T: Real>(grid: &Grid<T>, values: &[Complex<T>], hbar: T) -> Moments<T> {
    let n = values.len();
    let dz = grid.spacing();
    let half = T::lit(0.5);
    let weights = D1.map(T::lit);
    let zero = Complex::new(T::zero(), T::zero());
    let at = |j: isize| -> Complex<T> {
        if j < 0 || j as usize >= n {
            zero
        } else {
            values[j as usize]
        }
    };

    let (mut s0, mut s1, mut s2) = (T::zero(), T::zero(), T::zero());
    let mut overlap = zero;
    let mut grad_sq = T::zero();
    for (k, psi) in values.iter().enumerate() {
        let w = if k == 0 || k + 1 == n { half } else { T::one() };
        let rho = psi.norm_sqr() * w;
        let z = grid.position(k);
        s0 = s0 + rho;
        s1 = s1 + rho * z;
        s2 = s2 + rho * z * z;

        let j = k as isize;
        let mut d = zero;
        for (o, c) in weights.iter().enumerate() {
            let o = o as isize + 1;
            d = d + (at(j + o) - at(j - o)) * *c;
        }
        let d = d / dz;
        overlap = overlap + psi.conj() * d * w;
        grad_sq = grad_sq + d.norm_sqr() * w;
    }
    let mean_z = s1 / s0;
    let var_z = (s2 / s0 - mean_z * mean_z).max(T::zero());
    let mean_p = hbar * overlap.im / s0;
    let var_p = (hbar * hbar * grad_sq / s0 - mean_p * mean_p).max(T::zero());
    Moments {
        mean_z,
        mean_p,
        sigma_z: var_z.sqrt(),
        sigma_p: var_p.sqrt(),
    }
}

/// Width of a free minimum-uncertainty Gaussian, `sigma0 sqrt(1 + (hbar t / 2 m sigma0^2)^2)`.
pub fn free_gaussian_width<T: Real>(sigma0: T, mass: T, hbar: T, t: T) -> T {
    let r = hbar * t / (T::lit(2.0) * mass * sigma0 * sigma0);
    sigma0 * (T::one() + r * r).sqrt()
}
