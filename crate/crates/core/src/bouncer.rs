//! Bound states of a particle resting on an impenetrable floor in a uniform
//! field, `V(z) = F z` for `z >= 0` and an infinite wall below.
//!
//! Lengths are measured in units of `1/alpha` and energies in units of
//! `(hbar^2 F^2 / 2 m_i)^(1/3)`, so that the eigenvalue problem becomes the
//! Airy equation with `chi(0) = 0`.

use num_complex::Complex;

use crate::airy::{ai_negative_zero, ai_squared_tail, airy_ai, MAX_ZERO_INDEX};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// One quantized level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BouncerLevel<T> {
    pub n: usize,
    /// Dimensionless energy, minus the n-th zero of Ai.
    pub e_tilde: T,
    pub energy: T,
    /// Normalization of `A_n Ai(z~ - e_tilde)` over `z~ >= 0`.
    pub norm_const: T,
    /// Probability of finding the particle above its classical turning point.
    pub p_outside: T,
}

fn check_system<T: Real>(system: &PhysicalSystem<T>) -> Result<()> {
    if !(system.m_g() > T::zero()) {
        return Err(Error::parameter(
            "m_g",
            format!("must be positive, got {}", system.m_g()),
        ));
    }
    if !(system.g() > T::zero()) {
        return Err(Error::parameter(
            "g",
            format!("must be positive, got {}", system.g()),
        ));
    }
    Ok(())
}

/// Inverse length scale `(2 m_i F / hbar^2)^(1/3)`, `F = m_g g`.
pub fn alpha<T: Real>(system: &PhysicalSystem<T>) -> Result<T> {
    check_system(system)?;
    let hbar = system.hbar();
    Ok((T::lit(2.0) * system.m_i() * system.force() / (hbar * hbar)).cbrt())
}

/// Energy unit `(hbar^2 F^2 / 2 m_i)^(1/3)`.
pub fn energy_scale<T: Real>(system: &PhysicalSystem<T>) -> Result<T> {
    check_system(system)?;
    let hf = system.hbar() * system.force();
    Ok((hf * hf / (T::lit(2.0) * system.m_i())).cbrt())
}

fn check_index(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ZERO_INDEX {
        return Err(Error::parameter(
            "n",
            format!("level index must be in 1..={MAX_ZERO_INDEX}, got {n}"),
        ));
    }
    Ok(())
}

/// Level `n` (1-based) of the given system.
pub fn level<T: Real>(system: &PhysicalSystem<T>, n: usize) -> Result<BouncerLevel<T>> {
    check_index(n)?;
    let scale = energy_scale(system)?;
    let e_tilde = -ai_negative_zero::<T>(n)?;
    let full = ai_squared_tail(-e_tilde);
    if !(full > T::zero()) {
        return Err(Error::numeric(format!(
            "non-positive normalization integral for level {n}"
        )));
    }
    let norm_sq = full.recip();
    Ok(BouncerLevel {
        n,
        e_tilde,
        energy: e_tilde * scale,
        norm_const: norm_sq.sqrt(),
        p_outside: ai_squared_tail(T::zero()) * norm_sq,
    })
}

/// `int_0^inf Ai^2 / int_{-E~_n}^inf Ai^2`. Independent of the field strength.
pub fn probability_outside<T: Real>(n: usize) -> Result<T> {
    check_index(n)?;
    let e_tilde = -ai_negative_zero::<T>(n)?;
    Ok(ai_squared_tail(T::zero()) * ai_squared_tail(-e_tilde).recip())
}

/// `A_n Ai(z~ - E~_n)` above the floor, exactly zero below it.
pub fn eigenfunction<T: Real>(level: &BouncerLevel<T>, z_tilde: T) -> T {
    if z_tilde < T::zero() {
        return T::zero();
    }
    level.norm_const * airy_ai(z_tilde - level.e_tilde)
}

/// `chi_n(z~) exp(-i E_n t / hbar)`.
pub fn stationary_state<T: Real>(
    level: &BouncerLevel<T>,
    z_tilde: T,
    t: T,
    system: &PhysicalSystem<T>,
) -> Complex<T> {
    Complex::from_polar(
        eigenfunction(level, z_tilde),
        -level.energy * t / system.hbar(),
    )
}
