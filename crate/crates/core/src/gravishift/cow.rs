use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// Two-path interferometer: beam wavelength, vertical separation of the
/// paths and horizontal path length. The enclosed area is `height * length`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferometerGeometry<T> {
    pub wavelength: T,
    pub height: T,
    pub horizontal_length: T,
    pub area: T,
}

impl<T: Real> InterferometerGeometry<T> {
    pub fn new(wavelength: T, height: T, horizontal_length: T) -> Result<Self> {
        for (name, value) in [
            ("wavelength", wavelength),
            ("height", height),
            ("horizontal_length", horizontal_length),
        ] {
            if !(value > T::zero()) || !value.is_finite() {
                return Err(Error::parameter(
                    name,
                    format!("must be positive and finite, got {value}"),
                ));
            }
        }
        Ok(Self {
            wavelength,
            height,
            horizontal_length,
            area: height * horizontal_length,
        })
    }
}

/// `m_i^2 a lambda A / (2 pi hbar^2)` in radians, with `a` taken from the system.
pub fn cow_phase_shift<T: Real>(geom: &InterferometerGeometry<T>, system: &PhysicalSystem<T>) -> T {
    let m = system.m_i();
    let hbar = system.hbar();
    m * m * system.a() * geom.wavelength * geom.area / (T::lit(2.0) * T::PI() * hbar * hbar)
}

/// The same shift from `|m_i a t z / hbar|`, with transit time `t = d / v`
/// and beam speed `v = 2 pi hbar / (m_i lambda)`.
pub fn cow_phase_shift_via_transit_time<T: Real>(
    geom: &InterferometerGeometry<T>,
    system: &PhysicalSystem<T>,
) -> T {
    let m = system.m_i();
    let speed = T::lit(2.0) * T::PI() * system.hbar() / (m * geom.wavelength);
    let transit = geom.horizontal_length / speed;
    (m * system.a() * transit * geom.height / system.hbar()).abs()
}

/// Phase expressed in fringes, `phase / 2 pi`.
pub fn fringe_count<T: Real>(phase: T) -> T {
    phase / (T::lit(2.0) * T::PI())
}
