#![allow(dead_code)]

use freefall::dynamics::{frame_equivalence_test, FrameComparison};
use freefall::{ComplexField, Grid, PhysicalSystem};
use num_complex::Complex;

/// Reference run: m = g = hbar = 1, sigma0 = 0.5 at z = 8 on [-20, 30].
pub const SIGMA0: f64 = 0.5;
pub const CENTER: f64 = 8.0;
pub const Z_MIN: f64 = -20.0;
pub const Z_MAX: f64 = 30.0;
pub const POINTS: usize = 4096;

pub fn reference_grid(dt: f64, duration: f64) -> Grid<f64> {
    let steps = (duration / dt).round() as usize;
    Grid::new(Z_MIN, Z_MAX, POINTS, dt, steps).unwrap()
}

pub fn earth_like() -> PhysicalSystem<f64> {
    PhysicalSystem::new(1.0, 1.0, 1.0, 0.0, 0.0, 1.0).unwrap()
}

pub fn reference_packet(grid: Grid<f64>) -> ComplexField<f64> {
    ComplexField::gaussian(grid, CENTER, SIGMA0, 0.0).unwrap()
}

pub fn reference_comparison(dt: f64, acceleration_factor: f64) -> FrameComparison<f64> {
    let grid = reference_grid(dt, 1.0);
    let base = earth_like();
    let system = base
        .with_frame(0.0, acceleration_factor * base.free_fall_acceleration())
        .unwrap();
    frame_equivalence_test(&reference_packet(grid), &system, &grid).unwrap()
}

/// Closed-form free Gaussian: the spreading packet at rest, boosted to
/// momentum `hbar k0`.
pub fn free_gaussian(
    z0: f64,
    sigma0: f64,
    k0: f64,
    mass: f64,
    hbar: f64,
) -> impl Fn(f64, f64) -> Complex<f64> {
    move |z, t| {
        let speed = hbar * k0 / mass;
        let omega = hbar * k0 * k0 / (2.0 * mass);
        let s = Complex::new(1.0, hbar * t / (2.0 * mass * sigma0 * sigma0));
        let x = z - speed * t - z0;
        let pref = (2.0 * std::f64::consts::PI * sigma0 * sigma0).powf(-0.25);
        let envelope = (-(x * x) / (s * 4.0 * sigma0 * sigma0)).exp() / s.sqrt() * pref;
        envelope * Complex::from_polar(1.0, k0 * z - omega * t)
    }
}
