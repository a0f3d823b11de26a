use num_complex::Complex;

use super::FrameTransform;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// Free-frame plane wave with momentum `p'` and `hbar omega' = p'^2 / 2 m_i`.
///
/// Plane waves are not normalizable and are only ever evaluated pointwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveState<T> {
    pub p_prime: T,
    pub omega_prime: T,
}

impl<T: Real> PlaneWaveState<T> {
    pub fn new(p_prime: T, m_i: T, hbar: T) -> Result<Self> {
        if !(m_i > T::zero()) || !(hbar > T::zero()) {
            return Err(Error::parameter("m_i", "mass and hbar must be positive"));
        }
        if !p_prime.is_finite() {
            return Err(Error::parameter(
                "p_prime",
                format!("must be finite, got {p_prime}"),
            ));
        }
        Ok(Self {
            p_prime,
            omega_prime: p_prime * p_prime / (T::lit(2.0) * m_i * hbar),
        })
    }

    pub fn wavenumber(&self, hbar: T) -> T {
        self.p_prime / hbar
    }
}

/// `exp(i (k' z' - omega' t'))`, unit amplitude.
pub fn free_plane_wave<T: Real>(
    pw: &PlaneWaveState<T>,
    hbar: T,
    z_prime: T,
    t_prime: T,
) -> Complex<T> {
    Complex::from_polar(
        T::one(),
        pw.wavenumber(hbar) * z_prime - pw.omega_prime * t_prime,
    )
}

/// The free plane wave seen from the stationary frame, written out in full:
/// `(k' - m v/hbar) z - (omega' - v [k' - m v / 2 hbar]) t - (m a t / hbar) z
///  + (a t^2 / 2)(k' - m v / hbar - m a t / 3 hbar)`.
pub fn stationary_plane_wave<T: Real>(
    pw: &PlaneWaveState<T>,
    ft: &FrameTransform<T>,
    z: T,
    t: T,
) -> Complex<T> {
    let half = T::lit(0.5);
    let k = pw.wavenumber(ft.hbar);
    let mv = ft.m_i * ft.v / ft.hbar;
    let mat = ft.m_i * ft.a * t / ft.hbar;
    let phase = (k - mv) * z - (pw.omega_prime - ft.v * (k - half * mv)) * t - mat * z
        + half * ft.a * t * t * (k - mv - mat / T::lit(3.0));
    Complex::from_polar(T::one(), phase)
}

/// Momentum seen by the stationary observer, `p' - m_i (v + a t)`.
pub fn momentum_eigenvalue<T: Real>(pw: &PlaneWaveState<T>, ft: &FrameTransform<T>, t: T) -> T {
    pw.p_prime - ft.m_i * (ft.v + ft.a * t)
}

/// Energy seen by the stationary observer, `p(t)^2 / 2 m_i + m_i a z`.
pub fn energy_eigenvalue<T: Real>(pw: &PlaneWaveState<T>, ft: &FrameTransform<T>, z: T, t: T) -> T {
    let p = momentum_eigenvalue(pw, ft, t);
    p * p / (T::lit(2.0) * ft.m_i) + ft.m_i * ft.a * z
}

/// Frequency difference `m_i a z / hbar` between detectors a height `z` apart.
pub fn frequency_shift<T: Real>(system: &PhysicalSystem<T>, z: T) -> T {
    system.m_i() * system.a() * z / system.hbar()
}

/// Shift of a quantum of frequency `omega'` treated as a particle of mass
/// `hbar omega' / c^2`. This borrows a relativistic relation and is kept
/// only as the route to the classic redshift formula.
pub fn photon_frequency_shift<T: Real>(omega_prime: T, a: T, z: T, hbar: T, c: T) -> T {
    let m_eff = hbar * omega_prime / (c * c);
    m_eff * a * z / hbar
}

/// `a z / c^2`.
pub fn redshift_ratio<T: Real>(a: T, z: T, c: T) -> T {
    a * z / (c * c)
}

/// Wavelength `2 pi hbar / p(t)` seen by the stationary observer.
pub fn wavelength_at<T: Real>(lambda_prime: T, ft: &FrameTransform<T>, t: T) -> T {
    let two_pi_hbar = T::lit(2.0) * T::PI() * ft.hbar;
    two_pi_hbar / (two_pi_hbar / lambda_prime - ft.m_i * (ft.v + ft.a * t))
}

/// Relative dilation `(lambda(t) - lambda') / lambda(t) = m_i (v + a t) lambda' / (2 pi hbar)`.
pub fn wavelength_dilation<T: Real>(lambda_prime: T, ft: &FrameTransform<T>, t: T) -> T {
    ft.m_i * (ft.v + ft.a * t) * lambda_prime / (T::lit(2.0) * T::PI() * ft.hbar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (PlaneWaveState<f64>, FrameTransform<f64>) {
        let ft = FrameTransform::<f64>::new(0.35, 1.2, 1.7, 0.9).unwrap();
        (
            PlaneWaveState::<f64>::new(2.1, ft.m_i, ft.hbar).unwrap(),
            ft,
        )
    }

    #[test]
    fn dispersion_relation() {
        let (pw, ft) = setup();
        let lhs = ft.hbar * pw.omega_prime;
        let rhs = pw.p_prime * pw.p_prime / (2.0 * ft.m_i);
        assert!((lhs - rhs).abs() <= 1e-12 * rhs);
    }

    #[test]
    fn expanded_form_equals_phase_map() {
        let (pw, ft) = setup();
        for (z, t) in [(0.0, 0.0), (1.5, 0.3), (-3.0, 2.2), (7.1, 4.0)] {
            let direct =
                ft.transform_pointwise(|zp, tp| free_plane_wave(&pw, ft.hbar, zp, tp), z, t);
            let printed = stationary_plane_wave(&pw, &ft, z, t);
            assert!((direct - printed).norm() < 1e-12, "({z}, {t})");
        }
    }

    #[test]
    fn eigenvalue_arithmetic() {
        let pw = PlaneWaveState::<f64>::new(1.0, 1.0, 1.0).unwrap();
        let ft = FrameTransform::<f64>::new(0.2, 1.0, 1.0, 1.0).unwrap();
        assert!((momentum_eigenvalue(&pw, &ft, 0.3) - 0.5).abs() < 1e-15);
        let rest = FrameTransform::<f64>::new(0.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(momentum_eigenvalue(&pw, &rest, 0.0), 1.0);
        assert_eq!(energy_eigenvalue(&pw, &rest, 0.0, 0.0), pw.omega_prime);
        for z in [0.5, -2.0, 13.0] {
            let d = energy_eigenvalue(&pw, &ft, z, 0.8) - energy_eigenvalue(&pw, &ft, 0.0, 0.8);
            assert!((d - ft.m_i * ft.a * z).abs() < 1e-12);
        }
    }

    fn log_derivative(f: impl Fn(f64) -> Complex<f64>, x: f64, h: f64) -> Complex<f64> {
        // fourth-order central difference of f, divided by f
        let d = (f(x - 2.0 * h) - f(x - h) * 8.0 + f(x + h) * 8.0 - f(x + 2.0 * h)) / (12.0 * h);
        d / f(x)
    }

    #[test]
    fn momentum_and_energy_from_derivatives() {
        let (pw, ft) = setup();
        let i = Complex::new(0.0, 1.0);
        for (z, t) in [(0.3, 0.1), (-2.5, 1.7), (4.0, 0.6), (1.1, 3.3), (-0.7, 2.4)] {
            let p =
                -i * ft.hbar * log_derivative(|zz| stationary_plane_wave(&pw, &ft, zz, t), z, 1e-3);
            assert!((p.re - momentum_eigenvalue(&pw, &ft, t)).abs() < 1e-8 && p.im.abs() < 1e-8);
            let e =
                i * ft.hbar * log_derivative(|tt| stationary_plane_wave(&pw, &ft, z, tt), t, 1e-3);
            assert!((e.re - energy_eigenvalue(&pw, &ft, z, t)).abs() < 1e-8 && e.im.abs() < 1e-8);
        }
    }

    #[test]
    fn frequency_shift_is_time_independent() {
        let (pw, ft) = setup();
        let system = PhysicalSystem::<f64>::new(ft.m_i, ft.m_i, ft.a, ft.v, ft.a, ft.hbar).unwrap();
        let z = 2.75;
        let expected = frequency_shift(&system, z);
        for t in [0.0, 1.7] {
            let d =
                (energy_eigenvalue(&pw, &ft, z, t) - energy_eigenvalue(&pw, &ft, 0.0, t)) / ft.hbar;
            assert!((d - expected).abs() <= 1e-12 * expected.abs());
        }
        assert_eq!(frequency_shift(&system, 0.0), 0.0);
    }

    #[test]
    fn photon_route_gives_redshift_ratio() {
        let (omega, a, z, hbar, c): (f64, f64, f64, f64, f64) =
            (3.3e15, 9.80665, 22.5, 1.054_571_817e-34, 299_792_458.0);
        let ratio = photon_frequency_shift(omega, a, z, hbar, c) / omega;
        assert!((ratio - redshift_ratio(a, z, c)).abs() <= 1e-14 * ratio);
        // scripts/si_oracle.py: g * 1 m / c^2
        assert!((redshift_ratio(9.80665, 1.0, c) / 1.091_136_967_219_822e-16 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn neutron_frequency_shift_matches_oracle_script() {
        let m = 1.674_927_498_04e-27;
        let s = PhysicalSystem::<f64>::new(m, m, 9.80665, 0.0, 9.80665, 1.054_571_817e-34).unwrap();
        assert!((frequency_shift(&s, 1.0) / 1.557_544_728_947_935e8 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn wavelength_relations() {
        let (_, ft) = setup();
        let lambda = 0.37;
        for t in [0.0, 0.5, 1.0] {
            let lt = wavelength_at(lambda, &ft, t);
            let from_lengths = (lt - lambda) / lt;
            assert!((from_lengths - wavelength_dilation(lambda, &ft, t)).abs() < 1e-12);
        }
        let rest = FrameTransform::<f64>::new(0.0, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(wavelength_dilation(lambda, &rest, 3.0), 0.0);
    }
}
