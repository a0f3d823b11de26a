use super::propagator::PropagationReport;
use crate::scalar::Real;
use crate::system::PhysicalSystem;

/// Relative tolerance on the fitted `<p>` slope.
pub const MOMENTUM_SLOPE_TOL: f64 = 1e-6;
/// Relative tolerance on the fitted `<z>` curvature.
pub const POSITION_CURVATURE_TOL: f64 = 1e-5;
/// Absolute tolerance on the drift of `Delta p`.
pub const SPREAD_DRIFT_TOL: f64 = 1e-8;
/// Slack allowed below the uncertainty bounds.
pub const UNCERTAINTY_SLACK: f64 = 1e-9;

/// Per-check residuals for the moment series of a uniform-field run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeisenbergSummary<T> {
    /// Least-squares slope of `<p>(t)`; expected `-m_g g`.
    pub momentum_slope: T,
    pub momentum_slope_error: T,
    /// Quadratic coefficient of the least-squares parabola through `<z>(t)`;
    /// expected `-m_g g / 2 m_i`.
    pub position_curvature: T,
    pub position_curvature_error: T,
    /// `max_t |Delta p(t) - Delta p(0)|`.
    pub spread_drift: T,
    /// `min_t [Delta z(t) Delta z(0) - hbar t / 2 m_i]`.
    pub width_product_margin: T,
    /// `min_t [Delta z(t) Delta p(t) - hbar / 2]`.
    pub uncertainty_margin: T,
}

impl<T: Real> HeisenbergSummary<T> {
    pub fn momentum_slope_ok(&self) -> bool {
        self.momentum_slope_error <= T::lit(MOMENTUM_SLOPE_TOL)
    }

    pub fn position_curvature_ok(&self) -> bool {
        self.position_curvature_error <= T::lit(POSITION_CURVATURE_TOL)
    }

    pub fn spread_constant_ok(&self) -> bool {
        self.spread_drift <= T::lit(SPREAD_DRIFT_TOL)
    }

    pub fn width_product_ok(&self) -> bool {
        self.width_product_margin >= -T::lit(UNCERTAINTY_SLACK)
    }

    pub fn uncertainty_ok(&self) -> bool {
        self.uncertainty_margin >= -T::lit(UNCERTAINTY_SLACK)
    }

    pub fn all_ok(&self) -> bool {
        self.momentum_slope_ok()
            && self.position_curvature_ok()
            && self.spread_constant_ok()
            && self.width_product_ok()
            && self.uncertainty_ok()
    }
}

/// Relative error, falling back to absolute when the expected value is below one.
fn scaled_error<T: Real>(got: T, expected: T) -> T {
    (got - expected).abs() / expected.abs().max(T::one())
}

/// Evaluates the Ehrenfest and uncertainty relations on a report's moment
/// series. Needs at least three samples.
pub fn heisenberg_checks<T: Real>(
    report: &PropagationReport<T>,
    system: &PhysicalSystem<T>,
) -> HeisenbergSummary<T> {
    let series = &report.moment_series;
    assert!(series.len() >= 3, "need at least three moment samples");
    let ts: Vec<T> = series.iter().map(|s| s.t).collect();
    let ps: Vec<T> = series.iter().map(|s| s.mean_p).collect();
    let zs: Vec<T> = series.iter().map(|s| s.mean_z).collect();

    let force = system.force();
    let [_, momentum_slope] = least_squares::<T, 2>(&ts, &ps);
    let [_, _, position_curvature] = least_squares::<T, 3>(&ts, &zs);
    let expected_curvature = -force / (T::lit(2.0) * system.m_i());

    let first = series[0];
    let half = T::lit(0.5);
    let hbar = system.hbar();
    let mut spread_drift = T::zero();
    let mut width_product_margin = T::infinity();
    let mut uncertainty_margin = T::infinity();
    for s in series {
        spread_drift = spread_drift.max((s.sigma_p - first.sigma_p).abs());
        width_product_margin = width_product_margin
            .min(s.sigma_z * first.sigma_z - hbar * s.t / (T::lit(2.0) * system.m_i()));
        uncertainty_margin = uncertainty_margin.min(s.sigma_z * s.sigma_p - half * hbar);
    }

    HeisenbergSummary {
        momentum_slope,
        momentum_slope_error: scaled_error(momentum_slope, -force),
        position_curvature,
        position_curvature_error: scaled_error(position_curvature, expected_curvature),
        spread_drift,
        width_product_margin,
        uncertainty_margin,
    }
}

/// Polynomial least squares of degree `N - 1` via normal equations in the
/// centred and scaled abscissa; returns coefficients in powers of the
/// original `x`. `N` is 2 or 3.
fn least_squares<T: Real, const N: usize>(x: &[T], y: &[T]) -> [T; N] {
    assert!(N == 2 || N == 3);
    let count = T::from_count(x.len());
    let centre = x.iter().fold(T::zero(), |s, &v| s + v) / count;
    let span = x
        .iter()
        .fold(T::zero(), |m, &v| m.max((v - centre).abs()))
        .max(T::min_positive_value());

    // normal matrix and right-hand side in u = (x - centre) / span
    let mut a = [[T::zero(); 4]; 3];
    for (&xi, &yi) in x.iter().zip(y) {
        let u = (xi - centre) / span;
        let mut powers = [T::one(); 5];
        for k in 1..5 {
            powers[k] = powers[k - 1] * u;
        }
        for r in 0..N {
            for c in 0..N {
                a[r][c] = a[r][c] + powers[r + c];
            }
            a[r][3] = a[r][3] + powers[r] * yi;
        }
    }
    for col in 0..N {
        let piv = (col..N)
            .max_by(|&p, &q| a[p][col].abs().partial_cmp(&a[q][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        for row in 0..N {
            if row != col {
                let f = a[row][col] / a[col][col];
                let pivot = a[col];
                for (x, p) in a[row].iter_mut().zip(pivot) {
                    *x = *x - f * p;
                }
            }
        }
    }
    let mut b = [T::zero(); 3];
    for r in 0..N {
        b[r] = a[r][3] / a[r][r];
    }

    // back to powers of x: sum_k b_k ((x - c)/s)^k
    let (c, s) = (centre, span);
    let mut out = [T::zero(); N];
    if N == 2 {
        out[1] = b[1] / s;
        out[0] = b[0] - b[1] * c / s;
    } else {
        let s2 = s * s;
        out[2] = b[2] / s2;
        out[1] = b[1] / s - T::lit(2.0) * b[2] * c / s2;
        out[0] = b[0] - b[1] * c / s + b[2] * c * c / s2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fits_recover_polynomials() {
        let xs: Vec<f64> = (0..101).map(|k| k as f64 * 0.01).collect();
        let line: Vec<f64> = xs.iter().map(|x| 3.0 - 2.5 * x).collect();
        let [c0, c1] = least_squares::<f64, 2>(&xs, &line);
        assert!((c0 - 3.0).abs() < 1e-12 && (c1 + 2.5).abs() < 1e-12);
        let par: Vec<f64> = xs.iter().map(|x| 8.0 + 0.3 * x - 0.5 * x * x).collect();
        let [d0, d1, d2] = least_squares::<f64, 3>(&xs, &par);
        assert!((d0 - 8.0).abs() < 1e-11 && (d1 - 0.3).abs() < 1e-11 && (d2 + 0.5).abs() < 1e-11);
    }
}
