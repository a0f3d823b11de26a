//! Wave-packet demos on the reference setup: m = g = hbar = 1, a Gaussian of
//! width 0.5 at z = 8 on [-20, 30].

use freefall::dynamics::{
    frame_equivalence_test, free_gaussian_width, heisenberg_checks, propagate_with_options,
    PropagationOptions,
};
use freefall::{ComplexField, Error, Grid, PhysicalSystem, Result};

use crate::report::{col, Aggregate, Report, Style};
use crate::units::UnitSystem;

pub const Z_MIN: f64 = -20.0;
pub const Z_MAX: f64 = 30.0;
pub const CENTER: f64 = 8.0;
pub const SIGMA0: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Demo {
    /// Free evolution carried into the lab frame vs direct evolution in the field.
    FrameEquivalence,
    /// Moments of a packet falling in the field, against the classical orbit.
    BouncerMoments,
    /// Width of a free packet against the analytic spreading law.
    FreeDispersion,
}

impl Demo {
    fn name(self) -> &'static str {
        match self {
            Demo::FrameEquivalence => "frame-equivalence",
            Demo::BouncerMoments => "bouncer-moments",
            Demo::FreeDispersion => "free-dispersion",
        }
    }
}

pub struct EvolveParams {
    pub demo: Demo,
    pub dt: f64,
    pub points: usize,
    pub duration: f64,
    pub sample_every: usize,
}

pub fn evolve(p: &EvolveParams) -> Result<Report> {
    let steps = (p.duration / p.dt).round();
    if !(steps >= 1.0) || steps > u32::MAX as f64 {
        return Err(Error::Parameter {
            name: "duration",
            reason: format!("gives {steps} steps of dt = {}", p.dt),
        });
    }
    let grid = Grid::new(Z_MIN, Z_MAX, p.points, p.dt, steps as usize)?;
    let psi0 = ComplexField::gaussian(grid, CENTER, SIGMA0, 0.0)?;
    let mut r = match p.demo {
        Demo::FrameEquivalence => frame_equivalence(&psi0, &grid)?,
        Demo::BouncerMoments => bouncer_moments(&psi0, &grid, p.sample_every)?,
        Demo::FreeDispersion => free_dispersion(&psi0, &grid, p.sample_every)?,
    };
    let mut params = vec![
        ("demo", p.demo.name().into()),
        ("z_min", Z_MIN.into()),
        ("z_max", Z_MAX.into()),
        ("points", p.points.into()),
        ("dt", p.dt.into()),
        ("steps", (steps as usize).into()),
        ("center", CENTER.into()),
        ("sigma0", SIGMA0.into()),
    ];
    if p.demo != Demo::FrameEquivalence {
        params.push(("sample_every", p.sample_every.into()));
    }
    r.parameters.splice(0..0, params);
    r.preview = Some(21);
    Ok(r)
}

fn frame_equivalence(psi0: &ComplexField<f64>, grid: &Grid<f64>) -> Result<Report> {
    let system = PhysicalSystem::new(1.0, 1.0, 1.0, 0.0, 0.0, 1.0)?.in_free_fall();
    let cmp = frame_equivalence_test(psi0, &system, grid)?;
    let mut r = Report::new(
        "evolve",
        UnitSystem::Natural,
        vec![
            col("z", "1", Style::Fixed(6)),
            col("direct_re", "1", Style::Sci(6)),
            col("direct_im", "1", Style::Sci(6)),
            col("transformed_re", "1", Style::Sci(6)),
            col("transformed_im", "1", Style::Sci(6)),
            col("mismatch", "1", Style::Sci(3)),
        ],
    );
    for (k, (d, t)) in cmp
        .direct
        .final_field
        .values()
        .iter()
        .zip(cmp.transformed.values())
        .enumerate()
    {
        let aligned = t * cmp.phase_factor;
        let mismatch = (d - aligned).norm();
        r.push(vec![
            grid.position(k).into(),
            d.re.into(),
            d.im.into(),
            aligned.re.into(),
            aligned.im.into(),
            mismatch.into(),
        ]);
    }
    let max = r.summarize("max_mismatch", "mismatch", Aggregate::Max);
    debug_assert_eq!(max, cmp.max_mismatch);
    r.param("a", system.a());
    r.param("t_final", grid.duration());
    r.diagnostic("phase_factor_re", cmp.phase_factor.re);
    r.diagnostic("phase_factor_im", cmp.phase_factor.im);
    r.diagnostic("norm_drift_direct", cmp.direct.norm_drift);
    r.diagnostic("norm_drift_free", cmp.free_norm_drift);
    r.diagnostic("within_1e-6", cmp.max_mismatch <= 1e-6);
    Ok(r)
}

fn bouncer_moments(psi0: &ComplexField<f64>, grid: &Grid<f64>, every: usize) -> Result<Report> {
    let system = PhysicalSystem::new(1.0, 1.0, 1.0, 0.0, 0.0, 1.0)?;
    let options = PropagationOptions {
        sample_every: Some(every),
    };
    let report = propagate_with_options(psi0, &system, system.force(), grid, options)?;
    let first = report.moment_series[0];
    let (m, g, hbar, force) = (system.m_i(), system.g(), system.hbar(), system.force());
    let mut r = Report::new(
        "evolve",
        UnitSystem::Natural,
        vec![
            col("t", "1", Style::Fixed(4)),
            col("mean_z", "1", Style::Fixed(9)),
            col("mean_p", "1", Style::Fixed(9)),
            col("sigma_z", "1", Style::Fixed(9)),
            col("sigma_p", "1", Style::Fixed(9)),
            col("z_error", "1", Style::Sci(2)),
            col("p_error", "1", Style::Sci(2)),
            col("uncertainty_margin", "1", Style::Sci(3)),
        ],
    );
    for s in &report.moment_series {
        let z_classical = first.mean_z + first.mean_p * s.t / m - 0.5 * g * s.t * s.t;
        let p_classical = first.mean_p - force * s.t;
        r.push(vec![
            s.t.into(),
            s.mean_z.into(),
            s.mean_p.into(),
            s.sigma_z.into(),
            s.sigma_p.into(),
            (s.mean_z - z_classical).abs().into(),
            (s.mean_p - p_classical).abs().into(),
            (s.sigma_z * s.sigma_p - 0.5 * hbar).into(),
        ]);
    }
    r.summarize("max_z_error", "z_error", Aggregate::Max);
    r.summarize("max_p_error", "p_error", Aggregate::Max);
    r.summarize("sigma_p_range", "sigma_p", Aggregate::Range);
    r.summarize(
        "min_uncertainty_margin",
        "uncertainty_margin",
        Aggregate::Min,
    );

    let h = heisenberg_checks(&report, &system);
    r.param("g", g);
    r.diagnostic("norm_drift", report.norm_drift);
    r.diagnostic("fitted_p_slope", h.momentum_slope);
    r.diagnostic("fitted_z_curvature", h.position_curvature);
    r.diagnostic("width_product_margin", h.width_product_margin);
    r.diagnostic("heisenberg_ok", h.all_ok());
    Ok(r)
}

fn free_dispersion(psi0: &ComplexField<f64>, grid: &Grid<f64>, every: usize) -> Result<Report> {
    let system = PhysicalSystem::new(1.0, 1.0, 0.0, 0.0, 0.0, 1.0)?;
    let options = PropagationOptions {
        sample_every: Some(every),
    };
    let report = propagate_with_options(psi0, &system, 0.0, grid, options)?;
    let mut r = Report::new(
        "evolve",
        UnitSystem::Natural,
        vec![
            col("t", "1", Style::Fixed(4)),
            col("mean_z", "1", Style::Fixed(9)),
            col("sigma_z", "1", Style::Fixed(9)),
            col("sigma_analytic", "1", Style::Fixed(9)),
            col("relative_error", "1", Style::Sci(2)),
        ],
    );
    for s in &report.moment_series {
        let exact = free_gaussian_width(SIGMA0, system.m_i(), system.hbar(), s.t);
        r.push(vec![
            s.t.into(),
            s.mean_z.into(),
            s.sigma_z.into(),
            exact.into(),
            (s.sigma_z / exact - 1.0).abs().into(),
        ]);
    }
    r.summarize("max_relative_error", "relative_error", Aggregate::Max);
    r.summarize("final_sigma_z", "sigma_z", Aggregate::Last);
    r.diagnostic("norm_drift", report.norm_drift);
    Ok(r)
}
