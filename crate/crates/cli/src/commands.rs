use freefall::airy::{ai_negative_zero, airy, airy_ai_prime};
use freefall::bouncer::{alpha, energy_scale, level};
use freefall::gravishift::{
    cow_phase_shift, cow_phase_shift_via_transit_time, frequency_shift, fringe_count,
    redshift_ratio, InterferometerGeometry,
};
use freefall::{PhysicalSystem, Result};

use crate::report::{col, Aggregate, Report, Style};
use crate::units::{UnitSystem, ELECTRON_VOLT, NEUTRON_MASS, SPEED_OF_LIGHT, STANDARD_GRAVITY};

pub fn airy_eval(x: f64) -> Result<Report> {
    let v = airy(x)?;
    let mut r = Report::new(
        "airy",
        UnitSystem::Natural,
        vec![
            col("x", "1", Style::Plain),
            col("ai", "1", Style::Fixed(8)),
            col("ai_prime", "1", Style::Fixed(8)),
            col("bi", "1", Style::Fixed(8)),
            col("bi_prime", "1", Style::Fixed(8)),
        ],
    );
    r.param("eval", x);
    r.push(vec![
        x.into(),
        v.ai.into(),
        v.ai_prime.into(),
        v.bi.into(),
        v.bi_prime.into(),
    ]);
    r.diagnostic("wronskian", v.wronskian());
    Ok(r)
}

pub fn airy_zeros(count: usize) -> Result<Report> {
    let mut r = Report::new(
        "airy",
        UnitSystem::Natural,
        vec![
            col("n", "1", Style::Plain),
            col("e_tilde", "1", Style::Fixed(8)),
            col("ai_prime", "1", Style::Fixed(8)),
        ],
    );
    r.param("zeros", count);
    for n in 1..=count {
        let zero: f64 = ai_negative_zero(n)?;
        r.push(vec![n.into(), (-zero).into(), airy_ai_prime(zero).into()]);
    }
    Ok(r)
}

pub struct BouncerParams {
    pub levels: usize,
    pub units: UnitSystem,
    pub mass: Option<f64>,
    pub g: Option<f64>,
}

pub fn bouncer(p: &BouncerParams) -> Result<Report> {
    let (mass, g) = match p.units {
        UnitSystem::Natural => (p.mass.unwrap_or(0.5), p.g.unwrap_or(2.0)),
        UnitSystem::Si => (
            p.mass.unwrap_or(NEUTRON_MASS),
            p.g.unwrap_or(STANDARD_GRAVITY),
        ),
    };
    let hbar = p.units.hbar();
    let system = PhysicalSystem::new(mass, mass, g, 0.0, 0.0, hbar)?;
    let si = p.units == UnitSystem::Si;

    let mut columns = vec![
        col("n", "1", Style::Plain),
        col("e_tilde", "1", Style::Fixed(4)),
        col(
            "energy",
            p.units.label("J"),
            if si { Style::Sci(6) } else { Style::Fixed(6) },
        ),
    ];
    if si {
        columns.push(col("energy_pev", "peV", Style::Fixed(4)));
    }
    columns.push(col("p_outside", "1", Style::Percent(2)));

    let mut r = Report::new("bouncer", p.units, columns);
    r.param("levels", p.levels);
    r.param("mass", mass);
    r.param("g", g);
    r.param("hbar", hbar);
    for n in 1..=p.levels {
        let l = level(&system, n)?;
        let mut row = vec![n.into(), l.e_tilde.into(), l.energy.into()];
        if si {
            row.push((l.energy / ELECTRON_VOLT * 1e12).into());
        }
        row.push(l.p_outside.into());
        r.push(row);
    }
    r.diagnostic("alpha", alpha(&system)?);
    r.diagnostic("energy_scale", energy_scale(&system)?);
    Ok(r)
}

pub struct CowParams {
    pub units: UnitSystem,
    pub lambda: f64,
    pub height: f64,
    pub length: f64,
    pub a: Option<f64>,
    pub mass: Option<f64>,
    pub via_transit_time: bool,
}

pub fn cow(p: &CowParams) -> Result<Report> {
    let (mass, a) = match p.units {
        UnitSystem::Natural => (p.mass.unwrap_or(1.0), p.a.unwrap_or(1.0)),
        UnitSystem::Si => (
            p.mass.unwrap_or(NEUTRON_MASS),
            p.a.unwrap_or(STANDARD_GRAVITY),
        ),
    };
    let hbar = p.units.hbar();
    let system = PhysicalSystem::new(mass, mass, a, 0.0, a, hbar)?;
    let geom = InterferometerGeometry::new(p.lambda, p.height, p.length)?;

    let mut r = Report::new(
        "cow",
        p.units,
        vec![
            col("route", "", Style::Plain),
            col("phase", p.units.label("rad"), Style::Fixed(8)),
            col("fringes", "1", Style::Fixed(8)),
        ],
    );
    r.param("lambda", p.lambda);
    r.param("height", p.height);
    r.param("length", p.length);
    r.param("a", a);
    r.param("mass", mass);
    r.param("hbar", hbar);
    let direct = cow_phase_shift(&geom, &system);
    r.push(vec![
        "area".into(),
        direct.into(),
        fringe_count(direct).into(),
    ]);
    if p.via_transit_time {
        let transit = cow_phase_shift_via_transit_time(&geom, &system);
        r.push(vec![
            "transit-time".into(),
            transit.into(),
            fringe_count(transit).into(),
        ]);
        r.summarize("route_disagreement", "phase", Aggregate::RelativeRange);
    }
    r.diagnostic("area", geom.area);
    Ok(r)
}

pub struct RedshiftParams {
    pub units: UnitSystem,
    pub z: f64,
    pub a: Option<f64>,
    pub mass: Option<f64>,
    pub c: Option<f64>,
}

pub fn redshift(p: &RedshiftParams) -> Result<Report> {
    let (mass, a, c) = match p.units {
        UnitSystem::Natural => (
            p.mass.unwrap_or(1.0),
            p.a.unwrap_or(1.0),
            p.c.unwrap_or(1.0),
        ),
        UnitSystem::Si => (
            p.mass.unwrap_or(NEUTRON_MASS),
            p.a.unwrap_or(STANDARD_GRAVITY),
            p.c.unwrap_or(SPEED_OF_LIGHT),
        ),
    };
    let hbar = p.units.hbar();
    let system = PhysicalSystem::new(mass, mass, a, 0.0, a, hbar)?;
    let mut r = Report::new(
        "redshift",
        p.units,
        vec![
            col("z", p.units.label("m"), Style::Plain),
            col("delta_omega", p.units.label("rad/s"), Style::Sci(10)),
            col("ratio", "1", Style::Sci(10)),
        ],
    );
    r.param("z", p.z);
    r.param("a", a);
    r.param("mass", mass);
    r.param("c", c);
    r.param("hbar", hbar);
    r.push(vec![
        p.z.into(),
        frequency_shift(&system, p.z).into(),
        redshift_ratio(a, p.z, c).into(),
    ]);
    Ok(r)
}
