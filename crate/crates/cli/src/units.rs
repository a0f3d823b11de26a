//! CODATA 2018 values (SI). Only the SI modes use these.

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Neutron mass, kg.
pub const NEUTRON_MASS: f64 = 1.674_927_498_04e-27;
/// Standard gravity, m s^-2.
pub const STANDARD_GRAVITY: f64 = 9.806_65;
/// Speed of light, m s^-1.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Electron volt, J.
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    Natural,
    Si,
}

impl UnitSystem {
    pub fn from_flag(si: bool) -> Self {
        if si {
            UnitSystem::Si
        } else {
            UnitSystem::Natural
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UnitSystem::Natural => "natural",
            UnitSystem::Si => "si",
        }
    }

    pub fn hbar(self) -> f64 {
        match self {
            UnitSystem::Natural => 1.0,
            UnitSystem::Si => HBAR,
        }
    }

    /// The unit label, or `"1"` in natural units.
    pub fn label(self, si: &'static str) -> &'static str {
        match self {
            UnitSystem::Natural => "1",
            UnitSystem::Si => si,
        }
    }
}
