#!/usr/bin/env python3
"""Independent constant-plugging oracle for the SI-unit spot values.

Plain float arithmetic with CODATA 2018 constants, no shared code with the
Rust crates. The printed numbers are frozen into the Rust test suites.
"""
import math

HBAR = 1.054571817e-34  # J s
M_N = 1.67492749804e-27  # kg
G = 9.80665  # m s^-2
C = 299792458.0  # m s^-1
EV = 1.602176634e-19  # J
E1_TILDE = 2.338107410459767  # first zero magnitude of Ai (A&S table 10.13)

force = M_N * G
alpha = (2.0 * M_N * force / HBAR**2) ** (1.0 / 3.0)
scale = (HBAR**2 * force**2 / (2.0 * M_N)) ** (1.0 / 3.0)
e1 = E1_TILDE * scale
print(f"alpha_neutron_per_m      = {alpha:.15e}")
print(f"energy_scale_J           = {scale:.15e}")
print(f"E1_J                     = {e1:.15e}")
print(f"E1_peV                   = {e1 / EV * 1e12:.15e}")

domega = M_N * G * 1.0 / HBAR
print(f"delta_omega_z1m_rad_s    = {domega:.15e}")
print(f"redshift_ratio_z1m       = {G * 1.0 / C**2:.15e}")

lam, area = 1.419e-10, 1.0e-3
cow = M_N**2 * G * lam * area / (2.0 * math.pi * HBAR**2)
print(f"cow_phase_rad            = {cow:.15e}")
print(f"cow_fringes              = {cow / (2.0 * math.pi):.15e}")
