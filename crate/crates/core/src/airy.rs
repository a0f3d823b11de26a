//! Airy functions `Ai`, `Bi`, their derivatives, and the negative zeros of `Ai`.
//!
//! Everything is evaluated from scratch in the working precision. The real
//! line is split into four regimes:
//!
//! | range            | Ai, Ai'                                   | Bi, Bi'                  |
//! |------------------|-------------------------------------------|--------------------------|
//! | `x < -7`         | trigonometric asymptotic expansion        | same                     |
//! | `-7 <= x <= 2`   | Maclaurin series                          | Maclaurin series         |
//! | `2 < x < 7`      | exponentially scaled Laplace integral     | Maclaurin series         |
//! | `x >= 7`         | exponential asymptotic expansion          | same                     |
//!
//! The Maclaurin series for `Ai` cancels catastrophically for positive `x`
//! (the two component series grow like `Bi`), while the truncated asymptotic
//! series only reach ~1e-8 near `|x| = 5`. The middle band therefore uses
//!
//! ```text
//! Ai(x) = exp(-zeta) / pi * int_0^inf exp(-sqrt(x) t^2) cos(t^3 / 3) dt,   zeta = 2/3 x^(3/2)
//! ```
//!
//! whose integrand is smooth and Gaussian-damped, so a fixed composite
//! Gauss-Legendre rule reaches full double precision.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// `Ai(0)`.
const AI_ZERO: f64 = 0.355_028_053_887_817_2;
/// `-Ai'(0)`.
const NEG_AI_PRIME_ZERO: f64 = 0.258_819_403_792_806_8;

const NEG_ASYMPTOTIC_BELOW: f64 = -7.0;
const LAPLACE_ABOVE: f64 = 2.0;
const POS_ASYMPTOTIC_FROM: f64 = 7.0;

const MIN_ASYMPTOTIC_TERMS: usize = 6;
const MAX_ASYMPTOTIC_TERMS: usize = 48;
const MAX_SERIES_TERMS: usize = 400;

/// Gaussian damping exponent at which the Laplace integral is truncated.
const LAPLACE_CUTOFF: f64 = 40.0;
const LAPLACE_PANELS: usize = 24;

/// Positive half of the 16-point Gauss-Legendre rule on [-1, 1].
const GAUSS_LEGENDRE_16: [(f64, f64); 8] = [
    (0.095_012_509_837_637_45, 0.189_450_610_455_068_6),
    (0.281_603_550_779_258_9, 0.182_603_415_044_923_6),
    (0.458_016_777_657_227_4, 0.169_156_519_395_002_6),
    (0.617_876_244_402_643_8, 0.149_595_988_816_576_8),
    (0.755_404_408_355_003, 0.124_628_971_255_534),
    (0.865_631_202_387_831_8, 0.095_158_511_682_492_59),
    (0.944_575_023_073_232_6, 0.062_253_523_938_647_71),
    (0.989_400_934_991_649_9, 0.027_152_459_411_754_04),
];

/// Largest zero index served by [`ai_negative_zero`].
pub const MAX_ZERO_INDEX: usize = 50;
const MAX_NEWTON_ITERATIONS: usize = 50;

/// `Ai`, `Bi` and their derivatives at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue<T> {
    pub x: T,
    pub ai: T,
    pub ai_prime: T,
    pub bi: T,
    pub bi_prime: T,
}

impl<T: Real> AiryValue<T> {
    /// `Ai Bi' - Ai' Bi`, identically `1 / pi`.
    pub fn wronskian(&self) -> T {
        self.ai * self.bi_prime - self.ai_prime * self.bi
    }
}

/// Evaluates all four functions. Fails only when `Bi` overflows.
pub fn airy<T: Real>(x: T) -> Result<AiryValue<T>> {
    let (ai, ai_prime) = ai_pair(x);
    let (bi, bi_prime) = bi_pair(x)?;
    Ok(AiryValue {
        x,
        ai,
        ai_prime,
        bi,
        bi_prime,
    })
}

/// `Ai(x)`; underflows gracefully to zero for large positive `x`.
pub fn airy_ai<T: Real>(x: T) -> T {
    ai_pair(x).0
}

/// `Ai'(x)`.
pub fn airy_ai_prime<T: Real>(x: T) -> T {
    ai_pair(x).1
}

/// `Bi(x)`; errors once the result overflows the scalar type.
pub fn airy_bi<T: Real>(x: T) -> Result<T> {
    bi_pair(x).map(|p| p.0)
}

/// `Bi'(x)`.
pub fn airy_bi_prime<T: Real>(x: T) -> Result<T> {
    bi_pair(x).map(|p| p.1)
}

/// `int_x^inf Ai(t)^2 dt = Ai'(x)^2 - x Ai(x)^2`.
pub fn ai_squared_tail<T: Real>(x: T) -> T {
    let (ai, aip) = ai_pair(x);
    (aip * aip - x * ai * ai).max(T::zero())
}

/// The `n`-th negative zero of `Ai` (`n = 1` is the one closest to the origin).
///
/// Newton iteration from the asymptotic seed `-[3 pi (4n - 1) / 8]^(2/3)`,
/// falling back to bisection on `[seed - 0.5, seed + 0.5]` if an iterate
/// leaves that bracket.
pub fn ai_negative_zero<T: Real>(n: usize) -> Result<T> {
    if n == 0 || n > MAX_ZERO_INDEX {
        return Err(Error::parameter(
            "n",
            format!("zero index must be in 1..={MAX_ZERO_INDEX}, got {n}"),
        ));
    }
    let t = T::lit(3.0) * T::PI() * T::from_count(4 * n - 1) / T::lit(8.0);
    let seed = -t.powf(T::lit(2.0 / 3.0));
    let half = T::lit(0.5);
    let (lo, hi) = (seed - half, seed + half);
    let tol = T::lit(8.0) * T::epsilon();
    // Below this step size the iteration is at the rounding floor of Ai itself.
    let floor = T::epsilon().powf(T::lit(2.0 / 3.0));

    let mut x = seed;
    let mut previous_step = T::infinity();
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let (ai, aip) = ai_pair(x);
        if ai == T::zero() {
            return Ok(x);
        }
        if aip == T::zero() {
            return bisect_zero(lo, hi);
        }
        let step = ai / aip;
        let next = x - step;
        if !(next >= lo && next <= hi) {
            return bisect_zero(lo, hi);
        }
        x = next;
        let scale = x.abs().max(T::one());
        let size = step.abs();
        if size <= tol * scale || (size <= floor * scale && size >= T::lit(0.5) * previous_step) {
            return Ok(x);
        }
        previous_step = size;
    }
    Err(Error::numeric(format!(
        "Newton iteration for Ai zero {n} did not converge in {MAX_NEWTON_ITERATIONS} steps"
    )))
}

fn bisect_zero<T: Real>(mut lo: T, mut hi: T) -> Result<T> {
    let mut f_lo = airy_ai(lo);
    if f_lo * airy_ai(hi) > T::zero() {
        return Err(Error::numeric(format!(
            "no sign change of Ai on [{lo}, {hi}]"
        )));
    }
    let tol = T::lit(4.0) * T::epsilon();
    for _ in 0..200 {
        let mid = lo + (hi - lo) * T::lit(0.5);
        let f_mid = airy_ai(mid);
        if f_mid == T::zero() || (hi - lo) <= tol * mid.abs().max(T::one()) {
            return Ok(mid);
        }
        if f_lo * f_mid < T::zero() {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    Ok(lo + (hi - lo) * T::lit(0.5))
}

fn ai_pair<T: Real>(x: T) -> (T, T) {
    if x.is_nan() {
        return (x, x);
    }
    if x < T::lit(NEG_ASYMPTOTIC_BELOW) {
        let t = oscillatory(-x);
        (t.ai, t.ai_prime)
    } else if x <= T::lit(LAPLACE_ABOVE) {
        let s = maclaurin(x);
        let (c1, c2) = (T::lit(AI_ZERO), T::lit(NEG_AI_PRIME_ZERO));
        (c1 * s.f - c2 * s.g, c1 * s.f_prime - c2 * s.g_prime)
    } else if x < T::lit(POS_ASYMPTOTIC_FROM) {
        laplace_ai(x)
    } else {
        decaying(x)
    }
}

fn bi_pair<T: Real>(x: T) -> Result<(T, T)> {
    if x.is_nan() {
        return Ok((x, x));
    }
    let pair = if x < T::lit(NEG_ASYMPTOTIC_BELOW) {
        let t = oscillatory(-x);
        (t.bi, t.bi_prime)
    } else if x < T::lit(POS_ASYMPTOTIC_FROM) {
        let s = maclaurin(x);
        let (c1, c2) = (T::lit(AI_ZERO), T::lit(NEG_AI_PRIME_ZERO));
        let r3 = T::lit(3.0).sqrt();
        (
            r3 * (c1 * s.f + c2 * s.g),
            r3 * (c1 * s.f_prime + c2 * s.g_prime),
        )
    } else {
        growing(x)
    };
    if pair.0.is_finite() && pair.1.is_finite() {
        Ok(pair)
    } else {
        Err(Error::numeric(format!("Bi({x}) overflows")))
    }
}

struct Maclaurin<T> {
    f: T,
    f_prime: T,
    g: T,
    g_prime: T,
}

/// The two power series `f = sum 3^k (1/3)_k x^(3k) / (3k)!` and
/// `g = sum 3^k (2/3)_k x^(3k+1) / (3k+1)!` with their derivatives.
fn maclaurin<T: Real>(x: T) -> Maclaurin<T> {
    let x3 = x * x * x;
    let eps = T::epsilon();
    // p_k = a_k x^(3k-1), q_k = b_k x^(3k): f = 1 + x sum p, f' = sum 3k p,
    // g = x sum q, g' = sum (3k+1) q.
    let mut p = x * x / T::lit(6.0);
    let mut q = T::one();
    let mut sum_p = p;
    let mut sum_dp = T::lit(3.0) * p;
    let mut sum_q = q;
    let mut sum_dq = q;
    for k in 1..MAX_SERIES_TERMS {
        let kk = T::from_count(3 * k);
        q = q * x3 / (kk * (kk + T::one()));
        let dq = (kk + T::one()) * q;
        sum_q = sum_q + q;
        sum_dq = sum_dq + dq;

        let kn = T::from_count(3 * (k + 1));
        p = p * x3 / ((kn - T::one()) * kn);
        let dp = kn * p;
        sum_p = sum_p + p;
        sum_dp = sum_dp + dp;

        let small = |term: T, sum: T| term.abs() <= eps * sum.abs();
        if k >= 2 && small(p, sum_p) && small(dp, sum_dp) && small(q, sum_q) && small(dq, sum_dq) {
            break;
        }
    }
    Maclaurin {
        f: T::one() + x * sum_p,
        f_prime: sum_dp,
        g: x * sum_q,
        g_prime: sum_dq,
    }
}

/// Terms `u_k / zeta^k` and `v_k / zeta^k` of the asymptotic expansions, truncated
/// near the smallest term but never before six terms.
struct AsymptoticTerms<T> {
    u: [T; MAX_ASYMPTOTIC_TERMS],
    v: [T; MAX_ASYMPTOTIC_TERMS],
    len: usize,
}

fn asymptotic_terms<T: Real>(zeta: T) -> AsymptoticTerms<T> {
    let mut out = AsymptoticTerms {
        u: [T::zero(); MAX_ASYMPTOTIC_TERMS],
        v: [T::zero(); MAX_ASYMPTOTIC_TERMS],
        len: 1,
    };
    out.u[0] = T::one();
    out.v[0] = T::one();
    let eps = T::epsilon();
    let mut u = T::one();
    let mut previous = T::one();
    for k in 1..MAX_ASYMPTOTIC_TERMS {
        let kf = T::from_count(k);
        let six_k = T::lit(6.0) * kf;
        u = u * (six_k - T::lit(5.0)) * (six_k - T::lit(3.0)) * (six_k - T::one())
            / ((T::lit(2.0) * kf - T::one()) * T::lit(216.0) * kf)
            / zeta;
        let v = -(six_k + T::one()) / (six_k - T::one()) * u;
        let size = u.abs().max(v.abs());
        if k >= MIN_ASYMPTOTIC_TERMS && (size > previous || previous <= eps) {
            break;
        }
        out.u[k] = u;
        out.v[k] = v;
        out.len = k + 1;
        previous = size;
    }
    out
}

/// Exponentially decaying `Ai`, `Ai'` for large positive `x`.
fn decaying<T: Real>(x: T) -> (T, T) {
    let zeta = T::lit(2.0 / 3.0) * x * x.sqrt();
    let terms = asymptotic_terms(zeta);
    let (mut su, mut sv) = (T::zero(), T::zero());
    for k in 0..terms.len {
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        su = su + sign * terms.u[k];
        sv = sv + sign * terms.v[k];
    }
    let q = x.powf(T::lit(0.25));
    let e = (-zeta).exp() / (T::lit(2.0) * T::PI().sqrt());
    (e / q * su, -e * q * sv)
}

/// Exponentially growing `Bi`, `Bi'` for large positive `x`.
fn growing<T: Real>(x: T) -> (T, T) {
    let zeta = T::lit(2.0 / 3.0) * x * x.sqrt();
    let terms = asymptotic_terms(zeta);
    let (mut su, mut sv) = (T::zero(), T::zero());
    for k in 0..terms.len {
        su = su + terms.u[k];
        sv = sv + terms.v[k];
    }
    let q = x.powf(T::lit(0.25));
    let ln_pref = zeta - T::PI().sqrt().ln();
    (
        ((ln_pref - q.ln()).exp()) * su,
        ((ln_pref + q.ln()).exp()) * sv,
    )
}

struct Oscillatory<T> {
    ai: T,
    ai_prime: T,
    bi: T,
    bi_prime: T,
}

/// All four functions at `-y` for large positive `y`.
fn oscillatory<T: Real>(y: T) -> Oscillatory<T> {
    let zeta = T::lit(2.0 / 3.0) * y * y.sqrt();
    let terms = asymptotic_terms(zeta);
    // even/odd split with alternating signs: P, Q from u; R, S from v
    let (mut p, mut q, mut r, mut s) = (T::zero(), T::zero(), T::zero(), T::zero());
    for k in 0..terms.len {
        let sign = if (k / 2) % 2 == 0 {
            T::one()
        } else {
            -T::one()
        };
        if k % 2 == 0 {
            p = p + sign * terms.u[k];
            r = r + sign * terms.v[k];
        } else {
            q = q + sign * terms.u[k];
            s = s + sign * terms.v[k];
        }
    }
    let theta = zeta - T::FRAC_PI_4();
    let (sin, cos) = theta.sin_cos();
    let quarter = y.powf(T::lit(0.25));
    let inv_sqrt_pi = T::one() / T::PI().sqrt();
    let amp = inv_sqrt_pi / quarter;
    let amp_prime = inv_sqrt_pi * quarter;
    Oscillatory {
        ai: amp * (cos * p + sin * q),
        ai_prime: amp_prime * (sin * r - cos * s),
        bi: amp * (cos * q - sin * p),
        bi_prime: amp_prime * (cos * r + sin * s),
    }
}

/// `Ai`, `Ai'` on the positive axis from the Gaussian-damped integral.
fn laplace_ai<T: Real>(x: T) -> (T, T) {
    let root = x.sqrt();
    let zeta = T::lit(2.0 / 3.0) * x * root;
    let upper = (T::lit(LAPLACE_CUTOFF) / root).sqrt();
    let width = upper / T::from_count(LAPLACE_PANELS);
    let half = width * T::lit(0.5);
    let third = T::one() / T::lit(3.0);
    let (mut i0, mut i2) = (T::zero(), T::zero());
    for panel in 0..LAPLACE_PANELS {
        let mid = (T::from_count(panel) + T::lit(0.5)) * width;
        for &(node, weight) in &GAUSS_LEGENDRE_16 {
            let w = T::lit(weight) * half;
            for t in [mid - T::lit(node) * half, mid + T::lit(node) * half] {
                let t2 = t * t;
                let h = (-root * t2).exp() * (t2 * t * third).cos() * w;
                i0 = i0 + h;
                i2 = i2 + t2 * h;
            }
        }
    }
    let scale = (-zeta).exp() / T::PI();
    (scale * i0, -scale * (root * i0 + i2 / (T::lit(2.0) * root)))
}
