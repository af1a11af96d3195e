//! Gamma factors, complex-order K-Bessel functions, the amplifier bump weight
//! and truncation bounds for Fourier expansions.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const LN_2PI_HALF: f64 = 0.918_938_533_204_672_8;

/// Bernoulli numbers `B_2, B_4, …, B_30`.
const BERNOULLI: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// A complex number stored as `mantissa · exp(log_scale)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scaled {
    pub mantissa: Complex64,
    pub log_scale: f64,
}

impl Scaled {
    pub fn value(&self) -> Complex64 {
        self.mantissa * self.log_scale.exp()
    }

    /// Natural logarithm of the represented number.
    pub fn ln(&self) -> Complex64 {
        self.mantissa.ln() + self.log_scale
    }
}

/// Which Gamma factor to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaKind {
    /// `Γ_ℝ(s) = π^{−s/2} Γ(s/2)`.
    Real,
    /// `Γ_ℂ(s) = 2 (2π)^{−s} Γ(s)`.
    Complex,
    /// `Γ(s)`.
    Plain,
}

fn check_pole(z: Complex64) -> Result<()> {
    if z.re <= 0.5 {
        let n = z.re.round();
        if n <= 0.0 {
            let d = (z - n).norm();
            if d < 1e-12 {
                return Err(Error::Pole {
                    what: format!("Gamma at {z}"),
                    distance: d,
                });
            }
        }
    }
    Ok(())
}

fn ln_gamma_stirling(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < 17.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let k = (k + 1) as f64;
        series += pow * (b / (2.0 * k * (2.0 * k - 1.0)));
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_2PI_HALF + series - shift
}

/// `ln sin(πz)` on some branch, accurate for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let w = z - n;
    let parity = Complex64::new(0.0, PI * n);
    if w.im.abs() < 15.0 {
        return (w * PI).sin().ln() + parity;
    }
    let i = Complex64::i();
    let body = if w.im > 0.0 {
        -i * PI * w + ((i * 2.0 * PI * w).exp() - 1.0).ln() - (2.0 * i).ln()
    } else {
        i * PI * w + (1.0 - (-i * 2.0 * PI * w).exp()).ln() - (2.0 * i).ln()
    };
    body + parity
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn ln_gamma_lanczos(z: Complex64) -> Complex64 {
    let x = z - 1.0;
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        a += p / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    LN_2PI_HALF + (x + 0.5) * t.ln() - t + a.ln()
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    if z.norm() < 8.0 {
        ln_gamma_lanczos(z)
    } else {
        ln_gamma_stirling(z)
    }
}

/// `ln Γ(z)` on a branch continuous away from the negative axis.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    if z.re < 0.5 {
        let one_minus = Complex64::new(1.0, 0.0) - z;
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(one_minus));
    }
    Ok(ln_gamma_right(z))
}

/// `Γ(z)`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re >= 0.5 && z.re < 171.0 {
        return Ok(Complex64::new(ln_gamma_right(z).re.exp(), 0.0));
    }
    Ok(ln_gamma(z)?.exp())
}

/// Logarithm of a Gamma factor.
pub fn ln_gamma_factor(kind: GammaKind, s: Complex64) -> Result<Complex64> {
    match kind {
        GammaKind::Plain => ln_gamma(s),
        GammaKind::Real => Ok(ln_gamma(s * 0.5)? - s * (0.5 * PI.ln())),
        GammaKind::Complex => Ok(ln_gamma(s)? + 2f64.ln() - s * (2.0 * PI).ln()),
    }
}

/// A Gamma factor.
pub fn gamma_factor(kind: GammaKind, s: Complex64) -> Result<Complex64> {
    Ok(ln_gamma_factor(kind, s)?.exp())
}

/// Input to [`bessel_k`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselRequest {
    pub order: Complex64,
    pub argument: f64,
    pub target_error: f64,
}

impl BesselRequest {
    pub fn new(order: Complex64, argument: f64) -> Self {
        Self {
            order,
            argument,
            target_error: 1e-13,
        }
    }
}

/// Largest `|Im ν|` for which accuracy is guaranteed.
pub const BESSEL_MAX_IMAG_ORDER: f64 = 200.0;
/// Largest `|Re ν|` for which accuracy is guaranteed.
pub const BESSEL_MAX_REAL_ORDER: f64 = 20.0;
/// Smallest argument for which accuracy is guaranteed.
pub const BESSEL_MIN_ARGUMENT: f64 = 1e-6;

/// `K_ν(x)` for complex `ν` and real `x > 0`.
pub fn bessel_k(req: &BesselRequest) -> Result<Complex64> {
    Ok(bessel_k_scaled(req.order, req.argument, req.target_error)?.value())
}

/// `K_ν(x)` in scaled form, safe against underflow for large `x` or `|Im ν|`.
///
/// The integral `½∫ exp(−x cosh w + νw) dw` is taken along the horizontal line
/// `Im w = α`, with `α` chosen so that the phase is stationary near the peak of
/// the integrand, and evaluated by the trapezoid rule with step halving.
pub fn bessel_k_scaled(order: Complex64, x: f64, target_error: f64) -> Result<Scaled> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::invalid(format!("Bessel argument must be positive, got {x}")));
    }
    if !(target_error >= 1e-14) {
        return Err(Error::invalid(format!(
            "Bessel target error must be at least 1e-14, got {target_error}"
        )));
    }
    if !order.re.is_finite() || !order.im.is_finite() {
        return Err(Error::invalid("Bessel order must be finite"));
    }
    if order.im.abs() > BESSEL_MAX_IMAG_ORDER
        || order.re.abs() > BESSEL_MAX_REAL_ORDER
        || x < BESSEL_MIN_ARGUMENT
    {
        return Err(Error::UnsupportedRegime(format!(
            "K_nu(x) with nu = {order}, x = {x:e} lies outside |Im nu| <= {BESSEL_MAX_IMAG_ORDER}, \
             |Re nu| <= {BESSEL_MAX_REAL_ORDER}, x >= {BESSEL_MIN_ARGUMENT:e}"
        )));
    }
    let nu = if order.im < 0.0 { -order } else { order };
    let (sigma, t) = (nu.re, nu.im);
    let alpha = if t <= 0.0 {
        0.0
    } else {
        let stationary = (t / x).min(1.0).asin();
        let cap = (PI / 2.0 - 3.0 / t).max(0.0);
        stationary.min(cap)
    };
    let (sa, ca) = alpha.sin_cos();
    let re_f = |u: f64| -x * ca * u.cosh() + sigma * u - t * alpha;
    let peak = (sigma / (x * ca)).asinh();
    let m0 = re_f(peak);
    let edge = |depth: f64, dir: f64| -> f64 {
        let mut step = 1.0;
        while m0 - re_f(peak + dir * step) < depth {
            step *= 2.0;
        }
        let (mut lo, mut hi) = (0.0, step);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if m0 - re_f(peak + dir * mid) < depth {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        peak + dir * hi
    };
    let (a, b) = (edge(46.0, -1.0), edge(46.0, 1.0));
    let phase_rate = |u: f64| (t - x * sa * u.cosh()).abs();
    let (ra, rb) = (edge(25.0, -1.0), edge(25.0, 1.0));
    let freq = phase_rate(ra)
        .max(phase_rate(rb))
        .max(phase_rate(peak))
        .max(t)
        .max(1.0);
    let width = b - a;
    let h_max = PI / (2.0 * freq);
    let mut n = 16usize;
    while width / (n as f64) > h_max {
        n *= 2;
    }
    let integrand = |u: f64| -> Complex64 {
        let w = Complex64::new(u, alpha);
        let f = -x * w.cosh() + nu * w;
        (f - m0).exp()
    };
    let mut h = width / n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut mass = 0.0;
    for k in 0..=n {
        let wgt = if k == 0 || k == n { 0.5 } else { 1.0 };
        let v = integrand(a + k as f64 * h) * wgt;
        sum += v;
        mass += v.norm();
    }
    let mut estimate = sum * h;
    let mut levels = 0;
    loop {
        let mut mid = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let v = integrand(a + (k as f64 + 0.5) * h);
            mid += v;
            mass += v.norm();
        }
        sum += mid;
        n *= 2;
        h *= 0.5;
        let next = sum * h;
        let diff = (next - estimate).norm();
        estimate = next;
        levels += 1;
        let noise = 64.0 * f64::EPSILON * mass * h;
        if levels >= 2 && diff <= (0.25 * target_error * next.norm()).max(noise) {
            break;
        }
        if levels > 22 {
            return Err(Error::NoConvergence(format!(
                "K_nu(x) with nu = {order}, x = {x}"
            )));
        }
    }
    Ok(Scaled {
        mantissa: estimate * 0.5,
        log_scale: m0,
    })
}

/// The bump weight `w(r) = exp(−1/((r−1)(2−r)))` on `(1, 2)`, zero elsewhere.
pub fn bump_weight(r: f64) -> f64 {
    if r <= 1.0 || r >= 2.0 {
        return 0.0;
    }
    (-1.0 / ((r - 1.0) * (2.0 - r))).exp()
}

/// Mellin transform `w̃(s) = ∫ w(r) r^{s−1} dr`.
pub fn bump_mellin(s: Complex64) -> Complex64 {
    tanh_sinh(
        |r| {
            let w = bump_weight(r);
            if w == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                (Complex64::new(r.ln(), 0.0) * (s - 1.0)).exp() * w
            }
        },
        1.0,
        2.0,
        1e-14,
    )
}

/// The bump weight together with its cached total mass `w̃(1)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct BumpWeight;

impl BumpWeight {
    pub fn eval(&self, r: f64) -> f64 {
        bump_weight(r)
    }

    pub fn mellin(&self, s: Complex64) -> Complex64 {
        bump_mellin(s)
    }

    /// `w̃(1) = ∫_1^2 w(r) dr`.
    pub fn mass(&self) -> f64 {
        static MASS: OnceLock<f64> = OnceLock::new();
        *MASS.get_or_init(|| bump_mellin(Complex64::new(1.0, 0.0)).re)
    }
}

/// Tanh-sinh quadrature of a smooth complex function on `[a, b]`.
pub fn tanh_sinh(f: impl Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Complex64 {
    let c = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let node = |k: f64, h: f64| -> (f64, f64) {
        let t = k * h;
        let u = 0.5 * PI * t.sinh();
        let x = u.tanh();
        let w = 0.5 * PI * t.cosh() / (u.cosh() * u.cosh());
        (x, w)
    };
    let tmax = 3.2;
    let mut h = 0.5;
    let mut total = Complex64::new(0.0, 0.0);
    let mut k = 0.0;
    while k * h <= tmax {
        let (x, w) = node(k, h);
        total += f(c + half * x) * w;
        if k > 0.0 {
            total += f(c - half * x) * w;
        }
        k += 1.0;
    }
    let mut estimate = total * h * half;
    for _ in 0..12 {
        let hn = 0.5 * h;
        let mut k = 1.0;
        while k * hn <= tmax {
            let (x, w) = node(k, hn);
            total += (f(c + half * x) + f(c - half * x)) * w;
            k += 2.0;
        }
        h = hn;
        let next = total * h * half;
        let diff = (next - estimate).norm();
        estimate = next;
        if diff <= tol * next.norm().max(1e-300) {
            break;
        }
    }
    estimate
}

/// Smallest `M` with `2πMy > 1 + π|t|/2` and
/// `Σ_{n>M} n^{0.6} (2πny)^{−1/2} e^{−2πny} < eps`.
pub fn whittaker_tail_cutoff(t: f64, y: f64, eps: f64) -> Result<u64> {
    if !(y > 0.0) || !(eps > 0.0) {
        return Err(Error::invalid("tail cutoff needs y > 0 and eps > 0"));
    }
    Ok(tail_cutoff_ln(t, y, eps.ln(), 0.6))
}

/// Natural log of `Σ_{n>m} n^{power} (2πny)^{−1/2} e^{−2πny}`.
pub fn ln_tail_majorant(m: u64, y: f64, power: f64) -> f64 {
    let lt = |n: f64| power * n.ln() - 0.5 * (2.0 * PI * n * y).ln() - 2.0 * PI * n * y;
    let first = lt((m + 1) as f64);
    let mut acc = 1.0f64;
    let mut n = m + 2;
    loop {
        let r = (lt(n as f64) - first).exp();
        acc += r;
        if r < 1e-18 * acc {
            break;
        }
        n += 1;
    }
    first + acc.ln()
}

/// Cutoff as in [`whittaker_tail_cutoff`] with the bound given as `ln eps` and a
/// general power of `n` in the majorant.
pub fn tail_cutoff_ln(t: f64, y: f64, ln_eps: f64, power: f64) -> u64 {
    let floor = ((1.0 + PI * t.abs() / 2.0) / (2.0 * PI * y)).floor() as u64 + 1;
    let lo_ok = |m: u64| ln_tail_majorant(m, y, power) < ln_eps;
    let mut lo = floor.max(1);
    if lo_ok(lo) {
        return lo;
    }
    let mut hi = lo * 2;
    while !lo_ok(hi) {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if lo_ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
