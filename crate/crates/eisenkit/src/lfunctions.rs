//! Dirichlet L-functions, their completions and the ratio `Λ(2s,χ)/Λ(2s+1,χ)`.
//!
//! Values come from the Hurwitz decomposition `L(s,χ) = q^{−s} Σ_a χ(a) ζ(s, a/q)`
//! with each Hurwitz zeta value computed by Euler–Maclaurin summation, which is
//! valid on the whole plane minus `s = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::characters::{DirichletCharacter, NeumaierComplex};
use crate::error::{Error, Result};
use crate::special_functions::ln_gamma;

/// Largest `|Im s|` accepted by the evaluators.
pub const MAX_IMAG: f64 = 4000.0;

/// Bernoulli numbers `B_2, …, B_30` divided by their factorials.
const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
    -23749461029.0 / 870.0 / 3.0488834461171387e29,
    8615841276005.0 / 14322.0 / 2.652528598121911e32,
];

/// An L-value request.
#[derive(Debug, Clone)]
pub struct LValueRequest {
    pub s: Complex64,
    pub character: DirichletCharacter,
    pub completed: bool,
}

impl LValueRequest {
    /// Dispatch to [`dirichlet_l`] or [`completed_lambda`].
    pub fn evaluate(&self) -> Result<Complex64> {
        if self.completed {
            completed_lambda(self.s, &self.character)
        } else {
            dirichlet_l(self.s, &self.character)
        }
    }
}

/// Hurwitz zeta `ζ(s, a) = Σ_{k≥0} (k+a)^{−s}` for `0 < a ≤ 1`, `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Complex64 {
    hurwitz_regular(s, a) + 1.0 / (s - 1.0)
}

/// `(e^z − 1)/z`, entire.
fn exprel(z: Complex64) -> Complex64 {
    if z.norm() > 0.5 {
        return (z.exp() - 1.0) / z;
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 2..30 {
        term *= z / k as f64;
        sum += term;
    }
    sum
}

/// `ζ(s, a) − 1/(s − 1)`, entire in `s`.
fn hurwitz_regular(s: Complex64, a: f64) -> Complex64 {
    let n = ((s.norm() + 30.0) / 1.2).ceil() as usize;
    let mut acc = NeumaierComplex::default();
    for k in 0..n {
        acc.add((-s * (k as f64 + a).ln()).exp());
    }
    let big = n as f64 + a;
    let ln_big = big.ln();
    let big_pow = (-s * ln_big).exp();
    acc.add(-ln_big * exprel((1.0 - s) * ln_big));
    acc.add(big_pow * 0.5);
    let mut rising = s;
    let mut pow = big_pow / big;
    for (j, c) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        acc.add(rising * pow * *c);
        let j = j as f64;
        rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        pow /= big * big;
    }
    acc.value()
}

fn check_window(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::invalid("L-function argument must be finite"));
    }
    if s.im.abs() > MAX_IMAG {
        return Err(Error::UnsupportedRegime(format!(
            "L-value at Im s = {} outside |Im s| <= {MAX_IMAG}",
            s.im
        )));
    }
    Ok(())
}

/// `L(s, χ)`.
pub fn dirichlet_l(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    check_window(s)?;
    if chi.is_principal() {
        let d = (s - 1.0).norm();
        if d < 1e-8 {
            return Err(Error::Pole {
                what: format!("L(s, principal character mod {}) at s = {s}", chi.modulus()),
                distance: d,
            });
        }
    }
    let q = chi.modulus();
    let mut acc = NeumaierComplex::default();
    for a in 1..=q {
        let v = chi.at(a);
        if v.norm_sqr() == 0.0 {
            continue;
        }
        acc.add(v * hurwitz_regular(s, a as f64 / q as f64));
    }
    if chi.is_principal() {
        acc.add(Complex64::new(crate::arith::euler_phi(q) as f64, 0.0) / (s - 1.0));
    }
    Ok(acc.value() * (-s * (q as f64).ln()).exp())
}

/// Parity exponent `a ∈ {0, 1}` with `χ(−1) = (−1)^a`.
pub fn parity_exponent(chi: &DirichletCharacter) -> u32 {
    if chi.parity() == 1 {
        0
    } else {
        1
    }
}

fn require_primitive(chi: &DirichletCharacter) -> Result<()> {
    if !chi.is_primitive() {
        return Err(Error::invalid(format!(
            "completed L-function needs a primitive character, {} has conductor {}",
            chi.label(),
            chi.conductor()
        )));
    }
    Ok(())
}

fn check_completed_poles(s: Complex64, chi: &DirichletCharacter) -> Result<()> {
    if chi.modulus() == 1 {
        for pole in [0.0, 1.0] {
            let d = (s - pole).norm();
            if d < 1e-8 {
                return Err(Error::Pole {
                    what: format!("completed zeta at s = {s}"),
                    distance: d,
                });
            }
        }
    }
    Ok(())
}

/// `ln` of the archimedean part `(q/π)^{(s+a)/2} Γ((s+a)/2)`.
fn ln_completion(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    let a = parity_exponent(chi) as f64;
    let half = (s + a) * 0.5;
    Ok(half * (chi.modulus() as f64 / PI).ln() + ln_gamma(half)?)
}

/// `Λ(s, χ) = (q/π)^{(s+a)/2} Γ((s+a)/2) L(s, χ)` for primitive `χ`.
pub fn completed_lambda(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    check_window(s)?;
    require_primitive(chi)?;
    check_completed_poles(s, chi)?;
    let l = dirichlet_l(s, chi)?;
    Ok(ln_completion(s, chi)?.exp() * l)
}

/// `Λ(2s, χ)/Λ(2s+1, χ)` for primitive `χ`, with the Gamma factors combined in log space.
pub fn lambda_ratio(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    require_primitive(chi)?;
    let (s0, s1) = (s * 2.0, s * 2.0 + 1.0);
    check_window(s0)?;
    check_completed_poles(s0, chi)?;
    let l1 = dirichlet_l(s1, chi)?;
    if l1.norm() < 1e-12 {
        return Err(Error::NearZero(l1.norm()));
    }
    let l0 = dirichlet_l(s0, chi)?;
    let gamma_part = (ln_completion(s0, chi)? - ln_completion(s1, chi)?).exp();
    Ok(gamma_part * l0 / l1)
}

/// Euler factor `(1 − χ(p) p^{−s})^{−1}`.
pub fn local_factor(s: Complex64, chi: &DirichletCharacter, p: u64) -> Complex64 {
    let v = chi.at(p);
    Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - v * (-s * (p as f64).ln()).exp())
}

/// Root number `τ(χ)/(i^a √q)` of a primitive character.
pub fn root_number(chi: &DirichletCharacter) -> Result<Complex64> {
    let tau = chi.gauss_sum()?;
    let ia = if parity_exponent(chi) == 1 {
        Complex64::i()
    } else {
        Complex64::new(1.0, 0.0)
    };
    Ok(tau / (ia * (chi.modulus() as f64).sqrt()))
}
