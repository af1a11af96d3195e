//! Eisenstein series attached to a pair of primitive Dirichlet characters.
//!
//! For `χ₁(−1) = χ₂(−1)` the series has weight 0 and expansion
//!
//! `E(z) = δ_{q₁=1} y^{1/2+s} + δ_{q₂=1} c(s) y^{1/2−s}
//!        + A Σ_{n≥1} η(n) √y K_s(2πny) (e(nx) + χ₂(−1) e(−nx))`
//!
//! with `A = 2 b_r(s) / (Γ_ℝ(2s+1) L(2s+1, χ))` and `χ = χ₁χ̄₂`. When the parities
//! differ it has weight 1, transforms by `(cz+d)/|cz+d|`, and the archimedean
//! Whittaker function becomes `√n y (K_{s+1/2} ± K_{s−1/2})(2πny)` with
//! `A = −2i b_r(s) / (Γ_ℝ(2s+2) L(2s+1, χ))`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::{divisor_count, factorize, is_prime};
use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::lfunctions::{dirichlet_l, lambda_ratio, parity_exponent};
use crate::special_functions::{
    bessel_k_scaled, gamma_factor, ln_gamma_factor, ln_tail_majorant, tail_cutoff_ln, GammaKind,
    BESSEL_MAX_IMAG_ORDER,
};

/// Default lower bound on `y` for evaluation at the cusp ∞.
pub const DEFAULT_Y_MIN: f64 = 0.3;

/// Largest `|Re s|` accepted.
pub const MAX_SIGMA: f64 = 1.0;

/// Bessel tolerance used for expansion terms.
const BESSEL_TOL: f64 = 1e-13;

/// Majorant constant for `K_ν(x) ≤ C x^{−1/2} e^{−x}` with `|Re ν| ≤ 3/2`, `x ≥ 1`.
const K_MAJORANT: f64 = 2.6;

/// Sign of the exponent of `a` in `η(n) = Σ_{ab=n} χ₁(a) a^{∓s} χ₂(b) b^{±s}`.
const ETA_SIGN: f64 = -1.0;

/// A pair of primitive characters with a spectral point `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct EisensteinParams {
    pub chi1: DirichletCharacter,
    pub chi2: DirichletCharacter,
    pub s: Complex64,
    pub level: u64,
    pub central_modulus: u64,
    pub l_modulus: u64,
    pub l_character: DirichletCharacter,
    pub weight: u32,
}

impl EisensteinParams {
    pub fn new(chi1: DirichletCharacter, chi2: DirichletCharacter, s: Complex64) -> Result<Self> {
        for chi in [&chi1, &chi2] {
            if !chi.is_primitive() {
                return Err(Error::invalid(format!(
                    "character {} is not primitive (conductor {})",
                    chi.label(),
                    chi.conductor()
                )));
            }
        }
        if !s.re.is_finite() || !s.im.is_finite() {
            return Err(Error::invalid("s must be finite"));
        }
        if s.re.abs() > MAX_SIGMA {
            return Err(Error::invalid(format!("|Re s| = {} exceeds {MAX_SIGMA}", s.re.abs())));
        }
        if s.im.abs() > BESSEL_MAX_IMAG_ORDER {
            return Err(Error::UnsupportedRegime(format!(
                "|Im s| = {} exceeds {BESSEL_MAX_IMAG_ORDER}",
                s.im.abs()
            )));
        }
        let level = chi1
            .modulus()
            .checked_mul(chi2.modulus())
            .ok_or_else(|| Error::invalid("level overflows"))?;
        let central_modulus = chi1.mul(&chi2).conductor();
        let l_character = chi1.mul(&chi2.conj()).primitive();
        let weight = u32::from(chi1.parity() != chi2.parity());
        Ok(Self {
            level,
            central_modulus,
            l_modulus: l_character.modulus(),
            l_character,
            weight,
            chi1,
            chi2,
            s,
        })
    }

    /// Parameters on the unitary axis `s = it`.
    pub fn at_t(chi1: DirichletCharacter, chi2: DirichletCharacter, t: f64) -> Result<Self> {
        Self::new(chi1, chi2, Complex64::new(0.0, t))
    }

    /// The dual series: characters swapped and `s ↦ −s`.
    pub fn dual(&self) -> Self {
        Self::new(self.chi2.clone(), self.chi1.clone(), -self.s).expect("dual of valid parameters is valid")
    }

    /// Same characters at another spectral point.
    pub fn with_s(&self, s: Complex64) -> Result<Self> {
        Self::new(self.chi1.clone(), self.chi2.clone(), s)
    }

    /// The character `χ₁χ₂` by which `Γ₀(N)` acts.
    pub fn central_character(&self) -> DirichletCharacter {
        self.chi1.mul(&self.chi2)
    }

    /// Primes dividing the level.
    pub fn ramified_primes(&self) -> Vec<u64> {
        factorize(self.level).into_iter().map(|(p, _)| p).collect()
    }

    fn sign2(&self) -> f64 {
        self.chi2.parity() as f64
    }
}

/// Constant-term data at the cusp ∞.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantTermData {
    /// Finite-place value of the section at the identity (0 or 1).
    pub section_value: Complex64,
    /// Same for the dual section at `−s`.
    pub dual_section_value: Complex64,
    pub scattering: Complex64,
    /// Per-prime factors for `p | N`, including the local `L_p(2s+1)/L_p(2s)` when `p ∤ 𝔩`.
    pub local_factors: BTreeMap<u64, Complex64>,
    /// `i^a 𝔩^{1/2}`, with `a` the parity exponent of `χ₁χ̄₂`.
    pub normalization: Complex64,
    /// `normalization · Π local_factors`.
    pub ramified_product: Complex64,
    pub lambda_ratio: Complex64,
}

impl ConstantTermData {
    /// Constant term `v(s) y^{1/2+s} + c(s) v̂(−s) y^{1/2−s}` at height `y`.
    pub fn at(&self, s: Complex64, y: f64) -> Complex64 {
        let ly = y.ln();
        self.section_value * ((0.5 + s) * ly).exp()
            + self.scattering * self.dual_section_value * ((0.5 - s) * ly).exp()
    }
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn p_pow(p: u64, e: Complex64) -> Complex64 {
    (e * (p as f64).ln()).exp()
}

fn inv_minus_one(chi: &DirichletCharacter, p: u64) -> Complex64 {
    if chi.conductor_exponent(p) == 0 {
        one()
    } else {
        one() / chi.component_value(p, -1)
    }
}

fn local_l(s: Complex64, chi: &DirichletCharacter, p: u64) -> Complex64 {
    if chi.modulus() % p == 0 {
        one()
    } else {
        one() / (one() - chi.at(p) * p_pow(p, -s))
    }
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    Ok(())
}

/// Local constant-term factor `c_p(s)`; for `p ∤ N` the unramified ratio `L_p(2s,χ)/L_p(2s+1,χ)`.
pub fn local_constant(params: &EisensteinParams, p: u64) -> Result<Complex64> {
    check_prime(p)?;
    let s = params.s;
    let (c1, c2, chi) = (&params.chi1, &params.chi2, &params.l_character);
    let a1 = c1.conductor_exponent(p);
    let a2 = c2.conductor_exponent(p);
    if a1 == 0 && a2 == 0 {
        return Ok(local_l(2.0 * s, chi, p) / local_l(2.0 * s + 1.0, chi, p));
    }
    if a1 == 0 || a2 == 0 {
        return Ok(inv_minus_one(c1, p) * (p as f64).powi(-(a2 as i32)));
    }
    let n = (a1 + a2) as f64;
    let ac = chi.conductor_exponent(p);
    let e1 = c1.local_epsilon(p).epsilon_half;
    let e2 = c2.conj().local_epsilon(p).epsilon_half;
    let ec = chi.local_epsilon(p).epsilon_half * p_pow(p, (0.5 - 2.0 * s) * ac as f64);
    let u1 = c1.uniformizer_value(p);
    let u2 = c2.uniformizer_value(p);
    let mut lr = one();
    if ac == 0 {
        let w = chi.uniformizer_value(p);
        lr = (one() - w.conj() * p_pow(p, 2.0 * s - 1.0)) / (one() - w * p_pow(p, -2.0 * s));
    }
    let exponent = -2.0 * s * n + 0.5 * a1 as f64 - 0.5 * a2 as f64;
    Ok(inv_minus_one(c1, p) * u2.powi(-(a1 as i32)) * u1.powu(a2) * p_pow(p, exponent) * e1 * e2 / ec * lr)
}

/// Real-place factor of `c(s)`: `Γ_ℝ(2s)/Γ_ℝ(2s+1)` in weight 0, `i Γ_ℝ(2s+1)/Γ_ℝ(2s+2)` in weight 1.
pub fn archimedean_constant_factor(s: Complex64, weight: u32) -> Result<Complex64> {
    let w = weight as f64;
    let ratio =
        (ln_gamma_factor(GammaKind::Real, 2.0 * s + w)? - ln_gamma_factor(GammaKind::Real, 2.0 * s + 1.0 + w)?).exp();
    Ok(if weight == 1 { Complex64::i() * ratio } else { ratio })
}

/// Section values and the scattering constant `c(s) = c_r(s) Λ(2s,χ)/Λ(2s+1,χ)`.
pub fn scattering_constant(params: &EisensteinParams) -> Result<ConstantTermData> {
    let s = params.s;
    let chi = &params.l_character;
    if chi.is_principal() && s.norm() < 1e-8 {
        return Err(Error::Pole {
            what: "scattering pole at s = 0 for principal χ₁χ̄₂".into(),
            distance: s.norm(),
        });
    }
    let ratio = lambda_ratio(s, chi)?;
    let mut local_factors = BTreeMap::new();
    let mut product = one();
    for p in params.ramified_primes() {
        let mut f = local_constant(params, p)?;
        if params.l_modulus % p != 0 {
            f *= local_l(2.0 * s + 1.0, chi, p) / local_l(2.0 * s, chi, p);
        }
        product *= f;
        local_factors.insert(p, f);
    }
    let a = parity_exponent(chi);
    let ia = if a == 1 { Complex64::i() } else { one() };
    let normalization = ia * (params.l_modulus as f64).sqrt();
    let ramified_product = normalization * product;
    let indicator = |q: u64| if q == 1 { one() } else { Complex64::new(0.0, 0.0) };
    Ok(ConstantTermData {
        section_value: indicator(params.chi1.modulus()),
        dual_section_value: indicator(params.chi2.modulus()),
        scattering: ramified_product * ratio,
        local_factors,
        normalization,
        ramified_product,
        lambda_ratio: ratio,
    })
}

/// `η(n) = Σ_{ab=n} χ₁(a) a^{−s} χ₂(b) b^{s}`.
pub fn generalized_divisor(chi1: &DirichletCharacter, chi2: &DirichletCharacter, s: Complex64, n: u64) -> Complex64 {
    eta_signed(chi1, chi2, s, n, ETA_SIGN)
}

fn eta_signed(chi1: &DirichletCharacter, chi2: &DirichletCharacter, s: Complex64, n: u64, sign: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut a = 1u64;
    while a * a <= n {
        if n % a == 0 {
            let b = n / a;
            acc += chi1.at(a) * chi2.at(b) * (sign * s * ((a as f64).ln() - (b as f64).ln())).exp();
            if a != b {
                acc += chi1.at(b) * chi2.at(a) * (sign * s * ((b as f64).ln() - (a as f64).ln())).exp();
            }
        }
        a += 1;
    }
    acc
}

/// Fourier coefficient `λ(n) = η_{χ₁,χ₂,s}(n)`.
pub fn fourier_coefficient(params: &EisensteinParams, n: u64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::invalid("Fourier coefficients are indexed by n >= 1"));
    }
    Ok(generalized_divisor(&params.chi1, &params.chi2, params.s, n))
}

/// Local Whittaker normalization `b_p(s)` at `p | N`.
pub fn local_b(params: &EisensteinParams, p: u64) -> Result<Complex64> {
    check_prime(p)?;
    let s = params.s;
    let a2 = params.chi2.conductor_exponent(p);
    let mut e = params.chi2.conj().local_epsilon(p).epsilon_half;
    if a2 > 0 {
        e *= inv_minus_one(&params.chi2, p);
    }
    let mut v = p_pow(p, -0.5 * a2 as f64 - 2.0 * s * a2 as f64) * params.chi1.uniformizer_value(p).powu(a2) * e;
    if params.l_modulus % p != 0 {
        v *= local_l(2.0 * s + 1.0, &params.l_character, p);
    }
    Ok(v)
}

/// `b_r(s) = Π_{p|N} b_p(s)`.
pub fn ramified_b(params: &EisensteinParams) -> Result<Complex64> {
    params.ramified_primes().into_iter().try_fold(one(), |acc, p| Ok(acc * local_b(params, p)?))
}

/// `b_r(s) / L(2s+1, χ₁χ̄₂)`.
pub fn coefficient_prefactor(params: &EisensteinParams) -> Result<Complex64> {
    let l = dirichlet_l(2.0 * params.s + 1.0, &params.l_character)?;
    if l.norm() < 1e-12 {
        return Err(Error::NearZero(l.norm()));
    }
    Ok(ramified_b(params)? / l)
}

/// `ln` of the archimedean normalization `2/Γ_ℝ(2s+1)` or `−2i/Γ_ℝ(2s+2)`.
fn ln_archimedean(params: &EisensteinParams) -> Result<Complex64> {
    let s = params.s;
    let lg = ln_gamma_factor(GammaKind::Real, 2.0 * s + 1.0 + params.weight as f64)?;
    let phase = if params.weight == 1 {
        Complex64::new(0.0, -PI / 2.0)
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(Complex64::new(2f64.ln(), 0.0) + phase - lg)
}

/// Coefficients `λ(1), …, λ(M)` with the global prefactor.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    pub params: EisensteinParams,
    /// `b_r(s)/L(2s+1, χ₁χ̄₂)`.
    pub prefactor: Complex64,
    /// `ln` of the archimedean normalization applied on top of `prefactor`.
    pub ln_archimedean: Complex64,
    /// `coefficients[n−1] = λ(n)`.
    pub coefficients: Vec<Complex64>,
}

impl CoefficientTable {
    pub fn build(params: &EisensteinParams, m: usize) -> Result<Self> {
        Self::build_signed(params, m, ETA_SIGN)
    }

    fn build_signed(params: &EisensteinParams, m: usize, sign: f64) -> Result<Self> {
        let s = params.s;
        let pow: Vec<Complex64> = (0..=m)
            .map(|a| if a == 0 { one() } else { (sign * s * (a as f64).ln()).exp() })
            .collect();
        let mut coefficients = vec![Complex64::new(0.0, 0.0); m];
        for a in 1..=m {
            let va = params.chi1.at(a as u64);
            if va.norm_sqr() == 0.0 {
                continue;
            }
            let va = va * pow[a];
            for b in 1..=m / a {
                let vb = params.chi2.at(b as u64);
                if vb.norm_sqr() != 0.0 {
                    coefficients[a * b - 1] += va * vb / pow[b];
                }
            }
        }
        Ok(Self {
            params: params.clone(),
            prefactor: coefficient_prefactor(params)?,
            ln_archimedean: ln_archimedean(params)?,
            coefficients,
        })
    }

    /// `λ(n)` for `1 ≤ n ≤ M`.
    pub fn get(&self, n: usize) -> Option<Complex64> {
        n.checked_sub(1).and_then(|i| self.coefficients.get(i).copied())
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// Options for evaluation at the cusp ∞.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub eps: f64,
    pub y_min: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            eps: 1e-12,
            y_min: DEFAULT_Y_MIN,
        }
    }
}

/// Value of `E` at a point together with its pieces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: Complex64,
    /// `F = E − constant terms`.
    pub truncated: Complex64,
    pub constant: Complex64,
    pub terms: u64,
    pub error_bound: f64,
}

/// The expansion along a horizontal line `Im z = y`, reusable for many `x`.
#[derive(Debug, Clone)]
pub struct RowExpansion {
    pub y: f64,
    pub constant: Complex64,
    /// Coefficient of `e(nx)` and of `e(−nx)` for `n = 1, …, M`.
    pub plus: Vec<Complex64>,
    pub minus: Vec<Complex64>,
    pub error_bound: f64,
}

impl RowExpansion {
    /// `F(x + iy)`.
    pub fn truncated(&self, x: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, (p, m)) in self.plus.iter().zip(&self.minus).enumerate() {
            let theta = 2.0 * PI * (((k + 1) as f64 * x).rem_euclid(1.0));
            let e = Complex64::from_polar(1.0, theta);
            acc += p * e + m * e.conj();
        }
        acc
    }

    pub fn evaluate(&self, x: f64) -> Evaluation {
        let truncated = self.truncated(x);
        Evaluation {
            value: truncated + self.constant,
            truncated,
            constant: self.constant,
            terms: self.plus.len() as u64,
            error_bound: self.error_bound,
        }
    }
}

fn validate_point(y: f64, opts: &EvalOptions) -> Result<()> {
    if !(opts.y_min > 0.0) || !opts.y_min.is_finite() {
        return Err(Error::invalid("y_min must be positive"));
    }
    if !(opts.eps > 0.0 && opts.eps < 1.0) {
        return Err(Error::invalid("eps must lie in (0, 1)"));
    }
    if !y.is_finite() || y < opts.y_min {
        return Err(Error::invalid(format!("y = {y} is below y_min = {}", opts.y_min)));
    }
    Ok(())
}

fn majorant_shape(params: &EisensteinParams, y: f64) -> (f64, f64) {
    let sigma = params.s.re.abs();
    if params.weight == 0 {
        (0.5 + sigma, (4.0 * K_MAJORANT * y.sqrt()).ln())
    } else {
        (1.0 + sigma, (8.0 * K_MAJORANT * y).ln())
    }
}

/// Number of terms needed for truncation error below `eps` at height `y`.
pub fn truncation_terms(params: &EisensteinParams, y: f64, eps: f64) -> Result<u64> {
    let ln_a = (coefficient_prefactor(params)?.ln() + ln_archimedean(params)?).re;
    let (power, ln_c) = majorant_shape(params, y);
    Ok(tail_cutoff_ln(params.s.im, y, eps.ln() - ln_a - ln_c, power))
}

fn truncation_bound(params: &EisensteinParams, y: f64, m: u64, ln_a: f64) -> f64 {
    let (power, ln_c) = majorant_shape(params, y);
    if 2.0 * PI * (m + 1) as f64 * y < 1.0 {
        return f64::INFINITY;
    }
    (ln_tail_majorant(m, y, power) + ln_a + ln_c).exp()
}

/// Expansion along `Im z = y` with `M` chosen from `opts.eps`.
pub fn row_expansion(params: &EisensteinParams, y: f64, opts: &EvalOptions) -> Result<RowExpansion> {
    validate_point(y, opts)?;
    let m = truncation_terms(params, y, opts.eps)?;
    row_expansion_with_terms(params, y, m as usize)
}

/// Expansion along `Im z = y` with exactly `m` terms.
pub fn row_expansion_with_terms(params: &EisensteinParams, y: f64, m: usize) -> Result<RowExpansion> {
    row_signed(params, y, m, ETA_SIGN)
}

fn row_signed(params: &EisensteinParams, y: f64, m: usize, sign: f64) -> Result<RowExpansion> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::invalid("y must be positive"));
    }
    let table = CoefficientTable::build_signed(params, m, sign)?;
    let ln_a = table.prefactor.ln() + table.ln_archimedean;
    let s = params.s;
    let psi = params.sign2();
    let mut plus = Vec::with_capacity(m);
    let mut minus = Vec::with_capacity(m);
    for (k, lam) in table.coefficients.iter().enumerate() {
        let n = (k + 1) as f64;
        let x = 2.0 * PI * n * y;
        if lam.norm_sqr() == 0.0 {
            plus.push(Complex64::new(0.0, 0.0));
            minus.push(Complex64::new(0.0, 0.0));
            continue;
        }
        let (p, q) = if params.weight == 0 {
            let k = bessel_k_scaled(s, x, BESSEL_TOL)?;
            let v = k.mantissa * (ln_a + k.log_scale + 0.5 * y.ln()).exp();
            (v, v * psi)
        } else {
            let kp = bessel_k_scaled(s + 0.5, x, BESSEL_TOL)?;
            let km = bessel_k_scaled(s - 0.5, x, BESSEL_TOL)?;
            let base = ln_a + 0.5 * n.ln() + y.ln();
            let vp = kp.mantissa * (base + kp.log_scale).exp();
            let vm = km.mantissa * (base + km.log_scale).exp();
            (vp + vm, (vp - vm) * psi)
        };
        plus.push(lam * p);
        minus.push(lam * q);
    }
    let constant = constant_term(params, y)?;
    Ok(RowExpansion {
        y,
        constant,
        plus,
        minus,
        error_bound: truncation_bound(params, y, m as u64, ln_a.re),
    })
}

/// Constant term at height `y`; only the section terms that do not vanish are evaluated.
pub fn constant_term(params: &EisensteinParams, y: f64) -> Result<Complex64> {
    let s = params.s;
    let mut v = Complex64::new(0.0, 0.0);
    if params.chi1.modulus() == 1 {
        v += ((0.5 + s) * y.ln()).exp();
    }
    if params.chi2.modulus() == 1 {
        v += scattering_constant(params)?.scattering * ((0.5 - s) * y.ln()).exp();
    }
    Ok(v)
}

/// `E(s, x+iy)` with its truncation data.
pub fn evaluate_detailed(params: &EisensteinParams, x: f64, y: f64, opts: &EvalOptions) -> Result<Evaluation> {
    if !x.is_finite() {
        return Err(Error::invalid("x must be finite"));
    }
    Ok(row_expansion(params, y, opts)?.evaluate(x))
}

/// `E(s, x+iy)` to absolute accuracy `eps`, for `y ≥ 0.3`.
pub fn evaluate(params: &EisensteinParams, x: f64, y: f64, eps: f64) -> Result<Complex64> {
    let opts = EvalOptions { eps, ..EvalOptions::default() };
    Ok(evaluate_detailed(params, x, y, &opts)?.value)
}

/// `F = E − constant terms` at `x+iy`, for `y ≥ 0.3`.
pub fn evaluate_truncated(params: &EisensteinParams, x: f64, y: f64, eps: f64) -> Result<Complex64> {
    let opts = EvalOptions { eps, ..EvalOptions::default() };
    Ok(evaluate_detailed(params, x, y, &opts)?.truncated)
}

/// `|E(s,z) − c(s) Ê(−s,z)| / (1 + |E| + |Ê|)`.
pub fn functional_equation_residual(params: &EisensteinParams, x: f64, y: f64) -> Result<f64> {
    functional_equation_residual_with(params, x, y, &EvalOptions::default())
}

pub fn functional_equation_residual_with(
    params: &EisensteinParams,
    x: f64,
    y: f64,
    opts: &EvalOptions,
) -> Result<f64> {
    let c = scattering_constant(params)?.scattering;
    let e = evaluate_detailed(params, x, y, opts)?.value;
    let d = evaluate_detailed(&params.dual(), x, y, opts)?.value;
    Ok((e - c * d).norm() / (1.0 + e.norm() + d.norm()))
}

/// `|λ(n)| ≤ d(n) n^{|σ|}`, the coefficient bound on the unitary axis when `σ = 0`.
pub fn coefficient_bound(params: &EisensteinParams, n: u64) -> f64 {
    divisor_count(n) as f64 * (n as f64).powf(params.s.re.abs())
}

/// `Γ_ℝ(2s+1)` or `Γ_ℝ(2s+2)`, the archimedean factor divided out of the prefactor.
pub fn archimedean_gamma(params: &EisensteinParams) -> Result<Complex64> {
    gamma_factor(GammaKind::Real, 2.0 * params.s + 1.0 + params.weight as f64)
}
