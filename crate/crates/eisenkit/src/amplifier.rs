//! The amplifier prime sum `A_L(r₁, r₂)` over primes `p ≡ 1 mod q`, the
//! coefficients `b_ξ(p)` of the associated Dirichlet series and the prime-level
//! check of its factorization into four L-functions.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, gcd, is_prime, primes_up_to};
use crate::characters::{DirichletCharacter, NeumaierComplex};
use crate::eisenstein::generalized_divisor;
use crate::error::{Error, Result};
use crate::special_functions::BumpWeight;

/// Segment length of the prime sieve.
pub const SIEVE_BLOCK: u64 = 1 << 20;

/// Largest supported `L`.
pub const MAX_LENGTH: f64 = 5e9;

/// Parameters of the amplifier sum.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplifierConfig {
    pub q: u64,
    pub length: f64,
    pub r1: f64,
    pub r2: f64,
    pub weight: BumpWeight,
    pub chi1: DirichletCharacter,
    pub chi2: DirichletCharacter,
}

impl AmplifierConfig {
    /// Trivial characters.
    pub fn new(q: u64, length: f64, r1: f64, r2: f64) -> Result<Self> {
        Self::with_characters(q, length, r1, r2, DirichletCharacter::trivial(), DirichletCharacter::trivial())
    }

    pub fn with_characters(
        q: u64,
        length: f64,
        r1: f64,
        r2: f64,
        chi1: DirichletCharacter,
        chi2: DirichletCharacter,
    ) -> Result<Self> {
        let cfg = Self {
            q,
            length,
            r1,
            r2,
            weight: BumpWeight,
            chi1,
            chi2,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q == 0 {
            return Err(Error::invalid("q must be positive"));
        }
        if !(self.length >= 10.0) || self.length > MAX_LENGTH {
            return Err(Error::invalid(format!("L = {} outside [10, {MAX_LENGTH:e}]", self.length)));
        }
        if !self.r1.is_finite() || !self.r2.is_finite() {
            return Err(Error::invalid("r1 and r2 must be finite"));
        }
        if gcd(self.q, self.level()) != 1 {
            return Err(Error::invalid(format!(
                "q = {} is not coprime to the level {}",
                self.q,
                self.level()
            )));
        }
        Ok(())
    }

    /// `cond(χ₁)·cond(χ₂)`, computed from the moduli.
    pub fn level(&self) -> u64 {
        self.chi1.modulus() * self.chi2.modulus()
    }

    /// Same configuration at another length.
    pub fn at_length(&self, length: f64) -> Result<Self> {
        let mut cfg = self.clone();
        cfg.length = length;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// `η_{χ₁,χ₂,s}(n)`, shared with the Eisenstein coefficients.
pub fn eta(chi1: &DirichletCharacter, chi2: &DirichletCharacter, s: Complex64, n: u64) -> Complex64 {
    generalized_divisor(chi1, chi2, s, n)
}

/// `η` at a prime: `χ₁(p) p^{−s} + χ₂(p) p^{s}`.
fn eta_prime(a: Complex64, b: Complex64, s: Complex64, ln_p: f64) -> Complex64 {
    let w = (s * ln_p).exp();
    a / w + b * w
}

/// `log p · η_{χ₁,χ₂,ir₁}(p) · η_{χ̄₁,χ̄₂,−ir₂}(p)`, the unweighted summand.
fn unweighted(cfg: &AmplifierConfig, p: u64) -> Complex64 {
    let lp = (p as f64).ln();
    let (a, b) = (cfg.chi1.at(p), cfg.chi2.at(p));
    let first = eta_prime(a, b, Complex64::new(0.0, cfg.r1), lp);
    let second = eta_prime(a.conj(), b.conj(), Complex64::new(0.0, -cfg.r2), lp);
    first * second * lp
}

/// Summand `w(p/L) log p η_{χ₁,χ₂,ir₁}(p) η_{χ̄₁,χ̄₂,−ir₂}(p)`.
pub fn summand(cfg: &AmplifierConfig, p: u64) -> Complex64 {
    unweighted(cfg, p) * cfg.weight.eval(p as f64 / cfg.length)
}

fn counted(cfg: &AmplifierConfig, p: u64) -> bool {
    p % cfg.q == 1 % cfg.q && cfg.level() % p != 0
}

fn range(cfg: &AmplifierConfig) -> (u64, u64) {
    (cfg.length.ceil() as u64, (2.0 * cfg.length).floor() as u64)
}

/// Primes in `[lo, hi]` from a segmented sieve with the given base primes.
fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        if p * p > hi {
            break;
        }
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m <= hi {
            composite[(m - lo) as usize] = true;
            m += p;
        }
    }
    (0..len)
        .filter(|&i| !composite[i] && lo + i as u64 >= 2)
        .map(|i| lo + i as u64)
        .collect()
}

/// `A_L(r₁, r₂)` via a segmented sieve; blocks run in parallel and are reduced in order.
pub fn amplifier_sum(cfg: &AmplifierConfig) -> Result<Complex64> {
    cfg.validate()?;
    let (lo, hi) = range(cfg);
    let base = primes_up_to((hi as f64).sqrt() as u64 + 1);
    let starts: Vec<u64> = (lo..=hi).step_by(SIEVE_BLOCK as usize).collect();
    let partial: Vec<Complex64> = starts
        .par_iter()
        .map(|&start| {
            let end = (start + SIEVE_BLOCK - 1).min(hi);
            let mut acc = NeumaierComplex::default();
            for p in sieve_segment(start, end, &base) {
                if counted(cfg, p) {
                    acc.add(summand(cfg, p));
                }
            }
            acc.value()
        })
        .collect();
    let mut total = NeumaierComplex::default();
    for v in partial {
        total.add(v);
    }
    Ok(total.value())
}

/// `A_L` by trial division over every integer in range, without the sieve.
pub fn amplifier_sum_naive(cfg: &AmplifierConfig) -> Result<Complex64> {
    cfg.validate()?;
    let (lo, hi) = range(cfg);
    let mut acc = NeumaierComplex::default();
    for n in lo..=hi {
        if is_prime(n) && counted(cfg, n) {
            acc.add(summand(cfg, n));
        }
    }
    let mut total = NeumaierComplex::default();
    total.add(acc.value());
    Ok(total.value())
}

fn check_coprime_prime(p: u64, modulus: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if modulus % p == 0 {
        return Err(Error::invalid(format!("{p} divides qN = {modulus}")));
    }
    Ok(())
}

/// `b_ξ(p) = log p · η_{χ₁,χ₂,ir₁}(p) · η_{ξχ̄₁,ξχ̄₂,−ir₂}(p)` for `p ∤ qN`.
pub fn b_xi(p: u64, xi: &DirichletCharacter, cfg: &AmplifierConfig) -> Result<Complex64> {
    check_coprime_prime(p, xi.modulus() * cfg.q * cfg.level())?;
    let lp = (p as f64).ln();
    let (a, b) = (cfg.chi1.at(p), cfg.chi2.at(p));
    let x = xi.at(p);
    let first = eta_prime(a, b, Complex64::new(0.0, cfg.r1), lp);
    let second = eta_prime(x * a.conj(), x * b.conj(), Complex64::new(0.0, -cfg.r2), lp);
    Ok(lp * first * second)
}

/// One factor `L(s + i·shift, character)` of the factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorTerm {
    pub shift: f64,
    pub character: DirichletCharacter,
}

impl FactorTerm {
    /// Coefficient of `p^{−s}` in `−L′/L(s + i·shift, character)`.
    pub fn prime_coefficient(&self, p: u64) -> Complex64 {
        let lp = (p as f64).ln();
        self.character.at(p) * Complex64::new(0.0, -self.shift * lp).exp() * lp
    }
}

/// The four numerator factors
/// `L(s+i(r₁−r₂), ξ) L(s−i(r₁−r₂), ξ) L(s+i(r₁+r₂), ξχ₁χ̄₂) L(s−i(r₁+r₂), ξχ̄₁χ₂)`.
pub fn factorization_terms(xi: &DirichletCharacter, cfg: &AmplifierConfig) -> [FactorTerm; 4] {
    let (d, s) = (cfg.r1 - cfg.r2, cfg.r1 + cfg.r2);
    let mixed = cfg.chi1.mul(&cfg.chi2.conj());
    [
        FactorTerm { shift: d, character: xi.clone() },
        FactorTerm { shift: -d, character: xi.clone() },
        FactorTerm { shift: s, character: xi.mul(&mixed) },
        FactorTerm { shift: -s, character: xi.mul(&mixed.conj()) },
    ]
}

/// `|b_ξ(p) − Σ prime coefficients of the four factors|`.
pub fn factorization_check(p: u64, xi: &DirichletCharacter, cfg: &AmplifierConfig) -> Result<f64> {
    let terms = factorization_terms(xi, cfg);
    factorization_check_with(p, xi, cfg, &terms)
}

/// As [`factorization_check`] with precomputed factors.
pub fn factorization_check_with(
    p: u64,
    xi: &DirichletCharacter,
    cfg: &AmplifierConfig,
    terms: &[FactorTerm; 4],
) -> Result<f64> {
    let lhs = b_xi(p, xi, cfg)?;
    let rhs: Complex64 = terms.iter().map(|t| t.prime_coefficient(p)).sum();
    Ok((lhs - rhs).norm())
}

/// One row of the asymptotic report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRow {
    pub length: f64,
    pub value: Complex64,
    /// `Re A_L · φ(q) / (2 w̃(1) L)`.
    pub ratio: f64,
}

/// `A_L` and the normalized ratio for each length.
pub fn asymptotic_report(cfg: &AmplifierConfig, lengths: &[f64]) -> Result<Vec<AsymptoticRow>> {
    if lengths.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::invalid("lengths must be strictly increasing"));
    }
    let phi = euler_phi(cfg.q) as f64;
    let mass = cfg.weight.mass();
    lengths
        .iter()
        .map(|&l| {
            let c = cfg.at_length(l)?;
            let value = amplifier_sum(&c)?;
            Ok(AsymptoticRow {
                length: l,
                value,
                ratio: value.re * phi / (2.0 * mass * l),
            })
        })
        .collect()
}
