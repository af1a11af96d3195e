//! Dirichlet characters stored as exact discrete-log data.
//!
//! A character modulo `q = ∏ p^e` is described by one index per local factor
//! `(ℤ/p^e)^×`.  Odd prime powers use the smallest primitive root as generator;
//! `2^e` with `e ≥ 3` uses the pair `(−1, 5)`.  The global index is the
//! lexicographic position of the exponent vector, primes in increasing order.
//! Values are kept as exponents `m` with `χ(n) = e(m / order)` and are turned
//! into floating point numbers only on evaluation.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::{crt_pair, divisors, euler_phi, factorize, gcd, smallest_primitive_root, valuation};
use crate::error::{Error, Result};

/// Largest modulus accepted by [`DirichletCharacter::new`].
pub const MAX_MODULUS: u64 = 10_000_000;

const ZERO: u32 = u32::MAX;

/// One local factor `χ^{(p)}` of a character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalComponent {
    pub prime: u64,
    pub exponent: u32,
    /// Index into the character group of `(ℤ/p^e)^×`.
    pub index: u64,
}

impl LocalComponent {
    fn modulus(&self) -> u64 {
        self.prime.pow(self.exponent)
    }

    fn group_order(&self) -> u64 {
        let pe = self.modulus();
        pe / self.prime * (self.prime - 1)
    }

    /// Conductor exponent of this local factor.
    pub fn conductor_exponent(&self) -> u32 {
        if self.index == 0 {
            return 0;
        }
        let e = self.exponent;
        if self.prime == 2 {
            if e == 2 {
                return 2;
            }
            let half = 1u64 << (e - 2);
            let (k1, k2) = (self.index / half, self.index % half);
            if k2 == 0 {
                return if k1 == 1 { 2 } else { 0 };
            }
            return e - valuation(k2, 2);
        }
        e - valuation(self.index, self.prime).min(e - 1)
    }

    /// Exponent numerators `c(u)` with `χ^{(p)}(u) = e(c(u)/φ(p^e))`, one per residue.
    fn log_table(&self) -> Vec<u32> {
        let pe = self.modulus() as usize;
        let phi = self.group_order();
        let mut table = vec![ZERO; pe];
        if pe == 1 {
            table[0] = 0;
            return table;
        }
        if self.prime == 2 {
            let e = self.exponent;
            if e == 1 {
                table[1] = 0;
                return table;
            }
            let half = if e >= 3 { 1u64 << (e - 2) } else { 1 };
            let (k1, k2) = if e >= 3 {
                (self.index / half, self.index % half)
            } else {
                (self.index, 0)
            };
            let mut five = 1u64;
            for b in 0..half {
                for (a, sign) in [(0u64, five), (1u64, pe as u64 - five)] {
                    let num = (k1 * a * (phi / 2) + k2 * b * (phi / half)) % phi;
                    table[sign as usize] = num as u32;
                }
                five = five * 5 % pe as u64;
            }
            return table;
        }
        let g = smallest_primitive_root(self.prime, self.exponent);
        let mut x = 1u64;
        for j in 0..phi {
            table[x as usize] = ((self.index as u128 * j as u128) % phi as u128) as u32;
            x = x * g % pe as u64;
        }
        table
    }
}

/// Local epsilon factor at the central point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocalEpsilonData {
    pub prime: u64,
    pub conductor_exponent: u32,
    pub epsilon_half: Complex64,
}

/// A Dirichlet character modulo `q`.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    modulus: u64,
    index: u64,
    components: Vec<LocalComponent>,
    parity: i32,
    order: u64,
    table: Arc<[u32]>,
    roots: Arc<[Complex64]>,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.index == other.index
    }
}

impl Eq for DirichletCharacter {}

/// `e(m/d)` with exact values at multiples of a quarter turn.
pub fn root_of_unity(m: u64, d: u64) -> Complex64 {
    let m = m % d;
    if (4 * m) % d == 0 {
        return match 4 * m / d {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let r = if 2 * m > d {
        -((d - m) as f64 / d as f64)
    } else {
        m as f64 / d as f64
    };
    let (s, c) = (2.0 * std::f64::consts::PI * r).sin_cos();
    Complex64::new(c, s)
}

fn component_radix(p: u64, e: u32) -> u64 {
    if p == 2 {
        if e == 1 {
            1
        } else {
            1 << (e - 1)
        }
    } else {
        p.pow(e) / p * (p - 1)
    }
}

impl DirichletCharacter {
    /// The `index`-th character modulo `q`; index 0 is the principal character.
    pub fn new(q: u64, index: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::invalid("modulus must be positive"));
        }
        if q > MAX_MODULUS {
            return Err(Error::invalid(format!("modulus {q} exceeds {MAX_MODULUS}")));
        }
        let phi = euler_phi(q);
        if index >= phi {
            return Err(Error::invalid(format!(
                "index {index} out of range for modulus {q} (phi = {phi})"
            )));
        }
        let factors = factorize(q);
        let mut rest = index;
        let mut indices = vec![0u64; factors.len()];
        for (slot, &(p, e)) in factors.iter().enumerate().rev() {
            let radix = component_radix(p, e);
            indices[slot] = rest % radix;
            rest /= radix;
        }
        let components = factors
            .iter()
            .zip(indices)
            .map(|(&(prime, exponent), index)| LocalComponent { prime, exponent, index })
            .collect();
        Ok(Self::from_components(q, index, components))
    }

    /// The principal character modulo `q`.
    pub fn principal(q: u64) -> Result<Self> {
        Self::new(q, 0)
    }

    /// The character modulo 1.
    pub fn trivial() -> Self {
        Self::new(1, 0).expect("modulus 1 is valid")
    }

    fn from_components(q: u64, index: u64, components: Vec<LocalComponent>) -> Self {
        let phi = euler_phi(q);
        let mut table = vec![0u32; q as usize];
        let mut coprime = vec![true; q as usize];
        for c in &components {
            let pe = c.modulus();
            let local = c.log_table();
            let weight = phi / c.group_order();
            for n in 0..q {
                let v = local[(n % pe) as usize];
                if v == ZERO {
                    coprime[n as usize] = false;
                } else {
                    let cur = table[n as usize] as u64;
                    table[n as usize] = ((cur + v as u64 * weight) % phi) as u32;
                }
            }
        }
        let mut g = phi;
        for n in 0..q as usize {
            if coprime[n] {
                g = gcd(g, table[n] as u64);
            }
        }
        let order = phi / g;
        for n in 0..q as usize {
            table[n] = if coprime[n] { (table[n] as u64 / g) as u32 } else { ZERO };
        }
        let roots: Vec<Complex64> = (0..order).map(|m| root_of_unity(m, order)).collect();
        let minus_one = if q <= 2 { 0 } else { table[(q - 1) as usize] as u64 };
        let parity = if minus_one == 0 { 1 } else { -1 };
        Self {
            modulus: q,
            index,
            components,
            parity,
            order,
            table: table.into(),
            roots: roots.into(),
        }
    }

    /// Build the character modulo `q` whose value on units is `e(f(n))`, where `f`
    /// returns a fraction `(num, den)`.  `f` must describe a genuine character.
    fn from_fractions(q: u64, f: impl Fn(u64) -> (u64, u64)) -> Self {
        let factors = factorize(q);
        let mut components = Vec::with_capacity(factors.len());
        let mut index = 0u64;
        for &(p, e) in &factors {
            let pe = p.pow(e);
            let rest = q / pe;
            let lift = |u: u64| if rest == 1 { u % pe } else { crt_pair(u % pe, pe, 1, rest) };
            let scaled = |u: u64, scale: u64| {
                let (num, den) = f(lift(u));
                num * scale / den % scale
            };
            let radix = component_radix(p, e);
            let local_index = if p == 2 {
                match e {
                    1 => 0,
                    2 => scaled(pe - 1, 2),
                    _ => {
                        let half = 1u64 << (e - 2);
                        scaled(pe - 1, 2) * half + scaled(5, half)
                    }
                }
            } else {
                scaled(smallest_primitive_root(p, e), radix)
            };
            index = index * radix + local_index;
            components.push(LocalComponent { prime: p, exponent: e, index: local_index });
        }
        Self::from_components(q, index, components)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Position in the enumeration of characters modulo [`modulus`](Self::modulus).
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn components(&self) -> &[LocalComponent] {
        &self.components
    }

    /// Value at −1.
    pub fn parity(&self) -> i32 {
        self.parity
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Exponent `m` with `χ(n) = e(m / order)`, or `None` when `gcd(n, q) > 1`.
    pub fn exponent(&self, n: i64) -> Option<u64> {
        let r = n.rem_euclid(self.modulus as i64) as usize;
        match self.table[r] {
            ZERO => None,
            m => Some(m as u64),
        }
    }

    /// `χ(n)` as a complex number.
    pub fn evaluate(&self, n: i64) -> Complex64 {
        match self.exponent(n) {
            None => Complex64::new(0.0, 0.0),
            Some(m) => self.roots[m as usize],
        }
    }

    /// `χ(n)` for a nonnegative argument.
    pub fn at(&self, n: u64) -> Complex64 {
        match self.table[(n % self.modulus) as usize] {
            ZERO => Complex64::new(0.0, 0.0),
            m => self.roots[m as usize],
        }
    }

    fn fraction(&self, n: u64) -> Option<(u64, u64)> {
        self.exponent(n as i64).map(|m| (m, self.order))
    }

    /// Smallest `f | q` such that the character factors through `(ℤ/f)^×`.
    pub fn conductor(&self) -> u64 {
        self.components
            .iter()
            .map(|c| c.prime.pow(c.conductor_exponent()))
            .product()
    }

    /// Conductor by testing every divisor of the modulus directly.
    pub fn conductor_by_divisor_search(&self) -> u64 {
        let q = self.modulus;
        for f in divisors(q) {
            let mut ok = true;
            let mut seen = vec![None::<u64>; f as usize];
            for n in 0..q {
                if gcd(n, q) != 1 {
                    continue;
                }
                let m = self.exponent(n as i64);
                let slot = &mut seen[(n % f) as usize];
                match slot {
                    None => *slot = m,
                    Some(prev) if Some(*prev) != m => {
                        ok = false;
                        break;
                    }
                    _ => {}
                }
            }
            if ok {
                return f;
            }
        }
        q
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// The primitive character inducing this one.
    pub fn primitive(&self) -> Self {
        let f = self.conductor();
        if f == self.modulus {
            return self.clone();
        }
        let q = self.modulus;
        Self::from_fractions(f, |n| {
            let lift = (0..q / f)
                .map(|k| n + k * f)
                .find(|&m| gcd(m, q) == 1)
                .expect("unit lifts exist");
            self.fraction(lift).expect("lift is a unit")
        })
    }

    /// The complex conjugate character.
    pub fn conj(&self) -> Self {
        Self::from_fractions(self.modulus, |n| {
            let (m, d) = self.fraction(n).expect("unit");
            ((d - m) % d, d)
        })
    }

    /// Product character modulo `lcm` of the two moduli.
    pub fn mul(&self, other: &Self) -> Self {
        let q = self.modulus / gcd(self.modulus, other.modulus) * other.modulus;
        Self::from_fractions(q, |n| {
            let (m1, d1) = self.fraction(n).expect("unit");
            let (m2, d2) = other.fraction(n).expect("unit");
            let d = d1 / gcd(d1, d2) * d2;
            ((m1 * (d / d1) + m2 * (d / d2)) % d, d)
        })
    }

    /// `Σ_{u mod q} χ(u) e(u/q)` for a primitive character.
    pub fn gauss_sum(&self) -> Result<Complex64> {
        if !self.is_primitive() {
            return Err(Error::invalid(format!(
                "Gauss sum requires a primitive character (modulus {}, conductor {})",
                self.modulus,
                self.conductor()
            )));
        }
        Ok(twisted_sum(self.modulus, |u| self.fraction(u), 1))
    }

    /// Local factor `χ^{(p)}` evaluated at `u`, where `p^e ‖ q`.
    pub fn component_value(&self, p: u64, u: i64) -> Complex64 {
        let Some(c) = self.components.iter().find(|c| c.prime == p) else {
            return Complex64::new(1.0, 0.0);
        };
        let pe = c.modulus();
        let u = u.rem_euclid(pe as i64) as u64;
        if u % p == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let rest = self.modulus / pe;
        let n = if rest == 1 { u } else { crt_pair(u, pe, 1, rest) };
        self.evaluate(n as i64)
    }

    /// `∏_{ℓ ≠ p} χ^{(ℓ)}(p)`, the value of the idelic character at a uniformizer at `p`.
    pub fn uniformizer_value(&self, p: u64) -> Complex64 {
        let Some(c) = self.components.iter().find(|c| c.prime == p) else {
            return self.at(p);
        };
        let pe = c.modulus();
        let rest = self.modulus / pe;
        if rest == 1 {
            return Complex64::new(1.0, 0.0);
        }
        self.evaluate(crt_pair(1, pe, p % rest, rest) as i64)
    }

    /// Conductor exponent of the local factor at `p`.
    pub fn conductor_exponent(&self, p: u64) -> u32 {
        self.components
            .iter()
            .find(|c| c.prime == p)
            .map_or(0, |c| c.conductor_exponent())
    }

    /// `ε(1/2, χ_p)` for the primitive character attached to `self`.
    pub fn local_epsilon(&self, p: u64) -> LocalEpsilonData {
        let prim = self.primitive();
        let a = prim.conductor_exponent(p);
        if a == 0 {
            return LocalEpsilonData {
                prime: p,
                conductor_exponent: 0,
                epsilon_half: Complex64::new(1.0, 0.0),
            };
        }
        let pa = p.pow(a);
        let rest = prim.modulus / pa;
        let lift = |u: u64| if rest == 1 { u } else { crt_pair(u, pa, 1, rest) };
        let sum = twisted_sum(pa, |u| prim.fraction(lift(u)), -1);
        let unif = prim.uniformizer_value(p).powu(a);
        LocalEpsilonData {
            prime: p,
            conductor_exponent: a,
            epsilon_half: sum * unif / (pa as f64).sqrt(),
        }
    }

    /// Compact `q:index` label.
    pub fn label(&self) -> String {
        format!("{}:{}", self.modulus, self.index)
    }

    /// Every character modulo `q` in enumeration order.
    pub fn all(q: u64) -> Result<Vec<Self>> {
        let phi = euler_phi(q.max(1));
        (0..phi).map(|k| Self::new(q, k)).collect()
    }
}

impl std::str::FromStr for DirichletCharacter {
    type Err = Error;

    /// Parse the `q:index` syntax.
    fn from_str(s: &str) -> Result<Self> {
        let (q, k) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("character '{s}' is not of the form q:index")))?;
        let q: u64 = q
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad modulus in '{s}'")))?;
        let k: u64 = k
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad index in '{s}'")))?;
        Self::new(q, k)
    }
}

impl std::fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// `Σ_{u mod m} e(frac(u)) e(sign·u/m)` with exact angle reduction and compensated summation.
fn twisted_sum(m: u64, frac: impl Fn(u64) -> Option<(u64, u64)>, sign: i64) -> Complex64 {
    let mut acc = NeumaierComplex::default();
    for u in 0..m {
        let Some((num, den)) = frac(u) else { continue };
        let d = den as u128 * m as u128;
        let add = if sign >= 0 { u as u128 * den as u128 } else { (m - u) as u128 % m as u128 * den as u128 };
        let total = (num as u128 * m as u128 + add) % d;
        let g = gcd_u128(total, d);
        acc.add(root_of_unity((total / g) as u64, (d / g) as u64));
    }
    acc.value()
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierComplex {
    sum: Complex64,
    comp: Complex64,
}

impl NeumaierComplex {
    pub fn add(&mut self, x: Complex64) {
        self.sum.re = neumaier_step(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = neumaier_step(self.sum.im, x.im, &mut self.comp.im);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn neumaier_step(sum: f64, x: f64, comp: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}
