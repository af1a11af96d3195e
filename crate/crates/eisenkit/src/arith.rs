//! Elementary integer arithmetic used by the character and sieve code.

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Prime factorization as `(p, e)` pairs in increasing order of `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factorize(n);
    f.len() == 1 && f[0].1 == 1
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of divisors.
pub fn divisor_count(n: u64) -> u64 {
    factorize(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

/// `base^exp mod m`.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u128;
    let mut b = (base % m) as u128;
    let m = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Smallest primitive root modulo the odd prime power `p^e`.
pub fn smallest_primitive_root(p: u64, e: u32) -> u64 {
    let pe = p.pow(e);
    let phi = pe / p * (p - 1);
    let qs: Vec<u64> = factorize(phi).into_iter().map(|(r, _)| r).collect();
    (2..pe)
        .find(|&g| gcd(g, p) == 1 && qs.iter().all(|&r| pow_mod(g, phi / r, pe) != 1))
        .unwrap_or(1)
}

/// Sieve of Eratosthenes returning all primes `<= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Modular inverse of `a` modulo `m` when it exists.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Solve `n ≡ r1 (mod m1)`, `n ≡ r2 (mod m2)` for coprime moduli.
pub fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let inv = inverse_mod(m1 % m2, m2).expect("moduli must be coprime");
    let m = m1 as u128 * m2 as u128;
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2 as i128) as u128;
    let k = diff * inv as u128 % m2 as u128;
    ((r1 as u128 + m1 as u128 * k) % m) as u64
}
