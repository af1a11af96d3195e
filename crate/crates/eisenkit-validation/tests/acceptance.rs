//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Instant;

use eisenkit::amplifier::{self, AmplifierConfig};
use eisenkit::arith::{gcd, primes_up_to};
use eisenkit::eisenstein::{
    archimedean_constant_factor, functional_equation_residual_with, CoefficientTable, EisensteinParams, EvalOptions,
};
use eisenkit::special_functions::{bessel_k, bessel_k_scaled, tanh_sinh, BesselRequest};
use eisenkit::supnorm::{self, ScanConfig, ScanReport};
use eisenkit::DirichletCharacter;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FE_TOL: f64 = 1e-6;
const FE_EPS: f64 = 1e-8;
const FE_SECONDS: f64 = 60.0;
const QUAD_TOL: f64 = 1e-8;
const GAUSS_TOL: f64 = 1e-10;
const GAUSS_MAX_Q: u64 = 500;
const HECKE_TOL: f64 = 1e-12;
const HECKE_N: usize = 10_000;
const FACTOR_TOL: f64 = 1e-10;
const FACTOR_MAX_P: u64 = 10_000;
const FACTOR_PAIRS: usize = 20;
const AMP_LOW: f64 = 0.7;
const AMP_HIGH: f64 = 1.3;
const AMP_R: f64 = 20.0;
const AMP_LENGTHS: [f64; 3] = [1e4, 1e5, 1e6];
const AMP_MIN_MONOTONE: usize = 2;
const AMP_SECONDS: f64 = 120.0;
const BESSEL_TOL: f64 = 1e-10;
const BESSEL_RATIO: f64 = 10.0;
const BESSEL_HALF_TOL: f64 = 1e-13;
const SLOPE_MAX: f64 = 0.475;
const SCAN_T0: [f64; 4] = [20.0, 40.0, 80.0, 160.0];
const SCAN_SECONDS: f64 = 900.0;
const THREAD_TOL: f64 = 1e-12;
const THREADS: usize = 2;

struct Outcome {
    pass: bool,
    detail: String,
    /// Numerical outputs compared bitwise between runs.
    values: Vec<f64>,
}

fn ch(label: &str) -> DirichletCharacter {
    label.parse().unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn functional_equation() -> Outcome {
    let start = Instant::now();
    let pairs = [("1:0", "1:0"), ("1:0", "4:1"), ("3:1", "4:1"), ("5:1", "5:3")];
    let opts = EvalOptions {
        eps: FE_EPS,
        ..EvalOptions::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut values = Vec::new();
    for (a, b) in pairs {
        for t in [5.0, 10.0] {
            let p = EisensteinParams::at_t(ch(a), ch(b), t).unwrap();
            for _ in 0..20 {
                let x = rng.gen_range(-0.5..0.5);
                let y = rng.gen_range(0.5..=3.0);
                values.push(functional_equation_residual_with(&p, x, y, &opts).unwrap());
            }
        }
    }
    let worst = values.iter().cloned().fold(0.0, f64::max);
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: worst < FE_TOL && secs < FE_SECONDS,
        detail: format!("max residual {worst:.2e} < {FE_TOL:e} over {} points, {secs:.1} s < {FE_SECONDS} s", values.len()),
        values,
    }
}

fn real_place_quadrature() -> Outcome {
    let mut values = Vec::new();
    let mut worst = 0.0f64;
    for s in [c(0.75, 0.0), c(1.0, 0.0), c(1.0, 2.0)] {
        let quad = tanh_sinh(|th: f64| ((2.0 * s - 1.0) * th.cos().ln()).exp(), -FRAC_PI_2, FRAC_PI_2, 1e-14);
        let got = archimedean_constant_factor(s, 0).unwrap();
        worst = worst.max((got - quad).norm() / quad.norm());
        values.extend([got.re, got.im]);
    }
    Outcome {
        pass: worst < QUAD_TOL,
        detail: format!("max relative error {worst:.2e} < {QUAD_TOL:e}"),
        values,
    }
}

fn gauss_sums() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for q in 1..=GAUSS_MAX_Q {
        for chi in DirichletCharacter::all(q).unwrap().into_iter().filter(|c| c.is_primitive()) {
            worst = worst.max((chi.gauss_sum().unwrap().norm_sqr() - q as f64).abs());
            count += 1;
        }
    }
    Outcome {
        pass: worst < GAUSS_TOL,
        detail: format!("max ||G|^2 - q| {worst:.2e} < {GAUSS_TOL:e} over {count} primitive characters"),
        values: vec![worst],
    }
}

fn hecke_relations() -> Outcome {
    let sets = [("1:0", "1:0", 5.0), ("1:0", "4:1", 7.5), ("3:1", "4:1", 10.0), ("5:1", "5:3", 2.0), ("13:5", "7:2", 20.0)];
    let mut worst = 0.0f64;
    let mut values = Vec::new();
    for (a, b, t) in sets {
        let p = EisensteinParams::at_t(ch(a), ch(b), t).unwrap();
        let table = CoefficientTable::build(&p, HECKE_N).unwrap();
        let lam = |n: usize| table.get(n).unwrap();
        for m in 1..=HECKE_N {
            for n in m..=HECKE_N / m {
                if gcd(m as u64, n as u64) == 1 {
                    worst = worst.max((lam(m * n) - lam(m) * lam(n)).norm());
                }
            }
        }
        let psi = p.central_character();
        for q in primes_up_to(HECKE_N as u64) {
            if p.level.is_multiple_of(q) {
                continue;
            }
            let q = q as usize;
            let mut k = q;
            while k * q <= HECKE_N {
                let rhs = lam(q) * lam(k) - psi.at(q as u64) * lam(k / q);
                worst = worst.max((lam(k * q) - rhs).norm());
                k *= q;
            }
        }
        values.extend([lam(HECKE_N).re, lam(HECKE_N).im]);
    }
    Outcome {
        pass: worst < HECKE_TOL,
        detail: format!("max deviation {worst:.2e} < {HECKE_TOL:e} over 5 sets, n <= {HECKE_N}"),
        values,
    }
}

fn factorization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let primes = primes_up_to(FACTOR_MAX_P);
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    for q in [3u64, 4, 5, 8] {
        for _ in 0..FACTOR_PAIRS {
            let r1 = rng.gen_range(-50.0..50.0);
            let r2 = rng.gen_range(-50.0..50.0);
            let cfg = AmplifierConfig::new(q, 100.0, r1, r2).unwrap();
            for xi in DirichletCharacter::all(q).unwrap() {
                let terms = amplifier::factorization_terms(&xi, &cfg);
                for &p in primes.iter().filter(|&&p| !q.is_multiple_of(p)) {
                    worst = worst.max(amplifier::factorization_check_with(p, &xi, &cfg, &terms).unwrap());
                    checked += 1;
                }
            }
        }
    }
    Outcome {
        pass: worst < FACTOR_TOL,
        detail: format!("max deviation {worst:.2e} < {FACTOR_TOL:e} over {checked} prime checks"),
        values: vec![worst],
    }
}

fn amplifier_trend() -> Outcome {
    let start = Instant::now();
    let mut values = Vec::new();
    let mut in_band = true;
    let mut monotone = 0;
    let mut parts = Vec::new();
    for q in [1u64, 3, 4] {
        let cfg = AmplifierConfig::new(q, AMP_LENGTHS[0], AMP_R, AMP_R).unwrap();
        let rows = amplifier::asymptotic_report(&cfg, &AMP_LENGTHS).unwrap();
        let ratios: Vec<f64> = rows.iter().map(|r| r.ratio).collect();
        let last = *ratios.last().unwrap();
        in_band &= (AMP_LOW..=AMP_HIGH).contains(&last);
        let dist: Vec<f64> = ratios.iter().map(|r| (r - 1.0).abs()).collect();
        let mono = dist.windows(2).all(|w| w[1] < w[0]);
        monotone += mono as usize;
        parts.push(format!(
            "q={q}: {} ({})",
            ratios.iter().map(|r| format!("{r:.5}")).collect::<Vec<_>>().join(" "),
            if mono { "monotone" } else { "not monotone" }
        ));
        values.extend(ratios);
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: in_band && monotone >= AMP_MIN_MONOTONE && secs < AMP_SECONDS,
        detail: format!(
            "{}; band [{AMP_LOW}, {AMP_HIGH}] {}; monotone in {monotone} of 3 (need {AMP_MIN_MONOTONE}); {secs:.1} s",
            parts.join("; "),
            if in_band { "ok" } else { "violated" }
        ),
        values,
    }
}

fn bessel() -> Outcome {
    let path = format!("{}/../eisenkit/tests/data/bessel_k_oracle.json", env!("CARGO_MANIFEST_DIR"));
    let data: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let rows = data["rows"].as_array().unwrap();
    let mut oracle = 0.0f64;
    let mut values = Vec::new();
    for r in rows {
        let f = |k: &str| r[k].as_f64().unwrap();
        let req = BesselRequest {
            order: c(f("nu_re"), f("nu_im")),
            argument: f("x"),
            target_error: 1e-13,
        };
        let got = bessel_k(&req).unwrap();
        let want = c(f("re"), f("im"));
        oracle = oracle.max((got - want).norm() / want.norm());
        values.extend([got.re, got.im]);
    }
    let mut ratio = 0.0f64;
    for t in [0.0, 5.0, 20.0, 50.0] {
        let first = 1.0 + PI * t / 2.0;
        for k in 0..40 {
            let x = first * 1.1f64.powi(k);
            let v = bessel_k_scaled(c(0.0, t), x, 1e-13).unwrap();
            ratio = ratio.max((v.mantissa.norm().ln() + v.log_scale + 0.5 * x.ln() + x).exp());
        }
    }
    let mut half = 0.0f64;
    for x in [1e-3, 0.1, 1.0, 3.3, 25.0, 90.0] {
        let got = bessel_k(&BesselRequest::new(c(0.5, 0.0), x)).unwrap();
        let want = (PI / (2.0 * x)).sqrt() * (-x).exp();
        half = half.max((got - want).norm() / want);
    }
    Outcome {
        pass: rows.len() == 1000 && oracle < BESSEL_TOL && ratio <= BESSEL_RATIO && half < BESSEL_HALF_TOL,
        detail: format!(
            "oracle {oracle:.2e} < {BESSEL_TOL:e} on {} rows; regime ratio {ratio:.3} <= {BESSEL_RATIO}; K_1/2 {half:.2e} < {BESSEL_HALF_TOL:e}",
            rows.len()
        ),
        values,
    }
}

fn level_one_scans() -> Vec<ScanReport> {
    let cfg = ScanConfig::default();
    SCAN_T0
        .iter()
        .map(|&t| {
            let p = EisensteinParams::at_t(DirichletCharacter::trivial(), DirichletCharacter::trivial(), t).unwrap();
            supnorm::scan(&p, &cfg).unwrap()
        })
        .collect()
}

fn supnorm_exponent() -> Outcome {
    let start = Instant::now();
    let reports = level_one_scans();
    let slope = supnorm::exponent_fit(&reports).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let mut values = vec![slope];
    for r in &reports {
        values.extend(r.grid.iter().map(|g| g.abs_f));
    }
    Outcome {
        pass: slope <= SLOPE_MAX && secs < SCAN_SECONDS,
        detail: format!(
            "slope {slope:.4} <= {SLOPE_MAX} (reference 0.375), sup {}; {secs:.1} s < {SCAN_SECONDS} s",
            reports.iter().map(|r| format!("{:.4}", r.supremum)).collect::<Vec<_>>().join(" ")
        ),
        values,
    }
}

type Criterion = (&'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 8] = [
    ("1 functional equation", functional_equation),
    ("2 real-place quadrature", real_place_quadrature),
    ("3 Gauss sums", gauss_sums),
    ("4 Hecke relations", hecke_relations),
    ("5 factorization at primes", factorization),
    ("6 amplifier trend", amplifier_trend),
    ("7 K-Bessel", bessel),
    ("8 sup-norm exponent", supnorm_exponent),
];

fn pool(n: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap()
}

fn report(name: &str, pass: bool, detail: &str) -> bool {
    println!("{} criterion {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

fn main() {
    let fixed = pool(THREADS);
    let first: Vec<Outcome> = CRITERIA.iter().map(|(_, f)| fixed.install(f)).collect();
    let mut all = true;
    for ((name, _), o) in CRITERIA.iter().zip(&first) {
        all &= report(name, o.pass, &o.detail);
    }

    let second: Vec<Vec<f64>> = CRITERIA.iter().map(|(_, f)| fixed.install(f).values).collect();
    let differing: Vec<&str> = CRITERIA
        .iter()
        .zip(first.iter().zip(&second))
        .filter(|(_, (a, b))| {
            a.values.len() != b.len() || a.values.iter().zip(b.iter()).any(|(x, y)| x.to_bits() != y.to_bits())
        })
        .map(|((name, _), _)| *name)
        .collect();
    let single = pool(1).install(level_one_scans);
    let many = pool(4).install(level_one_scans);
    let mut spread = 0.0f64;
    for (a, b) in single.iter().zip(&many) {
        for (g, h) in a.grid.iter().zip(&b.grid) {
            spread = spread.max((g.abs_f - h.abs_f).abs());
        }
    }
    let same_shape = single.iter().zip(&many).all(|(a, b)| a.grid.len() == b.grid.len());
    let pass = differing.is_empty() && same_shape && spread <= THREAD_TOL;
    all &= report(
        "9 determinism",
        pass,
        &format!(
            "repeat run at {THREADS} threads: {}; |F| spread between 1 and 4 threads {spread:.2e} <= {THREAD_TOL:e}",
            if differing.is_empty() { "identical".to_string() } else { format!("differs in {}", differing.join(", ")) }
        ),
    );
    if !all {
        std::process::exit(1);
    }
}
