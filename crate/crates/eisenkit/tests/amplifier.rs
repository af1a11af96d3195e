use eisenkit::amplifier::*;
use eisenkit::special_functions::bump_weight;
use eisenkit::DirichletCharacter;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};

fn ch(label: &str) -> DirichletCharacter {
    label.parse().unwrap()
}

#[test]
fn eta_examples() {
    let one = DirichletCharacter::trivial();
    assert!((eta(&one, &one, Complex64::new(0.0, 0.0), 12) - 6.0).norm() < 1e-14);
    let t = 2.3;
    let v = eta(&one, &one, Complex64::new(0.0, t), 101);
    assert!((v - 2.0 * (t * 101f64.ln()).cos()).norm() < 1e-14);
    let (c1, c2) = (ch("5:1"), ch("7:2"));
    let s = Complex64::new(0.0, 4.1);
    let p = 3u64;
    let direct: Complex64 = (0..=3u32)
        .map(|k| {
            let a = p.pow(k);
            let b = p.pow(3 - k);
            c1.at(a) * c2.at(b) * (s * ((b as f64).ln() - (a as f64).ln())).exp()
        })
        .sum();
    assert!((eta(&c1, &c2, s, 27) - direct).norm() < 1e-13);
}

#[test]
fn eta_three_term_recurrence() {
    let (c1, c2) = (ch("5:1"), ch("7:2"));
    let psi = c1.mul(&c2);
    let s = Complex64::new(0.0, 9.0);
    for p in eisenkit::arith::primes_up_to(1000) {
        if p == 5 || p == 7 {
            continue;
        }
        let e = |k: u32| eta(&c1, &c2, s, p.pow(k));
        let kmax = if p < 10 { 6 } else { 2 };
        for k in 1..kmax {
            let rhs = e(1) * e(k) - psi.at(p) * e(k - 1);
            assert!((e(k + 1) - rhs).norm() < 1e-10);
        }
    }
}

#[test]
fn amplifier_sum_small_example() {
    let cfg = AmplifierConfig::new(1, 10.0, 0.0, 0.0).unwrap();
    let want: f64 = [11u64, 13, 17, 19]
        .iter()
        .map(|&p| 4.0 * bump_weight(p as f64 / 10.0) * (p as f64).ln())
        .sum();
    let got = amplifier_sum(&cfg).unwrap();
    assert!((got - want).norm() < 1e-14 * want);
}

#[test]
fn sieve_matches_naive_oracle_exactly() {
    for (q, l, r1, r2) in [(1, 10.0, 0.0, 0.0), (3, 977.0, 20.0, 20.0), (4, 5000.0, 1.5, 2.5), (5, 10_000.0, 7.0, 7.0)] {
        let cfg = AmplifierConfig::with_characters(q, l, r1, r2, ch("7:2"), ch("11:3")).unwrap();
        assert_eq!(amplifier_sum(&cfg).unwrap(), amplifier_sum_naive(&cfg).unwrap());
        let cfg = AmplifierConfig::new(q, l, r1, r2).unwrap();
        assert_eq!(amplifier_sum(&cfg).unwrap(), amplifier_sum_naive(&cfg).unwrap());
    }
}

#[test]
fn unitary_sum_is_nonnegative() {
    for r in [0.0, 3.0, 20.0] {
        let cfg = AmplifierConfig::with_characters(3, 20_000.0, r, r, ch("7:2"), ch("5:1")).unwrap();
        let v = amplifier_sum(&cfg).unwrap();
        assert!(v.re >= 0.0 && v.im.abs() < 1e-9 * v.re.max(1.0));
    }
}

#[test]
fn b_xi_examples() {
    let cfg = AmplifierConfig::new(3, 100.0, 0.0, 0.0).unwrap();
    let xi = ch("3:1");
    let principal = DirichletCharacter::principal(3).unwrap();
    assert!((b_xi(7, &principal, &cfg).unwrap() - 4.0 * 7f64.ln()).norm() < 1e-14);
    assert!((b_xi(7, &xi, &cfg).unwrap() - 4.0 * xi.at(7) * 7f64.ln()).norm() < 1e-14);
    let cfg = AmplifierConfig::with_characters(3, 100.0, 1.3, 2.9, ch("7:2"), ch("5:1")).unwrap();
    for p in [101u64, 131, 173] {
        let w = bump_weight(p as f64 / cfg.length);
        assert!((b_xi(p, &principal, &cfg).unwrap() * w - summand(&cfg, p)).norm() < 1e-13);
    }
    assert!(b_xi(3, &xi, &cfg).is_err());
    assert!(b_xi(9, &xi, &cfg).is_err());
}

#[test]
fn factorization_identity_at_primes() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let primes = eisenkit::arith::primes_up_to(10_000);
    let mut worst = 0.0f64;
    for q in [3u64, 4, 5, 7, 8, 9, 10] {
        let cfg0 = AmplifierConfig::with_characters(q, 100.0, 0.0, 0.0, ch("1:0"), ch("1:0")).unwrap();
        for xi in DirichletCharacter::all(q).unwrap() {
            for _ in 0..4 {
                let mut cfg = cfg0.clone();
                cfg.r1 = rng.gen_range(-30.0..30.0);
                cfg.r2 = rng.gen_range(-30.0..30.0);
                let terms = factorization_terms(&xi, &cfg);
                for &p in primes.iter().filter(|&&p| q % p != 0) {
                    worst = worst.max(factorization_check_with(p, &xi, &cfg, &terms).unwrap());
                }
            }
        }
    }
    assert!(worst < 1e-10, "{worst:e}");
    let cfg = AmplifierConfig::new(1, 100.0, 0.0, 0.0).unwrap();
    assert!(factorization_check(11, &DirichletCharacter::trivial(), &cfg).unwrap() < 1e-14);
    let xi = ch("5:2");
    let a = AmplifierConfig::with_characters(5, 100.0, 0.3, 0.7, ch("7:2"), ch("11:3")).unwrap();
    let mut b = a.clone();
    (b.r1, b.r2) = (a.r2, a.r1);
    for p in [13u64, 101, 9973] {
        let da = factorization_check(p, &xi, &a).unwrap();
        let db = factorization_check(p, &xi, &b).unwrap();
        assert!(da < 1e-10 && db < 1e-10);
    }
}

#[test]
fn asymptotic_trend_q3() {
    let cfg = AmplifierConfig::new(3, 1e4, 20.0, 20.0).unwrap();
    let rows = asymptotic_report(&cfg, &[1e4, 1e5]).unwrap();
    let last = rows.last().unwrap();
    assert!((0.7..=1.3).contains(&last.ratio), "{rows:?}");
    assert!(asymptotic_report(&cfg, &[1e5, 1e4]).is_err());
}

#[test]
fn principal_zero_shift_ratio() {
    let cfg = AmplifierConfig::new(1, 1e4, 0.0, 0.0).unwrap();
    let rows = asymptotic_report(&cfg, &[1e4, 1e5, 1e6]).unwrap();
    for r in &rows {
        assert!((r.ratio - 2.0).abs() < 0.05, "{rows:?}");
    }
}

#[test]
fn invalid_configs() {
    assert!(AmplifierConfig::new(0, 100.0, 0.0, 0.0).is_err());
    assert!(AmplifierConfig::new(3, 5.0, 0.0, 0.0).is_err());
    assert!(AmplifierConfig::with_characters(5, 100.0, 0.0, 0.0, ch("5:1"), ch("1:0")).is_err());
}
