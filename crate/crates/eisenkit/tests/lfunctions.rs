use std::f64::consts::PI;

use eisenkit::lfunctions::{
    completed_lambda, dirichlet_l, hurwitz_zeta, lambda_ratio, local_factor, root_number, LValueRequest,
};
use eisenkit::{DirichletCharacter, Error};
use num_complex::Complex64;
use serde_json::Value;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn load(name: &str) -> Value {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn oracle_character_tables_match_enumeration() {
    let data = load("l_oracle.json");
    for ch in data["characters"].as_array().unwrap() {
        let q = ch["q"].as_u64().unwrap();
        let chi = DirichletCharacter::new(q, ch["index"].as_u64().unwrap()).unwrap();
        for (n, v) in ch["values"].as_array().unwrap().iter().enumerate() {
            let want = c(v[0].as_f64().unwrap(), v[1].as_f64().unwrap());
            assert!((chi.at(n as u64) - want).norm() < 1e-12, "{} at {n}", chi.label());
        }
    }
}

#[test]
fn l_values_match_frozen_oracle() {
    let data = load("l_oracle.json");
    let mut worst = 0.0f64;
    for r in data["rows"].as_array().unwrap() {
        let f = |k: &str| r[k].as_f64().unwrap();
        let chi = DirichletCharacter::new(r["q"].as_u64().unwrap(), r["index"].as_u64().unwrap()).unwrap();
        let s = c(f("s_re"), f("s_im"));
        let got = dirichlet_l(s, &chi).unwrap();
        let want = c(f("re"), f("im"));
        let err = (got - want).norm() / want.norm().max(1.0);
        worst = worst.max(err);
        assert!(err < 1e-10, "{} at {s}: got {got}, want {want}", chi.label());
    }
    eprintln!("worst L error {worst:e}");
}

#[test]
fn classical_values() {
    let z2 = dirichlet_l(c(2.0, 0.0), &DirichletCharacter::trivial()).unwrap();
    assert!((z2 - PI * PI / 6.0).norm() < 1e-14);
    let chi4 = DirichletCharacter::new(4, 1).unwrap();
    let l1 = dirichlet_l(c(1.0, 0.0), &chi4).unwrap();
    assert!((l1 - PI / 4.0).norm() < 1e-14);
    let z0 = dirichlet_l(c(0.0, 0.0), &DirichletCharacter::trivial()).unwrap();
    assert!((z0 + 0.5).norm() < 1e-14);
    let zm1 = dirichlet_l(c(-1.0, 0.0), &DirichletCharacter::trivial()).unwrap();
    assert!((zm1 + 1.0 / 12.0).norm() < 1e-14);
    assert!((hurwitz_zeta(c(2.0, 0.0), 0.5) - PI * PI / 2.0).norm() < 1e-13);
}

#[test]
fn euler_product_agrees_at_large_real_part() {
    let chi = DirichletCharacter::new(13, 5).unwrap();
    let s = c(6.0, 3.0);
    let primes = eisenkit::arith::primes_up_to(2000);
    let prod: Complex64 = primes.iter().map(|&p| local_factor(s, &chi, p)).product();
    assert!((prod - dirichlet_l(s, &chi).unwrap()).norm() < 1e-14);
}

#[test]
fn completed_functional_equation() {
    let mut chars = vec![DirichletCharacter::trivial()];
    for (q, i) in [(3, 1), (4, 1), (5, 1), (5, 2), (7, 2), (8, 3), (12, 3), (13, 5)] {
        chars.push(DirichletCharacter::new(q, i).unwrap());
    }
    for chi in &chars {
        let w = root_number(chi).unwrap();
        assert!((w.norm() - 1.0).abs() < 1e-13);
        for s in [c(0.3, 2.0), c(0.5, 14.0), c(2.0, -7.0), c(0.8, 150.0)] {
            let lhs = completed_lambda(s, chi).unwrap();
            let rhs = w * completed_lambda(c(1.0, 0.0) - s, &chi.conj()).unwrap();
            assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1e-300), "{} at {s}", chi.label());
        }
    }
}

#[test]
fn lambda_ratio_is_consistent_and_finite_at_height() {
    let chi = DirichletCharacter::new(5, 2).unwrap();
    let s = c(0.0, 3.5);
    let direct = completed_lambda(2.0 * s, &chi).unwrap() / completed_lambda(2.0 * s + 1.0, &chi).unwrap();
    assert!((lambda_ratio(s, &chi).unwrap() - direct).norm() < 1e-12);
    let far = lambda_ratio(c(0.0, 900.0), &DirichletCharacter::trivial()).unwrap();
    assert!(far.norm().is_finite() && far.norm() > 0.0);
}

#[test]
fn poles_and_invalid_inputs_are_rejected() {
    let one = c(1.0, 0.0);
    assert!(matches!(dirichlet_l(one, &DirichletCharacter::trivial()), Err(Error::Pole { .. })));
    assert!(matches!(
        dirichlet_l(one, &DirichletCharacter::principal(6).unwrap()),
        Err(Error::Pole { .. })
    ));
    assert!(matches!(
        lambda_ratio(c(0.0, 0.0), &DirichletCharacter::trivial()),
        Err(Error::Pole { .. })
    ));
    let imprimitive = DirichletCharacter::new(8, 1).unwrap();
    if !imprimitive.is_primitive() {
        assert!(matches!(completed_lambda(c(2.0, 0.0), &imprimitive), Err(Error::InvalidInput(_))));
    }
    assert!(matches!(
        dirichlet_l(c(0.5, 5000.0), &DirichletCharacter::trivial()),
        Err(Error::UnsupportedRegime(_))
    ));
    let req = LValueRequest { s: c(2.0, 0.0), character: DirichletCharacter::trivial(), completed: true };
    assert!((req.evaluate().unwrap() - PI.recip() * PI * PI / 6.0).norm() < 1e-14);
}
