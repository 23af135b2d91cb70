use graphpot_core::grothendieck::{zeta_identity_checks, moduli_class, moduli_report, verify_middle, Basis};
use graphpot_core::measures::{
    betti, count_curve, count_realize, dg_multiplicity, functional_equation_holds, BettiPoly, CurveFixture,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::time::Instant;

mod common;
use common::{betti_oracle, fixture_path, oracle_counts, oracle_numerator};

#[test]
fn moduli_suite_for_genus_two_to_ten() {
    let start = Instant::now();
    for g in 2..=10 {
        assert!(verify_middle(g).unwrap(), "g={g}");
        let r = moduli_report(g).unwrap();
        for c in &r.checks {
            assert!(c.status, "g={g} {}: {}", c.name, c.detail);
        }
        for name in ["main-recursion", "polynomial-vanishing", "closed-form", "quotient-polynomial"] {
            assert!(r.checks.iter().any(|c| c.name == name), "g={g} missing {name}");
        }
        assert!(r.checks.iter().any(|c| c.name.starts_with("class-comparison")));
        assert!(r.class.is_integral() && r.times_one_plus_l.is_integral());
        let k = zeta_identity_checks(g).unwrap();
        for c in &k.checks {
            assert!(c.status, "g={g} {}: {}", c.name, c.detail);
        }
    }
    assert!(start.elapsed().as_secs_f64() < 10.0);
}

#[test]
fn betti_numbers_match_oracle() {
    assert_eq!(betti_oracle(2), vec![1, 0, 1, 4, 1, 0, 1]);
    for g in 2..=5 {
        let got = betti(&moduli_class(g).unwrap(), g).unwrap();
        assert_eq!(got, BettiPoly::from_i64(&betti_oracle(g)), "g={g}");
    }
}

#[test]
fn dg_multiplicities_count_blocks() {
    for g in 2..=10 {
        let m = dg_multiplicity(&moduli_class(g).unwrap()).unwrap();
        assert_eq!(m.len(), g);
        let mut total = BigRational::from_integer(0.into());
        for (b, v) in &m {
            let want = match b {
                Basis::Sym(i) if *i == g - 1 => 1,
                Basis::Sym(i) if *i < g - 1 => 2,
                _ => panic!("unexpected basis {b:?}"),
            };
            assert_eq!(*v, BigRational::from_integer(want.into()), "g={g} {b:?}");
            total += v;
        }
        assert_eq!(total, BigRational::from_integer((2 * g as i64 - 1).into()));
    }
}

#[test]
fn counting_routes_agree_on_fixture() {
    let text = std::fs::read_to_string(fixture_path()).unwrap();
    let fixture: CurveFixture = serde_json::from_str(&text).unwrap();
    let cd = count_curve(&fixture).unwrap();
    let (n1, n2) = oracle_counts();
    assert_eq!((n1, n2), (4, 6));
    assert_eq!(cd.point_count(1), BigInt::from(n1));
    assert_eq!(cd.point_count(2), BigInt::from(n2));
    let want: Vec<BigInt> = oracle_numerator(3, n1 as i64, n2 as i64).into_iter().map(BigInt::from).collect();
    assert_eq!(oracle_numerator(3, 4, 6), vec![1, 0, -2, 0, 9]);
    assert_eq!(cd.numerator, want);
    assert!(functional_equation_holds(&cd.numerator, 2, &BigInt::from(3), &BigInt::from(1)));
    let r = count_realize(&moduli_class(2).unwrap(), &cd).unwrap();
    assert_eq!(r.by_class, r.by_formula);
    assert_eq!(r.by_class, BigInt::from(40));
}
