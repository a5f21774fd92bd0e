//! The q = ω, w = 1 specialization: integer vectors, sum rules and ground-state data.

mod common;

use common::in_order;
use common::reference::{A6_ORDER, C5_ORDER, D5_ORDER};
use num_bigint::BigInt;
use tlqkz::algebra::{build, AlgebraSpec, Kind};
use tlqkz::arith::{ratio, rat, Rat};
use tlqkz::eigen::{bilinear, build_h, charpoly, left_perron, rayleigh};
use tlqkz::limits::{all_nonnegative, max_entry, rs_data_modular, rs_homogeneous, sum_entries, sum_symmetries};
use tlqkz::oracle::{asm_count, count, mixed_product, Family};
use tlqkz::patterns::Pattern;
use tlqkz::qkz::{verify_reduced, Solution, System};

fn solve(kind: Kind, rank: usize) -> (System, Solution, Vec<BigInt>) {
    let sys = System::new(AlgebraSpec::new(kind, rank)).unwrap();
    let sol = sys.solve().unwrap();
    let v = rs_homogeneous(&sol, &sys.base_pattern).unwrap();
    (sys, sol, v)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}


#[test]
fn a6_vector() {
    let (_, sol, v) = solve(Kind::A, 6);
    let v = in_order(&sol, &v, &A6_ORDER);
    assert_eq!(v, ints(&[1, 2, 1, 1, 2]));
    assert_eq!(sum_entries(&v), asm_count(3));
}

#[test]
fn b4_vector() {
    let (_, sol, v) = solve(Kind::B, 4);
    assert_eq!(in_order(&sol, &v, &["(())", "()()"]), ints(&[1, 2]));
    assert_eq!(sum_entries(&v), count(Family::AV, 5).unwrap());
    assert_eq!(max_entry(&v), count(Family::AV, 4).unwrap());
}

#[test]
fn c5_vector_and_ground_state() {
    let (sys, sol, psi) = solve(Kind::C, 5);
    assert_eq!(in_order(&sol, &psi, &C5_ORDER), ints(&[1, 2, 3, 3, 0, 1, 4, 0, 0, 0]));
    assert_eq!(sum_entries(&psi), big(14));
    assert_eq!(sum_entries(&psi), mixed_product(5));

    let h = build_h(&sys.rep).unwrap();
    assert_eq!(rayleigh(&h, &psi).unwrap(), rat(5));
    let v = left_perron(&h, &rat(5)).unwrap();
    assert_eq!(in_order(&sol, &v, &C5_ORDER), ints(&[48, 36, 28, 34, 24, 23, 25, 18, 17, 14]));
    assert_eq!(bilinear(&v, &psi), asm_count(5));

    // largest entry is the C4 sum
    let c4 = sol.specialize_down().unwrap();
    let psi4 = rs_homogeneous(&c4, &Pattern::all_open(4)).unwrap();
    assert_eq!(max_entry(&psi), sum_entries(&psi4));
    assert_eq!(sum_entries(&psi4), mixed_product(4));
}

#[test]
fn d5_vector_and_ground_state() {
    let (sys, sol, psi) = solve(Kind::D, 5);
    assert_eq!(in_order(&sol, &psi, &D5_ORDER), ints(&[1, 1, 3, 4, 2, 3, 1, 4, 2, 4]));
    assert_eq!(sum_entries(&psi), count(Family::AHT, 5).unwrap());
    assert_eq!(max_entry(&psi), big(4));

    let h = build_h(&sys.rep).unwrap();
    let lam = rayleigh(&h, &psi).unwrap();
    let v = left_perron(&h, &lam).unwrap();
    assert_eq!(in_order(&sol, &v, &D5_ORDER), ints(&[10, 10, 17, 14, 18, 17, 23, 14, 18, 25]));
    assert_eq!(bilinear(&v, &psi), asm_count(5));

    let d4 = sol.specialize_down().unwrap();
    let psi4 = rs_homogeneous(&d4, &Pattern::all_open(4)).unwrap();
    assert_eq!(sum_entries(&psi4), count(Family::AHT, 4).unwrap());
    assert_eq!(max_entry(&psi), count(Family::Csscpp, 2).unwrap());
}

#[test]
fn small_boundary_ranks() {
    for kind in [Kind::C, Kind::D] {
        let (sys, _, psi) = solve(kind, 3);
        let h = build_h(&sys.rep).unwrap();
        let lam = rayleigh(&h, &psi).unwrap();
        if kind == Kind::C {
            assert_eq!(lam, rat(3));
        }
        let v = left_perron(&h, &lam).unwrap();
        assert_eq!(bilinear(&v, &psi), asm_count(3), "{kind}");
    }
}

#[test]
fn even_c_from_odd() {
    let (_, sol, _) = solve(Kind::C, 5);
    let c4 = sol.specialize_down().unwrap();
    assert!(verify_reduced(&c4).unwrap().iter().all(|(_, bad)| bad.is_empty()));
    let psi = rs_homogeneous(&c4, &Pattern::all_open(4)).unwrap();
    let rep = build(AlgebraSpec::new(Kind::C, 4)).unwrap();
    let h = build_h(&rep).unwrap();
    assert_eq!(rayleigh(&h, &psi).unwrap(), ratio(9, 2));
    let v = left_perron(&h, &ratio(9, 2)).unwrap();
    assert_eq!(bilinear(&v, &psi), asm_count(4));
}

#[test]
fn even_d_from_odd() {
    let (_, sol, _) = solve(Kind::D, 3);
    let d2 = sol.specialize_down().unwrap();
    let psi = rs_homogeneous(&d2, &Pattern::all_open(2)).unwrap();
    assert_eq!(sum_entries(&psi), count(Family::AHT, 2).unwrap());
}

#[test]
fn sum_rules_across_ranks() {
    for n in [2, 4, 6, 8] {
        let (_, _, v) = solve(Kind::A, n);
        assert!(all_nonnegative(&v));
        assert_eq!(sum_entries(&v), asm_count(n / 2), "A{n}");
        // largest entry on the consecutive-arch pattern
        if n >= 4 {
            assert_eq!(max_entry(&v), asm_count(n / 2 - 1), "A{n}");
        }
    }
    for r in [2, 4, 6] {
        let (_, _, v) = solve(Kind::B, r);
        assert!(all_nonnegative(&v));
        assert_eq!(sum_entries(&v), count(Family::AV, r + 1).unwrap(), "B{r}");
    }
    for r in [3, 5] {
        let (_, _, v) = solve(Kind::C, r);
        assert!(all_nonnegative(&v));
        let (_, _, w) = solve(Kind::D, r);
        assert!(all_nonnegative(&w));
        assert_eq!(sum_entries(&w), count(Family::AHT, r).unwrap(), "D{r}");
    }
}

#[test]
fn rayleigh_constancy_everywhere() {
    for (kind, ranks) in [(Kind::A, &[2, 4, 6, 8][..]), (Kind::B, &[2, 4, 6]), (Kind::C, &[3, 5]), (Kind::D, &[3, 5])] {
        for &r in ranks {
            let (sys, _, psi) = solve(kind, r);
            let h = build_h(&sys.rep).unwrap();
            assert!(rayleigh(&h, &psi).is_ok(), "{kind}{r}");
        }
    }
}

#[test]
fn d_hamiltonian_mirrors_c() {
    // reflecting e_i -> e_{r-i} maps H_D onto H_C as abstract elements; the spectra
    // in the two link-pattern representations share the ground-state eigenvalue
    let c = build_h(&build(AlgebraSpec::new(Kind::C, 5)).unwrap()).unwrap();
    let d = build_h(&build(AlgebraSpec::new(Kind::D, 5)).unwrap()).unwrap();
    let (pc, pd) = (charpoly(&c), charpoly(&d));
    let at = |p: &[Rat], x: &Rat| p.iter().rev().fold(rat(0), |a, c| a * x + c);
    let (_, _, psi) = solve(Kind::D, 5);
    let lam = rayleigh(&d, &psi).unwrap();
    assert_eq!(at(&pd, &lam), rat(0));
    assert_eq!(at(&pc, &lam), rat(0));
    assert_eq!(lam, rat(5));
}

#[test]
fn parameterized_sum_is_symmetric() {
    for (kind, r) in [(Kind::A, 6), (Kind::C, 3), (Kind::D, 3)] {
        let (sys, sol, _) = solve(kind, r);
        let checks = sum_symmetries(&sys, &sol);
        assert!(!checks.is_empty(), "{kind}{r}");
        for (name, ok) in checks {
            assert!(ok, "{kind}{r} {name}");
        }
    }
}

#[test]
fn modular_data_matches_generic() {
    for (kind, r) in [(Kind::A, 6), (Kind::B, 4), (Kind::C, 5), (Kind::D, 5), (Kind::C, 3), (Kind::D, 3)] {
        let (sys, sol, v) = solve(kind, r);
        let data = rs_data_modular(&sys).unwrap();
        assert_eq!(data.vector, v, "{kind}{r}");
        match kind {
            Kind::C | Kind::D => {
                let low = sol.specialize_down().unwrap();
                let want = rs_homogeneous(&low, &Pattern::all_open(r - 1)).unwrap();
                assert_eq!(data.reduced.unwrap(), want, "{kind}{r}");
            }
            _ => assert!(data.reduced.is_none()),
        }
    }
}
