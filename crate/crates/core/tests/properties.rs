use proptest::prelude::*;
use tlqkz::arith::{ratio, CycloQ, Fp, MultiPoly, QLaurent, Rat, Ring, P31};
use tlqkz::patterns::{catalan, enumerate_closed, enumerate_open, open_count, Pattern};
use tlqkz::serial::{poly_from_json, poly_to_json};

const NV: usize = 3;

fn qlaurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-3i32..4, -4i64..5), 0..4)
        .prop_map(|ts| QLaurent::from_terms(ts.into_iter().map(|(k, c)| (k, ratio(c, 1)))))
}

fn rat() -> impl Strategy<Value = Rat> {
    (-9i64..10, 1i64..5).prop_map(|(n, d)| ratio(n, d))
}

fn qpoly() -> impl Strategy<Value = MultiPoly<QLaurent>> {
    prop::collection::vec((prop::collection::vec(-2i32..3, NV), qlaurent()), 0..4)
        .prop_map(|ts| ts.into_iter().fold(MultiPoly::zero(NV), |a, (e, c)| &a + &MultiPoly::monomial(e, c)))
}

fn rpoly() -> impl Strategy<Value = MultiPoly<Rat>> {
    prop::collection::vec((prop::collection::vec(0i32..3, NV), rat()), 0..5)
        .prop_map(|ts| ts.into_iter().fold(MultiPoly::zero(NV), |a, (e, c)| &a + &MultiPoly::monomial(e, c)))
}

proptest! {
    #[test]
    fn ring_axioms(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(NV), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in qpoly(), b in qpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn rational_division(a in rpoly(), b in rpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitution_inverse(a in qpoly(), k in -3i32..4) {
        // w1 -> q^k w1 then w1 -> q^-k w1
        let e = [1, 0, 0];
        let there = a.substitute(0, &QLaurent::q_pow(k), &e).unwrap();
        prop_assert_eq!(there.substitute(0, &QLaurent::q_pow(-k), &e).unwrap(), a.clone());
        // w2 -> 1/w2 is an involution
        let inv = [0, -1, 0];
        let there = a.substitute(1, &QLaurent::one(), &inv).unwrap();
        prop_assert_eq!(there.substitute(1, &QLaurent::one(), &inv).unwrap(), a);
    }

    #[test]
    fn divided_difference_leibniz(f in rpoly(), g in rpoly(), i in 0usize..NV - 1) {
        let lhs = (&f * &g).divided_difference(i).unwrap();
        let rhs = &(&f.divided_difference(i).unwrap() * &g) + &(&f.swap(i, i + 1) * &g.divided_difference(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_kills_symmetric(f in rpoly(), i in 0usize..NV - 1) {
        let sym = &f + &f.swap(i, i + 1);
        prop_assert!(sym.divided_difference(i).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip(a in qpoly(), b in rpoly()) {
        prop_assert_eq!(poly_from_json::<QLaurent>(&poly_to_json(&a)).unwrap(), a);
        prop_assert_eq!(poly_from_json::<Rat>(&poly_to_json(&b)).unwrap(), b);
    }

    #[test]
    fn omega_is_a_homomorphism(a in qlaurent(), b in qlaurent()) {
        prop_assert_eq!(a.mul(&b).at_omega(), a.at_omega().mul(&b.at_omega()));
        prop_assert_eq!(a.add(&b).at_omega(), a.at_omega().add(&b.at_omega()));
        let w = Fp::<P31>::omega();
        prop_assert_eq!(Fp::eval_q(&a.mul(&b), w), Fp::eval_q(&a, w).mul(&Fp::eval_q(&b, w)));
    }

    #[test]
    fn cyclo_inverse(a in -6i64..7, b in -6i64..7) {
        let x = CycloQ::new(ratio(a, 1), ratio(b, 1));
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.mul(&x.inv().unwrap()), CycloQ::one());
    }

    #[test]
    fn closed_patterns(n in 1usize..6, pick in any::<prop::sample::Index>()) {
        let idx = enumerate_closed(n);
        prop_assert_eq!(idx.len() as u64, catalan(n as u64));
        let p = idx.pattern(pick.index(idx.len())).clone();
        prop_assert_eq!(Pattern::parse(&p.text()).unwrap(), p.clone());
        prop_assert_eq!(Pattern::from_partners(p.partners().to_vec()).unwrap(), p.clone());
        let mut r = p.clone();
        for _ in 0..2 * n {
            r = r.rotate().unwrap();
            prop_assert!(idx.get(&r).is_some());
        }
        prop_assert_eq!(r, p);
    }

    #[test]
    fn open_patterns(r in 1usize..8, pick in any::<prop::sample::Index>()) {
        let idx = enumerate_open(r);
        prop_assert_eq!(idx.len() as u64, open_count(r as u64));
        let p = idx.pattern(pick.index(idx.len())).clone();
        prop_assert_eq!(Pattern::parse(&p.text()).unwrap(), p.clone());
        for i in p.opens() {
            let q = p.remove_open(i).unwrap();
            prop_assert_eq!(q.len(), r - 1);
            prop_assert_eq!(q.opens().len(), p.opens().len() - 1);
        }
    }
}
