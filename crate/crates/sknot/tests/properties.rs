use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

use sknot::algebra::RingSpec;
use sknot::equivariant::{EquivariantComplex, MPoly, PolyIdeal};
use sknot::invariants::{gamma, gamma_closed_form_atoms, gamma_function, h_field};
use sknot::scomplex::{atom, tensor};
use sknot::twobridge::{build_two_bridge_complex, double_twist_parameter, lattice_counts, two_bridge_signature, KnotSpec};

fn two_bridge(max_p: i64) -> impl Strategy<Value = (i64, i64)> {
    (1..=(max_p - 1) / 2)
        .prop_flat_map(|k| {
            let p = 2 * k + 1;
            (Just(p), 1..p)
        })
        .prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
}

fn knot() -> impl Strategy<Value = KnotSpec> {
    let leaf = prop_oneof![
        Just(KnotSpec::Unknot),
        two_bridge(41).prop_map(|(p, q)| KnotSpec::TwoBridge(p, q)),
        (1..6i64, 1..6i64).prop_map(|(a, b)| KnotSpec::DoubleTwist(a, b)),
        (2..9i64, 2..9i64)
            .prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
            .prop_map(|(p, q)| KnotSpec::Torus(p, q)),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(KnotSpec::mirror),
            (inner.clone(), inner).prop_map(|(a, b)| KnotSpec::sum(a, b)),
        ]
    })
}

// direct count over the closed box
fn lattice_oracle(k1: i64, k2: i64, p: i64, q: i64) -> (u64, u64) {
    let (mut n1, mut n2) = (0, 0);
    for a in -k1..=k1 {
        for b in -k2..=k2 {
            if (a + q * b).rem_euclid(p) != 0 {
                continue;
            }
            let (ia, ib) = (a.abs() < k1, b.abs() < k2);
            if ia && ib {
                n1 += 1;
            } else if ia || ib {
                n2 += 1;
            }
        }
    }
    (n1, n2)
}

proptest! {
    #[test]
    fn lattice_counts_match_enumeration(p in 2i64..80, q in -80i64..80, k1 in 1i64..40, k2 in 1i64..40) {
        let counts = lattice_counts(k1, k2, p, q);
        prop_assert_eq!(counts, lattice_oracle(k1, k2, p, q));
        prop_assert_eq!(counts.0 % 2, 1);
        prop_assert_eq!(counts.1 % 2, 0);
    }

    #[test]
    fn knot_expressions_round_trip(k in knot()) {
        let text = k.to_string();
        prop_assert_eq!(KnotSpec::parse(&text).unwrap(), k);
    }

    #[test]
    fn ideal_canonical_form_is_stable(
        terms in proptest::collection::vec((-3i64..4, 0i64..3, -4i64..5), 1..5),
        shift in -3i64..4,
    ) {
        let vars = ["T", "x"];
        let lau = [true, false];
        let mut g = MPoly::zero();
        for (e, f, c) in &terms {
            g = g.add(&MPoly::monomial(*c, vec![*e, *f]));
        }
        let a = PolyIdeal::new(&vars, &lau, false, vec![g.clone()]);
        let again = PolyIdeal::new(&vars, &lau, false, a.gens.clone());
        prop_assert_eq!(&again, &a);
        // units of the coefficient ring do not change the ideal
        let unit = MPoly::monomial(-1, vec![shift, 0]);
        let b = PolyIdeal::new(&vars, &lau, false, vec![g.mul(&unit), g]);
        prop_assert_eq!(b, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn catalog_complexes_are_consistent((p, q) in two_bridge(41)) {
        let c = build_two_bridge_complex(p, q).unwrap().complex;
        prop_assert!(c.validate().passed());
        let sigma = two_bridge_signature(p, q);
        prop_assert_eq!(c.euler_characteristic(), sigma / 2);
        let h = h_field(&c, RingSpec::Generic).unwrap();
        prop_assert_eq!(h, -sigma / 2);
        prop_assert_eq!(h_field(&c.dual(), RingSpec::Generic).unwrap(), -h);
        prop_assert!(gamma_function(&c, -2, h.max(0) + 2).unwrap().is_monotone());
        prop_assert!(EquivariantComplex::new(&c).squares_to_zero());
    }

    #[test]
    fn h_is_additive((p, q) in two_bridge(21), (r, s) in two_bridge(21), flip in any::<bool>()) {
        let a = build_two_bridge_complex(p, q).unwrap().complex;
        let mut b = build_two_bridge_complex(r, s).unwrap().complex;
        if flip {
            b = b.dual();
        }
        let t = tensor(&a, &b).unwrap();
        prop_assert!(t.validate().passed());
        let h = |c| h_field(c, RingSpec::Generic).unwrap();
        prop_assert_eq!(h(&t), h(&a) + h(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_form_matches_tensor(pairs in proptest::collection::vec((1i64..4, 1i64..4), 1..4)) {
        let ts: Vec<BigRational> = pairs.iter().map(|&(m, n)| double_twist_parameter(m, n)).collect();
        let mut c = atom(&ts[0]).unwrap();
        for t in &ts[1..] {
            c = tensor(&c, &atom(t).unwrap()).unwrap();
        }
        for i in -1..=ts.len() as i64 + 1 {
            prop_assert_eq!(gamma(&c, i).unwrap(), gamma_closed_form_atoms(&ts, i));
        }
    }
}
