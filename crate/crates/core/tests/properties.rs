//! Randomized algebraic property suites.

use proptest::prelude::*;
use superjack::exact::{AlphaPoly, AlphaRat, Rat};
use superjack::ring::{Exchange, SPoly, SuperMono};
use superjack::spart::{dominance_compare, list_sector, Dominance, Sector, SuperPartition, Variant};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d))
}

fn alpha_poly(max_deg: usize) -> impl Strategy<Value = AlphaPoly> {
    prop::collection::vec(small_rat(), 0..=max_deg).prop_map(AlphaPoly::from_coeffs)
}

fn alpha_rat() -> impl Strategy<Value = AlphaRat> {
    (alpha_poly(3), alpha_poly(3))
        .prop_filter("denominator nonzero", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| AlphaRat::new(n, d).unwrap())
}

fn nonzero_alpha_rat() -> impl Strategy<Value = AlphaRat> {
    alpha_rat().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms_hold_exactly(a in alpha_rat(), b in alpha_rat(), c in alpha_rat()) {
        // associativity and commutativity
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        // distributivity
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // identities and inverses
        prop_assert_eq!(&a + &AlphaRat::zero(), a.clone());
        prop_assert_eq!(&a * &AlphaRat::one(), a.clone());
        prop_assert_eq!(&a - &a, AlphaRat::zero());
    }

    #[test]
    fn nonzero_elements_invert(a in nonzero_alpha_rat()) {
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, AlphaRat::one());
    }

    #[test]
    fn normalization_is_canonical(n1 in alpha_poly(3), d1 in alpha_poly(2), s in alpha_poly(2)) {
        // scaling numerator and denominator by a common factor does not
        // change the canonical representative
        prop_assume!(!d1.is_zero() && !s.is_zero());
        let plain = AlphaRat::new(n1.clone(), d1.clone()).unwrap();
        let scaled = AlphaRat::new(&n1 * &s, &d1 * &s).unwrap();
        prop_assert_eq!(plain.clone(), scaled);
        // canonical form: monic denominator, coprime parts
        prop_assert!(plain.den().leading().map_or(false, |c| c.is_one()));
        let g = plain.num().gcd(plain.den());
        prop_assert!(g.is_one() || plain.num().is_zero());
    }

    #[test]
    fn rendering_round_trips(a in alpha_rat()) {
        let s = a.to_string();
        let back = superjack::exact::parse_alpha_rat(&s).unwrap();
        prop_assert_eq!(back, a);
    }
}

fn grass_mono(n: usize) -> impl Strategy<Value = SPoly> {
    (0u32..(1 << n), 0u32..(1 << n)).prop_map(move |(phi, theta)| {
        SPoly::from_term(
            SuperMono {
                g: superjack::ring::GrassMono { phi, theta },
                z: vec![0; n],
            },
            AlphaRat::one(),
        )
    })
}

fn super_poly(n: usize) -> impl Strategy<Value = SPoly> {
    prop::collection::vec(
        (
            0u32..(1 << n),
            0u32..(1 << n),
            prop::collection::vec(0u32..3, n),
            -5i64..=5,
        ),
        1..5,
    )
    .prop_map(move |terms| {
        let mut p = SPoly::zero(n);
        for (phi, theta, z, c) in terms {
            p.add_term(
                SuperMono {
                    g: superjack::ring::GrassMono { phi, theta },
                    z,
                },
                AlphaRat::from_int(c),
            );
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grassmann_product_associates_with_signs(
        a in grass_mono(4),
        b in grass_mono(4),
        c in grass_mono(4),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn exchange_operators_are_involutions(f in super_poly(3), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        for which in [Exchange::K, Exchange::KPhi, Exchange::KTheta, Exchange::Full] {
            let twice = f
                .exchange(i, j, which)
                .unwrap()
                .exchange(i, j, which)
                .unwrap();
            prop_assert_eq!(&twice, &f);
        }
    }

    #[test]
    fn symmetrized_output_is_symmetric(f in super_poly(3)) {
        let s = f.symmetrize_full();
        prop_assert!(s.is_symmetric());
        for i in 0..2 {
            prop_assert_eq!(&s.exchange(i, i + 1, Exchange::Full).unwrap(), &s);
        }
    }

    #[test]
    fn fermion_operators_commute_with_exchanges(f in super_poly(3)) {
        use superjack::charges::fermion_operator;
        for which in 0..3 {
            for i in 0..2 {
                let a = fermion_operator(which, &f.exchange(i, i + 1, Exchange::Full).unwrap());
                let b = fermion_operator(which, &f)
                    .exchange(i, i + 1, Exchange::Full)
                    .unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn serialization_round_trips(f in super_poly(3)) {
        let text = serde_json::to_string(&f).unwrap();
        let back: SPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dominance_is_a_partial_order(seed in 0usize..1000) {
        // random triples from a fixed mid-sized sector
        let sec = Sector::new(3, [1, 2, 1]);
        let members: Vec<SuperPartition> =
            list_sector(sec, sec.n as usize + sec.m3(), Variant::SAA).unwrap();
        let pick = |k: usize| &members[(seed * (k + 7) + 3 * k) % members.len()];
        let (a, b, c) = (pick(0), pick(1), pick(2));
        prop_assert_eq!(dominance_compare(a, a).unwrap(), Dominance::Equal);
        let ab = dominance_compare(a, b).unwrap();
        let ba = dominance_compare(b, a).unwrap();
        match ab {
            Dominance::Greater => prop_assert_eq!(ba, Dominance::Less),
            Dominance::Less => prop_assert_eq!(ba, Dominance::Greater),
            Dominance::Equal => prop_assert_eq!(a, b),
            Dominance::Incomparable => prop_assert_eq!(ba, Dominance::Incomparable),
        }
        if ab == Dominance::Greater && dominance_compare(b, c).unwrap() == Dominance::Greater {
            prop_assert_eq!(dominance_compare(a, c).unwrap(), Dominance::Greater);
        }
    }
}
