use k3sym::census::galois_canonical;
use k3sym::cyclotomic::Cyc;
use k3sym::e8::{enumerate_roots, inner, reflect, Isometry, LatticeVec};
use k3sym::index::{signature_g, spin_number, spin_vector, total_defect, FixedPointData, SpinVector, Surface};
use k3sym::kummer::{pair, KummerClass, GENERATORS};
use k3sym::reps::{decompose, e8_census};
use k3sym::sgnperm::{involution_class, SignedPerm};
use k3sym::{CycNum, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn element(seed: u64) -> SignedPerm {
    SignedPerm::random(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn conductor() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 4, 5, 7, 8, 9, 12, 15])
}

fn cyc_in(n: u32) -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-12i64..=12, 1i64..=6), n as usize).prop_map(move |c| {
        let terms: Vec<(i64, Rational)> =
            c.iter().enumerate().map(|(k, &(a, b))| (k as i64, Rational::new(a.into(), b.into()))).collect();
        Cyc::from_terms(n, &terms)
    })
}

fn triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    conductor().prop_flat_map(|n| (cyc_in(n), cyc_in(n), cyc_in(n)))
}

fn lattice_vec() -> impl Strategy<Value = LatticeVec> {
    prop::collection::vec((0usize..240, -3i32..=3), 1..4).prop_map(|terms| {
        let roots = enumerate_roots();
        terms.iter().fold(LatticeVec::ZERO, |acc, &(i, k)| acc + roots[i].scale(k))
    })
}

fn fixed_point_data() -> impl Strategy<Value = FixedPointData> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13]).prop_flat_map(|p| {
        let e = 1..i64::from(p);
        (
            prop::collection::vec((e.clone(), e.clone()), 0..8),
            prop::collection::vec((0u32..4, -8i64..=8, e), 0..3),
        )
            .prop_map(move |(iso, surf)| {
                let surfaces = surf.into_iter().map(|(genus, selfint, c)| Surface { genus, selfint, c }).collect();
                FixedPointData::new(p, iso, surfaces).expect("exponents are nonzero")
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        let n = a.conductor();
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &CycNum::zero(n));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycNum::one(n));
        }
    }

    #[test]
    fn galois_is_a_ring_map((a, b, _) in triple(), k in 1i64..40) {
        let n = i64::from(a.conductor());
        prop_assume!(num_integer::gcd(k, n) == 1);
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
    }

    #[test]
    fn signed_perms_are_isometries(seed in any::<u64>(), u in lattice_vec(), v in lattice_vec()) {
        let g = element(seed);
        prop_assert_eq!(inner(&g.apply(&u), &g.apply(&v)), inner(&u, &v));
    }

    #[test]
    fn reflections_are_isometries(r in 0usize..240, u in lattice_vec(), v in lattice_vec()) {
        let r = &enumerate_roots()[r];
        prop_assert_eq!(inner(&reflect(r, &u), &reflect(r, &v)), inner(&u, &v));
        prop_assert_eq!(reflect(r, &reflect(r, &u)), u);
    }

    #[test]
    fn involution_class_is_conjugation_invariant(seed in any::<u64>(), h in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = loop {
            let x = SignedPerm::random(&mut rng);
            if x.order() == 2 && !x.is_identity() && x.trace() != -8 {
                break x;
            }
        };
        let rep = involution_class(&g).unwrap();
        prop_assert_eq!(g.trace(), 8 - 2 * i64::from(if rep.negated { 8 - rep.length } else { rep.length }));
        let conj = g.conjugate_by(&element(h));
        prop_assert_eq!(involution_class(&conj).unwrap().class, rep.class);
    }

    #[test]
    fn odd_order_elements_land_in_the_census(seed in any::<u64>(), p in prop::sample::select(vec![3u32, 5, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = loop {
            let x = SignedPerm::random(&mut rng);
            let o = x.order();
            if o % p == 0 && o > 1 {
                break x.pow(o / p);
            }
        };
        let d = decompose(&g, p).unwrap();
        prop_assert!(e8_census(p).unwrap().contains(&d), "{} not listed", d);
        prop_assert_eq!(d.charpoly(), g.charpoly());
    }

    #[test]
    fn signature_two_paths_agree(data in fixed_point_data()) {
        let mut sum = CycNum::zero(data.p);
        for k in 1..i64::from(data.p) {
            sum = &sum + &signature_g(&data.power(k).unwrap()).unwrap();
        }
        prop_assert_eq!(sum.as_rational(), Some(total_defect(&data).unwrap()));
    }

    #[test]
    fn spin_vectors_round_trip(
        half in prop::sample::select(vec![1usize, 2, 3, 5, 6]).prop_flat_map(|h| prop::collection::vec(-5i64..=5, h)),
        d0 in -4i64..=4,
    ) {
        // length 2h + 1 is an odd prime
        let mut d = vec![2 * d0];
        d.extend(&half);
        d.extend(half.iter().rev());
        let v = SpinVector::new(d).unwrap();
        let back = SpinVector::from_cyc(&v.to_cyc(), v.index()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn spin_numbers_are_real(data in fixed_point_data()) {
        // realness is what makes d_k = d_{p−k} after normalization
        let s = spin_number(&data).unwrap();
        prop_assert!(s.is_real(), "{}", s);
        if let Ok(v) = spin_vector(&data, -16) {
            prop_assert_eq!(v.to_cyc(), s);
        }
    }

    #[test]
    fn galois_canonical_is_power_invariant(data in fixed_point_data(), j in 1i64..13) {
        prop_assume!(j % i64::from(data.p) != 0);
        let a = galois_canonical(&data).unwrap();
        let b = galois_canonical(&data.power(j).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn kummer_pairing_is_symmetric(
        x in prop::array::uniform28(-3i64..=3),
        y in prop::array::uniform28(-3i64..=3),
    ) {
        let (x, y) = (KummerClass::from_coeffs(x), KummerClass::from_coeffs(y));
        prop_assert_eq!(pair(&x, &y), pair(&y, &x));
        prop_assert_eq!(pair(&(x + y), &y), pair(&x, &y) + pair(&y, &y));
        prop_assert_eq!(GENERATORS, 28);
    }
}
