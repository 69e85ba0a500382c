use proptest::prelude::*;
use theta_core::characteristics::{pairing, parity, triple_pairing, weil_exponent};
use theta_core::hyperelliptic::{epsilon_t, Subset};
use theta_core::theta::{parity_residual, quasi_periodicity_residuals};
use theta_core::*;

fn characteristic(genus: usize) -> impl Strategy<Value = Characteristic> {
    (
        prop::sample::select(vec![1u32, 2, 3, 4, 6, 12]),
        prop::collection::vec(-30i64..30, genus),
        prop::collection::vec(-30i64..30, genus),
    )
        .prop_map(move |(d, t, b)| Characteristic::new(genus, d, &t, &b).unwrap())
}

fn half(genus: usize) -> impl Strategy<Value = HalfChar> {
    (0u32..1 << (2 * genus)).prop_map(move |c| HalfChar::from_code(genus, c))
}

proptest! {
    #[test]
    fn addition_is_an_abelian_group(x in characteristic(3), y in characteristic(3), z in characteristic(3)) {
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.add(&y).unwrap().add(&z).unwrap(), x.add(&y.add(&z).unwrap()).unwrap());
        prop_assert_eq!(x.add(&Characteristic::zero(3)).unwrap(), x.clone());
        prop_assert!(x.add(&x.negate()).unwrap().is_zero());
        prop_assert!(x.scale(x.order() as i64).is_zero());
        prop_assert_eq!(x.scale(3), x.add(&x).unwrap().add(&x).unwrap());
    }

    #[test]
    fn weil_pairing_is_alternating(x in characteristic(2), y in characteristic(2)) {
        let n = 12;
        let e = weil_exponent(&x, &y, n).unwrap();
        let f = weil_exponent(&y, &x, n).unwrap();
        prop_assert_eq!((e + f) % n, 0);
        prop_assert_eq!(weil_exponent(&x, &x, n).unwrap(), 0);
    }

    #[test]
    fn half_pairing_laws(m in half(3), a in half(3), b in half(3)) {
        prop_assert_eq!(pairing(m, a).unwrap(), pairing(a, m).unwrap());
        prop_assert_eq!(pairing(m, m).unwrap(), 0);
        prop_assert_eq!(pairing(m, a.xor(b)).unwrap(), pairing(m, a).unwrap() ^ pairing(m, b).unwrap());
        prop_assert_eq!(triple_pairing(m, a, b).unwrap(), triple_pairing(b, m, a).unwrap());
        // e(m + a) = e(m) e(a) (-1)^{|m, a|}
        let sign = if pairing(m, a).unwrap() == 0 { 1 } else { -1 };
        prop_assert_eq!(parity(m.xor(a)), parity(m) * parity(a) * sign);
    }

    #[test]
    fn epsilon_is_additive_over_symmetric_difference(t in 0u32..128, r in 0u32..128) {
        let (t, r) = (Subset::from_mask(3, t), Subset::from_mask(3, r));
        prop_assert_eq!(epsilon_t(&t.symmetric_difference(&r)), epsilon_t(&t).xor(epsilon_t(&r)));
    }

    #[test]
    fn characteristic_serde_round_trip(x in characteristic(3)) {
        let js = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Characteristic>(&js).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quasi_periodicity_and_parity(seed in any::<u64>(), c in characteristic(2), m in half(2),
                                    n in prop::collection::vec(-2i64..=2, 2), k in prop::collection::vec(-2i64..=2, 2)) {
        let mut r = theta_core::random::rng(seed);
        let tau: RiemannMatrix64 = theta_core::random::random_tau(2, &mut r).unwrap();
        let z = theta_core::random::random_argument(2, 0.8, &mut r);
        let cfg = EvalConfig::default();
        prop_assert!(quasi_periodicity_residuals(&c, &z, &n, &k, &tau, &cfg).unwrap().max() < 1e-8);
        prop_assert!(parity_residual(m, &z, &tau, &cfg).unwrap() < 1e-8);
    }
}
