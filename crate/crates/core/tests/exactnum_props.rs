use num_bigint::BigInt;
use proptest::prelude::*;
use srgclique::exactnum::{rat, ArithOp, QuadExt};

fn radicand() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(8), Just(12), Just(17), Just(50), 1u64..500]
}

fn quad(d: u64) -> impl Strategy<Value = QuadExt> {
    (-400i64..400, 1i64..40, -400i64..400, 1i64..40)
        .prop_map(move |(an, ad, bn, bd)| QuadExt::new(rat(an, ad), rat(bn, bd), d))
}

fn pair() -> impl Strategy<Value = (QuadExt, QuadExt)> {
    radicand().prop_flat_map(|d| (quad(d), quad(d)))
}

fn triple() -> impl Strategy<Value = (QuadExt, QuadExt, QuadExt)> {
    radicand().prop_flat_map(|d| (quad(d), quad(d), quad(d)))
}

proptest! {
    #[test]
    fn ring_laws((x, y, z) in triple()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
    }

    #[test]
    fn division_inverts_multiplication((x, y) in pair()) {
        prop_assume!(!y.is_zero());
        let q = x.checked(&y, ArithOp::Div).unwrap();
        prop_assert_eq!(&q * &y, x);
    }

    #[test]
    fn norm_is_product_with_conjugate((x, _y) in pair()) {
        prop_assert_eq!(&x * &x.conjugate(), QuadExt::rational(x.norm()));
    }

    #[test]
    fn floor_sandwich((x, _y) in pair()) {
        let f = QuadExt::from(x.floor());
        let f1 = &f + &QuadExt::integer(1);
        prop_assert!((&x - &f).signum() >= 0);
        prop_assert!((&f1 - &x).signum() > 0);
        prop_assert_eq!(x.ceil(), -(-&x).floor());
    }

    #[test]
    fn frac_in_unit_interval((x, _y) in pair()) {
        let fr = x.frac();
        prop_assert!(fr.signum() >= 0);
        prop_assert!((&QuadExt::integer(1) - &fr).signum() > 0);
        prop_assert_eq!(&fr + &QuadExt::from(x.floor()), x);
    }

    #[test]
    fn floor_agrees_with_float_away_from_integers((x, _y) in pair()) {
        let f = x.to_f64();
        prop_assume!((f - f.round()).abs() > 1e-6);
        prop_assert_eq!(x.floor(), BigInt::from(f.floor() as i64));
    }

    #[test]
    fn order_is_total_and_transitive((x, y, z) in triple()) {
        let xy = x.try_cmp(&y).unwrap();
        prop_assert_eq!(xy, y.try_cmp(&x).unwrap().reverse());
        let yz = y.try_cmp(&z).unwrap();
        if xy.is_le() && yz.is_le() {
            prop_assert!(x.try_cmp(&z).unwrap().is_le());
        }
        prop_assert_eq!(xy, (&x - &y).signum().cmp(&0));
    }

    #[test]
    fn normalization_is_canonical(an in -50i64..50, bn in -50i64..50, s in 1u64..8, d in 1u64..60) {
        // b*sqrt(s^2 d) and (b s)*sqrt(d) are the same number.
        let x = QuadExt::new(rat(an, 1), rat(bn, 1), s * s * d);
        let y = QuadExt::new(rat(an, 1), rat(bn * s as i64, 1), d);
        prop_assert_eq!(x, y);
    }
}

#[test]
fn floor_of_sqrt_is_isqrt() {
    for n in 0u64..5000 {
        let f = QuadExt::sqrt(n).floor();
        let r = (n as f64).sqrt().floor() as i64;
        let r = if (r + 1) * (r + 1) <= n as i64 { r + 1 } else if r * r > n as i64 { r - 1 } else { r };
        assert_eq!(f, BigInt::from(r), "n = {n}");
        assert!(QuadExt::sqrt(n).signum() >= 0);
    }
}
