use hecke_core::scalar::{rat, PkPoly, Poly, QRational};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 1..4).prop_map(|c| Poly::from_i64s(&c))
}

fn qrat() -> impl Strategy<Value = QRational> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| QRational::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn qrational_field_laws(a in qrat(), b in qrat(), c in qrat()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn qrational_evaluation_is_a_homomorphism(a in qrat(), b in qrat(), q0 in 2i64..7) {
        let z = rat(q0, 1);
        if let (Ok(x), Ok(y), Ok(xy)) = (a.specialize(&z), b.specialize(&z), a.mul(&b).specialize(&z)) {
            prop_assert_eq!(x * y, xy);
        }
    }

    #[test]
    fn kappa_substitution_commutes_with_evaluation(
        cs in prop::collection::vec(-3i64..=3, 6),
        a in -3i64..=3,
        b in -3i64..=3,
        p in 0.1f64..2.0,
    ) {
        let mut f = PkPoly::zero();
        for (idx, c) in cs.iter().enumerate() {
            f = f.add(&PkPoly::monomial(rat(*c, 1), (idx % 3) as u32, (idx / 3) as u32 + (idx % 2) as u32));
        }
        let g = f.substitute_k(&rat(a, 1), &rat(b, 2));
        let k = a as f64 * p + b as f64 / 2.0;
        let (lhs, rhs) = (g.eval_f64(p, 0.0), f.eval_f64(p, k));
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0));
    }
}
