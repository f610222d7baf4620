use g2core::numerics::{q, QMatrix, Rational};
use g2core::octonion::{factor_unit, space, Octonion, OctonionKind};
use g2core::sample;
use g2core::threeform::{classify_orbit, norm_from_form, omega0, omega1, KForm, OrbitTag};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn coords(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

fn kind() -> impl Strategy<Value = OctonionKind> {
    prop_oneof![Just(OctonionKind::Division), Just(OctonionKind::Split)]
}

fn small_matrix() -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-2i64..=2, 49).prop_map(|v| QMatrix::from_fn(7, 7, |i, j| q(v[7 * i + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_and_alternativity(k in kind(), a in coords(8), b in coords(8)) {
        let (x, y) = (Octonion::from_coords(k, &a), Octonion::from_coords(k, &b));
        prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        prop_assert!(Octonion::associator(&x, &x, &y).is_zero());
        prop_assert!(Octonion::associator(&x, &y, &y).is_zero());
        prop_assert!(Octonion::associator(&x, &y, &x).is_zero());
    }

    #[test]
    fn cross_product_identities(k in kind(), x in coords(7), y in coords(7)) {
        let sp = space(k);
        let xy = sp.cross(&x, &y);
        prop_assert_eq!(sp.n(&xy, &x), q(0));
        prop_assert_eq!(sp.norm(&xy), sp.norm(&x) * sp.norm(&y) - sp.n(&x, &y) * sp.n(&x, &y));
        let lhs = sp.cross(&x, &xy);
        let (nxy, nx) = (sp.n(&x, &y), sp.norm(&x));
        let rhs: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| &nxy * a - &nx * b).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivations_preserve_cross(k in kind(), c in coords(14), x in coords(7), y in coords(7)) {
        let sp = space(k);
        let der = g2core::derivsolver::derivations_of_form(&sp.three_form());
        let d = der.combine(&c);
        let lhs = d.mul_vec(&sp.cross(&x, &y));
        let r1 = sp.cross(&d.mul_vec(&x), &y);
        let r2 = sp.cross(&x, &d.mul_vec(&y));
        let rhs: Vec<Rational> = r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_roundtrip(c in coords(35)) {
        let mut f = KForm::zero(7, 3);
        let sets: Vec<Vec<usize>> = (1..=7).flat_map(|a| (a + 1..=7).flat_map(move |b| (b + 1..=7).map(move |d| vec![a, b, d]))).collect();
        for (idx, x) in sets.iter().zip(c) {
            f.add_term(&idx.iter().map(|i| i - 1).collect::<Vec<_>>(), x);
        }
        prop_assert_eq!(KForm::from_json_str(&f.to_json().to_string()).unwrap(), f);
    }

    #[test]
    fn unit_factorization(k in kind(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample::unit_octonion(&mut rng, k);
        prop_assert_eq!(x.norm(), q(1));
        let (a, b) = factor_unit(&x).unwrap();
        prop_assert_eq!(a.mul(&b), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn orbit_is_invariant(p in small_matrix()) {
        prop_assume!(p.det() != q(0));
        prop_assert_eq!(classify_orbit(&omega0().compose(&p)), OrbitTag::SplitOrbit);
        prop_assert_eq!(classify_orbit(&omega1().compose(&p)), OrbitTag::CompactOrbit);
    }

    #[test]
    fn scaling_law(p in small_matrix()) {
        let id = QMatrix::identity(7);
        for omega in [omega0(), omega1()] {
            prop_assert_eq!(norm_from_form(&omega, &p), norm_from_form(&omega, &id).scale(&p.det()));
        }
    }
}
