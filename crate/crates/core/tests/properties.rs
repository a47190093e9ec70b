use octolab::algebra::{BiOctonion, Octonion};
use octolab::heisenberg::{h_bracket, h_dagger, h_multiply, HeisenbergElement};
use octolab::xproduct::{torsion_tensor, x_product, xy_product, UnitPoint};
use octolab::Rational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i128..=20, 1i128..=6).prop_map(|(p, q)| Rational::new(p, q))
}

fn octonion() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(rational()).prop_map(Octonion::new)
}

fn quaternionic() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform4(rational()).prop_map(|[a, b, c, d]| {
        let mut k = [Rational::ZERO; 8];
        (k[0], k[1], k[2], k[4]) = (a, b, c, d);
        Octonion::new(k)
    })
}

/// Inverse stereographic projection of a rational point of `Q^7` from `-1`:
/// `((1 - |v|^2) + 2v) / (1 + |v|^2)` has norm exactly 1.
fn unit_from(v: [Rational; 7]) -> UnitPoint {
    let n: Rational = v.iter().map(|x| *x * *x).sum();
    let d = Rational::ONE + n;
    let mut k = [Rational::ZERO; 8];
    k[0] = (Rational::ONE - n) / d;
    for (i, x) in v.iter().enumerate() {
        k[i + 1] = Rational::int(2) * *x / d;
    }
    UnitPoint::new(Octonion::new(k)).expect("stereographic image is a unit")
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-3i128..=3, 1i128..=3).prop_map(|(p, q)| Rational::new(p, q))
}

fn unit_point() -> impl Strategy<Value = UnitPoint> {
    proptest::array::uniform7(small_rational()).prop_map(unit_from)
}

fn quaternionic_unit() -> impl Strategy<Value = UnitPoint> {
    proptest::array::uniform3(small_rational()).prop_map(|[a, b, c]| {
        let mut v = [Rational::ZERO; 7];
        (v[0], v[1], v[3]) = (a, b, c);
        unit_from(v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn norm_is_multiplicative(a in octonion(), b in octonion()) {
        prop_assert_eq!(a.multiply(&b).norm(), a.norm() * b.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alternative_and_flexible(a in octonion(), b in octonion()) {
        prop_assert!(Octonion::associator(&a, &a, &b).is_zero());
        prop_assert!(Octonion::associator(&a, &b, &b).is_zero());
        prop_assert!(Octonion::associator(&a, &b, &a).is_zero());
    }

    #[test]
    fn associator_is_alternating(a in octonion(), b in octonion(), c in octonion()) {
        let x = Octonion::associator(&a, &b, &c);
        prop_assert_eq!(Octonion::associator(&b, &a, &c), -x);
        prop_assert_eq!(Octonion::associator(&a, &c, &b), -x);
        prop_assert_eq!(Octonion::associator(&c, &a, &b), x);
    }

    #[test]
    fn conjugation_reverses_products(a in octonion(), b in octonion()) {
        prop_assert_eq!(a.multiply(&b).conjugate(), b.conjugate().multiply(&a.conjugate()));
        prop_assert_eq!(a.multiply(&a.conjugate()), Octonion::real(a.norm()));
    }

    #[test]
    fn moufang(a in octonion(), b in octonion(), c in octonion()) {
        let lhs = a.multiply(&b.multiply(&a.multiply(&c)));
        let rhs = a.multiply(&b).multiply(&a).multiply(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn right_cancellation_by_conjugate(a in octonion(), x in octonion()) {
        prop_assert_eq!(a.multiply(&x).multiply(&x.conjugate()), a.scale(x.norm()));
    }

    #[test]
    fn bioctonion_norm_is_multiplicative(p in octonion(), q in octonion(), r in octonion(), s in octonion()) {
        let (z, w) = (BiOctonion::new(p, q), BiOctonion::new(r, s));
        prop_assert_eq!(z.multiply(&w).quadratic_norm(), z.quadratic_norm() * w.quadratic_norm());
    }

    #[test]
    fn x_product_composes_norms(a in octonion(), b in octonion(), x in unit_point()) {
        prop_assert_eq!(x_product(&a, &b, &x).norm(), a.norm() * b.norm());
    }

    #[test]
    fn x_product_has_unit_one(a in octonion(), x in unit_point()) {
        prop_assert_eq!(x_product(&a, &Octonion::ONE, &x), a);
        prop_assert_eq!(x_product(&Octonion::ONE, &a, &x), a);
    }

    #[test]
    fn x_product_ignores_sign_of_x(a in octonion(), b in octonion(), x in unit_point()) {
        prop_assert_eq!(x_product(&a, &b, &x), x_product(&a, &b, &x.negate()));
    }

    #[test]
    fn xy_product_on_the_diagonal(a in octonion(), b in octonion(), x in unit_point()) {
        prop_assert_eq!(xy_product(&a, &b, &x, &x), x_product(&a, &b, &x));
    }

    #[test]
    fn x_product_at_one_is_the_product(a in octonion(), b in octonion()) {
        prop_assert_eq!(x_product(&a, &b, &UnitPoint::one()), a.multiply(&b));
    }

    #[test]
    fn quaternionic_x_product_is_the_product(a in quaternionic(), b in quaternionic(), x in quaternionic_unit()) {
        prop_assert_eq!(x_product(&a, &b, &x), a.multiply(&b));
    }

    #[test]
    fn dagger_is_an_antihomomorphism(a in octonion(), b in octonion(), c in octonion(), d in octonion()) {
        let m1 = HeisenbergElement::new(a, b, c);
        let m2 = HeisenbergElement::new(c, d, a);
        prop_assert_eq!(h_dagger(&h_dagger(&m1)), m1);
        prop_assert_eq!(
            h_dagger(&h_multiply(&m1, &m2).unwrap()),
            h_multiply(&h_dagger(&m2), &h_dagger(&m1)).unwrap()
        );
    }

    #[test]
    fn triple_products_vanish(a in octonion(), b in octonion(), c in octonion(), d in octonion()) {
        let m1 = HeisenbergElement::new(a, b, c);
        let m2 = HeisenbergElement::new(b, c, d);
        let m3 = HeisenbergElement::new(d, a, b);
        let left = h_multiply(&h_multiply(&m1, &m2).unwrap(), &m3).unwrap();
        let right = h_multiply(&m1, &h_multiply(&m2, &m3).unwrap()).unwrap();
        prop_assert!(left.is_zero() && right.is_zero());
        prop_assert!(h_bracket(&m1, &m2).unwrap().is_central_only());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn torsion_is_totally_antisymmetric(x in unit_point()) {
        let t = torsion_tensor(&x).unwrap();
        prop_assert_eq!(t.antisymmetry_violation(), None);
    }
}
