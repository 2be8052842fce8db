use motivic_core::motivic::{end_class, gl_class, gl_polynomial, LaurentPolynomial, MotivicClass};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const W: i64 = -12;

fn class_strategy(window: i64) -> impl Strategy<Value = MotivicClass> {
    prop::collection::vec((window..=3i64, -5i64..=5), 0..6)
        .prop_map(move |terms| MotivicClass::from_terms(window, terms))
}

/// `a^-1` exists when the top term is `+-L^k`.
fn unit_strategy() -> impl Strategy<Value = MotivicClass> {
    (class_strategy(W), -2i64..=3, prop::bool::ANY).prop_map(|(x, k, neg)| {
        let low = x.coarsen(W).terms().filter(|(e, _)| *e < k).map(|(e, c)| (e, c.clone())).collect::<Vec<_>>();
        let lead = if neg { -1 } else { 1 };
        MotivicClass::from_terms(W, low.into_iter().chain([(k, BigInt::from(lead))]))
    })
}

fn agree(x: &MotivicClass, y: &MotivicClass) -> bool {
    let w = x.window_low().max(y.window_low());
    x.coarsen(w) == y.coarsen(w)
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in class_strategy(W), b in class_strategy(W), c in class_strategy(W)) {
        prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(a.checked_sub(&a).unwrap(), MotivicClass::zero(W));
    }

    #[test]
    fn multiplication_axioms(a in class_strategy(W), b in class_strategy(W), c in class_strategy(W)) {
        prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert!(agree(&left, &right));
        prop_assert!(left.window_low() <= W + 6);
        let dist_l = &a * &(&b + &c);
        let dist_r = &(&a * &b) + &(&a * &c);
        prop_assert!(agree(&dist_l, &dist_r));
        let unit = &a * &MotivicClass::one(W);
        prop_assert_eq!(unit.window_low(), W + a.height().max(0));
        prop_assert!(agree(&unit, &a));
    }

    #[test]
    fn inverse_multiplies_to_one(a in unit_strategy()) {
        let inv = a.invert_unit().unwrap();
        let prod = &a * &inv;
        prop_assert_eq!(prod.window_low(), W - a.height());
        prop_assert_eq!(prod.clone(), MotivicClass::one(prod.window_low()));
    }

    #[test]
    fn truncation_coherence(a in class_strategy(-20), b in class_strategy(-20), c in class_strategy(-20), d in 8i64..20) {
        let f = |x: &MotivicClass, y: &MotivicClass, z: &MotivicClass| &(x * y) + &(z * z);
        let fine = f(&a, &b, &c);
        let coarse = f(&a.coarsen(-d), &b.coarsen(-d), &c.coarsen(-d));
        prop_assert!(fine.window_low() <= coarse.window_low());
        prop_assert_eq!(fine.coarsen(coarse.window_low()), coarse);
    }

    #[test]
    fn json_round_trip(a in class_strategy(W)) {
        let json = serde_json::to_string(&a).unwrap();
        let back: MotivicClass = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn inverse_examples() {
    let geometric = MotivicClass::from_terms(-10, [(0, 1), (-1, -1)]).invert_unit().unwrap();
    assert_eq!(geometric, MotivicClass::from_terms(-10, (-10..=0).map(|e| (e, 1))));
    let l_minus_one = gl_class(1, -10).invert_unit().unwrap();
    assert_eq!(l_minus_one, MotivicClass::from_terms(-12, (-12..=-1).map(|e| (e, 1))));
}

#[test]
fn gl_orders_at_small_q() {
    // |GL_n(F_q)| = prod_i (q^n - q^i)
    for q in [2i64, 3, 5] {
        for n in 0..=3u32 {
            let expect: i64 = (0..n).map(|i| q.pow(n) - q.pow(i)).product();
            assert_eq!(gl_polynomial(n).evaluate_at(q).unwrap(), BigRational::from_integer(expect.into()));
        }
    }
}

#[test]
fn standard_classes() {
    assert_eq!(gl_class(0, -8), MotivicClass::one(-8));
    assert_eq!(end_class(0, -8), MotivicClass::one(-8));
    assert_eq!(end_class(3, -8).to_string(), "L^9");
    assert_eq!(gl_class(2, -8).to_string(), "L^4 - L^3 - L^2 + L");
    let laurent = LaurentPolynomial::from_terms([(2, 1), (-1, 3)]);
    assert_eq!(laurent.to_string(), "L^2 + 3*L^-1");
}
