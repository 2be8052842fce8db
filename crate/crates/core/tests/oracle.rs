use motivic_core::combinatorics::partitions_of;
use motivic_core::ff_oracle::{
    commutant_dimension, count_commuting_pairs, count_commuting_pairs_by_type, count_cyclic_pairs, count_invertible,
    EnumOptions, JordanClassifier, OracleError, PrimeFieldMatrix,
};
use motivic_core::motivic::gl_polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn matrix_strategy(p: u32, n: usize) -> impl Strategy<Value = PrimeFieldMatrix> {
    prop::collection::vec(0..p, n * n).prop_map(move |e| PrimeFieldMatrix::new(p, n, n, e).unwrap())
}

fn invertible_strategy(p: u32, n: usize) -> impl Strategy<Value = (PrimeFieldMatrix, PrimeFieldMatrix)> {
    matrix_strategy(p, n).prop_filter_map("singular", |g| g.inverse().map(|inv| (g, inv)))
}

proptest! {
    #[test]
    fn jordan_type_is_a_conjugation_invariant(
        (p, a, (g, g_inv)) in prop_oneof![Just(2u32), Just(3), Just(5)].prop_flat_map(|p| {
            (Just(p), matrix_strategy(p, 4), invertible_strategy(p, 4))
        })
    ) {
        let classifier = JordanClassifier::new(p, 4);
        let conj = g.mul(&a).mul(&g_inv);
        prop_assert_eq!(classifier.jordan_type(&a), classifier.jordan_type(&conj));
        prop_assert_eq!(commutant_dimension(&a).unwrap(), commutant_dimension(&conj).unwrap());
    }

    #[test]
    fn commutant_bounds(a in prop_oneof![Just(2u32), Just(3)].prop_flat_map(|p| matrix_strategy(p, 3))) {
        let d = commutant_dimension(&a).unwrap();
        prop_assert!(d >= 3);
        prop_assert_eq!(d == 9, a.is_scalar());
        prop_assert_eq!(d % 2, 1);
    }
}

#[test]
fn commutant_examples() {
    let id = PrimeFieldMatrix::identity(3, 2);
    assert_eq!(commutant_dimension(&id).unwrap(), 4);
    let nilpotent = PrimeFieldMatrix::from_rows(3, &[&[0, 1], &[0, 0]]).unwrap();
    assert_eq!(commutant_dimension(&nilpotent).unwrap(), 2);
    let jordan = JordanClassifier::new(3, 2);
    assert_eq!(jordan.jordan_type(&id).to_string(), "(1,1)");
    assert_eq!(jordan.jordan_type(&nilpotent).to_string(), "(2)");
}

#[test]
fn small_commuting_counts() {
    let opts = EnumOptions::default();
    assert_eq!(count_commuting_pairs(0, 2, &opts).unwrap(), 1);
    assert_eq!(count_commuting_pairs(1, 2, &opts).unwrap(), 4);
    assert_eq!(count_commuting_pairs(2, 2, &opts).unwrap(), 88);
    let by_type = count_commuting_pairs_by_type(2, 2, &opts).unwrap();
    assert_eq!(by_type[&"1,1".parse().unwrap()], 64);
    assert_eq!(by_type[&"2".parse().unwrap()], 24);
    assert_eq!(by_type.values().sum::<u128>(), 88);
}

#[test]
fn by_type_partitions_the_total() {
    let opts = EnumOptions::default();
    for (n, p) in [(3, 2), (3, 3), (2, 5)] {
        let by_type = count_commuting_pairs_by_type(n, p, &opts).unwrap();
        assert_eq!(by_type.len(), partitions_of(n as u32).len());
        assert_eq!(by_type.values().sum::<u128>(), count_commuting_pairs(n, p, &opts).unwrap());
    }
}

#[test]
fn invertible_counts_match_gl() {
    let opts = EnumOptions::default();
    for p in [2u32, 3, 5] {
        for n in 0..=3usize {
            if p == 5 && n == 3 {
                continue;
            }
            let expect = gl_polynomial(n as u32).evaluate_at(p).unwrap();
            let got = count_invertible(n, p, &opts).unwrap();
            assert_eq!(expect, BigRational::from_integer(BigInt::from(got)), "n={n} p={p}");
        }
    }
}

#[test]
fn cyclic_counts_reduce_correctly() {
    let opts = EnumOptions::default();
    for p in [2u32, 3] {
        assert_eq!(count_cyclic_pairs(&[1, 0], p, &opts).unwrap(), u128::from(p));
        assert_eq!(count_cyclic_pairs(&[2], p, &opts).unwrap(), count_commuting_pairs(2, p, &opts).unwrap());
    }
    assert_eq!(count_cyclic_pairs(&[1, 1], 2, &opts).unwrap(), 10);
}

#[test]
fn thread_count_does_not_change_results() {
    let one = count_commuting_pairs(3, 2, &EnumOptions::with_threads(1)).unwrap();
    let four = count_commuting_pairs(3, 2, &EnumOptions::with_threads(4)).unwrap();
    assert_eq!(one, four);
}

#[test]
fn refusals() {
    let tight = EnumOptions { threads: None, budget: 1000 };
    assert!(count_commuting_pairs(3, 2, &tight).is_ok());
    assert_eq!(count_commuting_pairs(4, 2, &tight), Err(OracleError::BudgetExceeded { required: 65536, budget: 1000 }));
    assert_eq!(count_commuting_pairs(2, 4, &EnumOptions::default()), Err(OracleError::NotPrime(4)));
}
