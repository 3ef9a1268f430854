//! The set-level reduction at length 31: stacking the zero-λ construction
//! on a length-15 code is equivalent (not equal) to the single construction
//! over the length-15 tower code with the lifted λ.

use std::sync::Arc;

use bitcode_core::{
    find_equivalence, lambda_lift, lambda_named, vasiliev_construct, LambdaFn, Word,
};

#[test]
fn one_level_reduction_codes_are_equivalent_not_equal() {
    let lambda = lambda_named("V22_1").unwrap();
    let base = lambda.base().clone();
    let v15 = Arc::new(vasiliev_construct(&base, &lambda).unwrap());
    let stacked = vasiliev_construct(&v15, &LambdaFn::zero(v15.clone())).unwrap();

    let l15 = lambda_lift(&lambda, 1).unwrap();
    let tower = l15.base().clone();
    let lifted = vasiliev_construct(&tower, &l15).unwrap();

    assert_eq!(stacked.len(), 31);
    assert_eq!(stacked.size(), lifted.size());

    let rep = find_equivalence(&stacked, &lifted, 200_000, 1).unwrap();
    assert!(!rep.equal_sets, "the two codes differ as sets");
    assert!(
        !rep.printed_phi_works,
        "the printed cycle product (overlapping cycles) is not a valid witness"
    );
    let witness = rep.witness.expect("guided search finds a witness");
    // The found witness swaps the inner parity/section block with the first
    // copy block: coordinates 8..15 with 16..23.
    let mut expected: Vec<usize> = (1..=31).collect();
    for i in 8..=15 {
        expected.swap(i - 1, i + 7);
    }
    assert_eq!(witness.images(), expected);

    // Independent spot verification on codewords of both codes.
    let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(5);
    for _ in 0..2000 {
        let w = stacked.random_word(&mut rng);
        assert!(lifted.contains(&witness.apply_word(&w)));
        let v = lifted.random_word(&mut rng);
        assert!(stacked.contains(&witness.inverse().apply_word(&v)));
    }
    // A word just outside the stacked code maps outside the lifted one.
    let outside = stacked.random_word(&mut rng) + Word::singleton(31, 1);
    assert!(!stacked.contains(&outside));
    assert!(!lifted.contains(&witness.apply_word(&outside)));
}
