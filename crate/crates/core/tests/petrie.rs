use petrie_core::abacus::{k_core, RimHookSequence};
use petrie_core::oracle::Oracle;
use petrie_core::partition::{partitions_of, remove_rim_hooks};
use petrie_core::petrie::{pet_det, pet_generalized, pet_grinberg, pet_rimhook};
use petrie_core::{Partition, PetrieValue};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[test]
fn four_evaluators_agree() {
    for k in 1..=7 {
        for m in 0..=12 {
            for lambda in partitions_of(m, None) {
                let det = pet_det(&lambda, k).unwrap();
                assert_eq!(
                    pet_grinberg(&lambda, k).unwrap(),
                    det,
                    "grinberg {lambda}, k = {k}"
                );
                assert_eq!(
                    pet_rimhook(&lambda, k).unwrap(),
                    det,
                    "rimhook {lambda}, k = {k}"
                );
                assert_eq!(
                    pet_generalized(&lambda, &Partition::empty(), k).unwrap(),
                    det
                );
            }
        }
    }
}

#[test]
fn zero_criteria() {
    for k in 2..=7 {
        for m in 0..=12 {
            for lambda in partitions_of(m, None) {
                let zero = pet_det(&lambda, k).unwrap().is_zero();
                let predicted = lambda.first() >= k || k_core(&lambda, k).unwrap().len() > 1;
                assert_eq!(zero, predicted, "{lambda}, k = {k}");
            }
        }
    }
}

#[test]
fn every_chain_gives_the_same_sign() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut cases = Vec::new();
    while cases.len() < 200 {
        let k = rng.gen_range(2..=7);
        let m = rng.gen_range(k..=14);
        let all = partitions_of(m, Some(k - 1));
        let lambda = all.choose(&mut rng).unwrap().clone();
        if !pet_det(&lambda, k).unwrap().is_zero() && k_core(&lambda, k).unwrap() != lambda {
            cases.push((lambda, k));
        }
    }
    for (lambda, k) in cases {
        let expected = pet_det(&lambda, k).unwrap().value();
        for _ in 0..20 {
            let mut chain = vec![lambda.clone()];
            loop {
                let options = remove_rim_hooks(chain.last().unwrap(), k);
                match options.choose(&mut rng) {
                    Some(next) => chain.push(next.clone()),
                    None => break,
                }
            }
            chain.reverse();
            let seq = RimHookSequence::from_chain(k, chain).unwrap();
            assert_eq!(seq.sign(), expected, "{lambda}, k = {k}");
        }
    }
}

#[test]
fn generalized_matches_oracle_products() {
    let mut oracle = Oracle::new();
    for k in 1..=4 {
        for size in 0..=3 {
            for mu in partitions_of(size, None) {
                for m in 0..=6 {
                    let product = oracle.petrie_times_schur(k, m, &mu).unwrap();
                    for lambda in partitions_of(m + size, None) {
                        let c = product.coeff(&lambda);
                        assert!((-1..=1).contains(&c));
                        let pet = pet_generalized(&lambda, &mu, k).unwrap();
                        assert_eq!(
                            PetrieValue::try_from(c).unwrap(),
                            pet,
                            "k = {k}, m = {m}, {lambda} / {mu}"
                        );
                    }
                }
            }
        }
    }
}
