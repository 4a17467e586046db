use petrie_core::abacus::k_core;
use petrie_core::modular::{modular_schur_expansion, modular_schur_monomials, transition_matrix};
use petrie_core::partition::partitions_of;
use petrie_core::schur::petrie_schur_expansion;
use petrie_core::Partition;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn first_row_is_the_petrie_function() {
    for k in 1..=5 {
        for m in 0..=8 {
            let t = transition_matrix(k, m).unwrap();
            let row = t.row(&Partition::rectangle(m, 1)).unwrap();
            assert_eq!(
                row,
                petrie_schur_expansion(k, m).unwrap(),
                "k = {k}, m = {m}"
            );
        }
    }
}

#[test]
fn block_property() {
    for k in 1..=5 {
        for m in 0..=9 {
            let t = transition_matrix(k, m).unwrap();
            let covered: usize = t.blocks().values().map(Vec::len).sum();
            assert_eq!(covered, t.order().len());
            for (core, rows) in t.blocks() {
                for &i in rows {
                    assert_eq!(&k_core(&t.order()[i], k).unwrap(), core);
                }
            }
        }
    }
}

#[test]
fn single_row_coefficients_are_units() {
    for k in 1..=6 {
        for m in 0..=10 {
            let g = modular_schur_expansion(k, &Partition::rectangle(m, 1)).unwrap();
            assert!(g.iter().all(|(_, c)| c.abs() == 1), "k = {k}, m = {m}");
        }
    }
}

#[test]
fn padding_does_not_change_the_determinant() {
    let mut rng = StdRng::seed_from_u64(30);
    for _ in 0..30 {
        let k = rng.gen_range(1..=5);
        let m = rng.gen_range(0..=7);
        let lambda = partitions_of(m, None).choose(&mut rng).unwrap().clone();
        let mut padded = lambda.parts().to_vec();
        padded.extend(std::iter::repeat_n(0, rng.gen_range(1..=3)));
        assert_eq!(
            modular_schur_monomials(k, lambda.parts()).unwrap(),
            modular_schur_monomials(k, &padded).unwrap(),
            "{lambda}, k = {k}"
        );
    }
}

#[test]
fn k2_m3_matrix() {
    let t = transition_matrix(2, 3).unwrap();
    assert_eq!(t.order(), &[p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    assert_eq!(t.entries(), &[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    let keys: Vec<_> = t.blocks().keys().cloned().collect();
    assert_eq!(keys, vec![p(&[1]), p(&[2, 1])]);
    assert_eq!(t.blocks()[&p(&[1])], vec![0, 2]);
}

#[test]
fn k3_m4_matrix_in_block_order() {
    let t = transition_matrix(3, 4).unwrap();
    let display: Vec<Partition> = [&[4][..], &[2, 2], &[1, 1, 1, 1], &[3, 1], &[2, 1, 1]]
        .iter()
        .map(|q| p(q))
        .collect();
    let expected = [
        [0, 1, -1, 0, 0],
        [1, 0, 1, 0, 0],
        [-1, 1, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ];
    for (i, row) in display.iter().enumerate() {
        for (j, col) in display.iter().enumerate() {
            assert_eq!(t.entry(row, col), Some(expected[i][j]), "{row} {col}");
        }
    }
}
