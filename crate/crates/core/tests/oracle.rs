use petrie_core::oracle::{
    petrie_monomial_vector, poly_multiply_extract, schur_monomial_vector, MonomialVector, Oracle,
    Polynomial,
};
use petrie_core::partition::{dominates, partitions_of};
use petrie_core::schur::{petrie_schur_expansion, petrie_times_power_sum};
use petrie_core::Partition;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Kostka number by trying every filling of the shape with the given content.
fn kostka_by_fillings(shape: &Partition, content: &Partition) -> u64 {
    let mut letters: Vec<usize> = content
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, c))
        .collect();
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (0..shape.part(r)).map(move |c| (r, c)))
        .collect();
    let mut count = 0;
    loop {
        let at = |r: usize, c: usize| letters[cells.iter().position(|&x| x == (r, c)).unwrap()];
        let ok = cells.iter().all(|&(r, c)| {
            (c == 0 || at(r, c - 1) <= at(r, c)) && (r == 0 || at(r - 1, c) < at(r, c))
        });
        count += u64::from(ok);
        if !next_permutation(&mut letters) {
            return count;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn random_symmetric(rng: &mut StdRng, degree: usize) -> MonomialVector {
    let mut v = MonomialVector::zero(degree);
    for lambda in partitions_of(degree, None) {
        v.set(lambda, rng.gen_range(-3..=3)).unwrap();
    }
    v
}

#[test]
fn kostka_matches_filling_count() {
    let mut oracle = Oracle::new();
    for d in 0..=6 {
        let all = partitions_of(d, None);
        for shape in &all {
            for content in &all {
                assert_eq!(
                    oracle.kostka(shape, content.parts()),
                    kostka_by_fillings(shape, content),
                    "{shape} {content}"
                );
            }
        }
    }
}

#[test]
fn kostka_is_unitriangular() {
    let mut oracle = Oracle::new();
    for d in 0..=10 {
        let matrix = oracle.kostka_matrix(d);
        for shape in matrix.order() {
            assert_eq!(matrix.get(shape, shape), 1);
            for content in matrix.order() {
                if matrix.get(shape, content) != 0 {
                    assert!(dominates(shape, content).unwrap(), "{shape} {content}");
                }
            }
        }
    }
}

#[test]
fn complete_homogeneous_is_all_ones() {
    for n in 0..=10 {
        let h = schur_monomial_vector(&Partition::rectangle(n, 1));
        let terms: Vec<_> = h.iter().collect();
        assert_eq!(terms.len(), partitions_of(n, None).len());
        assert!(terms.iter().all(|&(_, c)| c == 1));
    }
}

#[test]
fn orbit_extraction_matches_full_expansion() {
    let mut rng = StdRng::seed_from_u64(50);
    for _ in 0..50 {
        let (a, b) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let f = random_symmetric(&mut rng, a);
        let g = random_symmetric(&mut rng, b);
        let vars = a + b;
        let full = Polynomial::from_monomials(&f, vars)
            .unwrap()
            .multiply(&Polynomial::from_monomials(&g, vars).unwrap())
            .unwrap();
        assert!(full.is_symmetric());
        assert_eq!(
            full.to_monomials(vars).unwrap(),
            poly_multiply_extract(&f, &g).unwrap()
        );
    }
}

#[test]
fn product_with_unit_is_identity() {
    let mut rng = StdRng::seed_from_u64(7);
    for d in 0..=6 {
        let f = random_symmetric(&mut rng, d);
        assert_eq!(
            poly_multiply_extract(&f, &MonomialVector::unit()).unwrap(),
            f
        );
    }
}

#[test]
fn schur_round_trip() {
    let mut oracle = Oracle::new();
    for d in 0..=7 {
        let mut shapes = partitions_of(d, None);
        shapes.shuffle(&mut StdRng::seed_from_u64(d as u64));
        for lambda in shapes.into_iter().take(5) {
            let v = oracle.schur_monomial_vector(&lambda);
            let back = oracle.monomial_to_schur(&v).unwrap();
            assert_eq!(back.iter().collect::<Vec<_>>(), vec![(&lambda, 1)]);
        }
    }
}

#[test]
fn oracle_reproduces_petrie_expansion() {
    let mut oracle = Oracle::new();
    for k in 1..=6 {
        for m in 0..=10 {
            assert_eq!(
                oracle.petrie_expansion(k, m).unwrap(),
                petrie_schur_expansion(k, m).unwrap(),
                "G({k},{m})"
            );
        }
    }
    assert_eq!(petrie_monomial_vector(1, 0), MonomialVector::unit());
    assert!(petrie_monomial_vector(1, 3).is_zero());
}

#[test]
fn oracle_reproduces_power_sum_products() {
    let mut oracle = Oracle::new();
    for k in 1..=5 {
        for m in 0..=8 {
            for n in 1..=5 {
                assert_eq!(
                    oracle.petrie_times_power_sum(k, m, n).unwrap(),
                    petrie_times_power_sum(k, m, n).unwrap(),
                    "G({k},{m}) p{n}"
                );
            }
        }
    }
}
