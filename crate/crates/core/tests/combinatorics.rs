use hecke_core::combinatorics::{
    character_value, class_representative_word, class_size, coset_factor, factorial, hook_dimension, min_coset_reps,
    Partition, Permutation, StandardTableau,
};
use hecke_core::scalar::{rat, BigInt};
use hecke_core::symgroup::{apply_word, specht_module};
use hecke_core::linalg::Matrix;
use proptest::prelude::*;

fn shapes(n: usize) -> Vec<Partition> {
    Partition::all(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characters_are_orthonormal(n in 1usize..=7, a in 0usize..100, b in 0usize..100) {
        let all = shapes(n);
        let (l, m) = (&all[a % all.len()], &all[b % all.len()]);
        let mut acc = BigInt::from(0);
        for mu in &all {
            acc += class_size(mu) * BigInt::from(character_value(l, mu).unwrap() * character_value(m, mu).unwrap());
        }
        let want = if l == m { factorial(n) } else { BigInt::from(0) };
        prop_assert_eq!(acc, want);
    }

    #[test]
    fn reduced_word_length_is_coxeter_length(n in 1usize..=6, seed in any::<u64>()) {
        let all = Permutation::all(n);
        let w = &all[(seed as usize) % all.len()];
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(&Permutation::from_word(n, &word), w);
        prop_assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn coset_factorization_is_length_additive(seed in any::<u64>(), split in 1usize..4) {
        let n = 4;
        let parts = vec![split, n - split];
        let all = Permutation::all(n);
        let w = &all[(seed as usize) % all.len()];
        let (u, v) = coset_factor(w, &parts);
        prop_assert_eq!(&u.compose(&v), w);
        prop_assert_eq!(u.length() + v.length(), w.length());
        prop_assert!(min_coset_reps(n, &parts).unwrap().contains(&u));
    }
}

#[test]
fn characters_match_seminormal_traces() {
    for n in 1..=6 {
        for lambda in shapes(n) {
            let sp = specht_module(&lambda);
            let id = Matrix::identity(sp.dim());
            for mu in shapes(n) {
                let tr = apply_word(sp.gens(), &class_representative_word(&mu), &id).trace();
                assert_eq!(tr, rat(character_value(&lambda, &mu).unwrap(), 1), "λ = {lambda}, μ = {mu}");
            }
        }
    }
}

#[test]
fn hook_formula_counts_tableaux() {
    for n in 0..=7 {
        for lambda in shapes(n) {
            assert_eq!(hook_dimension(&lambda), StandardTableau::all(&lambda).len() as u64, "{lambda}");
        }
    }
}

#[test]
fn vertical_strips_remove_at_most_one_box_per_row() {
    for n in 0..=7 {
        for lambda in shapes(n) {
            for i in 0..=n {
                for mu in lambda.vertical_strips(i) {
                    assert_eq!(mu.size() + i, n);
                    for r in 0..lambda.len() {
                        let d = lambda.part(r) - mu.part(r);
                        assert!(d <= 1, "{lambda} -> {mu}");
                    }
                }
            }
        }
    }
}
