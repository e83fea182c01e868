use std::collections::BTreeMap;

use hecke_core::combinatorics::Partition;
use hecke_core::graded::{check_graded_relations, decompose_as_speh, g_bz_derivative, pieri_verify, speh_module};
use hecke_core::linalg::Matrix;
use hecke_core::scalar::{rat, PkPoly};
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = Partition> {
    (1usize..=6, any::<prop::sample::Index>()).prop_map(|(n, ix)| {
        let all = Partition::all(n);
        all[ix.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pieri_holds_at_specialized_kappa(lambda in shape(), i in 0usize..=6, a in -2i64..=2, b in -3i64..=3) {
        let i = i.min(lambda.size());
        let kappa = PkPoly::linear(rat(0, 1), rat(a, 2), rat(b, 1));
        prop_assert!(pieri_verify(&lambda, i, &kappa).pass);
    }

    #[test]
    fn derivatives_stay_graded_modules(lambda in shape(), i in 0usize..=6) {
        let i = i.min(lambda.size());
        let d = g_bz_derivative(&speh_module(&lambda, &PkPoly::k()), i).unwrap();
        prop_assert!(check_graded_relations(&d).passed());
    }

    #[test]
    fn iterated_derivatives_follow_iterated_strips(lambda in shape(), i in 0usize..=3, j in 0usize..=3) {
        let n = lambda.size();
        let (i, j) = (i.min(n), j.min(n - i.min(n)));
        let m = speh_module(&lambda, &PkPoly::k());
        let twice = g_bz_derivative(&g_bz_derivative(&m, i).unwrap(), j).unwrap();
        let mut want: BTreeMap<Partition, usize> = BTreeMap::new();
        for mu in lambda.vertical_strips(i) {
            for nu in mu.vertical_strips(j) {
                *want.entry(nu).or_default() += 1;
            }
        }
        let got: BTreeMap<Partition, usize> = decompose_as_speh(&twice, &PkPoly::k()).unwrap().into_iter().collect();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn perturbed_module_is_caught() {
    let m = speh_module(&"2,1".parse().unwrap(), &PkPoly::k());
    let bad = m.with_eps(1, m.eps(1).add(&Matrix::scalar(m.dim(), PkPoly::p()))).unwrap();
    let rep = check_graded_relations(&bad);
    assert!(rep.failures.iter().any(|f| f.starts_with("E_1 t_1")), "{rep:?}");
}
