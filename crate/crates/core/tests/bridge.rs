use hecke_core::combinatorics::Partition;
use hecke_core::graded::{speh_module, GradedModule};
use hecke_core::linalg::numeric::{from_na, to_na};
use hecke_core::linalg::Matrix;
use hecke_core::lusztig::{
    bridge_bz_compare, lambda_functor, matrix_function, theta_spectrum_deviation, BridgeParams, SpectralFunction,
};
use hecke_core::scalar::{rat, PkPoly};
use nalgebra::DMatrix;
use proptest::prelude::*;

/// `S (D + N) S^{-1}` with `D` taking values from `centers` (so clusters
/// of repeated eigenvalues) and `N` strictly upper triangular inside
/// equal-eigenvalue runs.
fn clustered(centers: &[f64], seed: &[f64]) -> Matrix<f64> {
    let n = centers.len();
    let mut d = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        d[(k, k)] = centers[k];
        if k + 1 < n && centers[k] == centers[k + 1] {
            d[(k, k + 1)] = seed[k] * 0.5;
        }
    }
    let mut s = DMatrix::<f64>::identity(n, n);
    for a in 0..n {
        for b in 0..n {
            if a != b {
                s[(a, b)] = seed[(a * n + b) % seed.len()] * 0.3;
            }
        }
    }
    let inv = s.clone().try_inverse().expect("diagonally dominant");
    from_na(&(&s * d * inv))
}

fn matrix_input() -> impl Strategy<Value = Matrix<f64>> {
    (prop::collection::vec(prop::sample::select(vec![-1.5, -0.5, 0.0, 0.7, 1.2]), 1..=5), prop::collection::vec(-1.0f64..1.0, 25))
        .prop_map(|(mut c, seed)| {
            c.sort_by(f64::total_cmp);
            clustered(&c, &seed)
        })
}

fn max_abs(m: &Matrix<f64>) -> f64 {
    m.entries().fold(0.0, |a, x| a.max(x.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exponentials_are_inverse(a in matrix_input()) {
        let exp = SpectralFunction::exp();
        let e = matrix_function(&exp, &a, 1e-9).unwrap();
        let f = matrix_function(&exp, &a.scale(&-1.0), 1e-9).unwrap();
        prop_assert!(max_abs(&e.mul(&f).sub(&Matrix::identity(a.rows()))) < 1e-10);
    }

    #[test]
    fn exponential_matches_pade(a in matrix_input()) {
        let e = matrix_function(&SpectralFunction::exp(), &a, 1e-9).unwrap();
        let want = from_na(&to_na(&a).exp());
        prop_assert!(max_abs(&e.sub(&want)) < 1e-9 * max_abs(&want).max(1.0));
    }

    #[test]
    fn correction_is_pointwise_on_diagonalizable(x in -2.0f64..2.0, q0 in 1.5f64..5.0, seed in prop::collection::vec(-1.0f64..1.0, 9)) {
        let p = q0.ln();
        let f = SpectralFunction::correction(q0);
        let s = clustered(&[0.0, 0.0, 0.0], &seed).add(&Matrix::identity(3));
        let s_na = to_na(&s);
        let inv = s_na.clone().try_inverse().unwrap();
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![0.0, -p, x]));
        let a = from_na(&(&s_na * d * &inv));
        let got = matrix_function(&f, &a, 1e-9).unwrap();
        let fd = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![f.eval(0.0).unwrap(), f.eval(-p).unwrap(), f.eval(x).unwrap()]));
        let want = from_na(&(&s_na * fd * &inv));
        prop_assert!(max_abs(&got.sub(&want)) < 1e-7 * max_abs(&want).max(1.0));
    }

    #[test]
    fn lambda_satisfies_relations(
        n in 1usize..=4,
        ix in any::<prop::sample::Index>(),
        r in -2.0f64..2.0,
        q0 in 1.5f64..5.0,
    ) {
        let all = Partition::all(n);
        let lambda = &all[ix.index(all.len())];
        let m = speh_module(lambda, &PkPoly::k());
        let p = q0.ln();
        let num = m.evaluate(p, r * p);
        let lam = lambda_functor(&num, &BridgeParams { q0, ..Default::default() }).unwrap();
        prop_assert!(theta_spectrum_deviation(&num, &lam) < 1e-10);
    }
}

/// Rank-two principal series at a reducibility point: the `E_k` are not
/// diagonalizable.
fn jordan_pair() -> GradedModule {
    let (k, p) = (PkPoly::k(), PkPoly::p());
    let z = PkPoly::zero();
    let e1 = Matrix::from_rows(vec![vec![k.clone(), p.clone()], vec![z.clone(), k.clone()]]);
    let e2 = Matrix::from_rows(vec![vec![k.clone(), p.neg()], vec![z, k]]);
    let t = Matrix::from_rows(vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]]);
    GradedModule::new(2, vec![e1, e2], vec![t]).unwrap()
}

#[test]
fn derivatives_commute_with_lambda_off_the_calibrated_locus() {
    let m = jordan_pair();
    for q0 in [2.0, 3.0, 4.0] {
        let params = BridgeParams { q0, ..Default::default() };
        for r in [0.0, 0.5, -1.0] {
            for i in 0..=2 {
                let rep = bridge_bz_compare("jordan", &m, r, i, &params, 1e-6).unwrap();
                assert!(rep.pass, "{rep:?}");
            }
        }
    }
}

#[test]
fn genuine_pole_is_an_error() {
    let a = Matrix::from_rows(vec![vec![0.0, 1.0], vec![0.0, 0.0]]);
    assert!(matrix_function(&SpectralFunction::reciprocal(), &a, 1e-9).is_err());
    let b = Matrix::diagonal(vec![2.0, -4.0]);
    let inv = matrix_function(&SpectralFunction::reciprocal(), &b, 1e-9).unwrap();
    assert!(max_abs(&inv.mul(&b).sub(&Matrix::identity(2))) < 1e-14);
}
