use liealg_core::catalog;
use liealg_core::degeneration::{
    contract_diagonal, contract_path, predicted_path_constants, screen, WeightVector,
};
use liealg_core::exactmath::{
    gauss_jordan, kernel_basis, normalize_basis, rank, Matrix, Rat, RatFunc, Scalar, SparseMatrix, UniPoly,
};
use liealg_core::leibniz_cohomology::{leibniz_cohomology_dims, CoefficientModule, Limits};
use liealg_core::lie_cohomology::lie_cohomology_dims;
use liealg_core::Error;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

/// Sparse-ish matrices so that rank deficiency is common.
fn matrix(max: usize) -> impl Strategy<Value = Matrix<Rat>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c)
            .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(|x| Rat::from_integer(x.into())).collect()))
    })
}

fn random_invertible(rng: &mut StdRng, n: usize) -> Matrix<Rat> {
    loop {
        let data = (0..n * n).map(|_| Rat::from_integer(rng.gen_range(-2i64..=2).into())).collect();
        let m = Matrix::new(n, n, data);
        if rank(&m) == n {
            return m;
        }
    }
}

fn poly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(small_rat(), 0..4).prop_map(UniPoly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix(12)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn kernel_normal_form_is_idempotent(m in matrix(10)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(normalize_basis(m.cols(), &k), k);
    }

    #[test]
    fn bareiss_and_gauss_jordan_agree(m in matrix(12)) {
        let (_, pivots) = gauss_jordan(&m);
        prop_assert_eq!(rank(&m), pivots.len());
    }

    #[test]
    fn rank_is_invariant_under_invertible_factors(m in matrix(8), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_invertible(&mut rng, m.rows());
        let q = random_invertible(&mut rng, m.cols());
        prop_assert_eq!(rank(&p.mul(&m).mul(&q)), rank(&m));
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_invertible(&mut rng, n);
        let gi = g.invert().unwrap();
        prop_assert_eq!(g.mul(&gi), Matrix::identity(n));
        prop_assert_eq!(gi.mul(&g), Matrix::identity(n));
    }

    #[test]
    fn sparse_matches_dense(a in matrix(8), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let c = rng.gen_range(1..6);
        let data = (0..a.cols() * c).map(|_| Rat::from_integer(rng.gen_range(-2i64..=2).into())).collect();
        let b = Matrix::new(a.cols(), c, data);
        let sparse = SparseMatrix::from_dense(&a).mul(&SparseMatrix::from_dense(&b));
        prop_assert_eq!(sparse.to_dense(), a.mul(&b));
    }

    #[test]
    fn eval_at_zero_is_multiplicative(f in ratfunc(), g in ratfunc()) {
        if let (Ok(x), Ok(y)) = (f.eval_at_zero(), g.eval_at_zero()) {
            prop_assert_eq!(f.mul(&g).eval_at_zero().unwrap(), x * y);
        }
    }

    #[test]
    fn ratfunc_field_axioms(f in ratfunc(), g in ratfunc()) {
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        if let Some(gi) = g.inv() {
            prop_assert_eq!(f.mul(&g).mul(&gi), f.clone());
        }
        prop_assert!(f.denom().leading().is_some_and(One::is_one));
    }

    #[test]
    fn transport_preserves_invariants(seed in any::<u64>(), which in 0usize..5) {
        let a = [
            catalog::nonabelian2(),
            catalog::heisenberg(1).unwrap(),
            catalog::sl2(),
            catalog::gl(2).unwrap(),
            catalog::leibniz_nilpotent2(),
        ][which].clone();
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_invertible(&mut rng, a.dim());
        let b = a.transport(&g).unwrap();
        prop_assert_eq!(b.invariants(), a.invariants());
        let lim = Limits::default();
        prop_assert_eq!(
            leibniz_cohomology_dims(&b, CoefficientModule::Adjoint, 2, &lim).unwrap(),
            leibniz_cohomology_dims(&a, CoefficientModule::Adjoint, 2, &lim).unwrap()
        );
        if a.is_lie() {
            prop_assert_eq!(lie_cohomology_dims(&b).unwrap(), lie_cohomology_dims(&a).unwrap());
        }
        prop_assert!(b.transport(&g.invert().unwrap()).unwrap().equal_tables(&a));
    }

    #[test]
    fn diagonal_and_path_routes_agree(w in proptest::collection::vec(-1i64..=2, 3), which in 0usize..3) {
        let a = [catalog::sl2(), catalog::heisenberg(1).unwrap(), catalog::leibniz_nilpotent2()][which].clone();
        let w: Vec<i64> = w.into_iter().take(a.dim()).chain(std::iter::repeat(0)).take(a.dim()).collect();
        let wv = WeightVector(w);
        let diag = contract_diagonal(&a, &wv);
        let path = contract_path(&a, &wv.to_path());
        match (diag, path) {
            (Ok(d), Ok(p)) => {
                prop_assert!(d.limit.equal_tables(&p.limit));
                prop_assert_eq!(d.classification, p.classification);
                let predicted = predicted_path_constants(&a, d.exponent_table.as_ref().unwrap());
                prop_assert_eq!(&predicted, p.path_constants.as_ref().unwrap());
            }
            (Err(Error::NoLimit { pole_order: x, .. }), Err(Error::NoLimit { pole_order: y, .. })) => {
                prop_assert!(x > 0 && y > 0);
            }
            (d, p) => prop_assert!(false, "routes disagree: {:?} vs {:?}", d.is_ok(), p.is_ok()),
        }
    }

    #[test]
    fn contraction_limits_are_screened(w in proptest::collection::vec(0i64..=2, 4), which in 0usize..3) {
        let a = [catalog::sl2(), catalog::gl(2).unwrap(), catalog::nonabelian2()][which].clone();
        let wv = WeightVector(w.into_iter().take(a.dim()).collect());
        if let Ok(r) = contract_diagonal(&a, &wv) {
            prop_assert!(r.limit.is_leibniz());
            if a.is_lie() {
                prop_assert!(r.limit.is_lie());
            }
            if !r.limit.equal_tables(&a) {
                prop_assert!(screen(&a, &r.limit).unwrap().passed());
                prop_assert!(r.limit.der_dim() > a.der_dim());
            }
        }
    }
}

fn weight_grid(d: usize, values: &[i64]) -> Vec<Vec<i64>> {
    (0..d).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|w| {
                values.iter().map(move |&v| {
                    let mut w = w.clone();
                    w.push(v);
                    w
                })
            })
            .collect()
    })
}

#[test]
fn weight_grid_sweep() {
    let algebras = [
        catalog::abelian(2).unwrap(),
        catalog::nonabelian2(),
        catalog::heisenberg(1).unwrap(),
        catalog::sl2(),
        catalog::gl(2).unwrap(),
        catalog::leibniz_nilpotent2(),
        catalog::heisenberg(2).unwrap(),
        catalog::semidirect_sl2(1).unwrap(),
    ];
    for a in &algebras {
        let lie = a.is_lie();
        for w in weight_grid(a.dim(), &[-1, 0, 1, 2]) {
            let uniform_positive = w.iter().all(|&x| x > 0) && w.iter().all(|&x| x == w[0]);
            let Ok(r) = contract_diagonal(a, &WeightVector(w.clone())) else {
                continue;
            };
            assert!(r.limit.is_leibniz(), "{w:?}");
            assert!(!lie || r.limit.is_lie(), "{w:?}");
            if uniform_positive {
                assert!(r.limit.is_abelian());
            }
            if !r.limit.equal_tables(a) {
                assert!(screen(a, &r.limit).unwrap().passed(), "{:?} {w:?}", a.name());
            }
        }
    }
}
