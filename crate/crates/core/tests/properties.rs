//! Algebraic invariants as property tests over matrix rings and the
//! six-dimensional GF(2) algebra.

use projinv::scalar::{Fp, GaussianRational, Modulus, Rational};
use projinv::theorems::{lemma22_identities, run_theorem};
use projinv::{
    example26_algebra, is_ep, is_projection, verify_mp, AlgebraElement, Matrix, MatrixRing, ProjectionPairContext,
    StarRing, TheoremId, TrialSpec,
};
use proptest::prelude::*;

fn rational_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| Matrix::from_fn(&(), n, n, |i, j| Rational::int(v[i * n + j])))
}

fn gaussian_matrix(n: usize) -> impl Strategy<Value = Matrix<GaussianRational>> {
    proptest::collection::vec((-2i64..=2, -2i64..=2), n * n).prop_map(move |v| {
        Matrix::from_fn(&(), n, n, |i, j| {
            let (re, im) = v[i * n + j];
            GaussianRational::new(Rational::int(re), Rational::int(im))
        })
    })
}

fn gf3_matrix() -> impl Strategy<Value = Matrix<Fp>> {
    let m = Modulus::new(3).unwrap();
    proptest::collection::vec(0u64..3, 4).prop_map(move |v| Matrix::from_fn(&m, 2, 2, |i, j| Fp::new(m, v[i * 2 + j])))
}

fn algebra_element() -> impl Strategy<Value = AlgebraElement> {
    (0u32..64).prop_map(AlgebraElement::from_bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_axioms_over_q(a in rational_matrix(3), b in rational_matrix(3)) {
        let r = MatrixRing::<Rational>::new((), 3);
        prop_assert_eq!(r.star(&r.star(&a)), a.clone());
        prop_assert_eq!(r.star(&r.add(&a, &b)), r.add(&r.star(&a), &r.star(&b)));
        prop_assert_eq!(r.star(&r.mul(&a, &b)), r.mul(&r.star(&b), &r.star(&a)));
    }

    #[test]
    fn involution_axioms_over_qi(a in gaussian_matrix(2), b in gaussian_matrix(2)) {
        let r = MatrixRing::<GaussianRational>::new((), 2);
        prop_assert_eq!(r.star(&r.star(&a)), a.clone());
        prop_assert_eq!(r.star(&r.mul(&a, &b)), r.mul(&r.star(&b), &r.star(&a)));
    }

    #[test]
    fn involution_axioms_in_the_algebra(a in algebra_element(), b in algebra_element()) {
        let r = example26_algebra();
        prop_assert_eq!(r.star(&r.star(&a)), a);
        prop_assert_eq!(r.star(&r.add(&a, &b)), r.add(&r.star(&a), &r.star(&b)));
        prop_assert_eq!(r.star(&r.mul(&a, &b)), r.mul(&r.star(&b), &r.star(&a)));
    }

    #[test]
    fn star_dagger_exchange_and_double_dagger(a in rational_matrix(3)) {
        let r = MatrixRing::<Rational>::new((), 3);
        let el = r.el(a.clone());
        let dag = el.dag().unwrap();
        prop_assert!(verify_mp(&r, &a, dag.val()).all);
        prop_assert_eq!(el.star().dag().unwrap(), dag.star());
        prop_assert_eq!(dag.dag().unwrap(), el);
    }

    #[test]
    fn star_dagger_exchange_over_qi(a in gaussian_matrix(2)) {
        let r = MatrixRing::<GaussianRational>::new((), 2);
        let el = r.el(a);
        let dag = el.dag().unwrap();
        prop_assert_eq!(el.star().dag().unwrap(), dag.star());
        prop_assert_eq!(dag.dag().unwrap(), el);
    }

    #[test]
    fn dagger_exchange_where_it_exists(a in gf3_matrix(), b in algebra_element()) {
        let m = MatrixRing::<Fp>::new(Modulus::new(3).unwrap(), 2);
        let el = m.el(a);
        prop_assert_eq!(el.dag().is_some(), el.star().dag().is_some());
        if let Some(d) = el.dag() {
            prop_assert_eq!(el.star().dag().unwrap(), d.star());
            prop_assert_eq!(d.dag().unwrap(), el);
        }
        let alg = example26_algebra();
        let el = alg.el(b);
        prop_assert_eq!(el.dag().is_some(), el.star().dag().is_some());
        if let Some(d) = el.dag() {
            prop_assert_eq!(el.star().dag().unwrap(), d.star());
            prop_assert_eq!(d.dag().unwrap(), el);
        }
    }

    #[test]
    fn self_adjoint_elements_are_ep(m in rational_matrix(3)) {
        let r = MatrixRing::<Rational>::new((), 3);
        let a = r.add(&m, &r.star(&m));
        let dag = a.mp_inverse().unwrap();
        prop_assert!(is_ep(&r, &a, &dag).unwrap());
        prop_assert_eq!(a.group_inverse().unwrap(), dag);
    }

    #[test]
    fn polynomials_in_a_commute_with_its_dagger(m in rational_matrix(3), c in proptest::array::uniform3(-3i64..=3)) {
        // x = c0 + c1·a + c2·a² commutes with a and a* when a = a*.
        let r = MatrixRing::<Rational>::new((), 3);
        let a = r.el(r.add(&m, &r.star(&m)));
        let coeff = |k: usize| Rational::int(c[k]);
        let poly = &(&Matrix::identity(&(), 3).scale(&coeff(0)) + &a.val().scale(&coeff(1)))
            + &a.pow(2).val().scale(&coeff(2));
        let x = a.wrap(poly);
        prop_assert_eq!(&x * &a, &a * &x);
        let d = a.dag().unwrap();
        prop_assert_eq!(&x * &d, &d * &x);
    }

    #[test]
    fn random_projections_are_projections(seed in any::<u64>(), trial in 0u64..1000) {
        let spec = TrialSpec::random("Q", 3, seed, trial);
        let (p, q) = spec.generate::<Rational>(&()).unwrap();
        let r = MatrixRing::<Rational>::new((), 3);
        prop_assert!(is_projection(&r, &p) && is_projection(&r, &q));
        prop_assert_eq!(Some((p.rank(), q.rank())), spec.ranks);
    }

    #[test]
    fn lemma22_identities_on_random_pairs(seed in any::<u64>()) {
        let spec = TrialSpec::random("QI", 2, seed, 0);
        let (p, q) = spec.generate::<GaussianRational>(&()).unwrap();
        let r = MatrixRing::<GaussianRational>::new((), 2);
        let ctx = ProjectionPairContext::new(&r, p, q).unwrap();
        prop_assert!(lemma22_identities(&ctx).passed);
        prop_assert!(run_theorem(TheoremId::Thm27, &ctx).passed);
    }

    #[test]
    fn matrix_text_round_trips(a in gaussian_matrix(3), b in rational_matrix(2)) {
        prop_assert_eq!(Matrix::<GaussianRational>::parse_text(&(), &a.to_text()).unwrap(), a);
        let half = b.scale(&Rational::new(1, 2));
        prop_assert_eq!(Matrix::<Rational>::parse_text(&(), &half.to_text()).unwrap(), half);
    }
}
