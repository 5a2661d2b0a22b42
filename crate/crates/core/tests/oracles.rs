//! Library results checked against oracles that share no code with the
//! solvers: closed-form 2×2 inversion over ℚ and brute force over GF(2).

mod common;

use common::*;
use projinv::scalar::Rational;
use projinv::{verify_drazin, MatrixRing, ProjectionPairContext, StarRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_matches_defining_equations() {
    for a in [q2([[(1, 2), (-1, 2)], [(0, 1), (1, 1)]]), q2([[(1, 2), (0, 1)], [(0, 1), (0, 1)]])] {
        let b = mp_oracle(&a);
        assert_eq!(mul2(&mul2(&a, &b), &a), a);
        assert_eq!(mul2(&mul2(&b, &a), &b), b);
        let ab = mul2(&a, &b);
        let ba = mul2(&b, &a);
        assert_eq!(transpose2(&ab), ab);
        assert_eq!(transpose2(&ba), ba);
    }
}

#[test]
fn canonical_pair_desk_values() {
    let (ring, p, q) = canonical();
    let ctx = ProjectionPairContext::new(&ring, p.clone(), q.clone()).unwrap();
    let one = &ctx.one;

    let cases = [
        ("1-pq", one - &ctx.p * &ctx.q, q2([[(2, 1), (1, 1)], [(0, 1), (1, 1)]])),
        ("p-pqp", &ctx.p - &ctx.a, q2([[(2, 1), (0, 1)], [(0, 1), (0, 1)]])),
        ("p-q", &ctx.p - &ctx.q, q2([[(1, 1), (-1, 1)], [(-1, 1), (-1, 1)]])),
        ("pq̄", &ctx.p * &ctx.q_bar, q2([[(1, 1), (0, 1)], [(-1, 1), (0, 1)]])),
    ];
    for (name, x, frozen) in cases {
        let oracle = mp_oracle(&to_q2(x.val()));
        assert_eq!(oracle, frozen, "{name}: oracle disagrees with frozen value");
        let engine = x.dag().unwrap();
        assert_eq!(to_q2(engine.val()), oracle, "{name}");
    }

    // (p-q)†p reproduces (pq̄)†, and -(p-q)†p̄ reproduces (p̄q)†.
    let d = (&ctx.p - &ctx.q).dag().unwrap();
    assert_eq!(&d * &ctx.p, (&ctx.p * &ctx.q_bar).dag().unwrap());
    assert_eq!(-(&d * &ctx.p_bar), (&ctx.p_bar * &ctx.q).dag().unwrap());

    // pq - qp = ½[[0, 1], [-1, 0]]
    let comm = &ctx.p * &ctx.q - &ctx.q * &ctx.p;
    assert_eq!(to_q2(comm.val()), q2([[(0, 1), (1, 2)], [(-1, 2), (0, 1)]]));
}

#[test]
fn canonical_pair_is_a_random_trial() {
    let (_, p, q) = canonical();
    let spec = projinv::TrialSpec::random("Q", 2, CANONICAL_SEED, 0);
    assert_eq!(spec.generate::<Rational>(&()).unwrap(), (p, q));
}

#[test]
fn gf2_mp_inverse_matches_exhaustive_search() {
    let mut invertible = 0;
    for a in gf2_all() {
        let witnesses = gf2_mp_witnesses(a);
        assert!(witnesses.len() <= 1);
        match (gf2_matrix(a).mp_inverse(), witnesses.first()) {
            (Ok(x), Some(&w)) => {
                assert_eq!(x, gf2_matrix(w));
                invertible += 1;
            }
            (Err(_), None) => {}
            (got, want) => panic!("{a:?}: solver {got:?}, oracle {want:?}"),
        }
    }
    // The five failures are the rank-one matrices whose row or column space
    // is spanned by (1, 1); count frozen from the oracle.
    assert_eq!(invertible, 11);
}

#[test]
fn drazin_witnesses_certify_at_reported_index() {
    let ring = MatrixRing::<Rational>::new((), 4);
    let mut indices = [0usize; 5];
    for a in drazin_corpus() {
        let (d, k) = a.drazin_inverse().unwrap();
        assert!(verify_drazin(&ring, &a, &d, k).valid(), "{a:?}");
        if k > 0 {
            assert!(!verify_drazin(&ring, &a, &d, k - 1).index_eq, "index of {a:?} not minimal");
        }
        // Index by the rank chain, computed independently of the solver.
        let ranks: Vec<usize> = (0..=5).map(|e| a.pow(e).rank()).collect();
        let chain = (0..5).find(|&e| ranks[e] == ranks[e + 1]).unwrap();
        assert_eq!(k, chain);
        indices[k] += 1;
    }
    assert!(indices[0] > 0 && indices[1] > 0 && indices[2] > 0 && indices[3] > 0 && indices[4] > 0);
}

#[test]
fn self_adjoint_elements_are_ep_at_matrix_level() {
    // x* = ±x with x† existing: the MP inverse equals the group inverse, and
    // x and x* share a column space.
    let ring = MatrixRing::<Rational>::new((), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..50 {
        let m = random_matrix(&mut rng, 3, 3);
        for x in [&m + &m.star(), &m - &m.star()] {
            let dag = x.mp_inverse().unwrap();
            assert_eq!(x.group_inverse().unwrap(), dag);
            assert!(x.same_column_space(&ring.star(&x)));
            assert!(projinv::is_ep(&ring, &x, &dag).unwrap());
        }
    }
}
