//! Oracles and fixtures shared by the test targets.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use projinv::scalar::{Fp, Modulus, Rational};
use projinv::{Matrix, MatrixRing};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed whose trial 0 over ℚ with n = 2 yields the canonical pair.
pub const CANONICAL_SEED: u64 = 79;

pub type Q2 = [[BigRational; 2]; 2];

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn q2(rows: [[(i64, i64); 2]; 2]) -> Q2 {
    rows.map(|r| r.map(|(n, d)| q(n, d)))
}

pub fn to_q2(m: &Matrix<Rational>) -> Q2 {
    std::array::from_fn(|i| std::array::from_fn(|j| m.get(i, j).as_big().clone()))
}

pub fn mul2(a: &Q2, b: &Q2) -> Q2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
}

pub fn transpose2(a: &Q2) -> Q2 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

/// MP inverse of a real 2×2 matrix by cases on rank: the adjugate formula when
/// invertible, `A*/tr(A*A)` at rank one, zero at rank zero.
pub fn mp_oracle(a: &Q2) -> Q2 {
    let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
    if !det.is_zero() {
        return [[&a[1][1] / &det, -&a[0][1] / &det], [-&a[1][0] / &det, &a[0][0] / &det]];
    }
    let frob: BigRational = a.iter().flatten().map(|x| x * x).sum();
    if frob.is_zero() {
        return a.clone();
    }
    transpose2(a).map(|r| r.map(|x| x / &frob))
}

pub fn canonical() -> (MatrixRing<Rational>, Matrix<Rational>, Matrix<Rational>) {
    let ring = MatrixRing::<Rational>::new((), 2);
    let p = Matrix::from_i64_rows(&(), &[&[1, 0], &[0, 0]]);
    let half = Rational::new(1, 2);
    let q = Matrix::from_fn(&(), 2, 2, |_, _| half.clone());
    (ring, p, q)
}

pub fn gf2_mul(a: [[u8; 2]; 2], b: [[u8; 2]; 2]) -> [[u8; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2))
}

pub fn gf2_t(a: [[u8; 2]; 2]) -> [[u8; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i]))
}

pub fn gf2_all() -> Vec<[[u8; 2]; 2]> {
    (0u8..16).map(|k| [[k >> 3 & 1, k >> 2 & 1], [k >> 1 & 1, k & 1]]).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(&(), rows, cols, |_, _| Rational::int(rng.gen_range(-3..=3)))
}

/// Random 4×4 rational matrices with a spread of Drazin indices: generic
/// ones, low-rank products, and conjugated nilpotent Jordan blocks.
pub fn drazin_corpus() -> Vec<Matrix<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    while out.len() < 200 {
        let m = match out.len() % 4 {
            0 => random_matrix(&mut rng, 4, 4),
            1 => {
                let k = rng.gen_range(1..=3);
                &random_matrix(&mut rng, 4, k) * &random_matrix(&mut rng, k, 4)
            }
            _ => {
                let s = random_matrix(&mut rng, 4, 4);
                let Ok(si) = s.inverse() else { continue };
                let nil = rng.gen_range(2..=4);
                let j = Matrix::from_fn(&(), 4, 4, |i, c| {
                    if c == i + 1 && c < nil {
                        Rational::int(1)
                    } else if i == c && i >= nil {
                        Rational::int(rng.gen_range(1..=3))
                    } else {
                        Rational::int(0)
                    }
                });
                &(&s * &j) * &si
            }
        };
        out.push(m);
    }
    out
}

/// The unique GF(2) matrix satisfying all four Penrose equations for `a`,
/// found by trying all 16 candidates.
pub fn gf2_mp_witnesses(a: [[u8; 2]; 2]) -> Vec<[[u8; 2]; 2]> {
    gf2_all()
        .into_iter()
        .filter(|&b| {
            let ab = gf2_mul(a, b);
            let ba = gf2_mul(b, a);
            gf2_mul(ab, a) == a && gf2_mul(ba, b) == b && gf2_t(ab) == ab && gf2_t(ba) == ba
        })
        .collect()
}

pub fn gf2_matrix(a: [[u8; 2]; 2]) -> Matrix<Fp> {
    let m2 = Modulus::new(2).unwrap();
    Matrix::from_fn(&m2, 2, 2, |i, j| Fp::new(m2, u64::from(a[i][j])))
}
