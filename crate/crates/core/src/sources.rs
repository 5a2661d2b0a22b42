//! Deterministic sources of projection pairs.
//!
//! Random trials use ChaCha8 keyed by the campaign seed, with the trial index
//! selecting the stream: trial `i` draws its ranks from stream `2i` and its
//! matrices from stream `2i + 1`, so trials are independent of each other and
//! of scheduling. Integer draws use `gen_range`, which rejects instead of
//! reducing modulo the range.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::SourceError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Upper bound on candidate matrices for exhaustive enumeration.
pub const MAX_ENUMERATION: u128 = 1 << 20;

const GRAM_RETRIES: usize = 64;

/// Everything needed to regenerate one trial's projection pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialSpec {
    pub ring: String,
    pub n: usize,
    /// Target ranks of `p` and `q`; absent for exhaustively enumerated pairs.
    pub ranks: Option<(usize, usize)>,
    pub seed: u64,
    pub trial: u64,
}

fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

impl TrialSpec {
    /// A random trial with mixed ranks drawn uniformly from `0..=n`.
    pub fn random(ring: impl Into<String>, n: usize, seed: u64, trial: u64) -> Self {
        let mut rng = stream(seed, 2 * trial);
        let rp = rng.gen_range(0..=n);
        let rq = rng.gen_range(0..=n);
        TrialSpec { ring: ring.into(), n, ranks: Some((rp, rq)), seed, trial }
    }

    /// Regenerates the pair `(p, q)` for a random trial.
    pub fn generate<S: Scalar>(&self, field: &S::Field) -> Result<(Matrix<S>, Matrix<S>), SourceError> {
        let (rp, rq) = self.ranks.unwrap_or((self.n, self.n));
        let mut rng = stream(self.seed, 2 * self.trial + 1);
        let p = random_projection(field, self.n, rp, &mut rng)?;
        let q = random_projection(field, self.n, rq, &mut rng)?;
        Ok((p, q))
    }
}

/// `v(v*v)⁻¹v*` for a random `n × rank` matrix `v` with invertible Gram matrix.
pub fn random_projection<S: Scalar, G: Rng + ?Sized>(
    field: &S::Field,
    n: usize,
    rank: usize,
    rng: &mut G,
) -> Result<Matrix<S>, SourceError> {
    if rank > n {
        return Err(SourceError::RankTooLarge { rank, n });
    }
    if rank == 0 {
        return Ok(Matrix::zeros(field, n, n));
    }
    if rank == n {
        return Ok(Matrix::identity(field, n));
    }
    for _ in 0..GRAM_RETRIES {
        let v = Matrix::from_rows(
            field,
            (0..n).map(|_| (0..rank).map(|_| S::sample_small(field, rng)).collect()).collect(),
        );
        let vs = v.star();
        if let Ok(gram_inv) = (&vs * &v).inverse() {
            return Ok(&(&v * &gram_inv) * &vs);
        }
    }
    Err(SourceError::GenerationFailed(GRAM_RETRIES))
}

/// Every `rows × cols` matrix over a finite field, in odometer order.
pub fn all_matrices<S: Scalar>(field: &S::Field, rows: usize, cols: usize) -> Result<Vec<Matrix<S>>, SourceError> {
    let elements = S::enumerate(field).ok_or_else(|| SourceError::NotEnumerable(S::ring_tag(field)))?;
    let q = elements.len() as u128;
    let cells = (rows * cols) as u32;
    let count = q
        .checked_pow(cells)
        .filter(|&c| c <= MAX_ENUMERATION)
        .ok_or(SourceError::TooLarge(q.checked_pow(cells).unwrap_or(u128::MAX)))?;
    let mut digits = vec![0usize; rows * cols];
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        out.push(Matrix::from_fn(field, rows, cols, |i, j| elements[digits[i * cols + j]].clone()));
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < elements.len() {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

/// All symmetric idempotent `n × n` matrices over a small finite field.
pub fn all_projections_matrix<S: Scalar>(field: &S::Field, n: usize) -> Result<Vec<Matrix<S>>, SourceError> {
    Ok(all_matrices(field, n, n)?.into_iter().filter(|m| m.star() == *m && &(m * m) == m).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::MatrixRing;
    use crate::ring::is_projection;
    use crate::scalar::{Fp, GaussianRational, Modulus, Rational};

    #[test]
    fn boundary_ranks() {
        let mut rng = stream(0, 0);
        assert!(random_projection::<Rational, _>(&(), 3, 0, &mut rng).unwrap().is_zero());
        assert_eq!(random_projection::<Rational, _>(&(), 3, 3, &mut rng).unwrap(), Matrix::identity(&(), 3));
        assert_eq!(
            random_projection::<Rational, _>(&(), 3, 4, &mut rng),
            Err(SourceError::RankTooLarge { rank: 4, n: 3 })
        );
    }

    #[test]
    fn canonical_q_from_ones_vector() {
        let v = Matrix::<Rational>::from_i64_rows(&(), &[&[1], &[1]]);
        let vs = v.star();
        let e = &(&v * &(&vs * &v).inverse().unwrap()) * &vs;
        let half = Rational::new(1, 2);
        assert_eq!(e, Matrix::from_fn(&(), 2, 2, |_, _| half.clone()));
    }

    #[test]
    fn random_projections_have_target_rank() {
        let ring = MatrixRing::<GaussianRational>::new((), 3);
        for trial in 0..20 {
            let spec = TrialSpec::random("QI", 3, 7, trial);
            let (p, q) = spec.generate::<GaussianRational>(&()).unwrap();
            let (rp, rq) = spec.ranks.unwrap();
            assert!(is_projection(&ring, &p) && is_projection(&ring, &q));
            assert_eq!((p.rank(), q.rank()), (rp, rq));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = TrialSpec::random("Q", 4, 42, 9);
        let b = TrialSpec::random("Q", 4, 42, 9);
        assert_eq!(a, b);
        assert_eq!(a.generate::<Rational>(&()).unwrap(), b.generate::<Rational>(&()).unwrap());
    }

    #[test]
    fn small_field_enumeration() {
        let gf2 = Modulus::new(2).unwrap();
        let n1 = all_projections_matrix::<Fp>(&gf2, 1).unwrap();
        assert_eq!(n1, vec![Matrix::zeros(&gf2, 1, 1), Matrix::identity(&gf2, 1)]);

        let n2 = all_projections_matrix::<Fp>(&gf2, 2).unwrap();
        for m in [[[0, 0], [0, 0]], [[1, 0], [0, 0]], [[0, 0], [0, 1]], [[1, 0], [0, 1]]] {
            let m = Matrix::from_i64_rows(&gf2, &[&m[0], &m[1]]);
            assert!(n2.contains(&m));
        }
        assert_eq!(all_matrices::<Fp>(&gf2, 2, 2).unwrap().len(), 16);

        let gf3 = Modulus::new(3).unwrap();
        assert_eq!(all_matrices::<Fp>(&gf3, 2, 2).unwrap().len(), 81);
        let ring = MatrixRing::<Fp>::new(gf3, 2);
        assert!(all_projections_matrix::<Fp>(&gf3, 2).unwrap().iter().all(|e| is_projection(&ring, e)));

        assert_eq!(all_matrices::<Fp>(&gf3, 4, 4), Err(SourceError::TooLarge(43_046_721)));
        assert!(matches!(all_matrices::<Rational>(&(), 1, 1), Err(SourceError::NotEnumerable(_))));
    }
}
