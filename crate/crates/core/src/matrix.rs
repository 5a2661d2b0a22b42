//! Dense matrices over exact fields and their generalized inverses.
//!
//! The involution on matrices is the conjugate transpose, which reduces to the
//! plain transpose over ℚ and GF(p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::MatrixError;
use crate::ring::{InverseEngine, StarRing};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    field: S::Field,
    data: Vec<S>,
}

/// Reduced row echelon form with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<S: Scalar> {
    pub reduced: Matrix<S>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// `A = F·G` with `F` of full column rank and `G` of full row rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFactorization<S: Scalar> {
    pub f: Matrix<S>,
    pub g: Matrix<S>,
    pub rank: usize,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(field: &S::Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field: field.clone(), data: vec![S::zero(field); rows * cols] }
    }

    pub fn identity(field: &S::Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one(field);
        }
        m
    }

    pub fn from_fn(field: &S::Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, field: field.clone(), data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(field: &S::Field, rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, field: field.clone(), data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(field: &S::Field, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(field, rows.iter().map(|row| row.iter().map(|&v| S::from_i64(field, v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.times(s))
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Matrix { rows: self.rows, cols: self.cols, field: self.field.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn star(&self) -> Self {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(&self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn top_rows(&self, r: usize) -> Self {
        Matrix::from_fn(&self.field, r, self.cols, |i, j| self.get(i, j).clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Matrix::from_fn(&self.field, rows.len(), cols.len(), |i, j| self.get(rows.start + i, cols.start + j).clone())
    }

    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).inverse().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(row, j).times(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j).minus(&factor.times(m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, rank: pivots.len(), pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Ordinary inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n)).rref();
        if aug.pivots.iter().take_while(|&&c| c < n).count() < n {
            return Err(MatrixError::Singular);
        }
        Ok(aug.reduced.submatrix(0..n, n..2 * n))
    }

    /// Basis of the right null space, one vector per column.
    pub fn null_space(&self) -> Self {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(&self.field, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, S::one(&self.field));
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, reduced.get(r, f).negated());
            }
        }
        basis
    }

    /// Whether the two matrices have the same column space.
    pub fn same_column_space(&self, other: &Self) -> bool {
        let r = self.rank();
        r == other.rank() && r == self.hstack(other).rank()
    }

    pub fn full_rank_factorization(&self) -> Result<RankFactorization<S>, MatrixError> {
        let Rref { reduced, rank, pivots } = self.rref();
        if rank == 0 {
            return Err(MatrixError::ZeroMatrix);
        }
        Ok(RankFactorization { f: self.select_columns(&pivots), g: reduced.top_rows(rank), rank })
    }

    /// Moore-Penrose inverse `G*(GG*)⁻¹(F*F)⁻¹F*` from a full-rank factorization.
    ///
    /// Singular Gram matrices mean the matrix is outside R† over this field;
    /// this only happens over prime fields.
    pub fn mp_inverse(&self) -> Result<Self, MatrixError> {
        if self.is_zero() {
            return Ok(Matrix::zeros(&self.field, self.cols, self.rows));
        }
        let RankFactorization { f, g, .. } = self.full_rank_factorization()?;
        let (fs, gs) = (f.star(), g.star());
        let left_gram = (&fs * &f).inverse().map_err(|_| MatrixError::NotMPInvertible)?;
        let right_gram = (&g * &gs).inverse().map_err(|_| MatrixError::NotMPInvertible)?;
        Ok(&(&(&gs * &right_gram) * &left_gram) * &fs)
    }

    /// Smallest `k ≥ 0` with `rank(A^k) = rank(A^{k+1})`.
    pub fn drazin_index(&self) -> Result<usize, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut power = Matrix::identity(&self.field, self.rows);
        let mut rank = self.rows;
        for k in 0..=self.rows {
            let next = &power * self;
            let next_rank = next.rank();
            if next_rank == rank {
                return Ok(k);
            }
            power = next;
            rank = next_rank;
        }
        unreachable!("ranks of powers stabilise within n steps")
    }

    /// Drazin inverse and index through the core-nilpotent decomposition.
    ///
    /// With `k` the index, `F^n = R(A^k) ⊕ N(A^k)` and both summands are
    /// `A`-invariant. In the basis `T = [range | kernel]`, `T⁻¹AT = C ⊕ N` with
    /// `C` invertible and `N` nilpotent, and `A^D = T (C⁻¹ ⊕ 0) T⁻¹`.
    pub fn drazin_inverse(&self) -> Result<(Self, usize), MatrixError> {
        let k = self.drazin_index()?;
        let n = self.rows;
        if k == 0 {
            return Ok((self.inverse()?, 0));
        }
        let a_k = self.pow(k);
        let rr = a_k.rref();
        let r = rr.rank;
        if r == 0 {
            return Ok((Matrix::zeros(&self.field, n, n), k));
        }
        let basis = a_k.select_columns(&rr.pivots).hstack(&a_k.null_space());
        let basis_inv = basis.inverse().expect("range and kernel of A^k are complementary");
        let similar = &(&basis_inv * self) * &basis;
        let core_inv = similar.submatrix(0..r, 0..r).inverse().expect("core block is invertible");
        let mut block = Matrix::zeros(&self.field, n, n);
        for i in 0..r {
            for j in 0..r {
                block.set(i, j, core_inv.get(i, j).clone());
            }
        }
        Ok((&(&basis * &block) * &basis_inv, k))
    }

    pub fn group_inverse(&self) -> Result<Self, MatrixError> {
        let (d, index) = self.drazin_inverse()?;
        if index <= 1 {
            Ok(d)
        } else {
            Err(MatrixError::NoGroupInverse { index })
        }
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field.clone(), data }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field.clone(), data }
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out: Matrix<S> = Matrix::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(rhs.get(k, j)));
                }
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(S::negated)
    }
}

/// The `*`-ring of `n×n` matrices over a fixed field.
#[derive(Clone, Debug)]
pub struct MatrixRing<S: Scalar> {
    n: usize,
    field: S::Field,
    star_reducing: bool,
}

impl<S: Scalar> MatrixRing<S> {
    pub fn new(field: S::Field, n: usize) -> Self {
        assert!(n > 0, "matrix size must be positive");
        let star_reducing = match S::enumerate(&field) {
            // ℚ and ℚ(i): Σ conj(x)x = 0 forces x = 0
            None => true,
            Some(elements) => !has_isotropic_vector(&elements, n),
        };
        MatrixRing { n, field, star_reducing }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn from_i64_rows(&self, rows: &[&[i64]]) -> Matrix<S> {
        let m = Matrix::from_i64_rows(&self.field, rows);
        assert_eq!((m.rows, m.cols), (self.n, self.n));
        m
    }
}

/// Whether a nonzero `v ∈ F^n` has `Σ conj(v_i) v_i = 0` over a finite field.
///
/// A nonzero `A` with `A*A = 0` exists iff such a vector exists (take it as the
/// only nonzero column). For `n ≥ 3` one always does over a finite field.
fn has_isotropic_vector<S: Scalar>(elements: &[S], n: usize) -> bool {
    let norm = |x: &S| x.conj().times(x);
    match n {
        1 => elements.iter().any(|x| !x.is_zero() && norm(x).is_zero()),
        2 => elements
            .iter()
            .any(|x| elements.iter().any(|y| !(x.is_zero() && y.is_zero()) && norm(x).plus(&norm(y)).is_zero())),
        _ => true,
    }
}

impl<S: Scalar> StarRing for MatrixRing<S> {
    type Elem = Matrix<S>;

    fn zero(&self) -> Matrix<S> {
        Matrix::zeros(&self.field, self.n, self.n)
    }
    fn one(&self) -> Matrix<S> {
        Matrix::identity(&self.field, self.n)
    }
    fn add(&self, a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
        a + b
    }
    fn sub(&self, a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
        a - b
    }
    fn neg(&self, a: &Matrix<S>) -> Matrix<S> {
        -a
    }
    fn mul(&self, a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
        a * b
    }
    fn star(&self, a: &Matrix<S>) -> Matrix<S> {
        a.star()
    }
    fn is_star_reducing(&self) -> bool {
        self.star_reducing
    }
    fn ring_id(&self) -> String {
        format!("{}^{}x{}", S::ring_tag(&self.field).replace(' ', ""), self.n, self.n)
    }
    fn render(&self, a: &Matrix<S>) -> String {
        a.to_text()
    }
    fn is_zero(&self, a: &Matrix<S>) -> bool {
        a.is_zero()
    }
}

impl<S: Scalar> InverseEngine for MatrixRing<S> {
    fn mp_inverse(&self, a: &Matrix<S>) -> Option<Matrix<S>> {
        a.mp_inverse().ok()
    }

    fn drazin_inverse(&self, a: &Matrix<S>) -> Option<(Matrix<S>, usize)> {
        a.drazin_inverse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{verify_drazin, verify_mp};
    use crate::scalar::{Fp, Modulus, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn qm(rows: Vec<Vec<Rational>>) -> Matrix<Rational> {
        Matrix::from_rows(&(), rows)
    }

    fn gf2(rows: &[&[i64]]) -> Matrix<Fp> {
        Matrix::from_i64_rows(&Modulus::default(), rows)
    }

    #[test]
    fn rref_examples() {
        let z = Matrix::<Rational>::zeros(&(), 2, 2);
        assert_eq!(z.rref().rank, 0);

        let id = Matrix::<Rational>::identity(&(), 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);

        let ones = gf2(&[&[1, 1], &[1, 1]]);
        let r = ones.rref();
        assert_eq!(r.reduced, gf2(&[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn full_rank_factorization_examples() {
        let d = Matrix::<Rational>::from_i64_rows(&(), &[&[1, 0], &[0, 0]]);
        let frf = d.full_rank_factorization().unwrap();
        assert_eq!(frf.rank, 1);
        assert_eq!(frf.f, Matrix::from_i64_rows(&(), &[&[1], &[0]]));
        assert_eq!(frf.g, Matrix::from_i64_rows(&(), &[&[1, 0]]));

        let a = qm(vec![vec![q(1, 2), q(1, 2)], vec![q(0, 1), q(0, 1)]]);
        let frf = a.full_rank_factorization().unwrap();
        assert_eq!(frf.f, qm(vec![vec![q(1, 2)], vec![q(0, 1)]]));
        assert_eq!(frf.g, Matrix::from_i64_rows(&(), &[&[1, 1]]));
        assert_eq!(&frf.f * &frf.g, a);

        let id = Matrix::<Rational>::identity(&(), 3);
        let frf = id.full_rank_factorization().unwrap();
        assert_eq!((frf.f, frf.g), (id.clone(), id));

        assert_eq!(Matrix::<Rational>::zeros(&(), 2, 3).full_rank_factorization(), Err(MatrixError::ZeroMatrix));
    }

    #[test]
    fn mp_inverse_examples() {
        let z = Matrix::<Rational>::zeros(&(), 2, 2);
        assert_eq!(z.mp_inverse().unwrap(), z);

        let a = qm(vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(0, 1)]]);
        assert_eq!(a.mp_inverse().unwrap(), Matrix::from_i64_rows(&(), &[&[2, 0], &[0, 0]]));

        assert_eq!(gf2(&[&[1, 1], &[1, 1]]).mp_inverse(), Err(MatrixError::NotMPInvertible));
    }

    #[test]
    fn mp_inverse_rectangular() {
        let a = Matrix::<Rational>::from_i64_rows(&(), &[&[1, 2, 3], &[2, 4, 6]]);
        let b = a.mp_inverse().unwrap();
        assert_eq!((b.rows(), b.cols()), (3, 2));
        let ab = &a * &b;
        let ba = &b * &a;
        assert_eq!(&ab * &a, a);
        assert_eq!(&ba * &b, b);
        assert_eq!(ab.star(), ab);
        assert_eq!(ba.star(), ba);
    }

    #[test]
    fn drazin_examples() {
        let ring = MatrixRing::<Rational>::new((), 2);
        let inv = ring.from_i64_rows(&[&[2, 1], &[1, 1]]);
        let (d, k) = inv.drazin_inverse().unwrap();
        assert_eq!(k, 0);
        assert_eq!(d, inv.inverse().unwrap());

        let nil = ring.from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(nil.drazin_inverse().unwrap(), (ring.zero(), 2));
        assert!(verify_drazin(&ring, &nil, &ring.zero(), 2).valid());
        assert_eq!(nil.group_inverse(), Err(MatrixError::NoGroupInverse { index: 2 }));

        let idem = ring.from_i64_rows(&[&[1, 0], &[0, 0]]);
        assert_eq!(idem.drazin_inverse().unwrap(), (idem.clone(), 1));
        assert_eq!(idem.group_inverse().unwrap(), idem);

        let pqp = qm(vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(0, 1)]]);
        assert_eq!(pqp.group_inverse().unwrap(), ring.from_i64_rows(&[&[2, 0], &[0, 0]]));
    }

    #[test]
    fn drazin_mixed_blocks() {
        let ring = MatrixRing::<Rational>::new((), 4);
        // invertible 2x2 block plus a nilpotent Jordan block, conjugated
        let core = ring.from_i64_rows(&[&[2, 1, 0, 0], &[0, 3, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let t = ring.from_i64_rows(&[&[1, 1, 0, 2], &[0, 1, 1, 0], &[1, 0, 1, 1], &[0, 0, 1, 1]]);
        let a = &(&t * &core) * &t.inverse().unwrap();
        let (d, k) = a.drazin_inverse().unwrap();
        assert_eq!(k, 2);
        assert!(verify_drazin(&ring, &a, &d, k).valid());
        assert!(!verify_drazin(&ring, &a, &d, 1).valid());
    }

    #[test]
    fn null_space_is_kernel() {
        let a = Matrix::<Rational>::from_i64_rows(&(), &[&[1, 2, 3], &[2, 4, 7]]);
        let ns = a.null_space();
        assert_eq!(ns.cols(), 1);
        assert!((&a * &ns).is_zero());
    }

    #[test]
    fn star_reducing_flags() {
        assert!(MatrixRing::<Rational>::new((), 3).is_star_reducing());
        assert!(!MatrixRing::<Fp>::new(Modulus::new(2).unwrap(), 2).is_star_reducing());
        assert!(MatrixRing::<Fp>::new(Modulus::new(2).unwrap(), 1).is_star_reducing());
        // x² + y² is anisotropic mod 3 but not mod 5
        assert!(MatrixRing::<Fp>::new(Modulus::new(3).unwrap(), 2).is_star_reducing());
        assert!(!MatrixRing::<Fp>::new(Modulus::new(5).unwrap(), 2).is_star_reducing());
        assert!(!MatrixRing::<Fp>::new(Modulus::new(3).unwrap(), 3).is_star_reducing());
    }

    #[test]
    fn gf2_witness_of_non_star_reducing() {
        let ring = MatrixRing::<Fp>::new(Modulus::default(), 2);
        let ones = ring.from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert!(!ones.is_zero());
        assert!((&ones.star() * &ones).is_zero());
        assert!(!verify_mp(&ring, &ones, &ones).all);
    }
}
