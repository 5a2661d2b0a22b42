//! Logic behind the `projinv` subcommands other than `verify`. Everything
//! here returns data; the binary owns I/O and exit codes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{example26_algebra, StructureConstantAlgebra};
use crate::campaign::RingChoice;
use crate::error::{MatrixError, SourceError};
use crate::format::AnyMatrix;
use crate::matrix::Matrix;
use crate::ring::{is_projection, verify_mp, StarRing};
use crate::scalar::{Fp, Scalar};
use crate::sources::{all_matrices, all_projections_matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InverseKind {
    Mp,
    Drazin,
    Group,
}

impl FromStr for InverseKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mp" => Ok(InverseKind::Mp),
            "drazin" => Ok(InverseKind::Drazin),
            "group" => Ok(InverseKind::Group),
            _ => Err(format!("unknown inverse kind `{s}` (expected mp, drazin or group)")),
        }
    }
}

/// Machine-readable reason an inverse does not exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotInvertible {
    pub status: String,
    pub kind: InverseKind,
    pub reason: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseOutcome {
    /// The inverse, plus the Drazin index for `drazin` and `group`.
    Found {
        inverse: AnyMatrix,
        index: Option<usize>,
    },
    NotInvertible(NotInvertible),
}

fn inverse_of<S: Scalar>(kind: InverseKind, m: &Matrix<S>) -> Result<(Matrix<S>, Option<usize>), MatrixError> {
    match kind {
        InverseKind::Mp => m.mp_inverse().map(|x| (x, None)),
        InverseKind::Drazin => m.drazin_inverse().map(|(x, k)| (x, Some(k))),
        InverseKind::Group => {
            let k = m.drazin_index()?;
            m.group_inverse().map(|x| (x, Some(k)))
        }
    }
}

/// Computes the requested inverse. Shape errors come back as `Err`;
/// non-existence is a regular outcome.
pub fn compute_inverse(kind: InverseKind, m: &AnyMatrix) -> Result<InverseOutcome, MatrixError> {
    let result = match m {
        AnyMatrix::Rational(a) => inverse_of(kind, a).map(|(x, k)| (AnyMatrix::Rational(x), k)),
        AnyMatrix::Gaussian(a) => inverse_of(kind, a).map(|(x, k)| (AnyMatrix::Gaussian(x), k)),
        AnyMatrix::Prime(a) => inverse_of(kind, a).map(|(x, k)| (AnyMatrix::Prime(x), k)),
    };
    let (reason, index) = match &result {
        Ok(_) => (None, None),
        Err(MatrixError::NotMPInvertible) => (Some("NotMPInvertible"), None),
        Err(MatrixError::NoGroupInverse { index }) => (Some("NoGroupInverse"), Some(*index)),
        Err(_) => (None, None),
    };
    match (result, reason) {
        (Ok((inverse, index)), _) => Ok(InverseOutcome::Found { inverse, index }),
        (Err(e), Some(reason)) => Ok(InverseOutcome::NotInvertible(NotInvertible {
            status: "not_invertible".into(),
            kind,
            reason: reason.into(),
            message: e.to_string(),
            index,
        })),
        (Err(e), None) => Err(e),
    }
}

/// A candidate rejected as the MP inverse, with the Penrose equations it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedCandidate {
    pub candidate: String,
    pub bits: String,
    pub failed_equations: Vec<u8>,
}

/// Everything needed to audit the non-`*`-reducing counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleEvidence {
    pub basis: Vec<String>,
    pub p: String,
    pub q: String,
    pub p_is_projection: bool,
    pub q_is_projection: bool,
    /// `p(1 − q)p` and its certified MP inverse.
    pub pqbar_p: String,
    pub pqbar_p_inverse: Option<String>,
    /// `p(1 − q)` and the exhaustive search for its MP inverse.
    pub pqbar: String,
    pub candidates: usize,
    pub rejected: Vec<RejectedCandidate>,
    /// Number of candidates failing each of the four Penrose equations.
    pub failures_per_equation: [usize; 4],
    pub reproduced: bool,
}

fn failed_equations(alg: &StructureConstantAlgebra, a: &crate::AlgebraElement, b: &crate::AlgebraElement) -> Vec<u8> {
    let r = verify_mp(alg, a, b);
    [r.eq1, r.eq2, r.eq3, r.eq4].iter().zip(1u8..).filter(|(ok, _)| !**ok).map(|(_, i)| i).collect()
}

/// Rebuilds the GF(2) algebra with `xyx = 0`, takes `p = X`, `q = 1 + Y`, and
/// certifies that `p(1 − q)p` has an MP inverse while `p(1 − q)` has none.
pub fn counterexample_evidence() -> CounterexampleEvidence {
    let alg = example26_algebra();
    let p = alg.named("X").expect("basis has X");
    let q = alg.sum_of(&["1", "Y"]).expect("basis has 1 and Y");
    let qbar = alg.sub(&alg.one(), &q);
    let pqbar = alg.mul(&p, &qbar);
    let pqbar_p = alg.mul(&pqbar, &p);

    let pqbar_p_inverse = alg.mp_witnesses(pqbar_p);
    let mut rejected = Vec::new();
    let mut failures_per_equation = [0usize; 4];
    let mut candidates = 0;
    for b in alg.elements() {
        candidates += 1;
        let failed = failed_equations(&alg, &pqbar, &b);
        for &e in &failed {
            failures_per_equation[usize::from(e) - 1] += 1;
        }
        if !failed.is_empty() {
            rejected.push(RejectedCandidate {
                candidate: alg.display(b),
                bits: alg.bitvector(b),
                failed_equations: failed,
            });
        }
    }

    let p_is_projection = is_projection(&alg, &p);
    let q_is_projection = is_projection(&alg, &q);
    let reproduced = p_is_projection
        && q_is_projection
        && pqbar_p.is_zero()
        && pqbar_p_inverse.len() == 1
        && pqbar_p_inverse[0].is_zero()
        && alg.display(pqbar) == "XY"
        && rejected.len() == candidates;

    CounterexampleEvidence {
        basis: alg.labels().to_vec(),
        p: alg.display(p),
        q: alg.display(q),
        p_is_projection,
        q_is_projection,
        pqbar_p: alg.display(pqbar_p),
        pqbar_p_inverse: pqbar_p_inverse.first().map(|w| alg.display(*w)),
        pqbar: alg.display(pqbar),
        candidates,
        rejected,
        failures_per_equation,
        reproduced,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl CounterexampleEvidence {
    pub fn summary_line(&self) -> String {
        let inv = self.pqbar_p_inverse.as_deref().unwrap_or("none");
        if self.rejected.len() == self.candidates {
            format!(
                "p(1-q)p = {}: MP inverse {inv}; p(1-q) = {}: no MP inverse among {} candidates",
                self.pqbar_p, self.pqbar, self.candidates
            )
        } else {
            format!(
                "p(1-q)p = {}: MP inverse {inv}; p(1-q) = {}: {} of {} candidates not rejected",
                self.pqbar_p,
                self.pqbar,
                self.candidates - self.rejected.len(),
                self.candidates
            )
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: GF(2)<x,y>/(x^2 - x, y^2 - y, xyx), basis {}", self.basis.join(", "));
        let _ = writeln!(s, "p = {} (projection: {})", self.p, yes_no(self.p_is_projection));
        let _ = writeln!(s, "q = {} (projection: {})", self.q, yes_no(self.q_is_projection));
        let _ = writeln!(s, "rejected candidates for (p(1-q))†:");
        for r in &self.rejected {
            let eqs: Vec<String> = r.failed_equations.iter().map(|e| format!("({e})")).collect();
            let _ = writeln!(s, "  {} {:<26} fails {}", r.bits, r.candidate, eqs.join(""));
        }
        let f = &self.failures_per_equation;
        let _ = writeln!(s, "failures per Penrose equation: (1) {}, (2) {}, (3) {}, (4) {}", f[0], f[1], f[2], f[3]);
        let _ = writeln!(s, "{}", self.summary_line());
        let _ = writeln!(s, "reproduced: {}", yes_no(self.reproduced));
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerateWhat {
    Projections,
    MpInvertible,
}

impl FromStr for EnumerateWhat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "projections" => Ok(EnumerateWhat::Projections),
            "mp-invertible" => Ok(EnumerateWhat::MpInvertible),
            _ => Err(format!("unknown listing `{s}` (expected projections or mp-invertible)")),
        }
    }
}

/// Deterministic listing of projections or MP-invertible elements of a
/// finite ring; `n` is the matrix size for `gf:<p>` rings.
pub fn enumerate_listing(ring: &RingChoice, n: usize, what: EnumerateWhat) -> Result<Vec<String>, SourceError> {
    match ring {
        RingChoice::Example26 => {
            let alg = example26_algebra();
            let els = match what {
                EnumerateWhat::Projections => alg.enumerate_projections(),
                EnumerateWhat::MpInvertible => alg.mp_invertible_elements(),
            };
            Ok(els.into_iter().map(|e| alg.display(e)).collect())
        }
        RingChoice::Prime(m) => {
            let els = match what {
                EnumerateWhat::Projections => all_projections_matrix::<Fp>(m, n)?,
                EnumerateWhat::MpInvertible => {
                    all_matrices::<Fp>(m, n, n)?.into_iter().filter(|a| a.mp_inverse().is_ok()).collect()
                }
            };
            Ok(els.iter().map(|e| format!("{e:?}")).collect())
        }
        RingChoice::Rational | RingChoice::Gaussian => Err(SourceError::NotEnumerable(ring.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Modulus, Rational};

    #[test]
    fn inverse_outcomes() {
        let half = AnyMatrix::parse("ring Q\nrows 2\ncols 2\n1/2 0\n0 0\n").unwrap();
        let InverseOutcome::Found { inverse, index } = compute_inverse(InverseKind::Mp, &half).unwrap() else {
            panic!("diag(1/2, 0) is MP invertible");
        };
        assert_eq!(inverse, AnyMatrix::Rational(Matrix::<Rational>::from_i64_rows(&(), &[&[2, 0], &[0, 0]])));
        assert_eq!(index, None);

        let zero = AnyMatrix::parse("ring Q\nrows 2\ncols 3\n0 0 0\n0 0 0\n").unwrap();
        let InverseOutcome::Found { inverse, .. } = compute_inverse(InverseKind::Mp, &zero).unwrap() else {
            panic!("zero is MP invertible");
        };
        assert_eq!(inverse, AnyMatrix::Rational(Matrix::zeros(&(), 3, 2)));

        let ones = AnyMatrix::parse("ring GF 2\nrows 2\ncols 2\n1 1\n1 1\n").unwrap();
        let InverseOutcome::NotInvertible(r) = compute_inverse(InverseKind::Mp, &ones).unwrap() else {
            panic!("all-ones over GF(2) has no MP inverse");
        };
        assert_eq!(r.reason, "NotMPInvertible");

        let nil = AnyMatrix::parse("ring Q\nrows 2\ncols 2\n0 1\n0 0\n").unwrap();
        let InverseOutcome::NotInvertible(r) = compute_inverse(InverseKind::Group, &nil).unwrap() else {
            panic!("nonzero nilpotent has no group inverse");
        };
        assert_eq!((r.reason.as_str(), r.index), ("NoGroupInverse", Some(2)));
        let InverseOutcome::Found { index, .. } = compute_inverse(InverseKind::Drazin, &nil).unwrap() else {
            panic!("every square matrix has a Drazin inverse");
        };
        assert_eq!(index, Some(2));

        let wide = AnyMatrix::parse("ring Q\nrows 1\ncols 2\n1 0\n").unwrap();
        assert_eq!(compute_inverse(InverseKind::Drazin, &wide), Err(MatrixError::NotSquare { rows: 1, cols: 2 }));
    }

    #[test]
    fn counterexample_is_reproduced_deterministically() {
        let e = counterexample_evidence();
        assert!(e.reproduced);
        assert_eq!(e.rejected.len(), 64);
        assert_eq!(e.summary_line(), "p(1-q)p = 0: MP inverse 0; p(1-q) = XY: no MP inverse among 64 candidates");
        assert_eq!(e.to_text(), counterexample_evidence().to_text());
    }

    #[test]
    fn listings() {
        let projections = enumerate_listing(&RingChoice::Example26, 0, EnumerateWhat::Projections).unwrap();
        assert!(projections.contains(&"X".to_string()) && projections.contains(&"1 + Y".to_string()));
        let invertible = enumerate_listing(&RingChoice::Example26, 0, EnumerateWhat::MpInvertible).unwrap();
        assert!(invertible.contains(&"0".to_string()) && invertible.contains(&"1".to_string()));
        assert!(!invertible.contains(&"XY".to_string()));

        let gf2 = RingChoice::Prime(Modulus::new(2).unwrap());
        let mp = enumerate_listing(&gf2, 2, EnumerateWhat::MpInvertible).unwrap();
        assert!(!mp.contains(&"[1 1; 1 1]".to_string()));
        assert!(mp.contains(&"[1 0; 0 0]".to_string()));
        assert!(matches!(
            enumerate_listing(&RingChoice::Prime(Modulus::new(3).unwrap()), 4, EnumerateWhat::Projections),
            Err(SourceError::TooLarge(_))
        ));
        assert!(enumerate_listing(&RingChoice::Rational, 2, EnumerateWhat::Projections).is_err());
    }
}
