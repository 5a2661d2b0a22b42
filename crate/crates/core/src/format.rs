//! Matrix text format.
//!
//! ```text
//! ring Q          (or `ring QI`, `ring GF 5`)
//! rows 2
//! cols 2
//! 1/2 0
//! 0 0
//! ```
//!
//! Rational entries are `a` or `a/b`; Gaussian rational entries are `re,im`
//! with rational parts; GF(p) entries are integers in `0..p`.

use crate::error::ParseError;
use crate::matrix::Matrix;
use crate::scalar::{Fp, GaussianRational, Modulus, Rational, Scalar};

/// A parsed matrix together with the field it lives over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    Gaussian(Matrix<GaussianRational>),
    Prime(Matrix<Fp>),
}

impl AnyMatrix {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (ln, header) = next_line(&mut lines, "ring header")?;
        let words: Vec<(usize, &str)> = tokens(header).collect();
        match words.as_slice() {
            [(_, "ring"), (_, "Q")] => parse_body::<Rational>(&(), &mut lines).map(AnyMatrix::Rational),
            [(_, "ring"), (_, "QI")] => parse_body::<GaussianRational>(&(), &mut lines).map(AnyMatrix::Gaussian),
            [(_, "ring"), (_, "GF"), (col, p)] => {
                let p: u64 = p.parse().map_err(|_| ParseError::at(ln, *col, format!("bad modulus `{p}`")))?;
                let m = Modulus::new(p)?;
                parse_body::<Fp>(&m, &mut lines).map(AnyMatrix::Prime)
            }
            _ => Err(ParseError::at(ln, 1, "expected `ring Q`, `ring QI` or `ring GF <p>`")),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyMatrix::Rational(m) => m.to_text(),
            AnyMatrix::Gaussian(m) => m.to_text(),
            AnyMatrix::Prime(m) => m.to_text(),
        }
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn to_text(&self) -> String {
        let mut out = format!("ring {}\nrows {}\ncols {}\n", S::ring_tag(self.field()), self.rows(), self.cols());
        for i in 0..self.rows() {
            let row: Vec<String> = (0..self.cols()).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses a matrix file whose ring tag must match `S` over `field`.
    pub fn parse_text(field: &S::Field, text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (ln, header) = next_line(&mut lines, "ring header")?;
        let expected = format!("ring {}", S::ring_tag(field));
        if tokens(header).map(|(_, w)| w).collect::<Vec<_>>().join(" ") != expected {
            return Err(ParseError::at(ln, 1, format!("expected `{expected}`")));
        }
        parse_body(field, &mut lines)
    }
}

fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn next_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<(usize, &'a str), ParseError> {
    lines.next().ok_or_else(|| ParseError::UnexpectedEof(format!("missing {what}")))
}

fn parse_dimension<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, keyword: &str) -> Result<usize, ParseError> {
    let (ln, line) = next_line(lines, keyword)?;
    let words: Vec<(usize, &str)> = tokens(line).collect();
    match words.as_slice() {
        [(_, k), (col, v)] if *k == keyword => match v.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(ParseError::at(ln, *col, format!("`{keyword}` must be a positive integer"))),
        },
        _ => Err(ParseError::at(ln, 1, format!("expected `{keyword} <n>`"))),
    }
}

fn parse_body<'a, S: Scalar>(
    field: &S::Field,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<Matrix<S>, ParseError> {
    let rows = parse_dimension(lines, "rows")?;
    let cols = parse_dimension(lines, "cols")?;
    let mut data = Vec::with_capacity(rows);
    for r in 0..rows {
        let (ln, line) = next_line(lines, &format!("matrix row {}", r + 1))?;
        let words: Vec<(usize, &str)> = tokens(line).collect();
        if words.len() != cols {
            return Err(ParseError::at(ln, 1, format!("expected {cols} entries, found {}", words.len())));
        }
        let row = words
            .into_iter()
            .map(|(col, w)| S::parse_entry(field, w).map_err(|msg| ParseError::at(ln, col, msg)))
            .collect::<Result<Vec<S>, _>>()?;
        data.push(row);
    }
    for (ln, line) in lines {
        if !line.trim().is_empty() {
            return Err(ParseError::at(ln, 1, "unexpected trailing content"));
        }
    }
    Ok(Matrix::from_rows(field, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_ring() {
        let q = AnyMatrix::parse("ring Q\nrows 2\ncols 2\n1/2 0\n0 -3\n").unwrap();
        let AnyMatrix::Rational(m) = &q else { panic!("wrong ring") };
        assert_eq!(*m.get(0, 0), Rational::new(1, 2));
        assert_eq!(*m.get(1, 1), Rational::int(-3));

        let qi = AnyMatrix::parse("ring QI\nrows 1\ncols 2\n1/2,-1 0,0\n").unwrap();
        let AnyMatrix::Gaussian(m) = &qi else { panic!("wrong ring") };
        assert_eq!(*m.get(0, 0), GaussianRational::new(Rational::new(1, 2), Rational::int(-1)));

        let gf = AnyMatrix::parse("ring GF 3\nrows 1\ncols 3\n0 1 2\n").unwrap();
        let AnyMatrix::Prime(m) = &gf else { panic!("wrong ring") };
        assert_eq!(m.get(0, 2).value(), 2);
    }

    #[test]
    fn text_round_trip() {
        let src = "ring QI\nrows 2\ncols 1\n1/2,-1\n0,3/4\n";
        let m = AnyMatrix::parse(src).unwrap();
        assert_eq!(m.to_text(), src);
        assert_eq!(AnyMatrix::parse(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn diagnostics_carry_position() {
        let err = AnyMatrix::parse("ring Q\nrows 2\ncols 2\n1 2\n3 x/4\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 5, column: 3, .. }), "{err:?}");

        let err = AnyMatrix::parse("ring GF 2\nrows 1\ncols 2\n1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 4, column: 3, .. }), "{err:?}");

        let err = AnyMatrix::parse("ring GF 4\nrows 1\ncols 1\n1\n").unwrap_err();
        assert_eq!(err, ParseError::NotPrime(4));

        let err = AnyMatrix::parse("ring Q\nrows 2\ncols 2\n1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::UnexpectedEof(_)));

        let err = AnyMatrix::parse("ring Q\nrows 1\ncols 2\n1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 4, .. }));

        assert!(AnyMatrix::parse("ring R\nrows 1\ncols 1\n1\n").is_err());
        assert!(AnyMatrix::parse("ring Q\nrows 0\ncols 1\n").is_err());
    }

    #[test]
    fn typed_parse_checks_ring() {
        let m = Modulus::new(5).unwrap();
        assert!(Matrix::<Fp>::parse_text(&m, "ring GF 5\nrows 1\ncols 1\n4\n").is_ok());
        assert!(Matrix::<Fp>::parse_text(&m, "ring GF 7\nrows 1\ncols 1\n4\n").is_err());
    }
}
