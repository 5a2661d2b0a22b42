// Moore-Penrose, Drazin and group inverses of exact matrices over ℚ, ℚ(i)
// and GF(p), read from the plain-text matrix format.

use std::error::Error;

use projinv::commands::{compute_inverse, InverseKind, InverseOutcome};
use projinv::scalar::Rational;
use projinv::{AnyMatrix, Matrix};

const INPUTS: [&str; 4] = [
    "ring Q\nrows 2\ncols 3\n1 2 3\n2 4 6\n",
    "ring QI\nrows 2\ncols 2\n1,0 0,1\n0,-1 1,0\n",
    "ring GF 3\nrows 2\ncols 2\n1 1\n1 1\n",
    "ring GF 2\nrows 2\ncols 2\n1 1\n1 1\n",
];

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in INPUTS {
        let m = AnyMatrix::parse(text)?;
        println!("input:\n{}", m.to_text());
        match compute_inverse(InverseKind::Mp, &m)? {
            InverseOutcome::Found { inverse, .. } => println!("MP inverse:\n{}", inverse.to_text()),
            InverseOutcome::NotInvertible(r) => println!("no MP inverse: {}\n", r.reason),
        }
    }

    // A nilpotent block next to an invertible one: Drazin index 2, no group inverse.
    let a = Matrix::<Rational>::from_i64_rows(&(), &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
    let (d, k) = a.drazin_inverse()?;
    println!("Drazin inverse (index {k}) of {a:?} is {d:?}");
    println!("group inverse: {:?}", a.group_inverse().err());

    let f = a.full_rank_factorization()?;
    println!("rank {} factorization: F = {:?}, G = {:?}", f.rank, f.f, f.g);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
