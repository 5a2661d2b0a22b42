// MP inverses of expressions in two projections, for the pair
// p = diag(1, 0), q = ½·ones over ℚ, and the theorem batteries on it.

use std::error::Error;

use projinv::scalar::Rational;
use projinv::{run_theorem, Matrix, MatrixRing, ProjectionPairContext, TheoremId};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ring = MatrixRing::<Rational>::new((), 2);
    let p = ring.from_i64_rows(&[&[1, 0], &[0, 0]]);
    let half = Rational::new(1, 2);
    let q = Matrix::from_fn(&(), 2, 2, |_, _| half.clone());
    let ctx = ProjectionPairContext::new(&ring, p, q)?;

    let named = [
        ("1 - pq", &ctx.one - &ctx.p * &ctx.q),
        ("p - pqp", &ctx.p - &ctx.a),
        ("p - q", &ctx.p - &ctx.q),
        ("p(1 - q)", &ctx.p * &ctx.q_bar),
        ("pq - qp", &ctx.p * &ctx.q - &ctx.q * &ctx.p),
    ];
    for (name, x) in &named {
        match x.dag() {
            Some(d) => println!("({name})† = {:?}", d.val()),
            None => println!("({name})† does not exist"),
        }
    }

    for id in TheoremId::ALL {
        let v = run_theorem(id, &ctx);
        println!("{id:<9} applicable {:<5} passed {:<5} ({} checks)", v.applicable, v.passed, v.checks.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
