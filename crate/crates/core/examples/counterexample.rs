// In the GF(2) algebra generated by projections x, y with xyx = 0, the pair
// p = x, q = 1 + y has p(1-q)p in R† while p(1-q) is not: the ring is not
// *-reducing and the ten-way existence equivalence breaks.

use std::error::Error;

use projinv::commands::counterexample_evidence;
use projinv::{example26_algebra, run_theorem, ProjectionPairContext, StarRing, TheoremId};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let evidence = counterexample_evidence();
    print!("{}", evidence.to_text());

    let alg = example26_algebra();
    let w = alg.star_reducing_witness().expect("algebra is not *-reducing");
    println!("nonzero a with a*a = 0: a = {}", alg.display(w));

    let p = alg.named("X").expect("X");
    let q = alg.sum_of(&["1", "Y"]).expect("1 + Y");
    let ctx = ProjectionPairContext::new(&alg, p, q)?;
    let v = run_theorem(TheoremId::Cor25, &ctx);
    println!("ten-way equivalence applicable: {} ({})", v.applicable, v.reason.unwrap_or_default());
    for obs in &v.observations {
        println!("  {:<16} {}", obs.name, obs.ok);
    }
    println!("ring is *-reducing: {}", alg.is_star_reducing());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
