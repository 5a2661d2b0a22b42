// Reproducible random projections e = v(v*v)⁻¹v* and exhaustive projection
// lists over small prime fields.

use std::error::Error;

use projinv::scalar::{Fp, GaussianRational, Modulus};
use projinv::sources::all_projections_matrix;
use projinv::TrialSpec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for trial in 0..3 {
        let spec = TrialSpec::random("QI", 3, 42, trial);
        let (p, q) = spec.generate::<GaussianRational>(&())?;
        println!("trial {trial} ranks {:?}", spec.ranks);
        println!("  p = {p:?}");
        println!("  q = {q:?}");
        // Regenerating from the spec alone gives the same pair.
        assert_eq!(spec.generate::<GaussianRational>(&())?, (p, q));
    }

    for prime in [2, 3, 5] {
        let m = Modulus::new(prime)?;
        let all = all_projections_matrix::<Fp>(&m, 2)?;
        println!("GF({prime}) 2x2: {} projections", all.len());
        for e in &all {
            println!("  {e:?}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
