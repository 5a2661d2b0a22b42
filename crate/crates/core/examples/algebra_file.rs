// Finite *-algebras over GF(2) from a structure-constant description file,
// with exhaustive MP and Drazin searches.

use std::error::Error;

use projinv::StructureConstantAlgebra;

/// GF(2) x GF(2) with the swap involution (a, b)* = (b, a).
const SWAP: &str = "\
algebra 2 over GF(2)
basis e f
mul 0 0 = 10
mul 0 1 = 00
mul 1 0 = 00
mul 1 1 = 01
star 0 = 01
star 1 = 10
one = 11
";

/// Dual numbers GF(2)[t]/(t^2) with the identity involution.
const DUAL: &str = "\
algebra 2 over GF(2)
basis 1 T
mul 0 0 = 10
mul 0 1 = 01
mul 1 0 = 01
mul 1 1 = 00
star 0 = 10
star 1 = 01
one = 10
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in [SWAP, DUAL] {
        let alg = StructureConstantAlgebra::parse(text)?;
        println!("basis {:?}", alg.labels());
        if let Some(w) = alg.star_reducing_witness() {
            println!("  not *-reducing: ({0})*({0}) = 0", alg.display(w));
        }
        for a in alg.elements() {
            let mp = alg.brute_force_mp(a).map(|b| alg.display(b)).unwrap_or_else(|_| "-".into());
            let dr = alg
                .brute_force_drazin(a)
                .map(|(b, k)| format!("{} (index {k})", alg.display(b)))
                .unwrap_or_else(|_| "-".into());
            println!("  {:<8} MP {:<8} Drazin {dr}", alg.display(a), mp);
        }
        println!(
            "  projections: {:?}",
            alg.enumerate_projections().iter().map(|e| alg.display(*e)).collect::<Vec<_>>()
        );
    }

    // The self-checks reject tables that are not *-algebras.
    let broken = SWAP.replace("star 1 = 10", "star 1 = 01");
    println!("broken table: {}", StructureConstantAlgebra::parse(&broken).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
