//! Dimensions of moduli components of coverings of ball quotients.

use plurican::catalog::lookup;
use plurican::invariants::{generic_pluricanonical_smooth, moduli_dimension, moduli_dimension_lower_bound, CoveringParams};

fn main() -> plurican::Result<()> {
    for name in ["fake-projective-plane", "kk1-example-1"] {
        let x = lookup(name)?.invariants;
        println!("{name} (K2={}, pg={}):", x.k2, x.pg);
        for m in 3..=5 {
            let c = CoveringParams::new(2, m)?;
            println!(
                "  d=2 m={m}: dim {} (bound {}), generic branch curve smooth: {}",
                moduli_dimension(m, &x)?,
                moduli_dimension_lower_bound(&c, &x)?,
                generic_pluricanonical_smooth(2, x.k2, m)?
            );
        }
        for (d, m) in [(3, 2), (5, 1)] {
            let c = CoveringParams::new(d, m)?;
            println!("  d={d} m={m}: dim >= {}", moduli_dimension_lower_bound(&c, &x)?);
        }
    }
    Ok(())
}
