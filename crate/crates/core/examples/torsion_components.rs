//! Torsion criteria for lower bounds on the number of moduli components.

use plurican::torsion::{
    covering_count, cplus_total, non_divisible_torsion_witness, orbit_count, orbit_count_burnside,
    theorem_mod_component_bound, AutAction, FiniteAbelianGroup,
};

fn main() -> plurican::Result<()> {
    let camp = FiniteAbelianGroup::parse("2,2,2")?;
    println!(
        "(Z/2)^3, d=2: {} coverings, bound {}, witness {:?}",
        covering_count(&camp, 2)?,
        theorem_mod_component_bound(&camp, 2)?,
        non_divisible_torsion_witness(&camp, 2)?
    );

    let z4 = FiniteAbelianGroup::parse("4")?;
    println!("Z/4, d=2: bound {}", theorem_mod_component_bound(&z4, 2)?);

    // Inversion together with multiplication by 2 on (Z/5)^2.
    let g = FiniteAbelianGroup::homocyclic(5, 2)?;
    let gens = [AutAction::scalar(&g, -1)?, AutAction::scalar(&g, 2)?];
    println!(
        "(Z/5)^2 under <-1, 2>: {} orbits (Burnside: {})",
        orbit_count(&g, &gens)?,
        orbit_count_burnside(&g, &gens, 10_000)?
    );

    for (d, m) in [(2, 3), (5, 1), (3, 2)] {
        println!("K^2 = 333 surfaces, d={d}, m={m}: {} components", cplus_total(d, m)?);
    }
    match cplus_total(6, 1) {
        Ok(n) => println!("d=6: {n}"),
        Err(e) => println!("d=6 rejected: {e}"),
    }
    Ok(())
}
