//! Degree of the canonical map of (2, 1)-canonical double covers whose base
//! has a bicanonical map of known degree.

use plurican::catalog::catalog;
use plurican::invariants::{composed_canonical_degree, covering_invariants, pg_of_double_cover_pg0, CoveringParams};

fn main() -> plurican::Result<()> {
    let c = CoveringParams::new(2, 1)?;
    for entry in catalog() {
        let Some(base) = entry.bicanonical_map_degree else { continue };
        let y = covering_invariants(&entry.invariants, &c)?;
        println!(
            "{:<22} K2={} -> Y: K2={} pg={} (h0(K+C)={}), canonical degree {}",
            entry.name,
            entry.invariants.k2,
            y.k2,
            y.pg,
            pg_of_double_cover_pg0(&entry.invariants, 1)?,
            composed_canonical_degree(base)?
        );
    }
    Ok(())
}
