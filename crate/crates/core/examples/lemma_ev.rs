//! Census of totally even 8-subsets of PG(3, F2) under GL(4, F2).
//!
//! Run with `cargo run --release --example lemma_ev`.

use plurican::evenclass::{classify_type, type_two_example, verify_lemma_ev};
use plurican::f2geom::hyperplane_profile;

fn main() -> plurican::Result<()> {
    let report = verify_lemma_ev()?;
    println!(
        "{} totally even 8-sets (null-space oracle: {}), {} orbits under a group of order {}",
        report.total_count, report.oracle_count, report.orbit_count, report.group_order
    );
    for orbit in &report.orbits {
        println!(
            "  {:<6} size {:>3}  stabilizer {:>4}  profile {:?}",
            orbit.kind, orbit.size, orbit.stabilizer_order, orbit.profile
        );
    }

    let listed = type_two_example();
    let kind = classify_type(&listed)?;
    println!("listed set {:?}", listed.coord_lists());
    println!("  -> {} with six-point plane {:?}", kind.tag(), kind.witness());
    println!("  profile {:?}", hyperplane_profile(&listed));
    Ok(())
}
