//! The built-in base surfaces.

use plurican::catalog::catalog;

fn main() {
    for e in catalog() {
        let x = &e.invariants;
        println!(
            "{:<22} pg={} q={} K2={:<3} e={:<3} MY={:<5} torsion={:?} bicanonical={:?}",
            e.name,
            x.pg,
            x.q,
            x.k2,
            x.e,
            e.miyaoka_yau,
            e.torsion.as_ref().map(|t| t.cyclic_orders().to_vec()),
            e.bicanonical_map_degree
        );
    }
}
