//! Invariants of numerically (d, m)-canonical coverings of a few base surfaces.

use plurican::catalog::lookup;
use plurican::invariants::{branch_curve_genus, covering_invariants, CoveringParams};

fn main() -> plurican::Result<()> {
    let cases = [("campedelli", 2, 1), ("campedelli", 3, 2), ("fake-projective-plane", 2, 3), ("kk1-example-1", 2, 3)];
    println!("{:<22} {:>2} {:>2} {:>8} {:>7} {:>8} {:>8}", "surface", "d", "m", "K2(Y)", "pa(Y)", "e(Y)", "g(B)");
    for (name, d, m) in cases {
        let x = lookup(name)?.invariants;
        let c = CoveringParams::new(d, m)?;
        let y = covering_invariants(&x, &c)?;
        let g = branch_curve_genus(x.k2, &c)?;
        println!("{name:<22} {d:>2} {m:>2} {:>8} {:>7} {:>8} {g:>8}", y.k2, y.pa, y.e);
        assert_eq!(y.k2 + y.e, 12 * y.pa);
    }
    Ok(())
}
