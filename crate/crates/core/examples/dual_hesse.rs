//! The nine lines dual to the flexes of the Fermat cubic meet only in
//! triple points. Needs cube roots of unity, so the arithmetic is in Q(ω).

use plurican::arrangements::{compute_incidences, Field, LabeledArrangement, ProjLine};
use plurican::scalar::ExactScalar;

fn main() -> plurican::Result<()> {
    let w = ExactScalar::omega();
    let roots = [ExactScalar::one(), w.clone(), &w * &w];
    let (one, zero) = (ExactScalar::one(), ExactScalar::zero());
    let mut lines = Vec::new();
    for r in &roots {
        lines.push(ProjLine::new([zero.clone(), one.clone(), -r])?);
    }
    for r in &roots {
        lines.push(ProjLine::new([one.clone(), zero.clone(), -r])?);
    }
    for r in &roots {
        lines.push(ProjLine::new([one.clone(), -r, zero.clone()])?);
    }
    let arr = LabeledArrangement::unlabeled(Field::Eisenstein, lines)?;
    let report = compute_incidences(&arr)?;
    println!("histogram {:?}", report.histogram);
    for p in &report.points {
        println!("  {:?} on lines {:?}", p.point.coords(), p.lines);
    }
    Ok(())
}
