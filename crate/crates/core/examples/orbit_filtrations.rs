//! The orbit filtrations on P\G/Q and P\G/Q⁻ and their comparison. For
//! GL2 with S = T = ∅ this is the Borel picture: on the Q⁻ side the
//! identity orbit is open, on the Q side it is closed.
//!
//!     cargo run --example orbit_filtrations

use bruhatkit::orbit::{dual_filtration_match, OrbitPoset, Side};
use bruhatkit::root_system::{CartanKind, RootSystem, SimpleSubset};
use bruhatkit::weyl::WeylGroup;

fn main() -> bruhatkit::error::Result<()> {
    let gl2 = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 1)?)?;
    let e = SimpleSubset::EMPTY;
    for side in [Side::Q, Side::QMinus] {
        let poset = OrbitPoset::build(&gl2, e, e, side)?;
        let opens: Vec<Vec<usize>> = poset.opens().iter().map(|o| o.iter().map(|i| i + 1).collect()).collect();
        println!("GL2 {side:?}: open sets {opens:?}");
    }

    let a3 = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 3)?)?;
    let (s, t) = (SimpleSubset::parse("2", 3)?, SimpleSubset::parse("1", 3)?);
    let report = dual_filtration_match(&a3, s, t)?;
    println!("\nA3 S = {s} T = {t}: {} orbits", report.r);
    for step in &report.steps {
        println!("  step {}: dual on {:?}, opposite on {:?}", step.index, step.dual, step.opposite);
    }
    println!("passed: {}", report.passed());

    print!("\n{}", OrbitPoset::build(&a3, s, t, Side::QMinus)?.to_dot(&a3));
    Ok(())
}
