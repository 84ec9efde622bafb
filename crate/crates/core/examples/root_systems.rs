//! Root systems of every supported type: counts, the non-reduced BC case,
//! and the duality involution θ = -w_o.
//!
//!     cargo run --example root_systems

use bruhatkit::root_system::{CartanKind, RootSystem, SimpleSubset};
use bruhatkit::weyl::WeylGroup;

fn main() -> bruhatkit::error::Result<()> {
    for (kind, rank) in [
        (CartanKind::A, 3),
        (CartanKind::B, 3),
        (CartanKind::C, 3),
        (CartanKind::D, 4),
        (CartanKind::G2, 2),
        (CartanKind::F4, 4),
        (CartanKind::BC, 2),
    ] {
        let rs = RootSystem::build(kind, rank)?;
        println!(
            "{:<4} |R| = {:>3}  |R+| = {:>3}  |R_nd| = {:>3}",
            rs.cartan_type(),
            rs.roots().len(),
            rs.positive_roots().len(),
            rs.nondivisible_roots().len()
        );
    }

    // In BC2, 2α is a root for each short α; only the non-divisible ones
    // enter lengths and the Weyl group.
    let bc = RootSystem::build(CartanKind::BC, 2)?;
    for r in bc.positive_roots() {
        let divisible = !bc.nondivisible_roots().contains(r);
        println!("BC2 {:?}{}", bc.coords(r), if divisible { "  = 2 x short root" } else { "" });
    }

    let d4 = RootSystem::build(CartanKind::D, 4)?;
    println!("θ on simple roots of A3: {:?}", plus_one(RootSystem::build(CartanKind::A, 3)?.theta_on_simple()));
    println!("θ on simple roots of D4: {:?}", plus_one(d4.theta_on_simple()));

    let a3 = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 3)?)?;
    let s = SimpleSubset::parse("1,3", 3)?;
    let rs = a3.root_system();
    let span: Vec<Vec<i32>> = rs.span_subsystem(s).iter().map(|r| rs.coords(r)).collect();
    println!("R_nd spanned by {s} in A3: {span:?}");
    Ok(())
}

fn plus_one(v: Vec<usize>) -> Vec<usize> {
    v.into_iter().map(|i| i + 1).collect()
}
