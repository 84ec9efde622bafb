//! Minimal representatives of W(S)\W/W(T) and the order-reversing map Ω.
//!
//!     cargo run --example double_cosets

use bruhatkit::parabolic::DoubleCosetTable;
use bruhatkit::root_system::{CartanKind, RootSystem, SimpleSubset};
use bruhatkit::weyl::WeylGroup;

fn main() -> bruhatkit::error::Result<()> {
    let g = WeylGroup::enumerate(RootSystem::build(CartanKind::B, 3)?)?;
    let s = SimpleSubset::parse("1", 3)?;
    let t = SimpleSubset::parse("2,3", 3)?;
    let table = DoubleCosetTable::build(&g, s, t)?;
    println!("B3, S = {s}, T = {t}, θ(T) = {}, w_(o,T) = {}", table.theta_t(), g.format(table.w_o_t()));
    for (i, (&u, &o)) in table.reps().iter().zip(table.omega()).enumerate() {
        println!("  u{} = {:<10} |W(S)uW(T)| = {:>2}   Ω(u) = {}", i + 1, g.format(u), table.coset_sizes()[i], g.format(o));
    }

    // Ω reverses the order: the top orbit goes to the bottom one.
    let reps = table.reps();
    let om = table.omega();
    let reversed = (0..reps.len())
        .all(|a| (0..reps.len()).all(|b| g.bruhat_leq(reps[b], reps[a]) == g.bruhat_leq(om[a], om[b])));
    println!("order-reversing: {reversed}");

    // The number of double cosets for every (S, T) of A3.
    let a3 = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 3)?)?;
    for s in SimpleSubset::all(3) {
        let row: Vec<usize> = SimpleSubset::all(3)
            .map(|t| DoubleCosetTable::build(&a3, s, t).map(|tab| tab.len()))
            .collect::<Result<_, _>>()?;
        println!("A3 S = {s:<8} {row:?}");
    }
    Ok(())
}
