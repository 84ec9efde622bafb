//! Bruhat order on W(A3): interval sizes, comparable pairs and the Hasse
//! diagram of A2 in DOT.
//!
//!     cargo run --example bruhat_order

use bruhatkit::hasse;
use bruhatkit::root_system::{CartanKind, RootSystem};
use bruhatkit::weyl::{ElemId, WeylGroup};

fn main() -> bruhatkit::error::Result<()> {
    let g = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 3)?)?;
    println!("comparable pairs in W(A3): {}", g.bruhat().comparable_pairs());
    for w in g.ids().filter(|&w| g.length(w) == 3) {
        println!("  [e, {}] has {} elements", g.format(w), g.bruhat().down_set(w).count_ones(..));
    }

    let a2 = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 2)?)?;
    let labels: Vec<String> = a2.ids().map(|w| a2.format(w)).collect();
    let edges = hasse::covers(a2.len(), |a, b| a2.bruhat_leq(ElemId(a as u32), ElemId(b as u32)));
    print!("{}", hasse::to_dot("A2", &labels, &edges));
    Ok(())
}
