//! Enumerates Weyl groups breadth-first and prints canonical reduced words
//! by length.
//!
//!     cargo run --example weyl_enumeration

use bruhatkit::root_system::{CartanKind, RootSystem};
use bruhatkit::weyl::{WeylGroup, Word};

fn main() -> bruhatkit::error::Result<()> {
    for (kind, rank) in [(CartanKind::A, 3), (CartanKind::B, 3), (CartanKind::G2, 2), (CartanKind::F4, 4)] {
        let g = WeylGroup::enumerate(RootSystem::build(kind, rank)?)?;
        let top = g.length(g.longest());
        let mut by_length = vec![0usize; top + 1];
        for w in g.ids() {
            by_length[g.length(w)] += 1;
        }
        println!("|W({})| = {:>4}  w_o = {}  Poincaré coefficients {:?}", g.cartan_type(), g.len(), g.format(g.longest()), by_length);
    }

    let g = WeylGroup::enumerate(RootSystem::build(CartanKind::G2, 2)?)?;
    println!("\nW(G2):");
    for w in g.ids() {
        println!("  {:>2}  l = {}  {}", w.0, g.length(w), g.format(w));
    }

    // Non-reduced words evaluate fine; their canonical form is shorter.
    let word = Word::parse("1,2,1,2,1,2,1", 2)?;
    let w = g.evaluate(&word)?;
    println!("\n({word}) = {} reduced: {}", g.format(w), g.is_reduced(&word)?);
    Ok(())
}
