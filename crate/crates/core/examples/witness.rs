//! Builds explicit elements of BwB ∩ Bw'B⁻ in GL_4(F_2) from distinguished
//! subexpressions, and checks them with both rank criteria.
//!
//!     cargo run --example witness

use bruhatkit::oracle::{cell_bwb, cell_bwb_minus, symmetric_group, witness, Perm};

fn main() -> bruhatkit::error::Result<()> {
    let s4 = symmetric_group(4)?;
    let w = Perm::parse("4,2,3,1")?;
    let wp = Perm::parse("2,1,3,4")?;
    let g = witness(&s4, w.to_elem(&s4)?, wp.to_elem(&s4)?, 2)?;
    println!("w = {w}, w' = {wp}:\n{g}");
    println!("cells: B[{}]B, B[{}]B⁻", cell_bwb(&g)?, cell_bwb_minus(&g)?);

    let mut count = 0;
    for a in s4.ids() {
        for b in s4.ids().filter(|&b| s4.bruhat_leq(b, a)) {
            let g = witness(&s4, a, b, 2)?;
            assert_eq!(cell_bwb(&g)?.to_elem(&s4)?, a);
            assert_eq!(cell_bwb_minus(&g)?.to_elem(&s4)?, b);
            count += 1;
        }
    }
    println!("{count} comparable pairs in S4, every witness lands in its cells");

    let not_below = Perm::parse("1,2,4,3")?.to_elem(&s4)?;
    if let Err(e) = witness(&s4, Perm::parse("2,1,3,4")?.to_elem(&s4)?, not_below, 2) {
        println!("{e}");
    }
    Ok(())
}
