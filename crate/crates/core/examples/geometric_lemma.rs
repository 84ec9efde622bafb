//! Root data of the geometric lemma: for each w in W_{S,T}, the roots of
//! U_Q split into those w sends negative (U^w) and those it keeps positive.
//!
//!     cargo run --example geometric_lemma

use bruhatkit::orbit::geometric_lemma_datum;
use bruhatkit::parabolic::DoubleCosetTable;
use bruhatkit::root_system::{CartanKind, RootSystem, SimpleSubset};
use bruhatkit::weyl::WeylGroup;

fn main() -> bruhatkit::error::Result<()> {
    let g = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 3)?)?;
    let rs = g.root_system();
    let (s, t) = (SimpleSubset::parse("1", 3)?, SimpleSubset::parse("1,2", 3)?);
    for &w in DoubleCosetTable::build(&g, s, t)?.reps() {
        let d = geometric_lemma_datum(&g, w, s, t)?;
        let uw: Vec<Vec<i32>> = d.roots_uw.iter().map(|r| rs.coords(r)).collect();
        println!(
            "w = {:<8} |U_Q| = {}  |U^w| = {}  |P ∩ wU_Qw⁻¹| = {}  U^w = {uw:?}",
            g.format(w),
            d.roots_uq.len(),
            d.roots_uw.len(),
            d.roots_p_cap.len()
        );
        assert!(d.check(&g).is_empty());
    }
    Ok(())
}
