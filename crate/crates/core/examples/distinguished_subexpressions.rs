//! Distinguished subexpressions: every element below w is the endpoint of
//! one, and `find_distinguished` returns an explicit stage sequence.
//!
//!     cargo run --example distinguished_subexpressions

use bruhatkit::bruhat::{distinguished_endpoints, distinguished_subexpressions, find_distinguished, subexpression_endpoints};
use bruhatkit::root_system::{CartanKind, RootSystem};
use bruhatkit::weyl::{WeylGroup, Word};

fn main() -> bruhatkit::error::Result<()> {
    let g = WeylGroup::enumerate(RootSystem::build(CartanKind::A, 3)?)?;
    let word = Word::parse("1,2,3,1,2,1", 3)?;
    let w = g.evaluate(&word)?;
    println!("word ({word}) = {}", g.format(w));
    println!("distinguished subexpressions: {}", distinguished_subexpressions(&g, &word)?.len());
    let ends = distinguished_endpoints(&g, &word)?;
    println!("distinguished endpoints {} = all subexpression endpoints {}", ends.len(), subexpression_endpoints(&g, &word)?.len());

    let target = g.evaluate(&Word::parse("2,1", 3)?)?;
    let sub = find_distinguished(&g, &word, target)?;
    for (k, &x) in sub.stages().iter().enumerate().skip(1) {
        let verb = if sub.choices()[k - 1] { "apply" } else { "stay" };
        println!("  stage {k}: {verb:<5} s{}  -> {}", sub.letter(k) + 1, g.format(x));
    }

    let not_below = g.evaluate(&Word::parse("3,2,1", 3)?)?;
    let short = Word::parse("1,2,1", 3)?;
    match find_distinguished(&g, &short, not_below) {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
