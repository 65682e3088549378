//! Characteristic polynomials and region counts of the resonance
//! arrangement by counting points over finite fields.

use std::time::Instant;

use boolprod::resonance::{charpoly_ff_fit, charpoly_mobius, regions_of};

fn main() -> boolprod::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .map_or(5, |a| a.parse().expect("integer n"));
    for n in 1..=max_n {
        let start = Instant::now();
        let fit = charpoly_ff_fit(n, true)?;
        println!("chi_{n}(t) = {}", fit.poly);
        println!("  samples {:?}, holdout {:?}", fit.samples, fit.holdout);
        println!(
            "  regions {} ({:?})",
            regions_of(&fit.poly),
            start.elapsed()
        );
        if n <= 4 {
            println!(
                "  lattice computation agrees: {}",
                charpoly_mobius(n)? == fit.poly
            );
        }
    }
    Ok(())
}
