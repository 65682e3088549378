//! The product of all B_{n,k}, with a positivity check on every coefficient.

use std::time::Instant;

use boolprod::boolean::total_boolean;

fn main() -> boolprod::Result<()> {
    for n in 1..=4 {
        let start = Instant::now();
        let b = total_boolean(n)?;
        let largest = b.iter().map(|(_, c)| c).max().cloned().unwrap_or_default();
        println!(
            "n = {n}: {} Schur terms, largest coefficient {largest}, positive: {} ({:?})",
            b.len(),
            b.is_nonnegative(),
            start.elapsed()
        );
        if n <= 3 {
            println!("  B_{n} = {b}");
        }
    }
    Ok(())
}
