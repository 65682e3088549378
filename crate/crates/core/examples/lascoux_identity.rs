//! Total Chern classes of the second exterior and symmetric powers,
//! checked against the binomial determinant formula.

use boolprod::lascoux::{lascoux_check, LascouxKind};

fn main() -> boolprod::Result<()> {
    for kind in [LascouxKind::Exterior, LascouxKind::Symmetric] {
        for n in 2..=4 {
            let report = lascoux_check(n, kind)?;
            println!(
                "{kind}, n = {n}, delta = {}: holds = {}",
                report.delta,
                report.verified()
            );
        }
    }
    let report = lascoux_check(3, LascouxKind::Exterior)?;
    println!("\nmu\td\tcoefficient");
    for (mu, d, lhs, _) in report.table() {
        println!("{mu}\t{d}\t{lhs}");
    }
    Ok(())
}
