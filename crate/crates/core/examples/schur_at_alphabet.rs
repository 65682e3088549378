//! Plugging an alphabet of linear forms into a Schur function.

use boolprod::boolean::subset_alphabet;
use boolprod::symengine::schur_at_alphabet;
use boolprod::Partition;

fn main() -> boolprod::Result<()> {
    let alphabet = subset_alphabet(3, 2)?;
    for shape in ["1", "2", "1,1", "2,1", "3"] {
        let lambda: Partition = shape.parse()?;
        println!(
            "s[{lambda}](X^(2)) = {}",
            schur_at_alphabet(&lambda, &alphabet)?
        );
    }
    Ok(())
}
