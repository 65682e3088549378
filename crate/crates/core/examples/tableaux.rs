//! Standard tableaux, their ascents, and Kostka numbers.

use boolprod::partitions::{kostka, partitions_up_to};
use boolprod::tableaux::{num_syt, syt_list};
use boolprod::Partition;

fn main() -> boolprod::Result<()> {
    let shape: Partition = "3,2".parse()?;
    println!(
        "standard tableaux of shape {shape} (hook length formula: {}):",
        num_syt(&shape)
    );
    for t in syt_list(&shape) {
        println!(
            "  rows {:?}  descents {:?}  smallest ascent {}",
            t.rows(),
            t.descents()?,
            t.smallest_ascent()?
        );
    }

    println!("Kostka matrix for size 4:");
    let shapes = partitions_up_to(4, 4);
    for lambda in &shapes {
        let row: Vec<String> = shapes
            .iter()
            .map(|mu| kostka(lambda, mu.parts()).map(|k| k.to_string()))
            .collect::<Result<_, _>>()?;
        println!("  {:>8}  {}", lambda.to_string(), row.join(" "));
    }
    Ok(())
}
