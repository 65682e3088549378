//! Binomial determinants against direct counts of non-intersecting
//! lattice path families.

use boolprod::lascoux::{binomial_det, gv_count, GVConfig};
use boolprod::Partition;

fn main() -> boolprod::Result<()> {
    let lambda: Partition = "3,2,1".parse()?;
    let n = 3;
    for mu in lambda.subshapes() {
        let cfg = GVConfig::new(&lambda, &mu, n)?;
        let det = binomial_det(&lambda, &mu, n)?;
        let paths = gv_count(&lambda, &mu, n)?;
        println!(
            "mu = {mu:<6} starts {:?} ends {:?}: det {det}, paths {paths}",
            cfg.starts, cfg.ends
        );
    }
    Ok(())
}
