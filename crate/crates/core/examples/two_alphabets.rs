//! Products of X_S + Y_T over two sets of variables, compared with the
//! dual Cauchy identity when both subsets are singletons.

use boolprod::bialphabet::{dual_cauchy_reference, pjk_expand};

fn main() -> boolprod::Result<()> {
    let v = pjk_expand(3, 2, 2, 1)?;
    println!("P_{{2,1}}(x1..x3; y1,y2) = {v}");

    for (n, m) in [(2, 2), (3, 2), (3, 3)] {
        let lhs = pjk_expand(n, m, 1, 1)?;
        println!(
            "n = {n}, m = {m}: {} terms, dual Cauchy agrees: {}",
            lhs.len(),
            lhs == dual_cauchy_reference(n, m)?
        );
    }
    Ok(())
}
