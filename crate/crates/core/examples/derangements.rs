//! The q-deformation of B_{n,n-1}, its specializations, and the
//! smallest-even-ascent tableau count.

use boolprod::derangement::{a_coeffs_syt, bnm1_q, eval_q, frobenius_dimension};
use num_bigint::BigInt;

fn main() -> boolprod::Result<()> {
    let n = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("integer n"));
    let v = bnm1_q(n)?;
    for (lambda, c) in v.iter() {
        println!("s[{lambda}]: {c}");
    }
    for q in [1, 0, -1] {
        let q = BigInt::from(q);
        println!("q = {q}: dimension {}", frobenius_dimension(&v, &q)?);
    }
    println!("at q = -1: {}", eval_q(&v, &BigInt::from(-1)));
    let counts: Vec<String> = a_coeffs_syt(n)?
        .into_iter()
        .filter(|(_, c)| *c > 0)
        .map(|(l, c)| format!("{c}*[{l}]"))
        .collect();
    println!("tableaux with even smallest ascent: {}", counts.join(" "));
    Ok(())
}
