//! Elementary symmetric functions of subset-sum alphabets and the Boolean
//! product polynomials B_{n,k}.
//!
//!     cargo run --example subset_alphabets -- 4 2

use boolprod::boolean::{boolean_product, ep_subset_all, subset_alphabet};

fn main() -> boolprod::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(3);
    let k = args.next().unwrap_or(2);

    let alphabet = subset_alphabet(n, k)?;
    println!("X^({k}) over {n} variables:");
    for form in alphabet.forms() {
        println!("  {form:?}");
    }

    for (p, e) in ep_subset_all(n, k)?.iter().enumerate() {
        println!("e_{p} = {e}");
    }
    println!("B_{{{n},{k}}} = {}", boolean_product(n, k)?);
    Ok(())
}
