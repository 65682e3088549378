//! Subset-sum alphabets and the Boolean product polynomials
//! `B_{n,k} = prod_{|S| = k} X_S` and `B_n = prod_k B_{n,k}`.

use crate::error::{Error, Result};
use crate::symengine::{
    alphabet_product, elementary_all, elementary_of_alphabet, schur_expand, Alphabet, LinearForm,
    MonomialPoly, SchurVector,
};

/// Largest `n` accepted by [`total_boolean`]; `B_5` already has degree 31.
pub const TOTAL_MAX_N: usize = 5;

/// The `k`-subsets of `{0, ..., n-1}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// The alphabet `X^(k)` of all subset sums `X_S`, `|S| = k`, over `n`
/// variables, subsets in lexicographic order.
pub fn subset_alphabet(n: usize, k: usize) -> Result<Alphabet> {
    check_nk(n, k)?;
    Alphabet::new(
        n,
        k_subsets(n, k)
            .iter()
            .map(|s| LinearForm::subset_sum(n, s))
            .collect(),
    )
}

/// Schur expansion of `e_p(X^(k))`. Zero when `p > C(n, k)`.
pub fn ep_subset(n: usize, k: usize, p: usize) -> Result<SchurVector> {
    let alphabet = subset_alphabet(n, k)?;
    schur_expand(&elementary_of_alphabet(p, &alphabet)?)
}

/// `e_p(X^(k))` for every `p` from `0` to `C(n, k)`.
pub fn ep_subset_all(n: usize, k: usize) -> Result<Vec<SchurVector>> {
    let alphabet = subset_alphabet(n, k)?;
    elementary_all(&alphabet, alphabet.len())?
        .iter()
        .map(schur_expand)
        .collect()
}

/// Monomial expansion of `B_{n,k}`.
pub fn boolean_product_poly(n: usize, k: usize) -> Result<MonomialPoly> {
    alphabet_product(&subset_alphabet(n, k)?)
}

/// Schur expansion of `B_{n,k}`, homogeneous of degree `C(n, k)`.
pub fn boolean_product(n: usize, k: usize) -> Result<SchurVector> {
    schur_expand(&boolean_product_poly(n, k)?)
}

/// Monomial expansion of `B_n`, multiplying the `B_{n,k}` in order of
/// increasing degree.
pub fn total_boolean_poly(n: usize) -> Result<MonomialPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument("total_boolean needs n >= 1".into()));
    }
    if n > TOTAL_MAX_N {
        return Err(Error::Capacity(format!(
            "total_boolean is limited to n <= {TOTAL_MAX_N}, got {n}"
        )));
    }
    let mut factors = (1..=n)
        .map(|k| boolean_product_poly(n, k))
        .collect::<Result<Vec<_>>>()?;
    factors.sort_by_key(|p| p.degree());
    Ok(factors.iter().fold(MonomialPoly::one(n), |acc, f| &acc * f))
}

/// Schur expansion of `B_n`, homogeneous of degree `2^n - 1`.
pub fn total_boolean(n: usize) -> Result<SchurVector> {
    schur_expand(&total_boolean_poly(n)?)
}
