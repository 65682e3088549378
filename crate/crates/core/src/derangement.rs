//! The case `k = n - 1`: `B_{n,n-1}(X; q) = prod_i (h_1(X) + q x_i)`, which
//! is `h_1^n` at `q = 0` and `B_{n,n-1}` at `q = -1`.
//!
//! Expanding the product gives `sum_j q^j e_j(X) h_1(X)^{n-j}`, and every
//! term is Schur-positive by the Pieri rule. At `q = -1` the Schur
//! coefficient of `s_lambda` counts standard tableaux of shape `lambda`
//! whose smallest ascent is even.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions_up_to, Partition};
use crate::symengine::{elementary_of_alphabet, schur_expand, Alphabet, MonomialPoly, SchurVector};
use crate::tableaux::{num_syt, syt_list};

/// Largest `n` for the polynomial expansions in this module.
pub const DERANGEMENT_MAX_N: usize = 7;
/// Largest `n` for [`a_coeffs_syt`].
pub const SYT_MAX_N: usize = 8;

/// A polynomial in `q` with integer coefficients; `coeffs[j]` multiplies
/// `q^j`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// `c q^j`.
    pub fn monomial(c: BigInt, j: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); j + 1];
        coeffs[j] = c;
        QPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        QPoly::new(long)
    }
}

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `1 + 2q + q^2`; the zero polynomial is `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag == BigInt::from(1);
            match j {
                0 => write!(f, "{mag}")?,
                _ if !unit => write!(f, "{mag}")?,
                _ => {}
            }
            match j {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Coefficients that can be specialized at an integer value of `q`.
pub trait EvalAtQ {
    fn eval_at(&self, q: &BigInt) -> BigInt;
}

impl EvalAtQ for BigInt {
    fn eval_at(&self, _q: &BigInt) -> BigInt {
        self.clone()
    }
}

impl EvalAtQ for QPoly {
    fn eval_at(&self, q: &BigInt) -> BigInt {
        self.eval(q)
    }
}

fn check_range(n: usize, lo: usize, hi: usize, what: &str) -> Result<()> {
    if n < lo {
        return Err(Error::InvalidArgument(format!(
            "{what} needs n >= {lo}, got {n}"
        )));
    }
    if n > hi {
        return Err(Error::Capacity(format!(
            "{what} is limited to n <= {hi}, got {n}"
        )));
    }
    Ok(())
}

/// `e_j(X) h_1(X)^{n-j}` in `n` variables, with `h_1 = e_1`.
fn pieri_term(n: usize, j: usize) -> Result<MonomialPoly> {
    let x = Alphabet::variables(n)?;
    let e1 = elementary_of_alphabet(1, &x)?;
    Ok(&elementary_of_alphabet(j, &x)? * &e1.pow((n - j) as u32))
}

/// Schur expansion of `B_{n,n-1}(X; q)` with coefficients in `q`.
/// Fails with a consistency error if any coefficient is negative.
pub fn bnm1_q(n: usize) -> Result<SchurVector<QPoly>> {
    check_range(n, 1, DERANGEMENT_MAX_N, "bnm1_q")?;
    let mut out = SchurVector::<QPoly>::new(n);
    for j in 0..=n {
        for (lambda, c) in schur_expand(&pieri_term(n, j)?)?.iter() {
            out.add_term(lambda.clone(), QPoly::monomial(c.clone(), j));
        }
    }
    if let Some((lambda, c)) = out.iter().find(|(_, c)| !c.is_nonnegative()) {
        return Err(Error::Consistency(format!(
            "coefficient {c} of s[{lambda}] has a negative entry"
        )));
    }
    Ok(out)
}

/// `sum_j (-1)^j e_j(X) h_1(X)^{n-j}`, expanded directly.
pub fn alternating_expansion(n: usize) -> Result<SchurVector> {
    check_range(n, 1, DERANGEMENT_MAX_N, "alternating_expansion")?;
    let mut acc = MonomialPoly::zero(n);
    for j in 0..=n {
        let term = pieri_term(n, j)?;
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc = &acc - &term;
        }
    }
    schur_expand(&acc)
}

/// Specializes `q` to `q0` in every coefficient.
pub fn eval_q(v: &SchurVector<QPoly>, q0: &BigInt) -> SchurVector {
    v.map(|c| c.eval(q0))
}

/// For every `lambda |- n`, the number of standard tableaux of shape
/// `lambda` whose smallest ascent is even. Shapes with no such tableau map
/// to zero.
pub fn a_coeffs_syt(n: usize) -> Result<BTreeMap<Partition, u64>> {
    check_range(n, 2, SYT_MAX_N, "a_coeffs_syt")?;
    partitions_up_to(n, n)
        .into_iter()
        .map(|lambda| {
            let mut count = 0;
            for t in syt_list(&lambda) {
                if t.smallest_ascent()? % 2 == 0 {
                    count += 1;
                }
            }
            Ok((lambda, count))
        })
        .collect()
}

/// `sum_lambda c_lambda(q0) f^lambda`: the dimension of a symmetric group
/// module whose Frobenius characteristic is `v` at `q = q0`. All
/// partitions must have the same size.
pub fn frobenius_dimension<C: EvalAtQ + Clone + Zero>(
    v: &SchurVector<C>,
    q0: &BigInt,
) -> Result<BigInt> {
    let sizes = v.degrees();
    if sizes.len() > 1 {
        return Err(Error::SizeMismatch {
            left: sizes[0],
            right: sizes[sizes.len() - 1],
        });
    }
    Ok(v.iter()
        .map(|(lambda, c)| c.eval_at(q0) * BigInt::from(num_syt(lambda)))
        .sum())
}
