//! Products over two alphabets, `P_{j,k}(X, Y) = prod_{|S|=j, |T|=k} (X_S + Y_T)`,
//! expanded in the basis `s_lambda(X) s_mu(Y)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::boolean::k_subsets;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symengine::{
    alphabet_product, check_block_symmetry, m_to_schur, Alphabet, LinearForm, MVector, VarBlock,
};

/// Largest number of linear factors [`pjk_expand`] multiplies.
pub const PJK_MAX_FORMS: usize = 30;
/// Largest `n * m` accepted by [`dual_cauchy_reference`].
pub const CAUCHY_MAX_BOX: usize = 16;

/// `sum a_{lambda,mu} s_lambda(x_1..x_n) s_mu(y_1..y_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSchurVector {
    n: usize,
    m: usize,
    terms: BTreeMap<(Partition, Partition), BigInt>,
}

impl BiSchurVector {
    pub fn new(n: usize, m: usize) -> Self {
        BiSchurVector {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, C>(n: usize, m: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = ((Partition, Partition), C)>,
        C: Into<BigInt>,
    {
        let mut v = Self::new(n, m);
        for ((lambda, mu), c) in terms {
            v.add_term(lambda, mu, c.into());
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        self.terms.get(&(lambda.clone(), mu.clone()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigInt)> {
        self.terms.iter()
    }

    /// Panics if `lambda` has more than `n` parts or `mu` more than `m`.
    pub fn add_term(&mut self, lambda: Partition, mu: Partition, c: BigInt) {
        assert!(
            lambda.len() <= self.n && mu.len() <= self.m,
            "({lambda:?}, {mu:?}) too long"
        );
        if c.is_zero() {
            return;
        }
        let key = (lambda, mu);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exchanges the roles of the two alphabets.
    pub fn swapped(&self) -> BiSchurVector {
        BiSchurVector::from_terms(
            self.m,
            self.n,
            self.terms
                .iter()
                .map(|((l, u), c)| ((u.clone(), l.clone()), c.clone())),
        )
    }
}

/// `s[1,1](x) s[-](y) + 2s[1](x) s[1](y)`; the zero vector is `0`.
impl fmt::Display for BiSchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((lambda, mu), c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "s[{lambda}](x) s[{mu}](y)")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The forms `X_S + Y_T` over `x_1..x_n, y_1..y_m` (x block first), `S`
/// outer and `T` inner, both in lexicographic order.
pub fn pair_forms(n: usize, m: usize, j: usize, k: usize) -> Result<Alphabet> {
    if j > n || k > m {
        return Err(Error::InvalidArgument(format!(
            "need j <= n and k <= m, got n = {n}, m = {m}, j = {j}, k = {k}"
        )));
    }
    if n == 0 && m == 0 {
        return Err(Error::InvalidArgument("n and m cannot both be 0".into()));
    }
    let xs = k_subsets(n, j);
    let ys = k_subsets(m, k);
    let count = xs.len() * ys.len();
    if count > PJK_MAX_FORMS {
        return Err(Error::Capacity(format!(
            "{count} factors exceeds the limit of {PJK_MAX_FORMS}"
        )));
    }
    let total = n + m;
    let mut forms = Vec::with_capacity(count);
    for s in &xs {
        for t in &ys {
            let idx: Vec<usize> = s.iter().copied().chain(t.iter().map(|i| n + i)).collect();
            forms.push(LinearForm::subset_sum(total, &idx));
        }
    }
    Alphabet::new(total, forms)
}

/// Converts `sum_mu c_mu(x) m_mu(y)`, keyed first on the block being
/// converted, to the Schur basis in that block.
fn convert_block(
    groups: BTreeMap<Partition, MVector>,
    mut put: impl FnMut(Partition, Partition, BigInt),
) {
    for (other, v) in groups {
        for (lambda, c) in m_to_schur(&v).iter() {
            put(lambda.clone(), other.clone(), c.clone());
        }
    }
}

/// Schur expansion of `P_{j,k}` in `n` x-variables and `m` y-variables.
/// Fails with a consistency error if a coefficient is negative.
pub fn pjk_expand(n: usize, m: usize, j: usize, k: usize) -> Result<BiSchurVector> {
    let forms = pair_forms(n, m, j, k)?;
    let poly = alphabet_product(&forms)?;
    check_block_symmetry(
        &poly,
        &[
            VarBlock {
                offset: 0,
                len: n,
                name: "x",
            },
            VarBlock {
                offset: n,
                len: m,
                name: "y",
            },
        ],
    )?;

    // double monomial coefficients: both blocks weakly decreasing
    let total = n + m;
    let mut by_mu: BTreeMap<Partition, MVector> = BTreeMap::new();
    for (mono, c) in poly.terms() {
        if mono.sorted_block(0, n).sorted_block(n, m) != mono {
            continue;
        }
        let e = mono.exponents(total);
        let lambda = Partition::from_unsorted(e[..n].to_vec());
        let mu = Partition::from_unsorted(e[n..].to_vec());
        by_mu
            .entry(mu)
            .or_insert_with(|| MVector::new(n))
            .add_term(lambda, c.clone());
    }

    // s(x) m(y) regrouped by the x-shape, then converted in y
    let mut by_lambda: BTreeMap<Partition, MVector> = BTreeMap::new();
    convert_block(by_mu, |lambda, mu, c| {
        by_lambda
            .entry(lambda)
            .or_insert_with(|| MVector::new(m))
            .add_term(mu, c);
    });
    let mut out = BiSchurVector::new(n, m);
    convert_block(by_lambda, |mu, lambda, c| out.add_term(lambda, mu, c));

    if let Some(((lambda, mu), c)) = out.iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::Consistency(format!(
            "coefficient {c} of s[{lambda}](x) s[{mu}](y) is negative"
        )));
    }
    Ok(out)
}

/// `sum_lambda s_lambda(x) s_{lambda~}(y)` over `lambda` inside the box with
/// `n` rows of length `m`, where `lambda~` is the conjugate of the
/// complement of `lambda` in the box.
pub fn dual_cauchy_reference(n: usize, m: usize) -> Result<BiSchurVector> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidArgument(format!(
            "need n, m >= 1, got n = {n}, m = {m}"
        )));
    }
    if n * m > CAUCHY_MAX_BOX {
        return Err(Error::Capacity(format!(
            "box {n}x{m} exceeds the limit of {CAUCHY_MAX_BOX} cells"
        )));
    }
    let rect = Partition::new(vec![m as u32; n])?;
    let mut out = BiSchurVector::new(n, m);
    for lambda in rect.subshapes() {
        let complement: Vec<u32> = lambda
            .padded(n)
            .iter()
            .rev()
            .map(|&p| m as u32 - p)
            .collect();
        let mu = Partition::new(complement)?.conjugate();
        out.add_term(lambda, mu, BigInt::one());
    }
    Ok(out)
}
