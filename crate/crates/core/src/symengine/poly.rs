//! Sparse multivariate polynomials with big-integer coefficients, linear
//! forms, and alphabets of linear forms.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

/// Most variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 16;
/// Largest total degree a [`MonomialPoly`] may reach.
pub const MAX_DEGREE: u32 = 255;

const LANE_BITS: u32 = 8;
const LANE_MASK: u128 = 0xff;

/// An exponent vector packed into 8-bit lanes; lane `i` is the exponent of
/// `x_{i+1}`. Multiplication of monomials is lane-wise addition, which
/// cannot carry as long as every product stays within [`MAX_DEGREE`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Capacity(format!(
                "{} variables exceeds the limit of {MAX_VARS}",
                exps.len()
            )));
        }
        let degree: u32 = exps.iter().sum();
        if degree > MAX_DEGREE {
            return Err(Error::Capacity(format!(
                "degree {degree} exceeds the limit of {MAX_DEGREE}"
            )));
        }
        Ok(Self::pack(exps))
    }

    fn pack(exps: &[u32]) -> Self {
        let mut v = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            v |= (e as u128) << (LANE_BITS * i as u32);
        }
        Monomial(v)
    }

    /// The monomial `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS);
        Monomial(1u128 << (LANE_BITS * i as u32))
    }

    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> (LANE_BITS * i as u32)) & LANE_MASK) as u32
    }

    pub fn exponents(self, var_count: usize) -> Vec<u32> {
        (0..var_count).map(|i| self.exponent(i)).collect()
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exponent(i)).sum()
    }

    /// Exponents `offset..offset+len` sorted into weakly decreasing order,
    /// the other lanes untouched.
    pub fn sorted_block(self, offset: usize, len: usize) -> Self {
        let mut block: Vec<u32> = (offset..offset + len).map(|i| self.exponent(i)).collect();
        block.sort_unstable_by(|a, b| b.cmp(a));
        let mut v = self.0;
        for (k, e) in block.into_iter().enumerate() {
            let shift = LANE_BITS * (offset + k) as u32;
            v = (v & !(LANE_MASK << shift)) | ((e as u128) << shift);
        }
        Monomial(v)
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS)
            .rev()
            .find(|&i| self.exponent(i) > 0)
            .map_or(0, |i| i + 1);
        write!(f, "{:?}", self.exponents(last))
    }
}

/// A polynomial in `var_count` commuting variables with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    var_count: usize,
    terms: FxHashMap<Monomial, BigInt>,
}

impl MonomialPoly {
    pub fn zero(var_count: usize) -> Self {
        assert!(
            var_count <= MAX_VARS,
            "at most {MAX_VARS} variables are supported"
        );
        MonomialPoly {
            var_count,
            terms: FxHashMap::default(),
        }
    }

    pub fn constant(var_count: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var_count);
        p.add_term(Monomial::ONE, c.into());
        p
    }

    pub fn one(var_count: usize) -> Self {
        Self::constant(var_count, 1)
    }

    /// The variable `x_{i+1}`.
    pub fn variable(var_count: usize, i: usize) -> Self {
        assert!(i < var_count);
        let mut p = Self::zero(var_count);
        p.add_term(Monomial::var(i), BigInt::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(var_count: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        if var_count > MAX_VARS {
            return Err(Error::Capacity(format!(
                "{var_count} variables exceeds the limit of {MAX_VARS}"
            )));
        }
        let mut p = Self::zero(var_count);
        for (exps, c) in terms {
            if exps.len() != var_count {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector {exps:?} does not have {var_count} entries"
                )));
            }
            p.add_term(Monomial::from_exponents(&exps)?, c.into());
        }
        Ok(p)
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn coeff(&self, m: Monomial) -> Option<&BigInt> {
        self.terms.get(&m)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> BigInt {
        Monomial::from_exponents(exps)
            .ok()
            .and_then(|m| self.terms.get(&m).cloned())
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Terms as exponent vectors, lexicographically sorted.
    pub fn sorted_terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.exponents(self.var_count), c.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// The part of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> MonomialPoly {
        MonomialPoly {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> MonomialPoly {
        if k.is_zero() {
            return Self::zero(self.var_count);
        }
        MonomialPoly {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MonomialPoly {
        let mut acc = Self::one(self.var_count);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Product with a linear form. Cheaper than the general product.
    pub fn mul_linear(&self, form: &LinearForm) -> MonomialPoly {
        assert_eq!(form.var_count(), self.var_count, "variable count mismatch");
        let mut out = Self::zero(self.var_count);
        if let Some(d) = self.degree() {
            assert!(d < MAX_DEGREE, "degree limit {MAX_DEGREE} exceeded");
        }
        out.terms.reserve(self.terms.len() * 2);
        for (i, a) in form.coeffs().iter().enumerate() {
            if *a == 0 {
                continue;
            }
            let v = Monomial::var(i);
            let a = BigInt::from(*a);
            for (m, c) in &self.terms {
                out.add_term(m.times(v), c * &a);
            }
        }
        out
    }

    fn check_product_degree(&self, other: &MonomialPoly) {
        let d = self.degree().unwrap_or(0) + other.degree().unwrap_or(0);
        assert!(
            d <= MAX_DEGREE,
            "degree {d} exceeds the limit of {MAX_DEGREE}"
        );
    }
}

impl fmt::Debug for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.sorted_terms()).finish()
    }
}

impl Add<&MonomialPoly> for &MonomialPoly {
    type Output = MonomialPoly;

    fn add(self, rhs: &MonomialPoly) -> MonomialPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MonomialPoly> for MonomialPoly {
    fn add_assign(&mut self, rhs: &MonomialPoly) {
        assert_eq!(self.var_count, rhs.var_count, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Neg for &MonomialPoly {
    type Output = MonomialPoly;

    fn neg(self) -> MonomialPoly {
        MonomialPoly {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub<&MonomialPoly> for &MonomialPoly {
    type Output = MonomialPoly;

    fn sub(self, rhs: &MonomialPoly) -> MonomialPoly {
        self + &(-rhs)
    }
}

impl Mul<&MonomialPoly> for &MonomialPoly {
    type Output = MonomialPoly;

    fn mul(self, rhs: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.var_count, rhs.var_count, "variable count mismatch");
        self.check_product_degree(rhs);
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = MonomialPoly::zero(self.var_count);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

/// An integer linear combination of the variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm { coeffs }
    }

    /// The subset sum `sum_{i in subset} x_i`, with 0-based indices.
    pub fn subset_sum(var_count: usize, subset: &[usize]) -> Self {
        let mut coeffs = vec![0; var_count];
        for &i in subset {
            coeffs[i] += 1;
        }
        LinearForm { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn var_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn to_poly(&self) -> MonomialPoly {
        let mut p = MonomialPoly::zero(self.var_count());
        for (i, &c) in self.coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), BigInt::from(c));
        }
        p
    }

    /// Places this form in a larger variable space starting at `offset`.
    pub fn embed(&self, var_count: usize, offset: usize) -> LinearForm {
        let mut coeffs = vec![0; var_count];
        coeffs[offset..offset + self.coeffs.len()].copy_from_slice(&self.coeffs);
        LinearForm { coeffs }
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "x{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add<&LinearForm> for &LinearForm {
    type Output = LinearForm;

    fn add(self, rhs: &LinearForm) -> LinearForm {
        assert_eq!(self.var_count(), rhs.var_count());
        LinearForm::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// An ordered sequence of linear forms over a common set of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    var_count: usize,
    forms: Vec<LinearForm>,
}

impl Alphabet {
    pub fn new(var_count: usize, forms: Vec<LinearForm>) -> Result<Self> {
        if var_count > MAX_VARS {
            return Err(Error::Capacity(format!(
                "{var_count} variables exceeds the limit of {MAX_VARS}"
            )));
        }
        if let Some(f) = forms.iter().find(|f| f.var_count() != var_count) {
            return Err(Error::InvalidArgument(format!(
                "form {f:?} has {} coefficients, expected {var_count}",
                f.var_count()
            )));
        }
        Ok(Alphabet { var_count, forms })
    }

    /// The variables themselves, `{x_1, ..., x_n}`.
    pub fn variables(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|i| LinearForm::subset_sum(n, &[i])).collect())
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    fn check_capacity(&self) -> Result<()> {
        if self.forms.len() > MAX_DEGREE as usize {
            return Err(Error::Capacity(format!(
                "{} forms exceeds the degree limit of {MAX_DEGREE}",
                self.forms.len()
            )));
        }
        Ok(())
    }
}

/// How products over an alphabet are evaluated. Both give identical
/// results; they differ only in speed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProductStrategy {
    /// Multiply the forms in one at a time.
    #[default]
    Fold,
    /// Balanced binary tree over the forms, branches evaluated in parallel.
    Balanced,
}

/// Expansion of the product of all forms of `alphabet`. The empty product
/// is the constant 1.
pub fn alphabet_product(alphabet: &Alphabet) -> Result<MonomialPoly> {
    alphabet_product_with(alphabet, ProductStrategy::default())
}

pub fn alphabet_product_with(
    alphabet: &Alphabet,
    strategy: ProductStrategy,
) -> Result<MonomialPoly> {
    alphabet.check_capacity()?;
    let n = alphabet.var_count();
    Ok(match strategy {
        ProductStrategy::Fold => alphabet
            .forms()
            .iter()
            .fold(MonomialPoly::one(n), |acc, f| acc.mul_linear(f)),
        ProductStrategy::Balanced => product_tree(n, alphabet.forms()),
    })
}

fn product_tree(n: usize, forms: &[LinearForm]) -> MonomialPoly {
    match forms.len() {
        0 => MonomialPoly::one(n),
        1 => forms[0].to_poly(),
        len => {
            let (l, r) = forms.split_at(len / 2);
            let (a, b) = rayon::join(|| product_tree(n, l), || product_tree(n, r));
            &a * &b
        }
    }
}

/// `e_p` of the forms of `alphabet`: the coefficient of `t^p` in
/// `prod_f (1 + t f)`. Zero when `p > |alphabet|`.
pub fn elementary_of_alphabet(p: usize, alphabet: &Alphabet) -> Result<MonomialPoly> {
    let mut all = elementary_all(alphabet, p)?;
    Ok(if p < all.len() {
        all.swap_remove(p)
    } else {
        MonomialPoly::zero(alphabet.var_count())
    })
}

/// `[e_0, e_1, ..., e_q]` of the forms of `alphabet` with
/// `q = min(max_p, |alphabet|)`.
pub fn elementary_all(alphabet: &Alphabet, max_p: usize) -> Result<Vec<MonomialPoly>> {
    elementary_all_with(alphabet, max_p, ProductStrategy::default())
}

pub fn elementary_all_with(
    alphabet: &Alphabet,
    max_p: usize,
    strategy: ProductStrategy,
) -> Result<Vec<MonomialPoly>> {
    alphabet.check_capacity()?;
    let n = alphabet.var_count();
    let top = max_p.min(alphabet.len());
    Ok(match strategy {
        ProductStrategy::Fold => {
            let mut e = vec![MonomialPoly::one(n)];
            for f in alphabet.forms() {
                if e.len() <= top {
                    e.push(MonomialPoly::zero(n));
                }
                for i in (1..e.len()).rev() {
                    let add = e[i - 1].mul_linear(f);
                    e[i] += &add;
                }
            }
            e.resize(top + 1, MonomialPoly::zero(n));
            e
        }
        ProductStrategy::Balanced => {
            let mut e = truncated_tree(n, alphabet.forms(), top);
            e.resize(top + 1, MonomialPoly::zero(n));
            e
        }
    })
}

/// `prod_f (1 + t f)` over `forms`, as coefficients of `t^0..=t^top`.
fn truncated_tree(n: usize, forms: &[LinearForm], top: usize) -> Vec<MonomialPoly> {
    match forms.len() {
        0 => vec![MonomialPoly::one(n)],
        1 => {
            let mut v = vec![MonomialPoly::one(n)];
            if top >= 1 {
                v.push(forms[0].to_poly());
            }
            v
        }
        len => {
            let (l, r) = forms.split_at(len / 2);
            let (a, b) = rayon::join(|| truncated_tree(n, l, top), || truncated_tree(n, r, top));
            let deg = (a.len() + b.len() - 2).min(top);
            let mut out = vec![MonomialPoly::zero(n); deg + 1];
            for (i, pa) in a.iter().enumerate() {
                for (j, pb) in b.iter().enumerate() {
                    if i + j <= deg {
                        out[i + j] += &(pa * pb);
                    }
                }
            }
            out
        }
    }
}

/// Whether every coefficient is nonnegative.
pub fn is_nonnegative(p: &MonomialPoly) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}
