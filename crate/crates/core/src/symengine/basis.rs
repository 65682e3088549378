//! Monomial and Schur bases of symmetric polynomials and the conversions
//! between them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::poly::{elementary_all, Alphabet, Monomial, MonomialPoly};
use crate::error::{Error, Result};
use crate::partitions::{kostka_column, partitions_up_to, Partition};

/// `sum c_lambda m_lambda` in `var_count` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVector {
    var_count: usize,
    terms: BTreeMap<Partition, BigInt>,
}

/// `sum c_lambda s_lambda` in `var_count` variables. The coefficient type
/// is a big integer by default; the derangement module uses polynomials
/// in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurVector<C = BigInt> {
    var_count: usize,
    terms: BTreeMap<Partition, C>,
}

macro_rules! basis_vector_common {
    ($ty:ident, $c:ty, [$($head:tt)*]) => {
        $($head)* {
            pub fn var_count(&self) -> usize {
                self.var_count
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn get(&self, lambda: &Partition) -> Option<&$c> {
                self.terms.get(lambda)
            }

            /// Terms in the crate's partition order.
            pub fn iter(&self) -> impl Iterator<Item = (&Partition, &$c)> {
                self.terms.iter()
            }

            pub fn terms(&self) -> &BTreeMap<Partition, $c> {
                &self.terms
            }

            /// Adds `c` to the coefficient of `lambda`, dropping it if the
            /// sum vanishes. Panics if `lambda` has more parts than variables.
            pub fn add_term(&mut self, lambda: Partition, c: $c) {
                assert!(
                    lambda.len() <= self.var_count,
                    "{lambda:?} has more than {} parts",
                    self.var_count
                );
                if c.is_zero() {
                    return;
                }
                let slot = self.terms.entry(lambda.clone()).or_insert_with(<$c>::zero);
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&lambda);
                }
            }

            /// Sizes of the indexing partitions that occur.
            pub fn degrees(&self) -> Vec<usize> {
                let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
                d.dedup();
                d
            }

            pub fn homogeneous_component(&self, d: usize) -> Self {
                $ty {
                    var_count: self.var_count,
                    terms: self
                        .terms
                        .iter()
                        .filter(|(k, _)| k.size() == d)
                        .map(|(k, c)| (k.clone(), c.clone()))
                        .collect(),
                }
            }
        }
    };
}

basis_vector_common!(MVector, BigInt, [impl MVector]);
basis_vector_common!(SchurVector, C, [impl<C: Clone + Zero> SchurVector<C>]);

impl MVector {
    pub fn new(var_count: usize) -> Self {
        MVector {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, C>(var_count: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut v = Self::new(var_count);
        for (k, c) in terms {
            v.add_term(k, c.into());
        }
        v
    }

    /// The polynomial `sum c_lambda m_lambda`, expanding each orbit sum.
    pub fn to_poly(&self) -> MonomialPoly {
        let mut p = MonomialPoly::zero(self.var_count);
        for (lambda, c) in &self.terms {
            let mut exps = lambda.padded(self.var_count);
            exps.sort_unstable();
            loop {
                let m = Monomial::from_exponents(&exps).expect("exponents within limits");
                p.add_term(m, c.clone());
                if !next_permutation(&mut exps) {
                    break;
                }
            }
        }
        p
    }
}

impl<C: Clone + Zero> SchurVector<C> {
    pub fn new(var_count: usize) -> Self {
        SchurVector {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, D>(var_count: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, D)>,
        D: Into<C>,
    {
        let mut v = Self::new(var_count);
        for (k, c) in terms {
            v.add_term(k, c.into());
        }
        v
    }

    /// Same coefficients viewed in a different number of variables. Panics
    /// if a partition has more parts than `var_count`.
    pub fn with_var_count(&self, var_count: usize) -> Self {
        Self::from_terms(var_count, self.terms.clone())
    }

    pub fn map<D: Clone + Zero>(&self, f: impl Fn(&C) -> D) -> SchurVector<D> {
        SchurVector::from_terms(
            self.var_count,
            self.terms.iter().map(|(k, c)| (k.clone(), f(c))),
        )
    }
}

impl SchurVector<BigInt> {
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sum of two vectors in the same number of variables.
    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.var_count, other.var_count, "variable count mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        self.map(|c| c * k)
    }
}

/// Renders `2s[3] + 5s[2,1] - s[1,1,1]`; the zero vector is `0`.
impl fmt::Display for SchurVector<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms.iter(), "s")
    }
}

impl fmt::Display for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms.iter(), "m")
    }
}

fn write_signed_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Partition, &'a BigInt)>,
    basis: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
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
        write!(f, "{basis}[{k}]")?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Rearranges `v` into the next permutation in lexicographic order.
/// Returns false (leaving `v` sorted ascending) after the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn orbit_size(block: &[u32]) -> u128 {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &e in block {
        *counts.entry(e).or_default() += 1;
    }
    let fact = |k: u32| (1..=k as u128).product::<u128>();
    counts
        .values()
        .fold(fact(block.len() as u32), |acc, &m| acc / fact(m))
}

/// A contiguous group of variables inside which a polynomial must be
/// symmetric.
#[derive(Clone, Copy, Debug)]
pub struct VarBlock {
    pub offset: usize,
    pub len: usize,
    pub name: &'static str,
}

/// Checks that `p` is symmetric under permutations inside each block.
/// On failure returns the lexicographically first exponent vector whose
/// coefficient differs from that of its block-sorted rearrangement.
pub fn check_block_symmetry(p: &MonomialPoly, blocks: &[VarBlock]) -> Result<()> {
    let n = p.var_count();
    let named = blocks.len() > 1;
    let mut keyed: Vec<(Vec<u32>, Monomial, &BigInt)> =
        p.terms().map(|(m, c)| (m.exponents(n), m, c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    for b in blocks {
        let sort = |m: Monomial| m.sorted_block(b.offset, b.len);
        let fail = |m: Monomial| Error::NotSymmetric {
            exponent: m.exponents(n),
            sorted: sort(m).exponents(n),
            block: named.then_some(b.name),
        };
        // Each term agrees with its sorted representative ...
        for (_, m, c) in &keyed {
            if p.coeff(sort(*m)) != Some(*c) {
                return Err(fail(*m));
            }
        }
        // ... and every orbit is complete.
        let mut orbit_counts: FxHashMap<Monomial, u128> = FxHashMap::default();
        for (_, m, _) in &keyed {
            *orbit_counts.entry(sort(*m)).or_default() += 1;
        }
        let mut reps: Vec<_> = orbit_counts.into_iter().collect();
        reps.sort_by_key(|(m, _)| m.exponents(n));
        for (rep, count) in reps {
            let exps = rep.exponents(n);
            let block = &exps[b.offset..b.offset + b.len];
            if orbit_size(block) != count {
                let mut perm = block.to_vec();
                perm.sort_unstable();
                loop {
                    let mut full = exps.clone();
                    full[b.offset..b.offset + b.len].copy_from_slice(&perm);
                    let m = Monomial::from_exponents(&full).expect("same degree");
                    if p.coeff(m).is_none() {
                        return Err(fail(m));
                    }
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Reads off the monomial-symmetric coefficients of a symmetric
/// polynomial, after checking that it really is symmetric.
pub fn to_mvector(p: &MonomialPoly) -> Result<MVector> {
    let n = p.var_count();
    check_block_symmetry(
        p,
        &[VarBlock {
            offset: 0,
            len: n,
            name: "x",
        }],
    )?;
    let mut v = MVector::new(n);
    for (m, c) in p.terms() {
        if m.sorted_block(0, n) == m {
            v.add_term(Partition::from_unsorted(m.exponents(n)), c.clone());
        }
    }
    Ok(v)
}

/// Row `lambda` of the Kostka matrix restricted to contents with at most
/// `var_count` parts: the pairs `(mu, K_{lambda mu})` with nonzero entry.
pub(crate) struct KostkaTable {
    rows: FxHashMap<Partition, Vec<(Partition, BigInt)>>,
}

impl KostkaTable {
    fn build(degree: usize, var_count: usize) -> Self {
        let mut rows: FxHashMap<Partition, Vec<(Partition, BigInt)>> = FxHashMap::default();
        for mu in partitions_up_to(degree, var_count) {
            for (lambda, k) in kostka_column(mu.parts(), var_count) {
                rows.entry(lambda)
                    .or_default()
                    .push((mu.clone(), BigInt::from(k)));
            }
        }
        for row in rows.values_mut() {
            row.sort_by(|a, b| a.0.cmp(&b.0));
        }
        KostkaTable { rows }
    }

    /// Shared table for `(degree, var_count)`, built on first use.
    pub(crate) fn get(degree: usize, var_count: usize) -> Arc<KostkaTable> {
        type Cache = Mutex<FxHashMap<(usize, usize), Arc<KostkaTable>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let key = (degree, var_count.min(degree));
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&key) {
            return Arc::clone(t);
        }
        let table = Arc::new(KostkaTable::build(key.0, key.1));
        Arc::clone(cache.lock().unwrap().entry(key).or_insert(table))
    }

    pub(crate) fn row(&self, lambda: &Partition) -> &[(Partition, BigInt)] {
        self.rows.get(lambda).map_or(&[], Vec::as_slice)
    }
}

/// Converts to the Schur basis by back-substitution through the
/// unitriangular Kostka matrix, largest partition first.
pub fn m_to_schur(v: &MVector) -> SchurVector {
    let n = v.var_count();
    let mut out = SchurVector::new(n);
    for d in v.degrees() {
        let table = KostkaTable::get(d, n);
        let mut rest: BTreeMap<Partition, BigInt> = v
            .iter()
            .filter(|(k, _)| k.size() == d)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        while let Some((lambda, c)) = rest.pop_first() {
            for (mu, k) in table.row(&lambda) {
                if mu == &lambda {
                    debug_assert!(k.is_one());
                    continue;
                }
                let slot = rest.entry(mu.clone()).or_insert_with(BigInt::zero);
                *slot -= &c * k;
                if slot.is_zero() {
                    rest.remove(mu);
                }
            }
            out.add_term(lambda, c);
        }
    }
    out
}

/// `sum c_lambda sum_mu K_{lambda mu} m_mu`, with contents limited to the
/// number of variables.
pub fn schur_to_m(v: &SchurVector) -> MVector {
    let n = v.var_count();
    let mut out = MVector::new(n);
    for (lambda, c) in v.iter() {
        let table = KostkaTable::get(lambda.size(), n);
        for (mu, k) in table.row(lambda) {
            out.add_term(mu.clone(), c * k);
        }
    }
    out
}

/// Schur expansion of a symmetric polynomial.
pub fn schur_expand(p: &MonomialPoly) -> Result<SchurVector> {
    Ok(m_to_schur(&to_mvector(p)?))
}

/// Determinant of a square matrix of polynomials by expansion along rows,
/// memoized on the set of used columns.
fn poly_det(m: &[Vec<MonomialPoly>], var_count: usize) -> MonomialPoly {
    let k = m.len();
    let mut memo: FxHashMap<u32, MonomialPoly> = FxHashMap::default();
    fn go(
        m: &[Vec<MonomialPoly>],
        used: u32,
        var_count: usize,
        memo: &mut FxHashMap<u32, MonomialPoly>,
    ) -> MonomialPoly {
        let row = used.count_ones() as usize;
        if row == m.len() {
            return MonomialPoly::one(var_count);
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = MonomialPoly::zero(var_count);
        let mut free_before = 0;
        for j in 0..m.len() {
            if used & (1 << j) != 0 {
                continue;
            }
            let entry = &m[row][j];
            if !entry.is_zero() {
                let minor = go(m, used | (1 << j), var_count, memo);
                let term = entry * &minor;
                if free_before % 2 == 0 {
                    acc += &term;
                } else {
                    acc = &acc - &term;
                }
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    assert!(k < 32);
    go(m, 0, var_count, &mut memo)
}

/// `s_lambda` evaluated at the forms of `alphabet`, expanded in the Schur
/// basis of the underlying variables. Uses the dual Jacobi-Trudi
/// determinant `det(e_{lambda'_i - i + j})` in the elementary polynomials
/// of the alphabet.
pub fn schur_at_alphabet(lambda: &Partition, alphabet: &Alphabet) -> Result<SchurVector> {
    let n = alphabet.var_count();
    if lambda.len() > alphabet.len() {
        return Ok(SchurVector::new(n));
    }
    if lambda.is_empty() {
        return Ok(SchurVector::from_terms(n, [(Partition::empty(), 1)]));
    }
    let conj = lambda.conjugate();
    let k = conj.len();
    let e = elementary_all(alphabet, conj.part(0) as usize + k)?;
    let entry = |idx: i64| -> MonomialPoly {
        if idx < 0 || idx as usize >= e.len() {
            MonomialPoly::zero(n)
        } else {
            e[idx as usize].clone()
        }
    };
    let matrix: Vec<Vec<MonomialPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| entry(conj.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    schur_expand(&poly_det(&matrix, n))
}
