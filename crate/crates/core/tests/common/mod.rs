//! Reference implementations used to check the library. They share no
//! code with it: polynomials are plain exponent maps, Schur coefficients
//! come from multiplying by the Vandermonde determinant, and tableaux and
//! field points are enumerated by brute force.

#![allow(dead_code)]

use std::collections::BTreeMap;

use boolprod::{Partition, SchurVector};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Poly = BTreeMap<Vec<u32>, BigInt>;

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn poly_one(nvars: usize) -> Poly {
    Poly::from([(vec![0; nvars], BigInt::one())])
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_insert_with(BigInt::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn linear(coeffs: &[i64]) -> Poly {
    let n = coeffs.len();
    let mut out = Poly::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            let mut e = vec![0; n];
            e[i] = 1;
            out.insert(e, BigInt::from(c));
        }
    }
    out
}

pub fn product(forms: &[Vec<i64>], nvars: usize) -> Poly {
    forms
        .iter()
        .fold(poly_one(nvars), |acc, f| poly_mul(&acc, &linear(f)))
}

/// `k`-subsets of `0..n`, by scanning bitmasks.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

pub fn subset_forms(n: usize, k: usize) -> Vec<Vec<i64>> {
    subsets(n, k)
        .into_iter()
        .map(|s| (0..n).map(|i| i64::from(s.contains(&i))).collect())
        .collect()
}

/// `e_p` of the forms as a sum of products over `p`-subsets.
pub fn elementary(forms: &[Vec<i64>], p: usize, nvars: usize) -> Poly {
    subsets(forms.len(), p).iter().fold(Poly::new(), |acc, s| {
        let chosen: Vec<Vec<i64>> = s.iter().map(|&i| forms[i].clone()).collect();
        poly_add(&acc, &product(&chosen, nvars))
    })
}

/// Schur coefficients of a symmetric polynomial: the coefficient of
/// `s_lambda` is that of `x^{lambda + delta}` in `f * prod_{i<j} (x_i - x_j)`.
pub fn schur_coeffs(f: &Poly, nvars: usize) -> BTreeMap<Partition, BigInt> {
    let mut vandermonde = poly_one(nvars);
    for i in 0..nvars {
        for j in i + 1..nvars {
            let mut c = vec![0; nvars];
            c[i] = 1;
            c[j] = -1;
            vandermonde = poly_mul(&vandermonde, &linear(&c));
        }
    }
    let mut out = BTreeMap::new();
    for (e, c) in poly_mul(f, &vandermonde) {
        if e.windows(2).all(|w| w[0] > w[1]) {
            let parts: Vec<u32> = e
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (nvars - 1 - i) as u32)
                .collect();
            out.insert(Partition::from_unsorted(parts), c);
        }
    }
    out
}

pub fn schur_vector(f: &Poly, nvars: usize) -> SchurVector {
    SchurVector::from_terms(nvars, schur_coeffs(f, nvars))
}

/// Semistandard fillings of `shape` with the given content, counted by
/// filling cells row by row (French: row 0 at the bottom).
pub fn ssyt_count(shape: &[u32], content: &[u32]) -> u64 {
    fn go(
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<u32>>,
        left: &mut Vec<u32>,
    ) -> u64 {
        if idx == cells.len() {
            return u64::from(left.iter().all(|&c| c == 0));
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=left.len() as u32 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            left[v as usize - 1] -= 1;
            grid[r][c] = v;
            total += go(cells, idx + 1, grid, left);
            left[v as usize - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    if cells.len() != content.iter().sum::<u32>() as usize {
        return 0;
    }
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    go(&cells, 0, &mut grid, &mut content.to_vec())
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// Standard tableaux of `shape`: every filling by a permutation, kept if
/// rows increase rightward and columns increase upward.
pub fn syt_brute(shape: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let n: u32 = shape.iter().sum();
    let mut out = Vec::new();
    for perm in permutations(n) {
        let mut rows = Vec::new();
        let mut it = perm.into_iter();
        for &len in shape {
            rows.push(it.by_ref().take(len as usize).collect::<Vec<u32>>());
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| up > down));
        if rows_ok && cols_ok {
            out.push(rows);
        }
    }
    out
}

/// Smallest `i` such that `i + 1` does not sit in a strictly higher row
/// than `i`; `n` itself always qualifies.
pub fn smallest_ascent(rows: &[Vec<u32>]) -> u32 {
    let n: usize = rows.iter().map(Vec::len).sum();
    let row_of = |v: u32| rows.iter().position(|r| r.contains(&v)).unwrap();
    (1..n as u32)
        .find(|&i| row_of(i + 1) <= row_of(i))
        .unwrap_or(n as u32)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Derangements of `n` letters by inclusion-exclusion.
pub fn derangements(n: u64) -> BigInt {
    (0..=n).fold(BigInt::zero(), |acc, k| {
        let term = factorial(n) / factorial(k);
        if k % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Points of `F_p^n` with every nonempty subset sum nonzero, by visiting
/// all `p^n` points.
pub fn complement_count_brute(n: usize, p: u64) -> u64 {
    let mut count = 0;
    let mut v = vec![0u64; n];
    loop {
        let ok = (1u32..1 << n).all(|s| {
            (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| v[i])
                .sum::<u64>()
                % p
                != 0
        });
        count += u64::from(ok);
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

pub fn binom(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    (0..b).fold(BigInt::one(), |acc, i| acc * (a - i) / (i + 1))
}

fn vandermonde_block(nvars: usize, offset: usize, len: usize) -> Poly {
    let mut v = poly_one(nvars);
    for i in offset..offset + len {
        for j in i + 1..offset + len {
            let mut c = vec![0; nvars];
            c[i] = 1;
            c[j] = -1;
            v = poly_mul(&v, &linear(&c));
        }
    }
    v
}

fn unshift(block: &[u32]) -> Option<Partition> {
    let len = block.len();
    if !block.windows(2).all(|w| w[0] > w[1]) {
        return None;
    }
    Some(Partition::from_unsorted(
        block
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i) as u32)
            .collect(),
    ))
}

/// Coefficients of `s_lambda(x_1..x_n) s_mu(y_1..y_m)` in `f`, using one
/// Vandermonde factor per block.
pub fn bischur_coeffs(f: &Poly, n: usize, m: usize) -> BTreeMap<(Partition, Partition), BigInt> {
    let g = poly_mul(
        &poly_mul(f, &vandermonde_block(n + m, 0, n)),
        &vandermonde_block(n + m, n, m),
    );
    let mut out = BTreeMap::new();
    for (e, c) in g {
        if let (Some(l), Some(u)) = (unshift(&e[..n]), unshift(&e[n..])) {
            out.insert((l, u), c);
        }
    }
    out
}

/// The forms `X_S + Y_T`, x block first.
pub fn pair_forms(n: usize, m: usize, j: usize, k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for s in subsets(n, j) {
        for t in subsets(m, k) {
            out.push(
                (0..n)
                    .map(|i| i64::from(s.contains(&i)))
                    .chain((0..m).map(|i| i64::from(t.contains(&i))))
                    .collect(),
            );
        }
    }
    out
}

/// `det(e_{lambda'_i - i + j})` with the `e`'s supplied by the caller,
/// expanded over all permutations.
pub fn dual_jacobi_trudi(lambda: &Partition, e: &dyn Fn(i64) -> Poly, nvars: usize) -> Poly {
    let conj = lambda.conjugate();
    let k = conj.len();
    if k == 0 {
        return poly_one(nvars);
    }
    let mut total = Poly::new();
    for perm in permutations(k as u32) {
        let mut sign = 1i64;
        for a in 0..k {
            for b in a + 1..k {
                if perm[a] > perm[b] {
                    sign = -sign;
                }
            }
        }
        let mut term = poly_one(nvars);
        for (i, &pj) in perm.iter().enumerate() {
            let j = pj as i64 - 1;
            term = poly_mul(&term, &e(conj.part(i) as i64 - i as i64 + j));
        }
        if sign < 0 {
            term.values_mut().for_each(|c| *c = -c.clone());
        }
        total = poly_add(&total, &term);
    }
    total
}
