//! The resonance arrangement: hyperplanes `sum_{i in S} v_i = 0` for every
//! nonempty `S` of `{1, ..., n}`.
//!
//! The characteristic polynomial is obtained by counting points of the
//! complement over `F_p` for enough primes and interpolating. A prime is
//! accepted when it exceeds `(n+1)^{(n+1)/2} / 2^n`, the largest possible
//! determinant of an `n x n` 0/1 matrix: no nonzero minor of the normal
//! vectors can then vanish mod `p`, so the intersection lattice is the
//! same over `F_p` as over the rationals.
//!
//! An independent route builds the intersection lattice directly and sums
//! the Möbius function; it is only practical up to `n = 4`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for point counting.
pub const COUNT_MAX_N: usize = 6;
/// Largest `n` for [`charpoly_ff`] without the long-running opt-in.
pub const FF_DEFAULT_MAX_N: usize = 5;
/// Largest `n` for the Möbius oracle.
pub const MOBIUS_MAX_N: usize = 4;

/// Characteristic polynomial; `coeffs[i]` multiplies `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharPoly {
    coeffs: Vec<i64>,
}

impl CharPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CharPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: i64) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * t + c)
    }

    /// Checks the shape every resonance characteristic polynomial has:
    /// monic of degree `n`, `t^{n-1}` coefficient `-(2^n - 1)`, root at 1.
    pub fn check_resonance_shape(&self, n: usize) -> Result<()> {
        let fail = |what: String| Err(Error::Consistency(format!("chi_{n} = {self}: {what}")));
        if self.degree() != n || self.coeffs[n] != 1 {
            return fail(format!("expected a monic polynomial of degree {n}"));
        }
        let hyperplanes = (1i64 << n) - 1;
        if self.coeffs[n - 1] != -hyperplanes {
            return fail(format!(
                "t^{} coefficient should be {}",
                n - 1,
                -hyperplanes
            ));
        }
        if !self.eval(1).is_zero() {
            return fail("chi(1) should vanish".into());
        }
        Ok(())
    }
}

/// `t^3 - 7t^2 + 15t - 9`
impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.unsigned_abs();
            if mag != 1 || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `p > (n+1)^{(n+1)/2} / 2^n`, compared exactly after squaring.
pub fn exceeds_hadamard_bound(n: usize, p: u64) -> bool {
    let lhs = BigInt::from(p) << n;
    let rhs = BigInt::from(n as u64 + 1).pow(n as u32 + 1);
    &lhs * &lhs > rhs
}

/// The first `count` primes above the validity bound for `n`.
pub fn valid_primes(n: usize, count: usize) -> Vec<u64> {
    (2u64..)
        .filter(|&p| is_prime(p) && exceeds_hadamard_bound(n, p))
        .take(count)
        .collect()
}

/// Achievable nonempty subset sums of the coordinates chosen so far, as a
/// set of residues mod `p`.
trait ResidueSet: Sized + Send + Sync {
    fn singleton(p: u32, r: u32) -> Self;
    /// Adds coordinate `v`: `S | (S + v) | {v}`.
    fn extend(&self, p: u32, v: u32) -> Self;
    fn contains_zero(&self) -> bool;
    fn count(&self) -> u32;
}

/// Bitmask in one word, for `p <= 64`.
struct SmallSet(u128);

impl ResidueSet for SmallSet {
    fn singleton(_p: u32, r: u32) -> Self {
        SmallSet(1 << r)
    }

    fn extend(&self, p: u32, v: u32) -> Self {
        let full = (1u128 << p) - 1;
        let rotated = ((self.0 << v) | (self.0 >> (p - v))) & full;
        SmallSet(self.0 | rotated | (1 << v))
    }

    fn contains_zero(&self) -> bool {
        self.0 & 1 != 0
    }

    fn count(&self) -> u32 {
        self.0.count_ones()
    }
}

/// Bitmask over several words, for larger `p`.
struct WideSet(Vec<u64>);

impl WideSet {
    fn get(&self, i: u32) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 != 0
    }

    fn set(&mut self, i: u32) {
        self.0[(i / 64) as usize] |= 1 << (i % 64);
    }
}

impl ResidueSet for WideSet {
    fn singleton(p: u32, r: u32) -> Self {
        let mut s = WideSet(vec![0; p.div_ceil(64) as usize]);
        s.set(r);
        s
    }

    fn extend(&self, p: u32, v: u32) -> Self {
        let mut out = WideSet(self.0.clone());
        for i in 0..p {
            if self.get(i) {
                out.set((i + v) % p);
            }
        }
        out.set(v);
        out
    }

    fn contains_zero(&self) -> bool {
        self.0[0] & 1 != 0
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

/// Number of ways to choose the remaining `rest` coordinates so that no
/// nonempty subset sum vanishes, given the sums `set` of the prefix.
fn count_completions<S: ResidueSet>(p: u32, rest: usize, set: &S) -> u64 {
    match rest {
        0 => 1,
        // the last coordinate v works iff v != 0 and -v is not in the set
        1 => (p - 1 - set.count()) as u64,
        _ => (1..p)
            .map(|v| {
                let next = set.extend(p, v);
                if next.contains_zero() {
                    0
                } else {
                    count_completions(p, rest - 1, &next)
                }
            })
            .sum(),
    }
}

fn count_kernel<S: ResidueSet>(n: usize, p: u32) -> u64 {
    // Every point of the complement has nonzero coordinates, and scaling by
    // F_p^* acts freely, so fix the first coordinate to 1.
    let first = S::singleton(p, 1);
    let per_line = if n <= 2 {
        count_completions(p, n - 1, &first)
    } else {
        (1..p)
            .into_par_iter()
            .map(|v| {
                let next = first.extend(p, v);
                if next.contains_zero() {
                    0
                } else {
                    count_completions(p, n - 2, &next)
                }
            })
            .collect::<Vec<_>>()
            .into_iter()
            .sum()
    };
    per_line * (p as u64 - 1)
}

/// Number of points of `F_p^n` off every hyperplane of the arrangement.
/// Equals `chi_n(p)` for the primes accepted here.
pub fn complement_count(n: usize, p: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "complement_count needs n >= 1".into(),
        ));
    }
    if n > COUNT_MAX_N {
        return Err(Error::Capacity(format!(
            "complement_count is limited to n <= {COUNT_MAX_N}, got {n}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if !exceeds_hadamard_bound(n, p) {
        let bound = ((n + 1) as f64).powf((n + 1) as f64 / 2.0) / 2f64.powi(n as i32);
        return Err(Error::InvalidArgument(format!(
            "prime {p} does not exceed the bound (n+1)^((n+1)/2)/2^n = {bound:.3} for n = {n}"
        )));
    }
    let p32 = u32::try_from(p)
        .map_err(|_| Error::Capacity(format!("prime {p} is too large to count over")))?;
    Ok(if p32 <= 64 {
        count_kernel::<SmallSet>(n, p32)
    } else {
        count_kernel::<WideSet>(n, p32)
    })
}

/// Coefficients (constant term first) of the polynomial of least degree
/// through `points`, by exact Lagrange interpolation.
pub fn interpolate(points: &[(i64, BigInt)]) -> Vec<BigRational> {
    let k = points.len();
    let mut out = vec![BigRational::zero(); k];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // numerator prod_{j != i} (t - x_j), built up coefficientwise
        let mut basis = vec![BigInt::one()];
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigInt::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        for (d, c) in basis.into_iter().enumerate() {
            out[d] += BigRational::new(c * yi, denom.clone());
        }
    }
    out
}

/// The data behind a finite-field fit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfFit {
    pub poly: CharPoly,
    /// `(p, complement_count(n, p))` used for the interpolation.
    pub samples: Vec<(u64, u64)>,
    /// The extra prime checked against the fitted polynomial.
    pub holdout: (u64, u64),
}

/// `chi_n` by counting at the `n + 1` smallest valid primes, interpolating,
/// and checking the result at the next valid prime. `n = 6` requires
/// `allow_long`.
pub fn charpoly_ff_fit(n: usize, allow_long: bool) -> Result<FfFit> {
    if n < 1 {
        return Err(Error::InvalidArgument("charpoly_ff needs n >= 1".into()));
    }
    let limit = if allow_long {
        COUNT_MAX_N
    } else {
        FF_DEFAULT_MAX_N
    };
    if n > limit {
        return Err(Error::Capacity(format!(
            "charpoly_ff is limited to n <= {limit}{}, got {n}",
            if allow_long {
                ""
            } else {
                " without the long-running opt-in"
            }
        )));
    }
    let primes = valid_primes(n, n + 2);
    let counts = primes
        .iter()
        .map(|&p| complement_count(n, p))
        .collect::<Result<Vec<_>>>()?;
    let samples: Vec<(u64, u64)> = primes.iter().copied().zip(counts).collect();
    let points: Vec<(i64, BigInt)> = samples[..=n]
        .iter()
        .map(|&(p, c)| (p as i64, BigInt::from(c)))
        .collect();
    let coeffs = interpolate(&points)
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            if !c.is_integer() {
                return Err(Error::Consistency(format!(
                    "interpolated coefficient of t^{i} is {c}, not an integer"
                )));
            }
            c.to_integer()
                .to_i64()
                .ok_or_else(|| Error::Capacity(format!("coefficient of t^{i} overflows i64")))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = CharPoly::new(coeffs);
    let holdout = samples[n + 1];
    let predicted = poly.eval(holdout.0 as i64);
    if predicted != BigInt::from(holdout.1) {
        return Err(Error::Consistency(format!(
            "holdout prime {}: counted {} points but the fit predicts {predicted}",
            holdout.0, holdout.1
        )));
    }
    poly.check_resonance_shape(n)?;
    Ok(FfFit {
        poly,
        samples: samples[..=n].to_vec(),
        holdout,
    })
}

pub fn charpoly_ff(n: usize, allow_long: bool) -> Result<CharPoly> {
    Ok(charpoly_ff_fit(n, allow_long)?.poly)
}

/// Rank over the rationals of integer row vectors.
fn rank(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let (top, below) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below.iter_mut().filter(|row| row[c] != 0) {
            let g = pivot_row[c].gcd(&row[c]);
            let (fa, fb) = (row[c] / g, pivot_row[c] / g);
            for (v, &pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *v = *v * fb - pv * fa;
            }
            let content = row.iter().fold(0i64, |acc, &v| acc.gcd(&v));
            if content > 1 {
                row.iter_mut().for_each(|v| *v /= content);
            }
        }
        r += 1;
    }
    r
}

/// `chi_n` from the intersection lattice: flats are generated as closures
/// of hyperplane sets, then `chi(t) = sum_X mu(0, X) t^{n - rank X}`.
pub fn charpoly_mobius(n: usize) -> Result<CharPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "charpoly_mobius needs n >= 1".into(),
        ));
    }
    if n > MOBIUS_MAX_N {
        return Err(Error::Capacity(format!(
            "charpoly_mobius is limited to n <= {MOBIUS_MAX_N}, got {n}"
        )));
    }
    // normal of hyperplane h is the indicator vector of the subset h + 1
    let normals: Vec<Vec<i64>> = (1..1u32 << n)
        .map(|s| (0..n).map(|i| i64::from(s >> i & 1)).collect())
        .collect();
    let h = normals.len();
    let rank_of = |set: u32| -> usize {
        rank(
            (0..h)
                .filter(|&i| set >> i & 1 != 0)
                .map(|i| normals[i].clone())
                .collect(),
        )
    };
    let closure = |set: u32| -> (u32, usize) {
        let r = rank_of(set);
        let closed = (0..h)
            .filter(|&i| set >> i & 1 != 0 || rank_of(set | 1 << i) == r)
            .fold(0u32, |acc, i| acc | 1 << i);
        (closed, r)
    };

    let mut flats: FxHashMap<u32, usize> = FxHashMap::default();
    flats.insert(0, 0);
    let mut frontier = vec![0u32];
    while let Some(f) = frontier.pop() {
        for i in 0..h {
            if f >> i & 1 != 0 {
                continue;
            }
            let (g, r) = closure(f | 1 << i);
            if let std::collections::hash_map::Entry::Vacant(e) = flats.entry(g) {
                e.insert(r);
                frontier.push(g);
            }
        }
    }

    let mut ordered: Vec<(u32, usize)> = flats.into_iter().collect();
    ordered.sort_by_key(|&(set, r)| (r, set));
    let mut mobius: Vec<i64> = Vec::with_capacity(ordered.len());
    let mut coeffs = vec![0i64; n + 1];
    for (idx, &(x, r)) in ordered.iter().enumerate() {
        let m = if idx == 0 {
            1
        } else {
            -ordered[..idx]
                .iter()
                .zip(&mobius)
                .filter(|((y, _), _)| y & x == *y && *y != x)
                .map(|(_, m)| m)
                .sum::<i64>()
        };
        mobius.push(m);
        coeffs[n - r] += m;
    }
    Ok(CharPoly::new(coeffs))
}

/// Number of regions, `(-1)^n chi(-1)`.
pub fn regions_of(chi: &CharPoly) -> BigInt {
    let v = chi.eval(-1);
    if chi.degree().is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Number of bounded regions, `(-1)^n chi(1)`; zero for a central arrangement.
pub fn bounded_regions_of(chi: &CharPoly) -> BigInt {
    let v = chi.eval(1);
    if chi.degree().is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Regions of the resonance arrangement in dimension `n`, via the
/// finite-field characteristic polynomial.
pub fn regions(n: usize) -> Result<BigInt> {
    let r = regions_of(&charpoly_ff(n, false)?);
    debug_assert!(!r.is_negative());
    Ok(r)
}

pub fn bounded_regions(n: usize) -> Result<BigInt> {
    Ok(bounded_regions_of(&charpoly_ff(n, false)?))
}
