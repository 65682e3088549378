//! Binomial determinants `d_{lambda,mu} = det C(lambda_i + n - i, mu_j + n - j)`,
//! their count as non-intersecting lattice path families, and the Schur
//! expansions of the total Chern classes of the second exterior and
//! symmetric powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symengine::{elementary_all, schur_expand, Alphabet, LinearForm, SchurVector};

/// Cap on the sum of start heights accepted by [`gv_count`].
pub const GV_MAX_HEIGHT_SUM: u32 = 30;
/// Largest `n` accepted by [`lascoux_check`].
pub const LASCOUX_MAX_N: usize = 5;

/// Start and end data of a lattice path family: path `i` runs from
/// `(0, starts[i])` to `(ends[i], ends[i])` with unit East and South steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVConfig {
    pub n: usize,
    pub starts: Vec<u32>,
    pub ends: Vec<u32>,
}

impl GVConfig {
    /// `starts[i] = lambda_i + n - i`, `ends[i] = mu_i + n - i`
    /// (1-based `i`, partitions padded with zeros to length `n`).
    pub fn new(lambda: &Partition, mu: &Partition, n: usize) -> Result<Self> {
        if lambda.len() > n || mu.len() > n {
            return Err(Error::InvalidArgument(format!(
                "partitions {lambda:?} and {mu:?} must have at most {n} parts"
            )));
        }
        let shift = |p: &Partition| -> Vec<u32> {
            p.padded(n)
                .into_iter()
                .enumerate()
                .map(|(i, v)| v + (n - 1 - i) as u32)
                .collect()
        };
        Ok(GVConfig {
            n,
            starts: shift(lambda),
            ends: shift(mu),
        })
    }
}

pub fn binomial(a: u32, b: u32) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `d_{lambda,mu}` as an exact `n x n` determinant.
pub fn binomial_det(lambda: &Partition, mu: &Partition, n: usize) -> Result<BigInt> {
    let cfg = GVConfig::new(lambda, mu, n)?;
    let m = cfg
        .starts
        .iter()
        .map(|&a| cfg.ends.iter().map(|&b| binomial(a, b)).collect())
        .collect();
    Ok(det_bareiss(m))
}

/// Number of vertex-disjoint families of lattice paths for
/// `(lambda, mu, n)`; see [`GVConfig`] for the embedding. Only the
/// identity pairing of starts and ends is enumerated since the starts and
/// ends are both strictly ordered.
///
/// Sweeps the columns left to right, keeping the heights at which the
/// live paths enter the next column; families with the same frontier are
/// merged.
pub fn gv_count(lambda: &Partition, mu: &Partition, n: usize) -> Result<u64> {
    if !lambda.contains(mu) {
        return Err(Error::InvalidArgument(format!(
            "{mu:?} is not contained in {lambda:?}"
        )));
    }
    let cfg = GVConfig::new(lambda, mu, n)?;
    let height_sum: u32 = cfg.starts.iter().sum();
    if height_sum > GV_MAX_HEIGHT_SUM {
        return Err(Error::Capacity(format!(
            "start heights sum to {height_sum}, limit is {GV_MAX_HEIGHT_SUM}"
        )));
    }
    let last_col = cfg.ends.iter().copied().max().unwrap_or(0);
    // frontier[i] = height at which path i enters the current column
    let mut frontier: FxHashMap<Vec<u32>, u64> = FxHashMap::default();
    frontier.insert(cfg.starts.clone(), 1);
    for x in 0..=last_col {
        let mut next: FxHashMap<Vec<u32>, u64> = FxHashMap::default();
        for (heights, count) in &frontier {
            let mut out = Vec::with_capacity(heights.len());
            place_column(&cfg.ends, x, heights, 0, None, &mut out, &mut |exits| {
                *next.entry(exits.to_vec()).or_default() += count;
            });
        }
        frontier = next;
    }
    Ok(frontier.values().sum())
}

/// Chooses, top path first, the height at which each live path leaves
/// column `x`. Path `i` occupies `[exit, enter]` in this column; the
/// intervals must be disjoint. Paths that end in column `x` leave at
/// their end height and drop out of the frontier.
fn place_column(
    ends: &[u32],
    x: u32,
    enter: &[u32],
    i: usize,
    floor_above: Option<u32>,
    exits: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    // Ends strictly decrease, so the live paths are always a prefix.
    if i == enter.len() {
        emit(exits);
        return;
    }
    let top = enter[i];
    let end = ends[i];
    if top < end || floor_above.is_some_and(|f| top >= f) {
        return;
    }
    if end == x {
        place_column(ends, x, enter, i + 1, Some(end), exits, emit);
        return;
    }
    for exit in end..=top {
        exits.push(exit);
        place_column(ends, x, enter, i + 1, Some(exit), exits, emit);
        exits.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LascouxKind {
    /// `prod_{i<j} (1 + x_i + x_j)`
    Exterior,
    /// `prod_{i<=j} (1 + x_i + x_j)`
    Symmetric,
}

impl fmt::Display for LascouxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LascouxKind::Exterior => "exterior",
            LascouxKind::Symmetric => "symmetric",
        })
    }
}

impl FromStr for LascouxKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exterior" => Ok(LascouxKind::Exterior),
            "symmetric" => Ok(LascouxKind::Symmetric),
            _ => Err(Error::InvalidArgument(format!(
                "kind must be exterior or symmetric, got {s:?}"
            ))),
        }
    }
}

/// The pair sums `x_i + x_j` (`i < j`, or `i <= j` for the symmetric
/// kind), pairs in lexicographic order.
pub fn pair_alphabet(n: usize, kind: LascouxKind) -> Result<Alphabet> {
    let mut forms = Vec::new();
    for i in 0..n {
        let from = match kind {
            LascouxKind::Exterior => i + 1,
            LascouxKind::Symmetric => i,
        };
        for j in from..n {
            forms.push(LinearForm::subset_sum(n, &[i, j]));
        }
    }
    Alphabet::new(n, forms)
}

/// Both sides of the identity
/// `prod (1 + x_i + x_j) = 2^{-C(n,2)} sum_{mu in delta} d_{delta,mu} 2^{|mu|} s_mu`.
#[derive(Clone, Debug)]
pub struct LascouxReport {
    pub n: usize,
    pub kind: LascouxKind,
    /// The staircase `delta_{n-1}` or `delta_n`.
    pub delta: Partition,
    /// Graded Schur expansion of the product.
    pub lhs: SchurVector,
    /// The determinant side, in exact rationals.
    pub rhs: SchurVector<BigRational>,
}

impl LascouxReport {
    /// Whether every coefficient of the determinant side is an integer.
    pub fn rhs_integral(&self) -> bool {
        self.rhs.iter().all(|(_, c)| c.is_integer())
    }

    pub fn rhs_integer(&self) -> Option<SchurVector> {
        self.rhs_integral()
            .then(|| self.rhs.map(|c| c.to_integer()))
    }

    /// Both sides agree coefficient by coefficient.
    pub fn sides_equal(&self) -> bool {
        self.rhs_integer().as_ref() == Some(&self.lhs)
    }

    pub fn verified(&self) -> bool {
        self.sides_equal()
    }

    /// Rows `(mu, d_{delta,mu}, lhs coefficient, rhs coefficient)`.
    pub fn table(&self) -> Vec<(Partition, BigInt, BigInt, BigRational)> {
        self.delta
            .subshapes()
            .into_iter()
            .filter(|mu| mu.len() <= self.n)
            .map(|mu| {
                let d = binomial_det(&self.delta, &mu, self.n).expect("shapes fit");
                let l = self.lhs.get(&mu).cloned().unwrap_or_default();
                let r = self.rhs.get(&mu).cloned().unwrap_or_else(BigRational::zero);
                (mu, d, l, r)
            })
            .collect()
    }
}

/// Expands both sides of the Chern class identity for `n` variables.
pub fn lascoux_check(n: usize, kind: LascouxKind) -> Result<LascouxReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "lascoux_check needs n >= 2, got {n}"
        )));
    }
    if n > LASCOUX_MAX_N {
        return Err(Error::Capacity(format!(
            "lascoux_check is limited to n <= {LASCOUX_MAX_N}, got {n}"
        )));
    }
    let alphabet = pair_alphabet(n, kind)?;
    let mut lhs = SchurVector::new(n);
    for piece in elementary_all(&alphabet, alphabet.len())? {
        lhs = lhs.plus(&schur_expand(&piece)?);
    }

    let delta = match kind {
        LascouxKind::Exterior => Partition::staircase(n as u32 - 1),
        LascouxKind::Symmetric => Partition::staircase(n as u32),
    };
    let denom = BigInt::one() << (n * (n - 1) / 2);
    let mut rhs = SchurVector::<BigRational>::new(n);
    for mu in delta.subshapes() {
        let d = binomial_det(&delta, &mu, n)?;
        if d.is_negative() {
            return Err(Error::Consistency(format!(
                "binomial determinant d_({delta:?},{mu:?}) = {d} is negative"
            )));
        }
        let num = d << mu.size();
        rhs.add_term(mu, BigRational::new(num, denom.clone()));
    }
    Ok(LascouxReport {
        n,
        kind,
        delta,
        lhs,
        rhs,
    })
}
