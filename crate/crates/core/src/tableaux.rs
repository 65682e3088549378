//! Young tableaux in French convention (row 0 is the bottom row).

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau, checking that it is semistandard: rows weakly
    /// increase to the right, columns strictly increase upward.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidArgument("tableau has an empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidArgument(
                "row lengths must weakly decrease upward".into(),
            ));
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "row {row:?} is not weakly increasing"
                )));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(up, down)| up <= down) {
                return Err(Error::InvalidArgument(
                    "columns must strictly increase upward".into(),
                ));
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Standard: the entries are exactly `1..=|shape|`, each once.
    pub fn is_standard(&self) -> bool {
        let n = self.shape().size();
        let mut seen = vec![false; n + 1];
        for &e in self.rows.iter().flatten() {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        true
    }

    /// Row index of every entry of a standard tableau, indexed by entry.
    fn row_of(&self) -> Vec<usize> {
        let n = self.shape().size();
        let mut row = vec![0; n + 1];
        for (r, entries) in self.rows.iter().enumerate() {
            for &e in entries {
                row[e as usize] = r;
            }
        }
        row
    }

    /// Descents of a standard tableau: `i` such that `i+1` sits in a row
    /// strictly above the row of `i`.
    pub fn descents(&self) -> Result<Vec<u32>> {
        self.require_standard()?;
        let row = self.row_of();
        let n = row.len() - 1;
        Ok((1..n)
            .filter(|&i| row[i + 1] > row[i])
            .map(|i| i as u32)
            .collect())
    }

    /// Least ascent of a standard tableau. The largest entry `n` has no
    /// successor and always counts as an ascent, so a single column of
    /// size `n` has smallest ascent `n`.
    pub fn smallest_ascent(&self) -> Result<u32> {
        self.require_standard()?;
        let row = self.row_of();
        let n = row.len() - 1;
        let first = (1..n).find(|&i| row[i + 1] <= row[i]).unwrap_or(n);
        Ok(first as u32)
    }

    fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{:?} is not a standard tableau",
                self.rows
            )))
        }
    }
}

/// Every standard tableau of shape `shape`, in a fixed order: entries are
/// placed `1, 2, ...` and the candidate rows are tried bottom to top.
pub fn syt_list(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &[u32], next: u32, n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len() as u32;
            let below_ok = r == 0 || rows[r - 1].len() as u32 > len;
            if len < shape[r] && below_ok {
                rows[r].push(next);
                go(shape, next + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape.parts(), 1, shape.size() as u32, &mut rows, &mut out);
    out
}

/// `f^lambda` by the hook length formula.
pub fn num_syt(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 0..len as usize {
            let arm = len as usize - j - 1;
            let leg = conj.part(j) as usize - i - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    let mut fact = BigUint::one();
    for k in 2..=shape.size() as u64 {
        fact *= k;
    }
    fact / hooks
}
