//! Canonical enumeration of subspaces of `F_p^n`.
//!
//! Each subspace is emitted exactly once, as its RREF basis. Order: pivot
//! column sets lexicographically, then the free entries lexicographically in
//! row-major order.

use super::field::FieldSpec;
use super::matrix::Matrix;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::par;

/// The Gaussian binomial coefficient `[n choose k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn pivot_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Iterator over the RREF matrices with a fixed pivot set.
pub struct PivotCell {
    p: u32,
    n: usize,
    pivots: Vec<usize>,
    free: Vec<usize>,
    digits: Vec<u32>,
    done: bool,
}

impl PivotCell {
    pub fn new(n: usize, pivots: &[usize], p: u32) -> Self {
        let free = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                (pc + 1..n)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| r * n + c)
            })
            .collect::<Vec<_>>();
        PivotCell {
            p,
            n,
            pivots: pivots.to_vec(),
            digits: vec![0; free.len()],
            free,
            done: false,
        }
    }

    /// Number of matrices in this cell.
    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.free.len() as u32)
    }
}

impl Iterator for PivotCell {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.done {
            return None;
        }
        let k = self.pivots.len();
        let mut data = vec![0u32; k * self.n];
        for (r, &pc) in self.pivots.iter().enumerate() {
            data[r * self.n + pc] = 1;
        }
        for (slot, &d) in self.free.iter().zip(&self.digits) {
            data[*slot] = d;
        }
        // odometer, last digit fastest
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.p {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(Matrix::from_prime_vec(self.p, k, self.n, data))
    }
}

/// Stream of all `sub_dim`-dimensional subspaces of `F_p^ambient_dim`.
pub struct SubspaceStream {
    cells: std::vec::IntoIter<Vec<usize>>,
    current: Option<PivotCell>,
    n: usize,
    p: u32,
}

impl Iterator for SubspaceStream {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        loop {
            if let Some(m) = self.current.as_mut().and_then(Iterator::next) {
                return Some(m);
            }
            let pivots = self.cells.next()?;
            self.current = Some(PivotCell::new(self.n, &pivots, self.p));
        }
    }
}

fn prime_of(field: FieldSpec) -> Result<u32> {
    match field {
        FieldSpec::Prime(p) => Ok(p),
        FieldSpec::Rational => Err(Error::NeedsPrimeField),
    }
}

fn check_budget(ambient_dim: usize, sub_dim: usize, p: u32, budget: u64) -> Result<()> {
    if sub_dim > ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspace dimension {sub_dim} exceeds ambient dimension {ambient_dim}"
        )));
    }
    let needed = gaussian_binomial(ambient_dim, sub_dim, p as u64);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "subspace enumeration",
            needed,
            budget,
        });
    }
    Ok(())
}

/// Lazily enumerates every `sub_dim`-dimensional subspace as its RREF basis.
pub fn enumerate_subspaces(
    ambient_dim: usize,
    sub_dim: usize,
    field: FieldSpec,
    budget: u64,
) -> Result<SubspaceStream> {
    let p = prime_of(field)?;
    check_budget(ambient_dim, sub_dim, p, budget)?;
    Ok(SubspaceStream {
        cells: pivot_sets(ambient_dim, sub_dim).into_iter(),
        current: None,
        n: ambient_dim,
        p,
    })
}

/// Materializes the same stream, splitting the work by pivot set.
pub fn collect_subspaces(ambient_dim: usize, sub_dim: usize, field: FieldSpec, limits: &Limits) -> Result<Vec<Matrix>> {
    let p = prime_of(field)?;
    check_budget(ambient_dim, sub_dim, p, limits.budget)?;
    let cells = pivot_sets(ambient_dim, sub_dim);
    let parts = par::map(cells, limits.parallel, |piv| {
        PivotCell::new(ambient_dim, &piv, p).collect::<Vec<_>>()
    });
    Ok(parts.into_iter().flatten().collect())
}
