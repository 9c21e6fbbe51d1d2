use std::fmt;
use std::ops::Range;

use num_rational::BigRational;

use super::field::{Arith, FieldSpec, Fp, Qq, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Entries {
    Prime(Vec<u32>),
    Rational(Vec<BigRational>),
}

pub(crate) trait Carrier: Arith {
    fn wrap(v: Vec<Self::Elem>) -> Entries;
    fn to_scalar(e: &Self::Elem) -> Scalar;
}

impl Carrier for Fp {
    fn wrap(v: Vec<u32>) -> Entries {
        Entries::Prime(v)
    }
    fn to_scalar(e: &u32) -> Scalar {
        Scalar::Prime(*e)
    }
}

impl Carrier for Qq {
    fn wrap(v: Vec<BigRational>) -> Entries {
        Entries::Rational(v)
    }
    fn to_scalar(e: &BigRational) -> Scalar {
        Scalar::Rational(e.clone())
    }
}

/// Runs `$body` with `$ar` bound to the element arithmetic and `$d` to the
/// entry vector of the matching type.
macro_rules! dispatch {
    ($field:expr, $entries:expr, |$ar:ident, $d:ident| $body:expr) => {
        match ($field, $entries) {
            (FieldSpec::Prime(p), Entries::Prime($d)) => {
                let $ar = Fp::new(*p);
                $body
            }
            (FieldSpec::Rational, Entries::Rational($d)) => {
                let $ar = Qq;
                $body
            }
            _ => unreachable!("entries do not match field"),
        }
    };
}

macro_rules! dispatch2 {
    ($field:expr, $e1:expr, $e2:expr, |$ar:ident, $a:ident, $b:ident| $body:expr) => {
        match ($field, $e1, $e2) {
            (FieldSpec::Prime(p), Entries::Prime($a), Entries::Prime($b)) => {
                let $ar = Fp::new(*p);
                $body
            }
            (FieldSpec::Rational, Entries::Rational($a), Entries::Rational($b)) => {
                let $ar = Qq;
                $body
            }
            _ => unreachable!("entries do not match field"),
        }
    };
}

/// Dense row-major matrix over a [`FieldSpec`].
///
/// Linear maps act on column vectors: a map `k^n -> k^m` is an `m x n`
/// matrix. Subspaces are stored as matrices whose rows are basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Entries,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub(crate) fn rref_in_place<A: Arith>(ar: &A, d: &mut [A::Elem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !ar.is_zero(&d[i * cols + c])) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                d.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&d[r * cols + c]);
        for j in c..cols {
            d[r * cols + j] = ar.mul(&d[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || ar.is_zero(&d[i * cols + c]) {
                continue;
            }
            let factor = d[i * cols + c].clone();
            for j in c..cols {
                let t = ar.mul(&factor, &d[r * cols + j]);
                d[i * cols + j] = ar.sub(&d[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn mul_kernel<A: Arith>(ar: &A, a: &[A::Elem], b: &[A::Elem], n: usize, k: usize, m: usize) -> Vec<A::Elem> {
    let mut out = vec![ar.zero(); n * m];
    for i in 0..n {
        for l in 0..k {
            let x = &a[i * k + l];
            if ar.is_zero(x) {
                continue;
            }
            for j in 0..m {
                let t = ar.mul(x, &b[l * m + j]);
                out[i * m + j] = ar.add(&out[i * m + j], &t);
            }
        }
    }
    out
}

fn scalar_elem_fp(s: &Scalar) -> u32 {
    match s {
        Scalar::Prime(v) => *v,
        Scalar::Rational(_) => panic!("rational scalar in prime field"),
    }
}

fn scalar_elem_q(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rational(q) => q.clone(),
        Scalar::Prime(_) => panic!("prime scalar in rational field"),
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let entries = match field {
            FieldSpec::Prime(_) => Entries::Prime(vec![0; rows * cols]),
            FieldSpec::Rational => Entries::Rational(vec![Qq.zero(); rows * cols]),
        };
        Matrix { field, rows, cols, entries }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| (i == j) as i64)
    }

    /// Builds a matrix from row-major integers, reducing them into the field.
    ///
    /// Panics if `values.len() != rows * cols`.
    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols, "entry count does not match shape");
        Self::from_fn(field, rows, cols, |i, j| values[i * cols + j])
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let entries = match field {
            FieldSpec::Prime(p) => Entries::Prime(
                (0..rows * cols)
                    .map(|t| f(t / cols.max(1), t % cols.max(1)).rem_euclid(p as i64) as u32)
                    .collect(),
            ),
            FieldSpec::Rational => Entries::Rational(
                (0..rows * cols)
                    .map(|t| BigRational::from_integer(f(t / cols.max(1), t % cols.max(1)).into()))
                    .collect(),
            ),
        };
        Matrix { field, rows, cols, entries }
    }

    pub fn from_scalars(field: FieldSpec, rows: usize, cols: usize, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                values.len()
            )));
        }
        for v in &values {
            field.check(v)?;
        }
        let entries = match field {
            FieldSpec::Prime(_) => Entries::Prime(values.iter().map(scalar_elem_fp).collect()),
            FieldSpec::Rational => Entries::Rational(values.iter().map(scalar_elem_q).collect()),
        };
        Ok(Matrix { field, rows, cols, entries })
    }

    pub(crate) fn from_prime_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix {
            field: FieldSpec::Prime(p),
            rows,
            cols,
            entries: Entries::Prime(data),
        }
    }

    pub(crate) fn prime_data(&self) -> Option<&[u32]> {
        match &self.entries {
            Entries::Prime(v) => Some(v),
            Entries::Rational(_) => None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        dispatch!(&self.field, &self.entries, |ar, d| elem_to_scalar(&ar, &d[i * self.cols + j]))
    }

    pub fn set(&mut self, i: usize, j: usize, value: &Scalar) -> Result<()> {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.field.check(value)?;
        let idx = i * self.cols + j;
        match &mut self.entries {
            Entries::Prime(d) => d[idx] = scalar_elem_fp(value),
            Entries::Rational(d) => d[idx] = scalar_elem_q(value),
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        dispatch!(&self.field, &self.entries, |ar, d| d.iter().all(|x| ar.is_zero(x)))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let (r, c) = (self.rows, self.cols);
        let entries = dispatch!(&self.field, &self.entries, |ar, d| {
            let mut out = Vec::with_capacity(r * c);
            for j in 0..c {
                for i in 0..r {
                    out.push(d[i * c + j].clone());
                }
            }
            wrap_like(&ar, out)
        });
        Matrix { field: self.field, rows: c, cols: r, entries }
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let entries = dispatch2!(&self.field, &self.entries, &other.entries, |ar, a, b| {
            wrap_like(&ar, mul_kernel(&ar, a, b, n, k, m))
        });
        Ok(Matrix { field: self.field, rows: n, cols: m, entries })
    }

    fn zip_with(&self, other: &Matrix, subtract: bool) -> Result<Matrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot combine {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = dispatch2!(&self.field, &self.entries, &other.entries, |ar, a, b| {
            let v = a
                .iter()
                .zip(b)
                .map(|(x, y)| if subtract { ar.sub(x, y) } else { ar.add(x, y) })
                .collect();
            wrap_like(&ar, v)
        });
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, false)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, true)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.field.check(s).expect("scalar from a different field");
        let entries = match (&self.entries, s) {
            (Entries::Prime(d), Scalar::Prime(x)) => {
                let ar = Fp::new(self.field.order().unwrap() as u32);
                Entries::Prime(d.iter().map(|e| ar.mul(e, x)).collect())
            }
            (Entries::Rational(d), Scalar::Rational(x)) => Entries::Rational(d.iter().map(|e| e * x).collect()),
            _ => unreachable!(),
        };
        Matrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.scalar(-1))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let (rows, cols) = (r1 * r2, c1 * c2);
        let entries = dispatch2!(&self.field, &self.entries, &other.entries, |ar, a, b| {
            let mut out = vec![ar.zero(); rows * cols];
            for i in 0..r1 {
                for j in 0..c1 {
                    let x = &a[i * c1 + j];
                    if ar.is_zero(x) {
                        continue;
                    }
                    for k in 0..r2 {
                        for l in 0..c2 {
                            out[(i * r2 + k) * cols + j * c2 + l] = ar.mul(x, &b[k * c2 + l]);
                        }
                    }
                }
            }
            wrap_like(&ar, out)
        });
        Ok(Matrix { field: self.field, rows, cols, entries })
    }

    /// Places `other` at offset `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, other: &Matrix) -> Result<()> {
        self.same_field(other)?;
        if r0 + other.rows > self.rows || c0 + other.cols > self.cols {
            return Err(Error::DimensionMismatch("block does not fit".into()));
        }
        let cols = self.cols;
        match (&mut self.entries, &other.entries) {
            (Entries::Prime(d), Entries::Prime(s)) => {
                for i in 0..other.rows {
                    for j in 0..other.cols {
                        d[(r0 + i) * cols + c0 + j] = s[i * other.cols + j];
                    }
                }
            }
            (Entries::Rational(d), Entries::Rational(s)) => {
                for i in 0..other.rows {
                    for j in 0..other.cols {
                        d[(r0 + i) * cols + c0 + j] = s[i * other.cols + j].clone();
                    }
                }
            }
            _ => unreachable!(),
        }
        Ok(())
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.same_field(b)?;
        let mut out = Matrix::zeros(a.field, a.rows + b.rows, a.cols + b.cols);
        out.paste(0, 0, a)?;
        out.paste(a.rows, a.cols, b)?;
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        out.paste(0, 0, self)?;
        out.paste(0, self.cols, other)?;
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols);
        out.paste(0, 0, self)?;
        out.paste(self.rows, 0, other)?;
        Ok(out)
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Matrix {
        let r: Vec<usize> = rows.collect();
        let c: Vec<usize> = cols.collect();
        self.select(&r, &c)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let c: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &c)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let r: Vec<usize> = (0..self.rows).collect();
        self.select(&r, cols)
    }

    fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let width = self.cols;
        let entries = dispatch!(&self.field, &self.entries, |ar, d| {
            let v = rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| d[i * width + j].clone()))
                .collect();
            wrap_like(&ar, v)
        });
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let pivots = match (&self.field, &mut reduced.entries) {
            (FieldSpec::Prime(p), Entries::Prime(d)) => rref_in_place(&Fp::new(*p), d, rows, cols),
            (FieldSpec::Rational, Entries::Rational(d)) => rref_in_place(&Qq, d, rows, cols),
            _ => unreachable!(),
        };
        Rref {
            rank: pivots.len(),
            reduced,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the row space: the non-zero rows of the RREF.
    pub fn row_space(&self) -> Matrix {
        let r = self.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        r.reduced.select_rows(&keep)
    }

    /// Rows spanning the null space `{v : self * v = 0}`, in RREF.
    pub fn kernel_basis(&self) -> Matrix {
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.field, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, &self.field.one()).unwrap();
            for (row, &pc) in r.pivots.iter().enumerate() {
                let v = self.field.neg(&r.reduced.get(row, f));
                basis.set(k, pc, &v).unwrap();
            }
        }
        basis.row_space()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.same_field(b)?;
        if b.cols != 1 || b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side must be a {}x1 column, got {}x{}",
                self.rows, b.rows, b.cols
            )));
        }
        let r = self.hstack(b)?.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, 1);
        for (row, &pc) in r.pivots.iter().enumerate() {
            x.set(pc, 0, &r.reduced.get(row, self.cols))?;
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let r = self.hstack(&Matrix::identity(self.field, n)).ok()?.rref();
        if r.pivots.iter().take_while(|&&c| c < n).count() != n {
            return None;
        }
        Some(r.reduced.submatrix(0..n, n..2 * n))
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.rank() == self.vstack(other).map(|m| m.rank()).unwrap_or(usize::MAX)
    }

    /// All entries as scalars in row-major order.
    pub fn scalars(&self) -> Vec<Scalar> {
        dispatch!(&self.field, &self.entries, |ar, d| d
            .iter()
            .map(|e| elem_to_scalar(&ar, e))
            .collect())
    }
}

fn wrap_like<A: Carrier>(_ar: &A, v: Vec<A::Elem>) -> Entries {
    A::wrap(v)
}

fn elem_to_scalar<A: Carrier>(_ar: &A, e: &A::Elem) -> Scalar {
    A::to_scalar(e)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}](", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, ")")
    }
}
