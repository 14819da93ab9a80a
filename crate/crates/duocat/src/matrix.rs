//! Exact matrices with rank factorization and idempotent splitting.
//!
//! Matrices are stored as sorted sparse rows. Most morphisms handled by the
//! verifier are permutation-like (a handful of 0/1 entries per row), so the
//! sparse product keeps the large coherence diagrams cheap while every entry
//! stays an exact field element.

use crate::error::Error;
use crate::field::{Field, Scalar};

/// Row-sparse exact matrix. Rows hold `(column, value)` pairs sorted by
/// column with no explicit zeros, which makes equality structural and
/// results bit-identical across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    data: Vec<Vec<(u32, Scalar)>>,
}

/// Splitting of an idempotent `e = iota . pi` with `pi . iota = id`.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub retract_dim: usize,
    pub pi: Mat,
    pub iota: Mat,
}

/// Outcome of [`Mat::try_invert`]: non-invertibility is a normal return,
/// reported with exact kernel and cokernel dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inverse {
    Inverted(Mat),
    NotInvertible { kernel_dim: usize, cokernel_dim: usize },
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            field,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.data[i].push((i as u32, field.one()));
        }
        m
    }

    /// Builds from a dense row-major closure; zero results are dropped.
    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Mat::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if !field.is_zero(&v) {
                    m.data[i].push((j as u32, v));
                }
            }
        }
        m
    }

    pub fn from_dense_i64(field: Field, entries: &[Vec<i64>]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map(|r| r.len()).unwrap_or(0);
        Mat::from_fn(field, rows, cols, |i, j| field.from_i64(entries[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&(j as u32), |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&(j as u32), |e| e.0) {
            Ok(k) => {
                if self.field.is_zero(&v) {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !self.field.is_zero(&v) {
                    row.insert(k, (j as u32, v));
                }
            }
        }
    }

    pub fn row(&self, i: usize) -> &[(u32, Scalar)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "matrix product: {}x{} . {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let f = self.field;
        let mut out = Mat::zero(f, self.rows, other.cols);
        let mut acc: std::collections::BTreeMap<u32, Scalar> = std::collections::BTreeMap::new();
        for i in 0..self.rows {
            acc.clear();
            for (k, v) in &self.data[i] {
                for (j, w) in &other.data[*k as usize] {
                    let prod = f.mul(v, w);
                    match acc.get_mut(j) {
                        Some(cur) => *cur = f.add(cur, &prod),
                        None => {
                            acc.insert(*j, prod);
                        }
                    }
                }
            }
            out.data[i] = acc
                .iter()
                .filter(|(_, v)| !f.is_zero(v))
                .map(|(j, v)| (*j, v.clone()))
                .collect();
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat, Error> {
        self.zip(other, false)
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat, Error> {
        self.zip(other, true)
    }

    fn zip(&self, other: &Mat, subtract: bool) -> Result<Mat, Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "matrix sum: {}x{} vs {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let f = self.field;
        let mut out = Mat::zero(f, self.rows, self.cols);
        for i in 0..self.rows {
            let (a, b) = (&self.data[i], &other.data[i]);
            let mut row = Vec::with_capacity(a.len() + b.len());
            let (mut x, mut y) = (0usize, 0usize);
            while x < a.len() || y < b.len() {
                let take_a = y >= b.len() || (x < a.len() && a[x].0 <= b[y].0);
                let take_b = x >= a.len() || (y < b.len() && b[y].0 <= a[x].0);
                if take_a && take_b {
                    let v = if subtract {
                        f.sub(&a[x].1, &b[y].1)
                    } else {
                        f.add(&a[x].1, &b[y].1)
                    };
                    if !f.is_zero(&v) {
                        row.push((a[x].0, v));
                    }
                    x += 1;
                    y += 1;
                } else if take_a {
                    row.push(a[x].clone());
                    x += 1;
                } else {
                    let v = if subtract { f.neg(&b[y].1) } else { b[y].1.clone() };
                    row.push((b[y].0, v));
                    y += 1;
                }
            }
            out.data[i] = row;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for (j, v) in &self.data[i] {
                out.data[*j as usize].push((i as u32, v.clone()));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let f = self.field;
        let mut out = self.clone();
        for row in &mut out.data {
            row.retain_mut(|(_, v)| {
                *v = f.mul(v, c);
                !f.is_zero(v)
            });
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Horizontal stack `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zero(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.data[i] = self.data[i].clone();
            for (j, v) in &other.data[i] {
                out.data[i].push((j + self.cols as u32, v.clone()));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = self.field;
        let mut rows: Vec<Vec<(u32, Scalar)>> = self.data.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row >= rows.len() {
                break;
            }
            // first-nonzero pivoting: take the first row at or below pivot_row
            // with a nonzero entry in this column
            let mut found = None;
            for r in pivot_row..rows.len() {
                if rows[r].first().map(|e| e.0 as usize) == Some(col) {
                    found = Some(r);
                    break;
                }
            }
            let Some(r) = found else { continue };
            rows.swap(pivot_row, r);
            // normalize pivot to 1
            let inv = f.inv(&rows[pivot_row][0].1).expect("pivot is nonzero");
            if !f.is_one(&inv) {
                for e in rows[pivot_row].iter_mut() {
                    e.1 = f.mul(&e.1, &inv);
                }
            }
            // eliminate the column everywhere else
            let prow = rows[pivot_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == pivot_row {
                    continue;
                }
                if let Ok(k) = row.binary_search_by_key(&(col as u32), |e| e.0) {
                    let c = row[k].1.clone();
                    *row = sub_scaled(f, row, &prow, &c);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let mut out = Mat::zero(f, self.rows, self.cols);
        out.data = rows;
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact rank factorization `m = c . r` where `c` collects the pivot
    /// columns of `m` and `r` the nonzero rows of the reduced echelon form.
    /// Rank 0 yields empty factors.
    pub fn rank_factorization(&self) -> (Mat, Mat) {
        let (re, pivots) = self.rref();
        let rank = pivots.len();
        let mut c = Mat::zero(self.field, self.rows, rank);
        for i in 0..self.rows {
            for (k, col) in pivots.iter().enumerate() {
                let v = self.get(i, *col);
                if !self.field.is_zero(&v) {
                    c.data[i].push((k as u32, v));
                }
            }
        }
        let mut r = Mat::zero(self.field, rank, self.cols);
        r.data.clone_from_slice(&re.data[..rank]);
        (c, r)
    }

    /// Splits a square idempotent through its retract. The splitting comes
    /// from the rank factorization, so the retract basis is deterministic.
    pub fn split_idempotent(&self) -> Result<Splitting, Error> {
        if self.rows != self.cols {
            return Err(Error::NotIdempotent { basis_index: 0 });
        }
        let sq = self.mul(self)?;
        let diff = sq.sub(self)?;
        if !diff.is_zero_matrix() {
            // report the first domain basis index hit by the defect
            let mut idx = 0usize;
            'outer: for j in 0..diff.cols {
                for i in 0..diff.rows {
                    if !diff.field.is_zero(&diff.get(i, j)) {
                        idx = j;
                        break 'outer;
                    }
                }
            }
            return Err(Error::NotIdempotent { basis_index: idx });
        }
        let (c, r) = self.rank_factorization();
        let check = r.mul(&c)?;
        debug_assert_eq!(check, Mat::identity(self.field, c.cols));
        Ok(Splitting {
            retract_dim: c.cols,
            pi: r,
            iota: c,
        })
    }

    /// Two-sided exact inverse, or kernel/cokernel dimensions.
    pub fn try_invert(&self) -> Inverse {
        let r = self.rank();
        if self.rows != self.cols || r < self.rows {
            return Inverse::NotInvertible {
                kernel_dim: self.cols - r,
                cokernel_dim: self.rows - r,
            };
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let (re, pivots) = aug.rref();
        debug_assert_eq!(pivots, (0..n).collect::<Vec<_>>());
        let mut inv = Mat::zero(self.field, n, n);
        for i in 0..n {
            for (j, v) in re.data[i].iter() {
                if (*j as usize) >= n {
                    inv.data[i].push((j - n as u32, v.clone()));
                }
            }
        }
        Inverse::Inverted(inv)
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Dense rendering in the wire format, row-major.
    pub fn render_entries(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.field.render(&self.get(i, j)))
                    .collect()
            })
            .collect()
    }
}

fn sub_scaled(
    f: Field,
    row: &[(u32, Scalar)],
    pivot: &[(u32, Scalar)],
    c: &Scalar,
) -> Vec<(u32, Scalar)> {
    // row - c * pivot, merged sparse
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut x, mut y) = (0usize, 0usize);
    while x < row.len() || y < pivot.len() {
        let take_a = y >= pivot.len() || (x < row.len() && row[x].0 <= pivot[y].0);
        let take_b = x >= row.len() || (y < pivot.len() && pivot[y].0 <= row[x].0);
        if take_a && take_b {
            let v = f.sub(&row[x].1, &f.mul(c, &pivot[y].1));
            if !f.is_zero(&v) {
                out.push((row[x].0, v));
            }
            x += 1;
            y += 1;
        } else if take_a {
            out.push(row[x].clone());
            x += 1;
        } else {
            let v = f.neg(&f.mul(c, &pivot[y].1));
            if !f.is_zero(&v) {
                out.push((pivot[y].0, v));
            }
            y += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    fn m(entries: &[Vec<i64>]) -> Mat {
        Mat::from_dense_i64(q(), entries)
    }

    #[test]
    fn product_examples() {
        let id2 = Mat::identity(q(), 2);
        assert_eq!(id2.mul(&id2).unwrap(), id2);
        let z = Mat::zero(q(), 2, 2);
        let a = m(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(z.mul(&a).unwrap(), z);
        let swap = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&swap).unwrap(), m(&[vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn rank_factorization_examples() {
        let id2 = Mat::identity(q(), 2);
        let (c, r) = id2.rank_factorization();
        assert_eq!(c, id2);
        assert_eq!(r, id2);

        let z = Mat::zero(q(), 2, 2);
        let (c, r) = z.rank_factorization();
        assert_eq!((c.rows, c.cols), (2, 0));
        assert_eq!((r.rows, r.cols), (0, 2));

        let ones = m(&[vec![1, 1], vec![1, 1]]);
        let (c, r) = ones.rank_factorization();
        assert_eq!(c, m(&[vec![1], vec![1]]));
        assert_eq!(r, m(&[vec![1, 1]]));
        assert_eq!(c.mul(&r).unwrap(), ones);
    }

    #[test]
    fn split_idempotent_examples() {
        let id3 = Mat::identity(q(), 3);
        let s = id3.split_idempotent().unwrap();
        assert_eq!(s.retract_dim, 3);
        assert_eq!(s.pi, id3);
        assert_eq!(s.iota, id3);

        let z = Mat::zero(q(), 3, 3);
        let s = z.split_idempotent().unwrap();
        assert_eq!(s.retract_dim, 0);

        let e = m(&[vec![1, 1], vec![0, 0]]);
        let s = e.split_idempotent().unwrap();
        assert_eq!(s.retract_dim, 1);
        assert_eq!(s.iota, m(&[vec![1], vec![0]]));
        assert_eq!(s.pi, m(&[vec![1, 1]]));
        assert_eq!(s.iota.mul(&s.pi).unwrap(), e);
        assert_eq!(s.pi.mul(&s.iota).unwrap(), Mat::identity(q(), 1));

        let not_idem = m(&[vec![0, 1], vec![0, 0]]);
        match not_idem.split_idempotent() {
            Err(Error::NotIdempotent { basis_index }) => assert_eq!(basis_index, 1),
            other => panic!("expected NotIdempotent, got {other:?}"),
        }
    }

    #[test]
    fn try_invert_examples() {
        let id3 = Mat::identity(q(), 3);
        assert_eq!(id3.try_invert(), Inverse::Inverted(id3.clone()));
        let swap = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.try_invert(), Inverse::Inverted(swap.clone()));
        let ones = m(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(
            ones.try_invert(),
            Inverse::NotInvertible {
                kernel_dim: 1,
                cokernel_dim: 1
            }
        );
    }

    #[test]
    fn inverse_with_fractions() {
        let a = m(&[vec![2, 1], vec![1, 1]]);
        if let Inverse::Inverted(inv) = a.try_invert() {
            assert_eq!(a.mul(&inv).unwrap(), Mat::identity(q(), 2));
            assert_eq!(inv.mul(&a).unwrap(), Mat::identity(q(), 2));
        } else {
            panic!("should invert");
        }
        let b = m(&[vec![1, 2], vec![3, 4]]);
        if let Inverse::Inverted(inv) = b.try_invert() {
            assert_eq!(b.mul(&inv).unwrap(), Mat::identity(q(), 2));
        } else {
            panic!("should invert");
        }
    }
}
