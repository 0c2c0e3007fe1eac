//! Small dense matrices over a finite field.

use crate::error::{Error, Result};
use crate::gfield::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatFq {
    pub rows: usize,
    pub cols: usize,
    /// row-major
    pub entries: Vec<Elem>,
}

impl MatFq {
    pub fn new(rows: usize, cols: usize, entries: Vec<Elem>) -> Self {
        assert_eq!(rows * cols, entries.len());
        MatFq { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows.iter().flat_map(|r| {
            assert_eq!(r.len(), cols);
            r.iter().copied()
        });
        MatFq { rows: rows.len(), cols, entries: entries.collect() }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        MatFq { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, f: &Field, o: &MatFq) -> MatFq {
        assert_eq!(self.cols, o.rows);
        let mut m = MatFq::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut s = 0;
                for l in 0..self.cols {
                    s = f.add(s, f.mul(self.get(i, l), o.get(l, j)));
                }
                m.set(i, j, s);
            }
        }
        m
    }

    pub fn transpose(&self) -> MatFq {
        let mut m = MatFq::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }
}

/// Determinant by Gaussian elimination.
pub fn det(f: &Field, m: &MatFq) -> Result<Elem> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m.entries.clone();
    let mut d: Elem = 1;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return Ok(0);
        };
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            d = f.neg(d);
        }
        let pv = a[col * n + col];
        d = f.mul(d, pv);
        let inv = f.inv(pv);
        for r in col + 1..n {
            let c = a[r * n + col];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, inv);
            for j in col..n {
                a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
            }
        }
    }
    Ok(d)
}

/// Rank by row reduction.
pub fn rank(f: &Field, m: &MatFq) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.entries.clone();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i * cols + col] != 0) else { continue };
        if piv != r {
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a[r * cols + col]);
        for i in r + 1..rows {
            let c = a[i * cols + col];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, inv);
            for j in col..cols {
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the right null space.
pub fn kernel_dim(f: &Field, m: &MatFq) -> usize {
    m.cols - rank(f, m)
}
