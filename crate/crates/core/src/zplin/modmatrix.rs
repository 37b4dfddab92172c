use std::fmt;

use super::{Matrix, PadicContext};
use crate::{Error, Integer, Result};

/// Dense row-major matrix over `Z/p^ν` with entries reduced to `[0, p^ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    ctx: PadicContext,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(ctx: PadicContext, rows: usize, cols: usize) -> Self {
        ModMatrix {
            ctx,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(ctx: PadicContext, n: usize) -> Self {
        Self::scalar(ctx, n, 1)
    }

    pub fn scalar(ctx: PadicContext, n: usize, s: u64) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        let s = s % ctx.modulus();
        for i in 0..n {
            m.data[i * n + i] = s;
        }
        m
    }

    /// Builds from signed rows, reducing every entry.
    pub fn from_i64_rows(ctx: PadicContext, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| ctx.reduce_i64(x)).collect();
        Ok(ModMatrix {
            ctx,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_rows(ctx: PadicContext, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(ctx, rows, cols)
    }

    /// As [`from_rows`](Self::from_rows), but well-defined for zero rows.
    pub fn from_rows_with_cols(ctx: PadicContext, rows: &[Vec<u64>], cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let m = ctx.modulus();
        let data = rows.iter().flatten().map(|&x| x % m).collect();
        Ok(ModMatrix {
            ctx,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Reduction of an integer matrix.
    pub fn from_int<T: Integer>(ctx: PadicContext, a: &Matrix<T>) -> Self {
        let m = ctx.modulus();
        let data = (0..a.rows())
            .flat_map(|i| a.row(i).iter().map(move |x| x.rem_u64(m)))
            .collect();
        ModMatrix {
            ctx,
            rows: a.rows(),
            cols: a.cols(),
            data,
        }
    }

    pub fn context(&self) -> PadicContext {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        let m = self.ctx.modulus();
        self.data[i * self.cols + j] = v % m;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let ctx = self.ctx;
        let mut out = Self::zeros(ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = ctx.add(out.data[idx], ctx.mul(a, rhs[(k, j)]));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ModMatrix) -> ModMatrix {
        self.zip(rhs, |a, b| self.ctx.add(a, b))
    }

    pub fn sub(&self, rhs: &ModMatrix) -> ModMatrix {
        self.zip(rhs, |a, b| self.ctx.sub(a, b))
    }

    pub fn neg(&self) -> ModMatrix {
        self.map(|a| self.ctx.neg(a))
    }

    pub fn scale(&self, s: u64) -> ModMatrix {
        let s = s % self.ctx.modulus();
        self.map(|a| self.ctx.mul(a, s))
    }

    pub fn pow(&self, k: u32) -> ModMatrix {
        assert!(self.is_square());
        let mut acc = Self::identity(self.ctx, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.rows);
        let ctx = self.ctx;
        let mut out = vec![0; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o = ctx.add(*o, ctx.mul(xi, a));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.cols);
        let ctx = self.ctx;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| ctx.add(acc, ctx.mul(a, b)))
            })
            .collect()
    }

    /// Stacks `[self | rhs]`.
    pub fn hstack(&self, rhs: &ModMatrix) -> ModMatrix {
        assert_eq!(self.rows, rhs.rows);
        let rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| [self.row(i), rhs.row(i)].concat())
            .collect();
        Self::from_rows_with_cols(self.ctx, &rows, self.cols + rhs.cols).expect("shapes agree")
    }

    /// Entries as signed integers in `(-p^ν/2, p^ν/2]`.
    pub fn centered(&self) -> Matrix<i64> {
        let m = self.ctx.modulus();
        let data = self
            .data
            .iter()
            .map(|&x| {
                if x > m / 2 {
                    x as i64 - m as i64
                } else {
                    x as i64
                }
            })
            .collect();
        Matrix::from_vec(self.rows, self.cols, data).expect("shape preserved")
    }

    fn map(&self, f: impl Fn(u64) -> u64) -> ModMatrix {
        ModMatrix {
            ctx: self.ctx,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f(a)).collect(),
        }
    }

    fn zip(&self, rhs: &ModMatrix, f: impl Fn(u64, u64) -> u64) -> ModMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ModMatrix {
            ctx: self.ctx,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for ModMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
                )
            })
            .collect();
        write!(f, "[{}] mod {}", rows.join(", "), self.ctx.modulus())
    }
}
