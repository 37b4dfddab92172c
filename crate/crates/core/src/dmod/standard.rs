use super::FinModule;
use crate::zplin::{ModMatrix, PadicContext};
use crate::{Error, Result};

/// The named modules that appear throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    /// `R/(V-1)·p^ν`: `V = 1`, `F = p`.
    Unit,
    /// `D(ν)`: `V = p`, `F = 1`.
    Dualizing,
    /// `D'(ν)`: `V = -p`, `F = -1`.
    TwistedDualizing,
    /// `R_{n,q} = R/(V^{n-q} - F^q)` reduced mod `p^ν`, for `0 ≤ q ≤ n`.
    Simple { n: usize, q: usize },
    /// `R/(F - V^{n-1})` on the basis `a_0, …, a_{n-1}` with
    /// `V a_0 = p a_{n-1}` and `V a_i = a_{i-1}`.
    Morava { n: usize },
}

/// Integer matrices (column convention) of `V` and `F` on `R_{n,q}` in the
/// basis `b_k = F^k·1` normalised so that `F b_k = p^{[k ≥ q]} b_{k+1}`.
pub(crate) fn simple_matrices(n: usize, q: usize, p: i64) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut v = vec![vec![0; n]; n];
    let mut f = vec![vec![0; n]; n];
    let pw = |b: bool| if b { p } else { 1 };
    for k in 0..n {
        let next = (k + 1) % n;
        let fc = if k + 1 < n { pw(k >= q) } else { pw(q < n) };
        f[next][k] += fc;
        let prev = (k + n - 1) % n;
        let vc = if k >= 1 { pw(k <= q) } else { pw(q == n) };
        v[prev][k] += vc;
    }
    (v, f)
}

/// `V` and `F` of the Morava-type module of height `n`.
pub(crate) fn morava_matrices(n: usize, p: i64) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut v = vec![vec![0; n]; n];
    for i in 1..n {
        v[i - 1][i] = 1;
    }
    v[n - 1][0] = p;
    // F = V^{n-1}
    let mut f = identity(n);
    for _ in 0..n - 1 {
        f = mul(&f, &v);
    }
    (v, f)
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn standard_module(ctx: PadicContext, kind: StandardKind) -> Result<FinModule> {
    let p = ctx.p() as i64;
    let (v, f) = match kind {
        StandardKind::Unit => (vec![vec![1]], vec![vec![p]]),
        StandardKind::Dualizing => (vec![vec![p]], vec![vec![1]]),
        StandardKind::TwistedDualizing => (vec![vec![-p]], vec![vec![-1]]),
        StandardKind::Simple { n, q } => {
            if n == 0 || q > n {
                return Err(Error::Range(format!(
                    "R_{{n,q}} needs 0 ≤ q ≤ n and n ≥ 1, got n={n}, q={q}"
                )));
            }
            simple_matrices(n, q, p)
        }
        StandardKind::Morava { n } => {
            if n == 0 {
                return Err(Error::Range("height must be positive".into()));
            }
            morava_matrices(n, p)
        }
    };
    let g = v.len();
    FinModule::new(
        ctx,
        vec![ctx.nu(); g],
        ModMatrix::from_i64_rows(ctx, &v)?,
        ModMatrix::from_i64_rows(ctx, &f)?,
    )
}
