//! Howell normal form over `Z/p^ν` and the solvers built on it.
//!
//! `Z/p^ν` is a chain ring, so a row span has a unique generating set in
//! echelon shape whose pivots are powers of `p`, whose entries above a pivot
//! `p^k` lie in `[0, p^k)`, and which is closed under the annihilator
//! multiples `p^{ν-k}·row`. That last property is what makes kernels and
//! membership tests readable off the form.

use super::{ModMatrix, PadicContext};

type Row = Vec<u64>;

fn axpy(ctx: &PadicContext, dst: &mut [u64], factor: u64, src: &[u64]) {
    // dst -= factor * src
    if factor == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ctx.sub(*d, ctx.mul(factor, s));
    }
}

fn pivot(row: &[u64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Howell form of `rows` (each of length `ncols`), optionally carrying a
/// transform part alongside. Returns the nonzero rows.
pub(crate) fn howell_rows(
    ctx: &PadicContext,
    rows: Vec<Row>,
    ncols: usize,
    transforms: Option<Vec<Row>>,
) -> (Vec<Row>, Option<Vec<Row>>) {
    let track = transforms.is_some();
    let mut work: Vec<(Row, Row)> = match transforms {
        Some(t) => rows.into_iter().zip(t).collect(),
        None => rows.into_iter().map(|r| (r, Vec::new())).collect(),
    };
    let nu = ctx.nu();
    let mut r = 0;
    for c in 0..ncols {
        let best = (r..work.len())
            .filter(|&i| work[i].0[c] != 0)
            .min_by_key(|&i| (ctx.valuation(work[i].0[c]), i));
        let Some(best) = best else { continue };
        work.swap(r, best);
        let (k, unit) = ctx.split(work[r].0[c]);
        let inv = ctx.inverse(unit).expect("unit part is invertible");
        if inv != 1 {
            let (row, t) = &mut work[r];
            row.iter_mut().for_each(|x| *x = ctx.mul(*x, inv));
            t.iter_mut().for_each(|x| *x = ctx.mul(*x, inv));
        }
        let pk = ctx.pow_p(k);
        let (pivot_row, pivot_t) = work[r].clone();
        for (i, (row, t)) in work.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            // below: exact division; above: reduce into [0, p^k)
            let factor = row[c] / pk;
            axpy(ctx, row, factor, &pivot_row);
            if track {
                axpy(ctx, t, factor, &pivot_t);
            }
        }
        if k > 0 {
            let s = ctx.pow_p(nu - k);
            let extra: Row = pivot_row.iter().map(|&x| ctx.mul(x, s)).collect();
            if extra.iter().any(|&x| x != 0) {
                let extra_t = pivot_t.iter().map(|&x| ctx.mul(x, s)).collect();
                work.push((extra, extra_t));
            }
        }
        r += 1;
    }
    work.truncate(r);
    if track {
        let (h, t) = work.into_iter().unzip();
        (h, Some(t))
    } else {
        (work.into_iter().map(|(h, _)| h).collect(), None)
    }
}

/// Howell normal form `h` of the row span of `a`, with `t·a = h`.
///
/// `h` holds only the nonzero rows, so it may have fewer or more rows than
/// `a` (at most `a.cols()`).
pub fn howell_form(a: &ModMatrix) -> (ModMatrix, ModMatrix) {
    let ctx = a.context();
    let m = a.rows();
    let ident = ModMatrix::identity(ctx, m).to_rows();
    let (h, t) = howell_rows(&ctx, a.to_rows(), a.cols(), Some(ident));
    let h = ModMatrix::from_rows_with_cols(ctx, &h, a.cols()).expect("rows have width cols");
    let t = ModMatrix::from_rows_with_cols(ctx, &t.unwrap(), m).expect("rows have width m");
    (h, t)
}

/// `log_p` of the number of elements in the span of a Howell form.
pub fn span_log_order(h: &ModMatrix) -> u32 {
    let ctx = h.context();
    (0..h.rows())
        .filter_map(|i| pivot(h.row(i)).map(|c| ctx.nu() - ctx.valuation(h[(i, c)])))
        .sum()
}

/// Reduces `v` against the Howell form `h`: returns the remainder and the
/// coefficients `x` with `v = x·h + remainder`. The remainder is zero exactly
/// when `v` lies in the span.
pub fn reduce_row(h: &ModMatrix, v: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let ctx = h.context();
    let mut rem = v.to_vec();
    let mut coeffs = vec![0; h.rows()];
    for (i, coeff) in coeffs.iter_mut().enumerate() {
        let row = h.row(i);
        let Some(c) = pivot(row) else { continue };
        let factor = rem[c] / row[c];
        if factor != 0 {
            axpy(&ctx, &mut rem, factor, row);
            *coeff = factor;
        }
    }
    (rem, coeffs)
}

/// Solutions `x` of `x·a = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    /// One solution per row of `b`.
    pub particular: ModMatrix,
    /// Rows generating `{x : x·a = 0}`.
    pub kernel: ModMatrix,
}

struct Augmented {
    span: Vec<Row>,
    kernel: Vec<Row>,
}

fn augmented_howell(a: &ModMatrix) -> Augmented {
    let ctx = a.context();
    let (n, m) = (a.cols(), a.rows());
    let aug = a.hstack(&ModMatrix::identity(ctx, m));
    let (rows, _) = howell_rows(&ctx, aug.to_rows(), n + m, None);
    let (span, kernel): (Vec<Row>, Vec<Row>) = rows
        .into_iter()
        .partition(|r| pivot(r).is_some_and(|c| c < n));
    Augmented {
        span,
        kernel: kernel.into_iter().map(|r| r[n..].to_vec()).collect(),
    }
}

/// Rows generating the left kernel `{x : x·a = 0}`.
pub fn kernel_mod(a: &ModMatrix) -> ModMatrix {
    let aug = augmented_howell(a);
    ModMatrix::from_rows_with_cols(a.context(), &aug.kernel, a.rows()).expect("kernel width")
}

/// Solves `x·a = b` row by row; `None` when some row of `b` is outside the
/// row span of `a`.
pub fn solve_mod(a: &ModMatrix, b: &ModMatrix) -> Option<SolveResult> {
    assert_eq!(
        a.cols(),
        b.cols(),
        "a and b must have the same number of columns"
    );
    let ctx = a.context();
    let (n, m) = (a.cols(), a.rows());
    let aug = augmented_howell(a);
    let span = ModMatrix::from_rows_with_cols(ctx, &aug.span, n + m).expect("span width");
    let mut particular = Vec::with_capacity(b.rows());
    for i in 0..b.rows() {
        let mut v = b.row(i).to_vec();
        v.resize(n + m, 0);
        let (rem, _) = reduce_row(&span, &v);
        if rem[..n].iter().any(|&x| x != 0) {
            return None;
        }
        particular.push(rem[n..].iter().map(|&x| ctx.neg(x)).collect());
    }
    Some(SolveResult {
        particular: ModMatrix::from_rows_with_cols(ctx, &particular, m).expect("width m"),
        kernel: ModMatrix::from_rows_with_cols(ctx, &aug.kernel, m).expect("width m"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ctx(p: u64, nu: u32) -> PadicContext {
        PadicContext::new(p, nu).unwrap()
    }

    /// Every vector in the row span, by enumerating all coefficient vectors.
    fn brute_span(a: &ModMatrix) -> BTreeSet<Vec<u64>> {
        let ctx = a.context();
        let m = ctx.modulus();
        let mut out = BTreeSet::new();
        let total = (m as usize).pow(a.rows() as u32);
        for code in 0..total {
            let mut c = code;
            let x: Vec<u64> = (0..a.rows())
                .map(|_| {
                    let d = (c % m as usize) as u64;
                    c /= m as usize;
                    d
                })
                .collect();
            out.insert(a.left_apply(&x));
        }
        out
    }

    fn all_matrices(
        ctx: PadicContext,
        rows: usize,
        cols: usize,
    ) -> impl Iterator<Item = ModMatrix> {
        let m = ctx.modulus() as usize;
        let n = rows * cols;
        (0..m.pow(n as u32)).map(move |mut code| {
            let data: Vec<Vec<u64>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            let d = (code % m) as u64;
                            code /= m;
                            d
                        })
                        .collect()
                })
                .collect();
            ModMatrix::from_rows(ctx, &data).unwrap()
        })
    }

    #[test]
    fn identity_is_canonical() {
        let c = ctx(3, 2);
        let id = ModMatrix::identity(c, 2);
        assert_eq!(howell_form(&id).0, id);
    }

    #[test]
    fn saturated_single_row() {
        let c = ctx(3, 2);
        let a = ModMatrix::from_rows(c, &[vec![3]]).unwrap();
        assert_eq!(howell_form(&a).0, a);
    }

    #[test]
    fn exhaustive_spans_over_z9() {
        let c = ctx(3, 2);
        for a in all_matrices(c, 2, 2) {
            let (h, t) = howell_form(&a);
            assert_eq!(t.mul(&a), h);
            assert_eq!(brute_span(&a), brute_span(&h), "span differs for {a}");
            assert_eq!(brute_span(&a).len() as u64, 3u64.pow(span_log_order(&h)));
            assert_eq!(howell_form(&h).0, h, "not idempotent for {a}");
        }
    }

    #[test]
    fn canonical_across_equal_spans() {
        // Two matrices with the same span must share a Howell form.
        let c = ctx(3, 2);
        let mut by_span: std::collections::BTreeMap<Vec<Vec<u64>>, ModMatrix> = Default::default();
        for a in all_matrices(c, 2, 2) {
            let key: Vec<Vec<u64>> = brute_span(&a).into_iter().collect();
            let h = howell_form(&a).0;
            if let Some(prev) = by_span.get(&key) {
                assert_eq!(prev, &h);
            } else {
                by_span.insert(key, h);
            }
        }
    }

    #[test]
    fn solve_examples() {
        let c = ctx(3, 2);
        let id = ModMatrix::identity(c, 2);
        let b = ModMatrix::from_rows(c, &[vec![4, 7]]).unwrap();
        let s = solve_mod(&id, &b).unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.kernel.rows(), 0);

        let a = ModMatrix::from_rows(c, &[vec![3]]).unwrap();
        assert!(solve_mod(&a, &ModMatrix::from_rows(c, &[vec![1]]).unwrap()).is_none());

        let s = solve_mod(&a, &ModMatrix::from_rows(c, &[vec![6]]).unwrap()).unwrap();
        assert_eq!(s.particular[(0, 0)], 2);
        assert_eq!(s.kernel, ModMatrix::from_rows(c, &[vec![3]]).unwrap());
        // exhaustive: solutions of 3x = 6 mod 9 are {2, 5, 8}
        let sols: Vec<u64> = (0..9).filter(|x| (3 * x) % 9 == 6).collect();
        assert_eq!(sols, vec![2, 5, 8]);
    }

    #[test]
    fn kernel_examples() {
        let c = ctx(3, 2);
        assert_eq!(kernel_mod(&ModMatrix::identity(c, 3)).rows(), 0);
        let z = ModMatrix::zeros(c, 2, 2);
        assert_eq!(kernel_mod(&z), ModMatrix::identity(c, 2));
        let a = ModMatrix::from_rows(c, &[vec![3]]).unwrap();
        assert_eq!(kernel_mod(&a), ModMatrix::from_rows(c, &[vec![3]]).unwrap());
    }

    #[test]
    fn kernel_exhaustive_2x2_mod_9() {
        let c = ctx(3, 2);
        for a in all_matrices(c, 2, 2) {
            let k = kernel_mod(&a);
            let brute: BTreeSet<Vec<u64>> = (0..81u64)
                .map(|code| vec![code % 9, code / 9])
                .filter(|x| a.left_apply(x).iter().all(|&v| v == 0))
                .collect();
            let gen = if k.rows() == 0 {
                [vec![0, 0]].into_iter().collect()
            } else {
                brute_span(&k)
            };
            assert_eq!(gen, brute, "kernel of {a}");
        }
    }
}
