use super::ModMatrix;

/// Diagonal form of a relation matrix under row operations and tracked
/// column operations: `rowspan(a)·Q = rowspan(diag(p^{d_0}, p^{d_1}, …))`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// `d_i` per column; `ν` where the column carries no relation.
    pub exponents: Vec<u32>,
    /// `Q`, acting on row vectors from the right.
    pub col_transform: ModMatrix,
    pub col_transform_inv: ModMatrix,
}

pub fn smith_form(a: &ModMatrix) -> SmithForm {
    let ctx = a.context();
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.to_rows();
    let mut q = ModMatrix::identity(ctx, cols).to_rows();
    let mut qinv = q.clone();
    let mut exponents = vec![ctx.nu(); cols];

    for t in 0..rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let v = ctx.valuation(x);
                    if best.is_none_or(|b| v < b.0) {
                        best = Some((v, i, j));
                    }
                }
            }
        }
        let Some((k, i, j)) = best else { break };
        m.swap(t, i);
        if j != t {
            for row in m.iter_mut().chain(q.iter_mut()) {
                row.swap(t, j);
            }
            qinv.swap(t, j);
        }
        let (_, unit) = ctx.split(m[t][t]);
        let inv = ctx.inverse(unit).expect("unit");
        m[t].iter_mut().for_each(|x| *x = ctx.mul(*x, inv));
        let pk = ctx.pow_p(k);
        let pivot_row = m[t].clone();
        for row in m.iter_mut().skip(t + 1) {
            let f = row[t] / pk;
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = ctx.sub(*x, ctx.mul(f, y));
                }
            }
        }
        for j in t + 1..cols {
            let f = m[t][j] / pk;
            if f == 0 {
                continue;
            }
            // column j -= f * column t, on the working matrix and on Q
            for row in m.iter_mut().chain(q.iter_mut()) {
                row[j] = ctx.sub(row[j], ctx.mul(f, row[t]));
            }
            // inverse: row t of Q^{-1} += f * row j
            let rj = qinv[j].clone();
            for (x, y) in qinv[t].iter_mut().zip(rj) {
                *x = ctx.add(*x, ctx.mul(f, y));
            }
        }
        exponents[t] = k;
    }
    SmithForm {
        exponents,
        col_transform: ModMatrix::from_rows_with_cols(ctx, &q, cols).expect("square"),
        col_transform_inv: ModMatrix::from_rows_with_cols(ctx, &qinv, cols).expect("square"),
    }
}

/// Invariant factors `[a_1 ≤ a_2 ≤ …]` of the row span of `gens`, meaning
/// the span is isomorphic to `⊕ Z/p^{a_i}`.
pub fn subgroup_invariants(gens: &ModMatrix) -> Vec<u32> {
    let nu = gens.context().nu();
    let s = smith_form(gens);
    let mut out: Vec<u32> = s
        .exponents
        .iter()
        .take(gens.rows().min(gens.cols()))
        .filter(|&&d| d < nu)
        .map(|&d| nu - d)
        .collect();
    out.sort_unstable();
    out
}
