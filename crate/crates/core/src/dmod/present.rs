//! Turning a presentation `(Z/p^ν)^N / relations` into cyclic summands.

use crate::zplin::{smith_form, ModMatrix, PadicContext};

#[derive(Clone, Debug)]
pub(crate) struct Reduction {
    pub orders: Vec<u32>,
    /// `N × g`: a row vector in the old symbols times this gives the new
    /// coordinates.
    pub to_new: ModMatrix,
    /// `g × N`: row `k` is new generator `k` written in the old symbols.
    pub from_new: ModMatrix,
}

pub(crate) fn reduce_presentation(
    ctx: PadicContext,
    nsyms: usize,
    relations: &[Vec<u64>],
) -> Reduction {
    let rel =
        ModMatrix::from_rows_with_cols(ctx, relations, nsyms).expect("relations have width nsyms");
    let s = smith_form(&rel);
    let kept: Vec<usize> = (0..nsyms).filter(|&k| s.exponents[k] > 0).collect();
    let orders: Vec<u32> = kept.iter().map(|&k| s.exponents[k]).collect();
    let mut to_new = ModMatrix::zeros(ctx, nsyms, kept.len());
    for l in 0..nsyms {
        for (c, &k) in kept.iter().enumerate() {
            to_new.set(l, c, s.col_transform[(l, k)] % ctx.p().pow(orders[c]));
        }
    }
    let rows: Vec<Vec<u64>> = kept
        .iter()
        .map(|&k| s.col_transform_inv.row(k).to_vec())
        .collect();
    let from_new = ModMatrix::from_rows_with_cols(ctx, &rows, nsyms).expect("width nsyms");
    Reduction {
        orders,
        to_new,
        from_new,
    }
}

/// Matrix, in column convention on the new generators, of an operator given
/// in row convention on the old symbols (row `l` is the image of symbol `l`).
pub(crate) fn transport(red: &Reduction, op_rows: &ModMatrix) -> ModMatrix {
    let m = red.from_new.mul(op_rows).mul(&red.to_new);
    super::normalize_rows(&m.transpose(), &red.orders)
}
