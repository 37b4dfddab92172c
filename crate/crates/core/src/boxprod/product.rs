//! The bilinear product `M ⊠ N`, presented on symbols `F^k ⊗ (g_i ⊗ h_j)`.

use crate::dmod::{reduce_presentation, same_context, transport, FinModule};
use crate::zplin::{howell_form, reduce_row, span_log_order, ModMatrix, PadicContext};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// The truncation equals the full product.
    Stabilized,
    /// `F` of the top level is not expressible; only `V` is known.
    Truncated,
}

/// `M ⊠ N` cut off at F-degree `fbound`.
#[derive(Clone, Debug)]
pub struct TruncatedProduct {
    left: FinModule,
    right: FinModule,
    fbound: usize,
    status: Status,
    orders: Vec<u32>,
    v: ModMatrix,
    f: Option<ModMatrix>,
    /// Row per symbol: its coordinates in the quotient.
    symbols: ModMatrix,
    module: Option<FinModule>,
    extra: Vec<Vec<u64>>,
}

#[derive(Clone, Copy, Debug)]
struct Layout {
    gm: usize,
    gn: usize,
}

impl Layout {
    fn block(&self) -> usize {
        self.gm * self.gn
    }

    fn sym(&self, k: usize, i: usize, j: usize) -> usize {
        k * self.block() + i * self.gn + j
    }
}

/// Relation rows over `(Z/p^ν)^{(top+1)·gm·gn}` for levels `0..=top`.
/// Each level-0 combination in `extra` is imposed at every level.
fn relations(m: &FinModule, n: &FinModule, top: usize, extra: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let ctx = m.context();
    let lay = Layout {
        gm: m.rank(),
        gn: n.rank(),
    };
    let width = (top + 1) * lay.block();
    let mut rows = Vec::new();
    for k in 0..=top {
        for i in 0..lay.gm {
            for j in 0..lay.gn {
                let e = m.orders()[i].min(n.orders()[j]);
                if e < ctx.nu() {
                    let mut r = vec![0; width];
                    r[lay.sym(k, i, j)] = ctx.pow_p(e);
                    rows.push(r);
                }
            }
        }
    }
    for k in 0..=top {
        for x in extra {
            let mut r = vec![0; width];
            r[k * lay.block()..(k + 1) * lay.block()].copy_from_slice(x);
            rows.push(r);
        }
    }
    for k in 0..top {
        for i in 0..lay.gm {
            for j in 0..lay.gn {
                // F^{k+1} ⊗ (V g_i ⊗ h_j) - F^k ⊗ (g_i ⊗ F h_j)
                let mut r1 = vec![0; width];
                // F^{k+1} ⊗ (g_i ⊗ V h_j) - F^k ⊗ (F g_i ⊗ h_j)
                let mut r2 = vec![0; width];
                for a in 0..lay.gm {
                    let s = lay.sym(k + 1, a, j);
                    r1[s] = ctx.add(r1[s], m.v()[(a, i)]);
                    let s = lay.sym(k, a, j);
                    r2[s] = ctx.sub(r2[s], m.f()[(a, i)]);
                }
                for b in 0..lay.gn {
                    let s = lay.sym(k, i, b);
                    r1[s] = ctx.sub(r1[s], n.f()[(b, j)]);
                    let s = lay.sym(k + 1, i, b);
                    r2[s] = ctx.add(r2[s], n.v()[(b, j)]);
                }
                rows.push(r1);
                rows.push(r2);
            }
        }
    }
    rows
}

fn log_order(ctx: PadicContext, rows: &[Vec<u64>], width: usize) -> u32 {
    let m = ModMatrix::from_rows_with_cols(ctx, rows, width).expect("width");
    ctx.nu() * width as u32 - span_log_order(&howell_form(&m).0)
}

/// For each top-level symbol of the `(top+1)`-truncation, its expression in
/// the lower levels, or `None` if some top symbol is not expressible.
fn top_level_reduction(
    m: &FinModule,
    n: &FinModule,
    top: usize,
    extra: &[Vec<u64>],
) -> Option<Vec<Vec<u64>>> {
    let ctx = m.context();
    let lay = Layout {
        gm: m.rank(),
        gn: n.rank(),
    };
    let b = lay.block();
    let lower = top * b;
    let rows = relations(m, n, top, extra);
    // columns reordered: the top level first, then levels 0..top
    let permuted: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r[lower..].iter().chain(&r[..lower]).copied().collect())
        .collect();
    let h = howell_form(&ModMatrix::from_rows_with_cols(ctx, &permuted, lower + b).ok()?).0;
    let mut out = Vec::with_capacity(b);
    for t in 0..b {
        let mut e = vec![0; lower + b];
        e[t] = 1;
        let (rem, _) = reduce_row(&h, &e);
        if rem[..b].iter().any(|&x| x != 0) {
            return None;
        }
        out.push(rem[b..].to_vec());
    }
    Some(out)
}

/// `M ⊠ N` truncated at F-degree `fbound`.
pub fn boxtimes_trunc(m: &FinModule, n: &FinModule, fbound: usize) -> Result<TruncatedProduct> {
    build(m, n, fbound, Vec::new())
}

/// `M ⊠ N` modulo the submodule generated by level-0 combinations
/// `Σ c_ij g_i ⊗ h_j` (rows of width `rank M · rank N`, index `i·rank N + j`).
pub fn boxtimes_quotient_trunc(
    m: &FinModule,
    n: &FinModule,
    fbound: usize,
    relations: &[Vec<u64>],
) -> Result<TruncatedProduct> {
    let width = m.rank() * n.rank();
    if let Some(r) = relations.iter().find(|r| r.len() != width) {
        return Err(Error::Dimension(format!(
            "relation of length {}, expected {width}",
            r.len()
        )));
    }
    build(m, n, fbound, relations.to_vec())
}

fn build(
    m: &FinModule,
    n: &FinModule,
    fbound: usize,
    extra: Vec<Vec<u64>>,
) -> Result<TruncatedProduct> {
    same_context(m.context(), n.context())?;
    let ctx = m.context();
    let lay = Layout {
        gm: m.rank(),
        gn: n.rank(),
    };
    let b = lay.block();
    let width = (fbound + 1) * b;
    let rows = relations(m, n, fbound, &extra);

    let top = top_level_reduction(m, n, fbound + 1, &extra);
    let stabilized = top.is_some()
        && log_order(ctx, &rows, width)
            == log_order(ctx, &relations(m, n, fbound + 1, &extra), width + b);

    let red = reduce_presentation(ctx, width, &rows);

    let mut v_rows = ModMatrix::zeros(ctx, width, width);
    for i in 0..lay.gm {
        for j in 0..lay.gn {
            let s = lay.sym(0, i, j);
            for a in 0..lay.gm {
                for c in 0..lay.gn {
                    let x = ctx.mul(m.v()[(a, i)], n.v()[(c, j)]);
                    v_rows.set(s, lay.sym(0, a, c), x);
                }
            }
            for k in 1..=fbound {
                v_rows.set(
                    lay.sym(k, i, j),
                    lay.sym(k - 1, i, j),
                    ctx.p() % ctx.modulus(),
                );
            }
        }
    }
    let v = transport(&red, &v_rows);

    let (f, status) = match top {
        Some(top) if stabilized => {
            let mut f_rows = ModMatrix::zeros(ctx, width, width);
            for k in 0..fbound {
                for t in 0..b {
                    f_rows.set(k * b + t, (k + 1) * b + t, 1);
                }
            }
            for (t, expr) in top.iter().enumerate() {
                for (c, &x) in expr.iter().enumerate() {
                    f_rows.set(fbound * b + t, c, x);
                }
            }
            (Some(transport(&red, &f_rows)), Status::Stabilized)
        }
        _ => (None, Status::Truncated),
    };
    let module = match &f {
        Some(f) => Some(FinModule::new(
            ctx,
            red.orders.clone(),
            v.clone(),
            f.clone(),
        )?),
        None => None,
    };
    Ok(TruncatedProduct {
        left: m.clone(),
        right: n.clone(),
        fbound,
        status,
        orders: red.orders,
        v,
        f,
        symbols: red.to_new,
        module,
        extra,
    })
}

/// The first stabilized truncation with `fbound ≤ max_fbound`.
pub fn boxtimes_stable(
    m: &FinModule,
    n: &FinModule,
    max_fbound: usize,
) -> Result<TruncatedProduct> {
    boxtimes_quotient_stable(m, n, max_fbound, &[])
}

/// As [`boxtimes_stable`] for the quotient by `relations`.
pub fn boxtimes_quotient_stable(
    m: &FinModule,
    n: &FinModule,
    max_fbound: usize,
    relations: &[Vec<u64>],
) -> Result<TruncatedProduct> {
    for k in 0..=max_fbound {
        let t = boxtimes_quotient_trunc(m, n, k, relations)?;
        if t.status == Status::Stabilized {
            return Ok(t);
        }
    }
    Err(Error::NotStabilized(format!(
        "M ⊠ N up to F-degree {max_fbound}"
    )))
}

impl TruncatedProduct {
    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_stabilized(&self) -> bool {
        self.status == Status::Stabilized
    }

    pub fn fbound(&self) -> usize {
        self.fbound
    }

    pub fn left(&self) -> &FinModule {
        &self.left
    }

    pub fn right(&self) -> &FinModule {
        &self.right
    }

    /// The level-0 relations imposed on top of the product.
    pub fn relations(&self) -> &[Vec<u64>] {
        &self.extra
    }

    /// Group structure of the truncation.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn log_order(&self) -> u32 {
        self.orders.iter().sum()
    }

    pub fn v(&self) -> &ModMatrix {
        &self.v
    }

    pub fn f(&self) -> Option<&ModMatrix> {
        self.f.as_ref()
    }

    /// The product as a module; present only when stabilized.
    pub fn module(&self) -> Option<&FinModule> {
        self.module.as_ref()
    }

    pub fn into_module(self) -> Result<FinModule> {
        let fbound = self.fbound;
        self.module
            .ok_or_else(|| Error::NotStabilized(format!("M ⊠ N at F-degree {fbound}")))
    }

    /// Coordinates of `F^k ⊗ (g_i ⊗ h_j)`.
    pub fn symbol(&self, k: usize, i: usize, j: usize) -> Vec<u64> {
        let lay = Layout {
            gm: self.left.rank(),
            gn: self.right.rank(),
        };
        self.symbols.row(lay.sym(k, i, j)).to_vec()
    }

    /// `x ∘ y` for elements of the two factors, bilinear in the level-0
    /// symbols.
    pub fn circ(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let ctx = self.v.context();
        let mut out = vec![0; self.orders.len()];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                let c = ctx.mul(xi, yj);
                if c == 0 {
                    continue;
                }
                for (o, s) in out.iter_mut().zip(self.symbol(0, i, j)) {
                    *o = ctx.add(*o, ctx.mul(c, s));
                }
            }
        }
        out.iter()
            .zip(&self.orders)
            .map(|(&a, &e)| a % ctx.p().pow(e))
            .collect()
    }
}
