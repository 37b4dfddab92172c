//! Homomorphism groups and kernels/images of maps between finite groups
//! `⊕ Z/p^{e_j} → ⊕ Z/p^{f_i}`.

use super::{check_congruence, normalize_rows, same_context, FinModule};
use crate::zplin::{howell_form, kernel_mod, subgroup_invariants, ModMatrix, PadicContext};
use crate::Result;

/// `Hom_R(M, N)` as an abstract group `⊕ Z/p^{a_i}` with a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGroup {
    /// Invariant factors, ascending.
    pub invariants: Vec<u32>,
    /// Homomorphisms (column convention, `rank N × rank M`) generating the group.
    pub generators: Vec<ModMatrix>,
}

impl HomGroup {
    pub fn log_order(&self) -> u32 {
        self.invariants.iter().sum()
    }
}

/// Parameterisation of group homomorphisms `⊕ Z/p^{src_b} → ⊕ Z/p^{dst_a}`:
/// entry `(a, b)` is `p^{s_ab}·y_ab` with `y_ab` free in `Z/p^ν`, where
/// `s_ab = max(0, dst_a - src_b)`.
#[derive(Clone, Debug)]
pub(crate) struct HomParams {
    pub ctx: PadicContext,
    pub src: Vec<u32>,
    pub dst: Vec<u32>,
}

impl HomParams {
    pub fn new(ctx: PadicContext, src: &[u32], dst: &[u32]) -> Self {
        HomParams {
            ctx,
            src: src.to_vec(),
            dst: dst.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.src.len() * self.dst.len()
    }

    pub fn var(&self, a: usize, b: usize) -> usize {
        a * self.src.len() + b
    }

    pub fn shift(&self, a: usize, b: usize) -> u32 {
        self.dst[a].saturating_sub(self.src[b])
    }

    /// `log_p` of the order of the entry `(a, b)`.
    pub fn entry_order(&self, a: usize, b: usize) -> u32 {
        self.dst[a].min(self.src[b])
    }

    pub fn to_matrix(&self, y: &[u64]) -> ModMatrix {
        let ctx = self.ctx;
        let mut h = ModMatrix::zeros(ctx, self.dst.len(), self.src.len());
        for a in 0..self.dst.len() {
            for b in 0..self.src.len() {
                let x = ctx.mul(ctx.pow_p(self.shift(a, b)), y[self.var(a, b)]);
                h.set(a, b, x % ctx.p().pow(self.dst[a]));
            }
        }
        h
    }

    /// Injective image of the parameter vector in `(Z/p^ν)^{len}`.
    pub fn embed(&self, y: &[u64]) -> Vec<u64> {
        let ctx = self.ctx;
        let mut w = vec![0; self.len()];
        for a in 0..self.dst.len() {
            for b in 0..self.src.len() {
                let k = self.var(a, b);
                w[k] = ctx.mul(y[k], ctx.pow_p(ctx.nu() - self.entry_order(a, b)));
            }
        }
        w
    }

    /// Coefficient rows (one per parameter) of the linear equations
    /// `h·op_src - op_dst·h ≡ 0`, each equation scaled to live mod `p^ν`.
    /// Appends `dst.len() * src.len()` columns to `eqs`.
    pub fn commutation_equations(
        &self,
        op_src: &ModMatrix,
        op_dst: &ModMatrix,
        eqs: &mut [Vec<u64>],
    ) {
        let ctx = self.ctx;
        let (gd, gs) = (self.dst.len(), self.src.len());
        for i in 0..gd {
            let scale = ctx.pow_p(ctx.nu() - self.dst[i]);
            for j in 0..gs {
                let mut col = vec![0u64; self.len()];
                // (h·op_src)_ij = Σ_b p^{s_ib} y_ib op_src[b][j]
                for b in 0..gs {
                    let c = ctx.mul(ctx.pow_p(self.shift(i, b)), op_src[(b, j)]);
                    let k = self.var(i, b);
                    col[k] = ctx.add(col[k], c);
                }
                // (op_dst·h)_ij = Σ_a op_dst[i][a] p^{s_aj} y_aj
                for a in 0..gd {
                    let c = ctx.mul(op_dst[(i, a)], ctx.pow_p(self.shift(a, j)));
                    let k = self.var(a, j);
                    col[k] = ctx.sub(col[k], c);
                }
                for (row, c) in eqs.iter_mut().zip(col) {
                    row.push(ctx.mul(c, scale));
                }
            }
        }
    }
}

/// Whether `h` (column convention) is an `R`-linear map `M → N`.
pub fn is_hom(m: &FinModule, n: &FinModule, h: &ModMatrix) -> bool {
    if h.rows() != n.rank() || h.cols() != m.rank() || h.context() != m.context() {
        return false;
    }
    if check_congruence("h", h, m.orders(), n.orders()).is_err() {
        return false;
    }
    let ok = |a: &ModMatrix, b: &ModMatrix| {
        normalize_rows(&h.mul(a), n.orders()) == normalize_rows(&b.mul(h), n.orders())
    };
    ok(m.v(), n.v()) && ok(m.f(), n.f())
}

pub fn hom_group(m: &FinModule, n: &FinModule) -> Result<HomGroup> {
    same_context(m.context(), n.context())?;
    let ctx = m.context();
    let params = HomParams::new(ctx, m.orders(), n.orders());
    if params.len() == 0 {
        return Ok(HomGroup {
            invariants: Vec::new(),
            generators: Vec::new(),
        });
    }
    let mut eqs = vec![Vec::new(); params.len()];
    params.commutation_equations(m.v(), n.v(), &mut eqs);
    params.commutation_equations(m.f(), n.f(), &mut eqs);
    let a = ModMatrix::from_rows(ctx, &eqs)?;
    let sols = kernel_mod(&a);
    Ok(group_from_solutions(&params, &sols))
}

/// Structure and generators of the group of maps whose parameter vectors
/// are spanned by the rows of `sols`.
pub(crate) fn group_from_solutions(params: &HomParams, sols: &ModMatrix) -> HomGroup {
    let ctx = params.ctx;
    let embedded: Vec<Vec<u64>> = (0..sols.rows())
        .map(|r| params.embed(sols.row(r)))
        .collect();
    let w = ModMatrix::from_rows_with_cols(ctx, &embedded, params.len()).expect("width");
    let invariants = subgroup_invariants(&w);
    let (h, t) = howell_form(&w);
    let combos = t.mul(sols);
    let generators = (0..h.rows())
        .map(|r| params.to_matrix(combos.row(r)))
        .filter(|g| !g.is_zero())
        .collect();
    HomGroup {
        invariants,
        generators,
    }
}

/// Generators (rows, source coordinates) of the kernel of the group map
/// `mat: ⊕ Z/p^{src_j} → ⊕ Z/p^{dst_i}`.
pub fn kernel_of_map(src: &[u32], dst: &[u32], mat: &ModMatrix) -> ModMatrix {
    let ctx = mat.context();
    let rows: Vec<Vec<u64>> = (0..src.len())
        .map(|j| {
            (0..dst.len())
                .map(|i| ctx.mul(mat[(i, j)], ctx.pow_p(ctx.nu() - dst[i])))
                .collect()
        })
        .collect();
    let a = ModMatrix::from_rows_with_cols(ctx, &rows, dst.len()).expect("width");
    let k = kernel_mod(&a);
    let normalized: Vec<Vec<u64>> = k
        .to_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .zip(src)
                .map(|(x, &e)| x % ctx.p().pow(e))
                .collect()
        })
        .collect();
    ModMatrix::from_rows_with_cols(ctx, &normalized, src.len()).expect("width")
}

fn embedded_invariants(ctx: PadicContext, orders: &[u32], gens: &[Vec<u64>]) -> Vec<u32> {
    let rows: Vec<Vec<u64>> = gens
        .iter()
        .map(|x| {
            x.iter()
                .zip(orders)
                .map(|(&a, &e)| ctx.mul(a, ctx.pow_p(ctx.nu() - e)))
                .collect()
        })
        .collect();
    let w = ModMatrix::from_rows_with_cols(ctx, &rows, orders.len()).expect("width");
    subgroup_invariants(&w)
}

/// Invariant factors of the kernel of `mat`.
pub fn kernel_invariants(src: &[u32], dst: &[u32], mat: &ModMatrix) -> Vec<u32> {
    let k = kernel_of_map(src, dst, mat);
    embedded_invariants(mat.context(), src, &k.to_rows())
}

/// Invariant factors of the image of `mat`.
pub fn image_invariants(dst: &[u32], mat: &ModMatrix) -> Vec<u32> {
    let cols: Vec<Vec<u64>> = (0..mat.cols()).map(|j| mat.column(j)).collect();
    embedded_invariants(mat.context(), dst, &cols)
}
