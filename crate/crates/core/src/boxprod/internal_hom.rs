//! `Hom̲(M, N)`: maps `f: R ⊗ M → N` subject to
//! `F f(Vr⊗m) = f(r⊗Fm)`, `F f(r⊗Vm) = f(Fr⊗m)`, `V f(r⊗m) = f(Vr⊗Vm)`,
//! recorded by `φ_i = f(V^i ⊗ ·)` for `i ≤ I` and `ψ_j = f(F^j ⊗ ·)` for
//! `1 ≤ j ≤ J`.

use super::product::boxtimes_stable;
use super::Status;
use crate::dmod::{group_from_solutions, hom_group, same_context, FinModule, HomGroup, HomParams};
use crate::zplin::{kernel_mod, smith_form, solve_mod, subgroup_invariants, ModMatrix};
use crate::{Error, Result};

/// Unknown blocks: `φ_0..=φ_I` followed by `ψ_1..=ψ_J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Window {
    i: usize,
    j: usize,
}

impl Window {
    fn blocks(&self) -> usize {
        self.i + 1 + self.j
    }

    fn phi(&self, i: usize) -> usize {
        i
    }

    /// `ψ_0` is `φ_0`.
    fn psi(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.i + j
        }
    }
}

/// One summand `c · L · X_block · R` of a map equation; `None` means identity.
struct Term<'a> {
    block: usize,
    left: Option<&'a ModMatrix>,
    right: Option<&'a ModMatrix>,
    scalar: u64,
}

fn term<'a>(
    block: usize,
    left: Option<&'a ModMatrix>,
    right: Option<&'a ModMatrix>,
    scalar: u64,
) -> Term<'a> {
    Term {
        block,
        left,
        right,
        scalar,
    }
}

/// Linear conditions on group maps `⊕ Z/p^{src} → ⊕ Z/p^{dst}`, several
/// unknown maps (blocks) at once.
pub(crate) struct System {
    pub params: HomParams,
    /// Row per unknown, column per scalar equation.
    pub eqs: Vec<Vec<u64>>,
}

impl System {
    pub fn new(params: HomParams, blocks: usize) -> Self {
        let eqs = vec![Vec::new(); blocks * params.len()];
        System { params, eqs }
    }

    /// Imposes `Σ terms ≡ 0` as maps.
    fn equation(&mut self, terms: &[Term]) {
        let ctx = self.params.ctx;
        let (gd, gs) = (self.params.dst.len(), self.params.src.len());
        let len = self.params.len();
        let entry = |mat: Option<&ModMatrix>, r: usize, c: usize| match mat {
            Some(a) => a[(r, c)],
            None => u64::from(r == c),
        };
        for i in 0..gd {
            let scale = ctx.pow_p(ctx.nu() - self.params.dst[i]);
            for j in 0..gs {
                let mut col = vec![0u64; self.eqs.len()];
                for t in terms {
                    for a in 0..gd {
                        let l = entry(t.left, i, a);
                        if l == 0 {
                            continue;
                        }
                        for b in 0..gs {
                            let r = entry(t.right, b, j);
                            if r == 0 {
                                continue;
                            }
                            let c = ctx.mul(
                                ctx.mul(l, r),
                                ctx.mul(t.scalar, ctx.pow_p(self.params.shift(a, b))),
                            );
                            let k = t.block * len + self.params.var(a, b);
                            col[k] = ctx.add(col[k], c);
                        }
                    }
                }
                for (row, c) in self.eqs.iter_mut().zip(col) {
                    row.push(ctx.mul(c, scale));
                }
            }
        }
    }

    /// Generators of the solution group, as rows of parameters.
    fn solutions(&self) -> ModMatrix {
        let ctx = self.params.ctx;
        if self.eqs.first().is_some_and(|r| !r.is_empty()) {
            kernel_mod(&ModMatrix::from_rows(ctx, &self.eqs).expect("rectangular"))
        } else {
            ModMatrix::identity(ctx, self.eqs.len())
        }
    }

    /// Solutions embedded block by block.
    fn embedded_solutions(&self) -> ModMatrix {
        let sols = self.solutions();
        let len = self.params.len().max(1);
        let embedded: Vec<Vec<u64>> = (0..sols.rows())
            .map(|r| {
                sols.row(r)
                    .chunks(len)
                    .flat_map(|blk| self.params.embed(blk))
                    .collect()
            })
            .collect();
        ModMatrix::from_rows_with_cols(self.params.ctx, &embedded, self.eqs.len()).expect("width")
    }
}

/// Generators of the solutions in window `w`, as embedded rows.
fn solve_window(m: &FinModule, n: &FinModule, w: Window) -> (HomParams, ModMatrix) {
    let ctx = m.context();
    let (vm, fm, vn, fn_) = (m.v(), m.f(), n.v(), n.f());
    let p = ctx.p() % ctx.modulus();
    let neg1 = ctx.neg(1);
    let negp = ctx.neg(p);
    let mut sys = System::new(HomParams::new(ctx, m.orders(), n.orders()), w.blocks());
    for i in 0..w.i {
        // V φ_i = φ_{i+1} V
        sys.equation(&[
            term(w.phi(i), Some(vn), None, 1),
            term(w.phi(i + 1), None, Some(vm), neg1),
        ]);
        // F φ_{i+1} = φ_i F
        sys.equation(&[
            term(w.phi(i + 1), Some(fn_), None, 1),
            term(w.phi(i), None, Some(fm), neg1),
        ]);
    }
    for i in 1..=w.i {
        // F φ_i V = p φ_{i-1}
        sys.equation(&[
            term(w.phi(i), Some(fn_), Some(vm), 1),
            term(w.phi(i - 1), None, None, negp),
        ]);
    }
    for j in 1..=w.j {
        // ψ_j = F ψ_{j-1} V
        sys.equation(&[
            term(w.psi(j), None, None, 1),
            term(w.psi(j - 1), Some(fn_), Some(vm), neg1),
        ]);
        // V ψ_j = p ψ_{j-1} V
        sys.equation(&[
            term(w.psi(j), Some(vn), None, 1),
            term(w.psi(j - 1), None, Some(vm), negp),
        ]);
        // p F ψ_{j-1} = ψ_j F
        sys.equation(&[
            term(w.psi(j - 1), Some(fn_), None, p),
            term(w.psi(j), None, Some(fm), neg1),
        ]);
    }
    (sys.params.clone(), sys.embedded_solutions())
}

/// Drops the blocks of the larger window that lie outside `small`.
fn restrict(rows: &ModMatrix, big: Window, small: Window, len: usize) -> ModMatrix {
    let keep: Vec<usize> = (0..=small.i)
        .map(|i| big.phi(i))
        .chain((1..=small.j).map(|j| big.psi(j)))
        .collect();
    let out: Vec<Vec<u64>> = (0..rows.rows())
        .map(|r| {
            keep.iter()
                .flat_map(|&b| rows.row(r)[b * len..(b + 1) * len].to_vec())
                .collect()
        })
        .collect();
    ModMatrix::from_rows_with_cols(rows.context(), &out, small.blocks() * len).expect("width")
}

fn log_order(rows: &ModMatrix) -> u32 {
    subgroup_invariants(rows).iter().sum()
}

/// Result of [`internal_hom_trunc`].
#[derive(Clone, Debug)]
pub struct InternalHom {
    pub status: Status,
    pub window: (usize, usize),
    /// Group structure of the in-window solutions.
    pub orders: Vec<u32>,
    /// Present when stabilized.
    pub module: Option<FinModule>,
}

/// `Hom̲(M, N)` from the solutions in the window `(I, J)`.
pub fn internal_hom_trunc(
    m: &FinModule,
    n: &FinModule,
    window: (usize, usize),
) -> Result<InternalHom> {
    same_context(m.context(), n.context())?;
    let ctx = m.context();
    let small = Window {
        i: window.0,
        j: window.1,
    };
    let big = Window {
        i: small.i + 1,
        j: small.j + 1,
    };
    let (params, w_small) = solve_window(m, n, small);
    let (_, w_big) = solve_window(m, n, big);
    let len = params.len();
    let restricted = restrict(&w_big, big, small, len);
    let lo = log_order(&w_small);
    let stabilized = log_order(&w_big) == lo && log_order(&restricted) == lo;

    let s = smith_form(&w_small);
    let kept: Vec<usize> = (0..s.exponents.len())
        .filter(|&k| s.exponents[k] < ctx.nu())
        .collect();
    let orders: Vec<u32> = kept.iter().map(|&k| ctx.nu() - s.exponents[k]).collect();
    if !stabilized {
        let mut sorted = orders;
        sorted.sort_unstable();
        return Ok(InternalHom {
            status: Status::Truncated,
            window,
            orders: sorted,
            module: None,
        });
    }

    let basis: Vec<Vec<u64>> = kept
        .iter()
        .map(|&k| {
            s.col_transform_inv
                .row(k)
                .iter()
                .map(|&x| ctx.mul(x, ctx.pow_p(s.exponents[k])))
                .collect()
        })
        .collect();
    let basis_m = ModMatrix::from_rows_with_cols(ctx, &basis, small.blocks() * len)?;
    let ext = solve_mod(&restricted, &basis_m)
        .ok_or_else(|| Error::NotStabilized("internal Hom extension".into()))?
        .particular
        .mul(&w_big);

    let block = |row: &[u64], b: usize| row[b * len..(b + 1) * len].to_vec();
    let scaled = |v: Vec<u64>, c: u64| v.into_iter().map(|x| ctx.mul(x, c)).collect::<Vec<u64>>();
    let p = ctx.p() % ctx.modulus();
    let apply = |row: &[u64], frobenius: bool| -> Vec<u64> {
        let mut out = Vec::with_capacity(small.blocks() * len);
        if frobenius {
            // (F·f)(1) = f(F), (F·f)(V^i) = p f(V^{i-1}), (F·f)(F^j) = f(F^{j+1})
            out.extend(block(row, big.psi(1)));
            for i in 1..=small.i {
                out.extend(scaled(block(row, big.phi(i - 1)), p));
            }
            for j in 1..=small.j {
                out.extend(block(row, big.psi(j + 1)));
            }
        } else {
            // (V·f)(V^i) = f(V^{i+1}), (V·f)(F^j) = p f(F^{j-1})
            for i in 0..=small.i {
                out.extend(block(row, big.phi(i + 1)));
            }
            for j in 1..=small.j {
                out.extend(scaled(block(row, big.psi(j - 1)), p));
            }
        }
        out
    };
    let coords = |target: Vec<u64>| -> Vec<u64> {
        let y = s.col_transform.left_apply(&target);
        kept.iter()
            .zip(&orders)
            .map(|(&k, &o)| (y[k] / ctx.pow_p(s.exponents[k]).max(1)) % ctx.p().pow(o))
            .collect()
    };
    let g = kept.len();
    let mut v = ModMatrix::zeros(ctx, g, g);
    let mut f = ModMatrix::zeros(ctx, g, g);
    for c in 0..g {
        let row = ext.row(c);
        for (r, x) in coords(apply(row, false)).into_iter().enumerate() {
            v.set(r, c, x);
        }
        for (r, x) in coords(apply(row, true)).into_iter().enumerate() {
            f.set(r, c, x);
        }
    }
    let module = FinModule::new(ctx, orders.clone(), v, f)?;
    Ok(InternalHom {
        status: Status::Stabilized,
        window,
        orders: module.sorted_orders(),
        module: Some(module),
    })
}

/// The first stabilized square window up to `max_window`.
pub fn internal_hom_stable(m: &FinModule, n: &FinModule, max_window: usize) -> Result<FinModule> {
    for w in 0..=max_window {
        let h = internal_hom_trunc(m, n, (w, w))?;
        if let Some(module) = h.module {
            return Ok(module);
        }
    }
    Err(Error::NotStabilized(format!(
        "internal Hom up to window {max_window}"
    )))
}

/// `Z_p`-bilinear maps `f: M ⊗ N → L` with `F f(Vm⊗n) = f(m⊗Fn)`,
/// `F f(m⊗Vn) = f(Fm⊗n)` and `V f(m⊗n) = f(Vm⊗Vn)`. By the universal
/// property this is `Hom_R(M ⊠ N, L)`, computed without forming `M ⊠ N`.
/// Generators are maps on the generators `g_i ⊗ h_j` (index `i·rank N + j`).
pub fn bilinear_maps(m: &FinModule, n: &FinModule, l: &FinModule) -> Result<HomGroup> {
    same_context(m.context(), n.context())?;
    same_context(m.context(), l.context())?;
    let ctx = m.context();
    let (gm, gn) = (m.rank(), n.rank());
    let src: Vec<u32> = (0..gm * gn)
        .map(|k| m.orders()[k / gn].min(n.orders()[k % gn]))
        .collect();
    let params = HomParams::new(ctx, &src, l.orders());
    if params.len() == 0 {
        return Ok(HomGroup {
            invariants: Vec::new(),
            generators: Vec::new(),
        });
    }
    // group endomorphisms of M ⊗ N: a ⊗ b for a, b each V, F or identity
    let tensor = |a: Option<&ModMatrix>, b: Option<&ModMatrix>| {
        let entry = |mat: Option<&ModMatrix>, r: usize, c: usize| match mat {
            Some(x) => x[(r, c)],
            None => u64::from(r == c),
        };
        let mut out = ModMatrix::zeros(ctx, gm * gn, gm * gn);
        for i in 0..gm {
            for j in 0..gn {
                for x in 0..gm {
                    for y in 0..gn {
                        out.set(
                            x * gn + y,
                            i * gn + j,
                            ctx.mul(entry(a, x, i), entry(b, y, j)),
                        );
                    }
                }
            }
        }
        out
    };
    let v1 = tensor(Some(m.v()), None);
    let f1 = tensor(Some(m.f()), None);
    let one_v = tensor(None, Some(n.v()));
    let one_f = tensor(None, Some(n.f()));
    let vv = tensor(Some(m.v()), Some(n.v()));
    let neg1 = ctx.neg(1);
    let mut sys = System::new(params, 1);
    sys.equation(&[
        term(0, Some(l.f()), Some(&v1), 1),
        term(0, None, Some(&one_f), neg1),
    ]);
    sys.equation(&[
        term(0, Some(l.f()), Some(&one_v), 1),
        term(0, None, Some(&f1), neg1),
    ]);
    sys.equation(&[
        term(0, Some(l.v()), None, 1),
        term(0, None, Some(&vv), neg1),
    ]);
    Ok(group_from_solutions(&sys.params, &sys.solutions()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjunctionVerdict {
    /// Both sides have these invariant factors.
    Pass(Vec<u32>),
    Mismatch {
        lhs: Vec<u32>,
        rhs: Vec<u32>,
    },
    NotStabilized(String),
}

impl AdjunctionVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, AdjunctionVerdict::Pass(_))
    }
}

/// Compares `Hom_R(M ⊠ N, L)` with `Hom_R(M, Hom̲(N, L))`. The left side
/// is read off the stabilized product when there is one and otherwise
/// counted as bilinear maps.
pub fn adjunction_check(
    m: &FinModule,
    n: &FinModule,
    l: &FinModule,
    max_fbound: usize,
    max_window: usize,
) -> Result<AdjunctionVerdict> {
    let ihom = match internal_hom_stable(n, l, max_window) {
        Ok(h) => h,
        Err(Error::NotStabilized(what)) => return Ok(AdjunctionVerdict::NotStabilized(what)),
        Err(e) => return Err(e),
    };
    let lhs = match boxtimes_stable(m, n, max_fbound) {
        Ok(t) => hom_group(&t.into_module()?, l)?.invariants,
        Err(Error::NotStabilized(_)) => bilinear_maps(m, n, l)?.invariants,
        Err(e) => return Err(e),
    };
    let rhs = hom_group(m, &ihom)?.invariants;
    Ok(if lhs == rhs {
        AdjunctionVerdict::Pass(lhs)
    } else {
        AdjunctionVerdict::Mismatch { lhs, rhs }
    })
}
