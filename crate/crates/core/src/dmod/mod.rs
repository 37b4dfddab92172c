//! Finite-length Dieudonné modules over `Z/p^ν`.
//!
//! A module is a direct sum of cyclic groups `Z/p^{e_i}` together with the
//! matrices of `V` and `F` in the column convention: entry `(i, j)` is the
//! coefficient of generator `i` in the image of generator `j`. Entries of
//! row `i` are kept reduced modulo `p^{e_i}`.

mod hom;
mod iso;
mod present;
mod quadratic;
mod standard;

use std::fmt;

use crate::zplin::{howell_form, ModMatrix, PadicContext};
use crate::{Error, Result};

pub(crate) use hom::{group_from_solutions, HomParams};
pub use hom::{hom_group, image_invariants, is_hom, kernel_invariants, kernel_of_map, HomGroup};
pub use iso::{is_isomorphic, IsoVerdict, Signature};
pub(crate) use present::{reduce_presentation, transport};
pub use quadratic::{
    base_change_quadratic, check_semilinear_iso, least_nonresidue, verify_twist_untwist_iso,
    QuadraticContext, SemilinearModule, TwistReport, W,
};
pub(crate) use standard::{morava_matrices, simple_matrices};
pub use standard::{standard_module, StandardKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinModule {
    ctx: PadicContext,
    orders: Vec<u32>,
    v: ModMatrix,
    f: ModMatrix,
}

/// Reduces every entry of row `i` modulo `p^{orders[i]}`.
pub(crate) fn normalize_rows(m: &ModMatrix, orders: &[u32]) -> ModMatrix {
    let ctx = m.context();
    let rows: Vec<Vec<u64>> = m
        .to_rows()
        .into_iter()
        .zip(orders)
        .map(|(r, &e)| {
            let q = ctx.p().pow(e);
            r.into_iter().map(|x| x % q).collect()
        })
        .collect();
    ModMatrix::from_rows_with_cols(ctx, &rows, m.cols()).expect("shape preserved")
}

/// Checks that `h` (column convention) defines a group homomorphism
/// `⊕ Z/p^{src_j} → ⊕ Z/p^{dst_i}`.
pub(crate) fn check_congruence(
    op: &'static str,
    h: &ModMatrix,
    src: &[u32],
    dst: &[u32],
) -> Result<()> {
    let ctx = h.context();
    for (i, &ei) in dst.iter().enumerate() {
        for (j, &ej) in src.iter().enumerate() {
            let need = ei.saturating_sub(ej);
            if need > 0 && !(h[(i, j)] % ctx.p().pow(ei)).is_multiple_of(ctx.p().pow(need)) {
                return Err(Error::IllDefined { op, row: i, col: j });
            }
        }
    }
    Ok(())
}

impl FinModule {
    /// Validates and normalizes a module presented by generator orders and
    /// the matrices of `V` and `F`.
    pub fn new(ctx: PadicContext, orders: Vec<u32>, v: ModMatrix, f: ModMatrix) -> Result<Self> {
        let g = orders.len();
        for &e in &orders {
            if e == 0 || e > ctx.nu() {
                return Err(Error::BadOrder {
                    order: e,
                    nu: ctx.nu(),
                });
            }
        }
        for (name, m) in [("V", &v), ("F", &f)] {
            if m.context() != ctx {
                return Err(Error::ContextMismatch(
                    ctx.to_string(),
                    m.context().to_string(),
                ));
            }
            if m.rows() != g || m.cols() != g {
                return Err(Error::Dimension(format!(
                    "{name} is {}x{}, expected {g}x{g}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let v = normalize_rows(&v, &orders);
        let f = normalize_rows(&f, &orders);
        check_congruence("V", &v, &orders, &orders)?;
        check_congruence("F", &f, &orders, &orders)?;
        let p_id = ModMatrix::scalar(ctx, g, ctx.p());
        let p_id = normalize_rows(&p_id, &orders);
        if normalize_rows(&v.mul(&f), &orders) != p_id {
            return Err(Error::RelationViolated("V·F differs from p·id".into()));
        }
        if normalize_rows(&f.mul(&v), &orders) != p_id {
            return Err(Error::RelationViolated("F·V differs from p·id".into()));
        }
        Ok(FinModule { ctx, orders, v, f })
    }

    pub fn zero(ctx: PadicContext) -> Self {
        let z = ModMatrix::zeros(ctx, 0, 0);
        FinModule {
            ctx,
            orders: Vec::new(),
            v: z.clone(),
            f: z,
        }
    }

    pub fn context(&self) -> PadicContext {
        self.ctx
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `log_p` of the group order.
    pub fn log_order(&self) -> u32 {
        self.orders.iter().sum()
    }

    pub fn v(&self) -> &ModMatrix {
        &self.v
    }

    pub fn f(&self) -> &ModMatrix {
        &self.f
    }

    pub fn is_zero(&self) -> bool {
        self.orders.is_empty()
    }

    /// Generator orders sorted ascending.
    pub fn sorted_orders(&self) -> Vec<u32> {
        let mut o = self.orders.clone();
        o.sort_unstable();
        o
    }

    pub fn normalize(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.orders)
            .map(|(&a, &e)| a % self.ctx.p().pow(e))
            .collect()
    }

    pub fn apply_v(&self, x: &[u64]) -> Vec<u64> {
        self.normalize(&self.v.apply(x))
    }

    pub fn apply_f(&self, x: &[u64]) -> Vec<u64> {
        self.normalize(&self.f.apply(x))
    }

    /// Image of an element under `⊕ Z/p^{e_i} ↪ (Z/p^ν)^g`, `x_i ↦ p^{ν-e_i} x_i`.
    pub fn embed(&self, x: &[u64]) -> Vec<u64> {
        let nu = self.ctx.nu();
        x.iter()
            .zip(&self.orders)
            .map(|(&a, &e)| self.ctx.mul(a, self.ctx.pow_p(nu - e)))
            .collect()
    }

    /// The relations `p^{e_i}·g_i = 0` as rows over `Z/p^ν`.
    pub(crate) fn order_relations(&self) -> Vec<Vec<u64>> {
        let g = self.rank();
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < self.ctx.nu())
            .map(|(i, &e)| {
                let mut r = vec![0; g];
                r[i] = self.ctx.pow_p(e);
                r
            })
            .collect()
    }

    /// Howell rows (in free coordinates, order relations included) of the
    /// smallest `R`-submodule containing `gens`.
    pub fn submodule_closure(&self, gens: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let ctx = self.ctx;
        let g = self.rank();
        let mut rows: Vec<Vec<u64>> = gens.to_vec();
        rows.extend(self.order_relations());
        let mut current = howell_of(ctx, &rows, g);
        loop {
            let mut next = current.clone();
            for r in &current {
                next.push(self.v.apply(r));
                next.push(self.f.apply(r));
            }
            let h = howell_of(ctx, &next, g);
            if h == current {
                return current;
            }
            current = h;
        }
    }

    /// Quotient by the `R`-submodule generated by `gens`, together with the
    /// projection (row convention: old coordinates times the matrix give new
    /// coordinates).
    pub fn quotient(&self, gens: &[Vec<u64>]) -> Result<(FinModule, ModMatrix)> {
        let relations = self.submodule_closure(gens);
        let red = reduce_presentation(self.ctx, self.rank(), &relations);
        let v = transport(&red, &self.v.transpose());
        let f = transport(&red, &self.f.transpose());
        let q = FinModule::new(self.ctx, red.orders.clone(), v, f)?;
        Ok((q, red.to_new))
    }

    /// The same module with generators reordered: new generator `k` is old
    /// generator `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FinModule> {
        let g = self.rank();
        let mut v = ModMatrix::zeros(self.ctx, g, g);
        let mut f = ModMatrix::zeros(self.ctx, g, g);
        for a in 0..g {
            for b in 0..g {
                v.set(a, b, self.v[(perm[a], perm[b])]);
                f.set(a, b, self.f[(perm[a], perm[b])]);
            }
        }
        let orders = perm.iter().map(|&k| self.orders[k]).collect();
        FinModule::new(self.ctx, orders, v, f)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &FinModule) -> Result<FinModule> {
        same_context(self.ctx, other.ctx)?;
        let (a, b) = (self.rank(), other.rank());
        let mut v = ModMatrix::zeros(self.ctx, a + b, a + b);
        let mut f = v.clone();
        for i in 0..a {
            for j in 0..a {
                v.set(i, j, self.v[(i, j)]);
                f.set(i, j, self.f[(i, j)]);
            }
        }
        for i in 0..b {
            for j in 0..b {
                v.set(a + i, a + j, other.v[(i, j)]);
                f.set(a + i, a + j, other.f[(i, j)]);
            }
        }
        let orders = self.orders.iter().chain(&other.orders).copied().collect();
        FinModule::new(self.ctx, orders, v, f)
    }

    /// Cartier dual `Hom(M, Z/p^ν)` with `(F·φ)(m) = φ(Vm)` and
    /// `(V·φ)(m) = φ(Fm)`, presented on the dual generators
    /// `⟨g_i*, g_j⟩ = δ_ij p^{ν-e_i}`.
    pub fn dual(&self) -> FinModule {
        self.dual_with_sign(false)
    }

    /// Twisted dual: as [`dual`](Self::dual) with both operators negated.
    pub fn twisted_dual(&self) -> FinModule {
        self.dual_with_sign(true)
    }

    fn dual_with_sign(&self, negate: bool) -> FinModule {
        let ctx = self.ctx;
        let p = ctx.p();
        let scaled_transpose = |m: &ModMatrix| {
            let g = self.rank();
            let mut out = ModMatrix::zeros(ctx, g, g);
            for j in 0..g {
                for i in 0..g {
                    let (ei, ej) = (self.orders[i], self.orders[j]);
                    let x = m[(i, j)] % p.pow(ei);
                    let c = if ej >= ei {
                        x * p.pow(ej - ei)
                    } else {
                        x / p.pow(ei - ej)
                    };
                    let c = if negate {
                        ctx.neg(c % ctx.modulus())
                    } else {
                        c
                    };
                    out.set(j, i, c);
                }
            }
            out
        };
        let f = scaled_transpose(&self.v);
        let v = scaled_transpose(&self.f);
        FinModule::new(ctx, self.orders.clone(), v, f).expect("dual of a valid module is valid")
    }
}

fn howell_of(ctx: PadicContext, rows: &[Vec<u64>], g: usize) -> Vec<Vec<u64>> {
    let m = ModMatrix::from_rows_with_cols(ctx, rows, g).expect("row width g");
    howell_form(&m).0.to_rows()
}

pub(crate) fn same_context(a: PadicContext, b: PadicContext) -> Result<()> {
    if a != b {
        return Err(Error::ContextMismatch(a.to_string(), b.to_string()));
    }
    Ok(())
}

/// Validated construction; see [`FinModule::new`].
pub fn make_module(
    ctx: PadicContext,
    orders: Vec<u32>,
    v: ModMatrix,
    f: ModMatrix,
) -> Result<FinModule> {
    FinModule::new(ctx, orders, v, f)
}

impl fmt::Display for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinModule({}; orders {:?}; V {}; F {})",
            self.ctx, self.orders, self.v, self.f
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, nu: u32) -> PadicContext {
        PadicContext::new(p, nu).unwrap()
    }

    fn m1(c: PadicContext, v: i64, f: i64) -> Result<FinModule> {
        FinModule::new(
            c,
            vec![c.nu()],
            ModMatrix::from_i64_rows(c, &[vec![v]]).unwrap(),
            ModMatrix::from_i64_rows(c, &[vec![f]]).unwrap(),
        )
    }

    #[test]
    fn make_module_examples() {
        assert!(m1(ctx(3, 1), 1, 0).is_ok());
        assert!(matches!(
            m1(ctx(3, 1), 1, 1),
            Err(Error::RelationViolated(_))
        ));
        assert!(m1(ctx(3, 2), 3, 1).is_ok());
    }

    #[test]
    fn ill_defined_map_rejected() {
        let c = ctx(3, 2);
        // generator 0 of order 9, generator 1 of order 3: a map sending the
        // order-3 generator onto a unit multiple of the order-9 one is ill-defined
        let v = ModMatrix::from_i64_rows(c, &[vec![0, 1], vec![0, 0]]).unwrap();
        let z = ModMatrix::zeros(c, 2, 2);
        let err = FinModule::new(c, vec![2, 1], v, z).unwrap_err();
        assert_eq!(
            err,
            Error::IllDefined {
                op: "V",
                row: 0,
                col: 1
            }
        );
    }

    #[test]
    fn dual_of_unit_is_dualizing() {
        for (p, nu) in [(3, 1), (3, 2), (5, 2)] {
            let c = ctx(p, nu);
            let unit = standard_module(c, StandardKind::Unit).unwrap();
            let dualizing = standard_module(c, StandardKind::Dualizing).unwrap();
            let twisted = standard_module(c, StandardKind::TwistedDualizing).unwrap();
            assert_eq!(unit.dual(), dualizing);
            assert_eq!(dualizing.dual(), unit);
            assert_eq!(unit.twisted_dual(), twisted);
        }
    }

    #[test]
    fn double_dual_is_identity_on_equal_orders() {
        let c = ctx(3, 1);
        let m = standard_module(c, StandardKind::Morava { n: 3 }).unwrap();
        let d = m.dual();
        assert_eq!(d.f(), &m.v().transpose());
        assert_eq!(d.dual(), m);
        assert_eq!(m.twisted_dual().twisted_dual(), m);
    }

    #[test]
    fn dual_of_mixed_orders_is_valid_and_involutive() {
        let c = ctx(3, 2);
        // Z/9 ⊕ Z/3 with V = [[0,3],[1,0]]... choose V·F = p: V = [[0, 3], [1, 0]], F = [[0, 3],[1,0]]
        let v = ModMatrix::from_i64_rows(c, &[vec![0, 3], vec![1, 0]]).unwrap();
        let m = FinModule::new(c, vec![2, 1], v.clone(), v).unwrap();
        let d = m.dual();
        assert_eq!(d.sorted_orders(), m.sorted_orders());
        assert_eq!(d.dual(), m);
    }

    #[test]
    fn twisted_dual_equals_dual_when_operators_vanish() {
        let c = ctx(3, 1);
        let alpha = FinModule::new(
            c,
            vec![1, 1],
            ModMatrix::zeros(c, 2, 2),
            ModMatrix::zeros(c, 2, 2),
        )
        .unwrap();
        assert_eq!(alpha.dual(), alpha.twisted_dual());
    }

    #[test]
    fn direct_sum_blocks() {
        let c = ctx(3, 1);
        let m = standard_module(c, StandardKind::Morava { n: 2 }).unwrap();
        let u = standard_module(c, StandardKind::Unit).unwrap();
        assert_eq!(m.direct_sum(&FinModule::zero(c)).unwrap(), m);
        let s = m.direct_sum(&u).unwrap();
        assert_eq!(s.orders(), &[1, 1, 1]);
        assert_eq!(s.v()[(2, 2)], 1);
        assert!(m
            .direct_sum(&standard_module(ctx(3, 2), StandardKind::Unit).unwrap())
            .is_err());
    }

    #[test]
    fn quotient_by_everything_is_zero() {
        let c = ctx(3, 2);
        let m = standard_module(c, StandardKind::Morava { n: 3 }).unwrap();
        let (q, _) = m.quotient(&[vec![0, 0, 1]]).unwrap();
        // a_2 generates M as an R-module
        assert!(q.is_zero());
        let (q, proj) = m.quotient(&[]).unwrap();
        assert_eq!(q.log_order(), m.log_order());
        assert_eq!(proj.rows(), 3);
    }
}
