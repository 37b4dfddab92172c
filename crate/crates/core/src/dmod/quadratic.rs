//! Base change to the unramified quadratic extension `W = Z/p^ν[s]/(s² - q̄)`
//! and the isomorphism between the twisted and plain dualizing modules there.

use std::fmt;

use super::{normalize_rows, standard_module, FinModule, StandardKind};
use crate::dmod::hom::kernel_invariants;
use crate::zplin::{ModMatrix, PadicContext};
use crate::{Error, Result};

/// `a + b·s`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct W(pub u64, pub u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticContext {
    base: PadicContext,
    nonresidue: u64,
}

/// Smallest quadratic nonresidue mod `p`.
pub fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&q| !is_square_mod(q, p))
        .expect("odd primes have nonresidues")
}

fn is_square_mod(q: u64, p: u64) -> bool {
    (0..p).any(|x| x * x % p == q % p)
}

impl QuadraticContext {
    pub fn new(base: PadicContext, nonresidue: u64) -> Result<Self> {
        if nonresidue.is_multiple_of(base.p()) || is_square_mod(nonresidue, base.p()) {
            return Err(Error::NotNonresidue(nonresidue, base.p()));
        }
        Ok(QuadraticContext {
            base,
            nonresidue: nonresidue % base.modulus(),
        })
    }

    /// Uses the least nonresidue.
    pub fn with_least_nonresidue(base: PadicContext) -> Self {
        QuadraticContext {
            base,
            nonresidue: least_nonresidue(base.p()),
        }
    }

    pub fn base(&self) -> PadicContext {
        self.base
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    pub fn add(&self, x: W, y: W) -> W {
        W(self.base.add(x.0, y.0), self.base.add(x.1, y.1))
    }

    pub fn mul(&self, x: W, y: W) -> W {
        let c = self.base;
        let a = c.add(c.mul(x.0, y.0), c.mul(c.mul(x.1, y.1), self.nonresidue));
        let b = c.add(c.mul(x.0, y.1), c.mul(x.1, y.0));
        W(a, b)
    }

    pub fn neg(&self, x: W) -> W {
        W(self.base.neg(x.0), self.base.neg(x.1))
    }

    /// The Frobenius `a + bs ↦ a - bs`.
    pub fn sigma(&self, x: W) -> W {
        W(x.0, self.base.neg(x.1))
    }

    pub fn embed(&self, a: u64) -> W {
        W(a % self.base.modulus(), 0)
    }

    pub fn s(&self) -> W {
        W(0, 1 % self.base.modulus())
    }

    /// Norm `a² - q̄ b²`; a unit exactly when `x` is.
    pub fn norm(&self, x: W) -> u64 {
        let c = self.base;
        c.sub(c.mul(x.0, x.0), c.mul(self.nonresidue, c.mul(x.1, x.1)))
    }

    fn reduce(&self, x: W, order: u32) -> W {
        let q = self.base.p().pow(order);
        W(x.0 % q, x.1 % q)
    }
}

/// A module over `W` with `F` σ-semilinear and `V` σ⁻¹-semilinear, stored
/// by the images of a `W`-basis (column convention).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearModule {
    qctx: QuadraticContext,
    orders: Vec<u32>,
    v: Vec<Vec<W>>,
    f: Vec<Vec<W>>,
}

pub fn base_change_quadratic(m: &FinModule, qctx: QuadraticContext) -> Result<SemilinearModule> {
    super::same_context(m.context(), qctx.base())?;
    let lift = |a: &ModMatrix| -> Vec<Vec<W>> {
        a.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| qctx.embed(x)).collect())
            .collect()
    };
    Ok(SemilinearModule {
        qctx,
        orders: m.orders().to_vec(),
        v: lift(m.v()),
        f: lift(m.f()),
    })
}

impl SemilinearModule {
    pub fn context(&self) -> QuadraticContext {
        self.qctx
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    fn apply(&self, m: &[Vec<W>], x: &[W], twist: bool) -> Vec<W> {
        let q = &self.qctx;
        (0..self.rank())
            .map(|i| {
                let acc = (0..self.rank()).fold(W::default(), |acc, j| {
                    let c = if twist { q.sigma(x[j]) } else { x[j] };
                    q.add(acc, q.mul(m[i][j], c))
                });
                q.reduce(acc, self.orders[i])
            })
            .collect()
    }

    /// `F(Σ α_j e_j) = Σ σ(α_j) F e_j`.
    pub fn apply_f(&self, x: &[W]) -> Vec<W> {
        self.apply(&self.f, x, true)
    }

    /// `V(Σ α_j e_j) = Σ σ⁻¹(α_j) V e_j`; σ is an involution.
    pub fn apply_v(&self, x: &[W]) -> Vec<W> {
        self.apply(&self.v, x, true)
    }

    /// Orders over the base on the basis `e_0, s·e_0, e_1, s·e_1, …`.
    pub fn base_orders(&self) -> Vec<u32> {
        self.orders.iter().flat_map(|&e| [e, e]).collect()
    }

    fn base_matrix(&self, op: impl Fn(&[W]) -> Vec<W>) -> ModMatrix {
        let ctx = self.qctx.base();
        let r = self.rank();
        let mut out = ModMatrix::zeros(ctx, 2 * r, 2 * r);
        for j in 0..r {
            for (half, coeff) in [(0, W(1, 0)), (1, self.qctx.s())] {
                let mut x = vec![W::default(); r];
                x[j] = coeff;
                for (i, w) in op(&x).into_iter().enumerate() {
                    out.set(2 * i, 2 * j + half, w.0);
                    out.set(2 * i + 1, 2 * j + half, w.1);
                }
            }
        }
        out
    }

    /// Matrices of `V`, `F` and multiplication by `s` over `Z/p^ν`.
    pub fn base_matrices(&self) -> (ModMatrix, ModMatrix, ModMatrix) {
        let s = self.qctx.s();
        let mult_s = self.base_matrix(|x| x.iter().map(|&a| self.qctx.mul(s, a)).collect());
        (
            self.base_matrix(|x| self.apply_v(x)),
            self.base_matrix(|x| self.apply_f(x)),
            mult_s,
        )
    }
}

/// Outcome of a list of named checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistReport {
    pub checks: Vec<(String, bool)>,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

impl fmt::Display for TwistReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in &self.checks {
            writeln!(f, "{} {name}", if *ok { "ok  " } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Checks that `phi` (over the base, on the basis `e_j, s·e_j`) is a
/// `W`-linear bijection `src → dst` commuting with `F` and `V`.
pub fn check_semilinear_iso(
    src: &SemilinearModule,
    dst: &SemilinearModule,
    phi: &ModMatrix,
) -> TwistReport {
    let (v1, f1, s1) = src.base_matrices();
    let (v2, f2, s2) = dst.base_matrices();
    let orders = dst.base_orders();
    let eq =
        |a: ModMatrix, b: ModMatrix| normalize_rows(&a, &orders) == normalize_rows(&b, &orders);
    let shapes = phi.rows() == 2 * dst.rank() && phi.cols() == 2 * src.rank();
    let mut checks = vec![("shape".to_string(), shapes)];
    if shapes {
        checks.push(("W-linear".into(), eq(phi.mul(&s1), s2.mul(phi))));
        checks.push(("F-intertwining".into(), eq(phi.mul(&f1), f2.mul(phi))));
        checks.push(("V-intertwining".into(), eq(phi.mul(&v1), v2.mul(phi))));
        let bijective = src.base_orders().iter().sum::<u32>() == orders.iter().sum::<u32>()
            && kernel_invariants(&src.base_orders(), &orders, phi).is_empty();
        checks.push(("bijective".into(), bijective));
    }
    TwistReport { checks }
}

/// `x ↦ s·x` from `W ⊗ D'(ν)` to `W ⊗ D(ν)`.
pub fn verify_twist_untwist_iso(qctx: QuadraticContext) -> Result<TwistReport> {
    let ctx = qctx.base();
    let d = base_change_quadratic(&standard_module(ctx, StandardKind::Dualizing)?, qctx)?;
    let dt = base_change_quadratic(&standard_module(ctx, StandardKind::TwistedDualizing)?, qctx)?;
    let (_, _, mult_s) = dt.base_matrices();
    Ok(check_semilinear_iso(&dt, &d, &mult_s))
}
