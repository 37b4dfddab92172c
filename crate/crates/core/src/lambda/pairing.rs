use super::exterior::sort_with_sign;
use super::lattice::{subsets, ExteriorLattice};
use num_bigint::BigInt;

use crate::dmod::{is_hom, kernel_invariants, FinModule};
use crate::zplin::{Matrix, ModMatrix, PadicContext};
use crate::{Error, Integer, Result};

/// `⟨a_I, a_J⟩` defined by `a_I ∧ a_J = ⟨a_I, a_J⟩ a_*`, rows indexed by
/// `q`-subsets and columns by `(n-q)`-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix<T> {
    pub n: usize,
    pub q: usize,
    pub matrix: Matrix<T>,
}

pub fn pairing_matrix<T: Integer>(n: usize, q: usize) -> Result<PairingMatrix<T>> {
    if q > n {
        return Err(Error::Range(format!("q = {q} exceeds n = {n}")));
    }
    let rows = subsets(n, q);
    let cols = subsets(n, n - q);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (r, i) in rows.iter().enumerate() {
        for (c, j) in cols.iter().enumerate() {
            let joined: Vec<usize> = i.iter().chain(j).copied().collect();
            if let Some((_, negative)) = sort_with_sign(&joined) {
                m[(r, c)] = if negative { -T::one() } else { T::one() };
            }
        }
    }
    Ok(PairingMatrix { n, q, matrix: m })
}

impl<T: Integer> PairingMatrix<T> {
    /// Exactly one `±1` in every row and column, zeros elsewhere.
    pub fn is_unimodular(&self) -> bool {
        let m = &self.matrix;
        if !m.is_square() {
            return false;
        }
        let unit = |x: &T| x.is_one() || (-x.clone()).is_one();
        let rows_ok = (0..m.rows()).all(|r| {
            let row = m.row(r);
            row.iter().filter(|x| unit(x)).count() == 1
                && row.iter().all(|x| x.is_zero() || unit(x))
        });
        let cols_ok =
            (0..m.cols()).all(|c| (0..m.rows()).filter(|&r| !m[(r, c)].is_zero()).count() == 1);
        rows_ok && cols_ok
    }

    /// `Vᵀ_q · P = (-1)^{n-1} · P · F_{n-q}`.
    pub fn check_adjointness(&self, lq: &ExteriorLattice<T>, lnq: &ExteriorLattice<T>) -> bool {
        if lq.q() != self.q || lnq.q() != self.n - self.q || lq.n() != self.n || lnq.n() != self.n {
            return false;
        }
        let sign = if self.n % 2 == 1 { T::one() } else { -T::one() };
        &lq.v().transpose() * &self.matrix == (&self.matrix * lnq.f()).scale(&sign)
    }

    /// The map `a_I ↦ Σ_J ⟨a_I, a_J⟩ a_J^*` from `Λ^q M_ν` to the dual of
    /// `Λ^{n-q} M_ν` (column convention).
    pub fn duality_map(&self, ctx: PadicContext) -> ModMatrix {
        ModMatrix::from_int(ctx, &self.matrix.transpose())
    }
}

/// The target of the duality map: the dual for `n` odd, the twisted dual for
/// `n` even.
pub fn duality_target(complement: &FinModule, n: usize) -> FinModule {
    if n % 2 == 1 {
        complement.dual()
    } else {
        complement.twisted_dual()
    }
}

/// Whether the pairing-induced map `Λ^q M_ν → Λ^{n-q} M_ν` dual is an
/// isomorphism of Dieudonné modules.
pub fn verify_duality(ctx: PadicContext, n: usize, q: usize) -> Result<bool> {
    let lq = ExteriorLattice::<BigInt>::build(ctx.p(), n, q)?.reduce_mod(ctx)?;
    let lnq = ExteriorLattice::<BigInt>::build(ctx.p(), n, n - q)?.reduce_mod(ctx)?;
    let target = duality_target(&lnq, n);
    let h = pairing_matrix::<BigInt>(n, q)?.duality_map(ctx);
    Ok(is_hom(&lq, &target, &h)
        && kernel_invariants(lq.orders(), target.orders(), &h).is_empty()
        && lq.log_order() == target.log_order())
}
