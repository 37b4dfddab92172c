use crate::dmod::{morava_matrices, simple_matrices};
use crate::lambda::ExteriorLattice;
use crate::zplin::{howell_form, Matrix, ModMatrix, PadicContext};
use crate::{Error, Integer, Result};

/// A Dieudonné lattice: `Z_p^r` with integer matrices of `F` and `V`
/// (column convention) satisfying `VF = FV = p` exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DieudonneLattice<T> {
    p: u64,
    v: Matrix<T>,
    f: Matrix<T>,
}

impl<T: Integer> DieudonneLattice<T> {
    pub fn new(p: u64, v: Matrix<T>, f: Matrix<T>) -> Result<Self> {
        PadicContext::new(p, 1)?;
        if !v.is_square() || !f.is_square() {
            return Err(Error::NotSquare);
        }
        if v.rows() != f.rows() {
            return Err(Error::Dimension(format!(
                "V is {0}x{0}, F is {1}x{1}",
                v.rows(),
                f.rows()
            )));
        }
        let p_id = Matrix::scalar(v.rows(), T::of_u64(p));
        if &v * &f != p_id || &f * &v != p_id {
            return Err(Error::InvalidLattice("VF = FV = p fails".into()));
        }
        Ok(DieudonneLattice { p, v, f })
    }

    pub fn from_exterior(l: &ExteriorLattice<T>) -> Self {
        DieudonneLattice {
            p: l.p(),
            v: l.v().clone(),
            f: l.f().clone(),
        }
    }

    /// `R_{n,q} = R/(V^{n-q} - F^q)`.
    pub fn simple(p: u64, n: usize, q: usize) -> Result<Self> {
        if n == 0 || q > n {
            return Err(Error::Range(format!(
                "R_{{n,q}} needs n ≥ 1 and 0 ≤ q ≤ n, got n={n}, q={q}"
            )));
        }
        let (v, f) = simple_matrices(n, q, p as i64);
        Self::new(p, to_matrix(&v), to_matrix(&f))
    }

    /// `R/(F - V^{n-1})` on the basis `a_0, …, a_{n-1}`.
    pub fn morava(p: u64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("height must be positive".into()));
        }
        let (v, f) = morava_matrices(n, p as i64);
        Self::new(p, to_matrix(&v), to_matrix(&f))
    }

    /// Multiplicative (`V = p`, `F = 1`) rank-one lattice.
    pub fn multiplicative(p: u64) -> Result<Self> {
        Self::new(p, Matrix::scalar(1, T::of_u64(p)), Matrix::identity(1))
    }

    /// Étale (`V = 1`, `F = p`) rank-one lattice.
    pub fn etale(p: u64) -> Result<Self> {
        Self::new(p, Matrix::identity(1), Matrix::scalar(1, T::of_u64(p)))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.v.rows()
    }

    pub fn v(&self) -> &Matrix<T> {
        &self.v
    }

    pub fn f(&self) -> &Matrix<T> {
        &self.f
    }

    /// `g V g⁻¹`, `g F g⁻¹` for a unimodular `g` given with its inverse.
    pub fn conjugate(&self, g: &Matrix<T>, g_inv: &Matrix<T>) -> Result<Self> {
        if (g * g_inv) != Matrix::identity(self.rank()) {
            return Err(Error::InvalidLattice(
                "conjugating matrix is not invertible over Z".into(),
            ));
        }
        Self::new(self.p, &(g * &self.v) * g_inv, &(g * &self.f) * g_inv)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::ContextMismatch(
                format!("p = {}", self.p),
                format!("p = {}", other.p),
            ));
        }
        let block = |a: &Matrix<T>, b: &Matrix<T>| {
            let (r, s) = (a.rows(), b.rows());
            let mut m = Matrix::zeros(r + s, r + s);
            for i in 0..r {
                for j in 0..r {
                    m[(i, j)] = a[(i, j)].clone();
                }
            }
            for i in 0..s {
                for j in 0..s {
                    m[(r + i, r + j)] = b[(i, j)].clone();
                }
            }
            m
        };
        Self::new(self.p, block(&self.v, &other.v), block(&self.f, &other.f))
    }
}

fn to_matrix<T: Integer>(rows: &[Vec<i64>]) -> Matrix<T> {
    let rows: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| T::of(x)).collect())
        .collect();
    Matrix::from_rows(&rows).expect("square literal")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PdivInvariants {
    pub height: usize,
    /// `dim_{F_p} L / VL`.
    pub dimension: usize,
    /// `V` nilpotent mod `p`.
    pub smooth: bool,
}

fn rank_mod_p<T: Integer>(a: &Matrix<T>, p: u64) -> usize {
    let ctx = PadicContext::new(p, 1).expect("validated prime");
    howell_form(&ModMatrix::from_int(ctx, a)).0.rows()
}

pub fn invariants<T: Integer>(l: &DieudonneLattice<T>) -> PdivInvariants {
    let r = l.rank();
    let ctx = PadicContext::new(l.p, 1).expect("validated prime");
    let v_mod_p = ModMatrix::from_int(ctx, &l.v);
    PdivInvariants {
        height: r,
        dimension: r - rank_mod_p(&l.v, l.p),
        smooth: v_mod_p.pow(r as u32).is_zero(),
    }
}

/// Serre dual: `F' = Vᵀ`, `V' = Fᵀ`, both negated when `twisted`.
pub fn serre_dual<T: Integer>(l: &DieudonneLattice<T>, twisted: bool) -> DieudonneLattice<T> {
    let (v, f) = (l.f.transpose(), l.v.transpose());
    let (v, f) = if twisted { (-&v, -&f) } else { (v, f) };
    DieudonneLattice { p: l.p, v, f }
}
