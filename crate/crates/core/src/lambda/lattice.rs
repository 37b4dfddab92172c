use super::exterior::ExteriorElement;
use crate::dmod::FinModule;
use crate::zplin::{Matrix, ModMatrix, PadicContext};
use crate::{Error, Integer, Result};

/// `V` on a monomial of any degree, by recursion on the degree:
/// `V a_I = V(a_{i_1} ∧ … ∧ a_{i_{q-1}}) ∧ a_{i_q - 1}`, with `V = 1` on
/// `Λ^0` and `V a_0 = p a_{n-1}`, `V a_i = a_{i-1}` on `Λ^1`.
pub(crate) fn act_v<T: Integer>(n: usize, p: u64, idx: &[usize]) -> ExteriorElement<T> {
    match idx {
        [] => ExteriorElement::one(n),
        [0] => ExteriorElement::monomial(n, &[n - 1])
            .expect("in range")
            .scale(&T::of_u64(p)),
        [i] => ExteriorElement::monomial(n, &[i - 1]).expect("in range"),
        [head @ .., last] => {
            let tail = ExteriorElement::monomial(n, &[last - 1]).expect("in range");
            act_v::<T>(n, p, head)
                .wedge(&tail)
                .expect("degree at most n")
        }
    }
}

/// `F` on a monomial: `F a_I = a_{i_1 + 1} ∧ F(a_{i_2} ∧ … ∧ a_{i_q})`, with
/// `F = p` on `Λ^0` and `F = V^{n-1}` on `Λ^1`.
pub(crate) fn act_f<T: Integer>(n: usize, p: u64, idx: &[usize]) -> ExteriorElement<T> {
    match idx {
        [] => ExteriorElement::one(n).scale(&T::of_u64(p)),
        [i] if *i == n - 1 => ExteriorElement::monomial(n, &[0]).expect("in range"),
        [i] => ExteriorElement::monomial(n, &[i + 1])
            .expect("in range")
            .scale(&T::of_u64(p)),
        [first, rest @ ..] => {
            let head = ExteriorElement::monomial(n, &[first + 1]).expect("in range");
            head.wedge(&act_f::<T>(n, p, rest))
                .expect("degree at most n")
        }
    }
}

/// Extends a monomial action linearly.
pub(crate) fn act_linear<T: Integer>(
    x: &ExteriorElement<T>,
    degree_out: usize,
    act: impl Fn(&[usize]) -> ExteriorElement<T>,
) -> ExteriorElement<T> {
    x.terms()
        .fold(ExteriorElement::zero(x.n(), degree_out), |acc, (idx, c)| {
            acc.add(&act(idx).scale(c))
        })
}

/// Sorted `q`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < q - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, q, &mut Vec::new(), &mut out);
    out
}

/// `Λ^q M` for `M = Z_p[F, V]/(VF - p, V^{n-1} - F)` on the basis `a_I`,
/// with exact integer matrices in the column convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorLattice<T> {
    p: u64,
    n: usize,
    q: usize,
    basis: Vec<Vec<usize>>,
    v: Matrix<T>,
    f: Matrix<T>,
}

/// The identities `V`, `F` must satisfy on `Λ^q` of the rank-`n` lattice,
/// as named exact checks. Matrices of the wrong size fail every check.
pub fn structure_identities<T: Integer>(
    p: u64,
    n: usize,
    q: usize,
    v: &Matrix<T>,
    f: &Matrix<T>,
) -> Vec<(String, bool)> {
    let r = v.rows();
    let square = v.is_square() && f.is_square() && f.rows() == r;
    let p = T::of_u64(p);
    let p_id = Matrix::scalar(r, p.clone());
    let mut out = vec![
        ("VF = p".to_string(), square && v * f == p_id),
        ("FV = p".to_string(), square && f * v == p_id),
        (
            format!("V^{n} = p^{q}"),
            square && v.pow(n as u32) == Matrix::scalar(r, num_traits::pow(p.clone(), q)),
        ),
    ];
    if (1..n).contains(&q) {
        out.push((
            format!("V^{} = F^{q}", n - q),
            square && v.pow((n - q) as u32) == f.pow(q as u32),
        ));
    }
    if q == n {
        let sign = if n % 2 == 1 { T::one() } else { -T::one() };
        out.push((
            "V a_* = (-1)^(n-1) p a_*".into(),
            *v == Matrix::scalar(1, sign.clone() * p),
        ));
        out.push((
            "F a_* = (-1)^(n-1) a_*".into(),
            *f == Matrix::scalar(1, sign),
        ));
    }
    out
}

impl<T: Integer> ExteriorLattice<T> {
    pub fn build(p: u64, n: usize, q: usize) -> Result<Self> {
        if n == 0 || q > n {
            return Err(Error::Range(format!(
                "need n ≥ 1 and 0 ≤ q ≤ n, got n={n}, q={q}"
            )));
        }
        PadicContext::new(p, 1)?;
        let basis = subsets(n, q);
        let matrix_of = |act: &dyn Fn(&[usize]) -> ExteriorElement<T>| {
            let mut m = Matrix::zeros(basis.len(), basis.len());
            for (c, idx) in basis.iter().enumerate() {
                let img = act(idx);
                for (r, jdx) in basis.iter().enumerate() {
                    m[(r, c)] = img.coeff(jdx);
                }
            }
            m
        };
        let v = matrix_of(&|idx| act_v(n, p, idx));
        let f = matrix_of(&|idx| act_f(n, p, idx));
        Ok(ExteriorLattice {
            p,
            n,
            q,
            basis,
            v,
            f,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, idx: &[usize]) -> Option<usize> {
        self.basis.binary_search_by(|b| b.as_slice().cmp(idx)).ok()
    }

    pub fn v(&self) -> &Matrix<T> {
        &self.v
    }

    pub fn f(&self) -> &Matrix<T> {
        &self.f
    }

    pub fn apply_v(&self, x: &ExteriorElement<T>) -> ExteriorElement<T> {
        act_linear(x, x.degree(), |idx| act_v(self.n, self.p, idx))
    }

    pub fn apply_f(&self, x: &ExteriorElement<T>) -> ExteriorElement<T> {
        act_linear(x, x.degree(), |idx| act_f(self.n, self.p, idx))
    }

    /// `M_ν`-version: all orders `ν`, entries reduced mod `p^ν`.
    pub fn reduce_mod(&self, ctx: PadicContext) -> Result<FinModule> {
        if ctx.p() != self.p {
            return Err(Error::ContextMismatch(
                format!("lattice over p = {}", self.p),
                ctx.to_string(),
            ));
        }
        FinModule::new(
            ctx,
            vec![ctx.nu(); self.rank()],
            ModMatrix::from_int(ctx, &self.v),
            ModMatrix::from_int(ctx, &self.f),
        )
    }

    /// The defining identities as named exact checks.
    pub fn check_identities(&self) -> Vec<(String, bool)> {
        structure_identities(self.p, self.n, self.q, &self.v, &self.f)
    }

    /// `V a_I = V a_{i_1} ∧ … ∧ V a_{i_q}` on every basis monomial.
    pub fn check_v_multiplicative(&self) -> bool {
        self.basis.iter().all(|idx| {
            let direct = act_v::<T>(self.n, self.p, idx);
            let product = idx
                .iter()
                .map(|&i| act_v::<T>(self.n, self.p, &[i]))
                .try_fold(ExteriorElement::one(self.n), |acc, x| acc.wedge(&x));
            product.is_ok_and(|p| p == direct)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lat(n: usize, q: usize) -> ExteriorLattice<i64> {
        ExteriorLattice::build(3, n, q).unwrap()
    }

    #[test]
    fn spot_example_three_two() {
        let l = lat(3, 2);
        assert_eq!(l.basis(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        // columns: images of a01, a02, a12
        assert_eq!(
            l.v().to_rows(),
            vec![vec![0, 0, 1], vec![-3, 0, 0], vec![0, -3, 0]]
        );
        assert_eq!(
            l.f().to_rows(),
            vec![vec![0, -1, 0], vec![0, 0, -1], vec![3, 0, 0]]
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(lat(2, 1).v().to_rows(), vec![vec![0, 1], vec![3, 0]]);
        assert_eq!(lat(2, 1).f(), lat(2, 1).v());
        assert_eq!(lat(4, 0).v().to_rows(), vec![vec![1]]);
        assert_eq!(lat(4, 0).f().to_rows(), vec![vec![3]]);
        for n in 1..=6 {
            let top = lat(n, n);
            let s = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(top.v().to_rows(), vec![vec![3 * s]]);
            assert_eq!(top.f().to_rows(), vec![vec![s]]);
        }
    }

    #[test]
    fn identities_hold() {
        for n in 1..=7 {
            for q in 0..=n {
                let l = ExteriorLattice::<BigInt>::build(5, n, q).unwrap();
                for (name, ok) in l.check_identities() {
                    assert!(ok, "{name} fails for n={n}, q={q}");
                }
                assert!(l.check_v_multiplicative(), "n={n}, q={q}");
            }
        }
    }

    #[test]
    fn reduction() {
        let ctx = PadicContext::new(3, 1).unwrap();
        let m = lat(2, 1).reduce_mod(ctx).unwrap();
        assert_eq!(m.v().to_rows(), vec![vec![0, 1], vec![0, 0]]);
        assert!(lat(2, 1)
            .reduce_mod(PadicContext::new(5, 1).unwrap())
            .is_err());
        assert!(ExteriorLattice::<i64>::build(3, 2, 3).is_err());
    }
}
