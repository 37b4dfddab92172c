use std::fmt;

use super::Matrix;
use crate::{Error, Integer, Result};

/// Integer polynomial, coefficients stored from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Integer> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::of(c)).collect())
    }

    /// Coefficients from the constant term up.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix<T>) -> Matrix<T> {
        let n = a.rows();
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(n, n), |acc, c| {
                &(&acc * a) + &Matrix::scalar(n, c.clone())
            })
    }
}

impl<T: Integer> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "λ")?,
                (1, false) => write!(f, "{mag}λ")?,
                (_, true) => write!(f, "λ^{i}")?,
                (_, false) => write!(f, "{mag}λ^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `det(λI − a)` by Berkowitz's division-free recursion on leading principal
/// submatrices. Monomial matrices (one nonzero entry in every row and column)
/// are factored along their cycles instead.
pub fn charpoly_exact<T: Integer>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    if let Some(poly) = monomial_charpoly(a) {
        return Ok(poly);
    }
    let n = a.rows();
    // coefficients, highest degree first
    let mut poly = vec![T::one()];
    for r in 0..n {
        let mut c = Vec::with_capacity(r + 2);
        c.push(T::one());
        c.push(-a[(r, r)].clone());
        let mut v: Vec<T> = (0..r).map(|i| a[(i, r)].clone()).collect();
        for _ in 0..r {
            let rv = (0..r).fold(T::zero(), |acc, j| acc + a[(r, j)].clone() * v[j].clone());
            c.push(-rv);
            v = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, j| acc + a[(i, j)].clone() * v[j].clone()))
                .collect();
        }
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(T::zero(), |acc, j| acc + c[i - j].clone() * poly[j].clone())
            })
            .collect();
        poly = next;
    }
    poly.reverse();
    Ok(Polynomial::new(poly))
}

/// A cycle `j → σ(j) → …` of length `L` with entry product `c` contributes
/// `λ^L − c`.
fn monomial_charpoly<T: Integer>(a: &Matrix<T>) -> Option<Polynomial<T>> {
    let n = a.rows();
    let mut target = vec![usize::MAX; n];
    for j in 0..n {
        let mut nonzero = (0..n).filter(|&i| !a[(i, j)].is_zero());
        let i = nonzero.next()?;
        if nonzero.next().is_some() || target.contains(&i) {
            return None;
        }
        target[j] = i;
    }
    let mut seen = vec![false; n];
    let mut poly = vec![T::one()];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut j, mut len, mut c) = (start, 0, T::one());
        while !seen[j] {
            seen[j] = true;
            c = c * a[(target[j], j)].clone();
            j = target[j];
            len += 1;
        }
        let mut next = vec![T::zero(); poly.len() + len];
        for (k, x) in poly.iter().enumerate() {
            next[k + len] = next[k + len].clone() + x.clone();
            next[k] = next[k].clone() - c.clone() * x.clone();
        }
        poly = next;
    }
    Some(Polynomial::new(poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    /// Leibniz-formula determinant: independent of the recursion under test.
    fn leibniz(a: &Matrix<i128>) -> i128 {
        fn perms(n: usize) -> Vec<(Vec<usize>, i128)> {
            if n == 0 {
                return vec![(vec![], 1)];
            }
            let mut out = Vec::new();
            for (p, s) in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
                    out.push((q, sign));
                }
            }
            out
        }
        perms(a.rows())
            .into_iter()
            .map(|(p, s)| {
                s * p
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| a[(i, j)])
                    .product::<i128>()
            })
            .sum()
    }

    #[test]
    fn two_by_two_cofactor() {
        for p in [3i64, 5, 7] {
            let a: Matrix<BigInt> = Matrix::from_i64_rows(&[&[0, 1], &[p, 0]]);
            assert_eq!(
                charpoly_exact(&a).unwrap(),
                Polynomial::from_i64(&[-p, 0, 1])
            );
        }
    }

    #[test]
    fn zero_and_identity() {
        for n in 0..6 {
            let z: Matrix<i64> = Matrix::zeros(n, n);
            let mut expect = vec![0i64; n + 1];
            expect[n] = 1;
            assert_eq!(charpoly_exact(&z).unwrap(), Polynomial::from_i64(&expect));
            // (λ-1)^n via binomial coefficients
            let id: Matrix<i64> = Matrix::identity(n);
            let mut binom = vec![1i64];
            for _ in 0..n {
                let mut next = vec![0i64; binom.len() + 1];
                for (k, b) in binom.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b;
                }
                binom = next;
            }
            assert_eq!(charpoly_exact(&id).unwrap(), Polynomial::from_i64(&binom));
        }
    }

    #[test]
    fn monomial_fast_path_agrees() {
        let a = Matrix::<i128>::from_i64_rows(&[
            &[0, 0, 3, 0],
            &[-1, 0, 0, 0],
            &[0, 2, 0, 0],
            &[0, 0, 0, 5],
        ]);
        assert_eq!(
            charpoly_exact(&a).unwrap(),
            Polynomial::from_i64(&[-30, 6, 0, -5, 1])
        );
        let b = Matrix::<i128>::from_i64_rows(&[&[0, 7], &[0, 0]]);
        assert_eq!(
            charpoly_exact(&b).unwrap(),
            Polynomial::from_i64(&[0, 0, 1])
        );
    }

    #[test]
    fn rejects_rectangular() {
        let a: Matrix<i64> = Matrix::zeros(2, 3);
        assert_eq!(charpoly_exact(&a), Err(Error::NotSquare));
    }

    fn small_matrix(max_n: usize) -> impl Strategy<Value = Matrix<i128>> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(-6i128..=6, n * n)
                .prop_map(move |d| Matrix::from_vec(n, n, d).unwrap())
        })
    }

    fn monomial_matrix(max_n: usize) -> impl Strategy<Value = Matrix<i128>> {
        (1..=max_n).prop_flat_map(|n| {
            (
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(-6i128..=6, n),
            )
                .prop_map(move |(perm, vals)| {
                    let mut m = Matrix::zeros(n, n);
                    for j in 0..n {
                        m[(perm[j], j)] = if vals[j] == 0 { 1 } else { vals[j] };
                    }
                    m
                })
        })
    }

    proptest! {
        #[test]
        fn monomial_agrees_with_leibniz(a in monomial_matrix(6), x in -4i128..=4) {
            let shifted = &Matrix::scalar(a.rows(), x) - &a;
            prop_assert_eq!(charpoly_exact(&a).unwrap().eval(&x), leibniz(&shifted));
        }

        #[test]
        fn agrees_with_leibniz_at_sample_points(a in small_matrix(5), x in -4i128..=4) {
            let n = a.rows();
            let cp = charpoly_exact(&a).unwrap();
            let shifted = &Matrix::scalar(n, x) - &a;
            prop_assert_eq!(cp.eval(&x), leibniz(&shifted));
            prop_assert!(cp.is_monic());
            prop_assert_eq!(cp.degree(), Some(n));
        }

        #[test]
        fn cayley_hamilton(a in small_matrix(10).prop_map(|m| m.map(|x| BigInt::from(*x)))) {
            let cp = charpoly_exact(&a).unwrap();
            prop_assert!(cp.eval_matrix(&a).is_zero());
        }
    }
}
