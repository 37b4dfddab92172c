use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Integer, Result};

/// Sorts `idx` and returns the permutation sign, or `None` on a repeated index.
pub(crate) fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut negative = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, negative))
}

/// An element of `Λ^q` of a free module with basis `a_0, …, a_{n-1}`,
/// stored on sorted monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExteriorElement<T> {
    n: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, T>,
}

impl<T: Integer> ExteriorElement<T> {
    pub fn zero(n: usize, degree: usize) -> Self {
        ExteriorElement {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ∈ Λ^0`.
    pub fn one(n: usize) -> Self {
        let mut e = Self::zero(n, 0);
        e.terms.insert(Vec::new(), T::one());
        e
    }

    /// `a_{i_1} ∧ … ∧ a_{i_q}` in any index order.
    pub fn monomial(n: usize, idx: &[usize]) -> Result<Self> {
        if let Some(&bad) = idx.iter().find(|&&i| i >= n) {
            return Err(Error::Range(format!(
                "index {bad} out of range for n = {n}"
            )));
        }
        let mut e = Self::zero(n, idx.len());
        if let Some((sorted, negative)) = sort_with_sign(idx) {
            e.terms
                .insert(sorted, if negative { -T::one() } else { T::one() });
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> T {
        self.terms.get(idx).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms in lexicographic order of the index sets.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &T)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn add_term(&mut self, idx: Vec<usize>, c: T) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.get(&idx).cloned().unwrap_or_else(T::zero) + c;
        if sum.is_zero() {
            self.terms.remove(&idx);
        } else {
            self.terms.insert(idx, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension(format!(
                "wedge of n = {} and n = {}",
                self.n, other.n
            )));
        }
        let degree = self.degree + other.degree;
        if degree > self.n {
            return Err(Error::Range(format!(
                "degree {degree} exceeds n = {}",
                self.n
            )));
        }
        let mut out = Self::zero(self.n, degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let joined: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some((sorted, negative)) = sort_with_sign(&joined) {
                    let c = x.clone() * y.clone();
                    out.add_term(sorted, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }
}

impl<T: Integer> fmt::Display for ExteriorElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let name = if idx.is_empty() {
                "1".to_string()
            } else {
                idx.iter()
                    .map(|i| format!("a{i}"))
                    .collect::<Vec<_>>()
                    .join("∧")
            };
            write!(f, "({c})·{name}")?;
        }
        Ok(())
    }
}
