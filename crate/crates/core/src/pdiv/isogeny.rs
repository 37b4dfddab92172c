use std::fmt;

use num_rational::Ratio;

use super::DieudonneLattice;
use crate::zplin::{charpoly_exact, newton_slopes, NewtonSlope};
use crate::{Error, Integer, Result};

/// `multiplicity` copies of `R_{n0,q0}`, whose `F`-slope is `(n0 - q0)/n0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub n0: usize,
    pub q0: usize,
    pub multiplicity: usize,
}

impl Component {
    pub fn slope(&self) -> Ratio<i64> {
        Ratio::new((self.n0 - self.q0) as i64, self.n0 as i64)
    }

    /// Hasse invariant `q0/n0` of the endomorphism division algebra.
    pub fn hasse(&self) -> Ratio<i64> {
        Ratio::new(self.q0 as i64, self.n0 as i64)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R_{{{},{}}}^{}", self.n0, self.q0, self.multiplicity)
    }
}

/// Isogeny class over the algebraic closure of `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsogenyType {
    /// Slopes of `F`, ascending.
    pub slopes: Vec<NewtonSlope>,
    pub components: Vec<Component>,
}

impl IsogenyType {
    pub fn height(&self) -> usize {
        self.components.iter().map(|c| c.n0 * c.multiplicity).sum()
    }
}

pub fn isogeny_type<T: Integer>(l: &DieudonneLattice<T>) -> Result<IsogenyType> {
    let poly = charpoly_exact(l.f())?;
    let slopes = newton_slopes(&poly, l.p())?;
    let components = slopes
        .iter()
        .map(|s| {
            let (a, b) = (*s.slope.numer() as usize, *s.slope.denom() as usize);
            if s.multiplicity % b != 0 {
                return Err(Error::NonIntegral {
                    slope: s.slope.to_string(),
                    multiplicity: s.multiplicity,
                });
            }
            Ok(Component {
                n0: b,
                q0: b - a,
                multiplicity: s.multiplicity / b,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IsogenyType { slopes, components })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ManinVerdict {
    /// Slope multiset invariant under `s ↦ 1 - s`.
    pub symmetric: bool,
    /// Every slope is `1/2`.
    pub supersingular: bool,
    /// Symmetry is necessary for coming from an abelian scheme.
    pub algebraicizable_possible: bool,
}

pub fn manin_check(t: &IsogenyType) -> ManinVerdict {
    let one = Ratio::from_integer(1);
    let mut reflected: Vec<NewtonSlope> = t
        .slopes
        .iter()
        .map(|s| NewtonSlope {
            slope: one - s.slope,
            multiplicity: s.multiplicity,
        })
        .collect();
    reflected.sort();
    let mut original = t.slopes.clone();
    original.sort();
    let symmetric = reflected == original;
    let half = Ratio::new(1, 2);
    let supersingular = !t.slopes.is_empty() && t.slopes.iter().all(|s| s.slope == half);
    ManinVerdict {
        symmetric,
        supersingular,
        algebraicizable_possible: symmetric,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::ExteriorLattice;
    use num_bigint::BigInt;

    fn lattice(n: usize, q: usize) -> DieudonneLattice<BigInt> {
        DieudonneLattice::from_exterior(&ExteriorLattice::build(3, n, q).unwrap())
    }

    fn comp(n0: usize, q0: usize, multiplicity: usize) -> Component {
        Component {
            n0,
            q0,
            multiplicity,
        }
    }

    #[test]
    fn spot_rows() {
        assert_eq!(
            isogeny_type(&lattice(2, 1)).unwrap().components,
            vec![comp(2, 1, 1)]
        );
        assert_eq!(
            isogeny_type(&lattice(4, 2)).unwrap().components,
            vec![comp(2, 1, 3)]
        );
        assert_eq!(
            isogeny_type(&lattice(3, 2)).unwrap().components,
            vec![comp(3, 2, 1)]
        );
        assert_eq!(
            isogeny_type(&lattice(6, 3)).unwrap().components,
            vec![comp(2, 1, 10)]
        );
    }

    #[test]
    fn simple_lattice_slopes() {
        for n in 1..=6 {
            for q in 0..=n {
                let t =
                    isogeny_type(&DieudonneLattice::<BigInt>::simple(5, n, q).unwrap()).unwrap();
                assert_eq!(t.slopes.len(), 1);
                assert_eq!(t.slopes[0].slope, Ratio::new((n - q) as i64, n as i64));
            }
        }
    }

    #[test]
    fn manin() {
        let v = manin_check(&isogeny_type(&lattice(4, 2)).unwrap());
        assert!(v.symmetric && v.supersingular && v.algebraicizable_possible);
        let v = manin_check(&isogeny_type(&lattice(3, 1)).unwrap());
        assert!(!v.symmetric && !v.supersingular && !v.algebraicizable_possible);
        let both = lattice(5, 2).direct_sum(&lattice(5, 3)).unwrap();
        assert!(manin_check(&isogeny_type(&both).unwrap()).symmetric);
    }
}
