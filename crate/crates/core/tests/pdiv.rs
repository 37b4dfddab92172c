use dieudonne::*;
use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

fn exterior(p: u64, n: usize, q: usize) -> Lattice {
    Lattice::from_exterior(&LambdaLattice::build(p, n, q).unwrap())
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A product of elementary matrices together with its inverse.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> (IntMatrix, IntMatrix) {
    let mut g = IntMatrix::identity(n);
    let mut g_inv = IntMatrix::identity(n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = BigInt::from(c);
        let mut e_inv = IntMatrix::identity(n);
        e_inv[(i, j)] = BigInt::from(-c);
        g = &e * &g;
        g_inv = &g_inv * &e_inv;
    }
    (g, g_inv)
}

#[test]
fn component_counts_up_to_ten() {
    for n in 1..=10 {
        for q in 1..=n {
            let t = isogeny_type(&exterior(3, n, q)).unwrap();
            let c = t.components[0];
            assert_eq!(t.components.len(), 1);
            assert_eq!(c.slope(), Ratio::new((n - q) as i64, n as i64));
            assert_eq!(c.n0 * c.multiplicity, binom(n, q));
            assert_eq!(t.height(), binom(n, q));
        }
    }
}

#[test]
fn serre_dual_reflects_slopes() {
    for n in 1..=7 {
        for q in 0..=n {
            let l = exterior(5, n, q);
            let a = isogeny_type(&l).unwrap();
            let b = isogeny_type(&serre_dual(&l, n % 2 == 0)).unwrap();
            let mut reflected: Vec<_> = a
                .slopes
                .iter()
                .map(|s| (Ratio::from_integer(1) - s.slope, s.multiplicity))
                .collect();
            reflected.sort();
            let got: Vec<_> = b.slopes.iter().map(|s| (s.slope, s.multiplicity)).collect();
            assert_eq!(got, reflected, "n={n} q={q}");
        }
    }
}

#[test]
fn serre_dual_of_exterior_power_is_complement() {
    for n in 1..=6 {
        for q in 0..=n {
            let dual = invariants(&serre_dual(&exterior(3, n, q), n % 2 == 0));
            let complement = invariants(&exterior(3, n, n - q));
            assert_eq!(dual.height, complement.height);
            assert_eq!(dual.dimension, complement.dimension, "n={n} q={q}");
        }
    }
}

#[test]
fn multiplicative_and_etale() {
    let mu = Lattice::multiplicative(3).unwrap();
    let et = Lattice::etale(3).unwrap();
    assert_eq!(
        invariants(&mu),
        PdivInvariants {
            height: 1,
            dimension: 1,
            smooth: true
        }
    );
    assert_eq!(
        invariants(&et),
        PdivInvariants {
            height: 1,
            dimension: 0,
            smooth: false
        }
    );
    assert_eq!(
        isogeny_type(&mu).unwrap().components,
        vec![Component {
            n0: 1,
            q0: 1,
            multiplicity: 1
        }]
    );
    assert_eq!(
        isogeny_type(&et).unwrap().components,
        vec![Component {
            n0: 1,
            q0: 0,
            multiplicity: 1
        }]
    );
    assert_eq!(invariants(&serre_dual(&mu, false)).dimension, 0);
}

#[test]
fn small_scalar_agrees_with_big() {
    for n in 1..=6 {
        for q in 0..=n {
            let small =
                SmallLattice::from_exterior(&ExteriorLattice::<i128>::build(3, n, q).unwrap());
            let big = exterior(3, n, q);
            assert_eq!(invariants(&small), invariants(&big));
            assert_eq!(isogeny_type(&small).unwrap(), isogeny_type(&big).unwrap());
        }
    }
}

#[test]
fn non_lattice_is_rejected() {
    let v = IntMatrix::from_i64_rows(&[&[2]]);
    let f = IntMatrix::from_i64_rows(&[&[1]]);
    assert!(matches!(
        Lattice::new(3, v, f),
        Err(Error::InvalidLattice(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_unimodular_change_of_basis(
        n in 1usize..=5,
        q_seed in 0usize..6,
        ops in prop::collection::vec((0usize..10, 0usize..10, -3i64..=3), 0..8),
    ) {
        let q = q_seed % (n + 1);
        let l = exterior(3, n, q);
        let (g, g_inv) = unimodular(l.rank(), &ops);
        let c = l.conjugate(&g, &g_inv).unwrap();
        prop_assert_eq!(invariants(&c), invariants(&l));
        prop_assert_eq!(isogeny_type(&c).unwrap(), isogeny_type(&l).unwrap());
    }

    #[test]
    fn height_and_dimension_add_over_direct_sums(
        a in (1usize..=5, 0usize..6),
        b in (1usize..=5, 0usize..6),
    ) {
        let la = exterior(5, a.0, a.1 % (a.0 + 1));
        let lb = exterior(5, b.0, b.1 % (b.0 + 1));
        let sum = invariants(&la.direct_sum(&lb).unwrap());
        let (ia, ib) = (invariants(&la), invariants(&lb));
        prop_assert_eq!(sum.height, ia.height + ib.height);
        prop_assert_eq!(sum.dimension, ia.dimension + ib.dimension);
        prop_assert_eq!(sum.smooth, ia.smooth && ib.smooth);
        let t = isogeny_type(&la.direct_sum(&lb).unwrap()).unwrap();
        prop_assert_eq!(t.height(), sum.height);
    }
}
