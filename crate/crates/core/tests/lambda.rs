use dieudonne::lambda::{subsets, verify_duality};
use dieudonne::*;
use num_bigint::BigInt;
use proptest::prelude::*;

type Elt = ExteriorElement<BigInt>;

fn element(n: usize, degree: usize, coeffs: &[i64]) -> Elt {
    subsets(n, degree)
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(Elt::zero(n, degree), |acc, (idx, &c)| {
            acc.add(&Elt::monomial(n, idx).unwrap().scale(&BigInt::from(c)))
        })
}

fn arb_element(n: usize) -> impl Strategy<Value = Elt> {
    (0..=n, prop::collection::vec(-3i64..=3, 1..8)).prop_map(move |(d, c)| element(n, d, &c))
}

#[test]
fn ranks_are_binomial() {
    for n in 1..=8 {
        let total: usize = (0..=n)
            .map(|q| LambdaLattice::build(3, n, q).unwrap().rank())
            .sum();
        assert_eq!(total, 1 << n);
    }
}

#[test]
fn duality_map_is_an_isomorphism_at_higher_precision() {
    for (p, nu) in [(3, 3), (7, 2)] {
        let c = PadicContext::new(p, nu).unwrap();
        for n in 1..=4 {
            for q in 0..=n {
                assert!(
                    verify_duality(c, n, q).unwrap(),
                    "p={p} nu={nu} n={n} q={q}"
                );
            }
        }
    }
}

#[test]
fn operators_respect_wedge_of_basis_vectors() {
    let n = 4;
    let l2 = LambdaLattice::build(5, n, 2).unwrap();
    let l1 = LambdaLattice::build(5, n, 1).unwrap();
    for idx in subsets(n, 2) {
        let x = Elt::monomial(n, &idx[..1]).unwrap();
        let y = Elt::monomial(n, &idx[1..]).unwrap();
        let lhs = l2.apply_v(&x.wedge(&y).unwrap());
        let rhs = l1.apply_v(&x).wedge(&l1.apply_v(&y)).unwrap();
        assert_eq!(lhs, rhs, "{idx:?}");
    }
}

#[test]
fn degree_overflow_is_an_error() {
    let a = Elt::monomial(2, &[0, 1]).unwrap();
    let b = Elt::monomial(2, &[0]).unwrap();
    assert!(a.wedge(&b).is_err());
    assert!(Elt::monomial(3, &[3]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_associative(a in arb_element(5), b in arb_element(5), c in arb_element(5)) {
        let left = a.wedge(&b).and_then(|ab| ab.wedge(&c));
        let right = b.wedge(&c).and_then(|bc| a.wedge(&bc));
        if let (Ok(l), Ok(r)) = (left, right) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn wedge_is_graded_commutative(a in arb_element(5), b in arb_element(5)) {
        if let (Ok(ab), Ok(ba)) = (a.wedge(&b), b.wedge(&a)) {
            let sign = if (a.degree() * b.degree()) % 2 == 1 { ba.neg() } else { ba };
            prop_assert_eq!(ab, sign);
        }
    }

    #[test]
    fn v_is_multiplicative_on_elements(a in arb_element(4), b in arb_element(4)) {
        let lat = |q| LambdaLattice::build(3, 4, q).unwrap();
        if let Ok(ab) = a.wedge(&b) {
            let lhs = lat(ab.degree()).apply_v(&ab);
            let rhs = lat(a.degree()).apply_v(&a).wedge(&lat(b.degree()).apply_v(&b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
