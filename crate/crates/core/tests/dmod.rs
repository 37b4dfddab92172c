use dieudonne::dmod::{hom_group, is_hom, is_isomorphic};
use dieudonne::*;
use proptest::prelude::*;

fn ctx(p: u64, nu: u32) -> PadicContext {
    PadicContext::new(p, nu).unwrap()
}

fn corpus(c: PadicContext) -> Vec<FinModule> {
    let z = ModMatrix::zeros(c, 1, 1);
    let alpha = FinModule::new(c, vec![1], z.clone(), z).unwrap();
    let mut out: Vec<FinModule> = [
        StandardKind::Unit,
        StandardKind::Dualizing,
        StandardKind::TwistedDualizing,
        StandardKind::Morava { n: 2 },
        StandardKind::Morava { n: 3 },
        StandardKind::Simple { n: 2, q: 0 },
        StandardKind::Simple { n: 3, q: 1 },
        StandardKind::Simple { n: 3, q: 3 },
    ]
    .into_iter()
    .map(|k| standard_module(c, k).unwrap())
    .collect();
    out.push(alpha.clone());
    out.push(alpha.direct_sum(&out[0]).unwrap());
    out
}

/// Number of additive maps commuting with `V` and `F`, by enumerating all
/// images of the generators.
fn brute_hom_count(m: &FinModule, n: &FinModule) -> u64 {
    let c = m.context();
    let choices: u64 = c.p().pow(n.log_order());
    let elems: Vec<Vec<u64>> = (0..choices)
        .map(|mut x| {
            n.orders()
                .iter()
                .map(|&e| {
                    let q = c.p().pow(e);
                    let r = x % q;
                    x /= q;
                    r
                })
                .collect()
        })
        .collect();
    let g = m.rank();
    let mut count = 0;
    let mut idx = vec![0usize; g];
    loop {
        let mut h = ModMatrix::zeros(c, n.rank(), g);
        for (j, &k) in idx.iter().enumerate() {
            for (i, &x) in elems[k].iter().enumerate() {
                h.set(i, j, x);
            }
        }
        if is_hom(m, n, &h) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == g {
                return count;
            }
            idx[pos] += 1;
            if idx[pos] < elems.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn hom_orders_match_enumeration() {
    let c = ctx(3, 1);
    let small: Vec<_> = corpus(c)
        .into_iter()
        .filter(|m| m.log_order() <= 2)
        .collect();
    for m in &small {
        for n in &small {
            let h = hom_group(m, n).unwrap();
            assert_eq!(3u64.pow(h.log_order()), brute_hom_count(m, n), "{m} -> {n}");
        }
    }
}

#[test]
fn standard_modules_have_expected_orders() {
    for (p, nu) in [(3, 1), (3, 2), (5, 3)] {
        let c = ctx(p, nu);
        let m = corpus(c);
        assert_eq!(m[0].orders(), &[nu]);
        assert_eq!(m[3].log_order(), 2 * nu);
        assert_eq!(m[4].log_order(), 3 * nu);
    }
}

#[test]
fn unit_and_dualizing_are_dual() {
    let c = ctx(5, 2);
    let unit = standard_module(c, StandardKind::Unit).unwrap();
    let d = standard_module(c, StandardKind::Dualizing).unwrap();
    assert!(matches!(
        is_isomorphic(&unit.dual(), &d, 0, 100).unwrap(),
        IsoVerdict::Yes(_)
    ));
}

fn pair() -> impl Strategy<Value = (u32, usize, usize)> {
    (1u32..=2, 0usize..10, 0usize..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dual_is_an_involution((nu, i, _j) in pair()) {
        let m = &corpus(ctx(3, nu))[i];
        prop_assert_eq!(&m.dual().dual(), m);
        prop_assert_eq!(&m.twisted_dual().twisted_dual(), m);
    }

    #[test]
    fn hom_order_is_preserved_by_duality((nu, i, j) in pair()) {
        let c = ctx(3, nu);
        let (m, n) = (&corpus(c)[i], &corpus(c)[j]);
        let a = hom_group(m, n).unwrap();
        let b = hom_group(&n.dual(), &m.dual()).unwrap();
        prop_assert_eq!(a.log_order(), b.log_order());
    }

    #[test]
    fn permuted_generators_give_an_isomorphic_module(
        (nu, i, _j) in pair(),
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let m = &corpus(ctx(3, nu))[i];
        let perm: Vec<usize> = perm.into_iter().filter(|&x| x < m.rank()).collect();
        let q = m.permuted(&perm).unwrap();
        prop_assert!(matches!(is_isomorphic(m, &q, 1, 2000).unwrap(), IsoVerdict::Yes(_)));
        let h = hom_group(m, &q).unwrap();
        let e = hom_group(m, m).unwrap();
        prop_assert_eq!(h.invariants, e.invariants);
    }

    #[test]
    fn hom_group_generators_are_homs((nu, i, j) in pair()) {
        let c = ctx(3, nu);
        let (m, n) = (&corpus(c)[i], &corpus(c)[j]);
        for g in hom_group(m, n).unwrap().generators {
            prop_assert!(is_hom(m, n, &g));
        }
    }
}
