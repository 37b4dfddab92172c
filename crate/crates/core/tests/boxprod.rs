use dieudonne::boxprod::{
    bilinear_maps, boxtimes_stable, boxtimes_trunc, internal_hom_stable, signed_symmetric_quotient,
};
use dieudonne::dmod::{hom_group, is_isomorphic};
use dieudonne::*;

fn ctx(p: u64, nu: u32) -> PadicContext {
    PadicContext::new(p, nu).unwrap()
}

fn alpha(c: PadicContext) -> FinModule {
    let z = ModMatrix::zeros(c, 1, 1);
    FinModule::new(c, vec![1], z.clone(), z).unwrap()
}

fn corpus(c: PadicContext) -> Vec<(&'static str, FinModule)> {
    let kinds = [
        ("unit", StandardKind::Unit),
        ("D", StandardKind::Dualizing),
        ("D'", StandardKind::TwistedDualizing),
        ("M2", StandardKind::Morava { n: 2 }),
        ("M3", StandardKind::Morava { n: 3 }),
        ("R20", StandardKind::Simple { n: 2, q: 0 }),
        ("R22", StandardKind::Simple { n: 2, q: 2 }),
        ("R31", StandardKind::Simple { n: 3, q: 1 }),
    ];
    let mut out: Vec<_> = kinds
        .into_iter()
        .map(|(s, k)| (s, standard_module(c, k).unwrap()))
        .collect();
    out.push(("alpha", alpha(c)));
    out
}

fn iso(a: &FinModule, b: &FinModule) -> bool {
    matches!(is_isomorphic(a, b, 7, 4000).unwrap(), IsoVerdict::Yes(_))
}

fn basis(g: usize, i: usize) -> Vec<u64> {
    let mut e = vec![0; g];
    e[i] = 1;
    e
}

#[test]
fn unit_is_a_two_sided_identity() {
    for c in [ctx(3, 1), ctx(3, 2), ctx(5, 1)] {
        let unit = standard_module(c, StandardKind::Unit).unwrap();
        for (name, m) in corpus(c) {
            let left = boxtimes_stable(&unit, &m, 6).unwrap();
            let right = boxtimes_stable(&m, &unit, 6).unwrap();
            assert!(iso(left.module().unwrap(), &m), "unit ⊠ {name} at {c:?}");
            assert!(iso(right.module().unwrap(), &m), "{name} ⊠ unit at {c:?}");
        }
    }
}

#[test]
fn alpha_square_grows_without_bound() {
    for p in [3, 5] {
        let a = alpha(ctx(p, 1));
        for k in 0..=10 {
            let t = boxtimes_trunc(&a, &a, k).unwrap();
            assert_eq!(t.log_order(), k as u32 + 1);
            assert_eq!(t.status(), Status::Truncated);
            assert!(t.module().is_none());
        }
    }
}

#[test]
fn symbol_identities_in_stabilized_products() {
    let c = ctx(3, 2);
    let r20 = standard_module(c, StandardKind::Simple { n: 2, q: 0 }).unwrap();
    for (name, n) in corpus(c) {
        let t = boxtimes_stable(&r20, &n, 6).unwrap();
        let prod = t.module().unwrap();
        let m = t.left();
        for i in 0..m.rank() {
            for j in 0..n.rank() {
                let x = basis(m.rank(), i);
                let y = basis(n.rank(), j);
                let xy = t.circ(&x, &y);
                assert_eq!(xy, t.symbol(0, i, j), "{name}");
                assert_eq!(
                    prod.apply_v(&xy),
                    t.circ(&m.apply_v(&x), &n.apply_v(&y)),
                    "V diagonal, {name}"
                );
                assert_eq!(
                    prod.apply_f(&t.circ(&m.apply_v(&x), &y)),
                    t.circ(&x, &n.apply_f(&y)),
                    "{name}"
                );
                assert_eq!(
                    prod.apply_f(&t.circ(&x, &n.apply_v(&y))),
                    t.circ(&m.apply_f(&x), &y),
                    "{name}"
                );
            }
        }
        let ones_m = vec![1; m.rank()];
        let ones_n = vec![2; n.rank()];
        let sum: Vec<u64> = (0..m.rank())
            .map(|i| t.circ(&basis(m.rank(), i), &ones_n))
            .fold(vec![0; prod.rank()], |acc, v| {
                acc.iter().zip(&v).map(|(a, b)| a + b).collect()
            });
        assert_eq!(
            prod.normalize(&sum),
            t.circ(&ones_m, &ones_n),
            "bilinearity, {name}"
        );
    }
}

#[test]
fn product_is_symmetric() {
    let c = ctx(3, 1);
    let modules = corpus(c);
    let r20 = &modules[5].1;
    for (name, n) in &modules {
        let a = boxtimes_stable(r20, n, 6).unwrap().into_module().unwrap();
        let b = boxtimes_stable(n, r20, 6).unwrap().into_module().unwrap();
        assert!(iso(&a, &b), "R20 ⊠ {name}");
    }
}

#[test]
fn exterior_square_matches_lattice() {
    for p in [3, 5] {
        for nu in 1..=2 {
            let c = ctx(p, nu);
            for n in 2..=3 {
                let m = standard_module(c, StandardKind::Morava { n }).unwrap();
                let sq = (0..=2 * nu as usize + 2)
                    .find_map(|k| {
                        signed_symmetric_quotient(&boxtimes_trunc(&m, &m, k).unwrap()).ok()
                    })
                    .unwrap();
                let oracle = LambdaLattice::build(p, n, 2)
                    .unwrap()
                    .reduce_mod(c)
                    .unwrap();
                assert!(iso(&sq, &oracle), "p={p} nu={nu} n={n}");
            }
        }
    }
}

#[test]
fn iterated_wedge_powers() {
    for (p, nu) in [(3, 1), (5, 1)] {
        let c = ctx(p, nu);
        let m3 = standard_module(c, StandardKind::Morava { n: 3 }).unwrap();
        let top = wedge_power_trunc(&m3, 3, 4).unwrap();
        assert!(iso(
            &top.module,
            &standard_module(c, StandardKind::Dualizing).unwrap()
        ));
        let m2 = standard_module(c, StandardKind::Morava { n: 2 }).unwrap();
        assert!(wedge_power_trunc(&m2, 3, 4).unwrap().module.is_zero());
        assert!(iso(&wedge_power_trunc(&m2, 1, 4).unwrap().module, &m2));
        assert!(iso(
            &wedge_power_trunc(&m2, 0, 4).unwrap().module,
            &standard_module(c, StandardKind::Unit).unwrap()
        ));
    }
}

#[test]
fn signed_quotient_needs_equal_factors() {
    let c = ctx(3, 1);
    let unit = standard_module(c, StandardKind::Unit).unwrap();
    let d = standard_module(c, StandardKind::Dualizing).unwrap();
    let t = boxtimes_trunc(&unit, &d, 1).unwrap();
    assert_eq!(signed_symmetric_quotient(&t), Err(Error::UnequalFactors));
}

#[test]
fn internal_hom_from_unit_is_identity() {
    let c = ctx(3, 1);
    let unit = standard_module(c, StandardKind::Unit).unwrap();
    for (name, m) in corpus(c) {
        let h = internal_hom_stable(&unit, &m, 6).unwrap();
        assert!(iso(&h, &m), "Hom(unit, {name})");
    }
}

#[test]
fn internal_hom_into_dualizing_is_the_dual() {
    let c = ctx(3, 1);
    let d = standard_module(c, StandardKind::Dualizing).unwrap();
    for (name, m) in corpus(c) {
        if let Ok(h) = internal_hom_stable(&m, &d, 6) {
            assert!(iso(&h, &m.dual()), "Hom({name}, D)");
        }
    }
    let m2 = standard_module(c, StandardKind::Morava { n: 2 }).unwrap();
    assert!(iso(&internal_hom_stable(&m2, &d, 6).unwrap(), &m2.dual()));
}

#[test]
fn bilinear_maps_from_unit_are_homs() {
    let c = ctx(3, 1);
    let unit = standard_module(c, StandardKind::Unit).unwrap();
    let modules = corpus(c);
    for (a, m) in &modules {
        for (b, l) in &modules {
            let bil = bilinear_maps(&unit, m, l).unwrap();
            let direct = hom_group(m, l).unwrap();
            assert_eq!(bil.log_order(), direct.log_order(), "({a}, {b})");
        }
    }
}
