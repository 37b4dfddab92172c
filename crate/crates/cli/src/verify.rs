use anyhow::Result;
use dieudonne::boxprod::{boxtimes_stable, boxtimes_trunc};
use dieudonne::dmod::is_isomorphic;
use dieudonne::lambda::{structure_identities, verify_duality};
use dieudonne::*;
use serde::Serialize;

use crate::files::LatticeFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Lambda,
    Duality,
    Boxtimes,
    Isogeny,
    Quadratic,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub suite: &'static str,
    pub case: String,
    pub check: String,
}

#[derive(Default)]
pub struct Tally {
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Tally {
    fn record(
        &mut self,
        suite: &'static str,
        case: impl Into<String>,
        check: impl Into<String>,
        ok: bool,
    ) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                suite,
                case: case.into(),
                check: check.into(),
            });
        }
    }
}

pub struct Params {
    pub p: u64,
    pub nu: u32,
    pub n_max: usize,
    pub seed: u64,
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn isomorphic(a: &FinModule, b: &FinModule, seed: u64) -> Result<bool> {
    Ok(matches!(
        is_isomorphic(a, b, seed, 4000)?,
        IsoVerdict::Yes(_)
    ))
}

pub fn run(suite: Suite, params: &Params, fixture: Option<&LatticeFile>) -> Result<Tally> {
    let mut t = Tally::default();
    let selected = |s: Suite| suite == Suite::All || suite == s;
    if selected(Suite::Lambda) {
        lambda(params, &mut t)?;
    }
    if selected(Suite::Duality) {
        duality(params, &mut t)?;
    }
    if selected(Suite::Boxtimes) {
        boxtimes(params, &mut t)?;
    }
    if selected(Suite::Isogeny) {
        isogeny(params, &mut t)?;
    }
    if selected(Suite::Quadratic) {
        let report = verify_twist_untwist_iso(QuadraticContext::with_least_nonresidue(
            PadicContext::new(params.p, params.nu)?,
        ))?;
        for (name, ok) in &report.checks {
            t.record(
                "quadratic",
                format!("p={} nu={}", params.p, params.nu),
                name.clone(),
                *ok,
            );
        }
    }
    if let Some(fx) = fixture {
        let (v, f) = fx.matrices()?;
        let case = format!("fixture n={} q={}", fx.n, fx.q);
        for (name, ok) in structure_identities(fx.p, fx.n, fx.q, &v, &f) {
            t.record("fixture", case.clone(), name, ok);
        }
    }
    Ok(t)
}

fn lambda(params: &Params, t: &mut Tally) -> Result<()> {
    for n in 1..=params.n_max {
        for q in 0..=n {
            let case = format!("n={n} q={q}");
            let l = LambdaLattice::build(params.p, n, q)?;
            for (name, ok) in l.check_identities() {
                t.record("lambda", case.clone(), name, ok);
            }
            t.record(
                "lambda",
                case.clone(),
                "V multiplicative",
                l.check_v_multiplicative(),
            );
            t.record(
                "lambda",
                case.clone(),
                "rank = C(n,q)",
                l.rank() == binom(n, q),
            );
            let pm = pairing_matrix(n, q)?;
            t.record(
                "lambda",
                case.clone(),
                "pairing unimodular",
                pm.is_unimodular(),
            );
            let lnq = LambdaLattice::build(params.p, n, n - q)?;
            t.record(
                "lambda",
                case.clone(),
                "pairing adjointness",
                pm.check_adjointness(&l, &lnq),
            );
            if q > 0 {
                let inv = invariants(&Lattice::from_exterior(&l));
                t.record(
                    "lambda",
                    case,
                    "dimension = C(n-1,q-1)",
                    inv.dimension == binom(n - 1, q - 1),
                );
            }
        }
    }
    Ok(())
}

fn duality(params: &Params, t: &mut Tally) -> Result<()> {
    let ctx = PadicContext::new(params.p, params.nu)?;
    for n in 1..=params.n_max {
        for q in 0..=n {
            t.record(
                "duality",
                format!("n={n} q={q}"),
                "pairing map is an isomorphism",
                verify_duality(ctx, n, q)?,
            );
        }
        let top = LambdaLattice::build(params.p, n, n)?.reduce_mod(ctx)?;
        let kind = if n % 2 == 1 {
            StandardKind::Dualizing
        } else {
            StandardKind::TwistedDualizing
        };
        let ok = isomorphic(&top, &standard_module(ctx, kind)?, params.seed)?;
        t.record(
            "duality",
            format!("n={n} q={n}"),
            format!("top power is {kind:?}"),
            ok,
        );
    }
    Ok(())
}

fn boxtimes(params: &Params, t: &mut Tally) -> Result<()> {
    let ctx = PadicContext::new(params.p, params.nu)?;
    let unit = standard_module(ctx, StandardKind::Unit)?;
    for n in 2..=params.n_max.min(3) {
        let m = standard_module(ctx, StandardKind::Morava { n })?;
        let case = format!("n={n}");
        let stable = boxtimes_stable(&unit, &m, 6)?.into_module()?;
        t.record(
            "boxtimes",
            case.clone(),
            "unit law",
            isomorphic(&stable, &m, params.seed)?,
        );
        let bound = 2 * params.nu as usize + 2;
        let square = (0..=bound)
            .find_map(|k| signed_symmetric_quotient(&boxtimes_trunc(&m, &m, k).ok()?).ok());
        let oracle = LambdaLattice::build(params.p, n, 2)?.reduce_mod(ctx)?;
        let ok = match square {
            Some(sq) => isomorphic(&sq, &oracle, params.seed)?,
            None => false,
        };
        t.record(
            "boxtimes",
            case,
            "signed square matches the exterior square",
            ok,
        );
    }
    if params.n_max >= 3 && params.nu == 1 {
        let m = standard_module(ctx, StandardKind::Morava { n: 3 })?;
        let cube = wedge_power_trunc(&m, 3, 4)?;
        let d = standard_module(ctx, StandardKind::Dualizing)?;
        t.record(
            "boxtimes",
            "n=3",
            "third power is D",
            isomorphic(&cube.module, &d, params.seed)?,
        );
    }
    let zero = ModMatrix::zeros(ctx.residue_field(), 1, 1);
    let alpha = FinModule::new(ctx.residue_field(), vec![1], zero.clone(), zero)?;
    for k in 0..=6 {
        let a = boxtimes_trunc(&alpha, &alpha, k)?;
        let ok = a.log_order() == k as u32 + 1 && a.status() == Status::Truncated;
        t.record(
            "boxtimes",
            format!("alpha K={k}"),
            "order p^(K+1), truncated",
            ok,
        );
    }
    Ok(())
}

fn isogeny(params: &Params, t: &mut Tally) -> Result<()> {
    for n in 1..=params.n_max {
        for q in 1..=n {
            let case = format!("n={n} q={q}");
            let iso = isogeny_type(&Lattice::from_exterior(&LambdaLattice::build(
                params.p, n, q,
            )?))?;
            let counts = iso.components.len() == 1 && {
                let c = iso.components[0];
                c.n0 * c.multiplicity == binom(n, q)
                    && c.slope() == num_rational::Ratio::new((n - q) as i64, n as i64)
            };
            t.record(
                "isogeny",
                case.clone(),
                "multiplicity C(n,q)/n0 at slope (n-q)/n",
                counts,
            );
            let v = manin_check(&iso);
            let middle = 2 * q == n;
            t.record(
                "isogeny",
                case.clone(),
                "symmetric iff q = n/2",
                v.symmetric == middle,
            );
            t.record(
                "isogeny",
                case,
                "supersingular iff q = n/2",
                v.supersingular == middle,
            );
        }
    }
    Ok(())
}
