mod files;
mod report;
mod verify;

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dieudonne::boxprod::{boxtimes_stable, boxtimes_trunc};
use dieudonne::{standard_module, Error, PadicContext, StandardKind, Status};
use serde::Serialize;

use files::{LatticeFile, ModuleFile};
use report::Format;
use verify::Suite;

/// Invariants of exterior Dieudonné algebras and the p-divisible groups they
/// define.
#[derive(Parser)]
#[command(name = "dieudonne", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Height, dimension, isogeny type and duality of Λ^q for a grid of q.
    Report {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        nu: u32,
        #[arg(long)]
        n: usize,
        /// Single exterior degree; every 0 ≤ q ≤ n when omitted.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites; exit 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        nu: u32,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Lattice file checked against the structure identities.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Read, write and multiply module files.
    Module {
        #[command(subcommand)]
        action: ModuleAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Unit,
    Dualizing,
    TwistedDualizing,
    Simple,
    Morava,
}

#[derive(Subcommand)]
enum ModuleAction {
    /// Write a standard module.
    Dump {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        nu: u32,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a module file and write it back normalized.
    Load {
        #[arg(long)]
        module_a: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The ⊠-product of two module files, truncated at F-degree `fbound`.
    Boxtimes {
        #[arg(long)]
        module_a: PathBuf,
        #[arg(long)]
        module_b: PathBuf,
        #[arg(long)]
        fbound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ProductFile {
    status: &'static str,
    fbound: usize,
    p: u64,
    nu: u32,
    orders: Vec<u32>,
    #[serde(rename = "V")]
    v: Vec<Vec<u64>>,
    #[serde(rename = "F")]
    f: Option<Vec<Vec<u64>>>,
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let mut out = output(path)?;
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn report(
    p: u64,
    nu: u32,
    n: usize,
    q: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> Result<()> {
    PadicContext::new(p, nu)?;
    if n == 0 {
        bail!("n must be at least 1");
    }
    let qs: Vec<usize> = match q {
        Some(q) if q > n => bail!("q = {q} exceeds n = {n}"),
        Some(q) => vec![q],
        None => (0..=n).collect(),
    };
    let rows = qs
        .into_iter()
        .map(|q| report::row(p, nu, n, q))
        .collect::<Result<Vec<_>>>()?;
    let mut sink = output(out)?;
    report::render(&rows, format, &mut *sink)?;
    sink.flush()?;
    Ok(())
}

fn module(action: ModuleAction) -> Result<()> {
    match action {
        ModuleAction::Dump {
            kind,
            p,
            nu,
            n,
            q,
            out,
        } => {
            let ctx = PadicContext::new(p, nu)?;
            let need_n = || n.ok_or_else(|| anyhow::anyhow!("--n is required for {kind:?}"));
            let kind = match kind {
                Kind::Unit => StandardKind::Unit,
                Kind::Dualizing => StandardKind::Dualizing,
                Kind::TwistedDualizing => StandardKind::TwistedDualizing,
                Kind::Morava => StandardKind::Morava { n: need_n()? },
                Kind::Simple => StandardKind::Simple {
                    n: need_n()?,
                    q: q.ok_or_else(|| anyhow::anyhow!("--q is required for simple"))?,
                },
            };
            write_json(
                &ModuleFile::from_module(&standard_module(ctx, kind)?),
                out.as_deref(),
            )
        }
        ModuleAction::Load { module_a, out } => {
            let m = ModuleFile::read(&module_a)?.to_module()?;
            write_json(&ModuleFile::from_module(&m), out.as_deref())
        }
        ModuleAction::Boxtimes {
            module_a,
            module_b,
            fbound,
            out,
        } => {
            let a = ModuleFile::read(&module_a)?.to_module()?;
            let b = ModuleFile::read(&module_b)?.to_module()?;
            let t = match boxtimes_stable(&a, &b, fbound) {
                Ok(t) => t,
                Err(Error::NotStabilized(_)) => boxtimes_trunc(&a, &b, fbound)?,
                Err(e) => return Err(e.into()),
            };
            let ctx = a.context();
            let file = ProductFile {
                status: if t.status() == Status::Stabilized {
                    "stabilized"
                } else {
                    "truncated"
                },
                fbound: t.fbound(),
                p: ctx.p(),
                nu: ctx.nu(),
                orders: t.orders().to_vec(),
                v: t.v().to_rows(),
                f: t.f().map(|f| f.to_rows()),
            };
            write_json(&file, out.as_deref())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Report {
            p,
            nu,
            n,
            q,
            format,
            out,
        } => report(p, nu, n, q, format, out.as_deref())?,
        Command::Verify {
            suite,
            p,
            nu,
            n_max,
            seed,
            fixture,
        } => {
            PadicContext::new(p, nu)?;
            let fixture = fixture.as_deref().map(LatticeFile::read).transpose()?;
            let tally = verify::run(
                suite,
                &verify::Params { p, nu, n_max, seed },
                fixture.as_ref(),
            )?;
            let mut err = io::stderr().lock();
            for f in &tally.failures {
                writeln!(err, "{}", serde_json::to_string(f)?)?;
            }
            let passed = tally.checks - tally.failures.len();
            println!("{passed}/{} checks passed", tally.checks);
            if !tally.failures.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Module { action } => module(action)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
