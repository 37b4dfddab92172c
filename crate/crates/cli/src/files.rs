use std::fs;
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use dieudonne::dmod::make_module;
use dieudonne::{FinModule, IntMatrix, ModMatrix, PadicContext};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// A finite Dieudonné module on disk. `V[i][j]` is the coefficient of `g_i`
/// in `V g_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub p: u64,
    pub nu: u32,
    pub orders: Vec<u32>,
    #[serde(rename = "V")]
    pub v: Vec<Vec<u64>>,
    #[serde(rename = "F")]
    pub f: Vec<Vec<u64>>,
}

impl ModuleFile {
    pub fn from_module(m: &FinModule) -> Self {
        let c = m.context();
        ModuleFile {
            p: c.p(),
            nu: c.nu(),
            orders: m.orders().to_vec(),
            v: m.v().to_rows(),
            f: m.f().to_rows(),
        }
    }

    pub fn to_module(&self) -> Result<FinModule> {
        let ctx = PadicContext::new(self.p, self.nu)?;
        let g = self.orders.len();
        let matrix = |name: &str, rows: &[Vec<u64>]| -> Result<ModMatrix> {
            ensure!(
                rows.len() == g && rows.iter().all(|r| r.len() == g),
                "{name} must be {g}x{g}"
            );
            if let Some(x) = rows.iter().flatten().find(|&&x| x >= ctx.modulus()) {
                bail!("{name} entry {x} outside [0, {})", ctx.modulus());
            }
            Ok(ModMatrix::from_rows(ctx, rows)?)
        };
        let m = make_module(
            ctx,
            self.orders.clone(),
            matrix("V", &self.v)?,
            matrix("F", &self.f)?,
        )?;
        Ok(m)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text)
            .with_context(|| format!("{}: not a module file", path.display()))
    }
}

/// An integer Dieudonné lattice claimed to be `Λ^q` of the rank-`n` lattice.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub p: u64,
    pub n: usize,
    pub q: usize,
    #[serde(rename = "V")]
    pub v: Vec<Vec<i64>>,
    #[serde(rename = "F")]
    pub f: Vec<Vec<i64>>,
}

impl LatticeFile {
    pub fn read(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text)
            .with_context(|| format!("{}: not a lattice file", path.display()))
    }

    pub fn matrices(&self) -> Result<(IntMatrix, IntMatrix)> {
        let conv = |rows: &[Vec<i64>]| -> Result<IntMatrix> {
            let rows: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            Ok(IntMatrix::from_rows(&rows)?)
        };
        Ok((conv(&self.v)?, conv(&self.f)?))
    }
}
