//! Signed symmetric quotients of ⊠-powers.

use super::product::{boxtimes_quotient_stable, boxtimes_quotient_trunc, TruncatedProduct};
use crate::dmod::{standard_module, FinModule, StandardKind};
use crate::{Error, Result};

fn swap_relations(g: usize, modulus: u64) -> Vec<Vec<u64>> {
    let mut rels = Vec::new();
    for i in 0..g {
        for j in i..g {
            let mut r = vec![0; g * g];
            r[i * g + j] += 1;
            r[j * g + i] += 1;
            rels.push(r.into_iter().map(|x| x % modulus).collect());
        }
    }
    rels
}

/// `M ⊠ M` modulo `x + swap(x)` for every symbol `x = F^k ⊗ (g_i ⊗ g_j)`,
/// at the F-degree of `t`. The product itself need not stabilize there,
/// only the quotient.
pub fn signed_symmetric_quotient(t: &TruncatedProduct) -> Result<FinModule> {
    if t.left() != t.right() {
        return Err(Error::UnequalFactors);
    }
    let m = t.left();
    let rels = swap_relations(m.rank(), m.context().modulus());
    boxtimes_quotient_trunc(m, m, t.fbound(), &rels)?.into_module()
}

/// `Λ^q_⊠ M`, built as `(Λ^{q-1} ⊠ M) / ⟨(u∘g_i)∘g_j + (u∘g_j)∘g_i⟩` with
/// `u` running over generators of `Λ^{q-2}`.
#[derive(Clone, Debug)]
pub struct WedgePower {
    pub q: usize,
    pub module: FinModule,
    /// F-degree at which each pairwise stage stabilized.
    pub fbounds: Vec<usize>,
}

pub fn wedge_power_trunc(m: &FinModule, q: usize, max_fbound: usize) -> Result<WedgePower> {
    let ctx = m.context();
    if q == 0 {
        let unit = standard_module(ctx, StandardKind::Unit)?;
        return Ok(WedgePower {
            q,
            module: unit,
            fbounds: Vec::new(),
        });
    }
    let g = m.rank();
    let mut older_rank = 1;
    let mut prev = m.clone();
    // mult[u * g + i] = u ∘ g_i in `prev`, for generators u of the older power
    let mut mult: Vec<Vec<u64>> = (0..g)
        .map(|i| {
            let mut e = vec![0; g];
            e[i] = 1;
            e
        })
        .collect();
    let mut fbounds = Vec::new();
    for _ in 2..=q {
        if prev.is_zero() {
            break;
        }
        let h = prev.rank();
        let mut rels = Vec::new();
        for u in 0..older_rank {
            for i in 0..g {
                for j in i..g {
                    let mut r = vec![0; h * g];
                    for a in 0..h {
                        r[a * g + j] = ctx.add(r[a * g + j], mult[u * g + i][a]);
                        r[a * g + i] = ctx.add(r[a * g + i], mult[u * g + j][a]);
                    }
                    rels.push(r);
                }
            }
        }
        let t = boxtimes_quotient_stable(&prev, m, max_fbound, &rels)?;
        fbounds.push(t.fbound());
        mult = (0..h)
            .flat_map(|u| (0..g).map(move |i| (u, i)))
            .map(|(u, i)| t.symbol(0, u, i))
            .collect();
        older_rank = h;
        prev = t.into_module()?;
    }
    Ok(WedgePower {
        q,
        module: prev,
        fbounds,
    })
}
