//! Isomorphism testing by invariants plus a seeded search through `Hom`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{hom_group, image_invariants, is_hom, kernel_invariants};
use super::{same_context, FinModule};
use crate::zplin::ModMatrix;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An explicit isomorphism `M → N` (column convention).
    Yes(ModMatrix),
    /// Names the first invariant that differs.
    No(String),
    /// No isomorphism found within the search budget.
    Unknown,
}

/// Isomorphism invariants: group structure and the group structures of the
/// kernels and images of `V^k` and `F^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub orders: Vec<u32>,
    pub v_kernels: Vec<Vec<u32>>,
    pub v_images: Vec<Vec<u32>>,
    pub f_kernels: Vec<Vec<u32>>,
    pub f_images: Vec<Vec<u32>>,
}

impl Signature {
    pub fn of(m: &FinModule) -> Self {
        // V and F are nilpotent on a finite module up to these powers
        let depth = (m.context().nu() as usize * m.rank()).max(1);
        let o = m.orders();
        let mut sig = Signature {
            orders: m.sorted_orders(),
            v_kernels: Vec::new(),
            v_images: Vec::new(),
            f_kernels: Vec::new(),
            f_images: Vec::new(),
        };
        let mut vk = ModMatrix::identity(m.context(), m.rank());
        let mut fk = vk.clone();
        for _ in 0..depth {
            vk = m.v().mul(&vk);
            fk = m.f().mul(&fk);
            sig.v_kernels.push(kernel_invariants(o, o, &vk));
            sig.v_images.push(image_invariants(o, &vk));
            sig.f_kernels.push(kernel_invariants(o, o, &fk));
            sig.f_images.push(image_invariants(o, &fk));
        }
        sig
    }

    fn first_difference(&self, other: &Signature) -> Option<String> {
        if self.orders != other.orders {
            return Some(format!(
                "group structure {:?} vs {:?}",
                self.orders, other.orders
            ));
        }
        let lists = [
            ("ker V", &self.v_kernels, &other.v_kernels),
            ("im V", &self.v_images, &other.v_images),
            ("ker F", &self.f_kernels, &other.f_kernels),
            ("im F", &self.f_images, &other.f_images),
        ];
        for (name, a, b) in lists {
            if let Some(k) = (0..a.len().min(b.len())).find(|&k| a[k] != b[k]) {
                let pow = if k == 0 {
                    String::new()
                } else {
                    format!("^{}", k + 1)
                };
                return Some(format!("{name}{pow}: {:?} vs {:?}", a[k], b[k]));
            }
        }
        None
    }
}

fn is_bijective(m: &FinModule, n: &FinModule, h: &ModMatrix) -> bool {
    m.sorted_orders() == n.sorted_orders()
        && kernel_invariants(m.orders(), n.orders(), h).is_empty()
}

/// Decides whether `m ≅ n`. Distinct invariants give a definite `No`; a
/// bijective element of `Hom(M, N)` found by the search gives `Yes`.
pub fn is_isomorphic(m: &FinModule, n: &FinModule, seed: u64, budget: usize) -> Result<IsoVerdict> {
    same_context(m.context(), n.context())?;
    let ctx = m.context();
    if m == n {
        return Ok(IsoVerdict::Yes(ModMatrix::identity(ctx, m.rank())));
    }
    if let Some(diff) = Signature::of(m).first_difference(&Signature::of(n)) {
        return Ok(IsoVerdict::No(diff));
    }
    if m.is_zero() {
        return Ok(IsoVerdict::Yes(ModMatrix::zeros(ctx, 0, 0)));
    }
    let hom = hom_group(m, n)?;
    if hom.generators.is_empty() {
        return Ok(IsoVerdict::No("Hom(M, N) is zero".into()));
    }
    let accept = |h: &ModMatrix| is_bijective(m, n, h) && is_hom(m, n, h);
    for g in hom.generators.iter().take(budget) {
        if accept(g) {
            return Ok(IsoVerdict::Yes(g.clone()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget.saturating_sub(hom.generators.len()) {
        let mut h = ModMatrix::zeros(ctx, n.rank(), m.rank());
        for g in &hom.generators {
            let c = rng.gen_range(0..ctx.modulus());
            h = h.add(&g.scale(c));
        }
        let h = super::normalize_rows(&h, n.orders());
        if accept(&h) {
            return Ok(IsoVerdict::Yes(h));
        }
    }
    Ok(IsoVerdict::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dmod::{standard_module, StandardKind};
    use crate::zplin::PadicContext;

    #[test]
    fn permuted_copies_are_isomorphic() {
        let ctx = PadicContext::new(3, 2).unwrap();
        let m = standard_module(ctx, StandardKind::Morava { n: 3 }).unwrap();
        let pm = m.permuted(&[2, 0, 1]).unwrap();
        match is_isomorphic(&m, &pm, 7, 500).unwrap() {
            IsoVerdict::Yes(h) => assert!(is_hom(&m, &pm, &h)),
            other => panic!("expected an isomorphism, got {other:?}"),
        }
    }

    #[test]
    fn unit_and_dualizing_differ() {
        let ctx = PadicContext::new(3, 2).unwrap();
        let unit = standard_module(ctx, StandardKind::Unit).unwrap();
        let d = standard_module(ctx, StandardKind::Dualizing).unwrap();
        assert!(matches!(
            is_isomorphic(&unit, &d, 0, 100).unwrap(),
            IsoVerdict::No(_)
        ));
    }

    #[test]
    fn twisted_dualizing_is_not_isomorphic_over_the_base() {
        // same invariants, but h·F = F'·h forces 2h = 0
        let ctx = PadicContext::new(3, 1).unwrap();
        let d = standard_module(ctx, StandardKind::Dualizing).unwrap();
        let dt = standard_module(ctx, StandardKind::TwistedDualizing).unwrap();
        assert!(matches!(
            is_isomorphic(&d, &dt, 1, 200).unwrap(),
            IsoVerdict::No(_)
        ));
    }
}
