//! The bilinear product `⊠`, exterior powers built from it, and the
//! internal Hom right adjoint.

mod internal_hom;
mod product;
mod wedge;

pub use internal_hom::{
    adjunction_check, bilinear_maps, internal_hom_stable, internal_hom_trunc, AdjunctionVerdict,
    InternalHom,
};
pub use product::{
    boxtimes_quotient_stable, boxtimes_quotient_trunc, boxtimes_stable, boxtimes_trunc, Status,
    TruncatedProduct,
};
pub use wedge::{signed_symmetric_quotient, wedge_power_trunc, WedgePower};
