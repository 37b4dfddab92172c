//! The exterior powers `Λ^q M` of `M = Z_p[F, V]/(VF - p, V^{n-1} - F)` as
//! exact integer lattices.

mod exterior;
mod lattice;
mod pairing;

pub use exterior::ExteriorElement;
pub use lattice::{structure_identities, subsets, ExteriorLattice};
pub use pairing::{duality_target, pairing_matrix, verify_duality, PairingMatrix};
