//! p-divisible groups through their Dieudonné lattices: height, dimension,
//! smoothness, Serre duality and the isogeny type from Newton slopes.

mod isogeny;
mod lattice;

pub use isogeny::{isogeny_type, manin_check, Component, IsogenyType, ManinVerdict};
pub use lattice::{invariants, serre_dual, DieudonneLattice, PdivInvariants};
