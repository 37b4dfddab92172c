//! Exact computation with finite Dieudonné modules, their bilinear product,
//! exterior Dieudonné algebras of `R/(V^{n-1} - F)` and the invariants of the
//! associated p-divisible groups.
//!
//! All arithmetic is exact. Finite-length modules live over `Z/p^ν` with
//! `u64` residues; lattices are generic over an integer scalar (see
//! [`Integer`]) and default to arbitrary precision through the aliases below.

pub mod boxprod;
pub mod dmod;
mod error;
pub mod lambda;
pub mod pdiv;
mod scalar;
pub mod zplin;

pub use error::{Error, Result};
pub use scalar::Integer;

pub use boxprod::{
    adjunction_check, boxtimes_stable, boxtimes_trunc, internal_hom_trunc,
    signed_symmetric_quotient, wedge_power_trunc, AdjunctionVerdict, InternalHom, Status,
    TruncatedProduct, WedgePower,
};
pub use dmod::{
    base_change_quadratic, least_nonresidue, standard_module, verify_twist_untwist_iso, FinModule,
    HomGroup, IsoVerdict, QuadraticContext, SemilinearModule, StandardKind, TwistReport,
};
pub use lambda::{pairing_matrix, ExteriorElement, ExteriorLattice, PairingMatrix};
pub use pdiv::{
    invariants, isogeny_type, manin_check, serre_dual, Component, DieudonneLattice, IsogenyType,
    ManinVerdict, PdivInvariants,
};
pub use zplin::{
    charpoly_exact, howell_form, kernel_mod, newton_slopes, solve_mod, Matrix, ModMatrix,
    NewtonSlope, PadicContext, Polynomial, SolveResult,
};

use num_bigint::BigInt;

/// Exact integer matrix with arbitrary-precision entries.
pub type IntMatrix = Matrix<BigInt>;
/// Integer polynomial with arbitrary-precision coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Exterior power `Λ^q(M)` with arbitrary-precision entries.
pub type LambdaLattice = ExteriorLattice<BigInt>;
/// Dieudonné lattice with arbitrary-precision entries.
pub type Lattice = DieudonneLattice<BigInt>;
/// Dieudonné lattice over `i128`, adequate for heights up to roughly 10.
pub type SmallLattice = DieudonneLattice<i128>;
