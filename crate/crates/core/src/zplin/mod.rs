//! Exact linear algebra over `Z` and over `Z/p^ν`.

mod charpoly;
mod context;
mod howell;
mod matrix;
mod modmatrix;
mod newton;
mod smith;

pub use charpoly::{charpoly_exact, Polynomial};
pub use context::PadicContext;
pub use howell::{howell_form, kernel_mod, reduce_row, solve_mod, span_log_order, SolveResult};
pub use matrix::Matrix;
pub use modmatrix::ModMatrix;
pub use newton::{newton_slopes, p_valuation, NewtonSlope};
pub use smith::{smith_form, subgroup_invariants, SmithForm};
