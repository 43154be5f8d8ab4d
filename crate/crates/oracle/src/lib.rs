//! Ground truth for the diagram calculus. Every `Δ_L` is expanded into an
//! explicit polynomial in `x_1..x_n, y_1..y_n`, operators are applied as
//! genuine differential operators, and results are read back into the
//! diagram basis.
//!
//! Nothing here is used by `qtdiag-core`; this crate exists to check it.

mod delta;
mod differential;
mod error;
mod polynomial;
mod rank;

pub use delta::{expand_alternant, expand_delta, to_delta_basis};
pub use differential::{diff_e, diff_e_composition, diff_f_column, diff_f_tableau, is_alternating, is_harmonic, power_sum_derivative};
pub use error::{OracleError, Result};
pub use polynomial::MultivariatePolynomial;
pub use rank::{exact_rank, polynomial_rank};
