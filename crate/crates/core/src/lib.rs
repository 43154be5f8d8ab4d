//! Exact computations with diagonally alternating polynomials written in the
//! basis of lattice-diagram determinants `Δ_L`: the operators `E_a`, `F_t`
//! and `F_T`, framed tableaux with their insertion and removal procedures,
//! Dyck path statistics and the (q,t)-Catalan polynomial.

pub mod alternant;
pub mod basis;
pub mod combinatorics;
pub mod error;
pub mod framed;
pub mod operators;
pub mod tableau;

pub use alternant::{compare_diagrams, delta_n, sort_diagram, Alternant, Cell, LatticeDiagram};
pub use basis::{basis_for, basis_for_with, dim_A, l2_basis, l2_basis_with, BasisElement, BasisReport};
pub use combinatorics::{
    balance_composition, count_partitions, enumerate_dyck, enumerate_partitions, qt_catalan_tilde,
    BivariatePolynomial, Composition, DyckSequence, Partition,
};
pub use error::{Error, Result};
pub use framed::{enumerate_framed, fram, framing_condition, is_framed, partition_to_tableau, tableau_to_partition, FramedTableau};
pub use operators::{
    apply_e, apply_e_composition, apply_f_column, apply_f_tableau, apply_f_tableau_with, predicted_leading,
    ColumnSpec, EConvention, Strategy,
};
pub use tableau::{Entry, Tableau};
