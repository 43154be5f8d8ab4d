//! Partitions, compositions, Dyck paths and the (q,t)-Catalan polynomial.
//!
//! `qt_catalan_tilde(n)` is computed by enumerating all Dyck paths of length
//! `n` and collecting `q^{coarea} t^{bounce}`. Its coefficient of `q^k t^l`
//! is the dimension of the `(k, l)` bihomogeneous piece of the diagonally
//! alternating harmonics.

mod dyck;
mod partition;

pub use dyck::{catalan_number, enumerate_dyck, qt_catalan_tilde, BivariatePolynomial, DyckPaths, DyckSequence};
pub use partition::{
    balance_composition, count_partitions, enumerate_partitions, Composition, Partition, PartitionsWithLength,
};
pub(crate) use partition::balanced_split;
