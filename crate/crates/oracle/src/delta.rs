use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qtdiag_core::{sort_diagram, Alternant, Cell, LatticeDiagram};

use crate::error::{OracleError, Result};
use crate::polynomial::MultivariatePolynomial;

pub(crate) fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// Permutations of `0..k` with signs, by recursion on the last position.
pub(crate) fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (smaller, odd) in permutations(k - 1) {
        // insert k-1 at position pos; that adds (k-1-pos) inversions
        for pos in 0..k {
            let mut p = smaller.clone();
            p.insert(pos, k - 1);
            out.push((p, odd ^ ((k - 1 - pos) % 2 == 1)));
        }
    }
    out
}

/// `det ‖ x_i^{p_j} y_i^{q_j} / (p_j! q_j!) ‖` expanded over all permutations.
pub fn expand_delta(diagram: &LatticeDiagram) -> MultivariatePolynomial {
    let cells = diagram.cells();
    let n = cells.len();
    if cells.iter().any(|c| c.p < 0 || c.q < 0) {
        return MultivariatePolynomial::zero(n);
    }
    let norm: BigInt = cells
        .iter()
        .map(|c| factorial(c.p as u32) * factorial(c.q as u32))
        .product();
    let unit = BigRational::new(BigInt::one(), norm);
    let mut out = MultivariatePolynomial::zero(n);
    for (sigma, odd) in permutations(n) {
        // variable i carries cell sigma[i]
        let mut e = vec![0u32; 2 * n];
        for (i, &j) in sigma.iter().enumerate() {
            e[i] = cells[j].p as u32;
            e[n + i] = cells[j].q as u32;
        }
        out.add_term(e, if odd { -unit.clone() } else { unit.clone() });
    }
    out
}

/// `Σ c_L Δ_L` as an explicit polynomial.
pub fn expand_alternant(f: &Alternant) -> MultivariatePolynomial {
    let mut out = MultivariatePolynomial::zero(f.n());
    for (d, c) in f.terms() {
        for (e, v) in expand_delta(d).terms() {
            out.add_term(e.clone(), v * c);
        }
    }
    out
}

fn cells_of(n: usize, e: &[u32]) -> Vec<Cell> {
    (0..n).map(|i| Cell::new(e[i] as i64, e[n + i] as i64)).collect()
}

/// Rewrites an alternating polynomial in the diagram basis. Diagrams are
/// peeled from the largest down: the coefficient of `Δ_D` is read from the
/// monomial placing the `i`-th cell of `D` on variable `i`, then
/// `c · expand_delta(D)` is subtracted. Anything left over means the input
/// was not alternating.
pub fn to_delta_basis(p: &MultivariatePolynomial) -> Result<Alternant> {
    let n = p.n();
    let mut diagrams = BTreeSet::new();
    for (e, _) in p.terms() {
        let (sorted, sign) = sort_diagram(&LatticeDiagram::new(cells_of(n, e)));
        if sign == 0 {
            return Err(OracleError::NotAlternating(format!("monomial {e:?} repeats a cell")));
        }
        diagrams.insert(sorted);
    }

    let mut rest = p.clone();
    let mut out = Alternant::zero(n);
    for d in diagrams.into_iter().rev() {
        let mut identity = vec![0u32; 2 * n];
        for (i, c) in d.cells().iter().enumerate() {
            identity[i] = c.p as u32;
            identity[n + i] = c.q as u32;
        }
        let read = rest.coefficient(&identity);
        if read.is_zero() {
            return Err(OracleError::NotAlternating(format!("no coefficient for diagram {d}")));
        }
        let norm: BigInt = d
            .cells()
            .iter()
            .map(|c| factorial(c.p as u32) * factorial(c.q as u32))
            .product();
        let c = read * BigRational::from_integer(norm);
        for (e, v) in expand_delta(&d).terms() {
            rest.add_term(e.clone(), -(v * &c));
        }
        out = out.add(&Alternant::term(d, c))?;
    }
    if !rest.is_zero() {
        return Err(OracleError::NotAlternating(format!("{} monomials left after peeling", rest.len())));
    }
    Ok(out)
}
