use num_bigint::BigInt;
use num_rational::BigRational;
use qtdiag_core::Tableau;

use crate::delta::permutations;
use crate::error::{OracleError, Result};
use crate::polynomial::MultivariatePolynomial;

/// `m (m−1) ⋯ (m−a+1)`, the factor produced by `∂^a x^m`.
fn falling(m: u32, a: u32) -> BigInt {
    (m - a + 1..=m).fold(BigInt::from(1u32), |acc, v| acc * BigInt::from(v))
}

/// `E_a P = Σ_i y_i ∂_{x_i}^a P`.
pub fn diff_e(a: u32, p: &MultivariatePolynomial) -> MultivariatePolynomial {
    let n = p.n();
    let mut out = MultivariatePolynomial::zero(n);
    for (e, c) in p.terms() {
        for i in 0..n {
            if e[i] < a {
                continue;
            }
            let mut moved = e.clone();
            moved[i] -= a;
            moved[n + i] += 1;
            out.add_term(moved, c * BigRational::from_integer(falling(e[i], a)));
        }
    }
    out
}

/// `E_{a_k} ⋯ E_{a_1} P`.
pub fn diff_e_composition(parts: &[u32], p: &MultivariatePolynomial) -> MultivariatePolynomial {
    parts.iter().fold(p.clone(), |acc, &a| diff_e(a, &acc))
}

/// `det ‖ E_{t_{k−j+1} + j − i} ‖` applied to `P`, with `t` given as the
/// decreasing list `(t_k, …, t_1)`. Entry `(i, j)` of the matrix is
/// `E_{t[j] + j − i}` with 0-based indices.
pub fn diff_f_column(t: &[u32], p: &MultivariatePolynomial) -> Result<MultivariatePolynomial> {
    let k = t.len();
    let mut out = MultivariatePolynomial::zero(p.n());
    for (sigma, odd) in permutations(k) {
        let mut amounts = Vec::with_capacity(k);
        for (i, &j) in sigma.iter().enumerate() {
            let a = t[j] as i64 + j as i64 - i as i64;
            if a < 0 {
                return Err(OracleError::Core(qtdiag_core::Error::InvalidColumn(t.to_vec())));
            }
            amounts.push(a as u32);
        }
        let term = diff_e_composition(&amounts, p);
        out = if odd { out.sub(&term)? } else { out.add(&term)? };
    }
    Ok(out)
}

/// `F_T P`, first column first; columns are read bottom to top.
pub fn diff_f_tableau(tableau: &Tableau, p: &MultivariatePolynomial) -> Result<MultivariatePolynomial> {
    tableau.columns().into_iter().try_fold(p.clone(), |acc, col| {
        let decreasing: Vec<u32> = col.into_iter().rev().collect();
        diff_f_column(&decreasing, &acc)
    })
}

/// `Σ_i ∂_{x_i}^k ∂_{y_i}^h P`.
pub fn power_sum_derivative(k: u32, h: u32, p: &MultivariatePolynomial) -> MultivariatePolynomial {
    let n = p.n();
    let mut out = MultivariatePolynomial::zero(n);
    for (e, c) in p.terms() {
        for i in 0..n {
            if e[i] < k || e[n + i] < h {
                continue;
            }
            let mut d = e.clone();
            d[i] -= k;
            d[n + i] -= h;
            let factor = falling(e[i], k) * falling(e[n + i], h);
            out.add_term(d, c * BigRational::from_integer(factor));
        }
    }
    out
}

/// Every swap of adjacent variable pairs negates `P`.
pub fn is_alternating(p: &MultivariatePolynomial) -> bool {
    let negated = p.scale(&BigRational::from_integer(BigInt::from(-1)));
    (0..p.n().saturating_sub(1)).all(|i| p.swap_variables(i, i + 1) == negated)
}

/// `Σ_i ∂_{x_i}^k ∂_{y_i}^h P = 0` for all `1 ≤ k + h ≤ deg P`.
pub fn is_harmonic(p: &MultivariatePolynomial) -> bool {
    let deg = p.total_degree();
    (1..=deg).all(|total| (0..=total).all(|k| power_sum_derivative(k, total - k, p).is_zero()))
}
