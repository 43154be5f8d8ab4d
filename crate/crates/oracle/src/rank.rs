use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qtdiag_core::Alternant;

use crate::polynomial::MultivariatePolynomial;

/// Rank over `Q` of the coefficient matrix whose columns are the diagrams
/// appearing in `rows`.
pub fn exact_rank(rows: &[Alternant]) -> usize {
    let sparse: Vec<BTreeMap<_, _>> = rows
        .iter()
        .map(|f| f.terms().map(|(d, c)| (d.clone(), c.clone())).collect())
        .collect();
    rank_of(&sparse)
}

/// Rank over `Q` of polynomials, with monomials as columns.
pub fn polynomial_rank(rows: &[MultivariatePolynomial]) -> usize {
    let sparse: Vec<BTreeMap<_, _>> = rows
        .iter()
        .map(|p| p.terms().map(|(e, c)| (e.clone(), c.clone())).collect())
        .collect();
    rank_of(&sparse)
}

fn rank_of<K: Ord + Clone>(rows: &[BTreeMap<K, BigRational>]) -> usize {
    let mut keys: Vec<K> = rows.iter().flat_map(|r| r.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let index: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();

    let mut matrix: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row
                .values()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let mut dense = vec![BigInt::zero(); keys.len()];
            for (k, c) in row {
                dense[index[k]] = c.numer() * (&lcm / c.denom());
            }
            dense
        })
        .collect();
    bareiss_rank(&mut matrix)
}

/// Fraction-free elimination; every division is exact.
fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut previous = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j]) / &previous;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        previous = m[rank][col].clone();
        rank += 1;
    }
    rank
}
