//! Bases of the bihomogeneous pieces `A_n^{k,l}` built as `F_T Δ_n`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::alternant::{delta_n, Alternant, Cell, LatticeDiagram};
use crate::combinatorics::{enumerate_partitions, qt_catalan_tilde, Partition};
use crate::error::{Error, Result};
use crate::framed::{partition_to_tableau, tableau_to_partition, FramedTableau};
use crate::operators::{apply_f_tableau, EConvention};
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub lambda: Partition,
    pub tableau: FramedTableau,
    pub alternant: Alternant,
    pub leading: LatticeDiagram,
}

impl BasisElement {
    fn build(lambda: Partition, tableau: FramedTableau, n: usize, conv: EConvention) -> Result<Self> {
        let alternant = apply_f_tableau(&tableau, &delta_n(n), conv)?;
        let leading = alternant
            .leading()
            .map(|(d, _)| d.clone())
            .ok_or_else(|| Error::VanishingImage {
                rows: tableau.rows().to_vec(),
                n,
            })?;
        Ok(BasisElement {
            lambda,
            tableau,
            alternant,
            leading,
        })
    }
}

/// `{F_{∅←λ} Δ_n : λ ⊢ k, ℓ(λ) = l}` using the formal convention. Requires `k < n`.
pub fn basis_for(n: usize, k: u32, l: u32) -> Result<Vec<BasisElement>> {
    basis_for_with(n, k, l, EConvention::Formal)
}

pub fn basis_for_with(n: usize, k: u32, l: u32, conv: EConvention) -> Result<Vec<BasisElement>> {
    if k as usize >= n {
        return Err(Error::OutsideBasisRange { n, k });
    }
    enumerate_partitions(k, l)
        .map(|lambda| {
            let tableau = partition_to_tableau(&lambda)?;
            BasisElement::build(lambda, tableau, n, conv)
        })
        .collect()
}

/// Coefficient of `q^k t^l` in `C̃_n(q, t)`.
#[allow(non_snake_case)]
pub fn dim_A(n: usize, k: u32, l: u32) -> BigUint {
    qt_catalan_tilde(n).coefficient(k, l)
}

/// The two-row family: rows `(i, i)` with `i ≤ n − 2`, rows `(i, i + 1)` with
/// `i ≤ n − 3`, and columns `j` over `i` with `i + 2 ≤ j ≤ n − 2`.
pub fn l2_family(n: usize) -> Vec<FramedTableau> {
    let n = n as u32;
    let mut out = Vec::new();
    let row = |a: u32, b: u32| Tableau::new(vec![vec![a, b]]);
    let column = |i: u32, j: u32| Tableau::new(vec![vec![i], vec![j]]);
    for i in 1..=n.saturating_sub(2) {
        out.push(row(i, i));
    }
    for i in 1..=n.saturating_sub(3) {
        out.push(row(i, i + 1));
    }
    for i in 1..=n.saturating_sub(4) {
        for j in i + 2..=n - 2 {
            out.push(column(i, j));
        }
    }
    out.into_iter()
        .map(|t| FramedTableau::new(t.expect("family entries are positive")).expect("family members are framed"))
        .collect()
}

/// Members of [`l2_family`] with weight `k`, each applied to `Δ_n`.
/// Empty when `k` lies outside `2..=2n−2`.
pub fn l2_basis(n: usize, k: u32) -> Result<Vec<BasisElement>> {
    l2_basis_with(n, k, EConvention::Formal)
}

pub fn l2_basis_with(n: usize, k: u32, conv: EConvention) -> Result<Vec<BasisElement>> {
    if k < 2 || k as usize + 2 > 2 * n {
        return Ok(Vec::new());
    }
    l2_family(n)
        .into_iter()
        .filter(|t| t.weight() == k)
        .map(|t| {
            let lambda = tableau_to_partition(&t)?;
            BasisElement::build(lambda, t, n, conv)
        })
        .collect()
}

/// Leading diagram of `F_T Δ_n` for a member of the two-row family, case by case.
pub fn l2_expected_leading(tableau: &Tableau, n: usize) -> Option<LatticeDiagram> {
    let n = n as i64;
    let base = |top: i64| (0..top).map(|p| Cell::new(p, 0)).collect::<Vec<_>>();
    let mut cells = match tableau.rows() {
        [row] if row.len() == 2 => {
            let (i, j) = (row[0] as i64, row[1] as i64);
            let one_high = 2 * i + (j - i) < n;
            match (j - i, one_high) {
                (0 | 1, true) => {
                    let mut c = base(n - 1);
                    c.push(Cell::new(n - 1 - i - j, 2));
                    c
                }
                (0, false) => pair(base(n - 2), n - 2 - i, n - 1 - i),
                (1, false) => pair(base(n - 2), n - 3 - i, n - 1 - i),
                _ => return None,
            }
        }
        [bottom, top] if bottom.len() == 1 && top.len() == 1 => {
            let (i, j) = (bottom[0] as i64, top[0] as i64);
            pair(base(n - 2), n - 2 - j, n - 1 - i)
        }
        _ => return None,
    };
    if cells.iter().any(|c| !c.is_valid()) {
        return None;
    }
    cells.sort();
    Some(LatticeDiagram::new(cells))
}

fn pair(mut cells: Vec<Cell>, a: i64, b: i64) -> Vec<Cell> {
    cells.push(Cell::new(a, 1));
    cells.push(Cell::new(b, 1));
    cells
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub n: usize,
    pub k: u32,
    pub l: u32,
    pub dim: u64,
    pub elements: Vec<ElementReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReport {
    pub lambda: Partition,
    pub tableau: FramedTableau,
    pub leading_diagram: LatticeDiagram,
    pub term_count: usize,
}

impl BasisReport {
    pub fn new(n: usize, k: u32, l: u32, elements: &[BasisElement]) -> Self {
        BasisReport {
            n,
            k,
            l,
            dim: dim_A(n, k, l).to_u64().unwrap_or(u64::MAX),
            elements: elements
                .iter()
                .map(|e| ElementReport {
                    lambda: e.lambda.clone(),
                    tableau: e.tableau.clone(),
                    leading_diagram: e.leading.clone(),
                    term_count: e.alternant.len(),
                })
                .collect(),
        }
    }
}
