//! The operators `E_a = Σ y_i ∂_{x_i}^a`, the column determinants `F_t`
//! built from them, and the tableau operators `F_T`.
//!
//! All operators act on [`Alternant`]s term by term. Applying `E_a` to `Δ_L`
//! moves one cell `(p, q)` to `(p − a, q + 1)`, summed over the cells.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::alternant::{Alternant, Cell, LatticeDiagram};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// Coefficient attached to a single cell move `(p, q) → (p − a, q + 1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EConvention {
    /// Every move has coefficient 1.
    #[default]
    Formal,
    /// A move out of row `q` has coefficient `q + 1`. This is the action of the
    /// differential operator on the `1/(p! q!)`-normalized determinants.
    Analytic,
}

impl EConvention {
    fn weight(self, q: i64) -> i64 {
        match self {
            EConvention::Formal => 1,
            EConvention::Analytic => q + 1,
        }
    }
}

impl fmt::Display for EConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EConvention::Formal => "formal",
            EConvention::Analytic => "analytic",
        })
    }
}

/// How [`apply_f_column`] evaluates `F_t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Signed sum of `E`-compositions over the symmetric group.
    Determinant,
    /// Signed sum over injective cell assignments only.
    #[default]
    Injective,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Determinant => "determinant",
            Strategy::Injective => "injective",
        })
    }
}

/// A column `t_k > … > t_1 > 0` of an `F`-operator.
///
/// Stored increasing (`t_1` first); serialized decreasing, as written.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ColumnSpec {
    increasing: Vec<u32>,
}

impl ColumnSpec {
    /// From `(t_k, …, t_1)`.
    pub fn new(decreasing: Vec<u32>) -> Result<Self> {
        let ok = !decreasing.is_empty()
            && decreasing.last().is_some_and(|&t| t > 0)
            && decreasing.windows(2).all(|w| w[0] > w[1]);
        if !ok {
            return Err(Error::InvalidColumn(decreasing));
        }
        let mut increasing = decreasing;
        increasing.reverse();
        Ok(ColumnSpec { increasing })
    }

    /// From a tableau column read bottom to top.
    pub fn from_increasing(increasing: Vec<u32>) -> Result<Self> {
        let mut dec = increasing;
        dec.reverse();
        ColumnSpec::new(dec)
    }

    /// `(t_1, …, t_k)`.
    pub fn increasing(&self) -> &[u32] {
        &self.increasing
    }

    pub fn decreasing(&self) -> Vec<u32> {
        self.increasing.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.increasing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.increasing.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.increasing.iter().sum()
    }

    /// Consecutive entries differ by at least 2. Other columns give `F_t = 0`.
    pub fn is_admissible(&self) -> bool {
        self.increasing.windows(2).all(|w| w[1] >= w[0] + 2)
    }
}

impl TryFrom<Vec<u32>> for ColumnSpec {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        ColumnSpec::new(v)
    }
}

impl From<ColumnSpec> for Vec<u32> {
    fn from(c: ColumnSpec) -> Self {
        c.decreasing()
    }
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `E_a f`.
pub fn apply_e(a: u32, f: &Alternant, conv: EConvention) -> Alternant {
    let a = a as i64;
    let mut out = Alternant::zero(f.n());
    for (diagram, coeff) in f.terms() {
        let cells = diagram.cells();
        for (i, cell) in cells.iter().enumerate() {
            if cell.p < a {
                continue;
            }
            let mut moved = cells.to_vec();
            moved[i] = Cell::new(cell.p - a, cell.q + 1);
            out.accumulate(moved, coeff * rational(conv.weight(cell.q)));
        }
    }
    out
}

/// `E_{a_k} ⋯ E_{a_1} f`, applying `a_1` first.
pub fn apply_e_composition(a: &Composition, f: &Alternant, conv: EConvention) -> Alternant {
    a.parts()
        .iter()
        .fold(f.clone(), |acc, &part| apply_e(part, &acc, conv))
}

/// Permutations of `0..k` paired with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == used.len() {
            let inversions = (0..prefix.len())
                .flat_map(|i| (i + 1..prefix.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            out.push((prefix.clone(), sign));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// For each `w ∈ S_k`, the sign of `w` and the shift amount applied through
/// the `i`-th smallest column entry: `t_i + α_{k−i+1}(w)` with
/// `α_m(w) = m − w(m)`.
fn shifted_amounts(t: &ColumnSpec) -> Vec<(Vec<i64>, i64)> {
    let k = t.len();
    signed_permutations(k)
        .into_iter()
        .map(|(w, sign)| {
            // w is 0-based: w(m) = w[m - 1] + 1
            let amounts = (1..=k)
                .map(|i| {
                    let m = k - i + 1;
                    t.increasing[i - 1] as i64 + m as i64 - (w[m - 1] as i64 + 1)
                })
                .collect();
            (amounts, sign)
        })
        .collect()
}

/// `F_t f` for a strictly decreasing column `t`.
pub fn apply_f_column(t: &ColumnSpec, f: &Alternant, conv: EConvention, strategy: Strategy) -> Alternant {
    match strategy {
        Strategy::Determinant => f_column_determinant(t, f, conv),
        Strategy::Injective => f_column_injective(t, f, conv),
    }
}

fn f_column_determinant(t: &ColumnSpec, f: &Alternant, conv: EConvention) -> Alternant {
    let mut out = Alternant::zero(f.n());
    for (amounts, sign) in shifted_amounts(t) {
        let term = amounts
            .iter()
            .fold(f.clone(), |acc, &a| apply_e(a as u32, &acc, conv));
        let term = if sign < 0 { term.neg() } else { term };
        out.absorb(term);
    }
    out
}

fn f_column_injective(t: &ColumnSpec, f: &Alternant, conv: EConvention) -> Alternant {
    let k = t.len();
    let table = shifted_amounts(t);
    let mut out = Alternant::zero(f.n());
    for (diagram, coeff) in f.terms() {
        let cells = diagram.cells();
        let n = cells.len();
        if k > n {
            continue;
        }
        // assignment[i - 1] = f(i), counted from the top of the sorted diagram
        let mut assignment = Vec::with_capacity(k);
        let mut used = vec![false; n];
        for_each_injection(k, n, &mut assignment, &mut used, &mut |assignment| {
            for (amounts, sign) in &table {
                let mut moved = cells.to_vec();
                let mut weight = *sign;
                let mut valid = true;
                for (i, &from_top) in assignment.iter().enumerate() {
                    let pos = n - 1 - from_top;
                    let cell = cells[pos];
                    let p = cell.p - amounts[i];
                    if p < 0 {
                        valid = false;
                        break;
                    }
                    weight *= conv.weight(cell.q);
                    moved[pos] = Cell::new(p, cell.q + 1);
                }
                if valid {
                    out.accumulate(moved, coeff * rational(weight));
                }
            }
        });
    }
    out
}

fn for_each_injection(
    k: usize,
    n: usize,
    assignment: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    if assignment.len() == k {
        visit(assignment);
        return;
    }
    for s in 0..n {
        if !used[s] {
            used[s] = true;
            assignment.push(s);
            for_each_injection(k, n, assignment, used, visit);
            assignment.pop();
            used[s] = false;
        }
    }
}

/// `F_T f = F_{T_{μ_1}} ⋯ F_{T_1} f`, first column first.
pub fn apply_f_tableau(tableau: &Tableau, f: &Alternant, conv: EConvention) -> Result<Alternant> {
    apply_f_tableau_with(tableau, f, conv, Strategy::default())
}

pub fn apply_f_tableau_with(
    tableau: &Tableau,
    f: &Alternant,
    conv: EConvention,
    strategy: Strategy,
) -> Result<Alternant> {
    if !tableau.is_column_strict() {
        return Err(Error::InvalidTableau("F_T needs a column-strict tableau".into()));
    }
    let columns = tableau
        .columns()
        .into_iter()
        .map(ColumnSpec::from_increasing)
        .collect::<Result<Vec<_>>>()?;
    Ok(columns
        .iter()
        .fold(f.clone(), |acc, col| apply_f_column(col, &acc, conv, strategy)))
}

/// The diagram obtained from `Δ_n` by moving, for each row `i`, the `i`-th
/// cell from the top to `(n − i − s_i, μ_i)`. This is the leading diagram of
/// `F_T Δ_n` whenever `n` exceeds the weight of `T`.
///
/// Returns `None` when a moved cell leaves the quadrant, when cells collide,
/// or when `T` has more rows than `n`.
pub fn predicted_leading(tableau: &Tableau, n: usize) -> Option<LatticeDiagram> {
    let r = tableau.height();
    if r > n {
        return None;
    }
    let mut cells: Vec<Cell> = (0..(n - r) as i64).map(|p| Cell::new(p, 0)).collect();
    let shape = tableau.shape();
    for (i, (&s, &mu)) in tableau.row_sums().iter().zip(shape.parts()).enumerate() {
        let p = n as i64 - (i as i64 + 1) - s as i64;
        if p < 0 {
            return None;
        }
        cells.push(Cell::new(p, mu as i64));
    }
    let (sorted, sign) = crate::alternant::sort_diagram(&LatticeDiagram::new(cells));
    (sign != 0).then_some(sorted)
}

/// Convenience for `F_t Δ_n` written as the decreasing list `t`.
pub fn column_on_delta(t: &[u32], n: usize, conv: EConvention, strategy: Strategy) -> Result<Alternant> {
    let col = ColumnSpec::new(t.to_vec())?;
    Ok(apply_f_column(&col, &crate::alternant::delta_n(n), conv, strategy))
}

/// Returns true if `f` is `c · Δ_L` for a single diagram with `c = 1`.
pub fn is_unit_term(f: &Alternant) -> bool {
    f.len() == 1 && f.leading().is_some_and(|(_, c)| c.is_one())
}
