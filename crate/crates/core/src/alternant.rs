//! Lattice diagrams and formal linear combinations of the determinants they index.
//!
//! A diagram is an ordered list of cells `(p, q)`. Its determinant changes sign
//! under a transposition of cells and vanishes when a cell repeats or has a
//! negative coordinate. An [`Alternant`] stores each term under the sorted form
//! of its diagram, so equal polynomials have equal representations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(p, q)`: `p` is the x-exponent, `q` the y-exponent.
///
/// Cells order by `q` first, then `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Cell {
    pub p: i64,
    pub q: i64,
}

impl Cell {
    pub const fn new(p: i64, q: i64) -> Self {
        Cell { p, q }
    }

    pub fn is_valid(&self) -> bool {
        self.p >= 0 && self.q >= 0
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q, self.p).cmp(&(other.q, other.p))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<[i64; 2]> for Cell {
    fn from([p, q]: [i64; 2]) -> Self {
        Cell { p, q }
    }
}

impl From<Cell> for [i64; 2] {
    fn from(c: Cell) -> Self {
        [c.p, c.q]
    }
}

impl From<(i64, i64)> for Cell {
    fn from((p, q): (i64, i64)) -> Self {
        Cell { p, q }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Ordered list of cells.
///
/// The `Ord` impl is the end-anchored lexicographic order used to pick leading
/// terms: the diagram with the larger cell at the highest differing index is
/// larger. It is only meaningful for sorted diagrams of equal length; shorter
/// diagrams order first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeDiagram {
    cells: Vec<Cell>,
}

impl LatticeDiagram {
    pub fn new(cells: Vec<Cell>) -> Self {
        LatticeDiagram { cells }
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        LatticeDiagram {
            cells: pairs.iter().map(|&c| Cell::from(c)).collect(),
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<Cell> {
        self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(Σ p, Σ q)`.
    pub fn bidegree(&self) -> (i64, i64) {
        self.cells.iter().fold((0, 0), |(a, b), c| (a + c.p, b + c.q))
    }

    pub fn is_sorted(&self) -> bool {
        self.cells.windows(2).all(|w| w[0] < w[1])
    }

    /// True when the determinant vanishes identically: a repeated cell or a
    /// cell with a negative coordinate.
    pub fn is_degenerate(&self) -> bool {
        sort_diagram(self).1 == 0
    }
}

impl Ord for LatticeDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cells
            .len()
            .cmp(&other.cells.len())
            .then_with(|| self.cells.iter().rev().cmp(other.cells.iter().rev()))
    }
}

impl PartialOrd for LatticeDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Sorts the cells by `(q, p)` and returns the sign of the reordering, or 0
/// for a degenerate diagram.
pub fn sort_diagram(diagram: &LatticeDiagram) -> (LatticeDiagram, i8) {
    let mut cells = diagram.cells.clone();
    let sign = sort_cells(&mut cells);
    (LatticeDiagram { cells }, sign)
}

/// In-place insertion sort that tracks the permutation parity.
pub(crate) fn sort_cells(cells: &mut [Cell]) -> i8 {
    let mut sign = 1i8;
    let mut degenerate = cells.iter().any(|c| !c.is_valid());
    for i in 1..cells.len() {
        let mut j = i;
        while j > 0 && cells[j - 1] >= cells[j] {
            if cells[j - 1] == cells[j] {
                degenerate = true;
                break;
            }
            cells.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if degenerate {
        cells.sort();
        0
    } else {
        sign
    }
}

/// Compares two sorted diagrams of the same length.
pub fn compare_diagrams(a: &LatticeDiagram, b: &LatticeDiagram) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::CellCountMismatch(a.len(), b.len()));
    }
    Ok(a.cmp(b))
}

/// Formal linear combination of determinants over sorted, non-degenerate
/// diagrams with exact rational coefficients. All terms share the cell count
/// and the bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternant {
    n: usize,
    terms: BTreeMap<LatticeDiagram, BigRational>,
}

impl Alternant {
    pub fn zero(n: usize) -> Self {
        Alternant {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `c · Δ_L`, normalized through [`sort_diagram`].
    pub fn term(diagram: LatticeDiagram, coeff: BigRational) -> Self {
        let mut out = Alternant::zero(diagram.len());
        out.accumulate(diagram.cells, coeff);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn bidegree(&self) -> Option<(i64, i64)> {
        self.terms.keys().next().map(LatticeDiagram::bidegree)
    }

    pub fn coefficient(&self, diagram: &LatticeDiagram) -> BigRational {
        let (sorted, sign) = sort_diagram(diagram);
        match (sign, self.terms.get(&sorted)) {
            (0, _) | (_, None) => BigRational::zero(),
            (s, Some(c)) => c * BigRational::from_integer(BigInt::from(s)),
        }
    }

    /// Terms in canonical order: leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&LatticeDiagram, &BigRational)> {
        self.terms.iter().rev()
    }

    /// The ≺-maximal term, if any.
    pub fn leading(&self) -> Option<(&LatticeDiagram, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Alternant) -> Result<Alternant> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_sorted(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Alternant {
        if c.is_zero() {
            return Alternant::zero(self.n);
        }
        Alternant {
            n: self.n,
            terms: self.terms.iter().map(|(d, v)| (d.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Alternant {
        self.scale(&-BigRational::one())
    }

    fn check_compatible(&self, other: &Alternant) -> Result<()> {
        if self.n != other.n {
            return Err(Error::CellCountMismatch(self.n, other.n));
        }
        match (self.bidegree(), other.bidegree()) {
            (Some(a), Some(b)) if a != b => Err(Error::BidegreeMismatch(a, b)),
            _ => Ok(()),
        }
    }

    /// Adds `coeff · Δ_cells` for an arbitrary cell list. Degenerate lists are
    /// dropped. Used by the operator code, which keeps terms homogeneous.
    pub(crate) fn accumulate(&mut self, mut cells: Vec<Cell>, coeff: BigRational) {
        let sign = sort_cells(&mut cells);
        if sign == 0 || coeff.is_zero() {
            return;
        }
        let coeff = if sign < 0 { -coeff } else { coeff };
        self.add_sorted(LatticeDiagram { cells }, coeff);
    }

    fn add_sorted(&mut self, diagram: LatticeDiagram, coeff: BigRational) {
        debug_assert_eq!(diagram.len(), self.n);
        debug_assert!(self
            .bidegree()
            .is_none_or(|b| b == diagram.bidegree()));
        match self.terms.entry(diagram) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Merges `other` into `self` without the homogeneity check.
    pub(crate) fn absorb(&mut self, other: Alternant) {
        for (d, c) in other.terms {
            self.add_sorted(d, c);
        }
    }
}

/// `Δ_n`: the single diagram `[(0,0), (1,0), …, (n−1,0)]`.
pub fn delta_n(n: usize) -> Alternant {
    let cells = (0..n as i64).map(|p| Cell::new(p, 0)).collect();
    Alternant::term(LatticeDiagram::new(cells), BigRational::one())
}

/// Renders a rational as `"a/b"`, always with an explicit denominator.
pub fn fraction_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parses `"a/b"` or a bare integer.
pub fn parse_fraction(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a fraction: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    diagram: LatticeDiagram,
    coeff: String,
}

impl Serialize for Alternant {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (d, c) in self.terms() {
            seq.serialize_element(&TermRecord {
                diagram: d.clone(),
                coeff: fraction_string(c),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Alternant {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut out: Option<Alternant> = None;
        for r in records {
            let c = parse_fraction(&r.coeff).map_err(de::Error::custom)?;
            let t = Alternant::term(r.diagram, c);
            out = Some(match out {
                None => t,
                Some(acc) => acc.add(&t).map_err(de::Error::custom)?,
            });
        }
        Ok(out.unwrap_or_else(|| Alternant::zero(0)))
    }
}

impl fmt::Display for Alternant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (d, c) in self.terms() {
            let sign = if c.is_negative() { '-' } else { '+' };
            let abs = c.abs();
            if abs.is_integer() {
                writeln!(f, "{sign}{} Δ{d}", abs.numer())?;
            } else {
                writeln!(f, "{sign}{}/{} Δ{d}", abs.numer(), abs.denom())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(pairs: &[(i64, i64)]) -> LatticeDiagram {
        LatticeDiagram::from_pairs(pairs)
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    /// Parity by counting inversions against the target order.
    fn inversion_sign(cells: &[Cell]) -> i8 {
        let mut inv = 0;
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if cells[i] > cells[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Direct transcription of the end-anchored comparison.
    fn scan_compare(a: &[Cell], b: &[Cell]) -> Ordering {
        for i in (0..a.len()).rev() {
            let (x, y) = (a[i], b[i]);
            if x != y {
                return if (x.q < y.q) || (x.q == y.q && x.p < y.p) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    #[test]
    fn sort_examples() {
        let (sorted, sign) = sort_diagram(&d(&[(0, 0), (1, 0), (0, 1), (3, 0), (2, 1)]));
        assert_eq!(sorted, d(&[(0, 0), (1, 0), (3, 0), (0, 1), (2, 1)]));
        assert_eq!(sign, -1);
        assert_eq!(inversion_sign(&d(&[(0, 0), (1, 0), (0, 1), (3, 0), (2, 1)]).cells), -1);

        let already = d(&[(0, 0), (2, 0), (1, 1)]);
        assert_eq!(sort_diagram(&already), (already.clone(), 1));
        assert_eq!(sort_diagram(&d(&[(0, 0), (0, 0)])).1, 0);
        assert_eq!(sort_diagram(&d(&[(1, 0), (-1, 1)])).1, 0);
    }

    #[test]
    fn compare_examples() {
        let a = d(&[(0, 0), (1, 0), (2, 0), (1, 1), (2, 1)]);
        let b = d(&[(0, 0), (1, 0), (2, 0), (0, 1), (3, 1)]);
        assert_eq!(compare_diagrams(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(compare_diagrams(&a, &a).unwrap(), Ordering::Equal);
        assert_eq!(
            compare_diagrams(&d(&[(0, 0), (1, 0)]), &d(&[(0, 0), (2, 0)])).unwrap(),
            Ordering::Less
        );
        assert!(compare_diagrams(&a, &d(&[(0, 0)])).is_err());
    }

    #[test]
    fn term_normalization() {
        assert!(Alternant::term(d(&[(0, 0), (0, 0)]), int(1)).is_zero());
        let t = Alternant::term(d(&[(1, 0), (0, 0)]), int(1));
        assert_eq!(t.len(), 1);
        assert_eq!(t.leading().unwrap(), (&d(&[(0, 0), (1, 0)]), &int(-1)));
        assert!(t.add(&t.scale(&int(-1))).unwrap().is_zero());
        assert_eq!(t.coefficient(&d(&[(1, 0), (0, 0)])), int(1));
    }

    #[test]
    fn add_rejects_mixed_bidegrees() {
        let a = Alternant::term(d(&[(0, 0), (1, 0)]), int(1));
        let b = Alternant::term(d(&[(0, 0), (2, 0)]), int(1));
        assert!(matches!(a.add(&b), Err(Error::BidegreeMismatch(..))));
        let c = Alternant::term(d(&[(0, 0)]), int(1));
        assert!(matches!(a.add(&c), Err(Error::CellCountMismatch(..))));
        assert_eq!(a.add(&Alternant::zero(2)).unwrap(), a);
    }

    #[test]
    fn leading_picks_maximal_term() {
        let terms = [
            (&[(0, 0), (1, 0), (2, 0), (0, 1), (3, 1)][..], 1),
            (&[(0, 0), (1, 0), (2, 0), (1, 1), (2, 1)][..], -3),
            (&[(0, 0), (1, 0), (4, 0), (0, 1), (1, 1)][..], -3),
            (&[(0, 0), (2, 0), (3, 0), (0, 1), (1, 1)][..], 1),
            (&[(0, 0), (1, 0), (3, 0), (0, 1), (2, 1)][..], 2),
        ];
        let mut f = Alternant::zero(5);
        for (cells, c) in terms {
            f = f.add(&Alternant::term(d(cells), int(c))).unwrap();
        }
        let (lead, c) = f.leading().unwrap();
        assert_eq!(lead, &d(&[(0, 0), (1, 0), (2, 0), (0, 1), (3, 1)]));
        assert_eq!(c, &int(1));
        assert!(Alternant::zero(3).leading().is_none());
    }

    #[test]
    fn delta_n_shape() {
        assert_eq!(delta_n(1).leading().unwrap().0, &d(&[(0, 0)]));
        assert_eq!(delta_n(3).leading().unwrap().0, &d(&[(0, 0), (1, 0), (2, 0)]));
        for n in 1..8usize {
            assert_eq!(delta_n(n).bidegree(), Some(((n * (n - 1) / 2) as i64, 0)));
        }
    }

    #[test]
    fn json_round_trip_and_format() {
        let f = Alternant::term(d(&[(1, 0), (0, 0)]), BigRational::new(3.into(), 2.into()));
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"[{"diagram":[[0,0],[1,0]],"coeff":"-3/2"}]"#);
        let back: Alternant = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert_eq!(parse_fraction("4").unwrap(), int(4));
        assert!(parse_fraction("1/0").is_err());
    }

    fn cell_strategy() -> impl Strategy<Value = Cell> {
        (0i64..5, 0i64..3).prop_map(|(p, q)| Cell::new(p, q))
    }

    fn distinct_cells(n: usize) -> impl Strategy<Value = Vec<Cell>> {
        proptest::collection::btree_set((0i64..6, 0i64..3), n)
            .prop_map(|s| s.into_iter().map(Cell::from).collect::<Vec<_>>())
            .prop_shuffle()
    }

    proptest! {
        #[test]
        fn sign_is_parity_of_sorting_permutation(cells in (1usize..6).prop_flat_map(distinct_cells)) {
            let (sorted, sign) = sort_diagram(&LatticeDiagram::new(cells.clone()));
            prop_assert_eq!(sign, inversion_sign(&cells));
            prop_assert!(sorted.is_sorted());
            prop_assert_eq!(sort_diagram(&sorted), (sorted.clone(), 1));
        }

        #[test]
        fn sign_composes_under_reordering(cells in (2usize..6).prop_flat_map(distinct_cells), i in 0usize..5, j in 0usize..5) {
            let n = cells.len();
            let (i, j) = (i % n, j % n);
            prop_assume!(i != j);
            let mut swapped = cells.clone();
            swapped.swap(i, j);
            let a = sort_diagram(&LatticeDiagram::new(cells));
            let b = sort_diagram(&LatticeDiagram::new(swapped));
            prop_assert_eq!(a.0, b.0);
            prop_assert_eq!(a.1, -b.1);
        }

        #[test]
        fn order_is_total_and_matches_scan(
            a in (1usize..5).prop_flat_map(distinct_cells),
            seed_b in proptest::collection::vec(cell_strategy(), 4),
            seed_c in proptest::collection::vec(cell_strategy(), 4),
        ) {
            let n = a.len();
            let norm = |v: Vec<Cell>| sort_diagram(&LatticeDiagram::new(v)).0;
            let a = norm(a);
            let b = norm(seed_b[..n].to_vec());
            let c = norm(seed_c[..n].to_vec());
            prop_assert_eq!(a.cmp(&b), scan_compare(a.cells(), b.cells()));
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
        }

        #[test]
        fn term_is_linear_in_coefficient(cells in proptest::collection::vec(cell_strategy(), 1..5), c in -20i64..20) {
            let l = LatticeDiagram::new(cells);
            let lhs = Alternant::term(l.clone(), int(c));
            let rhs = Alternant::term(l, int(1)).scale(&int(c));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
