//! Framed tableaux: the framing procedure, insertion `T ← x`, removal `_xT`
//! and the bijection with partitions.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{balanced_split, enumerate_partitions, Partition};
use crate::error::{Error, Result};
use crate::tableau::{Entry, Tableau};

/// A tableau in the image of [`fram`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Tableau", into = "Tableau")]
pub struct FramedTableau(Tableau);

impl FramedTableau {
    /// Accepts `t` only if it is framed.
    pub fn new(t: Tableau) -> Result<Self> {
        if is_framed(&t) {
            Ok(FramedTableau(t))
        } else {
            Err(Error::InvalidTableau("not a framed tableau".into()))
        }
    }

    pub fn empty() -> Self {
        FramedTableau(Tableau::empty())
    }

    pub fn single(x: u32) -> Result<Self> {
        Tableau::new(vec![vec![x]]).map(FramedTableau)
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    pub fn shift(&self, delta: i64) -> Result<FramedTableau> {
        self.0.shifted(delta).map(FramedTableau)
    }

    pub fn drop_bottom_row(&self) -> Result<FramedTableau> {
        if self.0.is_empty() {
            return Err(Error::EmptyTableau);
        }
        let rows = self.0.rows()[1..].to_vec();
        Tableau::new(rows).map(FramedTableau)
    }

    /// `T ← x`, defined for `0 < x ≤ t_{1,1}`; inserting into the empty
    /// tableau gives the single cell `x`.
    pub fn insert(&self, x: u32) -> Result<FramedTableau> {
        let Some(corner) = self.0.corner() else {
            return if x == 0 {
                Err(Error::InsertOutOfRange { x, corner: 0 })
            } else {
                FramedTableau::single(x)
            };
        };
        if x == 0 || x > corner {
            return Err(Error::InsertOutOfRange { x, corner });
        }

        let mut y = self.0.rows().to_vec();
        let mut carry = x;
        let mut i = 0;
        while i < y.len() && y[i][y[i].len() - 1] >= carry + 2 {
            let j = y[i].iter().position(|&v| v >= carry + 2).expect("last entry qualifies");
            let bumped = std::mem::replace(&mut y[i][j], carry);
            y[i].sort_unstable();
            carry = bumped;
            i += 1;
        }
        if i == y.len() {
            y.push(vec![carry]);
        } else {
            y[i].push(carry);
            y[i].sort_unstable();
        }

        refram(y, x, false)
    }

    /// `_xT` with `x = t_{1,1}`. Returns the removed value and the remaining tableau.
    pub fn remove(&self) -> Result<(u32, FramedTableau)> {
        let x = self.0.corner().ok_or(Error::EmptyTableau)?;
        let mut y = self.0.rows().to_vec();
        let (mut i, mut j) = (0usize, 0usize);
        loop {
            let up = lookup(&y, i + 1, j);
            let right = lookup(&y, i, j + 1);
            if !up.is_finite() && !right.is_finite() {
                break;
            }
            if up >= right.plus(2) {
                y[i][j] = y[i][j + 1];
                j += 1;
            } else {
                y[i][j] = y[i + 1][j];
                y[i].sort_unstable();
                i += 1;
            }
        }
        y[i].remove(j);
        if y[i].is_empty() {
            y.remove(i);
        }

        refram(y, x, true).map(|rest| (x, rest))
    }
}

impl Deref for FramedTableau {
    type Target = Tableau;

    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl TryFrom<Tableau> for FramedTableau {
    type Error = Error;

    fn try_from(t: Tableau) -> Result<Self> {
        FramedTableau::new(t)
    }
}

impl From<FramedTableau> for Tableau {
    fn from(t: FramedTableau) -> Self {
        t.0
    }
}

impl std::fmt::Display for FramedTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

// zero-based lookup on raw rows
fn lookup(rows: &[Vec<u32>], i: usize, j: usize) -> Entry {
    rows.get(i)
        .and_then(|r| r.get(j))
        .map_or(Entry::Infinite, |&v| Entry::Finite(v))
}

/// `s_i ≥ (2i−1)μ_i`, and `s_{i+1} ≥ s_i + 2μ_i` whenever `μ_{i+1} = μ_i`.
pub fn framing_condition(mu: &Partition, s: &[u32]) -> Result<bool> {
    let mu = mu.parts();
    if mu.len() != s.len() {
        return Err(Error::LengthMismatch {
            shape: mu.len(),
            sums: s.len(),
        });
    }
    let lower = (0..mu.len()).all(|i| s[i] as u64 >= (2 * i as u64 + 1) * mu[i] as u64);
    let gaps = (1..mu.len()).all(|i| mu[i] != mu[i - 1] || s[i] as u64 >= s[i - 1] as u64 + 2 * mu[i - 1] as u64);
    Ok(lower && gaps)
}

/// The framing procedure.
pub fn fram(mu: &Partition, s: &[u32]) -> Result<FramedTableau> {
    let failure = || Error::FramingCondition {
        mu: mu.parts().to_vec(),
        s: s.to_vec(),
    };
    if !framing_condition(mu, s)? {
        return Err(failure());
    }
    let rows = fram_rows(mu.parts(), s);

    let failed = || Error::FramingFailed {
        mu: mu.parts().to_vec(),
        s: s.to_vec(),
    };
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        if row.iter().any(|&v| v < 1 || v > u32::MAX as i64) {
            return Err(failed());
        }
        out.push(row.into_iter().map(|v| v as u32).collect::<Vec<u32>>());
    }
    let t = Tableau::new(out).map_err(|_| failed())?;
    if t.row_sums() != s || !t.is_column_strict() {
        return Err(failed());
    }
    Ok(FramedTableau(t))
}

fn fram_rows(mu: &[u32], s: &[u32]) -> Vec<Vec<i64>> {
    let l = mu.len();
    let width = |k: usize| if k < l { mu[k] as usize } else { 0 };
    let mut t: Vec<Vec<i64>> = mu.iter().map(|&m| vec![0; m as usize]).collect();
    if l == 0 {
        return t;
    }
    t[l - 1] = as_i64(balanced_split(s[l - 1] as i64, mu[l - 1] as usize));

    for i in (0..l - 1).rev() {
        let mut a = s[i] as i64;
        let mut b = mu[i] as usize;
        for k in (i..l).rev() {
            let (lo, hi) = (width(k + 1), width(k));
            if lo < hi {
                let r = balanced_split(a, b);
                let above = |j: usize| t.get(i + 1).and_then(|row| row.get(j)).copied();
                let fits = (lo..hi).all(|j| above(j).is_none_or(|u| r[j - lo] as i64 <= u - 2));
                for j in lo..hi {
                    t[i][j] = if fits {
                        r[j - lo] as i64
                    } else {
                        t[i + 1][j] - 2
                    };
                }
                a -= t[i][lo..hi].iter().sum::<i64>();
            }
            b -= hi - lo;
        }
    }
    t
}

fn as_i64(v: Vec<u32>) -> Vec<i64> {
    v.into_iter().map(i64::from).collect()
}

/// Step 2 of insertion and removal followed by framing. `y` is the auxiliary
/// tableau from step 1 and `x0` the inserted or removed value.
fn refram(mut y: Vec<Vec<u32>>, x0: u32, removal: bool) -> Result<FramedTableau> {
    let shape: Vec<u32> = y.iter().map(|r| r.len() as u32).collect();
    let shape = Partition::new(shape)
        .map_err(|e| Error::InvalidTableau(format!("auxiliary tableau has no partition shape: {e}")))?;
    let l = y.len();
    let s: Vec<i64> = y.iter().map(|r| r.iter().map(|&v| v as i64).sum()).collect();
    let mut d = vec![0i64; l + 1];
    let mut x = x0 as i64;

    for k in 0..l.saturating_sub(1) {
        let last = y[k][y[k].len() - 1] as i64;
        let first = y[k][0] as i64;
        if last < x + 2 || (removal && first > x + 1) {
            break;
        }
        let wide = last > x + 2;
        for j in 0..y[k + 1].len() {
            let v = y[k][j] as i64;
            if v == x {
                y[k + 1][j] = (x + 2) as u32;
            }
            if wide && v == x + 1 {
                y[k + 1][j] = (x + 3) as u32;
            }
        }
        let bar: i64 = y[k + 1].iter().map(|&v| v as i64).sum();
        d[k + 1] = s[k + 1] - bar;
        x += 2;
    }

    let mut sums = Vec::with_capacity(l);
    for i in 0..l {
        let v = s[i] + d[i + 1] - d[i];
        if v < 1 {
            return Err(Error::FramingCondition {
                mu: shape.parts().to_vec(),
                s: s.iter().map(|&v| v.max(0) as u32).collect(),
            });
        }
        sums.push(v as u32);
    }
    fram(&shape, &sums)
}

/// True iff `t` equals `Fram(μ(t), s(t))`.
pub fn is_framed(t: &Tableau) -> bool {
    if !t.is_column_strict() {
        return false;
    }
    let sums = t.row_sums();
    let framed = match fram(&t.shape(), &sums) {
        Ok(f) => f.0 == *t,
        Err(_) => false,
    };
    debug_assert!(!framed || satisfies_framed_properties(t));
    framed
}

/// Column gaps of at least 2, and within a row `b − a ≤ 1` for `a ≤ b` unless
/// the entry directly above `a` is `a + 2`.
pub fn satisfies_framed_properties(t: &Tableau) -> bool {
    let rows = t.rows();
    let columns_ok = rows
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(&up, &down)| up >= down + 2));
    let rows_ok = rows.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(p, &a)| {
            let escape = lookup(rows, i + 1, p) == Entry::Finite(a + 2);
            escape || row[p..].iter().all(|&b| b <= a + 1)
        })
    });
    columns_ok && rows_ok
}

/// `∅ ← λ_1 ← λ_2 ← …`.
pub fn partition_to_tableau(lambda: &Partition) -> Result<FramedTableau> {
    lambda
        .parts()
        .iter()
        .try_fold(FramedTableau::empty(), |t, &x| t.insert(x))
}

/// Removes the corner until nothing is left and reads the removed values backwards.
pub fn tableau_to_partition(t: &FramedTableau) -> Result<Partition> {
    let mut removed = Vec::with_capacity(t.cell_count());
    let mut current = t.clone();
    while !current.is_empty() {
        let (x, rest) = current.remove()?;
        removed.push(x);
        current = rest;
    }
    removed.reverse();
    Partition::new(removed)
}

/// Framed tableaux with weight `k` and `l` cells, one per partition of `k` into `l` parts.
pub fn enumerate_framed(k: u32, l: u32) -> impl Iterator<Item = Result<FramedTableau>> {
    enumerate_partitions(k, l).map(|lambda| partition_to_tableau(&lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn ft(rows: &[&[u32]]) -> FramedTableau {
        FramedTableau::new(t(rows)).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn framing_condition_examples() {
        assert!(framing_condition(&p(&[8, 5, 4, 2]), &[22, 18, 24, 14]).unwrap());
        assert!(framing_condition(&p(&[1]), &[1]).unwrap());
        assert!(!framing_condition(&p(&[2, 2]), &[4, 6]).unwrap());
        assert!(framing_condition(&p(&[2, 2]), &[4, 8]).unwrap());
        assert!(framing_condition(&p(&[2]), &[1, 2]).is_err());
    }

    #[test]
    fn fram_examples() {
        let big = fram(&p(&[8, 5, 4, 2]), &[22, 18, 24, 14]).unwrap();
        assert_eq!(big.as_tableau(), &t(&[&[1, 1, 2, 2, 2, 4, 5, 5], &[3, 3, 4, 4, 4], &[5, 5, 7, 7], &[7, 7]]));
        assert_eq!(fram(&p(&[1]), &[9]).unwrap().as_tableau(), &t(&[&[9]]));
        assert_eq!(fram(&p(&[4, 2]), &[17, 7]).unwrap().as_tableau(), &t(&[&[1, 2, 7, 7], &[3, 4]]));
        assert!(fram(&Partition::empty(), &[]).unwrap().is_empty());
        assert!(matches!(fram(&p(&[2, 2]), &[4, 6]), Err(Error::FramingCondition { .. })));
    }

    #[test]
    fn recognises_framed_tableaux() {
        let framed: [&[&[u32]]; 5] = [
            &[&[1, 2, 2], &[3, 4], &[6]],
            &[&[1, 1, 4], &[3, 3], &[6]],
            &[&[1, 1, 2], &[4, 4], &[6]],
            &[&[1, 1, 2], &[3, 6], &[5]],
            &[&[1, 4, 5], &[3, 7], &[5]],
        ];
        for rows in framed {
            assert!(is_framed(&t(rows)), "{rows:?}");
            assert!(satisfies_framed_properties(&t(rows)));
        }
        assert!(!is_framed(&t(&[&[1, 2, 6], &[4, 5]])));
        assert!(!satisfies_framed_properties(&t(&[&[1, 2, 6], &[4, 5]])));
        assert!(is_framed(&t(&[&[5]])));
        assert!(is_framed(&Tableau::empty()));
        assert!(FramedTableau::new(t(&[&[1, 2, 6], &[4, 5]])).is_err());
    }

    #[test]
    fn shift_and_drop() {
        let big = fram(&p(&[8, 5, 4, 2]), &[22, 18, 24, 14]).unwrap();
        assert!(is_framed(&big.shift(1).unwrap()));
        assert_eq!(big.shift(3).unwrap().shift(-3).unwrap(), big);
        assert!(big.shift(-1).is_err());
        assert_eq!(ft(&[&[3]]).shift(-2).unwrap(), ft(&[&[1]]));

        let top = big.drop_bottom_row().unwrap();
        assert_eq!(top.as_tableau(), &t(&[&[3, 3, 4, 4, 4], &[5, 5, 7, 7], &[7, 7]]));
        assert!(is_framed(&top));
        let two = ft(&[&[1, 2, 7, 7], &[3, 4]]);
        assert_eq!(two.drop_bottom_row().unwrap(), ft(&[&[3, 4]]));
        assert!(ft(&[&[2]]).drop_bottom_row().unwrap().is_empty());
        assert!(FramedTableau::empty().drop_bottom_row().is_err());
    }

    #[test]
    fn insertion_example() {
        let before = ft(&[&[2, 5, 6, 6], &[4]]);
        assert_eq!(before.insert(1).unwrap(), ft(&[&[1, 2, 7, 7], &[3, 4]]));
        assert_eq!(FramedTableau::empty().insert(1).unwrap(), ft(&[&[1]]));
        assert!(matches!(before.insert(3), Err(Error::InsertOutOfRange { x: 3, corner: 2 })));
        assert!(before.insert(0).is_err());
    }

    #[test]
    fn removal_example() {
        let before = ft(&[&[1, 1], &[4, 5], &[6]]);
        let (x, rest) = before.remove().unwrap();
        assert_eq!(x, 1);
        assert_eq!(rest, ft(&[&[1, 6], &[3], &[6]]));
        assert_eq!(ft(&[&[4]]).remove().unwrap(), (4, FramedTableau::empty()));
        assert!(FramedTableau::empty().remove().is_err());
    }

    #[test]
    fn fram_output_properties_exhaustive() {
        // every framing pair with |s| <= 14
        let mut checked = 0;
        for cells in 1..=14u32 {
            for len in 1..=cells {
                for mu in enumerate_partitions(cells, len) {
                    for total in 0..=14u32 {
                        for_each_composition(total, mu.len(), &mut |s| {
                            if framing_condition(&mu, s).unwrap() {
                                let f = fram(&mu, s).unwrap();
                                assert_eq!(f.shape(), mu);
                                assert_eq!(f.row_sums(), s);
                                assert!(f.is_column_strict());
                                assert!(satisfies_framed_properties(&f), "{mu} {s:?}");
                                assert!(is_framed(&f));
                                checked += 1;
                            }
                        });
                    }
                }
            }
        }
        assert!(checked > 50, "{checked}");
    }

    fn for_each_composition(total: u32, parts: usize, f: &mut dyn FnMut(&[u32])) {
        fn go(rest: u32, left: usize, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
            if left == 0 {
                if rest == 0 {
                    f(acc);
                }
                return;
            }
            for v in 1..=rest {
                acc.push(v);
                go(rest - v, left - 1, acc, f);
                acc.pop();
            }
        }
        go(total, parts, &mut Vec::new(), f);
    }

    #[test]
    fn equal_height_columns_stay_close() {
        for k in 1..=12 {
            for l in 1..=k {
                for tab in enumerate_framed(k, l) {
                    let tab = tab.unwrap();
                    let cols = tab.columns();
                    for a in 0..cols.len() {
                        for b in a + 1..cols.len() {
                            let (ca, cb) = (&cols[a], &cols[b]);
                            let gap = ca.iter().zip(cb).any(|(x, y)| *y >= x + 2);
                            if ca.len() == cb.len() {
                                assert!(!gap, "{tab:?}");
                            } else if gap {
                                assert!(ca.len() > cb.len());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_with_partitions() {
        for k in 0..=12 {
            for l in 0..=k {
                let mut seen = std::collections::BTreeSet::new();
                for lambda in enumerate_partitions(k, l) {
                    let tab = partition_to_tableau(&lambda).unwrap();
                    assert_eq!(tab.cell_count(), l as usize);
                    assert_eq!(tab.weight(), k);
                    assert!(is_framed(&tab));
                    assert_eq!(tableau_to_partition(&tab).unwrap(), lambda);
                    assert!(seen.insert(tab));
                }
            }
        }
        assert_eq!(partition_to_tableau(&p(&[7])).unwrap(), ft(&[&[7]]));
    }

    #[test]
    fn two_part_partition() {
        let tab = partition_to_tableau(&p(&[2, 1])).unwrap();
        assert_eq!(tab.corner(), Some(1));
        assert_eq!(tab.weight(), 3);
        assert_eq!(tableau_to_partition(&tab).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn reduction_identity_and_corner() {
        for k in 1..=10 {
            for l in 1..=k {
                for tab in enumerate_framed(k, l) {
                    let tab = tab.unwrap();
                    let corner = tab.corner().unwrap();
                    for x in 1..=corner {
                        let direct = tab.insert(x).unwrap();
                        assert_eq!(direct.corner(), Some(x));
                        let reduced = tab.shift(1 - x as i64).unwrap().insert(1).unwrap();
                        assert_eq!(reduced.shift(x as i64 - 1).unwrap(), direct);
                        assert_eq!(direct.remove().unwrap(), (x, tab.clone()));
                    }
                    let (x, rest) = tab.remove().unwrap();
                    let (one, rest1) = tab.shift(1 - x as i64).unwrap().remove().unwrap();
                    assert_eq!(one, 1);
                    assert_eq!(rest1.shift(x as i64 - 1).unwrap(), rest);
                }
            }
        }
    }

    #[test]
    fn framed_counts() {
        assert_eq!(enumerate_framed(5, 1).count(), 1);
        assert_eq!(enumerate_framed(4, 2).count(), 2);
    }

    #[test]
    fn json_validates_framing() {
        let tab = ft(&[&[1, 2, 7, 7], &[3, 4]]);
        let json = serde_json::to_string(&tab).unwrap();
        assert_eq!(json, r#"{"rows":[[1,2,7,7],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<FramedTableau>(&json).unwrap(), tab);
        assert!(serde_json::from_str::<FramedTableau>(r#"{"rows":[[1,2,6],[4,5]]}"#).is_err());
    }
}
