use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. The empty partition is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition: `λ_j = #{i : μ_i ≥ j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An ordered list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().all(|&p| p > 0) {
            Ok(Composition { parts })
        } else {
            Err(Error::InvalidComposition(parts))
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// Splits `total` into `parts` non-decreasing positive integers that differ by at most one.
pub fn balance_composition(total: u32, parts: usize) -> Result<Composition> {
    if parts == 0 || (total as usize) < parts {
        return Err(Error::Unbalanceable {
            total: total as i64,
            parts,
        });
    }
    Composition::new(balanced_split(total as i64, parts))
}

/// Floor/ceil split used by the framing procedure, where the running total may
/// temporarily be too small for positive parts. `parts` must be non-zero.
pub(crate) fn balanced_split(total: i64, parts: usize) -> Vec<u32> {
    let m = parts as i64;
    let low = total.div_euclid(m);
    let high_count = total.rem_euclid(m) as usize;
    let mut out = Vec::with_capacity(parts);
    out.extend(std::iter::repeat_n(low.max(0) as u32, parts - high_count));
    out.extend(std::iter::repeat_n((low + 1).max(0) as u32, high_count));
    out
}

/// Number of partitions of `k` into exactly `l` parts.
pub fn count_partitions(k: u32, l: u32) -> u64 {
    let (k, l) = (k as usize, l as usize);
    if l > k {
        return u64::from(k == 0 && l == 0);
    }
    // table[a][b] = p(a, b)
    let mut table = vec![vec![0u64; l + 1]; k + 1];
    table[0][0] = 1;
    for a in 1..=k {
        for b in 1..=l.min(a) {
            table[a][b] = table[a - 1][b - 1] + table[a - b][b];
        }
    }
    table[k][l]
}

/// Partitions of `k` into exactly `l` parts, in decreasing lexicographic order.
pub fn enumerate_partitions(k: u32, l: u32) -> PartitionsWithLength {
    let first = if l == 0 {
        (k == 0).then(Vec::new)
    } else if l <= k {
        let mut parts = vec![1; l as usize];
        parts[0] = k - l + 1;
        Some(parts)
    } else {
        None
    };
    PartitionsWithLength { next: first }
}

pub struct PartitionsWithLength {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionsWithLength {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let l = parts.len();
    let mut suffix: u32 = 0;
    for i in (0..l).rev() {
        let slots = (l - i - 1) as u32;
        let cap = parts[i].saturating_sub(1);
        if parts[i] >= 2 && slots > 0 && suffix < slots * cap {
            let mut next = parts[..i].to_vec();
            next.push(cap);
            let mut remaining = suffix + 1;
            for left in (0..slots).rev() {
                let take = cap.min(remaining - left);
                next.push(take);
                remaining -= take;
            }
            return Some(next);
        }
        suffix += parts[i];
    }
    None
}
