use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Row-by-row encoding of a Dyck path: `g_0 = 0` and `g_{i+1} <= g_i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DyckSequence {
    g: Vec<u32>,
}

impl DyckSequence {
    pub fn new(g: Vec<u32>) -> Result<Self> {
        let ok = !g.is_empty() && g[0] == 0 && g.windows(2).all(|w| w[1] <= w[0] + 1);
        if ok {
            Ok(DyckSequence { g })
        } else {
            Err(Error::InvalidDyckSequence(g))
        }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.g
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn area(&self) -> u64 {
        self.g.iter().map(|&x| x as u64).sum()
    }

    pub fn coarea(&self) -> u64 {
        let n = self.g.len() as u64;
        n * (n - 1) / 2 - self.area()
    }

    /// Bounce statistic, computed by peeling suffixes instead of recursing.
    pub fn bounce(&self) -> u64 {
        let mut total = 0u64;
        let mut m = self.g.len();
        while m > 0 {
            let step = m - 1 - self.g[m - 1] as usize;
            total += step as u64;
            m = step;
        }
        total
    }

    /// Returns `(mu, lambda)` with `mu_i = n - i - g_{n-i}` (zero parts dropped)
    /// and `lambda` its conjugate; `|lambda|` equals the coarea.
    pub fn to_partitions(&self) -> (Partition, Partition) {
        let n = self.g.len();
        let parts: Vec<u32> = (1..n)
            .map(|i| (n - i) as u32 - self.g[n - i])
            .filter(|&p| p > 0)
            .collect();
        let mu = Partition::new(parts).expect("Dyck sequences yield weakly decreasing parts");
        let lambda = mu.transpose();
        (mu, lambda)
    }
}

impl TryFrom<Vec<u32>> for DyckSequence {
    type Error = Error;

    fn try_from(g: Vec<u32>) -> Result<Self> {
        DyckSequence::new(g)
    }
}

impl From<DyckSequence> for Vec<u32> {
    fn from(d: DyckSequence) -> Self {
        d.g
    }
}

impl fmt::Display for DyckSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.g.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every Dyck sequence of length `n`, in lexicographic order.
pub fn enumerate_dyck(n: usize) -> DyckPaths {
    DyckPaths {
        next: (n >= 1).then(|| vec![0; n]),
    }
}

pub struct DyckPaths {
    next: Option<Vec<u32>>,
}

impl Iterator for DyckPaths {
    type Item = DyckSequence;

    fn next(&mut self) -> Option<DyckSequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        while i > 1 {
            i -= 1;
            if succ[i] <= succ[i - 1] {
                succ[i] += 1;
                succ[i + 1..].iter_mut().for_each(|x| *x = 0);
                self.next = Some(succ);
                break;
            }
        }
        Some(DyckSequence { g: current })
    }
}

/// Polynomial in `q` and `t` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coefficients: BTreeMap<(u32, u32), BigUint>,
}

impl BivariatePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_monomial(&mut self, q: u32, t: u32, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.coefficients.entry((q, t)).or_default() += coeff;
    }

    pub fn coefficient(&self, q: u32, t: u32) -> BigUint {
        self.coefficients.get(&(q, t)).cloned().unwrap_or_default()
    }

    /// Terms in increasing `(q, t)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.coefficients.iter().map(|(&(q, t), c)| (q, t, c))
    }

    /// Value at `q = t = 1`.
    pub fn total(&self) -> BigUint {
        self.coefficients.values().sum()
    }

    pub fn max_degrees(&self) -> (u32, u32) {
        self.coefficients
            .keys()
            .fold((0, 0), |(a, b), &(q, t)| (a.max(q), b.max(t)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    q: u32,
    t: u32,
    coeff: String,
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coefficients.len()))?;
        for (q, t, c) in self.terms() {
            seq.serialize_element(&TermRecord {
                q,
                t,
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut poly = BivariatePolynomial::new();
        for r in records {
            let c: BigUint = r.coeff.parse().map_err(de::Error::custom)?;
            poly.add_monomial(r.q, r.t, c);
        }
        Ok(poly)
    }
}

/// `Σ q^{coarea} t^{bounce}` over all Dyck paths of length `n`.
pub fn qt_catalan_tilde(n: usize) -> BivariatePolynomial {
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for g in enumerate_dyck(n) {
        *counts.entry((g.coarea() as u32, g.bounce() as u32)).or_default() += 1;
    }
    let mut poly = BivariatePolynomial::new();
    for ((q, t), c) in counts {
        poly.add_monomial(q, t, BigUint::from(c));
    }
    poly
}

/// `binomial(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for i in 0..n {
        c = c * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> DyckSequence {
        DyckSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_example_statistics() {
        let g = seq(&[0, 0, 1, 2, 0, 1, 1, 2, 3, 0]);
        assert_eq!(g.area(), 10);
        assert_eq!(g.coarea(), 35);
        assert_eq!(g.bounce(), 19);
        let (mu, lambda) = g.to_partitions();
        assert_eq!(mu.parts(), &[9, 5, 5, 5, 4, 4, 1, 1, 1]);
        assert_eq!(lambda.parts(), &[9, 6, 6, 6, 4, 1, 1, 1, 1]);
    }

    #[test]
    fn staircase_and_flat_paths() {
        for n in 1..12usize {
            let stair = seq(&(0..n as u32).collect::<Vec<_>>());
            let half = (n * (n - 1) / 2) as u64;
            assert_eq!((stair.area(), stair.coarea(), stair.bounce()), (half, 0, 0));
            let (mu, lambda) = stair.to_partitions();
            assert!(mu.is_empty() && lambda.is_empty());

            let flat = seq(&vec![0; n]);
            assert_eq!((flat.area(), flat.coarea(), flat.bounce()), (0, half, half));
        }
        let (mu, lambda) = seq(&[0, 0]).to_partitions();
        assert_eq!((mu.parts(), lambda.parts()), (&[1][..], &[1][..]));
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(DyckSequence::new(vec![]).is_err());
        assert!(DyckSequence::new(vec![1]).is_err());
        assert!(DyckSequence::new(vec![0, 2]).is_err());
        assert!(serde_json::from_str::<DyckSequence>("[0,1,3]").is_err());
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        assert_eq!(enumerate_dyck(1).map(Vec::from).collect::<Vec<_>>(), vec![vec![0]]);
        assert_eq!(enumerate_dyck(3).count(), 5);
        assert_eq!(enumerate_dyck(4).count(), 14);
        assert_eq!(enumerate_dyck(0).count(), 0);
        for n in 1..=12 {
            let all: Vec<DyckSequence> = enumerate_dyck(n).collect();
            assert_eq!(BigUint::from(all.len()), catalan_number(n), "n = {n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn statistics_invariants() {
        for n in 1..=10 {
            let half = (n * (n - 1) / 2) as u64;
            for g in enumerate_dyck(n) {
                assert_eq!(g.area() + g.coarea(), half);
                assert_eq!(g.to_partitions().1.weight() as u64, g.coarea());
            }
        }
    }

    #[test]
    fn bounce_matches_recursive_definition() {
        fn recursive(g: &[u32]) -> u64 {
            match g.last() {
                None => 0,
                Some(&last) => {
                    let n = g.len() as u64;
                    let keep = g.len() - 1 - last as usize;
                    n - 1 - last as u64 + recursive(&g[..keep])
                }
            }
        }
        for n in 1..=9 {
            for g in enumerate_dyck(n) {
                assert_eq!(g.bounce(), recursive(g.as_slice()));
            }
        }
    }

    #[test]
    fn qt_catalan_small_cases() {
        let c3 = qt_catalan_tilde(3);
        assert_eq!(c3.total(), BigUint::from(5u32));
        // coarea/bounce pairs of the five paths of length 3
        let expected = [((0, 0), 1u32), ((1, 1), 1), ((2, 1), 1), ((2, 2), 1), ((3, 3), 1)];
        for ((q, t), c) in expected {
            assert_eq!(c3.coefficient(q, t), BigUint::from(c), "q^{q} t^{t}");
        }
        assert_eq!(c3.terms().count(), 5);
    }

    #[test]
    fn polynomial_json_shape() {
        let json = serde_json::to_string(&qt_catalan_tilde(2)).unwrap();
        assert_eq!(json, r#"[{"q":0,"t":0,"coeff":"1"},{"q":1,"t":1,"coeff":"1"}]"#);
        let back: BivariatePolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, qt_catalan_tilde(2));
    }
}
