use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{OracleError, Result};

/// Sparse polynomial in `x_1..x_n, y_1..y_n`. Exponent vectors have length
/// `2n`: the `x` exponents followed by the `y` exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariatePolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultivariatePolynomial {
    pub fn zero(n: usize) -> Self {
        MultivariatePolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; 2 * n], BigRational::one())
    }

    /// `c · x^a y^b` from the concatenated exponent vector `(a, b)`.
    pub fn monomial(exponents: Vec<u32>, c: BigRational) -> Self {
        assert!(exponents.len().is_multiple_of(2), "exponent vector must have even length");
        let mut p = Self::zero(exponents.len() / 2);
        p.add_term(exponents, c);
        p
    }

    /// `x_i` with 0-based `i`.
    pub fn x(n: usize, i: usize) -> Self {
        let mut e = vec![0; 2 * n];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    /// `y_i` with 0-based `i`.
    pub fn y(n: usize, i: usize) -> Self {
        let mut e = vec![0; 2 * n];
        e[n + i] = 1;
        Self::monomial(e, BigRational::one())
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

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigRational) {
        debug_assert_eq!(exponents.len(), 2 * self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        MultivariatePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Applies `(x_i, y_i) ↔ (x_j, y_j)`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            e.swap(n + i, n + j);
            out.add_term(e, c.clone());
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(OracleError::VariableCount(self.n, other.n))
        }
    }
}

/// Terms print by decreasing total degree, ties broken by increasing
/// exponent vector, e.g. `x2 - x1`.
impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(e, _)| (std::cmp::Reverse(e.iter().sum::<u32>()), *e));
        for (idx, (e, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            let mut factors = Vec::new();
            for (v, &a) in e.iter().enumerate() {
                let name = if v < self.n {
                    format!("x{}", v + 1)
                } else {
                    format!("y{}", v - self.n + 1)
                };
                match a {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{a}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
