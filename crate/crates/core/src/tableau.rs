//! Tableaux with rows stored bottom-up: `rows[0]` is row 1, the longest row.
//!
//! Positions are 1-based `(row, column)` pairs as in the usual box picture,
//! with `(1, 1)` the bottom-left cell. Reading outside the shape yields
//! [`Entry::Infinite`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A tableau entry, or the sentinel returned for positions outside the shape.
/// `Infinite` orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    Finite(u32),
    Infinite,
}

impl Entry {
    pub fn plus(self, k: u32) -> Entry {
        match self {
            Entry::Finite(v) => Entry::Finite(v + k),
            Entry::Infinite => Entry::Infinite,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Entry::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Entry::Finite(v) => Some(v),
            Entry::Infinite => None,
        }
    }
}

/// A filling of a partition shape with positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(t: TableauJson) -> Result<Self> {
        Tableau::new(t.rows)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson { rows: t.rows }
    }
}

impl Tableau {
    /// Checks that row lengths weakly decrease going up and that every entry
    /// is positive. Empty rows are not allowed.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if !rows.windows(2).all(|w| w[0].len() >= w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease upwards".into()));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths form a partition")
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Total of all entries.
    pub fn weight(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Entry {
        if row == 0 || col == 0 {
            return Entry::Infinite;
        }
        self.rows
            .get(row - 1)
            .and_then(|r| r.get(col - 1))
            .map_or(Entry::Infinite, |&v| Entry::Finite(v))
    }

    /// Smallest entry, which sits at `(1, 1)` for column-strict tableaux.
    pub fn corner(&self) -> Option<u32> {
        self.get(1, 1).finite()
    }

    /// Column `j` (1-based) read bottom to top.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows
            .iter()
            .take_while(|r| r.len() >= j)
            .map(|r| r[j - 1])
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (1..=width).map(|j| self.column(j)).collect()
    }

    /// Entries strictly increase up columns and weakly increase along rows.
    pub fn is_column_strict(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| up > down));
        rows_ok && cols_ok
    }

    pub fn min_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().min()
    }

    /// Adds `delta` to every entry.
    pub fn shifted(&self, delta: i64) -> Result<Tableau> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        let w = v as i64 + delta;
                        if w >= 1 {
                            Ok(w as u32)
                        } else {
                            Err(Error::NonPositiveShift(delta))
                        }
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { rows })
    }

    /// Box layout with the top row printed first, as tableaux are drawn.
    pub fn render(&self) -> String {
        if self.rows.is_empty() {
            return "∅\n".to_string();
        }
        let width = self.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for (idx, row) in self.rows.iter().enumerate().rev() {
            let below = if idx == 0 { 0 } else { self.rows[idx - 1].len() };
            let span = row.len().max(below);
            if idx + 1 == self.rows.len() {
                out.push_str(&border(row.len(), width));
            }
            out.push('|');
            for v in row {
                out.push_str(&format!("{v:>width$}|"));
            }
            out.push('\n');
            out.push_str(&border(span, width));
        }
        out
    }
}

fn border(cells: usize, width: usize) -> String {
    let mut s = String::from("+");
    for _ in 0..cells {
        s.push_str(&"-".repeat(width));
        s.push('+');
    }
    s.push('\n');
    s
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
