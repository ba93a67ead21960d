use std::fmt;

use serde::Serialize;

use crate::combinatorics::{Composition, HessenbergFunction, Permutation};
use crate::error::{Error, Result};

/// 1-based box coordinates within a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoxPosition {
    pub row: usize,
    pub col: usize,
}

/// A filling of a composition diagram by `1..=n`, each value once.
///
/// Tableaux are immutable; the value → position index is rebuilt on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
    index: Vec<BoxPosition>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl Tableau {
    /// Builds a tableau from rows listed top to bottom.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut index = vec![BoxPosition { row: 0, col: 0 }; n];
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::InvalidTableau(format!("entry {v} outside 1..={n}")));
                }
                if seen[v] {
                    return Err(Error::InvalidTableau(format!("entry {v} repeated")));
                }
                seen[v] = true;
                index[v - 1] = BoxPosition { row: r + 1, col: c + 1 };
            }
        }
        let shape = if n == 0 {
            Composition::empty()
        } else {
            Composition::new(rows.iter().map(|r| r.len()).collect::<Vec<_>>())?
        };
        Ok(Self { shape, rows, index })
    }

    pub fn empty() -> Self {
        Self { shape: Composition::empty(), rows: Vec::new(), index: Vec::new() }
    }

    /// The base filling `R(e)`: columns left to right, each numbered bottom to top.
    pub fn base_filling(shape: &Composition) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        let mut next = 1;
        for col in 1..=shape.num_columns() {
            for &row in shape.column_rows(col).iter().rev() {
                rows[row - 1][col - 1] = next;
                next += 1;
            }
        }
        Self::from_rows(rows).expect("base filling is a valid tableau")
    }

    /// `R(w)`: the box holding `i` in `R(e)` is relabeled `w⁻¹(i)`.
    pub fn of_permutation(w: &Permutation, shape: &Composition) -> Result<Self> {
        if w.n() != shape.size() {
            return Err(Error::SizeMismatch { expected: shape.size(), found: w.n() });
        }
        let winv = w.inverse();
        let base = Self::base_filling(shape);
        let rows = base.rows.iter().map(|row| row.iter().map(|&i| winv.get(i)).collect()).collect();
        Self::from_rows(rows)
    }

    /// The permutation `w` with `R(w) = self`.
    pub fn permutation(&self) -> Permutation {
        let base = Self::base_filling(&self.shape);
        let mut word = vec![0; self.size()];
        for (row, base_row) in self.rows.iter().zip(&base.rows) {
            for (&v, &i) in row.iter().zip(base_row) {
                word[v - 1] = i;
            }
        }
        Permutation::new(word).expect("tableau entries form a permutation")
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn num_columns(&self) -> usize {
        self.shape.num_columns()
    }

    pub fn position(&self, value: usize) -> BoxPosition {
        self.index[value - 1]
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// The entry directly right of `value`, if any.
    pub fn right_of(&self, value: usize) -> Option<usize> {
        let p = self.position(value);
        self.entry(p.row, p.col + 1)
    }

    /// The entry directly left of `value`, if any.
    pub fn left_of(&self, value: usize) -> Option<usize> {
        let p = self.position(value);
        self.entry(p.row, p.col - 1)
    }

    /// The entry `m` boxes left of `value`, if any.
    pub fn left_by(&self, value: usize, m: usize) -> Option<usize> {
        let p = self.position(value);
        if m >= p.col {
            return None;
        }
        self.entry(p.row, p.col - m)
    }

    pub fn ends_row(&self, value: usize) -> bool {
        self.right_of(value).is_none()
    }

    /// Entries of 1-based column `col`, top to bottom, with their rows.
    pub fn column(&self, col: usize) -> Vec<(usize, usize)> {
        self.shape.column_rows(col).into_iter().map(|r| (r, self.rows[r - 1][col - 1])).collect()
    }

    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))
    }

    /// Every horizontally adjacent pair `ℓ` left of `r` satisfies `ℓ ≤ h(r)`.
    pub fn is_h_strict(&self, h: &HessenbergFunction) -> Result<bool> {
        if h.n() != self.size() {
            return Err(Error::SizeMismatch { expected: self.size(), found: h.n() });
        }
        Ok(self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= h.get(p[1]))))
    }

    /// Row-strict and increasing down every column.
    pub fn is_standard(&self) -> bool {
        self.is_row_strict()
            && (1..=self.num_columns())
                .all(|c| self.column(c).windows(2).all(|p| p[0].1 < p[1].1))
    }

    /// `std(R)`: each column's entries reordered to increase from top to bottom.
    pub fn standardize(&self) -> Result<Self> {
        if !self.is_row_strict() {
            return Err(Error::NotRowStrict);
        }
        let mut rows = self.rows.clone();
        for col in 1..=self.num_columns() {
            let cells = self.column(col);
            let mut values: Vec<usize> = cells.iter().map(|&(_, v)| v).collect();
            values.sort_unstable();
            for (&(r, _), v) in cells.iter().zip(values) {
                rows[r - 1][col - 1] = v;
            }
        }
        Self::from_rows(rows)
    }

    /// Removes the box holding `n`, which must end its row.
    pub fn delete_last_box(&self) -> Result<(Composition, Tableau)> {
        let n = self.size();
        if n == 0 {
            return Err(Error::InvalidTableau("tableau is empty".into()));
        }
        if !self.ends_row(n) {
            return Err(Error::NotAtRowEnd(n));
        }
        let p = self.position(n);
        let mut rows = self.rows.clone();
        rows[p.row - 1].pop();
        rows.retain(|r| !r.is_empty());
        let t = Self::from_rows(rows)?;
        Ok((t.shape.clone(), t))
    }

    /// Parses the text format: one row per line, entries separated by whitespace,
    /// top row first. A `/` may stand in for a line break.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> = text
            .split(['\n', '/'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad tableau entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Self::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
