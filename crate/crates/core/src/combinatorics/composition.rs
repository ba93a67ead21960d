use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Row lengths of a diagram, top row first.
///
/// Zero parts are accepted on input and dropped, so rows are positional after
/// normalization. Parts need not be decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts: Vec<usize> = parts.into().into_iter().filter(|&p| p > 0).collect();
        if parts.is_empty() {
            return Err(Error::InvalidComposition("total size must be at least 1".into()));
        }
        Ok(Self { parts })
    }

    /// The composition of 0. Only produced by deleting the last box of a one-box diagram.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_columns(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|p| p[0] >= p[1])
    }

    /// Parts sorted in decreasing order.
    pub fn to_partition(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts }
    }

    /// 1-based rows that have a box in 1-based column `col`, top to bottom.
    pub fn column_rows(&self, col: usize) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= col)
            .map(|(r, _)| r + 1)
            .collect()
    }

    /// Column lengths (the conjugate of the sorted shape).
    pub fn column_lengths(&self) -> Vec<usize> {
        (1..=self.num_columns()).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect()
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn partitions(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All compositions of `n` (no zero parts).
    pub fn compositions(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest).rev() {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses a comma-separated list such as `2,3,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
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

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    if trimmed.trim().is_empty() {
        return Err(Error::Parse(format!("empty list {s:?}")));
    }
    trimmed
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {:?}", t.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_parts_are_dropped() {
        let c = Composition::new(vec![2, 0, 3, 1, 0, 1]).unwrap();
        assert_eq!(c.parts(), &[2, 3, 1, 1]);
        assert_eq!(c.size(), 7);
        assert!(!c.is_partition());
        assert_eq!(c.to_partition().parts(), &[3, 2, 1, 1]);
        assert_eq!(c.column_rows(2), vec![1, 2]);
        assert_eq!(c.column_lengths(), vec![4, 2, 1]);
    }

    #[test]
    fn empty_is_rejected() {
        assert!(Composition::new(vec![0, 0]).is_err());
        assert!(Composition::new(Vec::new()).is_err());
    }

    #[test]
    fn counts_of_partitions_and_compositions() {
        let p: Vec<usize> = (1..=7).map(|n| Composition::partitions(n).len()).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11, 15]);
        let c: Vec<usize> = (1..=6).map(|n| Composition::compositions(n).len()).collect();
        assert_eq!(c, vec![1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn parse_and_display() {
        let c: Composition = "2, 3,1,1".parse().unwrap();
        assert_eq!(c.to_string(), "(2,3,1,1)");
        assert!("2,x".parse::<Composition>().is_err());
    }
}
