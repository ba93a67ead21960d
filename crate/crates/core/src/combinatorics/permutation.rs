use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::composition::parse_list;
use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
///
/// The word is stored 0-indexed (`word[i - 1] = w(i)`) but every public
/// method speaks 1-based positions and values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: impl Into<Vec<usize>>) -> Result<Self> {
        let word = word.into();
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self { word: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { word: inv }
    }

    /// The composite `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Self { word: other.word.iter().map(|&v| self.word[v - 1]).collect() }
    }

    /// `inv(w) = {(i, j) : i > j, w(i) < w(j)}`, larger position first.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..i {
                if self.get(i) < self.get(j) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Bruhat length, the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in 0..i {
                if self.word[i] < self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Factors `w = v ∘ y` where `v = s_i s_{i+1} ⋯ s_{n-1}` for `i = w(n)` and `y(n) = n`.
    ///
    /// `v` has `i` in position `n` and the other values increasing in positions
    /// `1..n-1`; `y` keeps the relative order of `w(1), …, w(n-1)`.
    pub fn factorize(&self) -> (Permutation, Permutation) {
        let n = self.n();
        if n == 0 {
            return (self.clone(), self.clone());
        }
        let i = self.get(n);
        let mut v: Vec<usize> = (1..=n).filter(|&x| x != i).collect();
        v.push(i);
        let mut y: Vec<usize> = self.word[..n - 1].iter().map(|&x| if x < i { x } else { x - 1 }).collect();
        y.push(n);
        (Self { word: v }, Self { word: y })
    }

    /// Drops the fixed point `n` of a permutation with `w(n) = n`.
    pub fn restrict(&self) -> Option<Self> {
        let n = self.n();
        if n == 0 || self.get(n) != n {
            return None;
        }
        Some(Self { word: self.word[..n - 1].to_vec() })
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self { word: cur.clone() });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `3,4,1,2` or `[3,4,1,2]`.
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_list(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
