use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::combinatorics::{Composition, HessenbergFunction, Permutation, Tableau};
use crate::error::{Error, Result};

/// A set of pairs `(k, ℓ)` with `k > ℓ`, also grouped by `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InversionSet {
    pairs: BTreeSet<(usize, usize)>,
    #[serde(skip)]
    by_k: BTreeMap<usize, Vec<usize>>,
}

impl InversionSet {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        let mut by_k: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(k, l) in &pairs {
            debug_assert!(k > l);
            by_k.entry(k).or_default().push(l);
        }
        Self { pairs, by_k }
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, k: usize, l: usize) -> bool {
        self.pairs.contains(&(k, l))
    }

    /// The `ℓ`s with `(k, ℓ)` in the set, increasing.
    pub fn level(&self, k: usize) -> &[usize] {
        self.by_k.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn by_k(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.by_k
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::from_pairs(self.pairs.difference(&other.pairs).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }
}

/// Hessenberg inversions of a filling: pairs `(k, ℓ)` with `k > ℓ` such that
/// `k` sits below `ℓ` in the same column, or anywhere in a column strictly left
/// of `ℓ`'s, and `k ≤ h(r)` where `r` is directly right of `ℓ`. When `ℓ` ends
/// its row the second condition is vacuous.
pub fn hessenberg_inversions_of(r: &Tableau, h: &HessenbergFunction) -> Result<InversionSet> {
    let n = r.size();
    if h.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: h.n() });
    }
    let mut pairs = Vec::new();
    for l in 1..=n {
        let pl = r.position(l);
        let bound = r.right_of(l).map(|right| h.get(right));
        for k in l + 1..=n {
            if bound.is_some_and(|b| k > b) {
                continue;
            }
            let pk = r.position(k);
            if pk.col < pl.col || (pk.col == pl.col && pk.row > pl.row) {
                pairs.push((k, l));
            }
        }
    }
    Ok(InversionSet::from_pairs(pairs))
}

/// `inv_{λ,h}(w)`, computed on `R(w)`.
pub fn hessenberg_inversions(w: &Permutation, shape: &Composition, h: &HessenbergFunction) -> Result<InversionSet> {
    hessenberg_inversions_of(&Tableau::of_permutation(w, shape)?, h)
}

/// `inv_λ(w)`, the Hessenberg inversions for `h = (0, 1, …, n-1)`.
pub fn springer_inversions(w: &Permutation, shape: &Composition) -> Result<InversionSet> {
    hessenberg_inversions(w, shape, &HessenbergFunction::springer(w.n()))
}
