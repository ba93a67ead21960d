//! Compositions, Hessenberg functions, permutations and tableaux.
//!
//! Conventions: permutations are in one-line notation with 1-based values,
//! inversion pairs list the larger position first, and the base filling
//! numbers each column from the bottom up, left to right.

mod composition;
mod hessenberg;
mod permutation;
mod tableau;

pub(crate) use composition::parse_list;
pub use composition::Composition;
pub use hessenberg::HessenbergFunction;
pub use permutation::Permutation;
pub use tableau::{BoxPosition, Tableau};

use std::collections::BTreeSet;

use crate::error::Result;

pub fn base_filling(shape: &Composition) -> Tableau {
    Tableau::base_filling(shape)
}

pub fn tableau_of(w: &Permutation, shape: &Composition) -> Result<Tableau> {
    Tableau::of_permutation(w, shape)
}

pub fn is_row_strict(r: &Tableau) -> bool {
    r.is_row_strict()
}

pub fn is_h_strict(r: &Tableau, h: &HessenbergFunction) -> Result<bool> {
    r.is_h_strict(h)
}

pub fn standardize(r: &Tableau) -> Result<Tableau> {
    r.standardize()
}

pub fn inversions(w: &Permutation) -> BTreeSet<(usize, usize)> {
    w.inversions()
}

pub fn factorize(w: &Permutation) -> (Permutation, Permutation) {
    w.factorize()
}

pub fn delete_last_box(r: &Tableau) -> Result<(Composition, Tableau)> {
    r.delete_last_box()
}

pub fn h_leq(h1: &HessenbergFunction, h2: &HessenbergFunction) -> Result<bool> {
    h1.leq(h2)
}

/// All row-strict fillings of `shape`, i.e. `RS(λ)`.
pub fn row_strict_tableaux(shape: &Composition) -> Vec<Tableau> {
    h_strict_tableaux(shape, &HessenbergFunction::springer(shape.size()))
}

/// All `h`-strict fillings of `shape`, found by filling columns left to right
/// and pruning on the left neighbour. Output order is unspecified.
pub fn h_strict_tableaux(shape: &Composition, h: &HessenbergFunction) -> Vec<Tableau> {
    let mut out = Vec::new();
    let boxes = column_major_boxes(shape);
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut used = vec![false; shape.size() + 1];
    fill_h_strict(&boxes, 0, h, &mut rows, &mut used, &mut out);
    out
}

pub(crate) fn column_major_boxes(shape: &Composition) -> Vec<BoxPosition> {
    (1..=shape.num_columns())
        .flat_map(|col| shape.column_rows(col).into_iter().map(move |row| BoxPosition { row, col }))
        .collect()
}

pub(crate) fn fill_h_strict(
    boxes: &[BoxPosition],
    at: usize,
    h: &HessenbergFunction,
    rows: &mut Vec<Vec<usize>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Tableau>,
) {
    if at == boxes.len() {
        out.push(Tableau::from_rows(rows.clone()).expect("complete filling"));
        return;
    }
    let b = boxes[at];
    let left = if b.col > 1 { Some(rows[b.row - 1][b.col - 2]) } else { None };
    for v in 1..used.len() {
        if used[v] || left.is_some_and(|l| l > h.get(v)) {
            continue;
        }
        used[v] = true;
        rows[b.row - 1][b.col - 1] = v;
        fill_h_strict(boxes, at + 1, h, rows, used, out);
        used[v] = false;
    }
    rows[b.row - 1][b.col - 1] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn shape_and_perm() -> impl Strategy<Value = (Composition, Permutation)> {
        prop::collection::vec(0usize..4, 1..5)
            .prop_filter("nonempty", |p| p.iter().sum::<usize>() > 0)
            .prop_flat_map(|parts| {
                let shape = Composition::new(parts).unwrap();
                let n = shape.size();
                (Just(shape), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            })
            .prop_map(|(shape, word)| (shape, Permutation::new(word).unwrap()))
    }

    proptest! {
        #[test]
        fn tableau_of_inverts_the_base_filling((shape, w) in shape_and_perm()) {
            let base = base_filling(&shape);
            let r = tableau_of(&w, &shape).unwrap();
            let winv = w.inverse();
            for (row, base_row) in r.rows().iter().zip(base.rows()) {
                for (&v, &i) in row.iter().zip(base_row) {
                    prop_assert_eq!(v, winv.get(i));
                }
            }
            prop_assert_eq!(r.permutation(), w);
            prop_assert_eq!(r.shape(), &shape);
        }

        #[test]
        fn standardize_is_idempotent_and_keeps_columns((shape, w) in shape_and_perm()) {
            let r = tableau_of(&w, &shape).unwrap();
            prop_assume!(r.is_row_strict() && shape.is_partition());
            let s = standardize(&r).unwrap();
            prop_assert_eq!(standardize(&s).unwrap(), s.clone());
            for col in 1..=shape.num_columns() {
                let mut a: Vec<usize> = r.column(col).into_iter().map(|x| x.1).collect();
                let mut b: Vec<usize> = s.column(col).into_iter().map(|x| x.1).collect();
                a.sort_unstable();
                b.sort_unstable();
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn springer_strictness_is_row_strictness((shape, w) in shape_and_perm()) {
            let r = tableau_of(&w, &shape).unwrap();
            let h = HessenbergFunction::springer(shape.size());
            prop_assert_eq!(is_h_strict(&r, &h).unwrap(), is_row_strict(&r));
        }
    }

    /// If h1 ⪯ h2, every h1-strict tableau is h2-strict; exhaustive for n ≤ 5.
    #[test]
    fn strictness_is_monotone_in_h() {
        for n in 1..=5 {
            let hs = HessenbergFunction::all(n);
            for shape in Composition::compositions(n) {
                for w in Permutation::all(n) {
                    let r = tableau_of(&w, &shape).unwrap();
                    for h1 in &hs {
                        if !is_h_strict(&r, h1).unwrap() {
                            continue;
                        }
                        for h2 in &hs {
                            if h_leq(h1, h2).unwrap() {
                                assert!(is_h_strict(&r, h2).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn h_strict_enumeration_matches_filtering() {
        for n in 1..=5 {
            for shape in Composition::compositions(n) {
                for h in HessenbergFunction::all(n) {
                    let mut fast: Vec<Permutation> =
                        h_strict_tableaux(&shape, &h).iter().map(Tableau::permutation).collect();
                    fast.sort();
                    let slow: Vec<Permutation> = Permutation::all(n)
                        .into_iter()
                        .filter(|w| is_h_strict(&tableau_of(w, &shape).unwrap(), &h).unwrap())
                        .collect();
                    assert_eq!(fast, slow, "shape {shape} h {h}");
                }
            }
        }
    }
}
