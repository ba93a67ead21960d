//! The affine paving of `Hess(X_λ, h)`: one cell per `h`-strict filling,
//! of dimension the number of Hessenberg inversions.

mod cells;
mod inversions;
mod profile;

pub use cells::{
    betti_numbers, enumerate_cells, enumerate_cells_with_workers, poincare, r0_tableau, CellDescriptor,
    PoincareData,
};
pub use inversions::{hessenberg_inversions, hessenberg_inversions_of, springer_inversions, InversionSet};
pub use profile::{column_sort_trace, inversion_profile, InversionProfile, SortStep};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Composition, HessenbergFunction, Permutation, Tableau};

    /// inv_{λ,h}(w) ⊆ inv_λ(w) ⊆ inv(w), with monotonicity in h; exhaustive for n ≤ 5.
    #[test]
    fn inversion_sets_nest() {
        for n in 1..=5 {
            let hs = HessenbergFunction::all(n);
            for shape in Composition::compositions(n) {
                for w in Permutation::all(n) {
                    let springer = springer_inversions(&w, &shape).unwrap();
                    assert!(springer.pairs().is_subset(&w.inversions()));
                    let per_h: Vec<InversionSet> =
                        hs.iter().map(|h| hessenberg_inversions(&w, &shape, h).unwrap()).collect();
                    for (a, ha) in hs.iter().enumerate() {
                        assert!(per_h[a].is_subset(&springer));
                        for (b, hb) in hs.iter().enumerate() {
                            if ha.leq(hb).unwrap() {
                                assert!(per_h[a].is_subset(&per_h[b]));
                            }
                        }
                    }
                }
            }
        }
    }

    /// For fixed k, the ℓ's in inv^k lie in distinct rows (row-strict fillings).
    #[test]
    fn same_k_pairs_use_distinct_rows() {
        for n in 1..=6 {
            for shape in Composition::compositions(n) {
                for t in crate::combinatorics::row_strict_tableaux(&shape) {
                    let inv = hessenberg_inversions_of(&t, &HessenbergFunction::springer(n)).unwrap();
                    for (&k, ls) in inv.by_k() {
                        let mut rows: Vec<usize> = ls.iter().map(|&l| t.position(l).row).collect();
                        rows.push(t.position(k).row);
                        let before = rows.len();
                        rows.sort_unstable();
                        rows.dedup();
                        assert_eq!(rows.len(), before, "{t} k={k}");
                    }
                }
            }
        }
    }

    /// Deleting the box holding n drops exactly the k = n Springer inversions.
    #[test]
    fn springer_inversions_restrict_to_y() {
        for n in 2..=6 {
            for shape in Composition::compositions(n) {
                for t in crate::combinatorics::row_strict_tableaux(&shape) {
                    let w = t.permutation();
                    let (_, y) = w.factorize();
                    let (shape_y, t_y) = t.delete_last_box().unwrap();
                    let y = y.restrict().unwrap();
                    assert_eq!(Tableau::of_permutation(&y, &shape_y).unwrap(), t_y);
                    let inv_w = springer_inversions(&w, &shape).unwrap();
                    let inv_y = springer_inversions(&y, &shape_y).unwrap();
                    let expected: Vec<_> = inv_w.iter().filter(|&(k, _)| k != n).collect();
                    assert_eq!(inv_y.iter().collect::<Vec<_>>(), expected);
                }
            }
        }
    }

    #[test]
    fn one_column_poincare_is_mahonian() {
        for n in 1..=6 {
            let shape = Composition::new(vec![1; n]).unwrap();
            let p = poincare(&shape, &HessenbergFunction::springer(n)).unwrap();
            let mut mahonian = vec![0u64; n * (n - 1) / 2 + 1];
            for w in Permutation::all(n) {
                mahonian[w.length()] += 1;
            }
            assert_eq!(p.coeffs, mahonian);
        }
    }
}
