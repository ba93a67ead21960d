use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{self, Composition, HessenbergFunction, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::paving::inversions::{hessenberg_inversions_of, InversionSet};

/// One affine cell `C_w ∩ Hess(X_λ, h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDescriptor {
    pub w: Permutation,
    pub tableau: Tableau,
    #[serde(rename = "hessenberg_inversions")]
    pub hess_inv: InversionSet,
    #[serde(rename = "springer_inversions")]
    pub springer_inv: InversionSet,
    pub dim: usize,
}

impl CellDescriptor {
    fn from_tableau(tableau: Tableau, h: &HessenbergFunction) -> Self {
        let springer = HessenbergFunction::springer(tableau.size());
        let hess_inv = hessenberg_inversions_of(&tableau, h).expect("sizes agree");
        let springer_inv = hessenberg_inversions_of(&tableau, &springer).expect("sizes agree");
        Self { w: tableau.permutation(), dim: hess_inv.len(), tableau, hess_inv, springer_inv }
    }
}

fn check_sizes(shape: &Composition, h: &HessenbergFunction) -> Result<()> {
    if shape.size() != h.n() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: h.n() });
    }
    Ok(())
}

/// Every cell of the paving, one per `h`-strict filling, ordered
/// lexicographically by `w`. An empty result means the variety is empty.
pub fn enumerate_cells(shape: &Composition, h: &HessenbergFunction) -> Result<Vec<CellDescriptor>> {
    enumerate_cells_with_workers(shape, h, 1)
}

/// As [`enumerate_cells`], splitting the search on the first box across `workers` threads.
pub fn enumerate_cells_with_workers(
    shape: &Composition,
    h: &HessenbergFunction,
    workers: usize,
) -> Result<Vec<CellDescriptor>> {
    check_sizes(shape, h)?;
    let mut cells: Vec<CellDescriptor> = if workers <= 1 {
        combinatorics::h_strict_tableaux(shape, h)
            .into_iter()
            .map(|t| CellDescriptor::from_tableau(t, h))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        let boxes = combinatorics::column_major_boxes(shape);
        let n = shape.size();
        pool.install(|| {
            (1..=n)
                .into_par_iter()
                .flat_map_iter(|first| {
                    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
                    let mut used = vec![false; n + 1];
                    let b = boxes[0];
                    rows[b.row - 1][b.col - 1] = first;
                    used[first] = true;
                    let mut out = Vec::new();
                    combinatorics::fill_h_strict(&boxes, 1, h, &mut rows, &mut used, &mut out);
                    out.into_iter().map(|t| CellDescriptor::from_tableau(t, h))
                })
                .collect()
        })
    };
    cells.sort_by(|a, b| a.w.cmp(&b.w));
    Ok(cells)
}

/// Cell counts by dimension; `coeffs[k]` is the rank of `H_c^{2k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareData {
    pub coeffs: Vec<u64>,
    pub betti_even: Vec<u64>,
}

impl PoincareData {
    pub fn from_cells(cells: &[CellDescriptor]) -> Self {
        let top = cells.iter().map(|c| c.dim).max();
        let mut coeffs = vec![0u64; top.map_or(0, |d| d + 1)];
        for c in cells {
            coeffs[c.dim] += 1;
        }
        Self { betti_even: coeffs.clone(), coeffs }
    }

    pub fn total_cells(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// `Σ c_k q^k`, the number of points over a field with `q` elements.
    pub fn evaluate(&self, q: u64) -> u128 {
        self.coeffs.iter().rev().fold(0u128, |acc, &c| acc * q as u128 + c as u128)
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

pub fn poincare(shape: &Composition, h: &HessenbergFunction) -> Result<PoincareData> {
    Ok(PoincareData::from_cells(&enumerate_cells(shape, h)?))
}

/// Ranks of `H_c^{2k}` for `k = 0, 1, …`; odd-degree groups vanish.
pub fn betti_numbers(shape: &Composition, h: &HessenbergFunction) -> Result<Vec<u64>> {
    Ok(poincare(shape, h)?.betti_even)
}

/// The greedy filling with no Hessenberg inversions: columns right to left,
/// each top to bottom, taking the largest unused value that keeps the filling
/// `h`-strict. `None` when some box cannot be filled.
pub fn r0_tableau(shape: &Composition, h: &HessenbergFunction) -> Result<Option<Tableau>> {
    check_sizes(shape, h)?;
    let n = shape.size();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut used = vec![false; n + 1];
    for col in (1..=shape.num_columns()).rev() {
        for row in shape.column_rows(col) {
            let right = rows[row - 1].get(col).copied();
            let choice = (1..=n).rev().find(|&v| !used[v] && right.is_none_or(|r| v <= h.get(r)));
            match choice {
                Some(v) => {
                    used[v] = true;
                    rows[row - 1][col - 1] = v;
                }
                None => return Ok(None),
            }
        }
    }
    Ok(Some(Tableau::from_rows(rows)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn hf(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_row_is_one_point() {
        let cells = enumerate_cells(&comp(&[2]), &hf(&[0, 1])).unwrap();
        assert_eq!(cells.len(), 1);
        assert!(cells[0].w.is_identity());
        assert_eq!(cells[0].dim, 0);
        assert_eq!(betti_numbers(&comp(&[2]), &hf(&[0, 1])).unwrap(), vec![1]);
    }

    #[test]
    fn one_column_with_zero_h() {
        let cells = enumerate_cells(&comp(&[1, 1]), &hf(&[0, 0])).unwrap();
        let dims: Vec<usize> = cells.iter().map(|c| c.dim).collect();
        assert_eq!(cells.len(), 2);
        assert_eq!(dims, vec![0, 1]);
        assert_eq!(poincare(&comp(&[1, 1]), &hf(&[0, 1])).unwrap().coeffs, vec![1, 1]);
    }

    #[test]
    fn example_cell_in_222() {
        let shape = comp(&[2, 2, 2]);
        let cells = enumerate_cells(&shape, &HessenbergFunction::springer(6)).unwrap();
        let w: Permutation = "3,6,2,1,5,4".parse().unwrap();
        let cell = cells.iter().find(|c| c.w == w).unwrap();
        assert_eq!(cell.dim, 6);
        assert_eq!(cells.len(), 90);
        assert!(cells.windows(2).all(|p| p[0].w < p[1].w));
        let p = poincare(&shape, &HessenbergFunction::springer(6)).unwrap();
        assert_eq!(p.coeffs.len(), 7);
        assert_eq!(p.coeffs[6], 5);
    }

    #[test]
    fn parallel_enumeration_is_identical() {
        let shape = comp(&[3, 2, 2]);
        let h = hf(&[0, 0, 1, 2, 3, 3, 5]);
        assert_eq!(
            enumerate_cells(&shape, &h).unwrap(),
            enumerate_cells_with_workers(&shape, &h, 4).unwrap()
        );
    }

    #[test]
    fn r0_examples() {
        let h = HessenbergFunction::new((1..=12).map(|i: usize| i.saturating_sub(3)).collect::<Vec<_>>()).unwrap();
        let r0 = r0_tableau(&comp(&[4, 4, 3, 1]), &h).unwrap().unwrap();
        assert_eq!(r0.rows(), &[vec![3, 6, 9, 12], vec![2, 5, 8, 11], vec![4, 7, 10], vec![1]]);

        for shape in Composition::compositions(5) {
            let r0 = r0_tableau(&shape, &HessenbergFunction::springer(5)).unwrap().unwrap();
            assert_eq!(r0, Tableau::base_filling(&shape));
        }

        let r0 = r0_tableau(&comp(&[1, 1]), &hf(&[0, 0])).unwrap().unwrap();
        assert_eq!(r0.rows(), &[vec![2], vec![1]]);

        assert_eq!(r0_tableau(&comp(&[2]), &hf(&[0, 0])).unwrap(), None);
        assert!(enumerate_cells(&comp(&[2]), &hf(&[0, 0])).unwrap().is_empty());
    }
}
