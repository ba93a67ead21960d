use super::matrix::{Echelon, ExactMatrix};
use super::scalar::Scalar;
use crate::combinatorics::{Composition, HessenbergFunction, Permutation, Tableau};
use crate::error::{Error, Result};

/// A full flag `V_i = span(v_1, …, v_i)`, stored as the matrix `(v_1 | … | v_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Flag<S> {
    matrix: ExactMatrix<S>,
}

impl<S: Scalar> Flag<S> {
    /// Fails unless the columns are independent (for every value of the
    /// variables, over a polynomial domain).
    pub fn from_matrix(matrix: ExactMatrix<S>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::SizeMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        if matrix.rank()? != matrix.rows() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: ExactMatrix<S>) -> Self {
        Self { matrix }
    }

    /// `E_•`.
    pub fn standard(n: usize) -> Self {
        Self { matrix: ExactMatrix::identity(n) }
    }

    /// `wE_• = (e_{w(1)} | … | e_{w(n)})`.
    pub fn of_permutation(w: &Permutation) -> Self {
        Self { matrix: ExactMatrix::permutation(w) }
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ExactMatrix<S> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ExactMatrix<S> {
        self.matrix
    }

    /// `v_j`, 1-based.
    pub fn column(&self, j: usize) -> Vec<S> {
        self.matrix.column(j)
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        self.matrix.columns()
    }

    /// `g · V_•`.
    pub fn translate(&self, g: &ExactMatrix<S>) -> Result<Self> {
        Ok(Self { matrix: g.mul(&self.matrix)? })
    }
}

/// `X_λ = Σ E_{ℓr}` over horizontally adjacent pairs `ℓ → r` of the base filling.
pub fn nilpotent_matrix<S: Scalar>(shape: &Composition) -> ExactMatrix<S> {
    let base = Tableau::base_filling(shape);
    let n = shape.size();
    let mut x = ExactMatrix::zero(n, n);
    for row in base.rows() {
        for pair in row.windows(2) {
            x.set(pair[0], pair[1], S::one());
        }
    }
    x
}

/// Whether `M` lies in `H(h) = span{E_ij : i ≤ h(j)}`.
pub fn hessenberg_space_contains<S: Scalar>(m: &ExactMatrix<S>, h: &HessenbergFunction) -> Result<bool> {
    if !m.is_square() || m.rows() != h.n() {
        return Err(Error::SizeMismatch { expected: h.n(), found: m.rows() });
    }
    let n = h.n();
    Ok((1..=n).all(|j| (h.get(j) + 1..=n).all(|i| m.get(i, j).is_zero())))
}

/// Whether `X v_i ∈ span(v_1, …, v_{h(i)})` for every `i`. Over polynomials the
/// answer is `true` only when the containment holds identically.
pub fn verify_flag_membership<S: Scalar>(
    flag: &Flag<S>,
    x: &ExactMatrix<S>,
    h: &HessenbergFunction,
) -> Result<bool> {
    let n = flag.n();
    if x.rows() != n || !x.is_square() {
        return Err(Error::SizeMismatch { expected: n, found: x.rows() });
    }
    if h.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: h.n() });
    }
    let columns = flag.columns();
    let mut span = Echelon::new(n);
    let mut filled = 0;
    for i in 1..=n {
        while filled < h.get(i) {
            if !span.insert(columns[filled].clone())? {
                return Err(Error::SingularMatrix);
            }
            filled += 1;
        }
        if !span.contains(x.mul_vec(&columns[i - 1])?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn nilpotent_matrix_examples() {
        let x = nilpotent_matrix::<Q>(&comp(&[2, 3, 1, 1]));
        assert_eq!(x.support(), vec![(3, 5), (4, 6), (5, 7)]);
        assert!(nilpotent_matrix::<Q>(&comp(&[1, 1, 1])).is_zero());
        let j = nilpotent_matrix::<Q>(&comp(&[4]));
        assert_eq!(j.support(), vec![(1, 2), (2, 3), (3, 4)]);
        assert!(hessenberg_space_contains(&x, &HessenbergFunction::springer(7)).unwrap());
    }

    #[test]
    fn hessenberg_space() {
        let h = HessenbergFunction::new(vec![0, 1, 1]).unwrap();
        assert!(hessenberg_space_contains(&ExactMatrix::<Q>::zero(3, 3), &h).unwrap());
        assert!(!hessenberg_space_contains(&ExactMatrix::<Q>::identity(3), &h).unwrap());
        assert!(hessenberg_space_contains(&ExactMatrix::<Q>::unit(3, 1, 3), &h).unwrap());
        assert!(!hessenberg_space_contains(&ExactMatrix::<Q>::unit(3, 2, 3), &h).unwrap());
    }

    #[test]
    fn membership_of_small_flags() {
        let x = nilpotent_matrix::<Q>(&comp(&[2]));
        let h = HessenbergFunction::springer(2);
        assert!(verify_flag_membership(&Flag::standard(2), &x, &h).unwrap());
        let s1 = Flag::of_permutation(&"2,1".parse().unwrap());
        assert!(!verify_flag_membership(&s1, &x, &h).unwrap());
        let singular = ExactMatrix::<Q>::zero(2, 2);
        assert_eq!(Flag::from_matrix(singular), Err(Error::SingularMatrix));
    }
}
