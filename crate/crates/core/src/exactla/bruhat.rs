//! Bruhat cells of the flag variety and the factorization `U^w = U_i · v U^y v⁻¹`
//! that lowers `n` by one.

use std::collections::BTreeMap;

use super::bk::bk_generator;
use super::matrix::ExactMatrix;
use super::scalar::Scalar;
use crate::combinatorics::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::paving::springer_inversions;

/// The positions `(a, b)`, `a < b`, `w⁻¹(a) > w⁻¹(b)`, free in `U^w`, so that
/// `U^w wB = BwB` with `U^w ≅ C^{ℓ(w)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentPattern {
    n: usize,
    free: Vec<(usize, usize)>,
}

impl UnipotentPattern {
    pub fn for_permutation(w: &Permutation) -> Self {
        let winv = w.inverse();
        let n = w.n();
        let mut free = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if winv.get(a) > winv.get(b) {
                    free.push((a, b));
                }
            }
        }
        Self { n, free }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.free
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    /// Whether `u` is unitriangular with support inside the pattern.
    pub fn contains<S: Scalar>(&self, u: &ExactMatrix<S>) -> bool {
        u.rows() == self.n
            && u.is_upper_unitriangular()
            && u.support().iter().all(|p| self.free.binary_search(p).is_ok())
    }

    /// The element with the given values at the free positions, in order.
    pub fn element<S: Scalar>(&self, values: &[S]) -> Result<ExactMatrix<S>> {
        if values.len() != self.free.len() {
            return Err(Error::SizeMismatch { expected: self.free.len(), found: values.len() });
        }
        let mut u = ExactMatrix::identity(self.n);
        for (&(a, b), x) in self.free.iter().zip(values) {
            u.set(a, b, x.clone());
        }
        Ok(u)
    }
}

fn leading_row<S: Scalar>(v: &[S]) -> Option<usize> {
    v.iter().rposition(|x| !x.is_zero()).map(|i| i + 1)
}

/// Writes the flag of `m` as `u · wE_•` with `u ∈ U^w`. Returns `(w, u)`.
///
/// Column `j` is reduced against the already normalized columns until it is
/// zero at their pivot rows; its bottom nonzero entry must then be a unit.
pub fn bruhat_canonical_form<S: Scalar>(m: &ExactMatrix<S>) -> Result<(Permutation, ExactMatrix<S>)> {
    if !m.is_square() {
        return Err(Error::SizeMismatch { expected: m.rows(), found: m.cols() });
    }
    let n = m.rows();
    let mut pivots: BTreeMap<usize, Vec<S>> = BTreeMap::new();
    let mut word = Vec::with_capacity(n);
    let mut u = ExactMatrix::identity(n);
    for j in 1..=n {
        let mut v = m.column(j);
        for (&p, col) in pivots.iter().rev() {
            let c = v[p - 1].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(col).take(p) {
                if !y.is_zero() {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        let a = leading_row(&v).ok_or(Error::SingularMatrix)?;
        let inv = v[a - 1].unit_inverse().ok_or(Error::NonUnitPivot)?;
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        u.set_column(a, &v);
        pivots.insert(a, v);
        word.push(a);
    }
    Ok((Permutation::new(word)?, u))
}

/// `u = u_i · v u_0 v⁻¹` for `u ∈ U^w`, `w = v ∘ y`, `i = w(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnipotentFactors<S> {
    pub v: Permutation,
    pub y: Permutation,
    /// `I` plus entries in row `i` only.
    pub u_i: ExactMatrix<S>,
    /// In `U^y`, with last row and column trivial.
    pub u_0: ExactMatrix<S>,
}

/// Splits off row `i = w(n)` of `u ∈ U^w`.
pub fn factor_unipotent<S: Scalar>(u: &ExactMatrix<S>, w: &Permutation) -> Result<UnipotentFactors<S>> {
    let n = w.n();
    if u.rows() != n || !u.is_square() {
        return Err(Error::SizeMismatch { expected: n, found: u.rows() });
    }
    if !UnipotentPattern::for_permutation(w).contains(u) {
        return Err(Error::NotInPattern);
    }
    let i = w.get(n);
    let (v, y) = w.factorize();
    let uinv = u.inverse()?;
    let mut row = u.row(i);
    row[i - 1] = S::zero();
    let mut u_i = ExactMatrix::identity(n);
    let mut u_i_inv = ExactMatrix::identity(n);
    for b in 1..=n {
        let r = (1..=n).fold(S::zero(), |acc, c| {
            if row[c - 1].is_zero() {
                acc
            } else {
                acc + row[c - 1].clone() * uinv.get(c, b).clone()
            }
        });
        if b != i && !r.is_zero() {
            u_i.set(i, b, r.clone());
            u_i_inv.set(i, b, -r);
        }
    }
    let u_0 = u_i_inv.mul(u)?.conjugate_by(&v);
    if !UnipotentPattern::for_permutation(&y).contains(&u_0) {
        return Err(Error::NotInPattern);
    }
    let back = u_i.mul(&u_0.conjugate_by(&v.inverse()))?;
    if &back != u {
        return Err(Error::NotInPattern);
    }
    Ok(UnipotentFactors { v, y, u_i, u_0 })
}

/// For `g_n ∈ B_n(w)`: `g_n = u_i · b_n` with `u_i` the row-`w(n)` part of
/// `g_n` and `v⁻¹ b_n v` fixing `e_n`. Returns `(u_i, b_n)`.
pub fn bn_split<S: Scalar>(
    g: &ExactMatrix<S>,
    w: &Permutation,
    shape: &Composition,
) -> Result<(ExactMatrix<S>, ExactMatrix<S>)> {
    let n = w.n();
    if g.rows() != n || !g.is_square() || shape.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: g.rows() });
    }
    let i = w.get(n);
    let inv = springer_inversions(w, shape)?;
    let coords: BTreeMap<(usize, usize), S> =
        inv.level(n).iter().map(|&l| ((i, w.get(l)), g.get(i, w.get(l)).clone())).collect();
    if &bk_generator(w, shape, n, &coords)? != g {
        return Err(Error::NotInBn);
    }
    let mut u_i = ExactMatrix::identity(n);
    let mut u_i_inv = ExactMatrix::identity(n);
    for b in (1..=n).filter(|&b| b != i) {
        let x = g.get(i, b);
        if !x.is_zero() {
            u_i.set(i, b, x.clone());
            u_i_inv.set(i, b, -x.clone());
        }
    }
    let b_n = u_i_inv.mul(g)?;
    let (v, _) = w.factorize();
    let c = b_n.conjugate_by(&v);
    let fixes_last = (1..n).all(|a| c.get(a, n).is_zero() && c.get(n, a).is_zero());
    if !c.is_upper_unitriangular() || !fixes_last {
        return Err(Error::NotInBn);
    }
    Ok((u_i, b_n))
}

/// The image of a flag under `BwB/B → ByB/B ⊂ Fl(C^{n-1})`: the top-left
/// block of `u_0 · yE_•`. Returns the restricted `y` and that block.
pub fn project_cell<S: Scalar>(m: &ExactMatrix<S>) -> Result<(Permutation, ExactMatrix<S>)> {
    let (w, u) = bruhat_canonical_form(m)?;
    let f = factor_unipotent(&u, &w)?;
    let y = f.y.restrict().expect("y fixes n");
    let block = f.u_0.mul(&ExactMatrix::permutation(&f.y))?.top_left(w.n() - 1);
    Ok((y, block))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::poly::{Poly, Var};
    use crate::exactla::scalar::Fp;
    use num_rational::BigRational;

    type F2 = Fp<2>;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn x(a: usize, b: usize) -> Poly {
        Poly::var(Var::x(a, b))
    }

    #[test]
    fn canonical_form_over_f2() {
        let m = ExactMatrix::from_rows(vec![vec![F2::new(1), F2::new(0)], vec![F2::new(1), F2::new(1)]]).unwrap();
        let (w, u) = bruhat_canonical_form(&m).unwrap();
        assert_eq!(w, perm("2,1"));
        assert_eq!(u, ExactMatrix::from_rows(vec![vec![F2::new(1), F2::new(1)], vec![F2::new(0), F2::new(1)]]).unwrap());
        assert_eq!(bruhat_canonical_form(&ExactMatrix::<F2>::zero(2, 2)), Err(Error::SingularMatrix));
    }

    #[test]
    fn canonical_form_is_invariant_under_borel() {
        type Q = BigRational;
        let w = perm("3,1,4,2");
        let pattern = UnipotentPattern::for_permutation(&w);
        let values: Vec<Q> = (1..=pattern.dimension() as i64).map(Q::from_i64).collect();
        let u = pattern.element(&values).unwrap();
        let mut b = ExactMatrix::<Q>::identity(4);
        b.set(1, 1, Q::from_i64(2));
        b.set(1, 3, Q::from_i64(-5));
        b.set(2, 4, Q::from_i64(7));
        b.set(4, 4, Q::from_i64(3));
        let m = u.mul(&ExactMatrix::permutation(&w)).unwrap().mul(&b).unwrap();
        assert_eq!(bruhat_canonical_form(&m).unwrap(), (w, u));
    }

    #[test]
    fn factorization_of_generic_unipotents() {
        for w in Permutation::all(4) {
            let pattern = UnipotentPattern::for_permutation(&w);
            let values: Vec<Poly> = pattern.positions().iter().map(|&(a, b)| x(a, b)).collect();
            let u = pattern.element(&values).unwrap();
            let f = factor_unipotent(&u, &w).unwrap();
            let i = w.get(4);
            assert!(f.u_i.support().iter().all(|&(a, _)| a == i));
            assert_eq!(f.u_i.mul(&f.u_0.conjugate_by(&f.v.inverse())).unwrap(), u);
        }
    }

    #[test]
    fn split_of_b6() {
        let shape = Composition::new(vec![2, 2, 2]).unwrap();
        let w = perm("3,6,2,1,5,4");
        let g6 = crate::exactla::bk::bk_symbolic(&w, &shape, 6, 0).unwrap();
        let (u4, b6) = bn_split(&g6, &w, &shape).unwrap();
        let mut eu = ExactMatrix::identity(6);
        eu.set(4, 5, x(4, 5));
        eu.set(4, 6, x(4, 6));
        let mut eb = ExactMatrix::identity(6);
        eb.set(1, 2, x(4, 5));
        eb.set(1, 3, x(4, 6));
        assert_eq!(u4, eu);
        assert_eq!(b6, eb);
        let mut not_bn = g6.clone();
        not_bn.set(1, 2, Poly::zero());
        assert_eq!(bn_split(&not_bn, &w, &shape), Err(Error::NotInBn));
    }

    #[test]
    fn projection_drops_last_box() {
        let w = perm("2,3,1");
        let pattern = UnipotentPattern::for_permutation(&w);
        let u = pattern.element(&[x(1, 2), x(1, 3)]).unwrap();
        let m = u.mul(&ExactMatrix::permutation(&w)).unwrap();
        let (y, block) = project_cell(&m).unwrap();
        assert_eq!(y, perm("1,2"));
        assert!(block.is_identity());
        assert_eq!(factor_unipotent(&ExactMatrix::<Poly>::identity(3), &w).unwrap().u_0, ExactMatrix::identity(3));
        assert_eq!(factor_unipotent(&ExactMatrix::<Poly>::unit(3, 2, 3).add(&ExactMatrix::identity(3)).unwrap(), &w), Err(Error::NotInPattern));
    }
}
