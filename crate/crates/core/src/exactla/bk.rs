//! The subgroups `B_k(w)` and the sets `D_w = {g_n ⋯ g_2 · wE_•}` they sweep out.
//!
//! A coordinate of `g_k ∈ B_k(w)` is keyed by `(w(k), w(ℓ))` for a Springer
//! inversion `(k, ℓ)`; since `w` is a bijection these keys are distinct across
//! all `k`, so one map from keys to values describes a whole point of `D_w`.

use std::collections::{BTreeMap, BTreeSet};

use super::flag::{nilpotent_matrix, Flag};
use super::matrix::ExactMatrix;
use super::poly::{Poly, Var};
use super::scalar::Scalar;
use crate::combinatorics::{Composition, HessenbergFunction, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::paving::{hessenberg_inversions_of, InversionSet};

fn row_strict_tableau(w: &Permutation, shape: &Composition) -> Result<Tableau> {
    let t = Tableau::of_permutation(w, shape)?;
    if !t.is_row_strict() {
        return Err(Error::NotRowStrict);
    }
    Ok(t)
}

fn springer_of(t: &Tableau) -> InversionSet {
    hessenberg_inversions_of(t, &HessenbergFunction::springer(t.size())).expect("sizes agree")
}

/// Coordinate keys `(w(k), w(ℓ))` of `B_k(w)`, one per `(k, ℓ) ∈ inv_λ^k(w)`.
pub fn bk_keys(w: &Permutation, shape: &Composition, k: usize) -> Result<Vec<(usize, usize)>> {
    let t = row_strict_tableau(w, shape)?;
    Ok(springer_of(&t).level(k).iter().map(|&l| (w.get(k), w.get(l))).collect())
}

/// The element of `B_k(w)` with the given coordinates: for each `(k, ℓ)` and
/// each `m ≥ 0`, `g_k e_{w(j)} = e_{w(j)} + x_{w(k)w(ℓ)} X_λ^m e_{w(k)}` where
/// `e_{w(j)} = X_λ^m e_{w(ℓ)}`. Keys must be exactly [`bk_keys`].
pub fn bk_generator<S: Scalar>(
    w: &Permutation,
    shape: &Composition,
    k: usize,
    coords: &BTreeMap<(usize, usize), S>,
) -> Result<ExactMatrix<S>> {
    let t = row_strict_tableau(w, shape)?;
    let level: Vec<usize> = springer_of(&t).level(k).to_vec();
    let mut expected: Vec<(usize, usize)> = level.iter().map(|&l| (w.get(k), w.get(l))).collect();
    expected.sort_unstable();
    if coords.keys().copied().collect::<Vec<_>>() != expected {
        return Err(Error::WrongCoordinates { expected });
    }
    let mut g = ExactMatrix::identity(w.n());
    for &l in &level {
        let x = &coords[&(w.get(k), w.get(l))];
        apply_coordinate(&mut g, &t, w, k, l, x);
    }
    Ok(g)
}

fn apply_coordinate<S: Scalar>(g: &mut ExactMatrix<S>, t: &Tableau, w: &Permutation, k: usize, l: usize, x: &S) {
    for m in 0.. {
        let (Some(j), Some(kk)) = (t.left_by(l, m), t.left_by(k, m)) else { break };
        g.add_to(w.get(kk), w.get(j), x.clone());
    }
}

/// `B_k(w)` with symbolic coordinates from variable family `set`.
pub fn bk_symbolic(w: &Permutation, shape: &Composition, k: usize, set: u8) -> Result<ExactMatrix<Poly>> {
    let coords = bk_keys(w, shape, k)?
        .into_iter()
        .map(|(a, b)| ((a, b), Poly::var(Var::with_set(set, a, b))))
        .collect();
    bk_generator(w, shape, k, &coords)
}

/// All coordinate keys of `D_w`, ordered by descending `k`, then descending `w(ℓ)`.
/// This is the order of the isomorphism `D_w ≅ C^{d_w}` used throughout.
pub fn generic_coordinates(w: &Permutation, shape: &Composition) -> Result<Vec<(usize, usize)>> {
    let t = row_strict_tableau(w, shape)?;
    let inv = springer_of(&t);
    let mut keys = Vec::new();
    for k in (2..=w.n()).rev() {
        let mut level: Vec<usize> = inv.level(k).iter().map(|&l| w.get(l)).collect();
        level.sort_unstable_by(|a, b| b.cmp(a));
        keys.extend(level.into_iter().map(|wl| (w.get(k), wl)));
    }
    Ok(keys)
}

/// `g_n ⋯ g_2 · wE_•` with every coordinate taken from `coords`, whose keys
/// must be exactly [`generic_coordinates`].
pub fn dw_flag<S: Scalar>(
    w: &Permutation,
    shape: &Composition,
    coords: &BTreeMap<(usize, usize), S>,
) -> Result<Flag<S>> {
    let t = row_strict_tableau(w, shape)?;
    let inv = springer_of(&t);
    let expected = generic_coordinates(w, shape)?;
    if coords.len() != expected.len() || expected.iter().any(|k| !coords.contains_key(k)) {
        let mut expected = expected;
        expected.sort_unstable();
        return Err(Error::WrongCoordinates { expected });
    }
    let mut m = ExactMatrix::permutation(w);
    for k in 2..=w.n() {
        let mut g = ExactMatrix::identity(w.n());
        for &l in inv.level(k) {
            apply_coordinate(&mut g, &t, w, k, l, &coords[&(w.get(k), w.get(l))]);
        }
        if !g.is_identity() {
            m = g.mul(&m)?;
        }
    }
    Ok(Flag::from_matrix_unchecked(m))
}

/// The generic point of `D_w`, with variable `x_{w(k)w(ℓ)}` for each coordinate.
pub fn generic_flag(w: &Permutation, shape: &Composition) -> Result<Flag<Poly>> {
    let coords = generic_coordinates(w, shape)?
        .into_iter()
        .map(|(a, b)| ((a, b), Poly::var(Var::x(a, b))))
        .collect();
    dw_flag(w, shape, &coords)
}

/// Keys `(w(k), w(ℓ))` for `(k, ℓ) ∈ inv_λ(w) ∖ inv_{λ,h}(w)`: the coordinates
/// that vanish on `D_w ∩ Hess(X_λ, h)`.
///
/// Only row-strictness is required. When `R(w)` is not `h`-strict the
/// intersection is empty and the substituted flag is not in `Hess(X_λ, h)`.
pub fn hess_zero_coordinates(
    w: &Permutation,
    shape: &Composition,
    h: &HessenbergFunction,
) -> Result<BTreeSet<(usize, usize)>> {
    let t = row_strict_tableau(w, shape)?;
    let hess = hessenberg_inversions_of(&t, h)?;
    Ok(springer_of(&t).difference(&hess).iter().map(|(k, l)| (w.get(k), w.get(l))).collect())
}

/// The generic point of `D_w ∩ Hess(X_λ, h)`: [`generic_flag`] with the
/// coordinates of [`hess_zero_coordinates`] set to zero.
pub fn generic_hess_flag(w: &Permutation, shape: &Composition, h: &HessenbergFunction) -> Result<Flag<Poly>> {
    let zeros = hess_zero_coordinates(w, shape, h)?;
    let coords = generic_coordinates(w, shape)?
        .into_iter()
        .map(|key| {
            let v = if zeros.contains(&key) { Poly::zero() } else { Poly::var(Var::x(key.0, key.1)) };
            (key, v)
        })
        .collect();
    dw_flag(w, shape, &coords)
}

/// `v_ℓ − X_λ v_r − Σ_{(t,ℓ) ∈ inv_λ(w)} x_{w(t)w(ℓ)} v_t` on the generic flag,
/// where `r` is directly right of `ℓ` in `R(w)`. Identically zero.
pub fn difference_residual(w: &Permutation, shape: &Composition, l: usize) -> Result<Vec<Poly>> {
    let t = row_strict_tableau(w, shape)?;
    if l == 0 || l > w.n() {
        return Err(Error::SizeMismatch { expected: w.n(), found: l });
    }
    let r = t.right_of(l).ok_or(Error::AtRowEnd(l))?;
    let flag = generic_flag(w, shape)?;
    let x = nilpotent_matrix::<Poly>(shape);
    let mut res = flag.column(l);
    let xv = x.mul_vec(&flag.column(r))?;
    for (a, b) in res.iter_mut().zip(xv) {
        *a = a.clone() - b;
    }
    for (tt, ll) in springer_of(&t).iter() {
        if ll != l {
            continue;
        }
        let coeff = Poly::var(Var::x(w.get(tt), w.get(l)));
        for (a, b) in res.iter_mut().zip(flag.column(tt)) {
            *a = a.clone() - coeff.clone() * b;
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn x(a: usize, b: usize) -> Poly {
        Poly::var(Var::x(a, b))
    }

    /// `Σ c·e_a` as a column vector of length `n`.
    fn vector(n: usize, terms: &[(usize, Poly)]) -> Vec<Poly> {
        let mut v = vec![Poly::zero(); n];
        for (a, c) in terms {
            v[a - 1] = v[a - 1].clone() + c.clone();
        }
        v
    }

    fn matrix(n: usize, terms: &[(usize, usize, Poly)]) -> ExactMatrix<Poly> {
        let mut m = ExactMatrix::identity(n);
        for (a, b, c) in terms {
            m.add_to(*a, *b, c.clone());
        }
        m
    }

    #[test]
    fn b4_and_b6_for_322() {
        let shape = comp(&[3, 2, 2]);
        let w = perm("3,2,6,1,7,4,5");
        assert_eq!(bk_keys(&w, &shape, 4).unwrap(), vec![(1, 2), (1, 6)]);
        assert_eq!(bk_symbolic(&w, &shape, 4, 0).unwrap(), matrix(7, &[(1, 2, x(1, 2)), (1, 6, x(1, 6))]));
        assert_eq!(bk_symbolic(&w, &shape, 6, 0).unwrap(), matrix(7, &[(4, 7, x(4, 7)), (1, 6, x(4, 7))]));
        assert!(bk_symbolic(&w, &shape, 3, 0).unwrap().is_identity());
    }

    #[test]
    fn all_bk_for_222() {
        let shape = comp(&[2, 2, 2]);
        let w = perm("3,6,2,1,5,4");
        assert!(bk_symbolic(&w, &shape, 2, 0).unwrap().is_identity());
        assert_eq!(bk_symbolic(&w, &shape, 3, 0).unwrap(), matrix(6, &[(2, 6, x(2, 6))]));
        assert_eq!(bk_symbolic(&w, &shape, 4, 0).unwrap(), matrix(6, &[(1, 2, x(1, 2)), (1, 6, x(1, 6))]));
        assert_eq!(bk_symbolic(&w, &shape, 5, 0).unwrap(), matrix(6, &[(2, 3, x(5, 6)), (5, 6, x(5, 6))]));
        assert_eq!(
            bk_symbolic(&w, &shape, 6, 0).unwrap(),
            matrix(6, &[(1, 2, x(4, 5)), (1, 3, x(4, 6)), (4, 5, x(4, 5)), (4, 6, x(4, 6))])
        );
    }

    #[test]
    fn dw_columns_for_222() {
        let shape = comp(&[2, 2, 2]);
        let w = perm("3,6,2,1,5,4");
        let f = generic_flag(&w, &shape).unwrap();
        let one = Poly::one();
        let cols = [
            vector(6, &[(3, one.clone()), (1, x(4, 6)), (2, x(5, 6)), (1, x(5, 6) * x(4, 5))]),
            vector(
                6,
                &[
                    (6, one.clone()),
                    (4, x(4, 6)),
                    (5, x(5, 6)),
                    (4, x(5, 6) * x(4, 5)),
                    (1, x(1, 6)),
                    (2, x(2, 6)),
                    (1, x(2, 6) * x(4, 5)),
                    (1, x(2, 6) * x(1, 2)),
                ],
            ),
            vector(6, &[(2, one.clone()), (1, x(4, 5)), (1, x(1, 2))]),
            vector(6, &[(1, one.clone())]),
            vector(6, &[(5, one.clone()), (4, x(4, 5))]),
            vector(6, &[(4, one.clone())]),
        ];
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(&f.column(j + 1), c, "column {}", j + 1);
        }
        assert_eq!(
            generic_coordinates(&w, &shape).unwrap(),
            vec![(4, 6), (4, 5), (5, 6), (1, 6), (1, 2), (2, 6)]
        );
    }

    #[test]
    fn hess_substitution_for_222() {
        let shape = comp(&[2, 2, 2]);
        let w = perm("3,6,2,1,5,4");
        let h = HessenbergFunction::new(vec![0, 0, 1, 1, 3, 4]).unwrap();
        assert_eq!(hess_zero_coordinates(&w, &shape, &h).unwrap(), BTreeSet::from([(1, 2)]));
        let f = generic_hess_flag(&w, &shape, &h).unwrap();
        assert_eq!(f.column(3), vector(6, &[(2, Poly::one()), (1, x(4, 5))]));
        let springer = HessenbergFunction::springer(6);
        assert!(hess_zero_coordinates(&w, &shape, &springer).unwrap().is_empty());
        assert_eq!(generic_hess_flag(&w, &shape, &springer).unwrap(), generic_flag(&w, &shape).unwrap());

        let shape = comp(&[2, 3, 1, 1]);
        let w = perm("4,3,1,6,5,7,2");
        let h = HessenbergFunction::new(vec![0, 0, 1, 2, 3, 3, 3]).unwrap();
        assert_eq!(hess_zero_coordinates(&w, &shape, &h).unwrap(), BTreeSet::from([(w.get(3), w.get(1))]));

    }

    #[test]
    fn identity_gives_standard_flag() {
        for shape in Composition::compositions(4) {
            let f = generic_flag(&Permutation::identity(4), &shape).unwrap();
            assert_eq!(f, Flag::standard(4));
        }
    }

    #[test]
    fn residuals_vanish_on_examples() {
        let cases = [(comp(&[2, 2, 2]), perm("3,6,2,1,5,4")), (comp(&[3, 2, 2]), perm("3,2,6,1,7,4,5")), (comp(&[2]), Permutation::identity(2))];
        for (shape, w) in cases {
            let t = Tableau::of_permutation(&w, &shape).unwrap();
            for l in 1..=w.n() {
                if t.ends_row(l) {
                    assert_eq!(difference_residual(&w, &shape, l), Err(Error::AtRowEnd(l)));
                } else {
                    assert!(difference_residual(&w, &shape, l).unwrap().iter().all(Scalar::is_zero));
                }
            }
        }
    }

    #[test]
    fn input_errors() {
        let shape = comp(&[2]);
        let w = perm("2,1");
        assert_eq!(bk_keys(&w, &shape, 2), Err(Error::NotRowStrict));
        let shape = comp(&[1, 1]);
        let bad = BTreeMap::from([((9, 9), Poly::one())]);
        assert!(matches!(bk_generator(&w, &shape, 2, &bad), Err(Error::WrongCoordinates { .. })));
        assert!(bk_generator(&w, &shape, 2, &BTreeMap::from([((1, 2), Poly::one())])).is_ok());
    }
}
