//! Projection of a Springer fiber cell onto the fiber for λ with the box of `n`
//! removed. The naive projection of a point can leave the smaller fiber; it
//! stays inside once the row factor is stripped by an element of `B_n(w)`.

use hesspave::combinatorics::{Composition, HessenbergFunction, Permutation, Tableau};
use hesspave::exactla::{
    bk_generator, bk_keys, factor_unipotent, nilpotent_matrix, project_cell, verify_flag_membership, ExactMatrix,
    Flag, Fp, Scalar,
};
use hesspave::oracle::Oracle;

type F2 = Fp<2>;

fn setup() -> (Composition, Permutation, ExactMatrix<F2>) {
    let shape = Composition::new(vec![2, 2]).unwrap();
    let w: Permutation = "2,4,1,3".parse().unwrap();
    let mut u = ExactMatrix::<F2>::identity(4);
    u.set(1, 2, F2::one());
    u.set(3, 4, F2::one());
    (shape, w, u)
}

fn in_springer_fiber(m: &ExactMatrix<F2>, shape: &Composition) -> bool {
    let x = nilpotent_matrix::<F2>(shape);
    let h = HessenbergFunction::springer(shape.size());
    verify_flag_membership(&Flag::from_matrix(m.clone()).unwrap(), &x, &h).unwrap()
}

#[test]
fn naive_projection_leaves_the_fiber() {
    let (shape, w, u) = setup();
    let m = u.mul(&ExactMatrix::permutation(&w)).unwrap();
    assert!(in_springer_fiber(&m, &shape));

    let (shape_y, t_y) = Tableau::of_permutation(&w, &shape).unwrap().delete_last_box().unwrap();
    let (y, block) = project_cell(&m).unwrap();
    assert_eq!(y, t_y.permutation());
    assert!(!in_springer_fiber(&block, &shape_y));
}

#[test]
fn stripping_the_row_factor_fixes_it() {
    let (shape, w, u) = setup();
    let factors = factor_unipotent(&u, &w).unwrap();
    let i = w.get(w.n());
    let coords = bk_keys(&w, &shape, w.n())
        .unwrap()
        .into_iter()
        .map(|(a, b)| {
            assert_eq!(a, i);
            ((a, b), *factors.u_i.get(a, b))
        })
        .collect();
    let g_n = bk_generator(&w, &shape, w.n(), &coords).unwrap();
    let stripped = g_n.inverse().unwrap().mul(&u).unwrap().mul(&ExactMatrix::permutation(&w)).unwrap();
    assert!(in_springer_fiber(&stripped, &shape));

    let (shape_y, _) = Tableau::of_permutation(&w, &shape).unwrap().delete_last_box().unwrap();
    let (_, block) = project_cell(&stripped).unwrap();
    assert!(in_springer_fiber(&block, &shape_y));
}

#[test]
fn oracle_projection_check_holds_for_every_cell() {
    let oracle = Oracle::new(2).unwrap();
    for n in 2..=4 {
        for shape in Composition::compositions(n) {
            for t in hesspave::combinatorics::row_strict_tableaux(&shape) {
                let w = t.permutation();
                assert!(oracle.projection_check(&w, &shape).unwrap(), "λ={shape} w={w}");
            }
        }
    }
}
