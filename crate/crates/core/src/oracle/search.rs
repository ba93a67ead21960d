use crate::combinatorics::{HessenbergFunction, Permutation};
use crate::exactla::{ExactMatrix, FiniteField};

/// Depth-first enumeration of `{u ∈ U^w(F_q) : uwE_• ∈ Hess(X, h)}`.
///
/// Column `j` of `uw` is `e_{w(j)} + Σ c_a e_a` over rows `a < w(j)` with
/// `w⁻¹(a) > j`. The condition `X v_j ∈ V_{h(j)}` only involves columns already
/// fixed, so it is tested as soon as `v_j` is chosen.
pub(crate) struct CellSearch<'a, F> {
    w: &'a Permutation,
    winv: Permutation,
    x: &'a ExactMatrix<F>,
    h: &'a HessenbergFunction,
    free: Vec<Vec<usize>>,
    cols: Vec<Vec<F>>,
}

impl<'a, F: FiniteField> CellSearch<'a, F> {
    pub(crate) fn new(w: &'a Permutation, x: &'a ExactMatrix<F>, h: &'a HessenbergFunction) -> Self {
        let n = w.n();
        let winv = w.inverse();
        let free = (1..=n)
            .map(|j| (1..w.get(j)).filter(|&a| winv.get(a) > j).collect())
            .collect();
        Self { w, winv, x, h, free, cols: vec![vec![F::zero(); n]; n] }
    }

    /// Calls `visit` with the columns `v_1, …, v_n` of every point.
    pub(crate) fn run(&mut self, visit: &mut impl FnMut(&[Vec<F>])) {
        self.descend(1, visit);
    }

    pub(crate) fn count(&mut self) -> u64 {
        let mut c = 0u64;
        self.run(&mut |_| c += 1);
        c
    }

    fn descend(&mut self, j: usize, visit: &mut impl FnMut(&[Vec<F>])) {
        let n = self.w.n();
        if j > n {
            visit(&self.cols);
            return;
        }
        let free = self.free[j - 1].clone();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut v = vec![F::zero(); n];
            v[self.w.get(j) - 1] = F::one();
            for (&a, &d) in free.iter().zip(&digits) {
                v[a - 1] = F::element(d);
            }
            if self.image_in_span(&v, self.h.get(j)) {
                self.cols[j - 1] = v;
                self.descend(j + 1, visit);
            }
            if !advance::<F>(&mut digits) {
                break;
            }
        }
    }

    /// Whether `X v ∈ span(v_1, …, v_k)`, reducing by leading rows.
    fn image_in_span(&self, v: &[F], k: usize) -> bool {
        let n = v.len();
        let mut r: Vec<F> = (1..=n)
            .map(|a| {
                (1..=n).fold(F::zero(), |acc, b| {
                    let (m, y) = (*self.x.get(a, b), v[b - 1]);
                    if m.is_zero() || y.is_zero() { acc } else { acc + m * y }
                })
            })
            .collect();
        while let Some(a) = r.iter().rposition(|c| !c.is_zero()).map(|i| i + 1) {
            let i = self.winv.get(a);
            if i > k {
                return false;
            }
            let c = r[a - 1];
            for (x, y) in r.iter_mut().zip(&self.cols[i - 1]).take(a) {
                if !y.is_zero() {
                    *x = *x - c * *y;
                }
            }
        }
        true
    }
}

/// Odometer step over base-`q` digits; `false` after the last tuple.
pub(crate) fn advance<F: FiniteField>(digits: &mut [u32]) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < F::ORDER {
            return true;
        }
        *d = 0;
    }
    false
}

/// `u` with `u e_{w(j)} = v_j`.
pub(crate) fn unipotent_of<F: FiniteField>(w: &Permutation, cols: &[Vec<F>]) -> ExactMatrix<F> {
    let n = w.n();
    let mut u = ExactMatrix::identity(n);
    for (j, v) in cols.iter().enumerate() {
        u.set_column(w.get(j + 1), v);
    }
    u
}
