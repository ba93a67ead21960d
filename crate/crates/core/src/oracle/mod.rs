//! Brute-force point counts over `F_q`, independent of the inversion
//! combinatorics: each Schubert cell is enumerated column by column and the
//! Hessenberg condition is checked directly with exact field arithmetic.
//!
//! Every enumeration is guarded by a bit budget. A single cell costs
//! `ℓ(w)·log₂ q` bits; a whole variety costs `log₂ |Fl(F_q^n)|`.

mod search;

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{Composition, HessenbergFunction, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::exactla::{
    bk_generator, bk_keys, bruhat_canonical_form, dw_flag, factor_unipotent, generic_coordinates, nilpotent_matrix, ExactMatrix,
    FiniteField, Flag, UnipotentPattern, SUPPORTED_PRIMES, project_cell, verify_flag_membership,
};
use crate::paving::enumerate_cells;
use crate::with_prime_field;
use search::{advance, unipotent_of, CellSearch};

pub const DEFAULT_BUDGET_BITS: u32 = 24;

/// Field size, work budget and thread count for the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Oracle {
    pub q: u32,
    pub budget_bits: u32,
    pub workers: usize,
}

/// Brute-force and predicted counts for one Schubert cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCount {
    pub w: Permutation,
    pub count: u64,
    /// Cell dimension from the paving, `None` when `R(w)` is not `h`-strict.
    pub dim: Option<usize>,
    pub predicted: u64,
}

/// Point count of `Hess(X_λ, h)(F_q)`, cell by cell. Cells where both the
/// count and the prediction are zero are omitted from `per_cell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub q: u32,
    pub cells_searched: usize,
    pub per_cell: Vec<CellCount>,
    pub total: u64,
    pub predicted: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Comparison of `D_w(F_q)` with the brute-force `C_w ∩ B^{X_λ}(F_q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DwComparison {
    pub w: Permutation,
    pub coordinate_tuples: u64,
    pub distinct_points: u64,
    pub cell_points: u64,
    pub equal: bool,
}

impl DwComparison {
    /// Set equality plus injectivity of the coordinate map.
    pub fn holds(&self) -> bool {
        self.equal && self.distinct_points == self.coordinate_tuples
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub seed: u64,
    pub base_count: u64,
    pub conjugated_counts: Vec<u64>,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.conjugated_counts.iter().all(|&c| c == self.base_count)
    }
}

fn check_sizes(shape: &Composition, h: &HessenbergFunction) -> Result<()> {
    if shape.size() != h.n() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: h.n() });
    }
    Ok(())
}

fn check_perm(w: &Permutation, n: usize) -> Result<()> {
    if w.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: w.n() });
    }
    Ok(())
}

impl Oracle {
    pub fn new(q: u32) -> Result<Self> {
        if !SUPPORTED_PRIMES.contains(&q) {
            return Err(Error::InvalidField(q));
        }
        Ok(Self { q, budget_bits: DEFAULT_BUDGET_BITS, workers: 1 })
    }

    pub fn with_budget(mut self, bits: u32) -> Self {
        self.budget_bits = bits;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    fn charge(&self, bits: f64) -> Result<()> {
        if bits > self.budget_bits as f64 + 1e-9 {
            return Err(Error::BudgetExceeded { needed_bits: bits, budget_bits: self.budget_bits });
        }
        Ok(())
    }

    fn charge_exponent(&self, e: usize) -> Result<()> {
        self.charge(e as f64 * (self.q as f64).log2())
    }

    /// `log₂` of the number of `F_q`-points of the flag variety, `Π [k]_q`.
    fn charge_variety(&self, n: usize) -> Result<()> {
        let q = self.q as f64;
        let bits = (1..=n as i32).map(|k| ((q.powi(k) - 1.0) / (q - 1.0)).log2()).sum();
        self.charge(bits)
    }

    fn map_ordered<I: Sync, T: Send>(&self, items: &[I], f: impl Fn(&I) -> T + Sync + Send) -> Vec<T> {
        if self.workers <= 1 {
            return items.iter().map(f).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.workers).build().expect("thread pool");
        pool.install(|| items.par_iter().map(f).collect())
    }

    /// `|{u ∈ U^w(F_q) : uwE_• ∈ Hess(X_λ, h)}|`.
    pub fn cell_point_count(&self, w: &Permutation, shape: &Composition, h: &HessenbergFunction) -> Result<u64> {
        check_sizes(shape, h)?;
        check_perm(w, h.n())?;
        self.charge_exponent(w.length())?;
        with_prime_field!(self.q, F => {
            let x = nilpotent_matrix::<F>(shape);
            CellSearch::new(w, &x, h).count()
        })
    }

    fn variety_counts<F: FiniteField>(&self, x: &ExactMatrix<F>, h: &HessenbergFunction) -> Result<Vec<(Permutation, u64)>> {
        let n = h.n();
        self.charge_variety(n)?;
        let perms = Permutation::all(n);
        for w in &perms {
            self.charge_exponent(w.length())?;
        }
        Ok(self.map_ordered(&perms, |w| (w.clone(), CellSearch::new(w, x, h).count())))
    }

    /// Sums brute-force cell counts over all of `S_n` and compares them
    /// with `q^{dim}` for the cells of the paving.
    pub fn variety_point_count(&self, shape: &Composition, h: &HessenbergFunction) -> Result<CountReport> {
        check_sizes(shape, h)?;
        let counts = with_prime_field!(self.q, F => self.variety_counts(&nilpotent_matrix::<F>(shape), h))??;
        let dims: BTreeMap<Permutation, usize> =
            enumerate_cells(shape, h)?.into_iter().map(|c| (c.w, c.dim)).collect();
        let q = self.q as u64;
        let cells_searched = counts.len();
        let per_cell: Vec<CellCount> = counts
            .into_iter()
            .map(|(w, count)| {
                let dim = dims.get(&w).copied();
                let predicted = dim.map_or(0, |d| q.pow(d as u32));
                CellCount { w, count, dim, predicted }
            })
            .filter(|c| c.count > 0 || c.predicted > 0)
            .collect();
        let total = per_cell.iter().map(|c| c.count).sum();
        let predicted = per_cell.iter().map(|c| c.predicted).sum();
        let matches = total == predicted && per_cell.iter().all(|c| c.count == c.predicted);
        Ok(CountReport { q: self.q, cells_searched, per_cell, total, predicted, matches })
    }

    /// Enumerates every `F_q`-point of `D_w`, brings it to Bruhat canonical
    /// form and compares with the brute-force points of the Springer fiber in `C_w`.
    pub fn dw_equals_cell(&self, w: &Permutation, shape: &Composition) -> Result<DwComparison> {
        check_perm(w, shape.size())?;
        let keys = generic_coordinates(w, shape)?;
        self.charge_exponent(keys.len().max(w.length()))?;
        with_prime_field!(self.q, F => dw_compare::<F>(w, shape, &keys))?
    }

    /// For every point `u` of `C_w ∩ B^{X_λ}(F_q)`, the factor `u_i` has
    /// nonzero off-diagonal entries only in columns ending a row of `R(e)`.
    pub fn zeros_structure_check(&self, w: &Permutation, shape: &Composition) -> Result<bool> {
        check_perm(w, shape.size())?;
        self.charge_exponent(w.length())?;
        with_prime_field!(self.q, F => zeros_check::<F>(w, shape))?
    }

    /// For every point `F = uwE_•` of `C_w ∩ B^{X_λ}(F_q)`: the row factor `u_i`
    /// is the `i`-th row of some `g_n ∈ B_n(w)`, and `π(g_n⁻¹F) ∈ C_y` lies in the
    /// Springer fiber of `X_{λ'}`, where `λ'` drops the box of `n` in `R(w)`.
    pub fn projection_check(&self, w: &Permutation, shape: &Composition) -> Result<bool> {
        check_perm(w, shape.size())?;
        self.charge_exponent(w.length())?;
        with_prime_field!(self.q, F => projection::<F>(w, shape))?
    }

    /// Compares the point count of `Hess(g⁻¹X_λg, h)` for `trials` random
    /// `g ∈ GL_n(F_q)` with that of `Hess(X_λ, h)`.
    pub fn conjugation_invariance(
        &self,
        shape: &Composition,
        h: &HessenbergFunction,
        trials: usize,
        seed: u64,
    ) -> Result<InvarianceReport> {
        check_sizes(shape, h)?;
        with_prime_field!(self.q, F => self.invariance::<F>(shape, h, trials, seed))?
    }

    fn invariance<F: FiniteField>(
        &self,
        shape: &Composition,
        h: &HessenbergFunction,
        trials: usize,
        seed: u64,
    ) -> Result<InvarianceReport> {
        let n = shape.size();
        let x = nilpotent_matrix::<F>(shape);
        let total = |m: &ExactMatrix<F>| -> Result<u64> { Ok(self.variety_counts(m, h)?.iter().map(|p| p.1).sum()) };
        let base_count = total(&x)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut conjugated_counts = Vec::with_capacity(trials);
        for _ in 0..trials {
            let (g, ginv) = loop {
                let g = ExactMatrix::from_fn(n, n, |_, _| F::element(rng.gen_range(0..F::ORDER)));
                if let Ok(ginv) = g.inverse() {
                    break (g, ginv);
                }
            };
            conjugated_counts.push(total(&ginv.mul(&x)?.mul(&g)?)?);
        }
        Ok(InvarianceReport { seed, base_count, conjugated_counts })
    }
}

fn pattern_values<F: FiniteField>(pattern: &UnipotentPattern, u: &ExactMatrix<F>) -> Vec<u32> {
    pattern.positions().iter().map(|&(a, b)| u.get(a, b).index()).collect()
}

fn springer_points<F: FiniteField>(w: &Permutation, shape: &Composition) -> Vec<ExactMatrix<F>> {
    let x = nilpotent_matrix::<F>(shape);
    let h = HessenbergFunction::springer(w.n());
    let mut out = Vec::new();
    CellSearch::new(w, &x, &h).run(&mut |cols| out.push(unipotent_of(w, cols)));
    out
}

fn dw_compare<F: FiniteField>(w: &Permutation, shape: &Composition, keys: &[(usize, usize)]) -> Result<DwComparison> {
    let pattern = UnipotentPattern::for_permutation(w);
    let mut image: HashSet<Vec<u32>> = HashSet::new();
    let mut tuples = 0u64;
    let mut all_in_cell = true;
    let mut digits = vec![0u32; keys.len()];
    loop {
        let coords: BTreeMap<(usize, usize), F> =
            keys.iter().zip(&digits).map(|(&k, &d)| (k, F::element(d))).collect();
        let flag = dw_flag(w, shape, &coords)?;
        let (v, u) = bruhat_canonical_form(flag.matrix())?;
        if &v == w {
            image.insert(pattern_values(&pattern, &u));
        } else {
            all_in_cell = false;
        }
        tuples += 1;
        if !advance::<F>(&mut digits) {
            break;
        }
    }
    let brute: HashSet<Vec<u32>> =
        springer_points::<F>(w, shape).iter().map(|u| pattern_values(&pattern, u)).collect();
    Ok(DwComparison {
        w: w.clone(),
        coordinate_tuples: tuples,
        distinct_points: image.len() as u64,
        cell_points: brute.len() as u64,
        equal: all_in_cell && image == brute,
    })
}

fn projection<F: FiniteField>(w: &Permutation, shape: &Composition) -> Result<bool> {
    let n = w.n();
    if n < 2 {
        return Ok(true);
    }
    let t = Tableau::of_permutation(w, shape)?;
    if !t.is_row_strict() {
        return Err(Error::NotRowStrict);
    }
    let (shape_y, t_y) = t.delete_last_box()?;
    let x_y = nilpotent_matrix::<F>(&shape_y);
    let springer = HessenbergFunction::springer(n - 1);
    let keys = bk_keys(w, shape, n)?;
    let i = w.get(n);
    let pw = ExactMatrix::permutation(w);
    for u in springer_points::<F>(w, shape) {
        let f = factor_unipotent(&u, w)?;
        if f.u_i.support().iter().any(|p| !keys.contains(p)) {
            return Ok(false);
        }
        let coords: BTreeMap<(usize, usize), F> = keys.iter().map(|&(a, b)| ((a, b), *f.u_i.get(a, b))).collect();
        let g_n = bk_generator(w, shape, n, &coords)?;
        debug_assert_eq!(g_n.row(i), f.u_i.row(i));
        let stripped = g_n.inverse()?.mul(&u)?.mul(&pw)?;
        let (w2, u2) = bruhat_canonical_form(&stripped)?;
        if &w2 != w || !factor_unipotent(&u2, w)?.u_i.is_identity() {
            return Ok(false);
        }
        let (y, block) = project_cell(&stripped)?;
        if y != t_y.permutation() || !verify_flag_membership(&Flag::from_matrix(block)?, &x_y, &springer)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn zeros_check<F: FiniteField>(w: &Permutation, shape: &Composition) -> Result<bool> {
    let base = Tableau::base_filling(shape);
    let i = w.get(w.n());
    for u in springer_points::<F>(w, shape) {
        let f = factor_unipotent(&u, w)?;
        if f.u_i.support().iter().any(|&(a, b)| a != i || !base.ends_row(b)) {
            return Ok(false);
        }
    }
    Ok(true)
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

    #[test]
    fn cell_counts_for_222() {
        let shape = comp(&[2, 2, 2]);
        let w = perm("3,6,2,1,5,4");
        let o = Oracle::new(2).unwrap();
        assert_eq!(o.cell_point_count(&w, &shape, &HessenbergFunction::springer(6)).unwrap(), 64);
        // R(w) has 1 directly left of 2 and h(2) = 0, so the cell misses the variety.
        let h = HessenbergFunction::new(vec![0, 0, 1, 1, 3, 4]).unwrap();
        assert_eq!(o.cell_point_count(&w, &shape, &h).unwrap(), 0);
    }

    #[test]
    fn small_varieties() {
        let o = Oracle::new(2).unwrap();
        let r = o.variety_point_count(&comp(&[1, 1]), &HessenbergFunction::springer(2)).unwrap();
        assert_eq!((r.total, r.matches), (3, true));
        let r = Oracle::new(3).unwrap().variety_point_count(&comp(&[2]), &HessenbergFunction::new(vec![0, 1]).unwrap()).unwrap();
        assert_eq!((r.total, r.matches), (1, true));
        let r = o.variety_point_count(&comp(&[2, 2]), &HessenbergFunction::springer(4)).unwrap();
        // Six cells (one per row-strict filling), Poincaré polynomial 1 + 3q + 2q².
        assert_eq!((r.total, r.matches), (15, true));
    }

    #[test]
    fn dw_matches_cell() {
        let o = Oracle::new(2).unwrap();
        let c = o.dw_equals_cell(&perm("3,6,2,1,5,4"), &comp(&[2, 2, 2])).unwrap();
        assert!(c.holds());
        assert_eq!((c.distinct_points, c.cell_points), (64, 64));
        let c = o.dw_equals_cell(&Permutation::identity(3), &comp(&[2, 1])).unwrap();
        assert!(c.holds());
        assert_eq!(c.cell_points, 1);
    }

    #[test]
    fn zeros_structure() {
        let shape = comp(&[3, 1]);
        let o = Oracle::new(3).unwrap();
        for t in crate::combinatorics::row_strict_tableaux(&shape) {
            assert!(o.zeros_structure_check(&t.permutation(), &shape).unwrap());
        }
    }

    #[test]
    fn projection_to_smaller_fiber() {
        let o = Oracle::new(2).unwrap();
        for shape in [comp(&[2, 2]), comp(&[1, 2, 1]), comp(&[3, 1])] {
            for t in crate::combinatorics::row_strict_tableaux(&shape) {
                assert!(o.projection_check(&t.permutation(), &shape).unwrap(), "{t}");
            }
        }
    }

    #[test]
    fn conjugation() {
        let o = Oracle::new(2).unwrap();
        let r = o.conjugation_invariance(&comp(&[2, 1]), &HessenbergFunction::springer(3), 10, 7).unwrap();
        assert!(r.holds());
        assert_eq!(r.conjugated_counts.len(), 10);
        let again = o.conjugation_invariance(&comp(&[2, 1]), &HessenbergFunction::springer(3), 10, 7).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn budget_and_field_errors() {
        assert_eq!(Oracle::new(4), Err(Error::InvalidField(4)));
        let o = Oracle::new(2).unwrap().with_budget(3);
        let w = perm("4,3,2,1");
        assert!(matches!(
            o.cell_point_count(&w, &comp(&[1, 1, 1, 1]), &HessenbergFunction::springer(4)),
            Err(Error::BudgetExceeded { .. })
        ));
        let o = Oracle::new(2).unwrap();
        assert!(matches!(
            o.variety_point_count(&comp(&[7]), &HessenbergFunction::springer(7)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn workers_do_not_change_results() {
        let shape = comp(&[2, 1, 1]);
        let h = HessenbergFunction::springer(4);
        let a = Oracle::new(3).unwrap().variety_point_count(&shape, &h).unwrap();
        let b = Oracle::new(3).unwrap().with_workers(4).variety_point_count(&shape, &h).unwrap();
        assert_eq!(a, b);
        assert!(a.matches);
    }
}
