//! Invariant suites. Each check runs over a family of cases and reports the
//! number of cases together with the first failing witness, if any.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::{self, Composition, HessenbergFunction, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::exactla::{
    bk_generator, bk_keys, bk_symbolic, bn_split, bruhat_canonical_form, difference_residual, dw_flag,
    generic_coordinates, generic_flag, generic_hess_flag, hess_zero_coordinates, hessenberg_space_contains,
    nilpotent_matrix, verify_flag_membership, ExactMatrix, FiniteField, Flag, Fp, Poly, Scalar,
    UnipotentPattern, Var,
};
use crate::oracle::Oracle;
use crate::paving::{enumerate_cells, hessenberg_inversions_of, inversion_profile, r0_tableau, springer_inversions};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed { witness: String },
    Skipped { reason: String },
    BudgetExceeded { needed_bits: f64, budget_bits: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    #[serde(flatten)]
    pub status: CheckStatus,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        matches!(self.status, CheckStatus::Passed | CheckStatus::Skipped { .. })
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, CheckStatus::Failed { .. })
    }
}

/// Case counter that keeps the first failure.
pub struct Check {
    name: String,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Self { name: name.to_string(), cases: 0, failure: None }
    }

    /// Records one case.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }
}

/// Runs `body`; library errors become failures, except budget errors which are reported as such.
pub fn run_check(name: &str, body: impl FnOnce(&mut Check) -> Result<()>) -> CheckResult {
    let mut c = Check::new(name);
    let outcome = body(&mut c);
    let status = match (outcome, c.failure) {
        (Err(Error::BudgetExceeded { needed_bits, budget_bits }), _) => {
            CheckStatus::BudgetExceeded { needed_bits, budget_bits }
        }
        (_, Some(witness)) => CheckStatus::Failed { witness },
        (Err(e), None) => CheckStatus::Failed { witness: format!("error: {e}") },
        (Ok(()), None) => CheckStatus::Passed,
    };
    CheckResult { name: c.name, cases: c.cases, status }
}

fn skipped(name: &str, reason: &str) -> CheckResult {
    CheckResult { name: name.to_string(), cases: 0, status: CheckStatus::Skipped { reason: reason.to_string() } }
}

/// `w` for every row-strict filling of `shape`, in lexicographic order.
pub fn row_strict_words(shape: &Composition) -> Vec<Permutation> {
    let mut ws: Vec<Permutation> =
        combinatorics::row_strict_tableaux(shape).iter().map(Tableau::permutation).collect();
    ws.sort();
    ws
}

fn witness(shape: &Composition, w: &Permutation, extra: impl std::fmt::Display) -> String {
    format!("lambda={shape} w={w} {extra}")
}

fn column_is_zero<S: Scalar>(m: &ExactMatrix<S>, b: usize) -> bool {
    (1..=m.rows()).all(|a| m.get(a, b).is_zero())
}

fn var(set: u8, key: (usize, usize)) -> Poly {
    Poly::var(Var::with_set(set, key.0, key.1))
}

/// `g(x)·g(y) = g(x + y)` and `g(x)·g(y) = g(y)·g(x)` in every `B_k(w)`.
pub fn check_bk_group_law(shape: &Composition) -> CheckResult {
    run_check("bk_group_law", |c| {
        for w in row_strict_words(shape) {
            for k in 2..=w.n() {
                let keys = bk_keys(&w, shape, k)?;
                let gx = bk_symbolic(&w, shape, k, 0)?;
                let gy = bk_symbolic(&w, shape, k, 1)?;
                let sum: BTreeMap<_, Poly> = keys.iter().map(|&key| (key, var(0, key) + var(1, key))).collect();
                let gxy = bk_generator(&w, shape, k, &sum)?;
                let xy = gx.mul(&gy)?;
                c.case(xy == gxy && xy == gy.mul(&gx)?, || witness(shape, &w, format!("k={k}")));
            }
        }
        Ok(())
    })
}

/// Each `g_k` fixes `e_{w(j)}` for `j ≥ k`, preserves `span(e_{w(1)}, …, e_{w(k)})`
/// and maps `ker X_λ` into itself.
pub fn check_bk_stabilization(shape: &Composition) -> CheckResult {
    run_check("bk_stabilization", |c| {
        let x = nilpotent_matrix::<Poly>(shape);
        let kernel: Vec<usize> = (1..=shape.size()).filter(|&a| column_is_zero(&x, a)).collect();
        for w in row_strict_words(shape) {
            let n = w.n();
            let winv = w.inverse();
            for k in 2..=n {
                let g = bk_symbolic(&w, shape, k, 0)?;
                let fixes = (k..=n).all(|j| {
                    let b = w.get(j);
                    (1..=n).all(|a| if a == b { g.get(a, b).is_one() } else { g.get(a, b).is_zero() })
                });
                let stable = (1..=k).all(|j| {
                    let b = w.get(j);
                    (1..=n).all(|a| winv.get(a) <= k || g.get(a, b).is_zero())
                });
                let xg = x.mul(&g)?;
                let kernel_ok = kernel.iter().all(|&a| column_is_zero(&xg, a));
                c.case(fixes && stable && kernel_ok, || {
                    witness(shape, &w, format!("k={k} fixes={fixes} stable={stable} kernel={kernel_ok}"))
                });
            }
        }
        Ok(())
    })
}

/// `(g_k X_λ − X_λ g_k)` on `e_{w(j)}` and on `v_j^{(k-1)} = g_{k-1}⋯g_2 e_{w(j)}` is
/// `x_{w(k)w(ℓ)}` times `e_{w(k)}` (resp. `v_k^{(k-1)}`) when `j` is right of `ℓ`
/// with `(k, ℓ)` a Springer inversion, and zero otherwise. `g_n` commutes with `X_λ`.
pub fn check_commutator(shape: &Composition) -> CheckResult {
    run_check("commutator", |c| {
        let x = nilpotent_matrix::<Poly>(shape);
        for w in row_strict_words(shape) {
            let n = w.n();
            let t = Tableau::of_permutation(&w, shape)?;
            let inv = springer_inversions(&w, shape)?;
            let mut partial = ExactMatrix::<Poly>::permutation(&w);
            for k in 2..=n {
                let g = bk_symbolic(&w, shape, k, 0)?;
                let comm = g.mul(&x)?.sub(&x.mul(&g)?)?;
                let vk = partial.column(k);
                for j in 1..=n {
                    let coeff = t
                        .left_of(j)
                        .filter(|&l| inv.contains(k, l))
                        .map(|l| Poly::var(Var::x(w.get(k), w.get(l))));
                    let on_basis = comm.column(w.get(j));
                    let on_partial = comm.mul_vec(&partial.column(j))?;
                    let (want_basis, want_partial) = match &coeff {
                        Some(p) => (
                            ExactMatrix::<Poly>::identity(n).column(w.get(k)).into_iter().map(|e| e * p.clone()).collect(),
                            vk.iter().map(|e| e.clone() * p.clone()).collect(),
                        ),
                        None => (vec![Poly::zero(); n], vec![Poly::zero(); n]),
                    };
                    c.case(on_basis == want_basis && on_partial == want_partial, || {
                        witness(shape, &w, format!("k={k} j={j}"))
                    });
                }
                if k == n {
                    c.case(comm.is_zero(), || witness(shape, &w, "g_n does not commute with X"));
                }
                partial = g.mul(&partial)?;
            }
        }
        Ok(())
    })
}

/// For `k < n`, `v⁻¹ B_k(w) v` is `B_k(y)` for the filling with the box of `n`
/// removed, coordinates matched by `x_{w(k)w(ℓ)} ↦ x_{y(k)y(ℓ)}`; and `g_n ∈ B_n(w)`
/// splits as `u_i b_n` with `v⁻¹ b_n v ∈ U_0`.
pub fn check_restriction(shape: &Composition) -> CheckResult {
    run_check("restriction_to_y", |c| {
        for w in row_strict_words(shape) {
            let n = w.n();
            if n < 2 {
                continue;
            }
            let (v, y) = w.factorize();
            let vinv = v.inverse();
            let (shape_y, t_y) = Tableau::of_permutation(&w, shape)?.delete_last_box()?;
            let y_small = y.restrict().expect("y fixes n");
            c.case(t_y.permutation() == y_small, || witness(shape, &w, "R(y) is not R(w) minus n"));
            for k in 2..n {
                let g = bk_symbolic(&w, shape, k, 0)?;
                let coords: BTreeMap<(usize, usize), Poly> = bk_keys(&w, shape, k)?
                    .into_iter()
                    .map(|(a, b)| ((vinv.get(a), vinv.get(b)), Poly::var(Var::x(a, b))))
                    .collect();
                let expected = bk_generator(&y_small, &shape_y, k, &coords)?.embed(n);
                c.case(g.conjugate_by(&v) == expected, || witness(shape, &w, format!("k={k}")));
            }
            let g_n = bk_symbolic(&w, shape, n, 0)?;
            let (u_i, b_n) = bn_split(&g_n, &w, shape)?;
            c.case(u_i.mul(&b_n)? == g_n, || witness(shape, &w, "u_i b_n != g_n"));
        }
        Ok(())
    })
}

/// `v_ℓ − X_λ v_r − Σ x_{w(t)w(ℓ)} v_t = 0` on the generic flag.
pub fn check_difference_formula(shape: &Composition) -> CheckResult {
    run_check("difference_formula", |c| {
        for w in row_strict_words(shape) {
            let t = Tableau::of_permutation(&w, shape)?;
            for l in (1..=w.n()).filter(|&l| !t.ends_row(l)) {
                let r = difference_residual(&w, shape, l)?;
                c.case(r.iter().all(Scalar::is_zero), || witness(shape, &w, format!("l={l}")));
            }
        }
        Ok(())
    })
}

/// The generic flag of `D_w` lies in the Springer fiber identically.
pub fn check_springer_membership(shape: &Composition) -> CheckResult {
    run_check("springer_membership", |c| {
        let x = nilpotent_matrix::<Poly>(shape);
        let h = HessenbergFunction::springer(shape.size());
        for w in row_strict_words(shape) {
            let ok = verify_flag_membership(&generic_flag(&w, shape)?, &x, &h)?;
            c.case(ok, || witness(shape, &w, ""));
        }
        Ok(())
    })
}

/// For `h`-strict `R(w)`: the generic flag with the coordinates of
/// `inv_λ(w) ∖ inv_{λ,h}(w)` set to zero lies in `Hess(X_λ, h)`, and keeping any
/// single one of them symbolic does not.
pub fn check_hess_membership(shape: &Composition, h: &HessenbergFunction) -> CheckResult {
    run_check("hessenberg_membership", |c| {
        let x = nilpotent_matrix::<Poly>(shape);
        for t in combinatorics::h_strict_tableaux(shape, h) {
            let w = t.permutation();
            let zeros = hess_zero_coordinates(&w, shape, h)?;
            c.case(verify_flag_membership(&generic_hess_flag(&w, shape, h)?, &x, h)?, || {
                witness(shape, &w, format!("h={h}"))
            });
            for &kept in &zeros {
                let coords = generic_coordinates(&w, shape)?
                    .into_iter()
                    .map(|key| {
                        let v = if key != kept && zeros.contains(&key) { Poly::zero() } else { Poly::var(Var::x(key.0, key.1)) };
                        (key, v)
                    })
                    .collect();
                let flag = dw_flag(&w, shape, &coords)?;
                c.case(!verify_flag_membership(&flag, &x, h)?, || {
                    witness(shape, &w, format!("h={h} coordinate {kept:?} need not vanish"))
                });
            }
        }
        Ok(())
    })
}

fn random_invertible<F: FiniteField>(n: usize, rng: &mut ChaCha8Rng) -> (ExactMatrix<F>, ExactMatrix<F>) {
    loop {
        let g = ExactMatrix::from_fn(n, n, |_, _| F::element(rng.gen_range(0..F::ORDER)));
        if let Ok(ginv) = g.inverse() {
            return (g, ginv);
        }
    }
}

/// `gE_• ∈ Hess(X, h)` exactly when `g⁻¹Xg ∈ H(h)`, over `F_5` and `Q`, for
/// random `g` and for random points of each `D_w`.
pub fn check_membership_duality(shape: &Composition, h: &HessenbergFunction, trials: usize, seed: u64) -> CheckResult {
    type F5 = Fp<5>;
    run_check("membership_duality", |c| {
        let n = shape.size();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x5 = nilpotent_matrix::<F5>(shape);
        let xq = nilpotent_matrix::<BigRational>(shape);
        let mut samples: Vec<ExactMatrix<F5>> = (0..trials).map(|_| random_invertible::<F5>(n, &mut rng).0).collect();
        for w in row_strict_words(shape) {
            let coords = generic_coordinates(&w, shape)?
                .into_iter()
                .map(|k| (k, F5::element(rng.gen_range(0..5))))
                .collect();
            samples.push(dw_flag(&w, shape, &coords)?.into_matrix());
        }
        for g in samples {
            let lhs = verify_flag_membership(&Flag::from_matrix(g.clone())?, &x5, h)?;
            let rhs = hessenberg_space_contains(&g.inverse()?.mul(&x5)?.mul(&g)?, h)?;
            c.case(lhs == rhs, || format!("lambda={shape} h={h} over F5 g=\n{}", g.to_text()));
        }
        for _ in 0..trials {
            let g = loop {
                let g = ExactMatrix::from_fn(n, n, |_, _| BigRational::from_i64(rng.gen_range(-3..=3)));
                if g.inverse().is_ok() {
                    break g;
                }
            };
            let lhs = verify_flag_membership(&Flag::from_matrix(g.clone())?, &xq, h)?;
            let rhs = hessenberg_space_contains(&g.inverse()?.mul(&xq)?.mul(&g)?, h)?;
            c.case(lhs == rhs, || format!("lambda={shape} h={h} over Q g=\n{}", g.to_text()));
        }
        Ok(())
    })
}

/// The canonical form of `u·w·b` is `(w, u)` for random `u ∈ U^w(F_q)` and
/// random invertible upper triangular `b`.
pub fn check_canonical_round_trip(n: usize, q: u32, seed: u64) -> CheckResult {
    let body = |c: &mut Check| -> Result<()> {
        crate::with_prime_field!(q, F => round_trip::<F>(c, n, seed))?
    };
    run_check("canonical_round_trip", body)
}

fn round_trip<F: FiniteField>(c: &mut Check, n: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for w in Permutation::all(n) {
        let pattern = UnipotentPattern::for_permutation(&w);
        let values: Vec<F> = (0..pattern.dimension()).map(|_| F::element(rng.gen_range(0..F::ORDER))).collect();
        let u = pattern.element(&values)?;
        let b = ExactMatrix::from_fn(n, n, |a, b| match a.cmp(&b) {
            std::cmp::Ordering::Less => F::element(rng.gen_range(0..F::ORDER)),
            std::cmp::Ordering::Equal => F::element(rng.gen_range(1..F::ORDER)),
            std::cmp::Ordering::Greater => F::zero(),
        });
        let m = u.mul(&ExactMatrix::permutation(&w))?.mul(&b)?;
        let got = bruhat_canonical_form(&m)?;
        c.case(got == (w.clone(), u.clone()), || format!("w={w} u=\n{}", u.to_text()));
    }
    Ok(())
}

/// Cells of maximal dimension have standard tableaux, and for non-standard
/// `R ∈ RS_h(λ)`, `std(R)` is `h`-strict with `d_R ≤ d_{std(R)}` componentwise
/// and strictly smaller somewhere. Partitions only.
pub fn check_maximal_cells(shape: &Composition, h: &HessenbergFunction) -> CheckResult {
    if !shape.is_partition() {
        return skipped("maximal_cells", "shape is not a partition");
    }
    run_check("maximal_cells", |c| {
        let cells = enumerate_cells(shape, h)?;
        let top = cells.iter().map(|cell| cell.dim).max();
        for cell in &cells {
            if Some(cell.dim) == top {
                c.case(cell.tableau.is_standard(), || format!("lambda={shape} h={h} maximal cell {} not standard", cell.tableau));
            }
            if cell.tableau.is_standard() {
                continue;
            }
            let s = cell.tableau.standardize()?;
            if !s.is_h_strict(h)? {
                c.case(false, || format!("lambda={shape} h={h} std({}) not h-strict", cell.tableau));
                continue;
            }
            let d_r = inversion_profile(&cell.tableau, h)?;
            let d_s = inversion_profile(&s, h)?;
            c.case(d_r.dominated_by(&d_s) && d_r.total() < d_s.total(), || {
                format!("lambda={shape} h={h} R={} profile not dominated strictly", cell.tableau)
            });
        }
        Ok(())
    })
}

/// A nonempty variety has exactly one zero-dimensional cell and it is the
/// greedy filling; an empty one has no greedy filling.
pub fn check_connectedness(shape: &Composition, h: &HessenbergFunction) -> CheckResult {
    run_check("connectedness", |c| {
        let cells = enumerate_cells(shape, h)?;
        let zero: Vec<&Tableau> = cells.iter().filter(|cell| cell.dim == 0).map(|cell| &cell.tableau).collect();
        let r0 = r0_tableau(shape, h)?;
        let ok = match (&r0, cells.is_empty()) {
            (None, true) => true,
            (Some(r), false) => {
                zero.len() == 1
                    && zero[0] == r
                    && hessenberg_inversions_of(r, h)?.is_empty()
            }
            _ => false,
        };
        c.case(ok, || format!("lambda={shape} h={h} zero-dim cells={} r0={r0:?}", zero.len()));
        Ok(())
    })
}

pub fn check_point_count(shape: &Composition, h: &HessenbergFunction, oracle: &Oracle) -> CheckResult {
    run_check(&format!("point_count_q{}", oracle.q), |c| {
        let r = oracle.variety_point_count(shape, h)?;
        c.case(r.matches, || {
            let bad = r.per_cell.iter().find(|p| p.count != p.predicted);
            format!("lambda={shape} h={h} total={} predicted={} first mismatch={bad:?}", r.total, r.predicted)
        });
        Ok(())
    })
}

pub fn check_dw_cells(shape: &Composition, oracle: &Oracle) -> CheckResult {
    run_check(&format!("dw_equals_cell_q{}", oracle.q), |c| {
        for w in row_strict_words(shape) {
            let r = oracle.dw_equals_cell(&w, shape)?;
            c.case(r.holds(), || witness(shape, &w, format!("{r:?}")));
        }
        Ok(())
    })
}

pub fn check_zero_structure(shape: &Composition, oracle: &Oracle) -> CheckResult {
    run_check(&format!("row_factor_zeros_q{}", oracle.q), |c| {
        for w in row_strict_words(shape) {
            c.case(oracle.zeros_structure_check(&w, shape)?, || witness(shape, &w, ""));
        }
        Ok(())
    })
}

pub fn check_projection(shape: &Composition, oracle: &Oracle) -> CheckResult {
    run_check(&format!("projection_q{}", oracle.q), |c| {
        for w in row_strict_words(shape) {
            c.case(oracle.projection_check(&w, shape)?, || witness(shape, &w, ""));
        }
        Ok(())
    })
}

pub fn check_conjugation_invariance(
    shape: &Composition,
    h: &HessenbergFunction,
    oracle: &Oracle,
    trials: usize,
    seed: u64,
) -> CheckResult {
    run_check(&format!("conjugation_invariance_q{}", oracle.q), |c| {
        let r = oracle.conjugation_invariance(shape, h, trials, seed)?;
        c.case(r.holds(), || format!("lambda={shape} h={h} {r:?}"));
        Ok(())
    })
}

/// The symbolic identities for one shape; independent of `h`.
pub fn symbolic_suite(shape: &Composition) -> Vec<CheckResult> {
    vec![
        check_bk_group_law(shape),
        check_bk_stabilization(shape),
        check_commutator(shape),
        check_restriction(shape),
        check_difference_formula(shape),
        check_springer_membership(shape),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub q: u32,
    pub budget_bits: u32,
    pub workers: usize,
    pub seed: u64,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { q: 2, budget_bits: crate::oracle::DEFAULT_BUDGET_BITS, workers: 1, seed: 0, trials: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.failed())
    }

    pub fn budget_exceeded(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.status, CheckStatus::BudgetExceeded { .. }))
    }
}

/// Every suite scoped to `(λ, h, q)`.
pub fn run_suite(shape: &Composition, h: &HessenbergFunction, cfg: &SuiteConfig) -> Result<VerifyReport> {
    if shape.size() != h.n() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: h.n() });
    }
    let oracle = Oracle::new(cfg.q)?.with_budget(cfg.budget_bits).with_workers(cfg.workers);
    let mut checks = symbolic_suite(shape);
    checks.push(check_hess_membership(shape, h));
    checks.push(check_membership_duality(shape, h, cfg.trials, cfg.seed));
    checks.push(check_canonical_round_trip(shape.size(), cfg.q, cfg.seed));
    checks.push(check_maximal_cells(shape, h));
    checks.push(check_connectedness(shape, h));
    checks.push(check_point_count(shape, h, &oracle));
    checks.push(check_dw_cells(shape, &oracle));
    checks.push(check_zero_structure(shape, &oracle));
    checks.push(check_projection(shape, &oracle));
    checks.push(check_conjugation_invariance(shape, h, &oracle, cfg.trials, cfg.seed));
    Ok(VerifyReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn symbolic_suite_small_shapes() {
        for shape in [comp(&[2, 2]), comp(&[1, 3]), comp(&[2, 1, 1]), comp(&[3, 2, 2])] {
            for r in symbolic_suite(&shape) {
                assert!(r.passed(), "{shape}: {r:?}");
                assert!(r.cases > 0 || r.name == "restriction_to_y");
            }
        }
    }

    #[test]
    fn full_suite_for_22() {
        let shape = comp(&[2, 2]);
        for h in HessenbergFunction::all(4) {
            let report = run_suite(&shape, &h, &SuiteConfig::default()).unwrap();
            assert!(report.passed(), "{h}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn failures_report_first_witness() {
        let r = run_check("demo", |c| {
            c.case(true, || "a".into());
            c.case(false, || "b".into());
            c.case(false, || "c".into());
            Ok(())
        });
        assert_eq!(r.status, CheckStatus::Failed { witness: "b".into() });
        assert_eq!(r.cases, 3);
        let r = run_check("budget", |_| Err(Error::BudgetExceeded { needed_bits: 30.0, budget_bits: 24 }));
        assert!(matches!(r.status, CheckStatus::BudgetExceeded { .. }));
    }

    #[test]
    fn budget_is_reported_not_failed() {
        let shape = comp(&[3, 3]);
        let cfg = SuiteConfig { budget_bits: 4, ..SuiteConfig::default() };
        let report = run_suite(&shape, &HessenbergFunction::springer(6), &cfg).unwrap();
        assert!(report.budget_exceeded());
        assert!(report.first_failure().is_none(), "{:?}", report.first_failure());
    }
}
