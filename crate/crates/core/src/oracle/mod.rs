//! Brute-force verification of the extremal construction.
//!
//! The coefficient formulas rest on one optimization fact: among cosine
//! polynomials `1 + 2 sum_{j=1}^{N-1} c_j cos(2tj)` that stay nonnegative,
//! the largest possible `c_1` is `cos(pi/(N+1))`, and the maximizing `c`
//! equals the ratios `gamma_{j+1}/gamma_1` of the extremizer. This module
//! rechecks that independently: it discretizes the nonnegativity constraint
//! on a uniform grid over `[0, pi/2]` and maximizes `c_1` with a
//! self-contained simplex, then compares against the closed-form ratios.
//!
//! The discretized optimum approaches the true bound from above as the grid
//! refines; the agreement tolerances below reflect that discretization
//! error, which scales like the inverse square of the grid.

mod simplex;

use crate::certificate::{CertificateReport, StatementId};
use crate::extremal::{extremal_coeffs, gamma_from_coeffs, GammaVector, OddPolynomial};
use crate::scalar::{from_f64, from_usize, half, two};
use crate::sum::pairwise_sum_fn;
use crate::{Error, Result, Scalar};

/// Pivot budget; exceeding it signals degeneracy.
pub const MAX_PIVOTS: usize = 1_000_000;

/// Constraint rows at the returned solution must be at least `-this`.
pub const FEASIBILITY_TOL: f64 = 1e-9;

/// Componentwise agreement required between the grid optimum and the
/// closed-form ratios at the acceptance grid of 8192 nodes.
pub const ORACLE_AGREEMENT_TOL: f64 = 5e-4;

/// Margin tolerance for the nonnegativity certificate; the extremizer
/// attains zero, so the minimum sits at rounding level.
const NONNEGATIVITY_TOL: f64 = 1e-10;

/// Minimum grid for the nonnegativity certificate.
const MIN_CERT_GRID: usize = 16;

/// The discretized problem: maximize `c_1` subject to
/// `1 + sum_j rows[k][j] * c_j >= 0` for every grid node `t_k`, with the
/// `c_j` free in sign and `rows[k][j] = 2 cos(2 t_k j)`.
#[derive(Clone, Debug)]
pub struct LinearProgram<S> {
    num_vars: usize,
    nodes: Vec<S>,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> LinearProgram<S> {
    /// Number of ratio variables, `N - 1`.
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Grid nodes `t_k` over `[0, pi/2]`.
    pub fn nodes(&self) -> &[S] {
        &self.nodes
    }

    /// Cosine coefficients of row `k`.
    pub fn row(&self, k: usize) -> &[S] {
        &self.rows[k]
    }

    /// Left-hand side `1 + sum_j rows[k][j] c_j` of constraint `k` at `c`.
    pub fn constraint_value(&self, k: usize, c: &[S]) -> S {
        let row = &self.rows[k];
        let mut acc = S::one();
        for (a, x) in row.iter().zip(c) {
            acc = acc + *a * *x;
        }
        acc
    }
}

/// The simplex answer together with the derived quantities.
#[derive(Clone, Debug)]
pub struct OracleSolution<S> {
    /// Optimal ratios `c_1 .. c_{N-1}`.
    pub c: Vec<S>,
    /// The maximized `c_1`.
    pub objective_value: S,
    /// `1 / (1 + c_1)`, the oracle's value for `gamma_1`.
    pub gamma1: S,
    /// Simplex pivots performed.
    pub iterations: usize,
    /// Feasibility tolerance the solution was verified against.
    pub feasibility_tol: S,
}

/// Discretizes the nonnegativity constraint on `grid_size` uniform nodes
/// including both endpoints of `[0, pi/2]`.
///
/// Rejects `n < 2` (no free variables; the caller handles `J_1 = 1`
/// directly) and grids below `8n`.
pub fn build_lp<S: Scalar>(n: usize, grid_size: usize) -> Result<LinearProgram<S>> {
    if n < 2 {
        return Err(Error::OracleTooSmall);
    }
    if grid_size < 8 * n {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: 8 * n,
        });
    }
    let num_vars = n - 1;
    let end = S::PI() * half();
    let mut nodes = Vec::with_capacity(grid_size);
    let mut rows = Vec::with_capacity(grid_size);
    for k in 0..grid_size {
        let t = if k + 1 == grid_size {
            end
        } else {
            end * from_usize(k) / from_usize(grid_size - 1)
        };
        let row: Vec<S> = (1..=num_vars)
            .map(|j| two::<S>() * (two::<S>() * t * from_usize(j)).cos())
            .collect();
        nodes.push(t);
        rows.push(row);
    }
    Ok(LinearProgram {
        num_vars,
        nodes,
        rows,
    })
}

/// Solves the discretized problem with the default pivot budget.
pub fn solve_lp<S: Scalar>(lp: &LinearProgram<S>) -> Result<OracleSolution<S>> {
    solve_lp_with_pivot_limit(lp, MAX_PIVOTS)
}

/// As [`solve_lp`] with an explicit pivot budget.
///
/// The solve runs on the problem's node-weight dual, whose basis has only
/// `N - 1` variables, so the tableau stays exact to rounding however fine
/// the grid; the optimal ratios come back as the equality multipliers. The
/// answer is verified before it is returned: every constraint row must be
/// at least `-1e-9`, the duality gap between the weight objective and the
/// recovered `c_1` must close to within `1e-9`, and `gamma_1` must land in
/// `(1/2, 1]`.
pub fn solve_lp_with_pivot_limit<S: Scalar>(
    lp: &LinearProgram<S>,
    max_pivots: usize,
) -> Result<OracleSolution<S>> {
    let nv = lp.num_vars;
    let grid = lp.rows.len();
    // Row j of the node-weight matrix holds -2 cos(2 t_k j) across nodes k.
    let matrix: Vec<Vec<S>> = (0..nv)
        .map(|j| (0..grid).map(|k| -lp.rows[k][j]).collect())
        .collect();
    let outcome = simplex::solve_node_weights(&matrix, max_pivots)?;
    let c = outcome.multipliers;

    let feas_tol: S = from_f64(FEASIBILITY_TOL);
    for k in 0..grid {
        let value = lp.constraint_value(k, &c);
        if value < -feas_tol {
            return Err(Error::SolverInconsistent {
                reason: format!(
                    "constraint at node {k} violated by {}",
                    (-value).to_f64().unwrap_or(f64::NAN)
                ),
            });
        }
    }

    let objective_value = c[0];
    let dual_objective = outcome.objective;
    let gap = (dual_objective - objective_value).abs();
    if gap > feas_tol {
        return Err(Error::SolverInconsistent {
            reason: format!(
                "duality gap {} above tolerance",
                gap.to_f64().unwrap_or(f64::NAN)
            ),
        });
    }

    let gamma1 = S::one() / (S::one() + objective_value);
    if !(gamma1 > half::<S>() && gamma1 <= S::one() + feas_tol) {
        return Err(Error::SolverInconsistent {
            reason: format!("gamma_1 = {gamma1} outside (1/2, 1]"),
        });
    }

    Ok(OracleSolution {
        c,
        objective_value,
        gamma1,
        iterations: outcome.iterations,
        feasibility_tol: feas_tol,
    })
}

/// Compares the grid optimum against the closed-form ratios
/// `gamma_{j+1} / gamma_1` of the extremizer, componentwise.
///
/// `worst_t` in the report is the 1-based index of the worst component.
pub fn verify_extremal_against_oracle<S: Scalar>(
    n: usize,
    grid_size: usize,
) -> Result<CertificateReport<S>> {
    let lp = build_lp::<S>(n, grid_size)?;
    let solution = solve_lp(&lp)?;
    let gammas = gamma_from_coeffs(&extremal_coeffs::<S>(n)?);
    let g = gammas.gammas();

    let mut worst_diff = S::zero();
    let mut worst_index = 1usize;
    for (j, &cj) in solution.c.iter().enumerate() {
        let expected = g[j + 1] / g[0];
        let diff = (cj - expected).abs();
        if diff > worst_diff {
            worst_diff = diff;
            worst_index = j + 1;
        }
    }
    Ok(CertificateReport::from_margin(
        StatementId::OracleAgreement,
        -worst_diff,
        from_usize(worst_index),
        grid_size,
        from_f64(ORACLE_AGREEMENT_TOL),
    ))
}

/// `Re F(e^{it}) = sum_j a_j cos((2j-1) t)`, the quantity the whole problem
/// constrains to be nonnegative.
pub fn cosine_polynomial_value<S: Scalar>(p: &OddPolynomial<S>, t: S) -> S {
    let a = p.coeffs();
    pairwise_sum_fn(a.len(), &|j| {
        a[j] * (from_usize::<S>(2 * j + 1) * t).cos()
    })
}

/// The factored form `cos t (gamma_1 + 2 sum_{j=2}^{N} gamma_j cos(2(j-1)t))`
/// of the same quantity; `gamma_1` is multiplied through rather than divided
/// out so vectors with small `gamma_1` stay well conditioned.
pub fn factored_cosine_value<S: Scalar>(g: &GammaVector<S>, t: S) -> S {
    let gs = g.gammas();
    let tail = pairwise_sum_fn(gs.len() - 1, &|j| {
        gs[j + 1] * (two::<S>() * from_usize::<S>(j + 1) * t).cos()
    });
    t.cos() * (gs[0] + two::<S>() * tail)
}

/// Checks `min_t sum_j a_j cos((2j-1)t) >= -1e-10` on a uniform grid over
/// `[0, pi/2]`. The extremizer attains zero, so its margin sits at rounding
/// level; genuinely infeasible vectors go clearly negative.
pub fn certify_nonnegativity<S: Scalar>(
    p: &OddPolynomial<S>,
    grid_size: usize,
) -> Result<CertificateReport<S>> {
    if grid_size < MIN_CERT_GRID {
        return Err(Error::GridTooSmall {
            got: grid_size,
            min: MIN_CERT_GRID,
        });
    }
    let end = S::PI() * half();
    let mut worst = S::infinity();
    let mut worst_t = S::zero();
    for k in 0..grid_size {
        let t = if k + 1 == grid_size {
            end
        } else {
            end * from_usize(k) / from_usize(grid_size - 1)
        };
        let value = cosine_polynomial_value(p, t);
        if value < worst {
            worst = value;
            worst_t = t;
        }
    }
    Ok(CertificateReport::from_margin(
        StatementId::Nonnegativity,
        worst,
        worst_t,
        grid_size,
        from_f64(NONNEGATIVITY_TOL),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::coeffs_from_gamma;
    use std::f64::consts::PI;

    #[test]
    fn lp_shape() {
        let lp = build_lp::<f64>(2, 64).unwrap();
        assert_eq!(lp.num_vars(), 1);
        assert_eq!(lp.nodes().len(), 64);

        let lp = build_lp::<f64>(3, 64).unwrap();
        assert_eq!(lp.num_vars(), 2);
        assert_eq!(lp.nodes().len(), 64);
        // At t = 0 every cosine is 1, so the row reads 1 + 2 sum c_j.
        assert!(lp.row(0).iter().all(|&a| (a - 2.0).abs() < 1e-15));
        assert_eq!(lp.nodes()[0], 0.0);
        assert_eq!(*lp.nodes().last().unwrap(), PI / 2.0);
    }

    #[test]
    fn lp_rejections() {
        assert!(matches!(build_lp::<f64>(1, 64), Err(Error::OracleTooSmall)));
        assert!(matches!(
            build_lp::<f64>(4, 31),
            Err(Error::GridTooSmall { got: 31, min: 32 })
        ));
    }

    #[test]
    fn two_term_optimum_is_one_half() {
        let lp = build_lp::<f64>(2, 4096).unwrap();
        let sol = solve_lp(&lp).unwrap();
        assert!((sol.objective_value - 0.5).abs() < 1e-5);
        assert!((sol.gamma1 - 2.0 / 3.0).abs() < 1e-5);
        assert!(sol.iterations > 0);
    }

    #[test]
    fn three_term_optimum_matches_fejer_bound() {
        let lp = build_lp::<f64>(3, 4096).unwrap();
        let sol = solve_lp(&lp).unwrap();
        assert!((sol.objective_value - (PI / 4.0).cos()).abs() < 1e-5);
    }

    #[test]
    fn solution_is_feasible_row_by_row() {
        let lp = build_lp::<f64>(5, 1024).unwrap();
        let sol = solve_lp(&lp).unwrap();
        for k in 0..lp.nodes().len() {
            assert!(lp.constraint_value(k, &sol.c) >= -FEASIBILITY_TOL);
        }
    }

    #[test]
    fn duality_gap_and_complementary_slackness() {
        let lp = build_lp::<f64>(6, 2048).unwrap();
        let sol = solve_lp(&lp).unwrap();
        // Internal re-solve to inspect the node weights directly.
        let matrix: Vec<Vec<f64>> = (0..lp.num_vars())
            .map(|j| (0..lp.nodes().len()).map(|k| -lp.row(k)[j]).collect())
            .collect();
        let out = simplex::solve_node_weights(&matrix, MAX_PIVOTS).unwrap();
        assert!((out.objective - sol.objective_value).abs() <= 1e-9);
        assert!(out.weights.iter().all(|&y| y >= -1e-12));
        // Nodes carrying weight are exactly the tight constraints.
        for (k, &w) in out.weights.iter().enumerate() {
            if w > 1e-9 {
                assert!(
                    lp.constraint_value(k, &sol.c).abs() <= 1e-9,
                    "active node {k} not tight"
                );
            }
        }
    }

    #[test]
    fn nested_refinement_is_monotone() {
        // Node-doubling grids are nested, so the optimum cannot increase.
        let mut prev = f64::INFINITY;
        for k in 6..=11 {
            let grid = (1 << k) + 1;
            let sol = solve_lp(&build_lp::<f64>(5, grid).unwrap()).unwrap();
            assert!(
                sol.objective_value <= prev + 1e-12,
                "optimum rose at grid {grid}"
            );
            prev = sol.objective_value;
        }
        assert!((prev - (PI / 6.0).cos()).abs() < 1e-4);
    }

    #[test]
    fn ratios_match_closed_form() {
        for n in [2usize, 4] {
            let report = verify_extremal_against_oracle::<f64>(n, 2048).unwrap();
            assert!(report.passed, "n={n} margin={}", report.worst_margin);
        }
    }

    #[test]
    fn pivot_limit_propagates() {
        let lp = build_lp::<f64>(3, 64).unwrap();
        assert!(matches!(
            solve_lp_with_pivot_limit(&lp, 1),
            Err(Error::IterationLimit { limit: 1 })
        ));
    }

    #[test]
    fn nonnegativity_of_the_trivial_polynomial() {
        let p = OddPolynomial::new(vec![1.0f64]).unwrap();
        let report = certify_nonnegativity(&p, 4096).unwrap();
        assert!(report.passed);
        // cos t attains its grid minimum at t = pi/2, at rounding level.
        assert!(report.worst_margin.abs() < 1e-15);
        assert!((report.worst_t - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn nonnegativity_of_the_extremizer() {
        let p = extremal_coeffs::<f64>(2).unwrap();
        let report = certify_nonnegativity(&p, 4096).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn perturbed_coefficients_fail_nonnegativity() {
        let p = OddPolynomial::new(vec![1.0, 0.9]).unwrap();
        let report = certify_nonnegativity(&p, 4096).unwrap();
        assert!(!report.passed);
        assert!(report.worst_margin < -0.1);
    }

    #[test]
    fn factorization_identity_on_extremal_vectors() {
        for n in [1usize, 2, 7, 30] {
            let p = extremal_coeffs::<f64>(n).unwrap();
            let g = gamma_from_coeffs(&p);
            for frac in [0.0, 0.2, 0.51, 0.99] {
                let t = frac * PI / 2.0;
                let direct = cosine_polynomial_value(&p, t);
                let factored = factored_cosine_value(&g, t);
                assert!((direct - factored).abs() <= 1e-12, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn factorization_identity_survives_the_inverse_map() {
        // Arbitrary gamma vector, pushed through the bijection.
        let g = GammaVector::new(vec![0.7, 0.3, -0.4, 0.05]).unwrap();
        let p = coeffs_from_gamma(&g);
        for frac in [0.13, 0.77] {
            let t = frac * PI / 2.0;
            let diff = cosine_polynomial_value(&p, t) - factored_cosine_value(&g, t);
            assert!(diff.abs() <= 1e-14);
        }
    }
}
