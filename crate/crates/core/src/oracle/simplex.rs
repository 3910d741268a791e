//! Two-phase primal simplex with Bland's rule, applied to the node-weight
//! form of the discretized problem.
//!
//! The grid problem maximizes `c_1` over few free ratios under thousands of
//! inequality rows. Running the simplex on that shape directly drags a
//! thousands-wide basis through hundreds of degenerate pivots and the
//! tableau drifts. Its linear-programming dual,
//!
//! ```text
//! minimize sum_k y_k   subject to   M y = e_1,  y >= 0,
//! ```
//!
//! has only `nv = N - 1` equality rows, so the basis stays tiny and the
//! tableau exact to rounding. The optimal `y` weights the active grid
//! nodes; the multipliers `pi` of the equality rows are exactly the optimal
//! ratios of the original problem, read off the objective row under the
//! artificial columns.

use crate::scalar::from_f64;
use crate::{Error, Result, Scalar};

/// Reduced costs above this (for a minimization) do not enter.
const REDUCED_COST_TOL: f64 = 1e-9;

/// Entries at or below this are not eligible pivots.
const PIVOT_TOL: f64 = 1e-9;

/// Slack for ratio-test ties, resolved by Bland's smallest-index rule.
const RATIO_TIE_TOL: f64 = 1e-12;

/// Phase-one objective above this means the equality rows are inconsistent.
const FEAS_PHASE_TOL: f64 = 1e-9;

#[derive(Debug)]
pub(crate) struct NodeWeightSolution<S> {
    /// Multipliers of the equality rows; the optimal ratios `c`.
    pub multipliers: Vec<S>,
    /// Node weights `y_k`, nonzero only on the active nodes.
    pub weights: Vec<S>,
    /// `sum_k y_k` at the optimum.
    pub objective: S,
    /// Pivots performed across both phases.
    pub iterations: usize,
}

struct Tableau<S> {
    /// `nv` rows over `m` node columns, `nv` artificial columns, then the
    /// right-hand side. Row i reads `x_basis[i] = rhs - sum coeff * x`.
    rows: Vec<Vec<S>>,
    reduced: Vec<S>,
    objective: S,
    basis: Vec<usize>,
    width: usize,
}

impl<S: Scalar> Tableau<S> {
    fn pivot(&mut self, ip: usize, kp: usize) {
        let inv = S::one() / self.rows[ip][kp];
        for entry in self.rows[ip].iter_mut() {
            *entry = *entry * inv;
        }
        self.rows[ip][kp] = S::one();
        for i in 0..self.rows.len() {
            if i == ip {
                continue;
            }
            let factor = self.rows[i][kp];
            if factor == S::zero() {
                continue;
            }
            for k in 0..=self.width {
                self.rows[i][k] = self.rows[i][k] - factor * self.rows[ip][k];
            }
            self.rows[i][kp] = S::zero();
        }
        let factor = self.reduced[kp];
        if factor != S::zero() {
            for k in 0..self.width {
                self.reduced[k] = self.reduced[k] - factor * self.rows[ip][k];
            }
            self.reduced[kp] = S::zero();
            // The entering variable comes in at the new right-hand side.
            self.objective = self.objective + factor * self.rows[ip][self.width];
        }
        self.basis[ip] = kp;
    }

    /// Pivots until no column below `limit` improves, or the budget runs out.
    ///
    /// Both phases minimize objectives that are bounded below by zero, so a
    /// column with a slightly negative reduced cost and no admissible pivot
    /// entry can only be rounding noise near optimality; such columns are
    /// set aside rather than reported as an unbounded direction.
    fn run_phase(&mut self, limit: usize, iterations: &mut usize, max_pivots: usize) -> Result<()> {
        let rc_tol: S = from_f64(REDUCED_COST_TOL);
        let pivot_tol: S = from_f64(PIVOT_TOL);
        let tie_tol: S = from_f64(RATIO_TIE_TOL);
        let mut unusable = vec![false; limit];
        loop {
            // Bland: smallest column index with an improving reduced cost.
            let entering = (0..limit).find(|&k| !unusable[k] && self.reduced[k] < -rc_tol);
            let Some(kp) = entering else { return Ok(()) };

            let mut leaving: Option<(usize, S)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][kp];
                if a <= pivot_tol {
                    continue;
                }
                let ratio = self.rows[i][self.width].max(S::zero()) / a;
                match leaving {
                    None => leaving = Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br - tie_tol
                            || ((ratio - br).abs() <= tie_tol && self.basis[i] < self.basis[bi])
                        {
                            leaving = Some((i, ratio));
                        }
                    }
                }
            }
            let Some((ip, _)) = leaving else {
                unusable[kp] = true;
                continue;
            };

            if *iterations >= max_pivots {
                return Err(Error::IterationLimit { limit: max_pivots });
            }
            *iterations += 1;
            self.pivot(ip, kp);
            // A pivot changes every column; retry the set-aside ones.
            unusable.fill(false);
        }
    }
}

/// Solves `min sum y` subject to `M y = e_1`, `y >= 0`, where `matrix` holds
/// the `nv` rows of `M` over `m` node columns.
pub(crate) fn solve_node_weights<S: Scalar>(
    matrix: &[Vec<S>],
    max_pivots: usize,
) -> Result<NodeWeightSolution<S>> {
    let nv = matrix.len();
    let m = matrix[0].len();
    debug_assert!(matrix.iter().all(|row| row.len() == m));
    let width = m + nv;

    let rows: Vec<Vec<S>> = (0..nv)
        .map(|j| {
            let mut row = Vec::with_capacity(width + 1);
            row.extend(matrix[j].iter().copied());
            for i in 0..nv {
                row.push(if i == j { S::one() } else { S::zero() });
            }
            row.push(if j == 0 { S::one() } else { S::zero() });
            row
        })
        .collect();

    // Phase-one costs: 1 on artificials, 0 on nodes; with the artificial
    // basis the reduced cost of node k is -sum_j M[j][k] and the objective
    // starts at -sum of the right-hand sides.
    let reduced: Vec<S> = (0..width)
        .map(|k| {
            if k < m {
                let mut acc = S::zero();
                for row in &rows {
                    acc = acc - row[k];
                }
                acc
            } else {
                S::zero()
            }
        })
        .collect();
    let objective = rows.iter().fold(S::zero(), |acc, row| acc + row[width]);

    let mut tab = Tableau {
        rows,
        reduced,
        objective,
        basis: (m..m + nv).collect(),
        width,
    };
    let mut iterations = 0usize;

    tab.run_phase(m, &mut iterations, max_pivots)?;
    if tab.objective.abs() > from_f64(FEAS_PHASE_TOL) {
        return Err(Error::SolverInconsistent {
            reason: "equality rows inconsistent at phase one".into(),
        });
    }

    // Any artificial still basic sits at zero; move it out where possible so
    // phase two prices the node columns cleanly.
    let pivot_tol: S = from_f64(PIVOT_TOL);
    for ip in 0..nv {
        if tab.basis[ip] < m {
            continue;
        }
        if let Some(kp) = (0..m).find(|&k| tab.rows[ip][k].abs() > pivot_tol) {
            if iterations >= max_pivots {
                return Err(Error::IterationLimit { limit: max_pivots });
            }
            iterations += 1;
            tab.pivot(ip, kp);
        }
    }

    // Phase two: min sum y. Fresh reduced costs r_k = c_k - c_B^T (B^-1 A_k)
    // with cost 1 on node columns and 0 on artificials.
    for k in 0..width {
        let cost = if k < m { S::one() } else { S::zero() };
        let mut priced = S::zero();
        for (i, row) in tab.rows.iter().enumerate() {
            if tab.basis[i] < m {
                priced = priced + row[k];
            }
        }
        tab.reduced[k] = cost - priced;
    }
    tab.objective = S::zero();
    for i in 0..nv {
        if tab.basis[i] < m {
            tab.objective = tab.objective + tab.rows[i][tab.width];
        }
    }

    tab.run_phase(m, &mut iterations, max_pivots)?;

    let mut weights = vec![S::zero(); m];
    for (i, &var) in tab.basis.iter().enumerate() {
        if var < m {
            weights[var] = tab.rows[i][tab.width];
        }
    }
    // The multiplier of row j is minus the reduced cost of artificial j.
    let multipliers: Vec<S> = (0..nv).map(|j| -tab.reduced[m + j]).collect();
    let objective = tab.objective;

    Ok(NodeWeightSolution {
        multipliers,
        weights,
        objective,
        iterations,
    })
}
