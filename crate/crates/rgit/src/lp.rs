//! Exact rational linear programming.
//!
//! A dense two-phase simplex over `Rat`. The pivot rule is Dantzig's most
//! negative reduced cost with an automatic switch to Bland's rule after a
//! run of degenerate pivots, so every run terminates and every answer is
//! exact. Feasibility queries return a witness point or a Farkas
//! certificate; both are checkable by direct substitution.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qvec::QVec;
use crate::rat::{rat, sign, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

/// One linear constraint `<coeffs, x> rel rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: QVec,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn le(coeffs: QVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Le, rhs }
    }

    pub fn ge(coeffs: QVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Ge, rhs }
    }

    pub fn eq(coeffs: QVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Eq, rhs }
    }

    pub fn satisfied_by(&self, x: &QVec) -> bool {
        let v = self.coeffs.dot(x);
        match self.rel {
            Rel::Le => v <= self.rhs,
            Rel::Ge => v >= self.rhs,
            Rel::Eq => v == self.rhs,
        }
    }

    /// The constraint in `a.x >= b` normal form (used by certificates).
    fn ge_form(&self) -> (QVec, Rat) {
        match self.rel {
            Rel::Ge | Rel::Eq => (self.coeffs.clone(), self.rhs.clone()),
            Rel::Le => (self.coeffs.neg(), -self.rhs.clone()),
        }
    }
}

/// Outcome of a pure feasibility query.
#[derive(Clone, Debug)]
pub enum Feasibility {
    Feasible { witness: QVec },
    /// Farkas multipliers, one per constraint (nonnegative on inequalities,
    /// free on equalities): the combination of `a.x >= b` normal forms has a
    /// zero linear part and a positive constant part.
    Infeasible { certificate: QVec },
}

/// Outcome of an optimization query.
#[derive(Clone, Debug)]
pub enum LpOutcome {
    Optimal { witness: QVec, value: Rat },
    Infeasible { certificate: QVec },
    Unbounded,
}

/// Checks `x` against every constraint.
pub fn verify_witness(constraints: &[Constraint], x: &QVec) -> bool {
    constraints.iter().all(|c| c.satisfied_by(x))
}

/// Verifies a Farkas certificate by direct substitution.
pub fn verify_certificate(constraints: &[Constraint], lambda: &QVec) -> bool {
    if lambda.dim() != constraints.len() {
        return false;
    }
    let dim = match constraints.first() {
        Some(c) => c.coeffs.dim(),
        None => return false,
    };
    let mut lin = QVec::zero(dim);
    let mut cst = Rat::zero();
    for (c, l) in constraints.iter().zip(lambda.iter()) {
        if c.rel != Rel::Eq && sign(l) < 0 {
            return false;
        }
        let (a, b) = c.ge_form();
        lin = lin.add(&a.scale(l));
        cst += b * l;
    }
    lin.is_zero() && sign(&cst) > 0
}

/// Feasibility of a constraint system over free variables.
pub fn lp_feasible(dim: usize, constraints: &[Constraint]) -> Result<Feasibility> {
    let mut t = Tableau::build(dim, constraints)?;
    match t.phase1() {
        Phase1::Feasible => {
            let witness = t.witness();
            debug_assert!(verify_witness(constraints, &witness));
            Ok(Feasibility::Feasible { witness })
        }
        Phase1::Infeasible { certificate } => {
            debug_assert!(verify_certificate(constraints, &certificate));
            Ok(Feasibility::Infeasible { certificate })
        }
    }
}

/// Maximizes `<objective, x>` subject to the constraints.
pub fn lp_maximize(objective: &QVec, constraints: &[Constraint]) -> Result<LpOutcome> {
    let dim = objective.dim();
    let mut t = Tableau::build(dim, constraints)?;
    match t.phase1() {
        Phase1::Infeasible { certificate } => {
            debug_assert!(verify_certificate(constraints, &certificate));
            Ok(LpOutcome::Infeasible { certificate })
        }
        Phase1::Feasible => {
            if t.phase2(objective) {
                let witness = t.witness();
                debug_assert!(verify_witness(constraints, &witness));
                let value = objective.dot(&witness);
                Ok(LpOutcome::Optimal { witness, value })
            } else {
                Ok(LpOutcome::Unbounded)
            }
        }
    }
}

/// A strictly feasible point of `{strict together with weak}` where every
/// `strict` inequality must hold with room to spare. Implemented by
/// maximizing a single slack variable bounded by all strict constraints.
/// Returns `None` when no interior point exists.
pub fn strict_witness(
    dim: usize,
    strict: &[Constraint],
    weak: &[Constraint],
) -> Result<Option<QVec>> {
    let ext = dim + 1;
    let mut constraints = Vec::with_capacity(strict.len() + weak.len() + 1);
    for c in strict {
        let mut coeffs: Vec<Rat> = c.coeffs.coords().to_vec();
        match c.rel {
            Rel::Le => coeffs.push(rat(1)),
            Rel::Ge => coeffs.push(rat(-1)),
            Rel::Eq => {
                return Err(Error::InvalidInput(
                    "equality cannot be strict".to_string(),
                ))
            }
        }
        constraints.push(Constraint {
            coeffs: QVec::new(coeffs),
            rel: c.rel,
            rhs: c.rhs.clone(),
        });
    }
    for c in weak {
        let mut coeffs: Vec<Rat> = c.coeffs.coords().to_vec();
        coeffs.push(Rat::zero());
        constraints.push(Constraint {
            coeffs: QVec::new(coeffs),
            rel: c.rel,
            rhs: c.rhs.clone(),
        });
    }
    let mut t_cap = vec![Rat::zero(); ext];
    t_cap[dim] = rat(1);
    constraints.push(Constraint::le(QVec::new(t_cap.clone()), rat(1)));

    // any point with positive slack settles the question, so stop the
    // optimization as soon as the objective turns positive
    let objective = QVec::new(t_cap);
    let mut t = Tableau::build(ext, &constraints)?;
    match t.phase1() {
        Phase1::Infeasible { .. } => Ok(None),
        Phase1::Feasible => {
            let bounded = t.phase2_inner(&objective, true);
            debug_assert!(bounded, "slack objective is capped");
            let witness = t.witness();
            if sign(&objective.dot(&witness)) > 0 {
                debug_assert!(verify_witness(&constraints, &witness));
                Ok(Some(QVec::new(witness.coords()[..dim].to_vec())))
            } else {
                Ok(None)
            }
        }
    }
}

enum Phase1 {
    Feasible,
    Infeasible { certificate: QVec },
}

/// Pivots in a row without strict objective improvement before the rule
/// switches from Dantzig to Bland.
const STALL_LIMIT: usize = 24;

/// Dense simplex tableau. Inequalities are normalized to `<=` form, so rows
/// with nonnegative right-hand sides start from their own slack; only the
/// remaining rows carry artificial variables. Columns: `u_0..u_{d-1}`,
/// `w_0..w_{d-1}` (the free variable split `x = u - w`), one slack per
/// inequality, artificials, then the right-hand side. The cost row sits
/// below the constraint rows.
struct Tableau {
    dim: usize,
    rows: usize,
    n_struct: usize,
    n_total: usize,
    n_art: usize,
    tab: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    row_sign: Vec<i8>,
    normalized_rel: Vec<Rel>,
    slack_col: Vec<Option<usize>>,
    art_col: Vec<Option<usize>>,
}

impl Tableau {
    fn build(dim: usize, constraints: &[Constraint]) -> Result<Self> {
        for c in constraints {
            c.coeffs.check_dim(dim)?;
        }
        let rows = constraints.len();
        let n_slack = constraints.iter().filter(|c| c.rel != Rel::Eq).count();
        let n_struct = 2 * dim + n_slack;

        // normalize Ge to Le; decide which rows need artificials
        let mut normalized: Vec<(QVec, Rat, Rel)> = Vec::with_capacity(rows);
        for c in constraints {
            match c.rel {
                Rel::Le => normalized.push((c.coeffs.clone(), c.rhs.clone(), Rel::Le)),
                Rel::Ge => normalized.push((c.coeffs.neg(), -c.rhs.clone(), Rel::Le)),
                Rel::Eq => normalized.push((c.coeffs.clone(), c.rhs.clone(), Rel::Eq)),
            }
        }
        let needs_art: Vec<bool> = normalized
            .iter()
            .map(|(_, b, rel)| *rel == Rel::Eq || sign(b) < 0)
            .collect();
        let n_art = needs_art.iter().filter(|&&x| x).count();
        let n_total = n_struct + n_art;

        let mut tab = vec![vec![Rat::zero(); n_total + 1]; rows + 1];
        let mut basis = vec![0usize; rows];
        let mut row_sign = vec![1i8; rows];
        let mut slack_col = vec![None; rows];
        let mut art_col = vec![None; rows];
        let mut normalized_rel = Vec::with_capacity(rows);

        let mut next_slack = 2 * dim;
        let mut next_art = n_struct;
        for (i, (coeffs, rhs, rel)) in normalized.iter().enumerate() {
            normalized_rel.push(*rel);
            for k in 0..dim {
                tab[i][k] = coeffs[k].clone();
                tab[i][dim + k] = -coeffs[k].clone();
            }
            if *rel == Rel::Le {
                tab[i][next_slack] = rat(1);
                slack_col[i] = Some(next_slack);
                next_slack += 1;
            }
            tab[i][n_total] = rhs.clone();
            if sign(&tab[i][n_total]) < 0 {
                row_sign[i] = -1;
                for v in tab[i].iter_mut() {
                    *v = -v.clone();
                }
            }
            if needs_art[i] {
                tab[i][next_art] = rat(1);
                basis[i] = next_art;
                art_col[i] = Some(next_art);
                next_art += 1;
            } else {
                basis[i] = slack_col[i].expect("rows without artificials have slacks");
            }
        }

        Ok(Tableau {
            dim,
            rows,
            n_struct,
            n_total,
            n_art,
            tab,
            basis,
            row_sign,
            normalized_rel,
            slack_col,
            art_col,
        })
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.tab[row][col].clone().recip();
        for v in self.tab[row].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..=self.rows {
            if i == row || self.tab[i][col].is_zero() {
                continue;
            }
            let f = self.tab[i][col].clone();
            for j in 0..=self.n_total {
                let v = &self.tab[i][j] - &f * &self.tab[row][j];
                self.tab[i][j] = v;
            }
        }
        self.basis[row] = col;
    }

    /// Minimization over the columns below `enter_limit`: Dantzig's rule
    /// with a Bland fallback after `STALL_LIMIT` degenerate pivots, which
    /// keeps termination guaranteed. With `stop_when_negative` the loop
    /// also returns once the objective value drops below zero, leaving a
    /// feasible (not necessarily optimal) basis. Returns false when
    /// unbounded.
    fn minimize(&mut self, enter_limit: usize) -> bool {
        self.minimize_inner(enter_limit, false)
    }

    fn minimize_inner(&mut self, enter_limit: usize, stop_when_negative: bool) -> bool {
        let mut stall = 0usize;
        loop {
            let cost = self.rows;
            // tab[cost][rhs] tracks -objective for the minimized cost
            if stop_when_negative && sign(&self.tab[cost][self.n_total]) > 0 {
                return true;
            }
            let enter = if stall >= STALL_LIMIT {
                (0..enter_limit).find(|&j| sign(&self.tab[cost][j]) < 0)
            } else {
                let mut best: Option<usize> = None;
                for j in 0..enter_limit {
                    if sign(&self.tab[cost][j]) < 0
                        && best.is_none_or(|b| self.tab[cost][j] < self.tab[cost][b])
                    {
                        best = Some(j);
                    }
                }
                best
            };
            let Some(enter) = enter else {
                return true;
            };
            let mut leave: Option<usize> = None;
            for i in 0..self.rows {
                if sign(&self.tab[i][enter]) <= 0 {
                    continue;
                }
                leave = match leave {
                    None => Some(i),
                    Some(l) => {
                        let ri = &self.tab[i][self.n_total] / &self.tab[i][enter];
                        let rl = &self.tab[l][self.n_total] / &self.tab[l][enter];
                        if ri < rl || (ri == rl && self.basis[i] < self.basis[l]) {
                            Some(i)
                        } else {
                            Some(l)
                        }
                    }
                };
            }
            let Some(leave) = leave else {
                return false;
            };
            let before = self.tab[cost][self.n_total].clone();
            self.pivot(leave, enter);
            if self.tab[cost][self.n_total] == before {
                stall += 1;
            } else {
                stall = 0;
            }
        }
    }

    fn phase1(&mut self) -> Phase1 {
        if self.n_art == 0 {
            return Phase1::Feasible; // the slack basis is already feasible
        }
        let cost = self.rows;
        // cost = sum of artificials; zero it out over the basic artificials
        for j in self.n_struct..self.n_total {
            self.tab[cost][j] = rat(1);
        }
        for i in 0..self.rows {
            if self.art_col[i] != Some(self.basis[i]) {
                continue;
            }
            let row = self.tab[i].clone();
            for (c, r) in self.tab[cost].iter_mut().zip(row.iter()) {
                *c = &*c - r;
            }
        }
        let bounded = self.minimize(self.n_struct);
        debug_assert!(bounded, "phase-1 objective is bounded below");
        let value = -self.tab[cost][self.n_total].clone();
        if !value.is_zero() {
            return Phase1::Infeasible {
                certificate: self.farkas_certificate(),
            };
        }
        // drive basic artificials out; drop redundant rows
        let mut i = 0;
        while i < self.rows {
            if self.art_col[i] != Some(self.basis[i]) {
                i += 1;
                continue;
            }
            match (0..self.n_struct).find(|&j| !self.tab[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.tab.remove(i);
                    self.basis.remove(i);
                    self.art_col.remove(i);
                    self.slack_col.remove(i);
                    self.rows -= 1;
                }
            }
        }
        Phase1::Feasible
    }

    /// Dual multipliers from the optimal phase-1 cost row, mapped back to
    /// the `a.x >= b` normal forms of the original constraints.
    fn farkas_certificate(&self) -> QVec {
        let cost = self.rows;
        let mut lambda = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            // y_i = c_basis B^{-1} e_i, read from reduced costs of the
            // row's own column (artificial cost 1, slack cost 0)
            let y = match self.art_col[i] {
                Some(a) => rat(1) - &self.tab[cost][a],
                None => {
                    let s = self.slack_col[i].expect("inequality rows have slacks");
                    let y = -self.tab[cost][s].clone();
                    if self.row_sign[i] < 0 {
                        -y
                    } else {
                        y
                    }
                }
            };
            let mu = if self.row_sign[i] < 0 { -y } else { y };
            // internal rows are Le-normalized, whose ge-form is the
            // negation; equalities keep their sign
            lambda.push(match self.normalized_rel[i] {
                Rel::Eq => mu,
                _ => -mu,
            });
        }
        QVec::new(lambda)
    }

    /// Maximizes `<objective, x>`; returns false when unbounded.
    fn phase2(&mut self, objective: &QVec) -> bool {
        self.phase2_inner(objective, false)
    }

    /// As `phase2`; with `stop_when_positive` the run ends at the first
    /// basis whose objective value is positive.
    fn phase2_inner(&mut self, objective: &QVec, stop_when_positive: bool) -> bool {
        let cost = self.rows;
        for j in 0..=self.n_total {
            self.tab[cost][j] = Rat::zero();
        }
        for k in 0..self.dim {
            self.tab[cost][k] = -objective[k].clone();
            self.tab[cost][self.dim + k] = objective[k].clone();
        }
        for i in 0..self.rows {
            let b = self.basis[i];
            if self.tab[cost][b].is_zero() {
                continue;
            }
            let f = self.tab[cost][b].clone();
            for j in 0..=self.n_total {
                let v = &self.tab[cost][j] - &f * &self.tab[i][j];
                self.tab[cost][j] = v;
            }
        }
        // maximizing `obj` minimizes `-obj`, so -(-obj) = obj is stored in
        // the right-hand side cell of the cost row
        self.minimize_inner(self.n_struct, stop_when_positive)
    }

    fn witness(&self) -> QVec {
        let mut x = vec![Rat::zero(); self.dim];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.dim {
                x[b] += &self.tab[i][self.n_total];
            } else if b < 2 * self.dim {
                x[b - self.dim] -= &self.tab[i][self.n_total];
            }
        }
        QVec::new(x)
    }
}
