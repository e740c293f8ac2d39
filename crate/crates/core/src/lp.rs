//! Exact rational linear programming.
//!
//! `solve` runs a dense two-phase tableau simplex with Bland's rule, so it
//! terminates on degenerate problems and is deterministic. `enumerate_vertices`
//! lists basic feasible solutions by trying every candidate basis.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Per-variable bounds; `None` means unbounded in that direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Default for Bound {
    fn default() -> Self {
        Bound {
            lower: Some(Rational::zero()),
            upper: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub direction: Direction,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<Bound>,
}

impl LinearProgram {
    /// A program over `objective.len()` variables, all non-negative by default.
    pub fn new(direction: Direction, objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LinearProgram {
            direction,
            objective,
            constraints: Vec::new(),
            bounds: vec![Bound::default(); n],
        }
    }

    /// A pure constraint system (zero objective).
    pub fn feasibility(num_vars: usize) -> Self {
        LinearProgram::new(Direction::Maximize, vec![Rational::zero(); num_vars])
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn bound(&mut self, var: usize, lower: Option<Rational>, upper: Option<Rational>) -> &mut Self {
        self.bounds[var] = Bound { lower, upper };
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.bounds.len() != n {
            return Err(Error::invalid(format!(
                "{} bounds for {n} variables",
                self.bounds.len()
            )));
        }
        for (k, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(Error::invalid(format!(
                    "constraint {k} has {} coefficients, expected {n}",
                    c.coeffs.len()
                )));
            }
        }
        Ok(())
    }

    /// Exact feasibility check of a point.
    pub fn satisfies(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let bounds_ok = self
            .bounds
            .iter()
            .zip(x)
            .all(|(b, v)| b.lower.as_ref().is_none_or(|l| v >= l) && b.upper.as_ref().is_none_or(|u| v <= u));
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs = rational::dot(&c.coeffs, x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        rational::dot(&self.objective, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Optimal objective value, when `status` is `Optimal`.
    pub value: Option<Rational>,
    /// Primal solution in the original variables (empty unless optimal).
    pub solution: Vec<Rational>,
    /// Basic columns of the final tableau in the internal standard form.
    pub basis: Vec<usize>,
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    fn without_solution(status: LpStatus) -> Self {
        LpOutcome {
            status,
            value: None,
            solution: Vec::new(),
            basis: Vec::new(),
        }
    }
}

/// Original variable j = offset + Σ sign·y_col.
#[derive(Clone, Debug)]
struct VarMap {
    offset: Rational,
    cols: Vec<(usize, bool)>,
}

/// `A y = b`, `y >= 0`, `b >= 0`, maximize `c·y + c0`.
#[derive(Clone, Debug)]
struct StdForm {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    c: Vec<Rational>,
    c0: Rational,
    vars: Vec<VarMap>,
    has_free: bool,
}

impl StdForm {
    fn build(lp: &LinearProgram) -> StdForm {
        let mut vars = Vec::with_capacity(lp.num_vars());
        let mut ncols = 0;
        let mut has_free = false;
        // (column, upper bound on that column) rows to add
        let mut upper_rows: Vec<(usize, Rational)> = Vec::new();
        for b in &lp.bounds {
            match (&b.lower, &b.upper) {
                (Some(l), u) => {
                    if let Some(u) = u {
                        upper_rows.push((ncols, u - l));
                    }
                    vars.push(VarMap {
                        offset: l.clone(),
                        cols: vec![(ncols, true)],
                    });
                    ncols += 1;
                }
                (None, Some(u)) => {
                    vars.push(VarMap {
                        offset: u.clone(),
                        cols: vec![(ncols, false)],
                    });
                    ncols += 1;
                }
                (None, None) => {
                    has_free = true;
                    vars.push(VarMap {
                        offset: Rational::zero(),
                        cols: vec![(ncols, true), (ncols + 1, false)],
                    });
                    ncols += 2;
                }
            }
        }
        let structural = ncols;

        let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
        for c in &lp.constraints {
            let mut coeffs = vec![Rational::zero(); structural];
            let mut rhs = c.rhs.clone();
            for (j, a) in c.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                rhs -= a * &vars[j].offset;
                for &(col, pos) in &vars[j].cols {
                    if pos {
                        coeffs[col] += a;
                    } else {
                        coeffs[col] -= a;
                    }
                }
            }
            rows.push((coeffs, c.relation, rhs));
        }
        for (col, ub) in upper_rows {
            let mut coeffs = vec![Rational::zero(); structural];
            coeffs[col] = Rational::one();
            rows.push((coeffs, Relation::Le, ub));
        }

        let slacks = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let total = structural + slacks;
        let mut a = Vec::with_capacity(rows.len());
        let mut bvec = Vec::with_capacity(rows.len());
        let mut next_slack = structural;
        for (coeffs, rel, rhs) in rows {
            let mut row = coeffs;
            row.resize(total, Rational::zero());
            match rel {
                Relation::Le => {
                    row[next_slack] = Rational::one();
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -Rational::one();
                    next_slack += 1;
                }
                Relation::Eq => {}
            }
            let (row, rhs) = if rhs.is_negative() {
                (row.into_iter().map(|x| -x).collect(), -rhs)
            } else {
                (row, rhs)
            };
            a.push(row);
            bvec.push(rhs);
        }

        let sign = match lp.direction {
            Direction::Maximize => Rational::one(),
            Direction::Minimize => -Rational::one(),
        };
        let mut c = vec![Rational::zero(); total];
        let mut c0 = Rational::zero();
        for (j, coef) in lp.objective.iter().enumerate() {
            let coef = &sign * coef;
            c0 += &coef * &vars[j].offset;
            for &(col, pos) in &vars[j].cols {
                if pos {
                    c[col] += &coef;
                } else {
                    c[col] -= &coef;
                }
            }
        }
        StdForm {
            a,
            b: bvec,
            c,
            c0,
            vars,
            has_free,
        }
    }

    fn cols(&self) -> usize {
        self.c.len()
    }

    fn to_original(&self, y: &[Rational]) -> Vec<Rational> {
        self.vars
            .iter()
            .map(|v| {
                v.cols.iter().fold(
                    v.offset.clone(),
                    |acc, &(col, pos)| {
                        if pos {
                            acc + &y[col]
                        } else {
                            acc - &y[col]
                        }
                    },
                )
            })
            .collect()
    }
}

/// Dense tableau with an explicit reduced-cost row. `d[cols]` holds −z.
struct Tableau {
    t: Vec<Vec<Rational>>,
    d: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.t[r][e].clone();
        for x in self.t[r].iter_mut() {
            *x /= &p;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if !self.d[e].is_zero() {
            let f = self.d[e].clone();
            for (x, y) in self.d.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = e;
    }

    fn set_costs(&mut self, c: &[Rational]) {
        let mut d: Vec<Rational> = c.to_vec();
        d.push(Rational::zero());
        for (i, row) in self.t.iter().enumerate() {
            let cb = &c[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (x, y) in d.iter_mut().zip(row) {
                *x -= cb * y;
            }
        }
        self.d = d;
    }

    /// Maximizes with Bland's rule over entering columns `< allowed`.
    /// Returns false when unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| self.d[j].is_positive());
            let Some(e) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.t.iter().enumerate() {
                if !row[e].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[e];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, e),
            }
        }
    }
}

/// Solves a linear program exactly.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let sf = StdForm::build(lp);
    let n = sf.cols();
    let m = sf.a.len();

    // phase 1: one artificial per row
    let width = n + m;
    let t: Vec<Vec<Rational>> =
        sf.a.iter()
            .zip(&sf.b)
            .enumerate()
            .map(|(i, (row, rhs))| {
                let mut r = row.clone();
                r.resize(width, Rational::zero());
                r[n + i] = Rational::one();
                r.push(rhs.clone());
                r
            })
            .collect();
    let mut tab = Tableau {
        t,
        d: Vec::new(),
        basis: (n..n + m).collect(),
        cols: width,
    };
    let mut c1 = vec![Rational::zero(); width];
    for x in c1.iter_mut().skip(n) {
        *x = -Rational::one();
    }
    tab.set_costs(&c1);
    tab.run(width);
    if !tab.d[width].is_zero() {
        return Ok(LpOutcome::without_solution(LpStatus::Infeasible));
    }

    // drive artificials out of the basis; drop redundant rows
    let mut r = 0;
    while r < tab.t.len() {
        if tab.basis[r] >= n {
            match (0..n).find(|&j| !tab.t[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.t.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in tab.t.iter_mut() {
        let rhs = row[width].clone();
        row.truncate(n);
        row.push(rhs);
    }
    tab.cols = n;

    // phase 2
    tab.set_costs(&sf.c);
    if !tab.run(n) {
        return Ok(LpOutcome::without_solution(LpStatus::Unbounded));
    }
    let mut y = vec![Rational::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        y[b] = tab.t[i][n].clone();
    }
    let solution = sf.to_original(&y);
    let value = lp.objective_value(&solution);
    debug_assert_eq!(
        value,
        match lp.direction {
            Direction::Maximize => -tab.d[n].clone() + &sf.c0,
            Direction::Minimize => tab.d[n].clone() - &sf.c0,
        }
    );
    if !lp.satisfies(&solution) {
        return Err(Error::internal("simplex returned an infeasible point"));
    }
    Ok(LpOutcome {
        status: LpStatus::Optimal,
        value: Some(value),
        solution,
        basis: tab.basis,
    })
}

/// Vertices of the bounded polyhedron given by the constraints and bounds of
/// `lp` (the objective is ignored), exact, deduplicated and sorted.
///
/// Free variables are rejected, since they break the correspondence between
/// basic solutions of the standard form and vertices.
pub fn enumerate_vertices(lp: &LinearProgram) -> Result<Vec<Vec<Rational>>> {
    lp.validate()?;
    let sf = StdForm::build(lp);
    if sf.has_free {
        return Err(Error::invalid(
            "vertex enumeration needs every variable bounded on one side",
        ));
    }
    let n = sf.cols();
    let mut probe = LinearProgram::new(Direction::Maximize, vec![Rational::one(); n]);
    for (row, rhs) in sf.a.iter().zip(&sf.b) {
        probe.constrain(row.clone(), Relation::Eq, rhs.clone());
    }
    match solve(&probe)?.status {
        LpStatus::Infeasible => return Ok(Vec::new()),
        LpStatus::Unbounded => return Err(Error::invalid("polyhedron is unbounded")),
        LpStatus::Optimal => {}
    }

    // independent rows only
    let mut aug: Vec<Vec<Rational>> =
        sf.a.iter()
            .zip(&sf.b)
            .map(|(row, rhs)| {
                let mut r = row.clone();
                r.push(rhs.clone());
                r
            })
            .collect();
    let pivots = rref(&mut aug);
    aug.truncate(pivots.len());
    let rank = pivots.len();
    let (a, b): (Vec<Vec<Rational>>, Vec<Rational>) = aug
        .into_iter()
        .map(|mut r| {
            let rhs = r.pop().unwrap();
            (r, rhs)
        })
        .unzip();

    let mut found = BTreeSet::new();
    if rank == 0 {
        found.insert(sf.to_original(&vec![Rational::zero(); n]));
    }
    for cols in Combinations::new(n, rank) {
        let sq: Vec<Vec<Rational>> = a
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let Some(yb) = solve_square(&sq, &b) else { continue };
        if yb.iter().any(Signed::is_negative) {
            continue;
        }
        let mut y = vec![Rational::zero(); n];
        for (&c, v) in cols.iter().zip(yb) {
            y[c] = v;
        }
        found.insert(sf.to_original(&y));
    }
    Ok(found.into_iter().collect())
}

/// Reduces `m` in place to reduced row echelon form, returning pivot columns.
/// Pivots are searched in every column, including a trailing right-hand side.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Some solution of `A x = b` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve_linear_system(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][n].clone();
    }
    Some(x)
}

/// Unique solution of a square system, `None` if singular.
fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// k-subsets of 0..n in lexicographic order.
pub struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let cur = if k <= n && k > 0 { Some((0..k).collect()) } else { None };
        Combinations { n, cur }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn one_variable() {
        let mut lp = LinearProgram::new(Direction::Maximize, v(&[1]));
        lp.constrain(v(&[1]), Relation::Le, int(1));
        let out = solve(&lp).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, Some(int(1)));
    }

    #[test]
    fn simplex_face() {
        let mut lp = LinearProgram::new(Direction::Maximize, v(&[1, 1]));
        lp.constrain(v(&[1, 1]), Relation::Le, int(1));
        let out = solve(&lp).unwrap();
        assert_eq!(out.value, Some(int(1)));
        assert!(lp.satisfies(&out.solution));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(Direction::Maximize, v(&[1]));
        lp.constrain(v(&[1]), Relation::Ge, int(2));
        lp.constrain(v(&[1]), Relation::Le, int(1));
        assert_eq!(solve(&lp).unwrap().status, LpStatus::Infeasible);

        let mut lp = LinearProgram::new(Direction::Maximize, v(&[1, -1]));
        lp.constrain(v(&[1, -1]), Relation::Ge, int(0));
        assert_eq!(solve(&lp).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn minimize_with_bounds_and_free_vars() {
        // min x - y, -1 <= x <= 2, y free, y <= 3, x + y >= 0
        let mut lp = LinearProgram::new(Direction::Minimize, v(&[1, -1]));
        lp.bound(0, Some(int(-1)), Some(int(2)));
        lp.bound(1, None, None);
        lp.constrain(v(&[0, 1]), Relation::Le, int(3));
        lp.constrain(v(&[1, 1]), Relation::Ge, int(0));
        let out = solve(&lp).unwrap();
        assert_eq!(out.value, Some(int(-4)));
        assert_eq!(out.solution, v(&[-1, 3]));
    }

    #[test]
    fn dimension_mismatch() {
        let mut lp = LinearProgram::new(Direction::Maximize, v(&[1, 1]));
        lp.constrain(v(&[1]), Relation::Le, int(1));
        assert!(solve(&lp).is_err());
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook largest-coefficient rule.
        let mut lp = LinearProgram::new(Direction::Maximize, vec![ratio(3, 4), int(-150), ratio(1, 50), int(-6)]);
        lp.constrain(vec![ratio(1, 4), int(-60), ratio(-1, 25), int(9)], Relation::Le, int(0));
        lp.constrain(vec![ratio(1, 2), int(-90), ratio(-1, 50), int(3)], Relation::Le, int(0));
        lp.constrain(v(&[0, 0, 1, 0]), Relation::Le, int(1));
        let out = solve(&lp).unwrap();
        assert_eq!(out.value, Some(ratio(1, 20)));
    }

    #[test]
    fn deterministic_basis() {
        let mut lp = LinearProgram::new(Direction::Maximize, v(&[1, 1, 1]));
        lp.constrain(v(&[1, 1, 1]), Relation::Le, int(1));
        lp.constrain(v(&[1, 0, 0]), Relation::Le, int(1));
        let a = solve(&lp).unwrap();
        let b = solve(&lp.clone()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn simplex_vertices() {
        let mut lp = LinearProgram::feasibility(3);
        lp.constrain(v(&[1, 1, 1]), Relation::Eq, int(1));
        let vs = enumerate_vertices(&lp).unwrap();
        assert_eq!(vs, vec![v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]);
    }

    #[test]
    fn slice_vertices() {
        let mut lp = LinearProgram::feasibility(3);
        lp.constrain(v(&[1, 1, 1]), Relation::Eq, int(1));
        lp.constrain(v(&[1, -1, 0]), Relation::Eq, int(0));
        let vs = enumerate_vertices(&lp).unwrap();
        assert_eq!(vs, vec![v(&[0, 0, 1]), vec![ratio(1, 2), ratio(1, 2), int(0)]]);
    }

    #[test]
    fn point_and_empty_and_unbounded() {
        let mut lp = LinearProgram::feasibility(1);
        lp.constrain(v(&[1]), Relation::Eq, int(1));
        assert_eq!(enumerate_vertices(&lp).unwrap(), vec![v(&[1])]);

        lp.constrain(v(&[1]), Relation::Ge, int(2));
        assert!(enumerate_vertices(&lp).unwrap().is_empty());

        let mut ray = LinearProgram::feasibility(2);
        ray.constrain(v(&[1, -1]), Relation::Eq, int(0));
        assert!(enumerate_vertices(&ray).is_err());
    }

    #[test]
    fn linear_systems() {
        let a = vec![v(&[1, 1]), v(&[2, 2])];
        assert!(solve_linear_system(&a, &v(&[1, 3])).is_none());
        let x = solve_linear_system(&a, &v(&[1, 2])).unwrap();
        assert_eq!(&x[0] + &x[1], int(1));
        assert_eq!(solve_linear_system(&[], &[]), Some(vec![]));
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
