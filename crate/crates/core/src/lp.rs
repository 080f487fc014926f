//! Exact linear programming over the rationals.
//!
//! Problems are stated in equality form, `maximize c·x` subject to
//! `A x = b`, `x >= 0`, and solved with a dense two-phase simplex using
//! Bland's rule. Every pivot is exact. The tableau is first run over
//! checked `i64` fractions and rerun over big rationals only if an
//! intermediate value overflows.

use num_traits::{One, Signed};

use simplex::{LpData, Num, ValueOutcome};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `maximize objective·x` subject to `constraints · x = rhs`, `x >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    objective: Vec<Rational>,
    constraints: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LpProblem {
    pub fn new(
        objective: Vec<Rational>,
        constraints: Vec<Vec<Rational>>,
        rhs: Vec<Rational>,
    ) -> Result<Self> {
        Error::check_dim(constraints.len(), rhs.len())?;
        for row in &constraints {
            Error::check_dim(objective.len(), row.len())?;
        }
        Ok(Self {
            objective,
            constraints,
            rhs,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Vec<Rational>] {
        &self.constraints
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// Checks `A x = b` and `x >= 0` exactly.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self
                .constraints
                .iter()
                .zip(&self.rhs)
                .all(|(row, b)| dot(row, x) == *b)
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    Infeasible,
    /// `point` is feasible; `ray` satisfies `A ray = 0`, `ray >= 0` and
    /// strictly improves the objective.
    Unbounded {
        point: Vec<Rational>,
        ray: Vec<Rational>,
    },
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

pub fn solve_lp(problem: &LpProblem) -> LpOutcome {
    let data = LpData {
        objective: problem.objective.iter().cloned().map(Num::Big).collect(),
        rows: problem
            .constraints
            .iter()
            .map(|r| r.iter().cloned().map(Num::Big).collect())
            .collect(),
        rhs: problem.rhs.iter().cloned().map(Num::Big).collect(),
    };
    data.solve()
}

/// Result of a convex-hull membership query.
#[derive(Debug, Clone, PartialEq)]
pub enum HullMembership {
    /// `query = Σ coefficients[i] · points[i]`, coefficients nonnegative
    /// and summing to one.
    Inside { coefficients: Vec<Rational> },
    /// `normal · p <= offset` for every point and `normal · query > offset`.
    Outside {
        normal: Vec<Rational>,
        offset: Rational,
    },
}

impl HullMembership {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullMembership::Inside { .. })
    }

    /// Re-verifies the certificate against the inputs.
    pub fn validate(&self, points: &[Vec<Rational>], query: &[Rational]) -> bool {
        match self {
            HullMembership::Inside { coefficients } => {
                if coefficients.len() != points.len()
                    || coefficients.iter().any(|c| c.is_negative())
                    || coefficients.iter().sum::<Rational>() != Rational::one()
                {
                    return false;
                }
                (0..query.len()).all(|j| {
                    coefficients
                        .iter()
                        .zip(points)
                        .map(|(c, p)| c * &p[j])
                        .sum::<Rational>()
                        == query[j]
                })
            }
            HullMembership::Outside { normal, offset } => {
                points.iter().all(|p| dot(normal, p) <= *offset) && dot(normal, query) > *offset
            }
        }
    }
}

/// Decides whether `query` lies in the convex hull of `points`, returning
/// either convex coefficients or a strictly separating affine functional.
pub fn in_convex_hull(points: &[Vec<Rational>], query: &[Rational]) -> Result<HullMembership> {
    if points.is_empty() {
        return Err(Error::Domain("convex hull of an empty point set".into()));
    }
    let d = query.len();
    for p in points {
        Error::check_dim(d, p.len())?;
    }
    let k = points.len();

    // Σ λ_i p_i = q, Σ λ_i = 1, λ >= 0.
    let mut rows: Vec<Vec<Num>> = (0..d)
        .map(|j| points.iter().map(|p| Num::Big(p[j].clone())).collect())
        .collect();
    rows.push(vec![Num::Int(1); k]);
    let mut rhs: Vec<Num> = query.iter().cloned().map(Num::Big).collect();
    rhs.push(Num::Int(1));
    let data = LpData {
        objective: vec![Num::Int(0); k],
        rows,
        rhs,
    };
    if let LpOutcome::Optimal { solution, .. } = data.solve() {
        return Ok(HullMembership::Inside {
            coefficients: solution,
        });
    }

    // Variables: w+ (d), w- (d), h+, h-, s_i (k), u.
    //   w·p_i - h + s_i = 0
    //   w·q   - h - u   = 1
    let cols = 2 * d + 2 + k + 1;
    let mut rows = Vec::with_capacity(k + 1);
    for (i, p) in points.iter().enumerate() {
        let mut row = vec![Num::Int(0); cols];
        for j in 0..d {
            row[j] = Num::Big(p[j].clone());
            row[d + j] = Num::Big(-p[j].clone());
        }
        row[2 * d] = Num::Int(-1);
        row[2 * d + 1] = Num::Int(1);
        row[2 * d + 2 + i] = Num::Int(1);
        rows.push(row);
    }
    let mut row = vec![Num::Int(0); cols];
    for j in 0..d {
        row[j] = Num::Big(query[j].clone());
        row[d + j] = Num::Big(-query[j].clone());
    }
    row[2 * d] = Num::Int(-1);
    row[2 * d + 1] = Num::Int(1);
    row[cols - 1] = Num::Int(-1);
    rows.push(row);
    let mut rhs = vec![Num::Int(0); k];
    rhs.push(Num::Int(1));
    let data = LpData {
        objective: vec![Num::Int(0); cols],
        rows,
        rhs,
    };
    match data.solve() {
        LpOutcome::Optimal { solution, .. } => {
            let normal = (0..d).map(|j| &solution[j] - &solution[d + j]).collect();
            let offset = &solution[2 * d] - &solution[2 * d + 1];
            Ok(HullMembership::Outside { normal, offset })
        }
        other => unreachable!("separation LP must be feasible when the point is outside: {other:?}"),
    }
}

/// Maximum of `Σ y_i heights[i]` over convex weights `y` with
/// `Σ y_i points[i] = query`, or `None` when `query` lies outside the
/// hull. This is the height of the upper envelope of the lifted points
/// above `query`.
pub(crate) fn upper_envelope_height(
    points: &[&[u32]],
    heights: &[&Rational],
    query: &[u32],
) -> Option<Rational> {
    let d = query.len();
    let k = points.len();
    if k == 0 {
        return None;
    }
    let mut rows: Vec<Vec<Num>> = (0..d)
        .map(|j| points.iter().map(|p| Num::Int(p[j] as i64)).collect())
        .collect();
    rows.push(vec![Num::Int(1); k]);
    let mut rhs: Vec<Num> = query.iter().map(|&q| Num::Int(q as i64)).collect();
    rhs.push(Num::Int(1));
    let data = LpData {
        objective: heights.iter().map(|&h| Num::Big(h.clone())).collect(),
        rows,
        rhs,
    };
    match data.solve_value() {
        ValueOutcome::Optimal(v) => Some(v),
        ValueOutcome::Infeasible => None,
        ValueOutcome::Unbounded => unreachable!("convex weights are bounded"),
    }
}

/// Feasibility of an LP whose data are small integers; used for the
/// face tests of lattice polytopes.
pub(crate) fn feasible_int(rows: Vec<Vec<i64>>, rhs: Vec<i64>) -> bool {
    let cols = rows.first().map_or(0, Vec::len);
    let data = LpData {
        objective: vec![Num::Int(0); cols],
        rows: rows
            .into_iter()
            .map(|r| r.into_iter().map(Num::Int).collect())
            .collect(),
        rhs: rhs.into_iter().map(Num::Int).collect(),
    };
    !matches!(data.solve_value(), ValueOutcome::Infeasible)
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// ---------------------------------------------------------------------------
// Simplex core
mod simplex {
    use num_bigint::BigInt;
    use num_rational::Ratio;
    use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

    use super::LpOutcome;
    use crate::rational::Rational;

    #[derive(Debug, Clone)]
    pub(crate) enum Num {
        Int(i64),
        Big(Rational),
    }

    pub(crate) struct LpData {
        pub objective: Vec<Num>,
        pub rows: Vec<Vec<Num>>,
        pub rhs: Vec<Num>,
    }

    pub(super) enum ValueOutcome {
        Optimal(Rational),
        Infeasible,
        Unbounded,
    }

    impl LpData {
        pub(super) fn solve(&self) -> LpOutcome {
            if let Some(out) = self.convert::<Small>().and_then(|t| t.run()) {
                return out.into_rational();
            }
            let t = self.convert::<Rational>().expect("big rationals always convert");
            t.run()
                .expect("big rational arithmetic never overflows")
                .into_rational()
        }

        pub(super) fn solve_value(&self) -> ValueOutcome {
            if let Some(out) = self.convert::<Small>().and_then(|t| t.run()) {
                return match out {
                    Outcome::Optimal { value, .. } => ValueOutcome::Optimal(value.to_big()),
                    Outcome::Infeasible => ValueOutcome::Infeasible,
                    Outcome::Unbounded { .. } => ValueOutcome::Unbounded,
                };
            }
            let t = self.convert::<Rational>().expect("big rationals always convert");
            let out = t.run().expect("big rational arithmetic never overflows");
            match out {
                Outcome::Optimal { value, .. } => ValueOutcome::Optimal(value),
                Outcome::Infeasible => ValueOutcome::Infeasible,
                Outcome::Unbounded { .. } => ValueOutcome::Unbounded,
            }
        }

        fn convert<F: Field>(&self) -> Option<Problem<F>> {
            let conv = |v: &Vec<Num>| v.iter().map(F::from_num).collect::<Option<Vec<F>>>();
            Some(Problem {
                objective: conv(&self.objective)?,
                rows: self.rows.iter().map(conv).collect::<Option<_>>()?,
                rhs: conv(&self.rhs)?,
            })
        }
    }

    type Small = Ratio<i64>;

    /// Exact field arithmetic where every operation may report overflow.
    trait Field: Clone + PartialOrd + std::fmt::Debug {
        fn zero() -> Self;
        fn one() -> Self;
        fn is_zero(&self) -> bool;
        fn is_positive(&self) -> bool;
        fn add(&self, o: &Self) -> Option<Self>;
        fn sub(&self, o: &Self) -> Option<Self>;
        fn mul(&self, o: &Self) -> Option<Self>;
        fn div(&self, o: &Self) -> Option<Self>;
        fn from_num(n: &Num) -> Option<Self>;
        fn to_big(&self) -> Rational;

        fn neg(&self) -> Option<Self> {
            Self::zero().sub(self)
        }
    }

    impl Field for Small {
        fn zero() -> Self {
            Zero::zero()
        }
        fn one() -> Self {
            One::one()
        }
        fn is_zero(&self) -> bool {
            Zero::is_zero(self)
        }
        fn is_positive(&self) -> bool {
            Signed::is_positive(self)
        }
        fn add(&self, o: &Self) -> Option<Self> {
            self.checked_add(o)
        }
        fn sub(&self, o: &Self) -> Option<Self> {
            self.checked_sub(o)
        }
        fn mul(&self, o: &Self) -> Option<Self> {
            self.checked_mul(o)
        }
        fn div(&self, o: &Self) -> Option<Self> {
            self.checked_div(o)
        }
        fn from_num(n: &Num) -> Option<Self> {
            // Bounded well inside i64 so that the first few products cannot
            // hit the edge of the range.
            const LIMIT: i64 = 1 << 40;
            match n {
                Num::Int(v) if v.abs() < LIMIT => Some(Ratio::from_integer(*v)),
                Num::Int(_) => None,
                Num::Big(r) => {
                    let num = r.numer().to_i64()?;
                    let den = r.denom().to_i64()?;
                    (num.abs() < LIMIT && den < LIMIT).then(|| Ratio::new_raw(num, den))
                }
            }
        }
        fn to_big(&self) -> Rational {
            Rational::new_raw(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
        }
    }

    impl Field for Rational {
        fn zero() -> Self {
            Zero::zero()
        }
        fn one() -> Self {
            One::one()
        }
        fn is_zero(&self) -> bool {
            Zero::is_zero(self)
        }
        fn is_positive(&self) -> bool {
            Signed::is_positive(self)
        }
        fn add(&self, o: &Self) -> Option<Self> {
            Some(self + o)
        }
        fn sub(&self, o: &Self) -> Option<Self> {
            Some(self - o)
        }
        fn mul(&self, o: &Self) -> Option<Self> {
            Some(self * o)
        }
        fn div(&self, o: &Self) -> Option<Self> {
            Some(self / o)
        }
        fn from_num(n: &Num) -> Option<Self> {
            Some(match n {
                Num::Int(v) => Rational::from_integer(BigInt::from(*v)),
                Num::Big(r) => r.clone(),
            })
        }
        fn to_big(&self) -> Rational {
            self.clone()
        }
    }

    struct Problem<F> {
        objective: Vec<F>,
        rows: Vec<Vec<F>>,
        rhs: Vec<F>,
    }

    enum Outcome<F> {
        Optimal { value: F, solution: Vec<F> },
        Infeasible,
        Unbounded { point: Vec<F>, ray: Vec<F> },
    }

    impl<F: Field> Outcome<F> {
        fn into_rational(self) -> LpOutcome {
            let conv = |v: Vec<F>| v.iter().map(F::to_big).collect();
            match self {
                Outcome::Optimal { value, solution } => LpOutcome::Optimal {
                    value: value.to_big(),
                    solution: conv(solution),
                },
                Outcome::Infeasible => LpOutcome::Infeasible,
                Outcome::Unbounded { point, ray } => LpOutcome::Unbounded {
                    point: conv(point),
                    ray: conv(ray),
                },
            }
        }
    }

    enum Step {
        Optimal,
        Unbounded(usize),
    }

    /// Dense simplex tableau. Each row ends with its right-hand side; the
    /// objective row holds reduced costs and, in its last slot, the negated
    /// objective value.
    struct Tableau<F> {
        rows: Vec<Vec<F>>,
        obj: Vec<F>,
        basis: Vec<usize>,
    }

    impl<F: Field> Tableau<F> {
        fn rhs_col(&self) -> usize {
            self.obj.len() - 1
        }

        fn pivot(&mut self, r: usize, s: usize) -> Option<()> {
            let width = self.obj.len();
            let p = self.rows[r][s].clone();
            let mut pivot_row = std::mem::take(&mut self.rows[r]);
            for v in pivot_row.iter_mut() {
                if !v.is_zero() {
                    *v = v.div(&p)?;
                }
            }
            let support: Vec<usize> = (0..width).filter(|&j| !pivot_row[j].is_zero()).collect();
            let eliminate = |row: &mut Vec<F>| -> Option<()> {
                let f = row[s].clone();
                if f.is_zero() {
                    return Some(());
                }
                for &j in &support {
                    row[j] = row[j].sub(&f.mul(&pivot_row[j])?)?;
                }
                Some(())
            };
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != r {
                    eliminate(row)?;
                }
            }
            eliminate(&mut self.obj)?;
            self.rows[r] = pivot_row;
            self.basis[r] = s;
            Some(())
        }

        /// Largest reduced cost first, switching to Bland's rule for good
        /// after a run of degenerate pivots. Entering columns are
        /// restricted to `0..limit`.
        fn iterate(&mut self, limit: usize) -> Option<Step> {
            const DEGENERATE_RUN: usize = 32;
            let rhs = self.rhs_col();
            let mut bland = false;
            let mut degenerate = 0;
            loop {
                let entering = if bland {
                    (0..limit).find(|&j| self.obj[j].is_positive())
                } else {
                    let mut best: Option<usize> = None;
                    for j in 0..limit {
                        if self.obj[j].is_positive() && best.map_or(true, |b| self.obj[j] > self.obj[b]) {
                            best = Some(j);
                        }
                    }
                    best
                };
                let Some(s) = entering else {
                    return Some(Step::Optimal);
                };
                let mut best: Option<(usize, F)> = None;
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[s].is_positive() {
                        continue;
                    }
                    let ratio = row[rhs].div(&row[s])?;
                    best = match best {
                        None => Some((i, ratio)),
                        Some((bi, br)) => {
                            if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        }
                    };
                }
                match best {
                    None => return Some(Step::Unbounded(s)),
                    Some((r, ratio)) => {
                        if ratio.is_zero() {
                            degenerate += 1;
                            bland |= degenerate >= DEGENERATE_RUN;
                        } else {
                            degenerate = 0;
                        }
                        self.pivot(r, s)?
                    }
                }
            }
        }

        fn basic_solution(&self, n: usize) -> Vec<F> {
            let rhs = self.rhs_col();
            let mut x = vec![F::zero(); n];
            for (i, &b) in self.basis.iter().enumerate() {
                if b < n {
                    x[b] = self.rows[i][rhs].clone();
                }
            }
            x
        }
    }

    impl<F: Field> Problem<F> {
        fn run(self) -> Option<Outcome<F>> {
            let n = self.objective.len();
            let m = self.rows.len();

            // Phase one: artificial variable per row, rows normalized to b >= 0.
            let width = n + m + 1;
            let mut rows = Vec::with_capacity(m);
            for (i, (row, b)) in self.rows.into_iter().zip(self.rhs).enumerate() {
                let negate = b < F::zero();
                let mut full = Vec::with_capacity(width);
                for v in row {
                    full.push(if negate { v.neg()? } else { v });
                }
                full.extend((0..m).map(|j| if j == i { F::one() } else { F::zero() }));
                full.push(if negate { b.neg()? } else { b });
                rows.push(full);
            }
            let mut obj = vec![F::zero(); width];
            for row in &rows {
                for j in (0..n).chain(std::iter::once(width - 1)) {
                    if !row[j].is_zero() {
                        obj[j] = obj[j].add(&row[j])?;
                    }
                }
            }
            let mut t = Tableau {
                rows,
                obj,
                basis: (n..n + m).collect(),
            };
            t.iterate(n + m)?;
            if !t.obj[width - 1].is_zero() {
                return Some(Outcome::Infeasible);
            }

            // Drive remaining artificials out of the basis; drop redundant rows.
            let mut r = 0;
            while r < t.rows.len() {
                if t.basis[r] >= n {
                    match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                        Some(j) => t.pivot(r, j)?,
                        None => {
                            t.rows.remove(r);
                            t.basis.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
            for row in t.rows.iter_mut() {
                let b = row.pop().expect("row has rhs");
                row.truncate(n);
                row.push(b);
            }

            // Phase two.
            let mut obj: Vec<F> = self.objective.clone();
            obj.push(F::zero());
            for (row, &b) in t.rows.iter().zip(&t.basis) {
                let cb = self.objective[b].clone();
                if cb.is_zero() {
                    continue;
                }
                for j in 0..=n {
                    if !row[j].is_zero() {
                        obj[j] = obj[j].sub(&cb.mul(&row[j])?)?;
                    }
                }
            }
            let mut t = Tableau {
                rows: t.rows,
                obj,
                basis: t.basis,
            };
            let step = t.iterate(n)?;
            let x = t.basic_solution(n);
            match step {
                Step::Optimal => {
                    let mut value = F::zero();
                    for (c, v) in self.objective.iter().zip(&x) {
                        if !v.is_zero() && !c.is_zero() {
                            value = value.add(&c.mul(v)?)?;
                        }
                    }
                    Some(Outcome::Optimal { value, solution: x })
                }
                Step::Unbounded(s) => {
                    let mut ray = vec![F::zero(); n];
                    ray[s] = F::one();
                    for (row, &b) in t.rows.iter().zip(&t.basis) {
                        ray[b] = row[s].neg()?;
                    }
                    Some(Outcome::Unbounded { point: x, ray })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn check_optimal(p: &LpProblem, expected: Rational) -> Vec<Rational> {
        match solve_lp(p) {
            LpOutcome::Optimal { value, solution } => {
                assert_eq!(value, expected);
                assert!(p.is_feasible_point(&solution));
                assert_eq!(p.objective_value(&solution), value);
                solution
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn single_equality() {
        let p = LpProblem::new(ints(&[1]), vec![ints(&[1])], ints(&[1])).unwrap();
        check_optimal(&p, int(1));
    }

    #[test]
    fn objective_equals_constraint() {
        let p = LpProblem::new(ints(&[1, 1]), vec![ints(&[1, 1])], ints(&[1])).unwrap();
        check_optimal(&p, int(1));
    }

    #[test]
    fn redundancy_dual_midpoint() {
        // Points (0,0) and (2,2) with zero heights, query (1,1).
        let p = LpProblem::new(
            ints(&[0, 0]),
            vec![ints(&[0, 2]), ints(&[0, 2]), ints(&[1, 1])],
            ints(&[1, 1, 1]),
        )
        .unwrap();
        let y = check_optimal(&p, int(0));
        assert_eq!(y, vec![frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let p = LpProblem::new(ints(&[0]), vec![ints(&[1])], ints(&[-1])).unwrap();
        assert_eq!(solve_lp(&p), LpOutcome::Infeasible);

        // maximize x1 s.t. x1 - x2 = 1
        let p = LpProblem::new(ints(&[1, 0]), vec![ints(&[1, -1])], ints(&[1])).unwrap();
        match solve_lp(&p) {
            LpOutcome::Unbounded { point, ray } => {
                assert!(p.is_feasible_point(&point));
                assert!(ray.iter().all(|r| !r.is_negative()));
                assert!(p.constraints()[0].iter().zip(&ray).map(|(a, r)| a * r).sum::<Rational>().is_zero());
                assert!(Signed::is_positive(&p.objective_value(&ray)));
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn no_constraints() {
        let p = LpProblem::new(ints(&[0, -1]), vec![], vec![]).unwrap();
        check_optimal(&p, int(0));
        let p = LpProblem::new(ints(&[1]), vec![], vec![]).unwrap();
        assert!(matches!(solve_lp(&p), LpOutcome::Unbounded { .. }));
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let p = LpProblem::new(
            ints(&[1, 2]),
            vec![ints(&[1, 1]), ints(&[2, 2])],
            ints(&[3, 6]),
        )
        .unwrap();
        check_optimal(&p, int(6));
    }

    #[test]
    fn dimension_errors() {
        assert!(LpProblem::new(ints(&[1, 1]), vec![ints(&[1])], ints(&[1])).is_err());
        assert!(LpProblem::new(ints(&[1]), vec![ints(&[1])], vec![]).is_err());
    }

    #[test]
    fn overflow_falls_back_to_big_rationals() {
        let huge = Rational::from_integer(BigInt::from(10).pow(30));
        let p = LpProblem::new(
            vec![huge.clone(), int(1)],
            vec![vec![int(1), int(1)]],
            vec![huge.clone()],
        )
        .unwrap();
        check_optimal(&p, &huge * &huge);
    }

    #[test]
    fn hull_examples() {
        let pts = vec![ints(&[0, 0]), ints(&[2, 2])];
        let h = in_convex_hull(&pts, &ints(&[1, 1])).unwrap();
        assert_eq!(
            h,
            HullMembership::Inside {
                coefficients: vec![frac(1, 2), frac(1, 2)]
            }
        );
        let h = in_convex_hull(&pts, &ints(&[2, 0])).unwrap();
        assert!(!h.is_inside());
        assert!(h.validate(&pts, &ints(&[2, 0])));

        let single = vec![ints(&[0, 0])];
        assert!(in_convex_hull(&single, &ints(&[0, 0])).unwrap().is_inside());

        let orbit = vec![
            ints(&[2, 1, 0]),
            ints(&[2, 0, 1]),
            ints(&[1, 2, 0]),
            ints(&[1, 0, 2]),
            ints(&[0, 2, 1]),
            ints(&[0, 1, 2]),
        ];
        let q = ints(&[1, 1, 1]);
        let h = in_convex_hull(&orbit, &q).unwrap();
        assert!(h.is_inside());
        assert!(h.validate(&orbit, &q));

        assert!(in_convex_hull(&[], &q).is_err());
        assert!(in_convex_hull(&pts, &q).is_err());
    }

    #[test]
    fn envelope_height() {
        let a: [u32; 1] = [0];
        let b: [u32; 1] = [2];
        let pts: Vec<&[u32]> = vec![&a, &b];
        let hs = [int(0), int(0)];
        let h: Vec<&Rational> = hs.iter().collect();
        assert_eq!(upper_envelope_height(&pts, &h, &[1]), Some(int(0)));
        assert_eq!(upper_envelope_height(&pts, &h, &[3]), None);
    }
}
