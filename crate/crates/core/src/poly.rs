//! Tropical (max-plus) polynomials with rational coefficients.
//!
//! A [`TropPoly`] stores a finite map from exponent vectors to finite
//! coefficients. Two polynomials can denote the same function
//! `ℝⁿ → ℝ ∪ {−∞}`; [`TropPoly::canonicalize`] picks the unique minimal
//! representative, namely the terms whose lifted points `(α, c_α)` are
//! vertices of the upper envelope. Function equality is equality of
//! canonical forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hull;
use crate::lp::{solve_lp, LpOutcome, LpProblem};
use crate::rational::{self, int, Rational};

/// Element of `ℚ ∪ {−∞}` under `⊕ = max`, `⊙ = +`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropScalar {
    /// `−∞`, the additive identity.
    Bottom,
    Finite(Rational),
}

impl TropScalar {
    pub fn zero() -> Self {
        TropScalar::Bottom
    }

    /// The rational `0`.
    pub fn one() -> Self {
        TropScalar::Finite(Rational::zero())
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Finite(r) => Some(r),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::Bottom,
        }
    }

    pub fn pow(&self, m: u32) -> Self {
        match self {
            _ if m == 0 => TropScalar::one(),
            TropScalar::Bottom => TropScalar::Bottom,
            TropScalar::Finite(a) => TropScalar::Finite(a * int(m as i64)),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-∞" => Ok(TropScalar::Bottom),
            other => rational::parse(other).map(TropScalar::Finite),
        }
    }
}

impl From<Rational> for TropScalar {
    fn from(r: Rational) -> Self {
        TropScalar::Finite(r)
    }
}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropScalar::Bottom, TropScalar::Bottom) => Ordering::Equal,
            (TropScalar::Bottom, _) => Ordering::Less,
            (_, TropScalar::Bottom) => Ordering::Greater,
            (TropScalar::Finite(a), TropScalar::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => f.write_str("-inf"),
            TropScalar::Finite(r) => f.write_str(&rational::format(r)),
        }
    }
}

/// Exponent vector `α ∈ ℕⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// Exponent of the variable `x_{i+1}` (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// `‖α‖₁`.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    /// `‖α‖_∞`.
    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }

    /// `⟨α, v⟩`.
    pub fn dot(&self, v: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(v)
            .filter(|(&a, _)| a != 0)
            .map(|(&a, x)| x * int(a as i64))
            .sum()
    }

    /// Entries sorted weakly decreasing.
    pub fn sorted_desc(&self) -> Exponent {
        let mut e = self.0.clone();
        e.sort_unstable_by(|a, b| b.cmp(a));
        Exponent(e)
    }

    pub fn is_sorted_desc(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Tropical polynomial in `n` variables.
///
/// `PartialEq` is structural (same term map). Use [`TropPoly::equals`]
/// for equality as functions.
#[derive(Debug, Clone)]
pub struct TropPoly {
    n: usize,
    terms: BTreeMap<Exponent, Rational>,
    canonical: bool,
}

impl PartialEq for TropPoly {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl Eq for TropPoly {}

impl TropPoly {
    /// The zero polynomial `𝟘` (no terms).
    pub fn zero(n: usize) -> Self {
        TropPoly {
            n,
            terms: BTreeMap::new(),
            canonical: true,
        }
    }

    /// The constant `𝟙`.
    pub fn one(n: usize) -> Self {
        Self::monomial(Rational::zero(), Exponent::zeros(n))
    }

    pub fn monomial(coef: Rational, exp: Exponent) -> Self {
        let n = exp.len();
        TropPoly {
            n,
            terms: BTreeMap::from([(exp, coef)]),
            canonical: true,
        }
    }

    /// `x^α` with coefficient `𝟙`.
    pub fn monic(exp: Exponent) -> Self {
        Self::monomial(Rational::zero(), exp)
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monic(Exponent::unit(n, i))
    }

    /// Builds a polynomial from terms; repeated exponents are merged with
    /// `⊕` and `−∞` coefficients are dropped.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, TropScalar)>,
    {
        let mut out = TropPoly::zero(n);
        for (exp, coef) in terms {
            Error::check_dim(n, exp.len())?;
            if let TropScalar::Finite(c) = coef {
                out.insert_max(exp, c);
            }
        }
        out.canonical = out.terms.len() <= 1;
        Ok(out)
    }

    /// Boolean polynomial: every listed exponent with coefficient `𝟙`.
    pub fn boolean<I>(n: usize, exps: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponent>,
    {
        Self::from_terms(n, exps.into_iter().map(|e| (e, TropScalar::one())))
    }

    fn insert_max(&mut self, exp: Exponent, coef: Rational) {
        match self.terms.get_mut(&exp) {
            Some(c) if *c >= coef => {}
            Some(c) => *c = coef,
            None => {
                self.terms.insert(exp, coef);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// True when every coefficient is `𝟙`.
    pub fn is_boolean(&self) -> bool {
        self.terms.values().all(Zero::is_zero)
    }

    pub fn coefficient(&self, exp: &Exponent) -> TropScalar {
        self.terms
            .get(exp)
            .map_or(TropScalar::Bottom, |c| TropScalar::Finite(c.clone()))
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn add(&self, other: &TropPoly) -> Result<TropPoly> {
        Error::check_dim(self.n, other.n)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut out = self.clone();
        out.canonical = false;
        for (e, c) in &other.terms {
            out.insert_max(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &TropPoly) -> Result<TropPoly> {
        Error::check_dim(self.n, other.n)?;
        let mut out = TropPoly::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.insert_max(a.add(b), c + d);
            }
        }
        // Shifting a canonical polynomial by a monomial keeps it canonical.
        out.canonical = out.terms.len() <= 1
            || (self.canonical && other.terms.len() == 1)
            || (other.canonical && self.terms.len() == 1);
        Ok(out)
    }

    /// `f^{⊙m}`, computed by repeated squaring with canonical
    /// intermediates. The result is canonical.
    pub fn pow(&self, m: u32) -> TropPoly {
        let mut result = TropPoly::one(self.n);
        let mut base = self.canonicalize();
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                result = result.mul(&base).expect("same arity").canonicalize();
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base).expect("same arity").canonicalize();
            }
        }
        result
    }

    /// Maximum `‖α‖₁` over the support, or `-1` for `𝟘`.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Exact value `max_α (c_α + ⟨α, v⟩)`.
    pub fn evaluate(&self, v: &[Rational]) -> Result<TropScalar> {
        Error::check_dim(self.n, v.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| c + e.dot(v))
            .max()
            .map_or(TropScalar::Bottom, TropScalar::Finite))
    }

    /// True when the term at `exp` never strictly exceeds the other
    /// terms, i.e. some convex combination of the other lifted points
    /// reaches height `>= c_exp` above `exp`.
    pub fn is_redundant_term(&self, exp: &Exponent) -> Result<bool> {
        Error::check_dim(self.n, exp.len())?;
        let Some(idx) = self.terms.keys().position(|e| e == exp) else {
            return Err(Error::Domain(format!("exponent {exp} is not in the support")));
        };
        let (pts, hs) = self.lifted();
        Ok(hull::is_redundant(&pts, &hs, idx))
    }

    fn lifted(&self) -> (Vec<&[u32]>, Vec<&Rational>) {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c)).unzip()
    }

    /// The unique minimal polynomial defining the same function.
    pub fn canonicalize(&self) -> TropPoly {
        if self.canonical {
            return self.clone();
        }
        let (pts, hs) = self.lifted();
        let keep = hull::upper_vertices(&pts, &hs);
        let mut keep = keep.into_iter().peekable();
        let terms = self
            .terms
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                if keep.peek() == Some(i) {
                    keep.next();
                    true
                } else {
                    false
                }
            })
            .map(|(_, (e, c))| (e.clone(), c.clone()))
            .collect();
        TropPoly {
            n: self.n,
            terms,
            canonical: true,
        }
    }

    /// Equality as functions `ℝⁿ → ℝ ∪ {−∞}`.
    pub fn equals(&self, other: &TropPoly) -> Result<bool> {
        Error::check_dim(self.n, other.n)?;
        Ok(self.canonicalize().terms == other.canonicalize().terms)
    }

    /// A rational point where the two polynomials take different values,
    /// or `None` when they are equal as functions.
    pub fn witness_point(&self, other: &TropPoly) -> Result<Option<Vec<Rational>>> {
        Error::check_dim(self.n, other.n)?;
        let f = self.canonicalize();
        let g = other.canonicalize();
        if f.terms == g.terms {
            return Ok(None);
        }
        for (upper, lower) in [(&g, &f), (&f, &g)] {
            for (beta, d) in &upper.terms {
                if let Some(v) = exceeding_point(lower, beta, d) {
                    debug_assert_ne!(f.evaluate(&v).ok(), g.evaluate(&v).ok());
                    return Ok(Some(v));
                }
            }
        }
        unreachable!("distinct canonical forms always differ somewhere")
    }

    /// Applies `map` to every exponent, merging collisions with `⊕`.
    pub fn map_exponents(&self, map: impl Fn(&Exponent) -> Exponent) -> TropPoly {
        let mut out = TropPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.insert_max(map(e), c.clone());
        }
        out.canonical = out.terms.len() <= 1;
        out
    }

    /// Embeds a polynomial in `k` variables into `n` variables, sending
    /// variable `i` to `targets[i]`.
    pub fn embed(&self, n: usize, targets: &[usize]) -> Result<TropPoly> {
        Error::check_dim(self.n, targets.len())?;
        if let Some(&t) = targets.iter().find(|&&t| t >= n) {
            return Err(Error::Domain(format!("target variable {t} out of range")));
        }
        let mut out = self.map_exponents(|e| {
            let mut v = vec![0; n];
            for (i, &a) in e.as_slice().iter().enumerate() {
                v[targets[i]] += a;
            }
            Exponent::new(v)
        });
        out.n = n;
        out.canonical = self.canonical;
        Ok(out)
    }
}

/// Point `v` with `d + ⟨β, v⟩ > f(v)`, if one exists.
///
/// Solves `minimize t − ⟨β, v⟩` subject to `t >= c_α + ⟨α, v⟩` for every
/// term of `f`; its optimum is the envelope height of `f` above `β`.
fn exceeding_point(f: &TropPoly, beta: &Exponent, d: &Rational) -> Option<Vec<Rational>> {
    let n = f.n;
    if f.is_zero() {
        return Some(vec![Rational::zero(); n]);
    }
    // Columns: t+, t-, v+ (n), v- (n), slack per term.
    let k = f.terms.len();
    let cols = 2 + 2 * n + k;
    let beta_q: Vec<Rational> = beta.as_slice().iter().map(|&b| int(b as i64)).collect();
    let mut objective = vec![Rational::zero(); cols];
    objective[0] = int(-1);
    objective[1] = int(1);
    for j in 0..n {
        objective[2 + j] = beta_q[j].clone();
        objective[2 + n + j] = -beta_q[j].clone();
    }
    let mut rows = Vec::with_capacity(k);
    let mut rhs = Vec::with_capacity(k);
    for (i, (alpha, c)) in f.terms.iter().enumerate() {
        let mut row = vec![Rational::zero(); cols];
        row[0] = int(1);
        row[1] = int(-1);
        for (j, &a) in alpha.as_slice().iter().enumerate() {
            row[2 + j] = int(-(a as i64));
            row[2 + n + j] = int(a as i64);
        }
        row[2 + 2 * n + i] = int(-1);
        rows.push(row);
        rhs.push(c.clone());
    }
    let problem = LpProblem::new(objective, rows, rhs).expect("consistent dimensions");
    let extract = |x: &[Rational]| -> Vec<Rational> {
        (0..n).map(|j| &x[2 + j] - &x[2 + n + j]).collect()
    };
    let exceeds = |v: &[Rational]| {
        let lhs = d + beta.dot(v);
        match f.evaluate(v).expect("arity checked") {
            TropScalar::Bottom => true,
            TropScalar::Finite(fv) => lhs > fv,
        }
    };
    match solve_lp(&problem) {
        LpOutcome::Optimal { value, solution } => {
            // value = -min(t - ⟨β,v⟩); the term wins iff that min is below d.
            if -value < *d {
                let v = extract(&solution);
                debug_assert!(exceeds(&v));
                Some(v)
            } else {
                None
            }
        }
        LpOutcome::Unbounded { point, ray } => {
            let base = problem.objective_value(&point);
            let gain = problem.objective_value(&ray);
            // Need base + λ·gain > -d.
            let mut lambda = ((-d - &base) / &gain).floor() + int(1);
            if lambda.is_negative() {
                lambda = int(0);
            }
            let x: Vec<Rational> = point.iter().zip(&ray).map(|(p, r)| p + &lambda * r).collect();
            let v = extract(&x);
            debug_assert!(exceeds(&v));
            Some(v)
        }
        LpOutcome::Infeasible => unreachable!("t can always be taken large"),
    }
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("-inf");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            let mono: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(j, &a)| {
                    if a == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, a)
                    }
                })
                .collect();
            let coef = rational::format(c);
            match (mono.is_empty(), c.is_zero()) {
                (true, _) => f.write_str(&coef)?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "({coef})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    fn uni(terms: &[(u32, i64)]) -> TropPoly {
        TropPoly::from_terms(1, terms.iter().map(|&(a, c)| (e(&[a]), TropScalar::Finite(int(c))))).unwrap()
    }

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// Pair-product polynomial `e₂` in three variables.
    fn e2_n3() -> TropPoly {
        TropPoly::boolean(3, [e(&[1, 1, 0]), e(&[1, 0, 1]), e(&[0, 1, 1])]).unwrap()
    }

    #[test]
    fn scalar_laws() {
        let a = TropScalar::Finite(int(2));
        let b = TropScalar::Finite(frac(-1, 2));
        assert_eq!(a.add(&b), a);
        assert_eq!(a.mul(&b), TropScalar::Finite(frac(3, 2)));
        assert_eq!(a.add(&TropScalar::zero()), a);
        assert_eq!(a.mul(&TropScalar::zero()), TropScalar::Bottom);
        assert_eq!(a.mul(&TropScalar::one()), a);
        assert_eq!(a.pow(3), TropScalar::Finite(int(6)));
        assert_eq!(TropScalar::Bottom.pow(0), TropScalar::one());
        assert!(TropScalar::Bottom < b);
        assert_eq!(TropScalar::parse("-inf").unwrap(), TropScalar::Bottom);
    }

    #[test]
    fn add_examples() {
        let x = TropPoly::var(1, 0);
        assert_eq!(x.add(&TropPoly::zero(1)).unwrap(), x);
        let got = uni(&[(0, 0), (2, 0)]).add(&x).unwrap();
        assert_eq!(got, uni(&[(0, 0), (1, 0), (2, 0)]));
        let f = uni(&[(0, 3), (4, -1)]);
        assert_eq!(f.add(&f).unwrap(), f);
        assert!(x.add(&TropPoly::var(2, 0)).is_err());
    }

    #[test]
    fn mul_examples() {
        let f = uni(&[(0, 5), (3, -2)]);
        assert_eq!(f.mul(&TropPoly::one(1)).unwrap(), f);
        let got = uni(&[(0, 0), (1, 0)]).mul(&uni(&[(0, 0), (2, 0)])).unwrap();
        assert_eq!(got, uni(&[(0, 0), (1, 0), (2, 0), (3, 0)]));
        let xy = TropPoly::var(2, 0).mul(&TropPoly::var(2, 1)).unwrap();
        assert_eq!(xy, TropPoly::monic(e(&[1, 1])));
        assert!(TropPoly::zero(1).mul(&f).unwrap().is_zero());
    }

    #[test]
    fn redundancy_examples() {
        let f = uni(&[(0, 0), (1, 0), (2, 0)]);
        assert!(f.is_redundant_term(&e(&[1])).unwrap());
        let g = uni(&[(0, 0), (2, 0)]);
        assert!(!g.is_redundant_term(&e(&[2])).unwrap());
        let h = uni(&[(0, 0), (1, -1), (2, 0)]);
        assert!(h.is_redundant_term(&e(&[1])).unwrap());
        assert!(matches!(g.is_redundant_term(&e(&[1])), Err(Error::Domain(_))));
    }

    #[test]
    fn redundancy_matches_dense_grid() {
        // Oracle: the middle term of 1 ⊕ c·x ⊕ x² is redundant iff it never
        // strictly wins on a dense grid; it wins near 0 exactly when c > 0.
        for c in [-2i64, -1, 0, 1] {
            let h = uni(&[(0, 0), (1, c), (2, 0)]);
            let wins = (-400..=400).any(|i| {
                let x = frac(i, 100);
                let mid = int(c) + &x;
                mid > int(0) && mid > &x + &x
            });
            assert_eq!(h.is_redundant_term(&e(&[1])).unwrap(), !wins, "c = {c}");
        }
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(uni(&[(0, 0), (1, 0), (2, 0)]).canonicalize(), uni(&[(0, 0), (2, 0)]));
        assert!(TropPoly::zero(2).canonicalize().is_zero());
        let p = uni(&[(0, 0), (1, 0)]).mul(&uni(&[(0, 0), (1, 0), (2, 0)])).unwrap();
        let c = p.canonicalize();
        assert_eq!(c, uni(&[(0, 0), (1, 0), (2, 0), (3, 0)]).canonicalize());
        assert_eq!(c.num_terms(), 2);
        assert!(c.is_canonical());
        assert_eq!(c.canonicalize(), c);
    }

    #[test]
    fn equals_examples() {
        let a = uni(&[(0, 0), (1, 0), (2, 0)]);
        let b = uni(&[(0, 0), (2, 0)]);
        assert!(a.equals(&b).unwrap());
        assert!(!TropPoly::var(2, 0).equals(&TropPoly::var(2, 1)).unwrap());
        let one_x = uni(&[(0, 0), (1, 0)]);
        let l = one_x.mul(&b).unwrap();
        let r = one_x.mul(&a).unwrap();
        assert!(l.equals(&r).unwrap());
        assert!(a.equals(&TropPoly::var(2, 0)).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let a = uni(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(a.evaluate(&q(&[3])).unwrap(), TropScalar::Finite(int(6)));
        let b = uni(&[(0, 0), (2, 0)]);
        assert_eq!(b.evaluate(&q(&[-1])).unwrap(), TropScalar::Finite(int(0)));
        assert_eq!(b.evaluate(&[frac(-1, 2)]).unwrap(), TropScalar::Finite(int(0)));
        assert_eq!(e2_n3().evaluate(&q(&[1, 2, 3])).unwrap(), TropScalar::Finite(int(5)));
        assert_eq!(TropPoly::zero(2).evaluate(&q(&[1, 2])).unwrap(), TropScalar::Bottom);
        assert!(b.evaluate(&q(&[1, 2])).is_err());
    }

    #[test]
    fn dense_max_pair_oracle() {
        // Brute force over pairs for e₂ at a few points.
        for v in [[1i64, 2, 3], [-4, 0, 7], [5, 5, -1]] {
            let mut best = i64::MIN;
            for i in 0..3 {
                for j in i + 1..3 {
                    best = best.max(v[i] + v[j]);
                }
            }
            assert_eq!(e2_n3().evaluate(&q(&v)).unwrap(), TropScalar::Finite(int(best)));
        }
    }

    #[test]
    fn witness_examples() {
        let b = uni(&[(0, 0), (2, 0)]);
        assert_eq!(b.witness_point(&b).unwrap(), None);

        let (x1, x2) = (TropPoly::var(2, 0), TropPoly::var(2, 1));
        let v = x1.witness_point(&x2).unwrap().unwrap();
        assert_ne!(v[0], v[1]);
        assert_ne!(x1.evaluate(&v).unwrap(), x2.evaluate(&v).unwrap());

        let f = uni(&[(0, 0), (1, 0)]);
        let g = TropPoly::one(1);
        let v = f.witness_point(&g).unwrap().unwrap();
        assert!(v[0].is_positive());
        assert_ne!(f.evaluate(&v).unwrap(), g.evaluate(&v).unwrap());
        let v = g.witness_point(&f).unwrap().unwrap();
        assert_ne!(f.evaluate(&v).unwrap(), g.evaluate(&v).unwrap());

        let v = TropPoly::zero(1).witness_point(&g).unwrap().unwrap();
        assert_ne!(TropPoly::zero(1).evaluate(&v).unwrap(), g.evaluate(&v).unwrap());
    }

    #[test]
    fn pow_and_degree() {
        let f = uni(&[(0, 0), (1, 0)]);
        assert_eq!(f.pow(0), TropPoly::one(1));
        let s = TropPoly::var(2, 0).add(&TropPoly::var(2, 1)).unwrap();
        let cubes = TropPoly::monic(e(&[3, 0])).add(&TropPoly::monic(e(&[0, 3]))).unwrap();
        assert!(s.pow(3).equals(&cubes).unwrap());
        assert_eq!(e2_n3().degree(), 2);
        assert_eq!(TropPoly::zero(3).degree(), -1);
        assert_eq!(TropPoly::one(3).degree(), 0);
    }

    #[test]
    fn display() {
        let f = TropPoly::from_terms(
            2,
            [
                (e(&[0, 0]), TropScalar::Finite(int(0))),
                (e(&[2, 1]), TropScalar::Finite(frac(-1, 2))),
                (e(&[0, 1]), TropScalar::one()),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "0 ⊕ x2 ⊕ (-1/2)*x1^2*x2");
        assert_eq!(TropPoly::zero(1).to_string(), "-inf");
    }

    #[test]
    fn embed_block_variables() {
        let s = TropPoly::var(2, 0).add(&TropPoly::var(2, 1)).unwrap();
        let emb = s.embed(3, &[0, 2]).unwrap();
        let expected = TropPoly::var(3, 0).add(&TropPoly::var(3, 2)).unwrap();
        assert_eq!(emb, expected);
        assert!(s.embed(3, &[0, 3]).is_err());
    }
}
