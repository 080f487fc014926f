//! Tropical rational functions and rewriting of transfers in bounded
//! generators.
//!
//! With `G = {σ₁, …, σ_k}` paired with the first `k` primes and
//! `N = p₁⋯p_k`, every `Tr_G(x^β)` is rewritten as a rational expression
//! in the transfers `Tr_G(x^α)` with `‖α‖_∞ < N`, using
//!
//! ```text
//! Tr_G(x^β) ⊙ Tr_G(x^γ) = ⊕ᵢ Tr_G(x^{δᵢ})^{pᵢ},   δᵢ = (γ + σᵢ(β)) / pᵢ
//! ```
//!
//! where `γ` is chosen by the Chinese remainder theorem.

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};
use crate::poly::{Exponent, TropPoly, TropScalar};
use crate::rational::{int, Rational};

/// Recursion guard for [`rewrite_transfer`].
pub const MAX_REWRITE_NODES: usize = 100_000;

/// `f ⊘ g`, compared by cross-multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropRational {
    num: TropPoly,
    den: TropPoly,
}

impl TropRational {
    pub fn new(num: TropPoly, den: TropPoly) -> Result<Self> {
        Error::check_dim(num.n(), den.n())?;
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(TropRational {
            num: num.canonicalize(),
            den: den.canonicalize(),
        })
    }

    pub fn from_poly(f: TropPoly) -> Self {
        let n = f.n();
        TropRational {
            num: f.canonicalize(),
            den: TropPoly::one(n),
        }
    }

    pub fn n(&self) -> usize {
        self.num.n()
    }

    pub fn numerator(&self) -> &TropPoly {
        &self.num
    }

    pub fn denominator(&self) -> &TropPoly {
        &self.den
    }

    /// `f₁⊘g₁ ≡ f₂⊘g₂` iff `f₁⊙g₂ = f₂⊙g₁`.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Error::check_dim(self.n(), other.n())?;
        self.num.mul(&other.den)?.equals(&other.num.mul(&self.den)?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let a = self.num.mul(&other.den)?;
        let b = other.num.mul(&self.den)?;
        Self::new(a.add(&b)?, self.den.mul(&other.den)?)
    }

    /// Multiplicative inverse; the numerator must be nonzero.
    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power, negative exponents inverting.
    pub fn powi(&self, m: i64) -> Result<Self> {
        let base = if m < 0 { self.inv()? } else { self.clone() };
        let m = u32::try_from(m.unsigned_abs())
            .map_err(|_| Error::Resource(format!("exponent {m} too large")))?;
        Self::new(base.num.pow(m), base.den.pow(m))
    }

    /// `f(v) − g(v)`; `None` when the numerator is `𝟘`.
    pub fn evaluate(&self, v: &[Rational]) -> Result<Option<Rational>> {
        let top = self.num.evaluate(v)?;
        let bottom = self.den.evaluate(v)?;
        Ok(match (top, bottom) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => Some(a - b),
            _ => None,
        })
    }
}

/// Expression over transfer generators `Gen(α) = Tr_G(x^α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvExpr {
    Gen(Exponent),
    Add(Vec<InvExpr>),
    Mul(Vec<InvExpr>),
    Pow(u32, Box<InvExpr>),
    Div(Box<InvExpr>, Box<InvExpr>),
}

impl InvExpr {
    pub fn node_count(&self) -> usize {
        1 + match self {
            InvExpr::Gen(_) => 0,
            InvExpr::Add(xs) | InvExpr::Mul(xs) => xs.iter().map(InvExpr::node_count).sum(),
            InvExpr::Pow(_, x) => x.node_count(),
            InvExpr::Div(a, b) => a.node_count() + b.node_count(),
        }
    }

    pub fn depth(&self) -> usize {
        1 + match self {
            InvExpr::Gen(_) => 0,
            InvExpr::Add(xs) | InvExpr::Mul(xs) => {
                xs.iter().map(InvExpr::depth).max().unwrap_or(0)
            }
            InvExpr::Pow(_, x) => x.depth(),
            InvExpr::Div(a, b) => a.depth().max(b.depth()),
        }
    }

    pub fn leaves(&self) -> Vec<&Exponent> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Exponent>) {
        match self {
            InvExpr::Gen(a) => out.push(a),
            InvExpr::Add(xs) | InvExpr::Mul(xs) => xs.iter().for_each(|x| x.collect_leaves(out)),
            InvExpr::Pow(_, x) => x.collect_leaves(out),
            InvExpr::Div(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Value at `v` in the function model: `Gen(α) ↦ max_σ ⟨σ(α), v⟩`,
    /// `⊕ ↦ max`, `⊙ ↦ +`, `Pow(m) ↦ m·`, `⊘ ↦ −`.
    pub fn eval(&self, group: &PermGroup, v: &[Rational]) -> Result<Rational> {
        Error::check_dim(group.n(), v.len())?;
        self.eval_inner(group, v)
    }

    fn eval_inner(&self, group: &PermGroup, v: &[Rational]) -> Result<Rational> {
        Ok(match self {
            InvExpr::Gen(alpha) => {
                Error::check_dim(group.n(), alpha.len())?;
                group
                    .elements()
                    .iter()
                    .map(|g| Exponent::new(g.act(alpha.as_slice())).dot(v))
                    .max()
                    .expect("groups are nonempty")
            }
            InvExpr::Add(xs) => {
                let mut best: Option<Rational> = None;
                for x in xs {
                    let val = x.eval_inner(group, v)?;
                    best = Some(match best {
                        Some(b) if b >= val => b,
                        _ => val,
                    });
                }
                best.ok_or_else(|| Error::Domain("empty sum".into()))?
            }
            InvExpr::Mul(xs) => {
                let mut total = Rational::from_integer(0.into());
                for x in xs {
                    total += x.eval_inner(group, v)?;
                }
                total
            }
            InvExpr::Pow(m, x) => x.eval_inner(group, v)? * int(*m as i64),
            InvExpr::Div(a, b) => a.eval_inner(group, v)? - b.eval_inner(group, v)?,
        })
    }

    /// Symbolic value as a tropical rational function. Exponential in the
    /// powers involved; intended for small expressions.
    pub fn to_rational(&self, group: &PermGroup) -> Result<TropRational> {
        Ok(match self {
            InvExpr::Gen(alpha) => TropRational::from_poly(group.transfer_monomial(alpha)?),
            InvExpr::Add(xs) | InvExpr::Mul(xs) => {
                let mut it = xs.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::Domain("empty expression list".into()))?
                    .to_rational(group)?;
                let is_add = matches!(self, InvExpr::Add(_));
                it.try_fold(first, |acc, x| {
                    let r = x.to_rational(group)?;
                    if is_add {
                        acc.add(&r)
                    } else {
                        acc.mul(&r)
                    }
                })?
            }
            InvExpr::Pow(m, x) => x.to_rational(group)?.powi(*m as i64)?,
            InvExpr::Div(a, b) => a.to_rational(group)?.mul(&b.to_rational(group)?.inv()?)?,
        })
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("expression serializes")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        fn exps(v: &Value) -> Result<Exponent> {
            let arr = v
                .as_array()
                .ok_or_else(|| Error::Schema("\"gen\" must be an array".into()))?;
            arr.iter()
                .map(|x| {
                    x.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| Error::Schema(format!("bad exponent entry {x}")))
                })
                .collect::<Result<Vec<u32>>>()
                .map(Exponent::new)
        }
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Schema("expression must be an object".into()))?;
        if let Some(g) = obj.get("gen") {
            return exps(g).map(InvExpr::Gen);
        }
        let op = obj
            .get("op")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Schema("expression needs \"gen\" or \"op\"".into()))?;
        let args = || -> Result<Vec<InvExpr>> {
            obj.get("args")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Schema(format!("\"{op}\" needs an \"args\" array")))?
                .iter()
                .map(InvExpr::from_json)
                .collect()
        };
        match op {
            "add" | "mul" => {
                let a = args()?;
                if a.is_empty() {
                    return Err(Error::Schema(format!("\"{op}\" needs at least one argument")));
                }
                Ok(if op == "add" { InvExpr::Add(a) } else { InvExpr::Mul(a) })
            }
            "div" => {
                let mut a = args()?;
                if a.len() != 2 {
                    return Err(Error::Schema("\"div\" takes exactly two arguments".into()));
                }
                let den = a.pop().expect("two");
                let num = a.pop().expect("two");
                Ok(InvExpr::Div(Box::new(num), Box::new(den)))
            }
            "pow" => {
                let m = obj
                    .get("m")
                    .and_then(Value::as_u64)
                    .and_then(|m| u32::try_from(m).ok())
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| Error::Schema("\"pow\" needs a positive integer \"m\"".into()))?;
                let arg = obj
                    .get("arg")
                    .ok_or_else(|| Error::Schema("\"pow\" needs \"arg\"".into()))?;
                Ok(InvExpr::Pow(m, Box::new(InvExpr::from_json(arg)?)))
            }
            other => Err(Error::Schema(format!("unknown operator {other:?}"))),
        }
    }
}

impl Serialize for InvExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            InvExpr::Gen(a) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("gen", a.as_slice())?;
                m.end()
            }
            InvExpr::Add(xs) | InvExpr::Mul(xs) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("op", if matches!(self, InvExpr::Add(_)) { "add" } else { "mul" })?;
                m.serialize_entry("args", xs)?;
                m.end()
            }
            InvExpr::Pow(p, x) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("op", "pow")?;
                m.serialize_entry("m", p)?;
                m.serialize_entry("arg", x)?;
                m.end()
            }
            InvExpr::Div(a, b) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("op", "div")?;
                m.serialize_entry("args", &[a, b])?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for InvExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        InvExpr::from_json(&v).map_err(D::Error::custom)
    }
}

/// Group elements in enumeration order, paired with the first primes.
#[derive(Debug, Clone)]
pub struct PrimeAssignment {
    elements: Vec<Permutation>,
    primes: Vec<u64>,
    modulus: u128,
}

impl PrimeAssignment {
    pub fn new(group: &PermGroup) -> Self {
        let elements = group.elements().to_vec();
        let primes = first_primes(elements.len());
        let modulus = primes
            .iter()
            .try_fold(1u128, |acc, &p| acc.checked_mul(p as u128))
            .unwrap_or(u128::MAX);
        PrimeAssignment {
            elements,
            primes,
            modulus,
        }
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `N = p₁⋯p_k`, saturating at `u128::MAX`.
    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    /// True when `‖α‖_∞ < N`.
    pub fn is_generator(&self, alpha: &Exponent) -> bool {
        (alpha.max_entry() as u128) < self.modulus
    }
}

pub fn first_primes(k: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(k);
    let mut c = 2u64;
    while primes.len() < k {
        if primes.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            primes.push(c);
        }
        c += 1;
    }
    primes
}

/// The `γ` with `0 <= γ_j < N` and `γ + σᵢ(β) ≡ 0 (mod pᵢ)` for all `i`.
pub fn crt_gamma(assign: &PrimeAssignment, beta: &Exponent) -> Result<Exponent> {
    let n = beta.len();
    if assign.modulus > u32::MAX as u128 {
        return Err(Error::Resource(format!(
            "modulus {} exceeds the exponent range",
            assign.modulus
        )));
    }
    let images: Vec<Vec<u32>> = assign
        .elements
        .iter()
        .map(|g| g.act(beta.as_slice()))
        .collect();
    let mut gamma = Vec::with_capacity(n);
    for j in 0..n {
        let (mut x, mut m) = (0u128, 1u128);
        for (img, &p) in images.iter().zip(&assign.primes) {
            let p = p as u128;
            let target = (p - img[j] as u128 % p) % p;
            // Solve x + m·t ≡ target (mod p).
            let diff = (target + p - x % p) % p;
            let t = diff * mod_inverse(m % p, p) % p;
            x += m * t;
            m *= p;
        }
        gamma.push(x as u32);
    }
    Ok(Exponent::new(gamma))
}

fn mod_inverse(a: u128, p: u128) -> u128 {
    // p is prime and a is nonzero mod p.
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i128) as u128
}

/// One step of the rewriting: `γ` and the `δᵢ` for `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub gamma: Exponent,
    pub deltas: Vec<Exponent>,
}

pub fn rewrite_step(assign: &PrimeAssignment, beta: &Exponent) -> Result<RewriteStep> {
    let gamma = crt_gamma(assign, beta)?;
    let deltas = assign
        .elements
        .iter()
        .zip(&assign.primes)
        .map(|(g, &p)| {
            let img = g.act(beta.as_slice());
            Exponent::new(
                gamma
                    .as_slice()
                    .iter()
                    .zip(&img)
                    .map(|(&a, &b)| {
                        let s = a as u64 + b as u64;
                        debug_assert_eq!(s % p, 0);
                        (s / p) as u32
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(RewriteStep { gamma, deltas })
}

/// `Tr_G(x^β)` as an expression in generators `Tr_G(x^α)`, `‖α‖_∞ < N`.
pub fn rewrite_transfer(group: &PermGroup, beta: &Exponent) -> Result<InvExpr> {
    rewrite_transfer_with_limit(group, beta, MAX_REWRITE_NODES)
}

pub fn rewrite_transfer_with_limit(
    group: &PermGroup,
    beta: &Exponent,
    max_nodes: usize,
) -> Result<InvExpr> {
    Error::check_dim(group.n(), beta.len())?;
    let assign = PrimeAssignment::new(group);
    let mut budget = max_nodes;
    rewrite_rec(&assign, beta, &mut budget)
}

fn rewrite_rec(assign: &PrimeAssignment, beta: &Exponent, budget: &mut usize) -> Result<InvExpr> {
    let mut spend = |k: usize| -> Result<()> {
        if *budget < k {
            return Err(Error::Resource(
                "rewriting exceeds the expression size limit".into(),
            ));
        }
        *budget -= k;
        Ok(())
    };
    if assign.is_generator(beta) {
        spend(1)?;
        return Ok(InvExpr::Gen(beta.clone()));
    }
    // Div, Add, Gen(γ), and one Pow per prime.
    spend(3 + assign.primes.len())?;
    let step = rewrite_step(assign, beta)?;
    let mut terms = Vec::with_capacity(step.deltas.len());
    for (delta, &p) in step.deltas.iter().zip(&assign.primes) {
        let sub = rewrite_rec(assign, delta, budget)?;
        terms.push(InvExpr::Pow(p as u32, Box::new(sub)));
    }
    Ok(InvExpr::Div(
        Box::new(InvExpr::Add(terms)),
        Box::new(InvExpr::Gen(step.gamma)),
    ))
}

/// Checks `Tr_G(x^β) ⊙ Tr_G(x^γ) = ⊕ᵢ Tr_G(x^{δᵢ})^{pᵢ}` exactly.
pub fn key_identity_holds(group: &PermGroup, beta: &Exponent) -> Result<bool> {
    Error::check_dim(group.n(), beta.len())?;
    let assign = PrimeAssignment::new(group);
    let step = rewrite_step(&assign, beta)?;
    let lhs = group
        .transfer_monomial(beta)?
        .mul(&group.transfer_monomial(&step.gamma)?)?;
    let mut rhs = TropPoly::zero(group.n());
    for (delta, &p) in step.deltas.iter().zip(&assign.primes) {
        rhs = rhs.add(&group.transfer_monomial(delta)?.pow(p as u32))?;
    }
    lhs.equals(&rhs)
}

/// Writes a univariate Boolean rational function as `x^a ⊙ (𝟙⊕x)^b`.
pub fn factor_boolean_univariate(r: &TropRational) -> Result<(i64, i64)> {
    if r.n() != 1 {
        return Err(Error::Domain(format!("expected one variable, got {}", r.n())));
    }
    let interval = |f: &TropPoly| -> Result<(i64, i64)> {
        if f.is_zero() {
            return Err(Error::Domain("zero polynomial".into()));
        }
        if !f.is_boolean() {
            return Err(Error::Domain(format!("not a Boolean polynomial: {f}")));
        }
        let exps: Vec<i64> = f.support().map(|e| e.as_slice()[0] as i64).collect();
        Ok((exps[0], *exps.last().expect("nonempty")))
    };
    let (a1, b1) = interval(&r.num)?;
    let (a2, b2) = interval(&r.den)?;
    Ok((a1 - a2, (b1 - a1) - (b2 - a2)))
}

/// `x^a ⊙ (𝟙⊕x)^b` as a Boolean rational function in one variable.
pub fn boolean_univariate_from_factors(a: i64, b: i64) -> Result<TropRational> {
    let x = TropRational::from_poly(TropPoly::var(1, 0));
    let one_x = TropRational::from_poly(TropPoly::boolean(
        1,
        [Exponent::new(vec![0]), Exponent::new(vec![1])],
    )?);
    x.powi(a)?.mul(&one_x.powi(b)?)
}
