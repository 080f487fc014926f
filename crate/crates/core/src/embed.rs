//! Separating invariants and the orbit-space embedding `φ`.
//!
//! `φ` collects the elementary symmetric polynomials `e₁,…,eₙ` together
//! with one max filter `f_σ = Tr_G(x^{σ(ρ)})` per right coset `Gσ`, where
//! `ρ = (n−1, …, 1, 0)`.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::invariants::elementary_symmetric;
use crate::poly::{Exponent, TropPoly};
use crate::rational::{format, sqrt_decimal, Rational};

/// Significant digits in the decimal fields of a [`DistortionReport`].
pub const REPORT_DIGITS: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingSpec {
    group: PermGroup,
    e_list: Vec<TropPoly>,
    f_list: Vec<TropPoly>,
}

impl EmbeddingSpec {
    /// Builds a spec from explicit invariants. Every polynomial must be in
    /// `group.n()` variables and `G`-invariant.
    pub fn from_parts(group: PermGroup, e_list: Vec<TropPoly>, f_list: Vec<TropPoly>) -> Result<Self> {
        for f in e_list.iter().chain(&f_list) {
            Error::check_dim(group.n(), f.n())?;
            if !group.is_invariant(f)? {
                return Err(Error::Domain(format!("{f} is not invariant under the group")));
            }
        }
        Ok(EmbeddingSpec {
            group,
            e_list: e_list.into_iter().map(|f| f.canonicalize()).collect(),
            f_list: f_list.into_iter().map(|f| f.canonicalize()).collect(),
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn e_list(&self) -> &[TropPoly] {
        &self.e_list
    }

    pub fn f_list(&self) -> &[TropPoly] {
        &self.f_list
    }

    pub fn m(&self) -> usize {
        self.e_list.len() + self.f_list.len()
    }

    pub fn polynomials(&self) -> impl Iterator<Item = &TropPoly> {
        self.e_list.iter().chain(&self.f_list)
    }

    pub fn max_degree(&self) -> i64 {
        self.polynomials().map(TropPoly::degree).max().unwrap_or(-1)
    }
}

/// `ρ = (n−1, n−2, …, 0)`.
pub fn staircase(n: usize) -> Exponent {
    Exponent::new((0..n as u32).rev().collect())
}

/// `{e₁,…,eₙ} ∪ {f_σ}` with one `f_σ` per right coset of `G` in `Sₙ`.
pub fn separating_set(group: &PermGroup) -> Result<EmbeddingSpec> {
    let n = group.n();
    let reps = group.coset_representatives()?;
    let e_list = (1..=n)
        .map(|k| elementary_symmetric(n, k))
        .collect::<Result<Vec<_>>>()?;
    let rho = staircase(n);
    let mut f_list: Vec<TropPoly> = Vec::with_capacity(reps.len());
    for sigma in &reps {
        let f = group.transfer_monomial(&sigma.act_exponent(&rho)?)?;
        if !f_list.contains(&f) {
            f_list.push(f);
        }
    }
    debug_assert_eq!(f_list.len(), reps.len());
    Ok(EmbeddingSpec {
        group: group.clone(),
        e_list,
        f_list,
    })
}

fn check_vec(n: usize, v: &[Rational]) -> Result<()> {
    Error::check_dim(n, v.len())
}

/// `min_{g∈G} ‖g·v − w‖²`.
pub fn orbit_distance(group: &PermGroup, v: &[Rational], w: &[Rational]) -> Result<Rational> {
    check_vec(group.n(), v)?;
    check_vec(group.n(), w)?;
    let mut best: Option<Rational> = None;
    for g in group.elements() {
        let gv = g.act(v);
        let d = squared_distance(&gv, w);
        if best.as_ref().map_or(true, |b| d < *b) {
            best = Some(d);
        }
    }
    Ok(best.expect("groups contain the identity"))
}

fn squared_distance(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            &d * &d
        })
        .fold(Rational::zero(), |s, t| s + t)
}

/// `φ(v)`: every invariant of the spec evaluated at `v`, `e`-part first.
pub fn embed(spec: &EmbeddingSpec, v: &[Rational]) -> Result<Vec<Rational>> {
    check_vec(spec.n(), v)?;
    spec.polynomials()
        .map(|f| match f.evaluate(v)?.finite() {
            Some(r) => Ok(r.clone()),
            None => Err(Error::Domain(format!("{f} evaluates to -inf"))),
        })
        .collect()
}

/// `max_{g∈G} ⟨v, g·z⟩`.
pub fn max_filter(group: &PermGroup, z: &[Rational], v: &[Rational]) -> Result<Rational> {
    check_vec(group.n(), z)?;
    check_vec(group.n(), v)?;
    let mut best: Option<Rational> = None;
    for g in group.elements() {
        let gz = g.act(z);
        let ip = gz.iter().zip(v).fold(Rational::zero(), |s, (a, b)| s + a * b);
        if best.as_ref().map_or(true, |b| ip > *b) {
            best = Some(ip);
        }
    }
    Ok(best.expect("groups contain the identity"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    SameOrbit,
    Separated,
    /// The embedding disagrees with orbit membership.
    Violation,
}

pub fn separation_check(spec: &EmbeddingSpec, v: &[Rational], w: &[Rational]) -> Result<Verdict> {
    let same_orbit = orbit_distance(&spec.group, v, w)?.is_zero();
    let same_image = embed(spec, v)? == embed(spec, w)?;
    Ok(match (same_orbit, same_image) {
        (true, true) => Verdict::SameOrbit,
        (false, false) => Verdict::Separated,
        _ => Verdict::Violation,
    })
}

/// Sampling box `[lo, hi]ⁿ` over rationals with denominators `<= max_den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleBox {
    pub lo: i64,
    pub hi: i64,
    pub max_den: u32,
}

impl Default for SampleBox {
    fn default() -> Self {
        SampleBox {
            lo: -10,
            hi: 10,
            max_den: 4,
        }
    }
}

impl SampleBox {
    fn validate(&self) -> Result<()> {
        if self.lo > self.hi || self.max_den == 0 {
            return Err(Error::Domain(format!(
                "bad sampling box [{}, {}] with max denominator {}",
                self.lo, self.hi, self.max_den
            )));
        }
        Ok(())
    }

    fn draw(&self, rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
        (0..n)
            .map(|_| {
                let den = rng.gen_range(1..=self.max_den as i64);
                let num = rng.gen_range(self.lo * den..=self.hi * den);
                Rational::new(num.into(), den.into())
            })
            .collect()
    }
}

/// The `i`-th sample pair for a seed. Each index has its own ChaCha
/// stream so pairs can be generated in any order.
pub fn sample_pair(seed: u64, index: u64, n: usize, bounds: &SampleBox) -> (Vec<Rational>, Vec<Rational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let v = bounds.draw(&mut rng, n);
    let w = bounds.draw(&mut rng, n);
    (v, w)
}

/// Empirical bi-Lipschitz constants of `φ` over sampled pairs.
///
/// `c1_sq`/`c2_sq` are the exact minimum and maximum of
/// `‖φ(v)−φ(w)‖² / d(G·v, G·w)²`; the `_hat` fields are their square roots
/// truncated to [`REPORT_DIGITS`] significant digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistortionReport {
    pub kind: String,
    pub samples: u64,
    pub used: u64,
    pub seed: u64,
    pub bounds: SampleBox,
    pub c1_sq: String,
    pub c2_sq: String,
    pub c1_hat: String,
    pub c2_hat: String,
    pub ratio: String,
    pub digits: usize,
}

impl DistortionReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let rows = [
            ("estimate", self.kind.clone()),
            ("samples", self.samples.to_string()),
            ("nondegenerate", self.used.to_string()),
            ("seed", self.seed.to_string()),
            (
                "box",
                format!("[{}, {}], den <= {}", self.bounds.lo, self.bounds.hi, self.bounds.max_den),
            ),
            ("c1_hat", self.c1_hat.clone()),
            ("c2_hat", self.c2_hat.clone()),
            ("ratio", self.ratio.clone()),
            ("c1^2 exact", self.c1_sq.clone()),
            ("c2^2 exact", self.c2_sq.clone()),
        ];
        for (k, v) in rows {
            let _ = writeln!(s, "{k:<14} {v}");
        }
        s
    }
}

pub fn distortion_estimate(
    spec: &EmbeddingSpec,
    samples: u64,
    seed: u64,
    bounds: &SampleBox,
) -> Result<DistortionReport> {
    if samples == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    bounds.validate()?;
    let n = spec.n();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    let mut used = 0u64;
    for i in 0..samples {
        let (v, w) = sample_pair(seed, i, n, bounds);
        let d2 = orbit_distance(&spec.group, &v, &w)?;
        if d2.is_zero() {
            continue;
        }
        used += 1;
        let e2 = squared_distance(&embed(spec, &v)?, &embed(spec, &w)?);
        let q = e2 / d2;
        if lo.as_ref().map_or(true, |l| q < *l) {
            lo = Some(q.clone());
        }
        if hi.as_ref().map_or(true, |h| q > *h) {
            hi = Some(q);
        }
    }
    let (Some(c1), Some(c2)) = (lo, hi) else {
        return Err(Error::Sampling(format!(
            "all {samples} sampled pairs lie in a common orbit"
        )));
    };
    let ratio = if c1.is_positive() {
        sqrt_decimal(&(&c2 / &c1), REPORT_DIGITS)
    } else {
        "inf".to_string()
    };
    Ok(DistortionReport {
        kind: "empirical".into(),
        samples,
        used,
        seed,
        bounds: *bounds,
        c1_hat: sqrt_decimal(&c1, REPORT_DIGITS),
        c2_hat: sqrt_decimal(&c2, REPORT_DIGITS),
        c1_sq: format(&c1),
        c2_sq: format(&c2),
        ratio,
        digits: REPORT_DIGITS,
    })
}
