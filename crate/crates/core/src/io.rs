//! JSON formats.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`), exponents and
//! permutations as integer arrays. Readers reject unknown fields and map
//! every malformed input to [`Error::Schema`].

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::embed::EmbeddingSpec;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};
use crate::poly::{Exponent, TropPoly, TropScalar};
use crate::polytope::LatticePolytope;
use crate::rational::{self, Rational};
use crate::rewrite::TropRational;

fn decode<T: DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Schema(format!("{what}: {e}")))
}

/// Parses JSON text into a value, mapping syntax errors to schema errors.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Schema(format!("malformed JSON: {e}")))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

pub fn poly_to_json(f: &TropPoly) -> Value {
    let wire = PolyJson {
        n: f.n(),
        terms: f
            .terms()
            .map(|(e, c)| TermJson {
                exp: e.as_slice().to_vec(),
                coef: rational::format(c),
            })
            .collect(),
    };
    serde_json::to_value(wire).expect("polynomial serializes")
}

pub fn poly_from_json(v: &Value) -> Result<TropPoly> {
    let wire: PolyJson = decode(v, "polynomial")?;
    let mut terms = Vec::with_capacity(wire.terms.len());
    for t in wire.terms {
        if t.exp.len() != wire.n {
            return Err(Error::Schema(format!(
                "exponent {:?} has length {}, expected {}",
                t.exp,
                t.exp.len(),
                wire.n
            )));
        }
        let c = rational::parse(&t.coef)?;
        terms.push((Exponent::new(t.exp), TropScalar::Finite(c)));
    }
    TropPoly::from_terms(wire.n, terms)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeJson {
    n: usize,
    vertices: Vec<Vec<u32>>,
}

pub fn polytope_to_json(p: &LatticePolytope) -> Value {
    let wire = PolytopeJson {
        n: p.n(),
        vertices: p.vertices().iter().map(|e| e.as_slice().to_vec()).collect(),
    };
    serde_json::to_value(wire).expect("polytope serializes")
}

pub fn polytope_from_json(v: &Value) -> Result<LatticePolytope> {
    let wire: PolytopeJson = decode(v, "polytope")?;
    for p in &wire.vertices {
        if p.len() != wire.n {
            return Err(Error::Schema(format!("vertex {p:?} has length {}, expected {}", p.len(), wire.n)));
        }
    }
    LatticePolytope::from_points(wire.n, wire.vertices.into_iter().map(Exponent::new))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PermJson {
    Images(Vec<usize>),
    Cycles(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    n: usize,
    generators: Vec<PermJson>,
}

#[derive(Serialize)]
struct GroupOut {
    n: usize,
    generators: Vec<Vec<usize>>,
}

/// Writes generators as 1-based image arrays.
pub fn group_to_json(g: &PermGroup) -> Value {
    let wire = GroupOut {
        n: g.n(),
        generators: g.generators().iter().map(Permutation::one_based).collect(),
    };
    serde_json::to_value(wire).expect("group serializes")
}

/// Reads a group; each generator is a 1-based image array or a cycle
/// string such as `"(1 2 3)(4 5)"`.
pub fn group_from_json(v: &Value) -> Result<PermGroup> {
    let wire: GroupJson = decode(v, "group")?;
    let mut gens = Vec::with_capacity(wire.generators.len());
    for p in wire.generators {
        let perm = match p {
            PermJson::Images(images) => {
                if images.len() != wire.n {
                    return Err(Error::Schema(format!(
                        "generator {images:?} has length {}, expected {}",
                        images.len(),
                        wire.n
                    )));
                }
                Permutation::from_one_based(&images)?
            }
            PermJson::Cycles(s) => Permutation::from_cycles(wire.n, &s)?,
        };
        gens.push(perm);
    }
    PermGroup::generate(wire.n, gens)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    group: Value,
    e_list: Vec<Value>,
    f_list: Vec<Value>,
}

pub fn spec_to_json(spec: &EmbeddingSpec) -> Value {
    let wire = SpecJson {
        group: group_to_json(spec.group()),
        e_list: spec.e_list().iter().map(poly_to_json).collect(),
        f_list: spec.f_list().iter().map(poly_to_json).collect(),
    };
    serde_json::to_value(wire).expect("spec serializes")
}

/// Reads a spec; the polynomials must be invariant under the group.
pub fn spec_from_json(v: &Value) -> Result<EmbeddingSpec> {
    let wire: SpecJson = decode(v, "embedding spec")?;
    let group = group_from_json(&wire.group)?;
    let polys = |vs: &[Value]| vs.iter().map(poly_from_json).collect::<Result<Vec<_>>>();
    let e_list = polys(&wire.e_list)?;
    let f_list = polys(&wire.f_list)?;
    for f in e_list.iter().chain(&f_list) {
        if f.n() != group.n() {
            return Err(Error::Schema(format!(
                "polynomial in {} variables, group acts on {}",
                f.n(),
                group.n()
            )));
        }
    }
    EmbeddingSpec::from_parts(group, e_list, f_list)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalFnJson {
    num: Value,
    den: Value,
}

pub fn trop_rational_to_json(r: &TropRational) -> Value {
    let wire = RationalFnJson {
        num: poly_to_json(r.numerator()),
        den: poly_to_json(r.denominator()),
    };
    serde_json::to_value(wire).expect("rational function serializes")
}

pub fn trop_rational_from_json(v: &Value) -> Result<TropRational> {
    let wire: RationalFnJson = decode(v, "rational function")?;
    let num = poly_from_json(&wire.num)?;
    let den = poly_from_json(&wire.den)?;
    if num.n() != den.n() {
        return Err(Error::Schema(format!(
            "numerator has {} variables, denominator {}",
            num.n(),
            den.n()
        )));
    }
    TropRational::new(num, den)
}

/// Reads any `serde`-backed type (for example
/// [`EDecomposition`](crate::invariants::EDecomposition)).
pub fn from_value<T: DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    decode(v, what)
}

/// Rationals as JSON strings.
pub fn rationals_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(rational::format(r))).collect())
}
