#![allow(dead_code)]

use proptest::prelude::*;
use tropinv::rational::Rational;
use tropinv::{Exponent, PermGroup, Permutation, TropPoly, TropScalar};

pub fn rat() -> impl Strategy<Value = Rational> {
    (1i64..=4).prop_flat_map(|d| (-10 * d..=10 * d).prop_map(move |k| Rational::new(k.into(), d.into())))
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rat(), n)
}

/// Exponent with total degree at most `deg`.
pub fn exponent(n: usize, deg: u32) -> impl Strategy<Value = Exponent> {
    proptest::collection::vec(0..=deg, n).prop_map(move |mut v| {
        while v.iter().sum::<u32>() > deg {
            let i = v.iter().position(|&x| x > 0).unwrap();
            v[i] -= 1;
        }
        Exponent::new(v)
    })
}

pub fn poly_n(n: usize, max_terms: usize, deg: u32) -> impl Strategy<Value = TropPoly> {
    proptest::collection::vec((exponent(n, deg), rat()), 0..=max_terms).prop_map(move |terms| {
        TropPoly::from_terms(n, terms.into_iter().map(|(e, c)| (e, TropScalar::Finite(c)))).unwrap()
    })
}

pub fn nonzero_poly_n(n: usize, max_terms: usize, deg: u32) -> impl Strategy<Value = TropPoly> {
    proptest::collection::vec((exponent(n, deg), rat()), 1..=max_terms).prop_map(move |terms| {
        TropPoly::from_terms(n, terms.into_iter().map(|(e, c)| (e, TropScalar::Finite(c)))).unwrap()
    })
}

pub fn cyc(n: usize, s: &str) -> Permutation {
    Permutation::from_cycles(n, s).unwrap()
}

pub fn group(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::generate(n, gens.iter().map(|s| cyc(n, s)).collect()).unwrap()
}

/// A handful of groups on three letters.
pub fn groups3() -> Vec<PermGroup> {
    vec![
        PermGroup::trivial(3),
        group(3, &["(1 2)"]),
        group(3, &["(1 2 3)"]),
        PermGroup::symmetric(3).unwrap(),
    ]
}

pub fn group3() -> impl Strategy<Value = PermGroup> {
    (0..4usize).prop_map(|i| groups3().swap_remove(i))
}
