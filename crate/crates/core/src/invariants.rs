//! Generators of tropical invariant semirings.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::poly::{Exponent, TropPoly};
use crate::polytope::LatticePolytope;

/// `e_k = ⊕_{i₁<⋯<i_k} x_{i₁}⊙⋯⊙x_{i_k}` in `n` variables.
pub fn elementary_symmetric(n: usize, k: usize) -> Result<TropPoly> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("e_k needs 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let mut exps = Vec::new();
    let mut chosen = vec![0u32; n];
    fn rec(start: usize, left: usize, chosen: &mut [u32], out: &mut Vec<Exponent>) {
        if left == 0 {
            out.push(Exponent::new(chosen.to_vec()));
            return;
        }
        for i in start..=chosen.len() - left {
            chosen[i] = 1;
            rec(i + 1, left - 1, chosen, out);
            chosen[i] = 0;
        }
    }
    rec(0, k, &mut chosen, &mut exps);
    Ok(TropPoly::boolean(n, exps)?.canonicalize())
}

/// Whether `β` lies in the convex hull of the `Sₙ`-orbit of `α`: equal
/// totals and dominating prefix sums after sorting both decreasingly.
pub fn majorizes(alpha: &Exponent, beta: &Exponent) -> Result<bool> {
    Error::check_dim(alpha.len(), beta.len())?;
    let a = alpha.sorted_desc();
    let b = beta.sorted_desc();
    let (mut sa, mut sb) = (0u64, 0u64);
    for (&x, &y) in a.as_slice().iter().zip(b.as_slice()) {
        sa += x as u64;
        sb += y as u64;
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(sa == sb)
}

/// Exponents `c` with `Tr_{Sₙ}(x^γ) = ⨀ e_i^{c_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EDecomposition {
    pub c: Vec<u32>,
}

impl EDecomposition {
    /// `⨀ e_i^{c_i}` as a canonical polynomial.
    pub fn product(&self) -> TropPoly {
        let n = self.c.len();
        let mut out = TropPoly::one(n);
        for (i, &ci) in self.c.iter().enumerate() {
            if ci > 0 {
                let e = elementary_symmetric(n, i + 1).expect("1 <= i+1 <= n");
                out = out.mul(&e.pow(ci)).expect("same arity").canonicalize();
            }
        }
        out
    }

    /// `Σ i·c_i`, which equals `‖γ‖₁`.
    pub fn weight(&self) -> u64 {
        self.c
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * c as u64)
            .sum()
    }
}

/// `c_i = γ_i − γ_{i+1}` on the decreasing rearrangement, `c_n = γ_n`.
pub fn sn_decompose(gamma: &Exponent) -> EDecomposition {
    let g = gamma.sorted_desc().into_vec();
    let n = g.len();
    let c = (0..n)
        .map(|i| if i + 1 < n { g[i] - g[i + 1] } else { g[i] })
        .collect();
    EDecomposition { c }
}

/// Checks `Tr_{Sₙ}(x^α) ⊙ Tr_{Sₙ}(x^β) = Tr_{Sₙ}(x^{α+β})` for
/// decreasingly sorted `α`, `β`.
pub fn product_transfer_check(alpha: &Exponent, beta: &Exponent) -> Result<bool> {
    Error::check_dim(alpha.len(), beta.len())?;
    if !alpha.is_sorted_desc() || !beta.is_sorted_desc() {
        return Err(Error::Domain("exponents must be sorted weakly decreasing".into()));
    }
    let sn = PermGroup::symmetric(alpha.len())?;
    let lhs = sn
        .transfer_monomial(alpha)?
        .mul(&sn.transfer_monomial(beta)?)?;
    let rhs = sn.transfer_monomial(&alpha.add(beta))?;
    lhs.equals(&rhs)
}

/// Generators of the invariant semiring of a group generated by
/// 2-cycles: the elementary symmetric polynomials of every block.
pub fn finite_generators(group: &PermGroup) -> Result<Vec<TropPoly>> {
    let tb = group.transposition_blocks();
    if !tb.is_transposition_generated {
        return Err(Error::NotFinitelyGenerated {
            order: group.order(),
            transpositions_order: tb.transposition_subgroup_order,
        });
    }
    let n = group.n();
    let mut out = Vec::with_capacity(n);
    for block in &tb.blocks {
        for k in 1..=block.len() {
            out.push(elementary_symmetric(block.len(), k)?.embed(n, block)?);
        }
    }
    Ok(out)
}

/// Exponents `α₁ > α₂ > ⋯ > αₙ >= 0` with `‖α‖₁ <= bound`.
pub fn strictly_decreasing_exponents(n: usize, bound: u64) -> Vec<Exponent> {
    fn rec(prefix: &mut Vec<u32>, n: usize, budget: u64, out: &mut Vec<Exponent>) {
        let i = prefix.len();
        if i == n {
            out.push(Exponent::new(prefix.clone()));
            return;
        }
        let remaining = (n - i - 1) as u64;
        // The entries after position i are at least remaining−1, …, 1, 0.
        let min_here = remaining as u32;
        let max_here = match prefix.last() {
            Some(&p) if p == 0 => return,
            Some(&p) => p - 1,
            None => u32::MAX,
        };
        let tail_min = remaining * remaining.saturating_sub(1) / 2;
        let mut v = min_here;
        while v <= max_here {
            if v as u64 + tail_min > budget {
                break;
            }
            prefix.push(v);
            rec(prefix, n, budget - v as u64, out);
            prefix.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), n, bound, &mut out);
    out
}

/// Distinct edge directions of the polytopes `conv(G·α)` over strictly
/// decreasing `α` with `‖α‖₁ <= bound`. Directions are primitive integer
/// vectors whose first nonzero entry is positive.
pub fn edge_directions(group: &PermGroup, bound: u64) -> Result<BTreeSet<Vec<i64>>> {
    let mut dirs = BTreeSet::new();
    for alpha in strictly_decreasing_exponents(group.n(), bound) {
        let poly = LatticePolytope::point(alpha).transfer(group)?;
        for (u, v) in poly.edges()? {
            dirs.insert(primitive_direction(&u, &v));
        }
    }
    Ok(dirs)
}

pub fn edge_direction_census(group: &PermGroup, bound: u64) -> Result<usize> {
    Ok(edge_directions(group, bound)?.len())
}

fn primitive_direction(u: &Exponent, v: &Exponent) -> Vec<i64> {
    let mut d: Vec<i64> = u
        .as_slice()
        .iter()
        .zip(v.as_slice())
        .map(|(&a, &b)| a as i64 - b as i64)
        .collect();
    let g = d.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        d.iter_mut().for_each(|x| *x /= g);
    }
    if d.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        d.iter_mut().for_each(|x| *x = -*x);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    #[test]
    fn elementary_examples() {
        let x = |i| TropPoly::var(2, i);
        assert_eq!(elementary_symmetric(2, 1).unwrap(), x(0).add(&x(1)).unwrap());
        assert_eq!(elementary_symmetric(2, 2).unwrap(), x(0).mul(&x(1)).unwrap());
        let e2 = elementary_symmetric(3, 2).unwrap();
        assert_eq!(e2.num_terms(), 3);
        assert!(e2.terms().all(|(ex, _)| !e2.is_redundant_term(ex).unwrap()));
        assert!(matches!(elementary_symmetric(3, 0), Err(Error::Domain(_))));
        assert!(matches!(elementary_symmetric(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&e(&[2, 1, 0]), &e(&[1, 1, 1])).unwrap());
        assert!(majorizes(&e(&[3, 0, 2]), &e(&[3, 0, 2])).unwrap());
        assert!(!majorizes(&e(&[1, 1, 0]), &e(&[2, 0, 0])).unwrap());
        assert!(!majorizes(&e(&[2, 1, 0]), &e(&[1, 1, 0])).unwrap());
        assert!(majorizes(&e(&[2, 1]), &e(&[1, 1, 1])).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(sn_decompose(&e(&[1, 1, 1, 1])).c, vec![0, 0, 0, 1]);
        assert_eq!(sn_decompose(&e(&[0, 0, 0])).c, vec![0, 0, 0]);
        let d = sn_decompose(&e(&[2, 1, 0]));
        assert_eq!(d.c, vec![1, 1, 0]);
        assert_eq!(d.weight(), 3);
        let s3 = PermGroup::symmetric(3).unwrap();
        let tr = s3.transfer_monomial(&e(&[2, 1, 0])).unwrap();
        assert!(d.product().equals(&tr).unwrap());
        // The x₁x₂x₃ term of e₁⊙e₂ is absorbed.
        let raw = elementary_symmetric(3, 1)
            .unwrap()
            .mul(&elementary_symmetric(3, 2).unwrap())
            .unwrap();
        assert!(raw.is_redundant_term(&e(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn product_transfer_examples() {
        assert!(product_transfer_check(&e(&[1, 0]), &e(&[1, 0])).unwrap());
        assert!(product_transfer_check(&e(&[0, 0, 0]), &e(&[3, 1, 1])).unwrap());
        assert!(product_transfer_check(&e(&[2, 1, 0]), &e(&[1, 1, 0])).unwrap());
        assert!(matches!(
            product_transfer_check(&e(&[0, 1]), &e(&[1, 0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn generator_examples() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let gens = finite_generators(&s3).unwrap();
        let expected: Vec<TropPoly> = (1..=3).map(|k| elementary_symmetric(3, k).unwrap()).collect();
        assert_eq!(gens, expected);

        let g = PermGroup::generate(3, vec![Permutation::from_cycles(3, "(1 2)").unwrap()]).unwrap();
        let gens = finite_generators(&g).unwrap();
        let x = |i| TropPoly::var(3, i);
        assert_eq!(
            gens,
            vec![x(0).add(&x(1)).unwrap(), x(0).mul(&x(1)).unwrap(), x(2)]
        );
        for f in &gens {
            assert!(g.is_invariant(f).unwrap());
        }

        let c3 = PermGroup::cyclic(3);
        assert!(matches!(
            finite_generators(&c3),
            Err(Error::NotFinitelyGenerated { order: 3, transpositions_order: 1 })
        ));
    }

    #[test]
    fn delta_enumeration() {
        assert_eq!(strictly_decreasing_exponents(3, 2), Vec::<Exponent>::new());
        assert_eq!(strictly_decreasing_exponents(3, 3), vec![e(&[2, 1, 0])]);
        let four = strictly_decreasing_exponents(3, 4);
        assert_eq!(four, vec![e(&[2, 1, 0]), e(&[3, 1, 0])]);
        // Brute force over a box.
        for bound in 0..10u64 {
            let mut brute = Vec::new();
            for a in 0..=bound as u32 {
                for b in 0..a {
                    for c in 0..b {
                        if (a + b + c) as u64 <= bound {
                            brute.push(e(&[a, b, c]));
                        }
                    }
                }
            }
            let mut got = strictly_decreasing_exponents(3, bound);
            got.sort();
            brute.sort();
            assert_eq!(got, brute, "bound {bound}");
        }
    }

    #[test]
    fn census_examples() {
        let c3 = PermGroup::cyclic(3);
        let dirs = edge_directions(&c3, 3).unwrap();
        let expected: BTreeSet<Vec<i64>> =
            [vec![2, -1, -1], vec![1, -2, 1], vec![1, 1, -2]].into_iter().collect();
        assert_eq!(dirs, expected);
        assert!(edge_direction_census(&c3, 8).unwrap() > edge_direction_census(&c3, 3).unwrap());

        let s3 = PermGroup::symmetric(3).unwrap();
        let dirs = edge_directions(&s3, 6).unwrap();
        let expected: BTreeSet<Vec<i64>> =
            [vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]].into_iter().collect();
        assert_eq!(dirs, expected);
    }

    #[test]
    fn primitive_normalization() {
        assert_eq!(primitive_direction(&e(&[0, 4]), &e(&[2, 0])), vec![1, -2]);
        assert_eq!(primitive_direction(&e(&[3, 0]), &e(&[0, 0])), vec![1, 0]);
    }
}
