//! Lattice polytopes: the Boolean convex polynomial semiring.
//!
//! `⊕` is the convex hull of the union, `⊙` the Minkowski sum, `𝟘` the
//! empty set and `𝟙 = {0}`. Polytopes are kept as vertex sets only.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};
use crate::hull;
use crate::lp::{self, in_convex_hull};
use crate::poly::{Exponent, TropPoly};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    n: usize,
    vertices: BTreeSet<Exponent>,
}

impl LatticePolytope {
    pub fn empty(n: usize) -> Self {
        LatticePolytope {
            n,
            vertices: BTreeSet::new(),
        }
    }

    /// `{0}`.
    pub fn unit(n: usize) -> Self {
        Self::point(Exponent::zeros(n))
    }

    pub fn point(p: Exponent) -> Self {
        LatticePolytope {
            n: p.len(),
            vertices: BTreeSet::from([p]),
        }
    }

    /// Convex hull of the given lattice points.
    pub fn from_points<I>(n: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponent>,
    {
        let mut set = BTreeSet::new();
        for p in points {
            Error::check_dim(n, p.len())?;
            set.insert(p);
        }
        Ok(Self::reduce(n, set))
    }

    fn reduce(n: usize, points: BTreeSet<Exponent>) -> Self {
        let pts: Vec<&[u32]> = points.iter().map(Exponent::as_slice).collect();
        let zero = Rational::zero();
        let hs = vec![&zero; pts.len()];
        let keep: BTreeSet<usize> = hull::upper_vertices(&pts, &hs).into_iter().collect();
        let vertices = points
            .into_iter()
            .enumerate()
            .filter(|(i, _)| keep.contains(i))
            .map(|(_, p)| p)
            .collect();
        LatticePolytope { n, vertices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &BTreeSet<Exponent> {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `conv(A ∪ B)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        Error::check_dim(self.n, other.n)?;
        Ok(Self::reduce(
            self.n,
            self.vertices.union(&other.vertices).cloned().collect(),
        ))
    }

    /// `A + B`, the hull of pairwise vertex sums.
    pub fn minkowski(&self, other: &Self) -> Result<Self> {
        Error::check_dim(self.n, other.n)?;
        let sums = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a.add(b)))
            .collect();
        Ok(Self::reduce(self.n, sums))
    }

    /// Set equality of vertex-minimal forms.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Error::check_dim(self.n, other.n)?;
        Ok(self.vertices == other.vertices)
    }

    pub fn contains(&self, q: &Exponent) -> Result<bool> {
        Error::check_dim(self.n, q.len())?;
        if self.is_empty() {
            return Ok(false);
        }
        let points: Vec<Vec<Rational>> = self.vertices.iter().map(to_rational).collect();
        Ok(in_convex_hull(&points, &to_rational(q))?.is_inside())
    }

    /// Image under a coordinate permutation.
    pub fn act(&self, sigma: &Permutation) -> Result<Self> {
        Error::check_dim(self.n, sigma.n())?;
        Ok(LatticePolytope {
            n: self.n,
            vertices: self
                .vertices
                .iter()
                .map(|v| Exponent::new(sigma.act(v.as_slice())))
                .collect(),
        })
    }

    /// `conv(⋃_{σ∈G} σA)`.
    pub fn transfer(&self, group: &PermGroup) -> Result<Self> {
        Error::check_dim(self.n, group.n())?;
        let pts = group
            .elements()
            .iter()
            .flat_map(|g| self.vertices.iter().map(move |v| Exponent::new(g.act(v.as_slice()))))
            .collect();
        Ok(Self::reduce(self.n, pts))
    }

    /// Unordered vertex pairs spanning an edge, each pair ordered `(u, v)`
    /// with `u < v`.
    pub fn edges(&self) -> Result<Vec<(Exponent, Exponent)>> {
        if self.is_empty() {
            return Err(Error::Domain("edges of the empty polytope".into()));
        }
        let verts: Vec<&Exponent> = self.vertices.iter().collect();
        let mut out = Vec::new();
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if self.is_edge(&verts, i, j) {
                    out.push((verts[i].clone(), verts[j].clone()));
                }
            }
        }
        Ok(out)
    }

    /// Edge test: some functional `w` and level `h` with `w·u = w·v = h`
    /// and `w·t <= h − 1` for every other vertex `t`.
    fn is_edge(&self, verts: &[&Exponent], i: usize, j: usize) -> bool {
        let n = self.n;
        let others: Vec<&Exponent> = verts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, v)| *v)
            .collect();
        if others.is_empty() {
            return true;
        }
        // Columns: w+ (n), w- (n), h+, h-, one slack per other vertex.
        let cols = 2 * n + 2 + others.len();
        let functional_row = |p: &Exponent| {
            let mut row = vec![0i64; cols];
            for (k, &a) in p.as_slice().iter().enumerate() {
                row[k] = a as i64;
                row[n + k] = -(a as i64);
            }
            row[2 * n] = -1;
            row[2 * n + 1] = 1;
            row
        };
        let mut rows = vec![functional_row(verts[i]), functional_row(verts[j])];
        let mut rhs = vec![0, 0];
        for (k, t) in others.iter().enumerate() {
            let mut row = functional_row(t);
            row[2 * n + 2 + k] = 1;
            rows.push(row);
            rhs.push(-1);
        }
        lp::feasible_int(rows, rhs)
    }
}

/// `Π(f)`: the hull of the support of `f`.
pub fn newton_polytope(f: &TropPoly) -> LatticePolytope {
    LatticePolytope::reduce(f.n(), f.support().cloned().collect())
}

/// True when the graph on `vertices` with the given edges is connected.
pub fn is_connected(vertices: &BTreeSet<Exponent>, edges: &[(Exponent, Exponent)]) -> bool {
    let Some(start) = vertices.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start.clone()];
    while let Some(v) = stack.pop() {
        for (a, b) in edges {
            let next = if *a == v {
                b
            } else if *b == v {
                a
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                stack.push(next.clone());
            }
        }
    }
    seen.len() == vertices.len()
}

fn to_rational(e: &Exponent) -> Vec<Rational> {
    e.as_slice().iter().map(|&a| int(a as i64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::TropScalar;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    fn poly(n: usize, pts: &[&[u32]]) -> LatticePolytope {
        LatticePolytope::from_points(n, pts.iter().map(|p| e(p))).unwrap()
    }

    fn unit_square() -> LatticePolytope {
        poly(2, &[&[0, 0], &[1, 0]])
            .minkowski(&poly(2, &[&[0, 0], &[0, 1]]))
            .unwrap()
    }

    #[test]
    fn join_examples() {
        let a = poly(2, &[&[0, 0]]).join(&poly(2, &[&[2, 2]])).unwrap();
        assert_eq!(a, poly(2, &[&[0, 0], &[2, 2]]));
        let seg = poly(1, &[&[0], &[2]]);
        assert_eq!(seg.join(&poly(1, &[&[1]])).unwrap(), seg);
        assert_eq!(seg.join(&seg).unwrap(), seg);
        assert!(seg.join(&a).is_err());
    }

    #[test]
    fn minkowski_examples() {
        let a = poly(2, &[&[0, 0], &[3, 1], &[1, 2]]);
        assert_eq!(a.minkowski(&LatticePolytope::unit(2)).unwrap(), a);
        let got = poly(1, &[&[0], &[1]]).minkowski(&poly(1, &[&[0], &[2]])).unwrap();
        assert_eq!(got, poly(1, &[&[0], &[3]]));
        assert_eq!(got.vertices().len(), 2);
        let sq = unit_square();
        assert_eq!(sq.vertices().len(), 4);
        assert!(a.minkowski(&LatticePolytope::empty(2)).unwrap().is_empty());
    }

    #[test]
    fn newton_examples() {
        assert!(newton_polytope(&TropPoly::zero(2)).is_empty());
        let f = TropPoly::from_terms(
            2,
            [
                (e(&[0, 0]), TropScalar::one()),
                (e(&[2, 0]), TropScalar::Finite(int(-1))),
                (e(&[1, 1]), TropScalar::Finite(int(3))),
            ],
        )
        .unwrap();
        assert_eq!(newton_polytope(&f), poly(2, &[&[0, 0], &[2, 0], &[1, 1]]));
        let e2 = TropPoly::boolean(3, [e(&[1, 1, 0]), e(&[1, 0, 1]), e(&[0, 1, 1])]).unwrap();
        assert_eq!(newton_polytope(&e2).vertices().len(), 3);
    }

    #[test]
    fn equality_and_membership() {
        let seg = poly(1, &[&[0], &[2]]);
        assert!(seg.equals(&poly(1, &[&[0], &[1], &[2]])).unwrap());
        let orbit = poly(3, &[&[2, 1, 0], &[2, 0, 1], &[1, 2, 0], &[1, 0, 2], &[0, 2, 1], &[0, 1, 2]]);
        assert!(orbit.contains(&e(&[1, 1, 1])).unwrap());
        let diag = poly(2, &[&[0, 0], &[2, 2]]);
        assert!(!diag.contains(&e(&[2, 0])).unwrap());
        assert!(diag.contains(&e(&[1, 1])).unwrap());
        assert!(!LatticePolytope::empty(2).contains(&e(&[0, 0])).unwrap());
        assert!(diag.contains(&e(&[1])).is_err());
    }

    #[test]
    fn edge_examples() {
        assert_eq!(poly(2, &[&[0, 0], &[2, 2]]).edges().unwrap().len(), 1);
        let sq = unit_square();
        let edges = sq.edges().unwrap();
        assert_eq!(edges.len(), 4);
        assert!(!edges.contains(&(e(&[0, 0]), e(&[1, 1]))));
        assert!(is_connected(sq.vertices(), &edges));
        let tri = poly(3, &[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]]);
        assert_eq!(tri.edges().unwrap().len(), 3);
        assert!(LatticePolytope::unit(2).edges().unwrap().is_empty());
        assert!(LatticePolytope::empty(2).edges().is_err());
    }

    #[test]
    fn permutohedron_edges() {
        // Hexagon: orbit of (2,1,0) under S₃ has 6 edges, none of them
        // joining antipodal vertices.
        let g = PermGroup::symmetric(3).unwrap();
        let hex = LatticePolytope::point(e(&[2, 1, 0])).transfer(&g).unwrap();
        assert_eq!(hex.vertices().len(), 6);
        let edges = hex.edges().unwrap();
        assert_eq!(edges.len(), 6);
        for (u, v) in &edges {
            let diff: Vec<i64> = u.as_slice().iter().zip(v.as_slice()).map(|(&a, &b)| a as i64 - b as i64).collect();
            assert_eq!(diff.iter().filter(|&&d| d != 0).count(), 2);
        }
    }
}
