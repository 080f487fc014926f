//! Finite permutation groups `G ⊆ Sₙ`, fully enumerated.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Exponent, TropPoly};

/// Largest group order [`PermGroup::generate`] will enumerate.
pub const DEFAULT_MAX_ORDER: usize = 40_320;

/// Largest degree `n` for which all of `Sₙ` is enumerated (cosets).
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// Bijection of `{0, …, n−1}`; `images[i] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Schema(format!("not a permutation of 0..{n}: {images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    /// One-line image notation with 1-based entries, e.g. `[2, 3, 1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Schema(format!("1-based permutation contains 0: {images:?}")));
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"` or `"(1,2)"` on
    /// `{1, …, n}`. The empty string and `"()"` give the identity.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Schema(format!("bad cycle notation {text:?}: {msg}"));
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(inner) = rest.strip_prefix('(') else {
                return Err(bad("expected '('"));
            };
            let Some(close) = inner.find(')') else {
                return Err(bad("missing ')'"));
            };
            let cycle = inner[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad("non-numeric entry")))
                .collect::<Result<Vec<_>>>()?;
            for &p in &cycle {
                if p == 0 || p > n {
                    return Err(bad("point out of range"));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(bad("point repeated"));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            rest = inner[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The 2-cycle swapping `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// The cycle `0 → 1 → … → n−1 → 0`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.images[i] != i).collect()
    }

    /// The swapped pair when `self` is a 2-cycle.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        match self.moved_points()[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    /// `σ·v` with `(σ·v)_{σ(i)} = v_i`, so that `(σ·v)_i = v_{σ⁻¹(i)}`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
        out
    }

    pub fn act_exponent(&self, alpha: &Exponent) -> Result<Exponent> {
        Error::check_dim(self.n(), alpha.len())?;
        Ok(Exponent::new(self.act(alpha.as_slice())))
    }

    /// `σ·f`, substituting `x^α ↦ x^{σ(α)}`.
    pub fn act_poly(&self, f: &TropPoly) -> Result<TropPoly> {
        Error::check_dim(self.n(), f.n())?;
        let mut g = f.map_exponents(|e| Exponent::new(self.act(e.as_slice())));
        if f.is_canonical() {
            // Relabelling variables preserves canonical forms.
            g = g.canonicalize();
        }
        Ok(g)
    }

    /// All of `Sₙ` in lexicographic order of image arrays.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((0..n).collect::<Vec<usize>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            next = next_lexicographic(&current);
            Some(Permutation { images: current })
        })
    }
}

fn next_lexicographic(p: &[usize]) -> Option<Vec<usize>> {
    let mut v = p.to_vec();
    let i = (1..v.len()).rev().find(|&i| v[i - 1] < v[i])?;
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1])?;
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.n()];
        let mut any = false;
        for start in 0..self.n() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Enumerated permutation group. Elements are listed in breadth-first
/// order from the identity, which is always first.
#[derive(Debug, Clone)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.elements.len() == other.elements.len()
            && self.elements.iter().all(|g| other.contains(g))
    }
}

impl Eq for PermGroup {}

/// Connected components of the 2-cycle graph of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionBlocks {
    /// 0-based blocks, each sorted, ordered by smallest element.
    pub blocks: Vec<Vec<usize>>,
    /// Order of the subgroup generated by the 2-cycles in the group.
    pub transposition_subgroup_order: usize,
    pub is_transposition_generated: bool,
}

impl PermGroup {
    pub fn generate(n: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_limit(n, generators, DEFAULT_MAX_ORDER)
    }

    pub fn generate_with_limit(
        n: usize,
        generators: Vec<Permutation>,
        max_order: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::Schema(format!(
                    "generator {g} acts on {} points, expected {n}",
                    g.n()
                )));
            }
        }
        let id = Permutation::identity(n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id.clone(), 0)]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() >= max_order {
                    return Err(Error::Resource(format!(
                        "group order exceeds the cap of {max_order}"
                    )));
                }
                index.insert(y.clone(), elements.len());
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
        Ok(PermGroup {
            n,
            generators,
            elements,
            index,
        })
    }

    pub fn trivial(n: usize) -> Self {
        Self::generate(n, vec![]).expect("trivial group")
    }

    /// `Sₙ`, generated by `(1 2)` and `(1 2 … n)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Ok(Self::trivial(n));
        }
        Self::generate(
            n,
            vec![Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)],
        )
    }

    /// `⟨(1 2 … n)⟩`.
    pub fn cyclic(n: usize) -> Self {
        Self::generate(n, vec![Permutation::long_cycle(n)]).expect("order n")
    }

    /// `Sym(A₁) × ⋯ × Sym(A_ℓ)` for disjoint 0-based blocks.
    pub fn block_symmetric(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut gens = Vec::new();
        for b in blocks {
            for w in b.windows(2) {
                gens.push(Permutation::transposition(n, w[0], w[1]));
            }
        }
        Self::generate(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Distinct exponents `σ(α)`, `σ ∈ G`.
    pub fn orbit(&self, alpha: &Exponent) -> Result<BTreeSet<Exponent>> {
        self.elements.iter().map(|g| g.act_exponent(alpha)).collect()
    }

    /// `Tr_G(f) = ⊕_{σ∈G} σ·f`, canonical.
    pub fn transfer(&self, f: &TropPoly) -> Result<TropPoly> {
        Error::check_dim(self.n, f.n())?;
        let terms = self.elements.iter().flat_map(|g| {
            f.terms()
                .map(move |(e, c)| (Exponent::new(g.act(e.as_slice())), c.clone().into()))
        });
        Ok(TropPoly::from_terms(self.n, terms)?.canonicalize())
    }

    /// `Tr_G(x^α)`.
    pub fn transfer_monomial(&self, alpha: &Exponent) -> Result<TropPoly> {
        self.transfer(&TropPoly::monic(alpha.clone()))
    }

    /// True when `σ·f = f` as functions for every generator.
    pub fn is_invariant(&self, f: &TropPoly) -> Result<bool> {
        let base = f.canonicalize();
        for g in &self.generators {
            if !g.act_poly(&base)?.equals(&base)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Blocks of the 2-cycle graph, and whether those 2-cycles generate
    /// the whole group.
    pub fn transposition_blocks(&self) -> TranspositionBlocks {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while parent[r] != r {
                r = parent[r];
            }
            let mut i = i;
            while parent[i] != r {
                i = std::mem::replace(&mut parent[i], r);
            }
            r
        }
        let transpositions: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|g| g.as_transposition().is_some())
            .cloned()
            .collect();
        for t in &transpositions {
            let (a, b) = t.as_transposition().expect("filtered");
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..self.n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort();
        let sub = PermGroup::generate(self.n, transpositions)
            .expect("subgroup is no larger than the group");
        TranspositionBlocks {
            blocks,
            transposition_subgroup_order: sub.order(),
            is_transposition_generated: sub.order() == self.order(),
        }
    }

    /// One representative per right coset `Gσ` of `Sₙ`.
    pub fn coset_representatives(&self) -> Result<Vec<Permutation>> {
        self.coset_representatives_with_limit(DEFAULT_MAX_DEGREE)
    }

    pub fn coset_representatives_with_limit(&self, max_degree: usize) -> Result<Vec<Permutation>> {
        if self.n > max_degree {
            return Err(Error::Resource(format!(
                "coset enumeration needs n <= {max_degree}, got {}",
                self.n
            )));
        }
        let mut covered: HashSet<Permutation> = HashSet::new();
        let mut reps = Vec::new();
        for sigma in Permutation::all(self.n) {
            if covered.contains(&sigma) {
                continue;
            }
            for tau in &self.elements {
                covered.insert(tau.compose(&sigma));
            }
            reps.push(sigma);
        }
        Ok(reps)
    }
}
