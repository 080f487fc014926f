//! Vertex extraction for the upper envelope of lifted lattice points.
//!
//! A lifted point `(p_i, h_i)` is kept when no convex combination of the
//! other points reaches height `>= h_i` above `p_i`. Both tropical
//! canonical forms (heights = coefficients) and vertex-minimal polytopes
//! (all heights equal) reduce to this.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lp::upper_envelope_height;
use crate::rational::Rational;

const DIRECTION_SEED: u64 = 0x7472_6f70_6963_616c;

/// True when `(points[idx], heights[idx])` lies on or below the upper
/// envelope of the remaining lifted points.
pub(crate) fn is_redundant(points: &[&[u32]], heights: &[&Rational], idx: usize) -> bool {
    let (pts, hs): (Vec<&[u32]>, Vec<&Rational>) = points
        .iter()
        .zip(heights)
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, (p, h))| (*p, *h))
        .unzip();
    dominated(&pts, &hs, points[idx], heights[idx])
}

fn dominated(points: &[&[u32]], heights: &[&Rational], query: &[u32], height: &Rational) -> bool {
    matches!(upper_envelope_height(points, heights, query), Some(top) if top >= *height)
}

/// Indices (ascending) of the lifted points that are vertices of the
/// upper envelope. Exponent vectors must be pairwise distinct.
pub(crate) fn upper_vertices(points: &[&[u32]], heights: &[&Rational]) -> Vec<usize> {
    let k = points.len();
    if k <= 1 {
        return (0..k).collect();
    }
    let mut confirmed = vec![false; k];
    for i in probe_vertices(points, heights) {
        confirmed[i] = true;
    }

    let index: HashMap<&[u32], usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut alive = vec![true; k];
    for i in 0..k {
        if confirmed[i] {
            continue;
        }
        if midpoint_dominated(points, heights, &index, i) {
            alive[i] = false;
            continue;
        }
        let known: Vec<usize> = (0..k).filter(|&j| confirmed[j]).collect();
        if !known.is_empty() {
            let pts: Vec<&[u32]> = known.iter().map(|&j| points[j]).collect();
            let hs: Vec<&Rational> = known.iter().map(|&j| heights[j]).collect();
            if dominated(&pts, &hs, points[i], heights[i]) {
                alive[i] = false;
                continue;
            }
        }
        let others: Vec<usize> = (0..k).filter(|&j| j != i && alive[j]).collect();
        let pts: Vec<&[u32]> = others.iter().map(|&j| points[j]).collect();
        let hs: Vec<&Rational> = others.iter().map(|&j| heights[j]).collect();
        if dominated(&pts, &hs, points[i], heights[i]) {
            alive[i] = false;
        } else {
            confirmed[i] = true;
        }
    }
    (0..k).filter(|&i| alive[i]).collect()
}

/// Cheap sufficient test: `p_i` is the midpoint of two other points whose
/// average height reaches `h_i`. Any point of the input may serve, removed
/// or not, since removal never lowers the envelope.
fn midpoint_dominated(
    points: &[&[u32]],
    heights: &[&Rational],
    index: &HashMap<&[u32], usize>,
    i: usize,
) -> bool {
    let q = points[i];
    let twice = heights[i] * Rational::from_integer(2.into());
    let mut other = vec![0u32; q.len()];
    'outer: for (a, p) in points.iter().enumerate() {
        if a == i {
            continue;
        }
        for ((o, &x), &y) in other.iter_mut().zip(q).zip(p.iter()) {
            match (2 * x).checked_sub(y) {
                Some(v) => *o = v,
                None => continue 'outer,
            }
        }
        if let Some(&b) = index.get(other.as_slice()) {
            if heights[a] + heights[b] >= twice {
                return true;
            }
        }
    }
    false
}

/// Points that are the unique maximizer of `h + w·p` for some sampled
/// integer direction `w`. Every such point is an envelope vertex; the
/// probe may miss some vertices, never report a non-vertex.
fn probe_vertices(points: &[&[u32]], heights: &[&Rational]) -> Vec<usize> {
    let Some(scaled) = integer_heights(heights) else {
        return Vec::new();
    };
    let (scale, hs) = scaled;
    let dim = points[0].len();
    let mut rng = ChaCha8Rng::seed_from_u64(DIRECTION_SEED);
    let rounds = 16 + 4 * dim + points.len() / 2;
    let mut found = vec![false; points.len()];
    for _ in 0..rounds {
        let w: Vec<i128> = (0..dim).map(|_| rng.gen_range(-(1 << 20)..=(1 << 20))).collect();
        let mut best: Option<(i128, usize)> = None;
        let mut tie = false;
        for (i, p) in points.iter().enumerate() {
            let lin: i128 = p.iter().zip(&w).map(|(&a, &b)| a as i128 * b).sum();
            let s = hs[i] + scale * lin;
            match best {
                Some((b, _)) if s < b => {}
                Some((b, _)) if s == b => tie = true,
                _ => {
                    best = Some((s, i));
                    tie = false;
                }
            }
        }
        if let (Some((_, i)), false) = (best, tie) {
            found[i] = true;
        }
    }
    (0..points.len()).filter(|&i| found[i]).collect()
}

/// Heights multiplied by the lcm of their denominators, when everything
/// stays comfortably inside `i128`.
fn integer_heights(heights: &[&Rational]) -> Option<(i128, Vec<i128>)> {
    const LIMIT: i128 = 1 << 60;
    let mut lcm = BigInt::one();
    for h in heights {
        lcm = lcm.lcm(h.denom());
    }
    let scale = lcm.to_i128().filter(|s| *s < LIMIT)?;
    let hs = heights
        .iter()
        .map(|h| (h.numer() * (&lcm / h.denom())).to_i128().filter(|v| v.abs() < LIMIT))
        .collect::<Option<Vec<_>>>()?;
    Some((scale, hs))
}
