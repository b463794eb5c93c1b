use std::fmt;

use serde::Serialize;

use super::multi_cluster_word;
use crate::coxeter::{CoxeterSystem, Family, GroupDescriptor, Word};
use crate::error::{Error, Result};

/// A diagonal `[a, b]` of a convex polygon with vertices labelled
/// clockwise `0..size`, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagonal {
    pub a: usize,
    pub b: usize,
}

impl Diagonal {
    pub fn new(x: i64, y: i64, size: usize) -> Diagonal {
        let x = x.rem_euclid(size as i64) as usize;
        let y = y.rem_euclid(size as i64) as usize;
        Diagonal { a: x.min(y), b: x.max(y) }
    }

    /// Clockwise rotation by `steps` vertices.
    pub fn rotate(self, steps: usize, size: usize) -> Diagonal {
        Diagonal::new((self.a + steps) as i64, (self.b + steps) as i64, size)
    }

    /// At least `k` polygon vertices strictly on each side.
    pub fn is_k_relevant(self, k: usize, size: usize) -> bool {
        let inside = self.b - self.a - 1;
        let outside = size - (self.b - self.a) - 1;
        inside >= k && outside >= k
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// Strict interleaving of endpoints; diagonals sharing an endpoint do not cross.
pub fn diagonals_cross(d1: Diagonal, d2: Diagonal) -> bool {
    (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) || (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b)
}

/// Whether `set` contains `k + 1` pairwise crossing diagonals.
pub fn contains_k1_crossing(k: usize, set: &[Diagonal]) -> bool {
    fn extend(set: &[Diagonal], chosen: &mut Vec<Diagonal>, start: usize, need: usize) -> bool {
        if chosen.len() == need {
            return true;
        }
        for i in start..set.len() {
            if chosen.iter().all(|&d| diagonals_cross(d, set[i])) {
                chosen.push(set[i]);
                if extend(set, chosen, i + 1, need) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(set, &mut Vec::new(), 0, k + 1)
}

/// `p[g]` = position of generator `g` in `c`.
fn positions_in(c: &Word) -> Vec<usize> {
    let mut p = vec![0; c.len()];
    for (i, &s) in c.iter().enumerate() {
        p[s] = i;
    }
    p
}

/// `(#{j<g : p_j<p_{j+1}}, #{j<g : p_j>p_{j+1}})` for each generator `g`.
fn ascent_descent_counts(c: &Word) -> Vec<(i64, i64)> {
    let p = positions_in(c);
    (0..c.len())
        .map(|g| {
            let asc = (0..g).filter(|&j| p[j] < p[j + 1]).count() as i64;
            (asc, g as i64 - asc)
        })
        .collect()
}

fn occurrence_indices(q: &Word, n: usize) -> Vec<usize> {
    let mut seen = vec![0; n];
    q.iter()
        .map(|&s| {
            seen[s] += 1;
            seen[s] - 1
        })
        .collect()
}

/// Type `A_{m−2k−1}` dictionary: the letters of `cᵏw₀(c)` to the
/// `k`-relevant diagonals of the `m`-gon.
pub fn type_a_bijection(m: usize, k: usize, c: &Word) -> Result<Vec<Diagonal>> {
    let n = m
        .checked_sub(2 * k + 1)
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidDescriptor(format!("no type A group for m = {m}, k = {k}")))?;
    let sys = CoxeterSystem::new(GroupDescriptor::new(Family::A, n)?)?;
    sys.check_coxeter_word(c)?;
    let q = multi_cluster_word(&sys, c, k)?;
    let ab: Vec<Diagonal> = ascent_descent_counts(c)
        .into_iter()
        .map(|(asc, desc)| Diagonal::new(asc, -(k as i64) - 1 - desc, m))
        .collect();
    let occ = occurrence_indices(&q, n);
    Ok(q.iter().zip(occ).map(|(&s, l)| ab[s].rotate(l, m)).collect())
}

/// A centrally symmetric pair of diagonals of the `2m`-gon; a diameter is
/// stored once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SymmetricPair(pub Vec<Diagonal>);

impl SymmetricPair {
    pub fn new(d: Diagonal, m: usize) -> SymmetricPair {
        let mut v = vec![d, d.rotate(m, 2 * m)];
        v.sort();
        v.dedup();
        SymmetricPair(v)
    }

    pub fn rotate(&self, steps: usize, m: usize) -> SymmetricPair {
        SymmetricPair::new(self.0[0].rotate(steps, 2 * m), m)
    }

    pub fn is_diameter(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for SymmetricPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Type `B_{m−k}` dictionary: letters of `cᵏw₀(c) = cᵐ` to the `k`-relevant
/// symmetric pairs of the `2m`-gon.
pub fn type_b_bijection(m: usize, k: usize, c: &Word) -> Result<Vec<SymmetricPair>> {
    let n = m
        .checked_sub(k)
        .filter(|&n| n >= 2)
        .ok_or_else(|| Error::InvalidDescriptor(format!("no type B group for m = {m}, k = {k}")))?;
    let sys = CoxeterSystem::new(GroupDescriptor::new(Family::B, n)?)?;
    sys.check_coxeter_word(c)?;
    let q = multi_cluster_word(&sys, c, k)?;
    let base: Vec<SymmetricPair> = ascent_descent_counts(c)
        .into_iter()
        .map(|(asc, desc)| SymmetricPair::new(Diagonal::new(asc, m as i64 - desc, 2 * m), m))
        .collect();
    let occ = occurrence_indices(&q, n);
    Ok(q.iter().zip(occ).map(|(&s, l)| base[s].rotate(l, m)).collect())
}
