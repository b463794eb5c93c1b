use std::collections::BTreeSet;

use super::multi_cluster_word;
use crate::coxeter::{CoxeterSystem, Word};
use crate::error::Result;
use crate::subword::{PositionSet, SubwordComplex};

/// Θ on the 0-based positions of `cᵏw₀(c)`: each letter moves to the next
/// occurrence of the same generator, the last occurrence of `s` wraps to
/// the first occurrence of `ψ(s)`.
pub fn theta_permutation(sys: &CoxeterSystem, c: &Word, k: usize) -> Result<Vec<usize>> {
    let q = multi_cluster_word(sys, c, k)?;
    Ok(theta_on_word(sys, &q))
}

pub(crate) fn theta_on_word(sys: &CoxeterSystem, q: &Word) -> Vec<usize> {
    (0..q.len())
        .map(|i| {
            let s = q[i];
            match (i + 1..q.len()).find(|&j| q[j] == s) {
                Some(j) => j,
                None => {
                    let t = sys.psi(s);
                    q.iter().position(|&x| x == t).expect("every generator occurs in a multi-cluster word")
                }
            }
        })
        .collect()
}

/// Cycles of a permutation, each starting at its least element.
pub fn permutation_cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        out.push(cycle);
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn permutation_order(perm: &[usize]) -> usize {
    permutation_cycles(perm).iter().fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
}

/// `k + h/2` when `w₀ = −1`, otherwise `2k + h`.
pub fn expected_theta_order(sys: &CoxeterSystem, k: usize) -> usize {
    let h = sys.coxeter_number();
    if sys.w0_is_central() {
        k + h / 2
    } else {
        2 * k + h
    }
}

pub fn theta_apply(perm: &[usize], f: PositionSet) -> PositionSet {
    f.iter().map(|p| perm[p]).collect()
}

/// Θ-orbits on the facets of `Δᵏ_c(W)`. Each orbit lists facets in Θ order
/// starting from its least facet; orbits are sorted by that facet.
pub fn theta_orbits_on_facets(
    sys: &CoxeterSystem,
    complex: &SubwordComplex,
) -> Vec<Vec<PositionSet>> {
    let perm = theta_on_word(sys, complex.word());
    let mut remaining: BTreeSet<PositionSet> = complex.facets().iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let mut orbit = Vec::new();
        let mut f = start;
        while remaining.remove(&f) {
            orbit.push(f);
            f = theta_apply(&perm, f);
        }
        out.push(orbit);
    }
    out
}
