//! Subword complexes `Δ(Q, π)`.

mod flip;
mod positions;
mod topology;

use std::collections::HashSet;

use serde::Serialize;

pub use flip::{enumerate_facets_bfs, flip, root_function, root_functions, FlipGraph};
pub use positions::{PositionSet, MAX_WORD_LEN};
pub use topology::{
    f_vector, link, link_in_word, minimal_nonfaces, reduce_to_w0, reduced_euler_characteristic, FVector, Link,
};

use crate::coxeter::{CoxeterSystem, Element, Word};
use crate::error::Result;

/// The subword complex of `word` with target `pi`, with its facets
/// enumerated. Facets are sorted lexicographically.
#[derive(Clone, Debug, Serialize)]
pub struct SubwordComplex {
    word: Word,
    #[serde(skip)]
    pi: Element,
    facets: Vec<PositionSet>,
    vertices: PositionSet,
}

impl SubwordComplex {
    pub fn new(sys: &CoxeterSystem, word: Word, pi: Element) -> Result<SubwordComplex> {
        sys.check_word(&word)?;
        let facets = enumerate_facets_dfs(sys, &word, &pi)?;
        let vertices = facets.iter().fold(PositionSet::EMPTY, |acc, f| acc.union(*f));
        Ok(SubwordComplex { word, pi, facets, vertices })
    }

    /// `Δ(Q, w₀)`.
    pub fn with_w0(sys: &CoxeterSystem, word: Word) -> Result<SubwordComplex> {
        SubwordComplex::new(sys, word, sys.longest_element().clone())
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn pi(&self) -> &Element {
        &self.pi
    }

    pub fn facets(&self) -> &[PositionSet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Positions lying in at least one facet.
    pub fn vertices(&self) -> PositionSet {
        self.vertices
    }

    /// `|Q| − ℓ(π)`; the size of every facet.
    pub fn facet_size(&self) -> usize {
        self.word.len() - self.pi.length()
    }

    /// Face test against the facet list.
    pub fn contains_face(&self, p: PositionSet) -> bool {
        self.facets.iter().any(|f| p.is_subset(*f))
    }

    pub fn is_facet(&self, p: PositionSet) -> bool {
        self.facets.binary_search(&p).is_ok()
    }

    pub fn is_sphere(&self, sys: &CoxeterSystem) -> bool {
        is_sphere(sys, &self.word, &self.pi)
    }
}

/// The letters of `q` outside `p`.
pub fn complement_word(q: &Word, p: PositionSet) -> Word {
    q.iter().enumerate().filter(|(i, _)| !p.contains(*i)).map(|(_, &s)| s).collect()
}

/// Whether `u` is a prefix of `pi` in right weak order.
fn is_prefix(u: &Element, pi: &Element) -> bool {
    u.inverse().compose(pi).length() + u.length() == pi.length()
}

/// Whether the word `r` contains a reduced word for `pi` as a subword.
pub fn contains_reduced_word(sys: &CoxeterSystem, r: &Word, pi: &Element) -> bool {
    if pi == sys.longest_element() {
        return sys.demazure_product(r) == *pi;
    }
    fn go(
        sys: &CoxeterSystem,
        r: &Word,
        pi: &Element,
        i: usize,
        u: Element,
        failed: &mut HashSet<(usize, Element)>,
    ) -> bool {
        let missing = pi.length() - u.length();
        if missing == 0 {
            return true;
        }
        if r.len() - i < missing || failed.contains(&(i, u.clone())) {
            return false;
        }
        let s = r[i];
        if !u.is_right_descent(s) {
            let us = sys.mul_gen(&u, s);
            if is_prefix(&us, pi) && go(sys, r, pi, i + 1, us, failed) {
                return true;
            }
        }
        if go(sys, r, pi, i + 1, u.clone(), failed) {
            return true;
        }
        failed.insert((i, u));
        false
    }
    go(sys, r, pi, 0, sys.identity(), &mut HashSet::new())
}

/// `P` is a face iff `Q ∖ P` contains a reduced word for `π`.
pub fn is_face(sys: &CoxeterSystem, q: &Word, pi: &Element, p: PositionSet) -> bool {
    contains_reduced_word(sys, &complement_word(q, p), pi)
}

/// `Δ(Q, π)` is a sphere iff `δ(Q) = π`.
pub fn is_sphere(sys: &CoxeterSystem, q: &Word, pi: &Element) -> bool {
    sys.demazure_product(q) == *pi
}

/// All facets by depth-first search over the complement: each letter is
/// either skipped (joins the facet) or taken as an ascent that keeps the
/// running product a prefix of `π`.
pub fn enumerate_facets_dfs(sys: &CoxeterSystem, q: &Word, pi: &Element) -> Result<Vec<PositionSet>> {
    positions::check_len(q.len())?;
    sys.check_word(q)?;
    if pi.length() > q.len() {
        return Ok(Vec::new());
    }
    let is_w0 = pi == sys.longest_element();
    let facet_size = q.len() - pi.length();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Element, PositionSet)> = vec![(0, sys.identity(), PositionSet::EMPTY)];
    while let Some((i, u, facet)) = stack.pop() {
        if i == q.len() {
            if u == *pi {
                out.push(facet);
            }
            continue;
        }
        let remaining = q.len() - i;
        if pi.length() - u.length() > remaining {
            continue;
        }
        // for w₀ every prefix extends iff the suffix's Demazure closure reaches w₀
        if is_w0 && sys.demazure_product_from(&u, &q[i..]) != *pi {
            continue;
        }
        let s = q[i];
        if facet.len() < facet_size {
            stack.push((i + 1, u.clone(), facet.with(i)));
        }
        if !u.is_right_descent(s) {
            let us = sys.mul_gen(&u, s);
            if is_w0 || is_prefix(&us, pi) {
                stack.push((i + 1, us, facet));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Facets (as complements) of size `|Q| − ℓ(π)` whose complement multiplies to `π`.
pub fn is_facet(sys: &CoxeterSystem, q: &Word, pi: &Element, f: PositionSet) -> bool {
    if f.max().is_some_and(|m| m >= q.len()) || f.len() + pi.length() != q.len() {
        return false;
    }
    let r = complement_word(q, f);
    sys.is_reduced(&r) && sys.element_from_word(&r) == *pi
}
