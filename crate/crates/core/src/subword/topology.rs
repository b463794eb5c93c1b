use std::collections::HashSet;

use serde::Serialize;

use super::{complement_word, is_face, PositionSet, SubwordComplex};
use crate::coxeter::{CoxeterSystem, Element, Word};
use crate::error::{Error, Result};

/// Largest facet size for which all faces are listed explicitly.
const MAX_FACET_SIZE_FOR_FACES: usize = 24;

/// Face counts `f₋₁, f₀, …, f_{d−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `Σ (−1)^i f_i` starting at `i = −1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &f)| if j % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }

    /// Dimension `d − 1` of the facets.
    pub fn dimension(&self) -> i64 {
        self.0.len() as i64 - 2
    }
}

pub fn f_vector(complex: &SubwordComplex) -> Result<FVector> {
    let d = complex.facet_size();
    if d > MAX_FACET_SIZE_FOR_FACES {
        return Err(Error::ResourceLimit { what: "facet size for face listing".into(), limit: MAX_FACET_SIZE_FOR_FACES });
    }
    let mut faces: HashSet<u128> = HashSet::new();
    for f in complex.facets() {
        let bits = f.bits();
        // all submasks of the facet
        let mut sub = bits;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & bits;
        }
    }
    let mut counts = vec![0usize; d + 1];
    if complex.facets().is_empty() {
        return Ok(FVector(Vec::new()));
    }
    for face in faces {
        counts[face.count_ones() as usize] += 1;
    }
    Ok(FVector(counts))
}

pub fn reduced_euler_characteristic(complex: &SubwordComplex) -> Result<i64> {
    Ok(f_vector(complex)?.reduced_euler_characteristic())
}

fn combinations(items: &[usize], size: usize, start: usize, current: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if current.len() == size {
        visit(current);
        return;
    }
    for i in start..items.len() {
        if items.len() - i < size - current.len() {
            break;
        }
        current.push(items[i]);
        combinations(items, size, i + 1, current, visit);
        current.pop();
    }
}

/// Inclusion-minimal non-faces on the vertex set with at most `max_size`
/// elements, sorted.
pub fn minimal_nonfaces(complex: &SubwordComplex, max_size: usize) -> Vec<PositionSet> {
    let vertices = complex.vertices().to_vec();
    let mut out = Vec::new();
    for size in 2..=max_size.min(vertices.len()) {
        combinations(&vertices, size, 0, &mut Vec::new(), &mut |combo| {
            let set = PositionSet::from_positions(combo.iter().copied());
            if !complex.contains_face(set) && set.iter().all(|p| complex.contains_face(set.without(p))) {
                out.push(set);
            }
        });
    }
    out.sort();
    out
}

/// The link of a face: the subword complex on `Q` with the face's
/// positions deleted, together with the map back to original positions.
#[derive(Clone, Debug)]
pub struct Link {
    pub complex: SubwordComplex,
    /// `original[i]` is the position in the original word of letter `i`.
    pub original: Vec<usize>,
}

impl Link {
    pub fn to_original(&self, f: PositionSet) -> PositionSet {
        f.iter().map(|p| self.original[p]).collect()
    }
}

pub fn link(sys: &CoxeterSystem, complex: &SubwordComplex, face: PositionSet) -> Result<Link> {
    link_in_word(sys, complex.word(), complex.pi(), face)
}

/// [`link`] without first enumerating the facets of `Δ(Q, π)`.
pub fn link_in_word(sys: &CoxeterSystem, q: &Word, pi: &Element, face: PositionSet) -> Result<Link> {
    if face.max().is_some_and(|m| m >= q.len()) || !is_face(sys, q, pi, face) {
        return Err(Error::NotAFace);
    }
    let original: Vec<usize> = (0..q.len()).filter(|&p| !face.contains(p)).collect();
    let complex = SubwordComplex::new(sys, complement_word(q, face), pi.clone())?;
    Ok(Link { complex, original })
}

/// `Q` followed by a reduced word of `π⁻¹w₀`; requires `π = δ(Q)`.
pub fn reduce_to_w0(sys: &CoxeterSystem, q: &Word, pi: &Element) -> Result<Word> {
    if sys.demazure_product(q) != *pi {
        return Err(Error::NotSpherical);
    }
    let rest = pi.inverse().compose(sys.longest_element());
    Ok(q.concat(&sys.reduced_word(&rest)))
}
