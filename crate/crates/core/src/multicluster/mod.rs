//! Multi-cluster complexes `Δᵏ_c(W) = Δ(cᵏw₀(c), w₀)`.

mod csp;
mod gale;
mod polygon;
mod theta;

use std::fmt;

use serde::Serialize;

pub use csp::{csp_polynomial, fixed_point_table, CspPolynomial, SievingRow};
pub use gale::gale_facets_rank2;
pub use polygon::{
    contains_k1_crossing, diagonals_cross, type_a_bijection, type_b_bijection, Diagonal, SymmetricPair,
};
pub use theta::{
    expected_theta_order, permutation_cycles, permutation_order, theta_apply, theta_orbits_on_facets,
    theta_permutation,
};

use crate::coxeter::{CoxeterSystem, Element, Root, SignedRoot, Word};
use crate::error::{Error, Result};
use crate::sorting::w0_word;
use crate::subword::{is_face, PositionSet, SubwordComplex};

/// `cᵏ w₀(c)`.
pub fn multi_cluster_word(sys: &CoxeterSystem, c: &Word, k: usize) -> Result<Word> {
    Ok(c.repeat(k).concat(&w0_word(sys, c)?))
}

/// `Δᵏ_c(W)` with facets enumerated.
pub fn multi_cluster_complex(sys: &CoxeterSystem, c: &Word, k: usize) -> Result<SubwordComplex> {
    SubwordComplex::with_w0(sys, multi_cluster_word(sys, c, k)?)
}

/// An element of `Φ≥−1 = Φ⁺ ∪ −Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AlmostPositiveRoot {
    /// `−α_s`
    NegativeSimple(usize),
    /// index into the positive roots
    Positive(usize),
}

impl AlmostPositiveRoot {
    pub fn vector(self, sys: &CoxeterSystem) -> Root {
        match self {
            AlmostPositiveRoot::NegativeSimple(s) => -&Root::simple(sys.rank(), s),
            AlmostPositiveRoot::Positive(i) => sys.roots().root(i).clone(),
        }
    }

    pub fn display(self, sys: &CoxeterSystem) -> impl fmt::Display {
        self.vector(sys)
    }

    /// All `N + n` almost positive roots, negative simple roots first.
    pub fn all(sys: &CoxeterSystem) -> Vec<AlmostPositiveRoot> {
        (0..sys.rank())
            .map(AlmostPositiveRoot::NegativeSimple)
            .chain((0..sys.num_positive_roots()).map(AlmostPositiveRoot::Positive))
            .collect()
    }
}

/// Labels the letters of `c·w₀(c)`: the prefix letter `c_i` gets
/// `−α_{c_i}`, the `i`-th letter of `w₀(c)` gets `w₁⋯w_{i−1}(α_{w_i})`.
pub fn lr_labels(sys: &CoxeterSystem, c: &Word) -> Result<Vec<AlmostPositiveRoot>> {
    let w0c = w0_word(sys, c)?;
    let mut out: Vec<AlmostPositiveRoot> = c.iter().map(|&s| AlmostPositiveRoot::NegativeSimple(s)).collect();
    let mut u = sys.identity();
    for &s in w0c.iter() {
        let r = sys.act_simple(&u, s);
        if !r.positive {
            return Err(Error::Internal("sorting word of w0 is not reduced".into()));
        }
        out.push(AlmostPositiveRoot::Positive(r.index));
        u = sys.mul_gen(&u, s);
    }
    Ok(out)
}

fn label_position(labels: &[AlmostPositiveRoot], beta: AlmostPositiveRoot) -> Result<usize> {
    labels
        .iter()
        .position(|&l| l == beta)
        .ok_or_else(|| Error::Internal(format!("{beta:?} missing from the labeling")))
}

/// c-compatibility: the two labelled positions form a face of `Δ(c·w₀(c), w₀)`.
pub fn c_compatible(
    sys: &CoxeterSystem,
    c: &Word,
    b1: AlmostPositiveRoot,
    b2: AlmostPositiveRoot,
) -> Result<bool> {
    let labels = lr_labels(sys, c)?;
    let q = multi_cluster_word(sys, c, 1)?;
    let p = PositionSet::from_positions([label_position(&labels, b1)?, label_position(&labels, b2)?]);
    Ok(is_face(sys, &q, sys.longest_element(), p))
}

/// The full compatibility relation as a matrix indexed by
/// [`AlmostPositiveRoot::all`].
pub fn compatibility_matrix(sys: &CoxeterSystem, c: &Word) -> Result<Vec<Vec<bool>>> {
    let labels = lr_labels(sys, c)?;
    let q = multi_cluster_word(sys, c, 1)?;
    let all = AlmostPositiveRoot::all(sys);
    let pos = all.iter().map(|&b| label_position(&labels, b)).collect::<Result<Vec<_>>>()?;
    Ok(pos
        .iter()
        .map(|&i| {
            pos.iter()
                .map(|&j| is_face(sys, &q, sys.longest_element(), PositionSet::from_positions([i, j])))
                .collect()
        })
        .collect())
}

/// `σ_s(β) = β` for `β ∈ −Δ ∖ {−α_s}`, `s(β)` otherwise.
pub fn sigma_involution(sys: &CoxeterSystem, s: usize, beta: AlmostPositiveRoot) -> AlmostPositiveRoot {
    match beta {
        AlmostPositiveRoot::NegativeSimple(t) if t != s => beta,
        AlmostPositiveRoot::NegativeSimple(_) => AlmostPositiveRoot::Positive(s),
        AlmostPositiveRoot::Positive(i) => {
            let r = sys.generator(s).apply(SignedRoot::pos(i));
            if r.positive {
                AlmostPositiveRoot::Positive(r.index)
            } else {
                AlmostPositiveRoot::NegativeSimple(r.index)
            }
        }
    }
}

/// `t_i = q₁⋯q_{i−1} q_i q_{i−1}⋯q₁` for every position.
pub fn reflection_sequence(sys: &CoxeterSystem, q: &Word) -> Vec<Element> {
    let mut prefix = sys.identity();
    q.iter()
        .map(|&s| {
            let t = sys.conjugate_generator(&prefix, s);
            prefix = sys.mul_gen(&prefix, s);
            t
        })
        .collect()
}

/// `t_{ℓ_kn} ⋯ t_{ℓ_1} = cᵏ` for the given positions of `cᵏw₀(c)`.
pub fn is_facet_by_reflections(sys: &CoxeterSystem, c: &Word, k: usize, positions: PositionSet) -> Result<bool> {
    let q = multi_cluster_word(sys, c, k)?;
    if positions.max().is_some_and(|m| m >= q.len()) {
        return Err(Error::PositionOutOfRange { position: positions.max().unwrap_or(0) + 1, len: q.len() });
    }
    if positions.len() != k * sys.rank() {
        return Ok(false);
    }
    let ts = reflection_sequence(sys, &q);
    let product = positions.iter().fold(sys.identity(), |acc, p| ts[p].compose(&acc));
    Ok(product == sys.element_from_word(&c.repeat(k)))
}
