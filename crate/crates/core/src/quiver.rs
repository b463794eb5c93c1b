//! Coxeter quivers, Auslander-Reiten quivers by knitting, windows of the
//! repetition quiver and the root labels of SIN words.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Root, Word};
use crate::error::{Error, Result};
use crate::sorting::{doubled_word, has_sin_property, phi_counts, w0_word};

/// A vertex `(i, s)`: the `i`-th copy of generator `s` (0-based `s`).
pub type Vertex = (i64, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertices: Vec<Vertex>,
    /// Arrows as pairs of vertex indices, sorted.
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn has_arrow(&self, from: Vertex, to: Vertex) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.arrows.binary_search(&(a, b)).is_ok(),
            _ => false,
        }
    }

    /// The full subquiver on the given vertex indices, reindexed in order.
    pub fn full_subquiver(&self, keep: &[usize]) -> Quiver {
        let new_index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .filter_map(|(a, b)| Some((*new_index.get(a)?, *new_index.get(b)?)))
            .collect();
        arrows.sort_unstable();
        Quiver { vertices: keep.iter().map(|&v| self.vertices[v]).collect(), arrows }
    }
}

pub fn vertex_name(v: Vertex) -> String {
    format!("({},s{})", v.0, v.1 + 1)
}

/// Plain DOT digraph with vertices named `"(i,s)"`.
pub fn export_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for &v in &q.vertices {
        let _ = writeln!(out, "  \"{}\";", vertex_name(v));
    }
    for &(a, b) in &q.arrows {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", vertex_name(q.vertices[a]), vertex_name(q.vertices[b]));
    }
    out.push_str("}\n");
    out
}

/// `Ω_c`: `s → t` for neighbors with `s` before `t` in `c`.
pub fn coxeter_quiver(sys: &CoxeterSystem, c: &Word) -> Result<Quiver> {
    sys.check_coxeter_word(c)?;
    let pos = |s: usize| c.iter().position(|&x| x == s).unwrap_or(0);
    let mut arrows: Vec<(usize, usize)> =
        sys.edges().into_iter().map(|(s, t)| if pos(s) < pos(t) { (s, t) } else { (t, s) }).collect();
    arrows.sort_unstable();
    Ok(Quiver { vertices: (0..sys.rank()).map(|s| (0, s)).collect(), arrows })
}

/// Knitting: one vertex per letter, labelled by per-generator occurrence
/// counters starting at `origin`; `q → q′` when the letters are neighbors
/// and `q′` directly follows `q` in the restriction of the word to them.
pub fn knit(sys: &CoxeterSystem, word: &Word, origin: i64) -> Quiver {
    let mut counter = vec![origin; sys.rank()];
    let vertices: Vec<Vertex> = word
        .iter()
        .map(|&s| {
            counter[s] += 1;
            (counter[s] - 1, s)
        })
        .collect();
    let mut arrows = Vec::new();
    for (i, &s) in word.iter().enumerate() {
        for t in sys.neighbors(s) {
            // the next letter among {s, t} after position i
            if let Some(j) = (i + 1..word.len()).find(|&j| word[j] == s || word[j] == t) {
                if word[j] == t {
                    arrows.push((i, j));
                }
            }
        }
    }
    arrows.sort_unstable();
    Quiver { vertices, arrows }
}

/// The Auslander-Reiten quiver knitted on `w₀(c)`, labels starting at 1.
pub fn ar_quiver(sys: &CoxeterSystem, c: &Word) -> Result<Quiver> {
    Ok(knit(sys, &w0_word(sys, c)?, 1))
}

/// A finite window of the repetition quiver: the word
/// `w₀(c) ψ(w₀(c)) w₀(c) …` (`copies` blocks) knitted with labels
/// starting at `origin`.
#[derive(Clone, Debug, Serialize)]
pub struct RepetitionWindow {
    pub quiver: Quiver,
    pub word: Word,
    pub block_len: usize,
    #[serde(skip)]
    phi: Vec<usize>,
    #[serde(skip)]
    psi: Vec<usize>,
}

impl RepetitionWindow {
    /// `τ(i, s) = (i − 1, s)`.
    pub fn tau(&self, v: Vertex) -> Vertex {
        (v.0 - 1, v.1)
    }

    pub fn tau_inverse(&self, v: Vertex) -> Vertex {
        (v.0 + 1, v.1)
    }

    /// `[1]`: the same position in the next block, `(i + φ(ψ(s)), ψ(s))`.
    pub fn shift(&self, v: Vertex) -> Vertex {
        let t = self.psi[v.1];
        (v.0 + self.phi[t] as i64, t)
    }

    /// Index maps on the window's vertices (`None` when the image leaves the window).
    pub fn tau_map(&self) -> Vec<Option<usize>> {
        self.quiver.vertices.iter().map(|&v| self.quiver.index_of(self.tau(v))).collect()
    }

    pub fn shift_map(&self) -> Vec<Option<usize>> {
        self.quiver.vertices.iter().map(|&v| self.quiver.index_of(self.shift(v))).collect()
    }

    /// Occurrences of `s` in `w₀(c)`.
    pub fn phi(&self) -> &[usize] {
        &self.phi
    }
}

pub fn repetition_window(sys: &CoxeterSystem, c: &Word, copies: usize, origin: i64) -> Result<RepetitionWindow> {
    if copies == 0 {
        return Err(Error::InvalidWord("a repetition window needs at least one block".into()));
    }
    let block = w0_word(sys, c)?;
    let psi_block = block.map(|s| sys.psi(s));
    let word: Word = (0..copies).flat_map(|i| if i % 2 == 0 { block.to_vec() } else { psi_block.to_vec() }).collect();
    Ok(RepetitionWindow {
        quiver: knit(sys, &word, origin),
        block_len: block.len(),
        word,
        phi: phi_counts(sys, c)?,
        psi: sys.psi_table().to_vec(),
    })
}

/// `β_q` for the letters of `periods` consecutive copies of `Qψ(Q)`: the
/// product of all earlier letters of the repeated word applied to `α_q`.
/// The first period is the prefix rule on `Qψ(Q)`; later periods agree with
/// a periodic repetition exactly when `Qψ(Q)` multiplies to the identity.
pub fn beta_labels(sys: &CoxeterSystem, q: &Word, periods: usize) -> Result<Vec<Root>> {
    if !has_sin_property(sys, q) {
        return Err(Error::InvalidWord(format!("[{q}] does not have the SIN-property")));
    }
    let qq = doubled_word(sys, q);
    let mut u = sys.identity();
    let mut out = Vec::with_capacity(periods * qq.len());
    for _ in 0..periods {
        for &s in qq.iter() {
            out.push(sys.roots().vector(sys.act_simple(&u, s)));
            u = sys.mul_gen(&u, s);
        }
    }
    Ok(out)
}

/// The mesh relation `β_q + β_q′ = Σ_p −a(s,p) β_p` at every pair of
/// consecutive occurrences in three periods of `Qψ(Q)`. Returns the
/// number of sites checked, or an error naming the first failure.
pub fn check_mesh_relation(sys: &CoxeterSystem, q: &Word) -> Result<usize> {
    let periods = 3;
    let labels = beta_labels(sys, q, periods)?;
    let qq = doubled_word(sys, q);
    let word: Word = (0..periods).flat_map(|_| qq.to_vec()).collect();
    let mut sites = 0;
    for i in 0..word.len() {
        let s = word[i];
        let Some(j) = (i + 1..word.len()).find(|&j| word[j] == s) else { continue };
        let lhs = &labels[i] + &labels[j];
        let rhs = (i + 1..j)
            .filter(|&p| word[p] != s && !sys.commute(s, word[p]))
            .fold(Root::zero(sys.rank()), |acc, p| &acc + &labels[p].scale(-sys.cartan(s, word[p])));
        if lhs != rhs {
            return Err(Error::Internal(format!(
                "mesh relation fails between positions {} and {}: {lhs} vs {rhs}",
                i + 1,
                j + 1
            )));
        }
        sites += 1;
    }
    Ok(sites)
}
