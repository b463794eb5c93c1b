//! c-sorting words, the φ-count description of `w₀(c)`, word rotation and
//! the SIN-property.

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Element, Word};
use crate::error::{Error, Result};

/// The c-sorting word of `w₀` with its φ-count factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SortingWordReport {
    pub word: Word,
    /// `phi[s]` = number of occurrences of `s` in the word.
    pub phi: Vec<usize>,
    /// `K_i = {s : φ(s) ≥ i}`, listed in the order of `c`.
    pub factorization: Vec<Vec<usize>>,
}

/// The lexicographically first subword of `c c c …` that is a reduced
/// word for `w`.
pub fn sorting_word(sys: &CoxeterSystem, c: &Word, w: &Element) -> Result<Word> {
    sys.check_coxeter_word(c)?;
    // vinv = (u⁻¹w)⁻¹; s is taken when it is a left descent of u⁻¹w
    let mut vinv = w.inverse();
    let mut out = Word::empty();
    while !vinv.is_identity() {
        for &s in c.iter() {
            if vinv.is_right_descent(s) {
                out.push(s);
                vinv = sys.mul_gen(&vinv, s);
            }
        }
    }
    Ok(out)
}

fn position_in(c: &Word) -> Vec<usize> {
    let mut pos = vec![0; c.len()];
    for (i, &s) in c.iter().enumerate() {
        pos[s] = i;
    }
    pos
}

/// Occurrence counts of each generator in `w₀(c)`, solved from the edge
/// rule and the constraint `Σ φ = N`.
pub fn phi_counts(sys: &CoxeterSystem, c: &Word) -> Result<Vec<usize>> {
    sys.check_coxeter_word(c)?;
    let n = sys.rank();
    let pos = position_in(c);
    // relative values with generator 0 pinned at 0
    let mut rel: Vec<Option<i64>> = vec![None; n];
    rel[0] = Some(0);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for v in sys.neighbors(u) {
            if rel[v].is_some() {
                continue;
            }
            let (s, t) = if pos[u] < pos[v] { (u, v) } else { (v, u) };
            let psi_same = pos[sys.psi(s)] < pos[sys.psi(t)];
            // φ(s) − φ(t)
            let diff = if psi_same { 0 } else { 1 };
            let ru = rel[u].unwrap();
            rel[v] = Some(if u == s { ru - diff } else { ru + diff });
            stack.push(v);
        }
    }
    let rel: Vec<i64> = rel
        .into_iter()
        .map(|r| r.ok_or_else(|| Error::Internal("Coxeter graph is disconnected".into())))
        .collect::<Result<_>>()?;
    let total = sys.num_positive_roots() as i64 - rel.iter().sum::<i64>();
    if total % n as i64 != 0 {
        return Err(Error::Internal(format!("φ offset {total}/{n} is not integral")));
    }
    let offset = total / n as i64;
    rel.iter()
        .map(|&r| {
            usize::try_from(r + offset).map_err(|_| Error::Internal("negative φ count".into()))
        })
        .collect()
}

/// `w₀(c) = c_{K₁} c_{K₂} … c_{K_r}` from the φ-counts, checked against
/// the greedy sorting word.
pub fn sorting_word_w0(sys: &CoxeterSystem, c: &Word) -> Result<SortingWordReport> {
    let phi = phi_counts(sys, c)?;
    let r = phi.iter().copied().max().unwrap_or(0);
    let factorization: Vec<Vec<usize>> = (1..=r)
        .map(|i| c.iter().copied().filter(|&s| phi[s] >= i).collect())
        .collect();
    let word: Word = factorization.iter().flatten().copied().collect();
    let greedy = sorting_word(sys, c, sys.longest_element())?;
    if greedy != word {
        return Err(Error::Internal(format!(
            "φ factorization [{word}] differs from greedy sorting word [{greedy}]"
        )));
    }
    Ok(SortingWordReport { word, phi, factorization })
}

/// Shorthand for the c-sorting word of `w₀`.
pub fn w0_word(sys: &CoxeterSystem, c: &Word) -> Result<Word> {
    Ok(sorting_word_w0(sys, c)?.word)
}

/// Drops the first letter `s` and appends `ψ(s)`.
pub fn rotate_word(sys: &CoxeterSystem, q: &Word) -> Result<Word> {
    let (&s, rest) = q
        .split_first()
        .ok_or_else(|| Error::InvalidWord("cannot rotate the empty word".into()))?;
    let mut out = Word::new(rest.to_vec());
    out.push(sys.psi(s));
    Ok(out)
}

/// `Q ψ(Q)`.
pub fn doubled_word(sys: &CoxeterSystem, q: &Word) -> Word {
    q.concat(&q.map(|s| sys.psi(s)))
}

/// Every non-commuting pair alternates in `q`.
pub fn has_intervening_neighbors(sys: &CoxeterSystem, q: &Word) -> bool {
    sys.edges().into_iter().all(|(s, t)| {
        let r = q.restrict(|x| x == s || x == t);
        r.windows(2).all(|p| p[0] != p[1])
    })
}

/// SIN-property: intervening neighbors and `δ(Q) = w₀`.
pub fn has_sin_property(sys: &CoxeterSystem, q: &Word) -> bool {
    q.check_alphabet(sys.rank()).is_ok()
        && has_intervening_neighbors(sys, &doubled_word(sys, q))
        && sys.demazure_product(q) == *sys.longest_element()
}

/// For a SIN word returns `(c, k)` with `Q` commutation-equal to `cᵏw₀(c)`.
pub fn recognize_multi_cluster_word(sys: &CoxeterSystem, q: &Word) -> Option<(Word, usize)> {
    if !has_sin_property(sys, q) {
        return None;
    }
    let n = sys.rank();
    let extra = q.len().checked_sub(sys.num_positive_roots())?;
    if extra % n != 0 {
        return None;
    }
    let k = extra / n;
    let mut c = Word::empty();
    for &s in q.iter() {
        if !c.contains(&s) {
            c.push(s);
        }
    }
    let target = c.repeat(k).concat(&w0_word(sys, &c).ok()?);
    sys.equal_up_to_commutations(q, &target).then_some((c, k))
}
