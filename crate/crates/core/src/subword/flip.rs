use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use super::{is_facet, PositionSet, SubwordComplex};
use crate::coxeter::{CoxeterSystem, Element, SignedRoot, Word};
use crate::error::{Error, Result};

/// `r_F(q) = w_q(α_q)` for every position `q`, where `w_q` is the product
/// of the letters outside `F` strictly left of `q`.
pub fn root_functions(sys: &CoxeterSystem, q: &Word, f: PositionSet) -> Vec<SignedRoot> {
    let mut u = sys.identity();
    q.iter()
        .enumerate()
        .map(|(i, &s)| {
            let r = sys.act_simple(&u, s);
            if !f.contains(i) {
                u = sys.mul_gen(&u, s);
            }
            r
        })
        .collect()
}

pub fn root_function(sys: &CoxeterSystem, q: &Word, f: PositionSet, position: usize) -> Result<SignedRoot> {
    if position >= q.len() {
        return Err(Error::PositionOutOfRange { position: position + 1, len: q.len() });
    }
    Ok(root_functions(sys, q, f)[position])
}

/// Exchanges `position ∈ F` for the unique `q′ ∉ F` carrying the same root
/// up to sign. Returns the new facet and `q′`.
pub fn flip(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &Element,
    f: PositionSet,
    position: usize,
) -> Result<(PositionSet, usize)> {
    if position >= q.len() {
        return Err(Error::PositionOutOfRange { position: position + 1, len: q.len() });
    }
    if !f.contains(position) || !is_facet(sys, q, pi, f) {
        return Err(Error::NotAFacet);
    }
    let roots = root_functions(sys, q, f);
    let target = roots[position].index;
    let partner = (0..q.len())
        .find(|&p| !f.contains(p) && roots[p].index == target)
        .ok_or(Error::NotSpherical)?;
    let flipped = f.without(position).with(partner);
    if !is_facet(sys, q, pi, flipped) {
        return Err(Error::NotSpherical);
    }
    Ok((flipped, partner))
}

/// Closure of `seed` under flips, sorted.
pub fn enumerate_facets_bfs(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &Element,
    seed: PositionSet,
) -> Result<Vec<PositionSet>> {
    if !is_facet(sys, q, pi, seed) {
        return Err(Error::NotAFacet);
    }
    let mut seen = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(f) = queue.pop_front() {
        for p in f.iter() {
            match flip(sys, q, pi, f, p) {
                Ok((g, _)) => {
                    if seen.insert(g) {
                        queue.push_back(g);
                    }
                }
                // boundary ridge of a ball
                Err(Error::NotSpherical) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Facets as nodes, flips as edges.
#[derive(Clone, Debug, Serialize)]
pub struct FlipGraph {
    pub facets: Vec<PositionSet>,
    /// Pairs `(i, j)` of facet indices with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl FlipGraph {
    pub fn new(sys: &CoxeterSystem, complex: &SubwordComplex) -> Result<FlipGraph> {
        let facets = complex.facets().to_vec();
        let index: BTreeMap<PositionSet, usize> = facets.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut edges = BTreeSet::new();
        for (i, &f) in facets.iter().enumerate() {
            for p in f.iter() {
                match flip(sys, complex.word(), complex.pi(), f, p) {
                    Ok((g, _)) => {
                        let j = *index
                            .get(&g)
                            .ok_or_else(|| Error::Internal(format!("flip produced unknown facet {g}")))?;
                        edges.insert((i.min(j), i.max(j)));
                    }
                    Err(Error::NotSpherical) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(FlipGraph { facets, edges: edges.into_iter().collect() })
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.facets.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    /// `Some(d)` when every node has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&first) if d.iter().all(|&x| x == first) => Some(first),
            _ => None,
        }
    }

    fn distances_from(&self, adj: &[Vec<usize>], start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.facets.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in &adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.facets.is_empty() {
            return true;
        }
        self.distances_from(&self.adjacency(), 0).iter().all(Option::is_some)
    }

    /// Maximum BFS eccentricity; `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best = 0;
        for start in 0..self.facets.len() {
            for d in self.distances_from(&adj, start) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Undirected DOT graph with facets (1-based positions) as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flips {\n");
        for (i, f) in self.facets.iter().enumerate() {
            let _ = writeln!(out, "  f{i} [label=\"{f}\"];");
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  f{i} -- f{j};");
        }
        out.push_str("}\n");
        out
    }
}
