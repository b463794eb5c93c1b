use std::collections::{BTreeMap, BTreeSet};

use subwordlab::coxeter::{CoxeterSystem, Word};
use subwordlab::multicluster::{multi_cluster_word, theta_permutation};
use subwordlab::quiver::{
    ar_quiver, beta_labels, check_mesh_relation, coxeter_quiver, export_dot, repetition_window, vertex_name, Quiver,
    Vertex,
};
use subwordlab::sorting::phi_counts;
use subwordlab::subword::root_functions;
use subwordlab::subword::PositionSet;

fn sys(name: &str) -> CoxeterSystem {
    CoxeterSystem::from_name(name).unwrap()
}

fn w(letters: &[usize]) -> Word {
    Word::from_one_based(letters)
}

/// Vertex names and arrows read back from DOT text.
fn parse_dot(text: &str) -> (Vec<String>, Vec<(String, String)>) {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let body = text.trim().strip_prefix("digraph quiver {").and_then(|t| t.strip_suffix('}')).expect("digraph");
    for stmt in body.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let ids: Vec<String> = stmt.split("->").map(|p| p.trim().trim_matches('"').to_string()).collect();
        match ids.as_slice() {
            [a] => nodes.push(a.clone()),
            [a, b] => edges.push((a.clone(), b.clone())),
            _ => panic!("bad statement {stmt}"),
        }
    }
    (nodes, edges)
}

#[test]
fn a4_coxeter_quiver() {
    let a4 = sys("A4");
    let q = coxeter_quiver(&a4, &w(&[1, 3, 2, 4])).unwrap();
    let arrows: BTreeSet<(usize, usize)> = q.arrows.iter().map(|&(a, b)| (q.vertices[a].1 + 1, q.vertices[b].1 + 1)).collect();
    assert_eq!(arrows, [(1, 2), (3, 2), (3, 4)].into_iter().collect());
}

#[test]
fn a4_ar_quiver() {
    let a4 = sys("A4");
    let ar = ar_quiver(&a4, &w(&[1, 3, 2, 4])).unwrap();
    assert_eq!(ar.vertices.len(), 10);
    // knitting gives 12 arrows; every mesh (i,s) → (i,t) → (i+1,s) is present
    assert_eq!(ar.arrows.len(), 12);
    let expected: BTreeSet<(Vertex, Vertex)> = [
        ((1, 0), (1, 1)),
        ((1, 2), (1, 1)),
        ((1, 2), (1, 3)),
        ((1, 1), (2, 0)),
        ((1, 1), (2, 2)),
        ((1, 3), (2, 2)),
        ((2, 0), (2, 1)),
        ((2, 2), (2, 1)),
        ((2, 2), (2, 3)),
        ((2, 1), (3, 0)),
        ((2, 1), (3, 2)),
        ((2, 3), (3, 2)),
    ]
    .into_iter()
    .collect();
    let got: BTreeSet<(Vertex, Vertex)> = ar.arrows.iter().map(|&(a, b)| (ar.vertices[a], ar.vertices[b])).collect();
    assert_eq!(got, expected);
}

#[test]
fn dot_round_trip() {
    let single = Quiver { vertices: vec![(1, 0)], arrows: vec![] };
    let (nodes, edges) = parse_dot(&export_dot(&single));
    assert_eq!(nodes, vec!["(1,s1)"]);
    assert!(edges.is_empty());

    let a4 = sys("A4");
    let ar = ar_quiver(&a4, &w(&[1, 3, 2, 4])).unwrap();
    let text = export_dot(&ar);
    assert_eq!(text, export_dot(&ar));
    let (nodes, edges) = parse_dot(&text);
    assert_eq!(nodes, ar.vertices.iter().map(|&v| vertex_name(v)).collect::<Vec<_>>());
    let back: Vec<(String, String)> =
        ar.arrows.iter().map(|&(a, b)| (vertex_name(ar.vertices[a]), vertex_name(ar.vertices[b]))).collect();
    assert_eq!(edges, back);
}

#[test]
fn ar_quiver_is_one_window_block() {
    for name in ["A4", "D4", "E6", "B3"] {
        let s = sys(name);
        for c in s.enumerate_coxeter_words().into_iter().take(4) {
            let win = repetition_window(&s, &c, 3, 1).unwrap();
            let keep: Vec<usize> = (0..win.block_len).collect();
            assert_eq!(win.quiver.full_subquiver(&keep), ar_quiver(&s, &c).unwrap(), "{name} {c}");
        }
    }
}

#[test]
fn a4_shift_orbit() {
    let a4 = sys("A4");
    let win = repetition_window(&a4, &w(&[1, 3, 2, 4]), 5, -4).unwrap();
    let s1 = 0;
    let s4 = 3;
    assert_eq!(win.shift((1, s4)), (4, s1));
    assert_eq!(win.shift(win.shift((-1, s1))), (4, s1));
    for v in [(1, s4), (-1, s1), (4, s1)] {
        assert!(win.quiver.index_of(v).is_some(), "{v:?}");
    }
    for &v in &win.quiver.vertices {
        assert_eq!(win.tau(win.shift(v)), win.shift(win.tau(v)));
        assert_eq!(win.tau_inverse(win.tau(v)), v);
    }
}

#[test]
fn window_maps_are_quiver_maps() {
    // τ and [1] send arrows to arrows wherever both ends stay in the window
    for name in ["A4", "D5", "E6"] {
        let s = sys(name);
        let c = s.standard_coxeter_word();
        let win = repetition_window(&s, &c, 5, -7).unwrap();
        for map in [win.tau_map(), win.shift_map()] {
            for &(a, b) in &win.quiver.arrows {
                if let (Some(x), Some(y)) = (map[a], map[b]) {
                    assert!(win.quiver.arrows.binary_search(&(x, y)).is_ok(), "{name}");
                }
            }
        }
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// The domain `{(i, s) : 1 − k ≤ i ≤ φ(s)}` of `τᵏ = [1]`, its vertices in
/// window order, and the window itself.
fn fundamental_domain(s: &CoxeterSystem, c: &Word, k: usize) -> (Vec<Vertex>, subwordlab::quiver::RepetitionWindow) {
    let h = s.coxeter_number();
    let a = ceil_div(k, h).max(1);
    let win = repetition_window(s, c, 2 * a + 1, 1 - (a * h) as i64).unwrap();
    let phi = phi_counts(s, c).unwrap();
    let dom: Vec<Vertex> = win
        .quiver
        .vertices
        .iter()
        .copied()
        .filter(|&(i, g)| 1 - k as i64 <= i && i <= phi[g] as i64)
        .collect();
    (dom, win)
}

#[test]
fn fundamental_domain_reproduces_multi_cluster_word() {
    for name in ["A3", "A4", "D4", "B3", "E6", "H3"] {
        let s = sys(name);
        for c in s.enumerate_coxeter_words().into_iter().take(4) {
            for k in 0..=3 {
                let (dom, win) = fundamental_domain(&s, &c, k);
                assert_eq!(dom.len(), k * s.rank() + s.num_positive_roots());
                let word = Word::new(dom.iter().map(|v| v.1).collect());
                let q = multi_cluster_word(&s, &c, k).unwrap();
                assert!(s.equal_up_to_commutations(&word, &q), "{name} {c} k={k}: {word} vs {q}");

                // every F-orbit meets the domain once, F = τ^{-k}∘[1]
                let phi = win.phi();
                let f = |(i, g): Vertex| (i + k as i64 + phi[s.psi(g)] as i64, s.psi(g));
                let f_inv = |(i, g): Vertex| (i - k as i64 - phi[g] as i64, s.psi(g));
                let domain: BTreeSet<Vertex> = dom.iter().copied().collect();
                for &v in &win.quiver.vertices {
                    let mut orbit = vec![v];
                    let (mut x, mut y) = (v, v);
                    for _ in 0..12 {
                        x = f(x);
                        y = f_inv(y);
                        orbit.push(x);
                        orbit.push(y);
                    }
                    let hits = orbit.iter().filter(|u| domain.contains(u)).count();
                    assert_eq!(hits, 1, "{name} {c} k={k} {v:?}");
                }
            }
        }
    }
}

#[test]
fn theta_is_inverse_translate() {
    for name in ["A3", "A4", "D4", "D5", "E6"] {
        let s = sys(name);
        for c in s.enumerate_coxeter_words().into_iter().take(4) {
            for k in 1..=2 {
                let (dom, win) = fundamental_domain(&s, &c, k);
                let q = multi_cluster_word(&s, &c, k).unwrap();
                // identify letters of q with domain vertices by per-generator occurrence
                let mut by_gen: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
                for &v in &dom {
                    by_gen.entry(v.1).or_default().push(v);
                }
                let mut counter = vec![0usize; s.rank()];
                let vertex_of: Vec<Vertex> = q
                    .iter()
                    .map(|&g| {
                        counter[g] += 1;
                        by_gen[&g][counter[g] - 1]
                    })
                    .collect();
                let position: BTreeMap<Vertex, usize> = vertex_of.iter().enumerate().map(|(p, &v)| (v, p)).collect();
                let phi = win.phi();
                let f_inv = |(i, g): Vertex| {
                    (i - k as i64 - phi[g] as i64, s.psi(g))
                };
                let theta = theta_permutation(&s, &c, k).unwrap();
                for (p, &v) in vertex_of.iter().enumerate() {
                    let mut u = win.tau_inverse(v);
                    if !position.contains_key(&u) {
                        u = f_inv(u);
                    }
                    assert_eq!(position.get(&u), Some(&theta[p]), "{name} {c} k={k} at {}", p + 1);
                }
            }
        }
    }
}

#[test]
fn beta_labels_examples() {
    let b2 = sys("B2");
    let q = w(&[1, 2]).repeat(3);
    let labels = beta_labels(&b2, &q, 1).unwrap();
    assert_eq!(labels[0].to_string(), "α1");
    let r = root_functions(&b2, &q, PositionSet::EMPTY);
    for (p, root) in r.iter().enumerate() {
        assert_eq!(labels[p], b2.roots().vector(*root));
    }
    assert!(beta_labels(&b2, &w(&[1, 2]), 1).is_err());

    for name in ["A3", "B3", "D4", "F4", "G2"] {
        let s = sys(name);
        let q = multi_cluster_word(&s, &s.standard_coxeter_word(), 1).unwrap();
        for l in beta_labels(&s, &q, 3).unwrap() {
            assert!(s.roots().signed_index_of(&l).is_some(), "{name}");
        }
    }
}

#[test]
fn mesh_small_examples() {
    let a1 = sys("A1");
    assert!(check_mesh_relation(&a1, &w(&[1, 1])).unwrap() > 0);
    let a2 = sys("A2");
    let sites = check_mesh_relation(&a2, &w(&[1, 2, 1, 2, 1])).unwrap();
    assert!(sites > 0);
    // α1 + β at the next s1 equals the one intervening s2 label
    let labels = beta_labels(&a2, &w(&[1, 2, 1, 2, 1]), 1).unwrap();
    assert_eq!(&labels[0] + &labels[2], labels[1]);
    assert!(check_mesh_relation(&a2, &w(&[1, 1, 2])).is_err());
}

#[test]
fn mesh_relation_multi_cluster_words() {
    for (name, ks) in [("A3", 0..3), ("B2", 0..4), ("B3", 0..3), ("I2(7)", 0..3), ("H3", 0..2), ("D4", 0..2)] {
        let s = sys(name);
        for c in s.enumerate_coxeter_words() {
            for k in ks.clone() {
                let q = multi_cluster_word(&s, &c, k).unwrap();
                assert!(check_mesh_relation(&s, &q).is_ok(), "{name} {c} k={k}");
            }
        }
    }
}
