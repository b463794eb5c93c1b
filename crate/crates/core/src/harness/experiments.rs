use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{ExperimentReport, Verdict};
use crate::coxeter::{CoxeterSystem, Family, GroupDescriptor, Word};
use crate::error::Result;
use crate::multicluster::{
    compatibility_matrix, csp_polynomial, fixed_point_table, multi_cluster_complex, multi_cluster_word,
};
use crate::quiver::check_mesh_relation;
use crate::sorting::{has_sin_property, rotate_word};
use crate::subword::{enumerate_facets_bfs, f_vector, minimal_nonfaces, FlipGraph, PositionSet, SubwordComplex};

/// A group type together with a multiplicity `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Instance {
    pub descriptor: GroupDescriptor,
    pub k: usize,
}

impl Instance {
    pub fn new(name: &str, k: usize) -> Instance {
        Instance { descriptor: name.parse().expect("built-in instance names are valid"), k }
    }

    fn system(&self) -> Result<CoxeterSystem> {
        CoxeterSystem::new(self.descriptor)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={}", self.descriptor, self.k)
    }
}

fn instances(list: &[(&str, &[usize])]) -> Vec<Instance> {
    list.iter().flat_map(|(name, ks)| ks.iter().map(|&k| Instance::new(name, k))).collect()
}

pub fn count_instances_default() -> Vec<Instance> {
    instances(&[
        ("A1", &[1, 2, 3]),
        ("A2", &[1, 2, 3]),
        ("A3", &[1, 2]),
        ("A4", &[1]),
        ("B2", &[1, 2, 3]),
        ("B3", &[1, 2]),
        ("D4", &[1, 2]),
        ("H3", &[1]),
        ("G2", &[1, 2]),
        ("F4", &[1]),
        ("I2(3)", &[1, 2, 3]),
        ("I2(4)", &[1, 2]),
        ("I2(5)", &[1, 2]),
        ("I2(6)", &[1, 2]),
        ("I2(7)", &[1, 2]),
    ])
}

pub fn nonface_instances_default() -> Vec<Instance> {
    instances(&[
        ("A2", &[1, 2, 3]),
        ("A3", &[1, 2]),
        ("B2", &[1, 2, 3]),
        ("B3", &[2]),
        ("I2(3)", &[1, 2, 3]),
        ("I2(5)", &[1, 2, 3]),
        ("I2(6)", &[1, 2, 3]),
        ("I2(7)", &[1, 2, 3]),
    ])
}

pub fn csp_instances_default() -> Vec<Instance> {
    instances(&[("A1", &[1, 2]), ("A2", &[1, 2]), ("A3", &[1, 2]), ("B2", &[1, 2]), ("I2(5)", &[1, 2])])
}

pub fn independence_instances_default() -> Vec<Instance> {
    instances(&[("A3", &[1, 2]), ("B3", &[1, 2]), ("D4", &[1])])
}

pub fn maximality_instances_default() -> Vec<Instance> {
    instances(&[("A2", &[1, 2]), ("B2", &[1, 2]), ("I2(5)", &[1]), ("I2(6)", &[1]), ("A3", &[1]), ("A4", &[1])])
}

/// Group types with the word lengths swept exhaustively.
pub fn sin_instances_default() -> Vec<(GroupDescriptor, usize)> {
    [("A2", 5), ("B2", 6), ("A2", 7), ("B2", 8), ("A3", 6)]
        .iter()
        .map(|&(name, len)| (name.parse().expect("valid"), len))
        .collect()
}

pub fn mesh_instances_default() -> Vec<Instance> {
    instances(&[("A3", &[0, 1, 2]), ("B2", &[0, 1, 2]), ("B3", &[1, 2]), ("I2(7)", &[1, 2]), ("H3", &[1])])
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `∏_{j<k} ∏_i (d_i + h + 2j) / (d_i + 2j)` as a reduced fraction.
pub fn facet_count_formula(sys: &CoxeterSystem, k: usize) -> (u128, u128) {
    let h = sys.coxeter_number() as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for j in 0..k as u128 {
        for &d in sys.degrees() {
            num *= d as u128 + h + 2 * j;
            den *= d as u128 + 2 * j;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    (num, den)
}

fn formula_value(f: (u128, u128)) -> Value {
    if f.1 == 1 {
        json!(f.0)
    } else {
        json!(format!("{}/{}", f.0, f.1))
    }
}

fn asserts_formula(inst: &Instance) -> bool {
    matches!(inst.descriptor.family(), Family::A | Family::B | Family::I2) || inst.k == 1
}

/// Facet counts by both enumerators against the product formula, plus the
/// sphere Euler-characteristic check.
pub fn run_count_experiment(list: &[Instance]) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "counts",
        json!({ "instances": list.iter().map(|i| i.to_string()).collect::<Vec<_>>() }),
        &["type", "k", "|Q|", "dfs", "bfs", "formula", "asserted", "euler", "ok"],
    );
    let mut all_ok = true;
    for inst in list {
        let sys = inst.system()?;
        let c = sys.standard_coxeter_word();
        let cx = multi_cluster_complex(&sys, &c, inst.k)?;
        let seed = cx.facets()[0];
        let bfs = enumerate_facets_bfs(&sys, cx.word(), cx.pi(), seed)?;
        let formula = facet_count_formula(&sys, inst.k);
        let asserted = asserts_formula(inst);
        let euler = f_vector(&cx)?.reduced_euler_characteristic();
        let expected_euler = if (cx.word().len() - sys.num_positive_roots()) % 2 == 1 { 1 } else { -1 };
        let formula_ok = formula == (cx.num_facets() as u128, 1);
        let ok = bfs == cx.facets() && euler == expected_euler && cx.is_sphere(&sys) && (!asserted || formula_ok);
        all_ok &= ok;
        rep.rows.push(vec![
            json!(inst.descriptor.to_string()),
            json!(inst.k),
            json!(cx.word().len()),
            json!(cx.num_facets()),
            json!(bfs.len()),
            formula_value(formula),
            json!(asserted),
            json!(euler),
            json!(ok),
        ]);
    }
    rep.verdict = Verdict::from_ok(all_ok);
    Ok(rep)
}

/// Sizes of minimal non-faces against the conjectured `k + 1`.
pub fn run_nonface_experiment(list: &[Instance]) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "nonfaces",
        json!({ "instances": list.iter().map(|i| i.to_string()).collect::<Vec<_>>() }),
        &["type", "k", "searched_up_to", "minimal_nonfaces", "sizes", "all_k_plus_1"],
    );
    for inst in list {
        let sys = inst.system()?;
        let cx = multi_cluster_complex(&sys, &sys.standard_coxeter_word(), inst.k)?;
        let max_size = (inst.k + 2).min(cx.facet_size() + 1);
        let nf = minimal_nonfaces(&cx, max_size);
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for s in &nf {
            *sizes.entry(s.len()).or_default() += 1;
        }
        let shown: Vec<String> = sizes.iter().map(|(s, n)| format!("{s}:{n}")).collect();
        rep.rows.push(vec![
            json!(inst.descriptor.to_string()),
            json!(inst.k),
            json!(max_size),
            json!(nf.len()),
            json!(shown.join(" ")),
            json!(nf.iter().all(|s| s.len() == inst.k + 1)),
        ]);
    }
    Ok(rep)
}

/// Fixed facets of `Θ^d` against the q-product at roots of unity of order `2k + h`.
pub fn run_csp_experiment(list: &[Instance]) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "csp",
        json!({ "instances": list.iter().map(|i| i.to_string()).collect::<Vec<_>>() }),
        &["type", "k", "d", "fixed_facets", "f(zeta^d)", "match"],
    );
    for inst in list {
        let sys = inst.system()?;
        let cx = multi_cluster_complex(&sys, &sys.standard_coxeter_word(), inst.k)?;
        let poly = csp_polynomial(&sys, inst.k)?;
        for row in fixed_point_table(&sys, &cx, inst.k, &poly) {
            rep.rows.push(vec![
                json!(inst.descriptor.to_string()),
                json!(inst.k),
                json!(row.d),
                json!(row.fixed_facets),
                json!(row.polynomial_value),
                json!(row.matches),
            ]);
        }
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaximalityMode {
    /// Exhaustive when `n^(kn+N) ≤ 10⁶`, otherwise a sample of this size.
    Auto(usize),
    Exhaustive,
    Sample(usize),
}

const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

/// Facet counts of `Δ(Q, w₀)` over words of length `kn + N`, against the
/// multi-cluster count.
pub fn run_maximality_experiment(list: &[Instance], mode: MaximalityMode, seed: u64) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "maximality",
        json!({ "instances": list.iter().map(|i| i.to_string()).collect::<Vec<_>>(), "seed": seed }),
        &["type", "k", "mode", "words", "multi_cluster", "max_found", "exceeding", "attaining", "attaining_all_sin"],
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for inst in list {
        let sys = inst.system()?;
        let n = sys.rank();
        let len = inst.k * n + sys.num_positive_roots();
        let target = multi_cluster_complex(&sys, &sys.standard_coxeter_word(), inst.k)?.num_facets();
        let total = (n as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        let exhaustive = match mode {
            MaximalityMode::Exhaustive => true,
            MaximalityMode::Sample(_) => false,
            MaximalityMode::Auto(_) => total <= EXHAUSTIVE_LIMIT,
        };
        let words: Vec<Word> = if exhaustive {
            (0..total)
                .map(|mut x| {
                    (0..len)
                        .map(|_| {
                            let s = (x % n as u128) as usize;
                            x /= n as u128;
                            s
                        })
                        .collect()
                })
                .collect()
        } else {
            let samples = match mode {
                MaximalityMode::Auto(s) | MaximalityMode::Sample(s) => s,
                MaximalityMode::Exhaustive => 0,
            };
            (0..samples).map(|_| (0..len).map(|_| rng.gen_range(0..n)).collect()).collect()
        };
        let (mut max_found, mut exceeding, mut attaining, mut attaining_sin) = (0, 0, 0, true);
        for q in &words {
            let count = SubwordComplex::with_w0(&sys, q.clone())?.num_facets();
            max_found = max_found.max(count);
            if count > target {
                exceeding += 1;
            }
            if count == target {
                attaining += 1;
                attaining_sin &= has_sin_property(&sys, q);
            }
        }
        rep.rows.push(vec![
            json!(inst.descriptor.to_string()),
            json!(inst.k),
            json!(if exhaustive { "exhaustive" } else { "sample" }),
            json!(words.len()),
            json!(target),
            json!(max_found),
            json!(exceeding),
            json!(attaining),
            json!(attaining_sin),
        ]);
    }
    Ok(rep)
}

/// Over all words of the given lengths: SIN-property iff commutation-equal
/// to `cᵏw₀(c)` for some Coxeter word `c`.
pub fn run_sin_experiment(list: &[(GroupDescriptor, usize)]) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "sin",
        json!({ "instances": list.iter().map(|(d, l)| format!("{d} |Q|={l}")).collect::<Vec<_>>() }),
        &["type", "|Q|", "words", "sin_words", "multi_cluster_words", "agree"],
    );
    let mut all_ok = true;
    for &(desc, len) in list {
        let sys = CoxeterSystem::new(desc)?;
        let n = sys.rank();
        let big_n = sys.num_positive_roots();
        let targets: Vec<Word> = if len >= big_n && (len - big_n) % n == 0 {
            let k = (len - big_n) / n;
            sys.enumerate_coxeter_words()
                .iter()
                .map(|c| multi_cluster_word(&sys, c, k))
                .collect::<Result<_>>()?
        } else {
            Vec::new()
        };
        let total = n.pow(len as u32);
        let (mut sin, mut mc, mut agree) = (0, 0, true);
        for mut x in 0..total {
            let q: Word = (0..len)
                .map(|_| {
                    let s = x % n;
                    x /= n;
                    s
                })
                .collect();
            let is_sin = has_sin_property(&sys, &q);
            let is_mc = targets.iter().any(|t| sys.equal_up_to_commutations(&q, t));
            sin += is_sin as usize;
            mc += is_mc as usize;
            agree &= is_sin == is_mc;
        }
        all_ok &= agree;
        rep.rows.push(vec![
            json!(desc.to_string()),
            json!(len),
            json!(total),
            json!(sin),
            json!(mc),
            json!(agree),
        ]);
    }
    rep.verdict = Verdict::from_ok(all_ok);
    Ok(rep)
}

/// Mesh relation for the multi-cluster words of every Coxeter word.
pub fn run_mesh_experiment(list: &[Instance]) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "mesh",
        json!({ "instances": list.iter().map(|i| i.to_string()).collect::<Vec<_>>() }),
        &["type", "k", "cox", "exact", "sites", "ok"],
    );
    let mut all_ok = true;
    for inst in list {
        let sys = inst.system()?;
        for c in sys.enumerate_coxeter_words() {
            let q = multi_cluster_word(&sys, &c, inst.k)?;
            let result = check_mesh_relation(&sys, &q);
            all_ok &= result.is_ok();
            rep.rows.push(vec![
                json!(inst.descriptor.to_string()),
                json!(inst.k),
                json!(c.to_string()),
                json!(sys.is_exact()),
                json!(result.as_ref().ok()),
                json!(result.is_ok()),
            ]);
        }
    }
    rep.verdict = Verdict::from_ok(all_ok);
    Ok(rep)
}

/// Maps the `i`-th occurrence of each letter in `q1` to the `i`-th
/// occurrence of the same letter in `q2`. `None` unless the words have the
/// same letter counts.
pub fn commutation_bijection(q1: &Word, q2: &Word) -> Option<Vec<usize>> {
    if q1.len() != q2.len() {
        return None;
    }
    let mut slots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, &s) in q2.iter().enumerate().rev() {
        slots.entry(s).or_default().push(j);
    }
    q1.iter().map(|s| slots.get_mut(s)?.pop()).collect()
}

/// Rotating `cᵏw₀(c)` at its first letter `s` and reordering by
/// commutations lands on the multi-cluster word of `scs`; checks that the
/// composite position map sends facets onto facets.
fn rotation_maps_facets(sys: &CoxeterSystem, c: &Word, k: usize, cx: &SubwordComplex) -> Result<bool> {
    let q = cx.word();
    let rotated = rotate_word(sys, q)?;
    let mut c2 = Word::new(c[1..].to_vec());
    c2.push(c[0]);
    let target = multi_cluster_word(sys, &c2, k)?;
    if !sys.equal_up_to_commutations(&rotated, &target) {
        return Ok(false);
    }
    let Some(comm) = commutation_bijection(&rotated, &target) else { return Ok(false) };
    let len = q.len();
    let map = |p: usize| comm[(p + len - 1) % len];
    let image: BTreeSet<PositionSet> = cx.facets().iter().map(|f| f.iter().map(map).collect()).collect();
    let target_cx = SubwordComplex::with_w0(sys, target)?;
    Ok(image.into_iter().eq(target_cx.facets().iter().copied()))
}

/// Facet counts and f-vectors across all Coxeter words, with the
/// rotation isomorphism checked for each.
pub fn run_independence_experiment(list: &[Instance]) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "independence",
        json!({ "instances": list.iter().map(|i| i.to_string()).collect::<Vec<_>>() }),
        &["type", "k", "cox", "facets", "f_vector", "rotation_iso"],
    );
    let mut all_ok = true;
    for inst in list {
        let sys = inst.system()?;
        let mut seen = BTreeSet::new();
        for c in sys.enumerate_coxeter_words() {
            let cx = multi_cluster_complex(&sys, &c, inst.k)?;
            let fv = f_vector(&cx)?;
            let rot = rotation_maps_facets(&sys, &c, inst.k, &cx)?;
            all_ok &= rot;
            seen.insert((cx.num_facets(), fv.0.clone()));
            rep.rows.push(vec![
                json!(inst.descriptor.to_string()),
                json!(inst.k),
                json!(c.to_string()),
                json!(cx.num_facets()),
                json!(fv.0),
                json!(rot),
            ]);
        }
        all_ok &= seen.len() == 1;
    }
    rep.verdict = Verdict::from_ok(all_ok);
    Ok(rep)
}

/// Sizes of the maximal faces of the complex on `Φ≥−1` whose faces avoid
/// `k + 1` pairwise incompatible roots (sorted, with repetition).
pub fn naive_complex_maximal_faces(sys: &CoxeterSystem, c: &Word, k: usize) -> Result<Vec<usize>> {
    let compat = compatibility_matrix(sys, c)?;
    let v = compat.len();
    if v > 24 {
        return Err(crate::Error::ResourceLimit { what: "almost positive roots for naive complex".into(), limit: 24 });
    }
    let incompatible: Vec<u32> = (0..v)
        .map(|i| (0..v).filter(|&j| j != i && !compat[i][j]).fold(0u32, |m, j| m | 1 << j))
        .collect();
    // a set is a face iff its incompatibility graph has no (k+1)-clique
    fn has_clique(cands: u32, need: usize, inc: &[u32]) -> bool {
        if need == 0 {
            return true;
        }
        if (cands.count_ones() as usize) < need {
            return false;
        }
        let mut rest = cands;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if has_clique(rest & inc[i], need - 1, inc) {
                return true;
            }
        }
        false
    }
    let is_face = |set: u32| !has_clique(set, k + 1, &incompatible);
    let mut sizes = Vec::new();
    for set in 0u32..1 << v {
        if is_face(set) && (0..v).all(|i| set >> i & 1 == 1 || !is_face(set | 1 << i)) {
            sizes.push(set.count_ones() as usize);
        }
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// The naive pairwise-compatibility complex for `B3`, `k = 2` is not pure.
pub fn run_naive_experiment() -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(
        "naive",
        json!({ "type": "B3", "k": 2 }),
        &["type", "k", "maximal_faces", "sizes", "pure"],
    );
    let sys = CoxeterSystem::from_name("B3")?;
    let sizes = naive_complex_maximal_faces(&sys, &sys.standard_coxeter_word(), 2)?;
    let distinct: BTreeSet<usize> = sizes.iter().copied().collect();
    rep.rows.push(vec![
        json!("B3"),
        json!(2),
        json!(sizes.len()),
        json!(distinct.iter().collect::<Vec<_>>()),
        json!(distinct.len() == 1),
    ]);
    rep.verdict = Verdict::from_ok(distinct == BTreeSet::from([6, 7]));
    Ok(rep)
}

/// Largest flip distance between two facets.
pub fn flip_graph_diameter(sys: &CoxeterSystem, complex: &SubwordComplex) -> Result<Option<usize>> {
    Ok(FlipGraph::new(sys, complex)?.diameter())
}
