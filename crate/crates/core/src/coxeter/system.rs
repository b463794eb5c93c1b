use std::collections::{BTreeSet, BinaryHeap, HashSet, VecDeque};
use std::cmp::Reverse;
use std::f64::consts::PI;

use super::descriptor::{Family, GroupDescriptor};
use super::element::Element;
use super::roots::{Root, RootSystem, SignedRoot};
use super::scalar::{GoldenInt, Scalar};
use super::word::Word;
use crate::error::{Error, Result};

/// A finite irreducible Coxeter system with its root system and longest
/// element precomputed. Immutable after construction.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    descriptor: GroupDescriptor,
    n: usize,
    coxeter_matrix: Vec<Vec<usize>>,
    cartan: Vec<Vec<Scalar>>,
    degrees: Vec<usize>,
    h: usize,
    psi_table: Vec<usize>,
    roots: RootSystem,
    generators: Vec<Element>,
    w0: Element,
}

/// Coxeter graph edges `(s, t, m(s,t))`, 0-based, for `m ≥ 3`.
/// For `m ∈ {4, 6}` the first generator carries the longer Cartan entry.
fn graph_edges(desc: &GroupDescriptor) -> Vec<(usize, usize, usize)> {
    let n = desc.rank();
    let chain = |upto: usize| (0..upto.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
    match desc.family() {
        Family::A => chain(n),
        Family::B => {
            let mut e = chain(n);
            e[0].2 = 4;
            e
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1, 3));
            e
        }
        // Bourbaki: 1-3-4-5-…-n with 2 attached to 4
        Family::E => {
            let mut e = vec![(0, 2, 3), (1, 3, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1, 3)));
            e
        }
        Family::F => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
        Family::G => vec![(0, 1, 6)],
        Family::H => {
            let mut e = chain(n);
            e[0].2 = 5;
            e
        }
        Family::I2 => vec![(0, 1, desc.dihedral_order().unwrap_or(3))],
    }
}

/// Cartan entries `(a(s,t), a(t,s))` for an edge with label `m`.
fn cartan_pair(m: usize) -> (Scalar, Scalar) {
    match m {
        3 => (Scalar::int(-1), Scalar::int(-1)),
        4 => (Scalar::int(-2), Scalar::int(-1)),
        5 => (Scalar::Exact(-GoldenInt::TAU), Scalar::Exact(-GoldenInt::TAU)),
        6 => (Scalar::int(-3), Scalar::int(-1)),
        _ => {
            let x = -2.0 * (PI / m as f64).cos();
            (Scalar::Approx(x), Scalar::Approx(x))
        }
    }
}

fn degrees_of(desc: &GroupDescriptor) -> Vec<usize> {
    let n = desc.rank();
    let mut d = match desc.family() {
        Family::A => (2..=n + 1).collect(),
        Family::B => (1..=n).map(|i| 2 * i).collect(),
        Family::D => {
            let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d
        }
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
        Family::H if n == 3 => vec![2, 6, 10],
        Family::H => vec![2, 12, 20, 30],
        Family::I2 => vec![2, desc.dihedral_order().unwrap_or(3)],
    };
    d.sort_unstable();
    d
}

fn psi_of(desc: &GroupDescriptor) -> Vec<usize> {
    let n = desc.rank();
    let mut psi: Vec<usize> = (0..n).collect();
    match desc.family() {
        Family::A => psi.reverse(),
        Family::D if n % 2 == 1 => psi.swap(n - 2, n - 1),
        Family::E if n == 6 => {
            psi.swap(0, 5);
            psi.swap(2, 4);
        }
        Family::I2 if desc.dihedral_order().unwrap_or(0) % 2 == 1 => psi.swap(0, 1),
        _ => {}
    }
    psi
}

impl CoxeterSystem {
    pub fn new(descriptor: GroupDescriptor) -> Result<CoxeterSystem> {
        let n = descriptor.rank();
        let mut coxeter_matrix = vec![vec![2; n]; n];
        let mut cartan = vec![vec![Scalar::ZERO; n]; n];
        for s in 0..n {
            coxeter_matrix[s][s] = 1;
            cartan[s][s] = Scalar::int(2);
        }
        for (s, t, m) in graph_edges(&descriptor) {
            coxeter_matrix[s][t] = m;
            coxeter_matrix[t][s] = m;
            let (ast, ats) = cartan_pair(m);
            cartan[s][t] = ast;
            cartan[t][s] = ats;
        }
        let degrees = degrees_of(&descriptor);
        let h = *degrees.last().expect("rank is positive");
        let big_n = n * h / 2;
        let roots = RootSystem::from_cartan(&cartan, big_n)?;
        let generators = (0..n)
            .map(|s| Element::from_image(roots.table(s).to_vec()))
            .collect::<Vec<_>>();
        let mut sys = CoxeterSystem {
            descriptor,
            n,
            coxeter_matrix,
            cartan,
            degrees,
            h,
            psi_table: psi_of(&descriptor),
            roots,
            generators,
            w0: Element::identity(big_n),
        };
        sys.w0 = sys.compute_longest();
        sys.check_invariants()?;
        Ok(sys)
    }

    /// Parses a descriptor string such as `B3` and builds the system.
    pub fn from_name(name: &str) -> Result<CoxeterSystem> {
        CoxeterSystem::new(name.parse()?)
    }

    fn compute_longest(&self) -> Element {
        let mut w = self.identity();
        while let Some(s) = (0..self.n).find(|&s| !w.is_right_descent(s)) {
            w = self.mul_gen(&w, s);
        }
        w
    }

    fn check_invariants(&self) -> Result<()> {
        let sum: usize = self.degrees.iter().map(|d| d - 1).sum();
        if sum != self.num_positive_roots() || self.w0.length() != self.num_positive_roots() {
            return Err(Error::Internal(format!("degree data inconsistent for {}", self.descriptor)));
        }
        for s in 0..self.n {
            let conj = self.w0.compose(&self.generators[s]).compose(&self.w0);
            if conj != self.generators[self.psi_table[s]] {
                return Err(Error::Internal(format!(
                    "ψ table disagrees with w0-conjugation at s{} in {}",
                    s + 1,
                    self.descriptor
                )));
            }
        }
        Ok(())
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn coxeter_matrix(&self) -> &[Vec<usize>] {
        &self.coxeter_matrix
    }

    pub fn m(&self, s: usize, t: usize) -> usize {
        self.coxeter_matrix[s][t]
    }

    /// `a(s,t)` with `s_t(α_s) = α_s − a(s,t)·α_t`.
    pub fn cartan(&self, s: usize, t: usize) -> Scalar {
        self.cartan[s][t]
    }

    pub fn cartan_matrix(&self) -> &[Vec<Scalar>] {
        &self.cartan
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn coxeter_number(&self) -> usize {
        self.h
    }

    /// `N = ℓ(w₀) = nh/2`.
    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// Whether the root coordinates are exact (every type except `I2(m)`, `m ≥ 7`).
    pub fn is_exact(&self) -> bool {
        self.roots.is_exact()
    }

    pub fn commute(&self, s: usize, t: usize) -> bool {
        self.coxeter_matrix[s][t] == 2
    }

    /// Coxeter graph neighbors of `s`.
    pub fn neighbors(&self, s: usize) -> Vec<usize> {
        (0..self.n).filter(|&t| t != s && !self.commute(s, t)).collect()
    }

    /// Coxeter graph edges `(s, t)` with `s < t`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 0..self.n {
            for t in s + 1..self.n {
                if !self.commute(s, t) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    pub fn psi(&self, s: usize) -> usize {
        self.psi_table[s]
    }

    pub fn psi_table(&self) -> &[usize] {
        &self.psi_table
    }

    /// True when `w₀ = −1`, i.e. ψ is the identity.
    pub fn w0_is_central(&self) -> bool {
        self.psi_table.iter().enumerate().all(|(s, &t)| s == t)
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.num_positive_roots())
    }

    pub fn generator(&self, s: usize) -> &Element {
        &self.generators[s]
    }

    pub fn longest_element(&self) -> &Element {
        &self.w0
    }

    /// `w · s`.
    pub fn mul_gen(&self, w: &Element, s: usize) -> Element {
        w.compose(&self.generators[s])
    }

    /// `s · w`.
    pub fn gen_mul(&self, s: usize, w: &Element) -> Element {
        self.generators[s].compose(w)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.check_alphabet(self.n)
    }

    /// Product of the letters, left to right.
    pub fn element_from_word(&self, w: &Word) -> Element {
        w.iter().fold(self.identity(), |acc, &s| self.mul_gen(&acc, s))
    }

    pub fn is_reduced(&self, w: &Word) -> bool {
        let mut acc = self.identity();
        for &s in w.iter() {
            if acc.is_right_descent(s) {
                return false;
            }
            acc = self.mul_gen(&acc, s);
        }
        true
    }

    /// Reduced word read off by stripping the smallest left descent,
    /// front to back.
    pub fn reduced_word(&self, w: &Element) -> Word {
        // left descents of w are right descents of u = w⁻¹; s·w corresponds to u·s
        let mut u = w.inverse();
        let mut out = Word::empty();
        while let Some(s) = (0..self.n).find(|&s| u.is_right_descent(s)) {
            out.push(s);
            u = self.mul_gen(&u, s);
        }
        out
    }

    /// Greedy ascent-only product `δ(Q)`.
    pub fn demazure_product(&self, q: &Word) -> Element {
        self.demazure_product_from(&self.identity(), q)
    }

    /// Continues the Demazure product from `mu` along `letters`.
    pub fn demazure_product_from(&self, mu: &Element, letters: &[usize]) -> Element {
        letters.iter().fold(mu.clone(), |mu, &s| {
            if mu.is_right_descent(s) {
                mu
            } else {
                self.mul_gen(&mu, s)
            }
        })
    }

    /// `w(v)` for an arbitrary vector in the simple-root basis.
    pub fn act(&self, w: &Element, v: &Root) -> Root {
        let mut out = Root::zero(self.n);
        for (t, &c) in v.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = &out + &self.roots.vector(w.apply(SignedRoot::pos(t))).scale(c);
        }
        out
    }

    /// `w(α_s)` as a signed root.
    pub fn act_simple(&self, w: &Element, s: usize) -> SignedRoot {
        w.apply(SignedRoot::pos(s))
    }

    /// The reflection `p · s · p⁻¹`.
    pub fn conjugate_generator(&self, p: &Element, s: usize) -> Element {
        p.compose(&self.generators[s]).compose(&p.inverse())
    }

    pub fn is_coxeter_word(&self, c: &Word) -> bool {
        c.is_permutation_of(self.n)
    }

    pub fn check_coxeter_word(&self, c: &Word) -> Result<()> {
        if self.is_coxeter_word(c) {
            Ok(())
        } else {
            Err(Error::NotCoxeterWord(format!("[{c}] in {}", self.descriptor)))
        }
    }

    /// The word `s1 s2 … sn`.
    pub fn standard_coxeter_word(&self) -> Word {
        (0..self.n).collect()
    }

    /// One word per acyclic orientation of the Coxeter graph: the
    /// lexicographically least linear extension, output sorted.
    pub fn enumerate_coxeter_words(&self) -> Vec<Word> {
        let edges = self.edges();
        let mut out: Vec<Word> = (0..1u64 << edges.len())
            .map(|mask| {
                let mut succ = vec![Vec::new(); self.n];
                let mut indeg = vec![0usize; self.n];
                for (i, &(s, t)) in edges.iter().enumerate() {
                    let (a, b) = if mask >> i & 1 == 0 { (s, t) } else { (t, s) };
                    succ[a].push(b);
                    indeg[b] += 1;
                }
                let mut heap: BinaryHeap<Reverse<usize>> =
                    (0..self.n).filter(|&s| indeg[s] == 0).map(Reverse).collect();
                let mut word = Word::empty();
                while let Some(Reverse(s)) = heap.pop() {
                    word.push(s);
                    for &t in &succ[s] {
                        indeg[t] -= 1;
                        if indeg[t] == 0 {
                            heap.push(Reverse(t));
                        }
                    }
                }
                word
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Whether `q2` is obtained from `q1` by swapping adjacent commuting
    /// letters. Decided by comparing the projections onto every
    /// non-commuting pair of generators (and letter counts), which
    /// characterizes commutation classes exactly.
    pub fn equal_up_to_commutations(&self, q1: &Word, q2: &Word) -> bool {
        if q1.len() != q2.len() || q1.occurrences(self.n) != q2.occurrences(self.n) {
            return false;
        }
        self.edges().into_iter().all(|(s, t)| {
            let keep = |x: usize| x == s || x == t;
            q1.restrict(keep) == q2.restrict(keep)
        })
    }

    /// The full commutation class of `q` by breadth-first search, sorted.
    /// Fails once more than `cap` words have been found.
    pub fn commutation_class(&self, q: &Word, cap: usize) -> Result<Vec<Word>> {
        let mut seen: HashSet<Word> = HashSet::from([q.clone()]);
        let mut queue = VecDeque::from([q.clone()]);
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len().saturating_sub(1) {
                if w[i] != w[i + 1] && self.commute(w[i], w[i + 1]) {
                    let mut v = w.clone();
                    v.swap(i, i + 1);
                    if seen.insert(v.clone()) {
                        if seen.len() > cap {
                            return Err(Error::ResourceLimit {
                                what: "commutation class size".into(),
                                limit: cap,
                            });
                        }
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut out: Vec<Word> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Positive-root indices of the inversion set of `w`.
    pub fn inversion_set(&self, w: &Element) -> BTreeSet<usize> {
        w.inversion_set().into_iter().collect()
    }
}
