use proptest::prelude::*;
use subwordlab::coxeter::{CoxeterSystem, Word};
use subwordlab::multicluster::multi_cluster_word;
use subwordlab::sorting::{
    has_intervening_neighbors, has_sin_property, phi_counts, recognize_multi_cluster_word, rotate_word, sorting_word,
    sorting_word_w0, w0_word,
};

fn sys(name: &str) -> CoxeterSystem {
    CoxeterSystem::from_name(name).unwrap()
}

fn w(letters: &[usize]) -> Word {
    Word::from_one_based(letters)
}

fn all_words(n: usize, len: usize) -> Vec<Word> {
    (0..n.pow(len as u32))
        .map(|mut x| {
            let mut v = Vec::with_capacity(len);
            for _ in 0..len {
                v.push(x % n);
                x /= n;
            }
            Word::new(v)
        })
        .collect()
}

#[test]
fn a4_sorting_word() {
    let a4 = sys("A4");
    let c = w(&[1, 3, 2, 4]);
    let rep = sorting_word_w0(&a4, &c).unwrap();
    assert_eq!(rep.word, w(&[1, 3, 2, 4, 1, 3, 2, 4, 1, 3]));
    assert_eq!(rep.phi, vec![3, 2, 3, 2]);
    assert_eq!(rep.factorization, vec![vec![0, 2, 1, 3], vec![0, 2, 1, 3], vec![0, 2]]);
    assert_eq!(sorting_word(&a4, &c, a4.longest_element()).unwrap(), rep.word);
}

#[test]
fn b2_and_trivial_sorting_words() {
    let b2 = sys("B2");
    assert_eq!(w0_word(&b2, &w(&[1, 2])).unwrap(), w(&[1, 2, 1, 2]));
    assert_eq!(phi_counts(&b2, &w(&[1, 2])).unwrap(), vec![2, 2]);
    assert_eq!(sorting_word(&b2, &w(&[1, 2]), &b2.identity()).unwrap(), Word::empty());
    let a1 = sys("A1");
    assert_eq!(w0_word(&a1, &w(&[1])).unwrap(), w(&[1]));
}

/// The Bourbaki index (1-based) of each generator in the alternate labelling
/// used for the E6 example: s1..s6 ↦ 6, 5, 2, 1, 3, 4.
const E6_ALT_TO_BOURBAKI: [usize; 6] = [6, 5, 2, 1, 3, 4];

fn e6_from_alt(letters: &[usize]) -> Word {
    Word::new(letters.iter().map(|&s| E6_ALT_TO_BOURBAKI[s - 1] - 1).collect())
}

#[test]
fn e6_label_independent() {
    let e6 = sys("E6");
    let c = e6_from_alt(&[3, 5, 4, 6, 2, 1]);
    let rep = sorting_word_w0(&e6, &c).unwrap();
    let mut phi = rep.phi.clone();
    phi.sort();
    assert_eq!(phi, vec![5, 5, 6, 6, 7, 7]);
    assert_eq!(rep.word.len(), 36);
    let sizes: Vec<usize> = rep.factorization.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![6, 6, 6, 6, 6, 4, 2]);
}

#[test]
fn e6_mapped_exact() {
    let e6 = sys("E6");
    let c = e6_from_alt(&[3, 5, 4, 6, 2, 1]);
    let expected = c.repeat(5).concat(&e6_from_alt(&[3, 5, 4, 6])).concat(&e6_from_alt(&[5, 4]));
    assert_eq!(w0_word(&e6, &c).unwrap(), expected);
    // ψ in the alternate labels: s6, s3 fixed; s2 ↔ s5; s1 ↔ s4
    for (a, b) in [(6, 6), (3, 3), (2, 5), (1, 4)] {
        assert_eq!(e6.psi(E6_ALT_TO_BOURBAKI[a - 1] - 1), E6_ALT_TO_BOURBAKI[b - 1] - 1);
    }
    let phi = phi_counts(&e6, &c).unwrap();
    let at = |s: usize| phi[E6_ALT_TO_BOURBAKI[s - 1] - 1];
    assert_eq!([at(1), at(2), at(3), at(6), at(4), at(5)], [5, 5, 6, 6, 7, 7]);
}

#[test]
fn sorting_word_invariants_all_types() {
    for name in ["A5", "B4", "D5", "E6", "E7", "F4", "G2", "H3", "H4", "I2(5)", "I2(8)"] {
        let s = sys(name);
        for c in s.enumerate_coxeter_words().into_iter().take(12) {
            let rep = sorting_word_w0(&s, &c).unwrap();
            assert_eq!(rep.phi.iter().sum::<usize>(), s.num_positive_roots(), "{name} {c}");
            assert!(s.is_reduced(&rep.word));
            assert_eq!(&s.element_from_word(&rep.word), s.longest_element());
            for (i, block) in rep.factorization.iter().enumerate() {
                let expect: Vec<usize> = c.iter().copied().filter(|&g| rep.phi[g] > i).collect();
                assert_eq!(block, &expect);
            }
            // w0(c) ends, up to commutations, with ψ(c)
            let tail = c.map(|g| s.psi(g));
            assert!(is_suffix_up_to_commutation(&s, &rep.word, &tail), "{name} {c}");
        }
    }
}

/// Each letter of `tail` can be moved to the end in order: peel the last
/// occurrence of `tail[n-1]`, which must commute with everything after it.
fn is_suffix_up_to_commutation(s: &CoxeterSystem, word: &Word, tail: &[usize]) -> bool {
    let mut rest = word.to_vec();
    for &t in tail.iter().rev() {
        let Some(p) = rest.iter().rposition(|&x| x == t) else { return false };
        if rest[p + 1..].iter().any(|&x| !s.commute(x, t)) {
            return false;
        }
        rest.remove(p);
    }
    true
}

#[test]
fn remark_identities() {
    for name in ["A3", "B3", "D4"] {
        let s = sys(name);
        let h = s.coxeter_number();
        for c in s.enumerate_coxeter_words() {
            let w0c = w0_word(&s, &c).unwrap();
            let rev_c = c.reversed();
            let psi_rev_c = rev_c.map(|g| s.psi(g));
            let first = w0_word(&s, &psi_rev_c).unwrap().reversed();
            assert!(s.equal_up_to_commutations(&w0c, &first), "{name} {c}: first identity");

            let second = w0c.concat(&w0_word(&s, &rev_c).unwrap().reversed());
            assert!(s.equal_up_to_commutations(&c.repeat(h), &second), "{name} {c}: second identity");

            let phi = phi_counts(&s, &c).unwrap();
            let phi_rev = phi_counts(&s, &rev_c).unwrap();
            for g in 0..s.rank() {
                assert_eq!(phi[g] + phi_rev[g], h, "{name} {c}: third identity");
                assert_eq!(phi[g] + phi[s.psi(g)], h, "{name} {c}: third identity");
            }
        }
    }
}

#[test]
fn rotation_examples() {
    let b2 = sys("B2");
    assert_eq!(rotate_word(&b2, &w(&[1, 2, 1, 2, 1, 2])).unwrap(), w(&[2, 1, 2, 1, 2, 1]));
    let a2 = sys("A2");
    assert_eq!(rotate_word(&a2, &w(&[1, 2, 1])).unwrap(), w(&[2, 1, 2]));
    assert!(rotate_word(&a2, &Word::empty()).is_err());
}

#[test]
fn rotation_along_c_gives_conjugate_coxeter_element() {
    for name in ["A4", "B3", "D4", "H3"] {
        let s = sys(name);
        for c in s.enumerate_coxeter_words() {
            for k in 0..3 {
                let mut q = multi_cluster_word(&s, &c, k).unwrap();
                let mut current = c.clone();
                for _ in 0..s.rank() {
                    q = rotate_word(&s, &q).unwrap();
                    let mut next = current[1..].to_vec();
                    next.push(current[0]);
                    current = Word::new(next);
                    let target = multi_cluster_word(&s, &current, k).unwrap();
                    assert!(s.equal_up_to_commutations(&q, &target), "{name} {c} k={k}");
                }
                assert!(s.equal_up_to_commutations(&q, &multi_cluster_word(&s, &c, k).unwrap()));
            }
        }
    }
}

#[test]
fn sin_examples() {
    let b2 = sys("B2");
    assert!(has_sin_property(&b2, &w(&[1, 2, 1, 2, 1, 2])));
    let a2 = sys("A2");
    assert!(!has_sin_property(&a2, &w(&[1, 2, 1, 1])));
    assert!(!has_sin_property(&a2, &w(&[1, 2])));
    assert!(has_intervening_neighbors(&a2, &w(&[1, 2, 1, 2])));
    assert!(!has_intervening_neighbors(&a2, &w(&[1, 1, 2])));
}

#[test]
fn recognize_examples() {
    let b2 = sys("B2");
    assert_eq!(recognize_multi_cluster_word(&b2, &w(&[1, 2]).repeat(3)), Some((w(&[1, 2]), 1)));
    let a2 = sys("A2");
    assert_eq!(recognize_multi_cluster_word(&a2, &w(&[1, 2, 1, 2, 1])), Some((w(&[1, 2]), 1)));
    assert_eq!(recognize_multi_cluster_word(&a2, &w(&[1, 1, 2])), None);
    let b3 = sys("B3");
    assert_eq!(recognize_multi_cluster_word(&b3, &w(&[1, 2, 3]).repeat(5)), Some((w(&[1, 2, 3]), 2)));
}

fn sin_equivalence(name: &str, len: usize) {
    let s = sys(name);
    let n = s.rank();
    let big_n = s.num_positive_roots();
    let cs = s.enumerate_coxeter_words();
    let mut sin_count = 0;
    for q in all_words(n, len) {
        let sin = has_sin_property(&s, &q);
        let is_mc = len >= big_n
            && (len - big_n) % n == 0
            && cs.iter().any(|c| s.equal_up_to_commutations(&q, &multi_cluster_word(&s, c, (len - big_n) / n).unwrap()));
        assert_eq!(sin, is_mc, "{name} {q}");
        sin_count += usize::from(sin);
    }
    assert!(sin_count > 0);
}

#[test]
fn sin_equivalence_a2_length_5() {
    sin_equivalence("A2", 5);
}

#[test]
fn sin_equivalence_b2_length_6() {
    sin_equivalence("B2", 6);
}

#[test]
fn sin_equivalence_a3_length_9() {
    // k = 1 in A3, beyond the rank-2 cases
    sin_equivalence("A3", 9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sorting_word_is_reduced_prefix_of_c_infinity(
        (name, idx, letters) in prop::sample::select(vec!["A4", "B3", "D4", "H3", "F4"]).prop_flat_map(|name| {
            let n = sys(name).rank();
            (Just(name), 0..16usize, prop::collection::vec(0..n, 0..30))
        })
    ) {
        let s = sys(name);
        let cs = s.enumerate_coxeter_words();
        let c = &cs[idx % cs.len()];
        let e = s.element_from_word(&Word::new(letters));
        let sw = sorting_word(&s, c, &e).unwrap();
        prop_assert!(s.is_reduced(&sw));
        prop_assert_eq!(s.element_from_word(&sw), e);
        prop_assert_eq!(sorting_word(&s, c, &s.element_from_word(&sw)).unwrap(), sw);
    }
}
