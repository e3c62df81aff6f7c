use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;

use super::*;
use crate::gallery;
use crate::search::{Budget, Verdict};

fn bw(k: usize, l: &[usize]) -> BraidWord {
    BraidWord::new(k, l.to_vec()).unwrap()
}

/// All words reachable by single Artin relations.
fn artin_class(w: &[usize]) -> HashSet<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut q = VecDeque::new();
    seen.insert(w.to_vec());
    q.push_back(w.to_vec());
    while let Some(x) = q.pop_front() {
        let mut next = Vec::new();
        for j in 0..x.len().saturating_sub(1) {
            if x[j].abs_diff(x[j + 1]) >= 2 {
                let mut y = x.clone();
                y.swap(j, j + 1);
                next.push(y);
            }
        }
        for j in 0..x.len().saturating_sub(2) {
            if x[j] == x[j + 2] && x[j].abs_diff(x[j + 1]) == 1 {
                let mut y = x.clone();
                y[j] = x[j + 1];
                y[j + 1] = x[j];
                y[j + 2] = x[j + 1];
                next.push(y);
            }
        }
        for y in next {
            if seen.insert(y.clone()) {
                q.push_back(y);
            }
        }
    }
    seen
}

#[test]
fn normal_form_agrees_with_relation_closure() {
    let k = 4;
    let mut words = vec![Vec::new()];
    for _ in 0..5 {
        words = words
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..k).map(move |i| {
                    let mut x = w.clone();
                    x.push(i);
                    x
                })
            })
            .collect();
    }
    let mut classes: Vec<HashSet<Vec<usize>>> = Vec::new();
    for w in &words {
        if !classes.iter().any(|c| c.contains(w)) {
            classes.push(artin_class(w));
        }
    }
    for c in &classes {
        let forms: HashSet<NormalForm> = c.iter().map(|w| left_normal_form(&bw(k, w))).collect();
        assert_eq!(forms.len(), 1, "class of {:?}", c.iter().next());
    }
    let forms: HashSet<NormalForm> =
        classes.iter().map(|c| left_normal_form(&bw(k, c.iter().next().unwrap()))).collect();
    assert_eq!(forms.len(), classes.len());
}

#[test]
fn three_strand_example_braid() {
    let b = beta_of_scannable(&gallery::three_strand_example());
    assert_eq!(b.to_string(), "3 : 2 1 1 2 1 1 1 2 1 1");
}

#[test]
fn small_scannable_braids() {
    let node = beta_of_scannable(&ScannableDivide::new(2, &[], &[1], &[]).unwrap());
    assert_eq!(node.letters, vec![1, 1]);
    assert_eq!(components(&node), 2);
    let cusp = beta_of_scannable(&ScannableDivide::new(2, &[], &[1], &[1]).unwrap());
    assert_eq!(cusp.letters, vec![1, 1, 1]);
    assert_eq!(components(&cusp), 1);
}

#[test]
fn fence_word_braids() {
    let w = FenceWord::parse("k 5 s1 t2 s3 t4").unwrap();
    assert_eq!(beta_of_fence_word(&w).letters, vec![1, 3, 4, 2]);
    let w = FenceWord::parse("k 3 s2 s1 t1 t2 s2 s1 t1 s2").unwrap();
    assert_eq!(beta_of_fence_word(&w), bw(3, &[2, 1]).pow(4));
    let w = FenceWord::parse("k 3 s2 s1 s2").unwrap();
    assert_eq!(beta_of_fence_word(&w).letters, vec![2, 1, 2]);
}

#[test]
fn half_twists() {
    assert_eq!(delta(2).letters, vec![1]);
    assert_eq!(delta(3).letters, vec![1, 2, 1]);
    assert!(positive_equal(&delta(3), &bw(3, &[2, 1, 2])).unwrap());
    assert!(positive_equal(&delta(4), &bw(4, &[1, 3, 2, 1, 3, 2])).unwrap());
    assert!(positive_equal(&delta(4), &bw(4, &[3, 2, 1, 3, 2, 3])).unwrap());
    assert!(!positive_equal(&bw(2, &[1, 1]), &bw(2, &[1])).unwrap());
    assert!(positive_equal(&bw(2, &[1]), &bw(3, &[1])).is_err());
}

#[test]
fn delta_divisibility_examples() {
    let w = delta(4).pow(2).concat(&bw(4, &[1, 3])).unwrap();
    assert_eq!(delta_divisibility(&w), 2);
    assert_eq!(delta_divisibility(&bw(3, &[1])), 0);
    assert_eq!(delta_divisibility(&delta(3).pow(3)), 3);
    assert_eq!(left_normal_form(&BraidWord::new(3, vec![]).unwrap()).factors.len(), 0);
}

#[test]
fn transversal_cusps_contain_two_half_twists() {
    let (d1, _) = gallery::transversal_cusps();
    let b1 = beta_of_scannable(&d1);
    let target = delta(4).pow(2).concat(&bw(4, &[1, 3])).unwrap();
    assert!(positive_equal(&b1, &target).unwrap());
}

#[test]
fn permutations() {
    let p = underlying_permutation(&bw(3, &[2, 1]).pow(4));
    assert_eq!(cycle_count(&p), 1);
    assert_eq!(underlying_permutation(&delta(4).pow(4)), vec![0, 1, 2, 3]);
    assert_eq!(components(&delta(4).pow(4)), 4);
    assert_eq!(components(&BraidWord::new(5, vec![]).unwrap()), 5);
}

#[test]
fn solid_torus_examples() {
    let b = Budget::states(100_000);
    let u = bw(3, &[1, 2, 2, 1, 2]);
    let v = bw(3, &[2, 2, 1, 2, 1]);
    assert!(solid_torus_isotopic(&u, &v, &b).unwrap().is_equivalent());
    let v = solid_torus_isotopic(&bw(3, &[1, 1, 2]), &bw(3, &[1, 2, 2]), &b).unwrap();
    let w = v.witness().expect("equivalent").clone();
    let mut cur = bw(3, &[1, 1, 2]);
    for m in w {
        cur = m.apply(&cur).unwrap();
    }
    assert!(positive_equal(&cur, &bw(3, &[1, 2, 2])).unwrap());
    let d = solid_torus_isotopic(&bw(3, &[1, 1]), &bw(3, &[1, 2]), &b).unwrap();
    assert!(matches!(d, Verdict::DistinctByInvariant(_)));
}

#[test]
fn solid_torus_separates_by_exhaustion() {
    // same length and permutation type, different conjugacy classes
    let b = Budget::states(100_000);
    let v = solid_torus_isotopic(&bw(3, &[1, 1, 1, 1]), &bw(3, &[1, 1, 2, 2]), &b).unwrap();
    assert!(matches!(v, Verdict::DistinctByInvariant(_)), "{}", v);
}

#[test]
fn markov_examples() {
    let b = Budget::states(100_000);
    assert!(positive_isotopic(&bw(3, &[1, 2]), &bw(2, &[1]), &b).is_equivalent());
    assert!(matches!(positive_isotopic(&bw(2, &[1]), &bw(2, &[1, 1, 1]), &b), Verdict::DistinctByInvariant(_)));
    // the two A3 divides of the table
    let rows = gallery::quasihomogeneous_rows();
    let a3 = rows.iter().find(|r| r.name == "A3").unwrap();
    let u = beta_of_scannable(&a3.divides[0]);
    let v = beta_of_scannable(&a3.divides[1]);
    assert!(positive_isotopic(&u, &v, &b).is_equivalent());
}

#[test]
fn flip_h_is_a_cyclic_shift() {
    let b = Budget::states(200_000);
    let mut all = vec![gallery::three_strand_example()];
    for row in gallery::quasihomogeneous_rows() {
        all.extend(row.divides);
    }
    for s in all {
        let u = beta_of_scannable(&s);
        let v = beta_of_scannable(&crate::divide::klein_act(&s, crate::divide::Klein::FlipH));
        let r = solid_torus_isotopic(&u, &v, &b).unwrap();
        assert!(r.is_equivalent(), "{:?}: {}", s, r);
    }
}

#[test]
fn wiring_diagram_braid_is_delta_squared() {
    let s = crate::divide::wiring_diagram(4).unwrap();
    assert!(positive_equal(&beta_of_scannable(&s), &delta(4).pow(2)).unwrap());
}

#[test]
fn braid_text_round_trip() {
    let w = bw(4, &[1, 3, 2]);
    assert_eq!(BraidWord::parse(&w.to_string()).unwrap(), w);
    assert_eq!(BraidWord::parse("k 4 : 1 3 2").unwrap(), w);
    assert!(BraidWord::parse("3 : 1 3").is_err());
}

fn word_strategy() -> impl Strategy<Value = BraidWord> {
    (2usize..6).prop_flat_map(|k| proptest::collection::vec(1..k, 0..14).prop_map(move |l| BraidWord { k, letters: l }))
}

proptest! {
    #[test]
    fn normal_form_word_is_equal(w in word_strategy()) {
        let nf = left_normal_form(&w);
        prop_assert!(positive_equal(&nf.to_word(), &w).unwrap());
        prop_assert_eq!(left_normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn delta_power_is_monotone(w in word_strategy(), p in 0usize..3) {
        let dw = delta(w.k).pow(p).concat(&w).unwrap();
        prop_assert!(delta_divisibility(&dw) >= p);
    }

    #[test]
    fn equal_braids_share_length_and_permutation(w in word_strategy(), seed in 0usize..1000) {
        // a random relation applied to w
        let mut x = w.letters.clone();
        if x.len() >= 2 {
            let j = seed % (x.len() - 1);
            if x[j].abs_diff(x[j + 1]) >= 2 { x.swap(j, j + 1); }
        }
        let v = BraidWord { k: w.k, letters: x };
        prop_assert!(positive_equal(&w, &v).unwrap());
        prop_assert_eq!(underlying_permutation(&w), underlying_permutation(&v));
    }

    #[test]
    fn scannable_braid_length(k in 2usize..6, ev in proptest::collection::vec(1usize..5, 0..10)) {
        let events: Vec<usize> = ev.into_iter().map(|i| 1 + (i - 1) % (k - 1)).collect();
        let left: Vec<usize> = (1..k).step_by(2).collect();
        let s = ScannableDivide::new(k, &left, &events, &[]).unwrap();
        prop_assert_eq!(beta_of_scannable(&s).len(), 2 * events.len() + left.len());
    }
}
