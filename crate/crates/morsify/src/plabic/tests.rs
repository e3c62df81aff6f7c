use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::agquiver::quiver_of_divide;
use crate::braid::{beta_of_fence_word, beta_of_scannable, positive_equal, BraidWord};
use crate::divide::{yb_sites, PlanarDivide};
use crate::gallery;
use crate::link::{
    alexander_of_diagram, component_count, fingerprint_of_braid, fingerprint_of_diagram, FingerprintMatch, LaurentPoly,
};
use crate::quiver::{is_isomorphic, Quiver};
use crate::search::Budget;

fn fw(text: &str) -> FenceWord {
    FenceWord::parse(text).unwrap()
}

fn fence(text: &str) -> PlabicGraph {
    fence_of_word(&fw(text)).unwrap()
}

fn iso_or_reversed(a: &Quiver, b: &Quiver) -> bool {
    is_isomorphic(a, b) || is_isomorphic(&a.reversed(), b)
}

fn poly(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, c.to_vec())
}

/// A word using every index, built from random letters, whose fence is a
/// plabic graph (some fences have an internal face with only boundary faces
/// and same-colored neighbors around it).
fn random_word(rng: &mut impl Rng, k: usize, len: usize) -> FenceWord {
    loop {
        let mut letters: Vec<FenceLetter> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..k);
                if rng.gen_bool(0.5) {
                    FenceLetter::Sigma(i)
                } else {
                    FenceLetter::Tau(i)
                }
            })
            .collect();
        for i in 1..k {
            if !letters.iter().any(|l| l.index() == i) {
                let at = rng.gen_range(0..=letters.len());
                letters.insert(at, FenceLetter::Sigma(i));
            }
        }
        let w = FenceWord::new(k, letters).unwrap();
        if fence_of_word(&w).is_ok() {
            return w;
        }
    }
}

/// All words reachable by swapping adjacent letters with far indices.
fn commutation_class(w: &FenceWord) -> HashSet<Vec<FenceLetter>> {
    let mut seen = HashSet::from([w.letters.clone()]);
    let mut queue = VecDeque::from([w.letters.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if cur[i].index().abs_diff(cur[i + 1].index()) >= 2 {
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

#[test]
fn single_chord_graph() {
    let p = PlabicGraph::parse("v 0 w d\nv 1 b d\nrot 0 0\nrot 1 1\nedge 0 1\nboundary 0 1\n").unwrap();
    assert_eq!(p.internal_face_count(), 0);
    assert_eq!(quiver_of_plabic(&p).n(), 0);
    let o = admissible_orientation(&p).unwrap();
    let d = link_of_oriented_plabic(&p, &o).unwrap();
    assert_eq!(component_count(&d), 1);
    assert!(d.crossings.is_empty());
}

#[test]
fn plb_round_trip_and_errors() {
    let p = fence("k 3 s2 s1 t1 t2 s2 s1 t1 s2");
    assert_eq!(PlabicGraph::parse(&p.to_string()).unwrap(), p);
    assert!(matches!(PlabicGraph::parse("v 0 q d\n"), Err(PlabicError::Parse { line: 1, .. })));
    // an internal vertex of degree one
    let bad = "v 0 w d\nv 1 b i\nrot 0 0\nrot 1 1\nedge 0 1\nboundary 0\n";
    assert!(matches!(PlabicGraph::parse(bad), Err(PlabicError::Invalid(_))));
}

#[test]
fn small_fences() {
    let p = fence("k 2 s1");
    assert_eq!(p.internal_face_count(), 0);
    let p = fence("k 2 s1 t1");
    assert_eq!(p.internal_face_count(), 1);
    assert!(enumerate_moves(&p).iter().any(|m| matches!(m, PlabicMove::Square { .. })));
    assert_eq!(fence_of_word(&fw("k 2")), Err(PlabicError::DisconnectedFence(1, 2)));
    assert_eq!(fence_of_word(&fw("k 3 s1 t1")), Err(PlabicError::DisconnectedFence(2, 3)));
    // an internal face whose only internal neighbor lies across no edge
    assert!(matches!(fence_of_word(&fw("k 3 s1 s1 s2 s2")), Err(PlabicError::Invalid(_))));
}

#[test]
fn fence_of_long_word() {
    let w = fw("k 3 s2 s1 t1 t2 s2 s1 t1 s2");
    let p = fence_of_word(&w).unwrap();
    assert_eq!(p.vertex_count(), 6 + 16);
    assert_eq!(p.internal_face_count(), 8 - 2);
    assert_eq!(beta_of_fence_word(&w), BraidWord::new(3, vec![2, 1, 2, 1, 2, 1, 2, 1]).unwrap());
    let o = admissible_orientation(&p).unwrap();
    let d = link_of_oriented_plabic(&p, &o).unwrap();
    // the (3,4) torus knot
    assert_eq!(component_count(&d), 1);
    assert_eq!(alexander_of_diagram(&d).unwrap(), poly(&[1, -1, 0, 1, 0, -1, 1]));
}

#[test]
fn word_round_trip_on_examples() {
    for text in ["k 2 s1", "k 2 t1 s1 t1", "k 3 s2 s1 t1 t2 s2 s1 t1 s2", "k 4 s2 s1 s3 t2"] {
        let w = fw(text);
        let back = word_of_fence(&fence_of_word(&w).unwrap()).unwrap();
        assert!(commutation_class(&w).contains(&back.letters), "{}", text);
    }
    let p = attach_plabic(&gallery::parse(gallery::NODE), &TailSpec::default()).unwrap();
    assert!(matches!(word_of_fence(&p), Err(PlabicError::NotAFence(_))));
}

#[test]
fn fence_orientation_runs_right_and_up_from_white() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let k = rng.gen_range(2..=4);
        let len = rng.gen_range(0..8);
        let w = random_word(&mut rng, k, len);
        let p = fence_of_word(&w).unwrap();
        let o = admissible_orientation(&p).unwrap();
        assert!(is_acyclic(&p, &o));
        let vert = p.vert();
        let first = |h: usize| p.rot[vert[h]][0] == h;
        for h in 0..p.twin.len() {
            let v = vert[h];
            if first(h) && !(p.on_boundary[v] && p.color[v] == Color::Black) {
                // an eastward half-edge
                assert!(o.out[h], "{}", w);
            } else if !first(h) && !first(p.twin[h]) {
                // a connector, oriented from white to black
                assert_eq!(o.out[h], p.color[v] == Color::White, "{}", w);
            }
        }
    }
}

#[test]
fn unorientable_graph() {
    let p = PlabicGraph::parse(gallery::UNORIENTABLE_PLABIC).unwrap();
    assert_eq!(p.balance(), 0);
    assert_eq!(p.internal_face_count(), 2);
    assert_eq!(admissible_orientation(&p), None);
}

#[test]
fn unbalanced_graph_has_no_orientation() {
    let mut p = fence("k 2 s1 t1");
    let b = p.boundary[0];
    p.color[b] = Color::White;
    assert_ne!(p.balance(), 0);
    assert_eq!(admissible_orientation(&p), None);
}

#[test]
fn fence_links_match_braid_closures() {
    for row in gallery::quasihomogeneous_rows() {
        for s in &row.divides {
            let p = fence_of_divide(s).unwrap();
            let o = admissible_orientation(&p).unwrap();
            let d = link_of_oriented_plabic(&p, &o).unwrap();
            let a = fingerprint_of_diagram(&d, 16).unwrap();
            let b = fingerprint_of_braid(&beta_of_scannable(s), 16).unwrap();
            assert_eq!((a.components, &a.alexander), (b.components, &b.alexander), "{} {}", row.name, s);
            assert_eq!(a.compare(&b), FingerprintMatch::ConsistentWithEquivalent);
        }
    }
}

#[test]
fn trefoil_from_a2_fence() {
    let s = &gallery::quasihomogeneous_rows()[1].divides[0];
    let w = fence_word_of_divide(s);
    assert_eq!(w.to_string(), "k 2 s1 t1 s1");
    assert_eq!(beta_of_fence_word(&w).letters, vec![1, 1, 1]);
    let p = fence_of_divide(s).unwrap();
    let d = link_of_oriented_plabic(&p, &admissible_orientation(&p).unwrap()).unwrap();
    assert_eq!(alexander_of_diagram(&d).unwrap(), poly(&[1, -1, 1]));
}

#[test]
fn fence_of_divide_matches_divide() {
    for row in gallery::quasihomogeneous_rows() {
        for s in &row.divides {
            let p = fence_of_divide(s).unwrap();
            let w = word_of_fence(&p).unwrap();
            assert!(positive_equal(&beta_of_fence_word(&w), &beta_of_scannable(s)).unwrap(), "{}", s);
            let q = quiver_of_divide(&s.to_planar()).unwrap();
            assert!(iso_or_reversed(&quiver_of_plabic(&p), &q), "{} {}", row.name, s);
        }
    }
}

fn planar_gallery() -> Vec<PlanarDivide> {
    let mut v: Vec<PlanarDivide> =
        [gallery::NODE, gallery::TWO_ARCS, gallery::FIGURE_EIGHT, gallery::E6_LEFT, gallery::E6_RIGHT]
            .iter()
            .map(|t| gallery::parse(t))
            .collect();
    v.push(gallery::x6y4_nested());
    v.push(gallery::x6y4_nested_after_yb());
    for row in gallery::quasihomogeneous_rows() {
        v.extend(row.divides.iter().map(|s| s.to_planar()));
    }
    v
}

#[test]
fn attached_graph_has_the_divide_quiver() {
    for d in planar_gallery() {
        if d.circles > 0 {
            assert!(matches!(attach_plabic(&d, &TailSpec::default()), Err(PlabicError::Unsupported(_))));
            continue;
        }
        let p = attach_plabic(&d, &TailSpec::default()).unwrap();
        assert_eq!(p.vertex_count(), 4 * d.nodes() + d.ends());
        assert!(iso_or_reversed(&quiver_of_plabic(&p), &quiver_of_divide(&d).unwrap()), "{}", d);
    }
    let node = attach_plabic(&gallery::parse(gallery::NODE), &TailSpec::default()).unwrap();
    assert_eq!(node.internal_face_count(), 1);
    assert_eq!(node.boundary.len(), 4);
}

#[test]
fn tail_spec_colors_endpoints() {
    let d = gallery::parse(gallery::NODE);
    let spec = TailSpec { colors: vec![Some(Color::Black), None, Some(Color::Black), None] };
    let p = attach_plabic(&d, &spec).unwrap();
    let colors: Vec<Color> = p.boundary.iter().map(|&b| p.color[b]).collect();
    let by_end: Vec<Color> = d.boundary.iter().map(|&e| spec.colors[e].unwrap_or(Color::White)).collect();
    assert_eq!(colors, by_end);
}

#[test]
fn square_on_fence_is_one_mutation() {
    let p = fence("k 2 s1 t1 s1 t1");
    let q = quiver_of_plabic(&p);
    let (walks, _) = p.faces();
    for m in enumerate_moves(&p) {
        if let PlabicMove::Square { edge } = m {
            let z = walks.iter().position(|w| w.contains(&edge)).unwrap();
            let after = quiver_of_plabic(&apply_move(&p, &m).unwrap());
            assert!(is_isomorphic(&after, &q.mutate(z).unwrap()));
        }
    }
}

#[test]
fn tail_swap_at_the_end_of_a_word() {
    // removing the last tail and attaching one of the other color at the
    // same place turns a final tau into a sigma, up to flips
    let p = fence("k 2 s1 t1");
    let b = p.boundary[1];
    let removed = apply_move(&p, &PlabicMove::TailRemove { vertex: b });
    assert!(removed.is_err(), "the tail at a white-black pair of equal color is kept");
    let q = fence("k 2 s1 s1");
    let v = move_equivalent(&p, &q, &MoveSearch::default());
    assert!(v.is_equivalent(), "{}", v);
}

#[test]
fn move_equivalence_of_neighbors() {
    let p = fence("k 3 s1 t2 s2 t1 s1");
    for m in enumerate_moves(&p).into_iter().take(12) {
        let q = apply_move(&p, &m).unwrap();
        let v = move_equivalent(&p, &q, &MoveSearch::default());
        let w = v.witness().unwrap();
        assert!(w.forward.len() + w.backward.len() <= 1, "{} {:?}", m, w);
    }
}

#[test]
fn fence_and_its_braid_normalization() {
    for text in ["k 2 t1 s1", "k 2 s1 t1 s1", "k 3 t1 s2 t2 s1"] {
        let w = fw(text);
        let p = fence_of_word(&w).unwrap();
        let q = fence_of_word(&braid_normalized(&w)).unwrap();
        let v = move_equivalent(&p, &q, &MoveSearch::default());
        assert!(v.is_equivalent(), "{} {}", text, v);
    }
}

#[test]
fn distinct_by_invariant() {
    let p = fence("k 2 s1 t1");
    let q = fence("k 2 s1 t1 s1 t1");
    assert!(matches!(move_equivalent(&p, &q, &MoveSearch::default()), crate::search::Verdict::DistinctByInvariant(_)));
}

#[test]
fn square_move_neighbors_are_not_separated_by_degrees() {
    let p = fence("k 3 s2 s1 t1 t2 s2 s1 t1 s2");
    for m in enumerate_moves(&p).into_iter().filter(|m| matches!(m, PlabicMove::Square { .. })) {
        let q = apply_move(&p, &m).unwrap();
        let v = move_equivalent(&p, &q, &MoveSearch::default());
        assert!(v.is_equivalent(), "{}: {}", m, v);
    }
}

#[test]
fn move_text_round_trip() {
    let p = fence("k 3 s2 s1 t1 t2 s2 s1 t1 s2");
    for m in enumerate_moves(&p) {
        assert_eq!(PlabicMove::parse(&m.to_string()).unwrap(), m);
    }
    assert!(PlabicMove::parse("twist 3").is_err());
}

#[test]
fn yang_baxter_as_moves() {
    let d = gallery::x6y4_nested();
    let sites = yb_sites(&d);
    assert!(!sites.is_empty());
    let site = sites[0];
    let moves = yb_as_moves(&d, site, &Budget::states(200_000)).unwrap();
    let mut p = attach_plabic(&d, &TailSpec::default()).unwrap();
    for m in &moves {
        p = apply_move(&p, m).unwrap();
    }
    let after = attach_plabic(&crate::divide::apply_yb(&d, site).unwrap(), &TailSpec::default()).unwrap();
    assert!(iso_or_reversed(&quiver_of_plabic(&p), &quiver_of_plabic(&after)));
    assert_eq!(p.internal_face_count(), after.internal_face_count());
}

/// Applies `steps` random legal moves, checking each against the quiver
/// and the transported orientation.
fn random_walk(seed: u64, steps: usize, check_link: bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(2..=3);
    let len = rng.gen_range(1..6);
    let w = random_word(&mut rng, k, len);
    let mut p = fence_of_word(&w).unwrap();
    let mut o = admissible_orientation(&p).unwrap();
    let base = fingerprint_of_diagram(&link_of_oriented_plabic(&p, &o).unwrap(), 0).unwrap();
    for _ in 0..steps {
        let opts = MoveOptions { tail_attach: p.vertex_count() < 30, ..MoveOptions::default() };
        let moves = enumerate_moves_with(&p, &opts);
        let m = moves[rng.gen_range(0..moves.len())];
        let q = apply_move(&p, &m).unwrap();
        q.validate().unwrap();
        assert_eq!(q.balance(), p.balance());
        let (qa, qb) = (quiver_of_plabic(&p), quiver_of_plabic(&q));
        match m {
            PlabicMove::Square { edge } => {
                let z = p.faces().0.iter().position(|w| w.contains(&edge)).unwrap();
                assert!(is_isomorphic(&qb, &qa.mutate(z).unwrap()), "{} on\n{}", m, p);
            }
            _ => assert!(is_isomorphic(&qa, &qb), "{} on\n{}", m, p),
        }
        let t = transport_orientation(&p, &o, &m).unwrap();
        assert_eq!(Some(t.clone()), admissible_orientation(&q), "{} on\n{}", m, p);
        if check_link {
            let f = fingerprint_of_diagram(&link_of_oriented_plabic(&q, &t).unwrap(), 0).unwrap();
            assert_eq!(f.components, base.components);
            assert_eq!(f.alexander, base.alexander);
        }
        p = q;
        o = t;
    }
}

#[test]
fn random_moves_on_fences() {
    for seed in 0..20 {
        random_walk(seed, 10, true);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn word_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(2..=4);
        let len = rng.gen_range(0..6);
        let w = random_word(&mut rng, k, len);
        let back = word_of_fence(&fence_of_word(&w).unwrap()).unwrap();
        prop_assert!(commutation_class(&w).contains(&back.letters));
    }

    #[test]
    fn moves_keep_quiver_and_orientation(seed in any::<u64>()) {
        random_walk(seed, 6, false);
    }
}
