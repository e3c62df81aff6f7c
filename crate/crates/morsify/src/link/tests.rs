use proptest::prelude::*;

use super::*;
use crate::braid::{delta, BraidMove};

fn word(k: usize, l: &[usize]) -> BraidWord {
    BraidWord::new(k, l.to_vec()).unwrap()
}

fn poly(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, c.to_vec())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `1 - t^n`.
fn one_minus(n: usize) -> LaurentPoly {
    let mut c = vec![0; n + 1];
    c[0] = 1;
    c[n] = -1;
    poly(&c)
}

/// Closed-form Alexander polynomial of the (p, q) torus link:
/// `(1-t) (1-t^(pq/d))^d / ((1-t^p)(1-t^q))` with `d = gcd(p, q)`.
fn torus_oracle(p: usize, q: usize) -> LaurentPoly {
    let d = gcd(p, q);
    let mut num = one_minus(1);
    for _ in 0..d {
        num = num.mul(&one_minus(p * q / d));
    }
    num.div_exact(&one_minus(p)).unwrap().div_exact(&one_minus(q)).unwrap().normalized()
}

fn torus_word(p: usize, q: usize) -> BraidWord {
    let block: Vec<usize> = (1..p).rev().collect();
    word(p, &block).pow(q)
}

#[test]
fn unknots() {
    let e = word(1, &[]);
    let d = closure(&e);
    assert_eq!(d.crossings.len(), 0);
    assert_eq!(component_count(&d), 1);
    assert_eq!(alexander(&e).unwrap(), LaurentPoly::one());
    assert_eq!(alexander(&word(2, &[1])).unwrap(), LaurentPoly::one());
    assert_eq!(alexander_of_diagram(&closure(&word(2, &[1]))).unwrap(), LaurentPoly::one());
    assert_eq!(kauffman_bracket(&d, DEFAULT_CAP).unwrap(), LaurentPoly::one());
}

#[test]
fn hopf_and_trefoil() {
    let hopf = closure(&word(2, &[1, 1]));
    assert_eq!(component_count(&hopf), 2);
    assert_eq!(alexander(&word(2, &[1, 1])).unwrap(), poly(&[-1, 1]));
    let tre = word(2, &[1, 1, 1]);
    let d = closure(&tre);
    assert_eq!(d.crossings.len(), 3);
    assert_eq!(component_count(&d), 1);
    assert_eq!(alexander(&tre).unwrap(), poly(&[1, -1, 1]));
    assert_eq!(alexander_of_diagram(&d).unwrap(), poly(&[1, -1, 1]));
    let a = fingerprint_of_braid(&word(2, &[1, 1]), DEFAULT_CAP).unwrap();
    let b = fingerprint_of_braid(&tre, DEFAULT_CAP).unwrap();
    assert!(matches!(a.compare(&b), FingerprintMatch::ProvenDistinct(_)));
}

#[test]
fn trefoil_jones_by_brute_force() {
    // brute force over all 2^3 states of the closure of sigma_1^3
    let d = closure(&word(2, &[1, 1, 1]));
    let mut total = LaurentPoly::zero();
    for mask in 0..8u32 {
        let mut parent: Vec<usize> = (0..=6).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut a_count = 0i64;
        for (i, c) in d.crossings.iter().enumerate() {
            let [p, q, r, s] = c.arcs;
            let pairs = if mask >> i & 1 == 0 {
                a_count += 1;
                [(p, q), (r, s)]
            } else {
                a_count -= 1;
                [(p, s), (q, r)]
            };
            for (x, y) in pairs {
                let (fx, fy) = (find(&mut parent, x), find(&mut parent, y));
                parent[fx] = fy;
            }
        }
        let loops = (1..=6).filter(|&l| find(&mut parent, l) == l).count();
        let mut term = LaurentPoly::monomial(1, a_count);
        for _ in 1..loops {
            term = term.mul(&LaurentPoly::from_coeffs(-2, vec![-1, 0, 0, 0, -1]));
        }
        total = total.add(&term);
    }
    assert_eq!(kauffman_bracket(&d, DEFAULT_CAP).unwrap(), total);
    // positive (right-handed) trefoil: t + t^3 - t^4, in powers of t^(1/2)
    let j = jones(&d, DEFAULT_CAP).unwrap();
    assert_eq!(j, LaurentPoly::from_coeffs(2, vec![1, 0, 0, 0, 1, 0, -1]));
    assert_eq!(format_jones(&j), "1*t^1 + 1*t^3 - 1*t^4");
}

#[test]
fn hopf_jones_has_half_powers() {
    let j = jones(&closure(&word(2, &[1, 1])), DEFAULT_CAP).unwrap();
    // -t^(1/2) - t^(5/2)
    assert_eq!(j, LaurentPoly::from_coeffs(1, vec![-1, 0, 0, 0, -1]));
}

#[test]
fn cap_guard() {
    let d = closure(&word(2, &[1; 30]));
    assert_eq!(kauffman_bracket(&d, DEFAULT_CAP), Err(LinkError::CapExceeded { crossings: 30, cap: 24 }));
    assert!(fingerprint_of_braid(&word(2, &[1; 30]), DEFAULT_CAP).unwrap().jones.is_none());
}

#[test]
fn torus_formula() {
    for p in 2..=4 {
        for q in 1..=6 {
            let w = torus_word(p, q);
            assert_eq!(alexander(&w).unwrap(), torus_oracle(p, q), "T({}, {})", p, q);
            if p * q <= 12 {
                assert_eq!(alexander_of_diagram(&closure(&w)).unwrap(), torus_oracle(p, q), "T({}, {})", p, q);
            }
        }
    }
}

#[test]
fn torus_knot_three_four() {
    let w = word(3, &[2, 1, 2, 1, 2, 1, 2, 1]);
    let d = closure(&w);
    assert_eq!(d.crossings.len(), 8);
    assert_eq!(component_count(&d), 1);
    assert_eq!(alexander(&w).unwrap(), poly(&[1, -1, 0, 1, 0, -1, 1]));
}

#[test]
fn delta_four_squared_squared() {
    let w = delta(4).pow(4);
    assert_eq!(component_count(&closure(&w)), 4);
    let f = fingerprint_of_braid(&w, DEFAULT_CAP).unwrap();
    assert_eq!(f.components, 4);
    assert!(f.jones.is_some());
}

#[test]
fn free_loops_and_split_links() {
    let d = closure(&word(3, &[1, 1, 1]));
    assert_eq!(d.free_loops, 1);
    assert_eq!(component_count(&d), 2);
    assert!(alexander(&word(3, &[1, 1, 1])).unwrap().is_zero());
    assert!(alexander_of_diagram(&d).unwrap().is_zero());
}

#[test]
fn pd_round_trip_and_errors() {
    let d = closure(&word(3, &[1, 2, 1, 2]));
    assert_eq!(LinkDiagram::parse(&d.to_string()).unwrap(), d);
    assert!(matches!(LinkDiagram::parse("X 1 2 3 4 +"), Err(LinkError::Malformed(_))));
    assert!(matches!(LinkDiagram::parse("X 1 2 1 2 *"), Err(LinkError::Parse { .. })));
    // a negative kink: under-in 1, over-in 2, under-out 2, over-out 1
    let kink = LinkDiagram::parse("X 1 2 2 1 -").unwrap();
    assert_eq!(component_count(&kink), 1);
    assert_eq!(alexander_of_diagram(&kink).unwrap(), LaurentPoly::one());
    let j = jones(&kink, DEFAULT_CAP).unwrap();
    assert_eq!(j, LaurentPoly::one());
}

#[test]
fn mirror_has_mirrored_jones() {
    let d = closure(&word(2, &[1, 1, 1]));
    let mirror = LinkDiagram::new(
        d.crossings
            .iter()
            .map(|c| {
                // swap over and under: the old over-in becomes the under-in
                let [a, b, cc, e] = c.arcs;
                Crossing { arcs: [e, a, b, cc], sign: -c.sign }
            })
            .collect(),
        0,
    )
    .unwrap();
    let j = jones(&d, DEFAULT_CAP).unwrap();
    assert_eq!(jones(&mirror, DEFAULT_CAP).unwrap(), j.mirror());
}

fn arb_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(|k| proptest::collection::vec(1..k, 0..10).prop_map(move |l| BraidWord::new(k, l).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn components_match_permutation(w in arb_word()) {
        prop_assert_eq!(component_count(&closure(&w)), components(&w));
        prop_assert_eq!(closure(&w).crossings.len(), w.len());
    }

    #[test]
    fn diagram_and_burau_routes_agree(w in arb_word()) {
        prop_assert_eq!(alexander_of_diagram(&closure(&w)).unwrap(), alexander(&w).unwrap());
    }

    #[test]
    fn alexander_invariant_under_moves(w in arb_word(), moves in proptest::collection::vec(0usize..8, 0..6)) {
        let base = fingerprint_of_braid(&w, 12).unwrap();
        let mut cur = w.clone();
        for m in moves {
            let mv = match m {
                0 => BraidMove::MarkovInsert,
                1 => BraidMove::MarkovRemove,
                x => {
                    let i = 1 + x % (cur.k - 1).max(1);
                    if x % 2 == 0 { BraidMove::ShiftLeft(i) } else { BraidMove::ShiftRight(i) }
                }
            };
            if cur.k >= 6 && mv == BraidMove::MarkovInsert {
                continue;
            }
            if let Some(next) = mv.apply(&cur) {
                cur = next;
            }
        }
        let f = fingerprint_of_braid(&cur, 12).unwrap();
        prop_assert_eq!(f.components, base.components);
        prop_assert_eq!(&f.alexander, &base.alexander);
        if let (Some(a), Some(b)) = (&f.jones, &base.jones) {
            prop_assert_eq!(a, b);
        }
    }
}
