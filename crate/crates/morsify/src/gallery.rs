//! Worked example divides, hand-encoded.

use crate::divide::{planar_from_turns, PlanarDivide, ScannableDivide};

fn sd(k: usize, l: &[usize], e: &[usize], r: &[usize]) -> ScannableDivide {
    ScannableDivide::new(k, l, e, r).expect("gallery divide")
}

/// A quasihomogeneous singularity `x^a + y^b` and the scannable divides
/// drawn for it.
pub struct Row {
    pub a: usize,
    pub b: usize,
    pub name: &'static str,
    pub divides: Vec<ScannableDivide>,
}

/// The table of divides for `x^a + y^b`, `2 <= b <= 4`.
pub fn quasihomogeneous_rows() -> Vec<Row> {
    vec![
        Row { a: 2, b: 2, name: "A1", divides: vec![sd(2, &[], &[1], &[]), sd(2, &[1], &[], &[1])] },
        Row { a: 3, b: 2, name: "A2", divides: vec![sd(2, &[], &[1], &[1])] },
        Row { a: 4, b: 2, name: "A3", divides: vec![sd(2, &[], &[1, 1], &[]), sd(2, &[1], &[1], &[1])] },
        Row { a: 5, b: 2, name: "A4", divides: vec![sd(2, &[], &[1, 1], &[1])] },
        Row { a: 6, b: 2, name: "A5", divides: vec![sd(2, &[], &[1, 1, 1], &[]), sd(2, &[1], &[1, 1], &[1])] },
        Row { a: 3, b: 3, name: "D4", divides: vec![sd(3, &[], &[1, 2, 1], &[]), sd(3, &[2], &[1, 2], &[1])] },
        Row { a: 4, b: 3, name: "E6", divides: vec![sd(3, &[2], &[1, 2, 1], &[2]), sd(3, &[2], &[2, 1, 2], &[2])] },
        Row {
            a: 5,
            b: 3,
            name: "E8",
            divides: vec![sd(3, &[2], &[1, 2, 1, 2], &[1]), sd(3, &[2], &[2, 1, 2, 2], &[1])],
        },
        Row {
            a: 6,
            b: 3,
            name: "E8(1,1)",
            divides: vec![
                sd(3, &[2], &[1, 2, 1, 2, 1], &[2]),
                sd(3, &[2], &[1, 1, 2, 1, 1], &[2]),
                sd(3, &[], &[1, 2, 1, 2, 1, 2], &[]),
            ],
        },
        Row { a: 4, b: 4, name: "E7(1,1)", divides: x4y4() },
        Row { a: 5, b: 4, name: "x5+y4", divides: vec![sd(4, &[2], &[1, 3, 2, 1, 3, 2], &[1, 3])] },
        Row {
            a: 6,
            b: 4,
            name: "x6+y4",
            divides: vec![
                sd(4, &[1, 3], &[2, 1, 3, 2, 1, 3, 2], &[1, 3]),
                sd(4, &[2], &[1, 3, 2, 1, 3, 2, 1, 3], &[2]),
            ],
        },
    ]
}

/// The four divides of `x^4 + y^4` (four lines).
pub fn x4y4() -> Vec<ScannableDivide> {
    vec![
        sd(4, &[], &[1, 2, 1, 3, 2, 1], &[]),
        sd(4, &[2], &[1, 3, 2, 1, 3], &[2]),
        sd(4, &[2], &[1, 2, 3, 2, 1], &[2]),
        sd(4, &[1, 3], &[2, 1, 3, 2], &[1, 3]),
    ]
}

/// The divide of `x^6 + y^4` whose right side closes with nested U-turns;
/// it is also the first divide of a chain of Yang-Baxter moves.
pub fn x6y4_nested() -> PlanarDivide {
    planar_from_turns(4, &[], &[1, 3, 1, 3, 2, 1, 3, 2], &[(2, 3), (1, 4)]).expect("gallery divide")
}

/// The second divide of that chain.
pub fn x6y4_nested_after_yb() -> PlanarDivide {
    planar_from_turns(4, &[], &[1, 3, 1, 2, 3, 2, 1, 2], &[(2, 3), (1, 4)]).expect("gallery divide")
}

/// Three strands, `L = {2}`, events `1 1 2 1`, `R = {1}`.
pub fn three_strand_example() -> ScannableDivide {
    sd(3, &[2], &[1, 1, 2, 1], &[1])
}

/// The two divides of two transversal cusps.
pub fn transversal_cusps() -> (ScannableDivide, ScannableDivide) {
    (sd(4, &[1, 3], &[2, 1, 3, 2, 1, 3], &[]), sd(4, &[1, 3], &[2, 1, 3, 1, 2], &[1, 3]))
}

/// Two divides whose braids both equal the fourth power of the half-twist.
pub fn delta4_pair() -> (ScannableDivide, ScannableDivide) {
    (sd(4, &[], &[1, 3, 2, 1, 3, 2, 2, 1, 3, 2, 1, 3], &[]), sd(4, &[1, 3], &[2, 1, 3, 2, 1, 3, 2, 1, 3, 2], &[1, 3]))
}

/// Two arcs crossing twice (type A3).
pub const TWO_ARCS: &str = "\
node a
node b
end e1
end e2
end e3
end e4
edge e1.0 a.3
edge e4.0 a.2
edge a.0 b.3
edge a.1 b.2
edge b.0 e2.0
edge b.1 e3.0
boundary e2 e3 e4 e1
";

/// A figure-eight curve: one node, two loops (type A3).
pub const FIGURE_EIGHT: &str = "\
node x
edge x.0 x.1
edge x.2 x.3
outer x.2
";

/// Two divides of type E6.
pub const E6_LEFT: &str = "\
node N1
node N2
node N3
end A
end C
edge A.0 N1.2
edge N1.0 N3.2
edge N3.0 N2.0
edge N2.2 N1.3
edge N1.1 N3.1
edge N3.3 N2.1
edge N2.3 C.0
boundary A C
";

pub const E6_RIGHT: &str = "\
node B1
node B2
node B3
end A
end C
edge A.0 B1.2
edge B1.0 B3.3
edge B3.1 B3.0
edge B3.2 B2.3
edge B2.1 B2.0
edge B2.2 B1.1
edge B1.3 C.0
boundary A C
";

/// One node, four legs.
pub const NODE: &str = "\
node v
end e1
end e2
end e3
end e4
edge v.0 e1.0
edge v.1 e2.0
edge v.2 e3.0
edge v.3 e4.0
boundary e1 e2 e3 e4
";

/// Two circles meeting in four points.
pub const TWO_CIRCLES: &str = "\
node p
node q
node r
node s
edge p.1 q.0
edge p.0 q.1
edge q.2 r.3
edge q.3 r.2
edge r.1 s.0
edge r.0 s.1
edge s.2 p.3
edge s.3 p.2
outer p.0
";

pub fn parse(text: &str) -> PlanarDivide {
    PlanarDivide::parse(text).expect("gallery divide")
}

/// A balanced plabic graph with two internal faces and no admissible
/// orientation: two boundary vertices, a black-white pair joined to each,
/// and a digon between the two lower vertices.
pub const UNORIENTABLE_PLABIC: &str = "\
v 0 b d
v 1 w d
v 2 w i
v 3 b i
v 4 b i
v 5 w i
rot 0 0
rot 1 2
rot 2 4 8 1
rot 3 6 3 9
rot 4 12 10 5
rot 5 13 7 11
edge 0 1
edge 2 3
edge 4 5
edge 6 7
edge 8 9
edge 10 11
edge 12 13
boundary 1 0
";
