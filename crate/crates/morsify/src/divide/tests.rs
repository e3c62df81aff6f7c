use super::*;
use crate::gallery::{self, parse};

fn euler(d: &PlanarDivide) -> i64 {
    let map = d.disk_map();
    let f = d.faces_of(&map);
    let v = (d.nodes() + d.ends()) as i64;
    let e = (map.twin.len() / 2) as i64;
    v - e + f.walks.len() as i64
}

#[test]
fn hyperbolic_node() {
    let d = parse(gallery::NODE);
    assert!(d.validate().is_valid());
    assert_eq!(d.cell_count(), CellCount { nodes: 1, regions: 0, total: 1 });
    assert_eq!(d.branches().len(), 2);
    let s = ScannableDivide::new(2, &[], &[1], &[]).unwrap();
    assert!(s.to_planar().is_isomorphic(&d));
}

#[test]
fn two_arcs_parse_and_trace() {
    let d = parse(gallery::TWO_ARCS);
    let b = d.branches();
    assert_eq!(b.len(), 2);
    assert!(b.iter().all(|x| x.kind == BranchKind::Interval));
    assert_eq!(d.cell_count(), CellCount { nodes: 2, regions: 1, total: 3 });
    assert_eq!(d.regions()[0].walk.len(), 2);
    let s = ScannableDivide::new(2, &[], &[1, 1], &[]).unwrap();
    assert!(s.to_planar().is_isomorphic(&d));
    assert_eq!(euler(&d), 2);
}

#[test]
fn figure_eight() {
    let d = parse(gallery::FIGURE_EIGHT);
    assert!(d.validate().is_valid());
    assert_eq!(d.cell_count().regions, 2);
    assert_eq!(euler(&d), 2);
    let s = ScannableDivide::new(2, &[1], &[1], &[1]).unwrap();
    let p = s.to_planar();
    assert!(p.outer.is_some());
    assert!(p.is_isomorphic(&d));
}

#[test]
fn two_circles_meeting_in_four_points() {
    let d = parse(gallery::TWO_CIRCLES);
    assert!(d.validate().is_valid(), "{}", d.validate());
    assert_eq!(euler(&d), 2);
    let b = d.branches();
    assert_eq!(b.len(), 2);
    assert!(b.iter().all(|x| x.kind == BranchKind::Circle));
    assert_eq!(d.cell_count(), CellCount { nodes: 4, regions: 5, total: 9 });
}

#[test]
fn e6_divides() {
    for text in [gallery::E6_LEFT, gallery::E6_RIGHT] {
        let d = parse(text);
        assert!(d.validate().is_valid());
        assert_eq!(d.cell_count(), CellCount { nodes: 3, regions: 3, total: 6 });
        assert_eq!(euler(&d), 2);
    }
}

#[test]
fn disjoint_circles_violate_connectivity() {
    let d = PlanarDivide { circles: 2, ..parse("") };
    let r = d.validate();
    assert!(r.violations.iter().any(|v| v.condition == Condition::D5));
    let s = ScannableDivide::new(4, &[1, 3], &[], &[1, 3]).unwrap();
    assert_eq!(s.to_planar().circles, 2);
    assert!(!s.to_planar().validate().is_valid());
}

#[test]
fn body_disconnected_without_regions() {
    // two nodes joined by an edge bound no region
    let s = ScannableDivide::new(3, &[], &[1, 2], &[]).unwrap();
    let r = s.to_planar().validate();
    assert!(r.violations.iter().any(|v| v.condition == Condition::D5));
}

#[test]
fn parse_errors() {
    let dup = "node v\nend a\nend b\nedge v.0 a.0\nedge v.0 b.0\n";
    assert!(matches!(PlanarDivide::parse(dup), Err(DivideError::DuplicateSlot { line: 5, .. })));
    let bad = "node v\nedge v.7 v.1\n";
    assert!(matches!(PlanarDivide::parse(bad), Err(DivideError::MalformedSlot { line: 2, .. })));
    let twice = "node v\nend a\nedge v.0 a.0\nedge v.0 a.0\n";
    assert!(matches!(PlanarDivide::parse(twice), Err(DivideError::DuplicateEdge { line: 4 })));
    let deg = "node v\nend a\nedge v.0 a.0\nedge v.1 a.0\n";
    assert!(matches!(PlanarDivide::parse(deg), Err(DivideError::EndpointDegree { line: 4, .. })));
}

#[test]
fn pdv_round_trip() {
    for text in [gallery::NODE, gallery::TWO_ARCS, gallery::FIGURE_EIGHT, gallery::E6_LEFT, gallery::TWO_CIRCLES] {
        let d = parse(text);
        assert_eq!(PlanarDivide::parse(&d.to_string()).unwrap(), d);
    }
}

#[test]
fn three_strand_example_has_four_nodes() {
    let d = gallery::three_strand_example().to_planar();
    assert_eq!(d.nodes(), 4);
    assert!(d.validate().is_valid());
}

#[test]
fn quasihomogeneous_cell_counts() {
    for row in gallery::quasihomogeneous_rows() {
        for s in &row.divides {
            let d = s.to_planar();
            assert!(d.validate().is_valid(), "{} {:?}: {}", row.name, s, d.validate());
            assert_eq!(d.cell_count().total, (row.a - 1) * (row.b - 1), "{} {:?}", row.name, s);
        }
    }
    let d = gallery::x6y4_nested();
    assert_eq!(d.cell_count().total, 15);
}

#[test]
fn lissajous_matches_drawn_divides() {
    assert_eq!(lissajous(5, 3, 0).unwrap(), ScannableDivide::new(3, &[2], &[1, 2, 1, 2], &[1]).unwrap());
    assert_eq!(lissajous(5, 4, 0).unwrap(), ScannableDivide::new(4, &[2], &[1, 3, 2, 1, 3, 2], &[1, 3]).unwrap());
    assert_eq!(lissajous(3, 2, 0).unwrap(), ScannableDivide::new(2, &[], &[1], &[1]).unwrap());
    assert_eq!(lissajous(5, 3, 0).unwrap().to_planar().cell_count(), CellCount { nodes: 4, regions: 4, total: 8 });
}

#[test]
fn lissajous_cell_counts() {
    for a in 2..=6 {
        for b in 2..=a {
            for parity in 0..2 {
                let s = lissajous(a, b, parity).unwrap();
                let cells = (a - 1) * (b - 1);
                let expect = if parity == 0 { cells.div_ceil(2) } else { cells / 2 };
                assert_eq!(s.events.len(), expect);
                let d = s.to_planar();
                assert!(d.validate().is_valid(), "{:?}", s);
                assert_eq!(d.cell_count().total, cells, "{:?}", s);
            }
        }
    }
}

#[test]
fn wiring_diagrams() {
    assert_eq!(wiring_diagram(2).unwrap().events, vec![1]);
    let w3 = wiring_diagram(3).unwrap();
    assert_eq!(w3.events, vec![1, 2, 1]);
    let br = w3.to_planar().branches();
    assert_eq!(br.len(), 3);
    assert!(br.iter().all(|b| b.kind == BranchKind::Interval && b.edges.len() == 3));
}

#[test]
fn overlay_counts() {
    let node = ScannableDivide::new(2, &[], &[1], &[]).unwrap();
    let o = overlay(&node, &node);
    assert_eq!(o.k, 4);
    assert_eq!(o.events.len(), 6);
    let a = lissajous(3, 2, 0).unwrap();
    let b = lissajous(4, 3, 1).unwrap();
    let o = overlay(&a, &b);
    assert_eq!(o.right, vec![1, 4]);
    assert!(o.to_planar().validate().is_valid());
}

#[test]
fn klein_group_law() {
    let s = gallery::three_strand_example();
    assert_eq!(klein_act(&s, Klein::Id), s);
    for g in [Klein::FlipH, Klein::FlipV, Klein::Rot180] {
        assert_eq!(klein_act(&klein_act(&s, g), g), s);
    }
    let hv = klein_act(&klein_act(&s, Klein::FlipH), Klein::FlipV);
    assert_eq!(hv, klein_act(&s, Klein::Rot180));
}

#[test]
fn sdv_round_trip() {
    let s = gallery::three_strand_example();
    assert_eq!(ScannableDivide::parse(&s.to_string()).unwrap(), s);
    let t = ScannableDivide::new(2, &[], &[1], &[]).unwrap();
    assert_eq!(ScannableDivide::parse(&t.to_string()).unwrap(), t);
}

#[test]
fn yb_sites_of_small_divides() {
    assert!(yb_sites(&parse(gallery::NODE)).is_empty());
    assert!(yb_sites(&parse(gallery::TWO_ARCS)).is_empty());
    assert_eq!(yb_sites(&wiring_diagram(3).unwrap().to_planar()).len(), 3);
}

#[test]
fn yb_is_an_involution_and_side_independent() {
    let d = wiring_diagram(3).unwrap().to_planar();
    let results: Vec<PlanarDivide> = yb_sites(&d).into_iter().map(|s| apply_yb(&d, s).unwrap()).collect();
    for r in &results {
        assert!(r.is_isomorphic(&results[0]));
        assert!(r.validate().is_valid());
        let back: Vec<PlanarDivide> = yb_sites(r).into_iter().map(|s| apply_yb(r, s).unwrap()).collect();
        assert!(back.iter().any(|b| b.is_isomorphic(&d)));
    }
    // the other staircase word 2 1 2 is the pushed picture
    let other = ScannableDivide::new(3, &[], &[2, 1, 2], &[]).unwrap().to_planar();
    assert!(results[0].is_isomorphic(&other));
}

#[test]
fn yb_on_nested_divide_reaches_next_divide() {
    let d = gallery::x6y4_nested();
    let target = gallery::x6y4_nested_after_yb();
    let hits = yb_sites(&d).into_iter().filter(|&s| apply_yb(&d, s).unwrap().is_isomorphic(&target)).count();
    assert!(hits > 0);
}

#[test]
fn yb_preserves_cells_on_lissajous() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut d = lissajous(4, 4, 0).unwrap().to_planar();
    let cells = d.cell_count();
    let mut applied = 0;
    for _ in 0..50 {
        let sites = yb_sites(&d);
        if sites.is_empty() {
            break;
        }
        let s = sites[rng.gen_range(0..sites.len())];
        d = apply_yb(&d, s).unwrap();
        applied += 1;
        assert_eq!(d.cell_count(), cells);
        assert!(d.validate().is_valid());
    }
    assert_eq!(applied, 50);
}
