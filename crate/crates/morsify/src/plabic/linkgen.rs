//! The link of an oriented plabic graph. Every edge carries two lanes, one
//! in each direction, each driving on the right. Lanes turn around at the
//! boundary, pass white vertices without crossing, and cross each other in
//! a small triangle at black vertices.

use super::graph::{Color, PlabicError, PlabicGraph};
use super::orient::{is_admissible, Orientation};
use crate::link::{Crossing, LinkDiagram};

struct Uf(Vec<usize>);

impl Uf {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

pub fn link_of_oriented_plabic(p: &PlabicGraph, o: &Orientation) -> Result<LinkDiagram, PlabicError> {
    if !is_admissible(p, o) {
        return Err(PlabicError::NotOrientable);
    }
    // lane leaving the vertex of h along h has label h; it arrives at the
    // vertex of twin(h), where it is the incoming lane of twin(h)
    let nh = p.twin.len();
    let out_lane = |h: usize| h;
    let in_lane = |h: usize| p.twin[h];
    let mut next_label = nh;
    let mut joins: Vec<(usize, usize)> = Vec::new();
    // (chord id, in label, out label) per crossing slot
    struct Slot {
        over: bool,
        ins: usize,
        outs: usize,
    }
    let mut crossings: Vec<(i8, [Option<Slot>; 2])> = Vec::new();
    for v in 0..p.vertex_count() {
        let r = &p.rot[v];
        if p.on_boundary[v] {
            joins.push((in_lane(r[0]), out_lane(r[0])));
            continue;
        }
        if p.color[v] == Color::White {
            for &t in r {
                joins.push((in_lane(t), out_lane(p.next_ccw(v, t))));
            }
            continue;
        }
        let od = *r.iter().find(|&&h| o.out[h]).expect("black vertex has an outgoing edge");
        let i1 = p.next_ccw(v, od);
        let i2 = p.next_ccw(v, i1);
        // crossings: TM (+, T over M), TB (-, T over B), MB (+, M over B)
        let base = crossings.len();
        let (tm, tb, mb) = (base, base + 1, base + 2);
        crossings.push((1, [None, None]));
        crossings.push((-1, [None, None]));
        crossings.push((1, [None, None]));
        let chords = [
            (in_lane(i1), out_lane(od), [(tm, true), (tb, true)]),
            (in_lane(i2), out_lane(i1), [(mb, true), (tm, false)]),
            (in_lane(od), out_lane(i2), [(tb, false), (mb, false)]),
        ];
        for (a, b, xs) in chords {
            let mid = next_label;
            next_label += 1;
            let labels = [(a, mid), (mid, b)];
            for ((x, over), (li, lo)) in xs.into_iter().zip(labels) {
                crossings[x].1[usize::from(!over)] = Some(Slot { over, ins: li, outs: lo });
            }
        }
    }
    let mut uf = Uf((0..next_label).collect());
    for (a, b) in joins {
        uf.union(a, b);
    }
    let mut used = vec![false; next_label];
    let mut out = Vec::with_capacity(crossings.len());
    for (sign, slots) in crossings {
        let [Some(ov), Some(un)] = slots else {
            return Err(PlabicError::Invalid("incomplete crossing".into()));
        };
        debug_assert!(ov.over && !un.over);
        let ids = [uf.find(un.ins), uf.find(ov.ins), uf.find(un.outs), uf.find(ov.outs)];
        for &x in &ids {
            used[x] = true;
        }
        let [ui, oi, uo, oo] = ids.map(|x| x + 1);
        let arcs = if sign > 0 { [ui, oo, uo, oi] } else { [ui, oi, uo, oo] };
        out.push(Crossing { arcs, sign });
    }
    let mut free = 0;
    for x in 0..next_label {
        if uf.find(x) == x && !used[x] {
            free += 1;
        }
    }
    let d = LinkDiagram::compacted(out, free);
    LinkDiagram::new(d.crossings, d.free_loops).map_err(|e| PlabicError::Invalid(e.to_string()))
}
