//! Admissible orientations: black boundary vertices are sinks, white
//! boundary vertices sources, internal black vertices have one outgoing
//! edge, internal white vertices two, and every internal face has exactly
//! one source and one sink along its boundary.

use std::collections::{HashSet, VecDeque};

use super::graph::{Color, PlabicError, PlabicGraph};
use super::moves::{apply_with, PlabicMove};

/// `out[h]` holds when the edge of `h` points away from the vertex of `h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    pub out: Vec<bool>,
}

fn required_out(p: &PlabicGraph, v: usize) -> usize {
    match (p.on_boundary[v], p.color[v]) {
        (true, Color::Black) => 0,
        (true, Color::White) => 1,
        (false, Color::Black) => 1,
        (false, Color::White) => 2,
    }
}

/// Direction changes along a face walk; `None` marks unknown darts.
fn turns(walk: &[usize], dir: &[Option<bool>]) -> (usize, bool) {
    let n = walk.len();
    let mut changes = 0;
    let mut complete = true;
    for i in 0..n {
        match (dir[walk[i]], dir[walk[(i + 1) % n]]) {
            (Some(a), Some(b)) if a != b => changes += 1,
            (Some(_), Some(_)) => {}
            _ => complete = false,
        }
    }
    (changes, complete)
}

struct Solver<'a> {
    p: &'a PlabicGraph,
    vert: Vec<usize>,
    /// Internal face walks through each half-edge.
    faces_at: Vec<Vec<usize>>,
    walks: Vec<Vec<usize>>,
}

impl<'a> Solver<'a> {
    fn new(p: &'a PlabicGraph) -> Self {
        let (walks, _) = p.faces();
        let mut faces_at = vec![Vec::new(); p.twin.len()];
        for (i, w) in walks.iter().enumerate() {
            for &h in w {
                faces_at[h].push(i);
                faces_at[p.twin[h]].push(i);
            }
        }
        Solver { p, vert: p.vert(), faces_at, walks }
    }

    fn set(&self, dir: &mut [Option<bool>], h: usize, out: bool, queue: &mut VecDeque<usize>) -> bool {
        match dir[h] {
            Some(x) => x == out,
            None => {
                dir[h] = Some(out);
                dir[self.p.twin[h]] = Some(!out);
                queue.push_back(h);
                true
            }
        }
    }

    /// Propagates vertex counts and checks face turns; false on conflict.
    fn propagate(&self, dir: &mut [Option<bool>], mut queue: VecDeque<usize>) -> bool {
        let p = self.p;
        while let Some(h) = queue.pop_front() {
            for x in [h, p.twin[h]] {
                let v = self.vert[x];
                let need = required_out(p, v);
                let outs = p.rot[v].iter().filter(|&&d| dir[d] == Some(true)).count();
                let open: Vec<usize> = p.rot[v].iter().copied().filter(|&d| dir[d].is_none()).collect();
                if outs > need || outs + open.len() < need {
                    return false;
                }
                if outs == need {
                    for d in open {
                        if !self.set(dir, d, false, &mut queue) {
                            return false;
                        }
                    }
                } else if outs + open.len() == need {
                    for d in open {
                        if !self.set(dir, d, true, &mut queue) {
                            return false;
                        }
                    }
                }
            }
            for &f in &self.faces_at[h] {
                let (changes, complete) = turns(&self.walks[f], dir);
                if changes > 2 || (complete && changes != 2) {
                    return false;
                }
            }
        }
        true
    }

    fn search(&self, dir: Vec<Option<bool>>) -> Option<Vec<Option<bool>>> {
        let Some(h) = (0..dir.len()).find(|&h| dir[h].is_none()) else {
            return Some(dir);
        };
        for out in [true, false] {
            let mut d = dir.clone();
            let mut queue = VecDeque::new();
            self.set(&mut d, h, out, &mut queue);
            if self.propagate(&mut d, queue) {
                if let Some(r) = self.search(d) {
                    return Some(r);
                }
            }
        }
        None
    }
}

/// The admissible orientation, if one exists. It is unique when it exists.
pub fn admissible_orientation(p: &PlabicGraph) -> Option<Orientation> {
    if p.balance() != 0 {
        return None;
    }
    let s = Solver::new(p);
    let mut dir = vec![None; p.twin.len()];
    let mut queue = VecDeque::new();
    for &b in &p.boundary {
        let h = p.rot[b][0];
        if !s.set(&mut dir, h, required_out(p, b) == 1, &mut queue) {
            return None;
        }
    }
    if !s.propagate(&mut dir, queue) {
        return None;
    }
    let dir = s.search(dir)?;
    let o = Orientation { out: dir.into_iter().map(|d| d.unwrap()).collect() };
    is_admissible(p, &o).then_some(o)
}

pub fn is_acyclic(p: &PlabicGraph, o: &Orientation) -> bool {
    let vert = p.vert();
    let n = p.vertex_count();
    let mut indeg = vec![0usize; n];
    for h in 0..p.twin.len() {
        if o.out[h] {
            indeg[vert[p.twin[h]]] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &h in &p.rot[v] {
            if o.out[h] {
                let w = vert[p.twin[h]];
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
    }
    seen == n
}

/// Checks the vertex and face conditions and acyclicity.
pub fn is_admissible(p: &PlabicGraph, o: &Orientation) -> bool {
    if o.out.len() != p.twin.len() || (0..o.out.len()).any(|h| o.out[h] == o.out[p.twin[h]]) {
        return false;
    }
    for v in 0..p.vertex_count() {
        if p.rot[v].iter().filter(|&&h| o.out[h]).count() != required_out(p, v) {
            return false;
        }
    }
    let dir: Vec<Option<bool>> = o.out.iter().map(|&b| Some(b)).collect();
    let (walks, _) = p.faces();
    walks.iter().all(|w| turns(w, &dir).0 == 2) && is_acyclic(p, o)
}

/// Carries an admissible orientation across a move: edges away from the
/// move keep their direction and edges near it are re-chosen.
pub fn transport_orientation(p: &PlabicGraph, o: &Orientation, m: &PlabicMove) -> Result<Orientation, PlabicError> {
    transport_with(p, o, m, false)
}

pub(crate) fn transport_with(
    p: &PlabicGraph,
    o: &Orientation,
    m: &PlabicMove,
    free_colors: bool,
) -> Result<Orientation, PlabicError> {
    let a = apply_with(p, m, free_colors)?;
    let g = &a.graph;
    let vert = g.vert();
    let mut base: Vec<Option<bool>> = vec![None; g.twin.len()];
    for (old, new) in a.hmap.iter().enumerate() {
        if let Some(h) = *new {
            base[h] = Some(o.out[old]);
        }
    }
    let mut near: HashSet<usize> = a.site.iter().flat_map(|&h| [vert[h], vert[g.twin[h]]]).collect();
    for _ in 0..3 {
        let mut free: Vec<usize> = Vec::new();
        for &v in &near {
            for &h in &g.rot[v] {
                let e = h.min(g.twin[h]);
                if !free.contains(&e) {
                    free.push(e);
                }
            }
        }
        free.sort_unstable();
        if free.len() <= 16 {
            for mask in 0u32..(1 << free.len()) {
                let mut out: Vec<bool> = base.iter().map(|d| d.unwrap_or(false)).collect();
                for (i, &e) in free.iter().enumerate() {
                    let b = mask >> i & 1 == 1;
                    out[e] = b;
                    out[g.twin[e]] = !b;
                }
                let cand = Orientation { out };
                if is_admissible(g, &cand) {
                    return Ok(cand);
                }
            }
        }
        let grow: Vec<usize> =
            near.iter().flat_map(|&v| g.rot[v].iter().map(|&h| vert[g.twin[h]]).collect::<Vec<_>>()).collect();
        near.extend(grow);
    }
    Err(PlabicError::NotOrientable)
}
