//! Flip, square and tail moves, and move-equivalence search.

use std::fmt;

use super::graph::{quiver_of_plabic, Color, PlabicError, PlabicGraph};
use crate::quiver::quick_invariants;
use crate::search::{bidirectional_bfs, fingerprint, Budget, MeetPath, SearchStop, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    FlipWhite,
    FlipBlack,
    Square,
    TailAttach,
    TailRemove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlabicMove {
    /// Flips the edge of half-edge `edge`.
    Flip { edge: usize },
    /// Recolors the quadrilateral face on the right of `edge`.
    Square { edge: usize },
    /// Removes the tail at boundary vertex `vertex`.
    TailRemove { vertex: usize },
    /// Inserts a vertex of color `color` into the edge of `edge` and joins it
    /// across the face on the right of `edge` to a new boundary vertex placed
    /// after `boundary[gap]`.
    TailAttach { edge: usize, gap: usize, color: Color },
}

impl fmt::Display for PlabicMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlabicMove::Flip { edge } => write!(f, "flip {}", edge),
            PlabicMove::Square { edge } => write!(f, "square {}", edge),
            PlabicMove::TailRemove { vertex } => write!(f, "tail-remove {}", vertex),
            PlabicMove::TailAttach { edge, gap, color } => write!(f, "tail-attach {} {} {}", edge, gap, color.letter()),
        }
    }
}

impl PlabicMove {
    pub fn parse(text: &str) -> Result<PlabicMove, PlabicError> {
        let t: Vec<&str> = text.split_whitespace().collect();
        let bad = || PlabicError::Parse { line: 0, msg: format!("bad move `{}`", text.trim()) };
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        Ok(match (t.first().copied(), t.len()) {
            (Some("flip"), 2) => PlabicMove::Flip { edge: num(t[1])? },
            (Some("square"), 2) => PlabicMove::Square { edge: num(t[1])? },
            (Some("tail-remove"), 2) => PlabicMove::TailRemove { vertex: num(t[1])? },
            (Some("tail-attach"), 4) => PlabicMove::TailAttach {
                edge: num(t[1])?,
                gap: num(t[2])?,
                color: match t[3] {
                    "b" => Color::Black,
                    "w" => Color::White,
                    _ => return Err(bad()),
                },
            },
            _ => return Err(bad()),
        })
    }

    pub fn kind(&self, p: &PlabicGraph) -> MoveKind {
        match self {
            PlabicMove::Flip { edge } => {
                let v = p.vert()[*edge];
                if p.color[v] == Color::White {
                    MoveKind::FlipWhite
                } else {
                    MoveKind::FlipBlack
                }
            }
            PlabicMove::Square { .. } => MoveKind::Square,
            PlabicMove::TailRemove { .. } => MoveKind::TailRemove,
            PlabicMove::TailAttach { .. } => MoveKind::TailAttach,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveOptions {
    pub tail_attach: bool,
    pub tail_remove: bool,
    /// Boundary colors are immaterial: tails may be removed whatever the
    /// color of their boundary vertex.
    pub free_boundary_colors: bool,
}

impl Default for MoveOptions {
    fn default() -> Self {
        MoveOptions { tail_attach: true, tail_remove: true, free_boundary_colors: false }
    }
}

/// The result of a move with bookkeeping for transporting data.
#[derive(Debug, Clone)]
pub(crate) struct Applied {
    pub graph: PlabicGraph,
    /// Old half-edge id to new id, for half-edges that survive.
    pub hmap: Vec<Option<usize>>,
    /// Half-edges (new ids) of the edges created or rewired by the move.
    pub site: Vec<usize>,
}

fn flip_legal(p: &PlabicGraph, vert: &[usize], h: usize) -> Result<(), String> {
    if h >= p.twin.len() {
        return Err("no such half-edge".into());
    }
    let (u, v) = (vert[h], vert[p.twin[h]]);
    if u == v || p.on_boundary[u] || p.on_boundary[v] {
        return Err("flip needs an edge between two distinct internal vertices".into());
    }
    if p.color[u] != p.color[v] {
        return Err("flip needs endpoints of the same color".into());
    }
    let between = p.rot[u].iter().filter(|&&x| vert[p.twin[x]] == v).count();
    if between != 1 {
        return Err("endpoints are joined by more than one edge".into());
    }
    Ok(())
}

fn square_legal(p: &PlabicGraph, h: usize) -> Result<Vec<usize>, String> {
    let map = p.disk_map();
    let faces = p.faces_of(&map);
    if h >= map.real {
        return Err("no such half-edge".into());
    }
    let f = faces.face_of[h];
    if !faces.internal().contains(&f) {
        return Err("square move needs an internal face".into());
    }
    let walk = &faces.walks[f];
    if walk.len() != 4 {
        return Err("face is not a quadrilateral".into());
    }
    let vs: Vec<usize> = walk.iter().map(|&d| map.vert[d]).collect();
    for i in 0..4 {
        if vs[(i + 1) % 4] == vs[i] || vs[(i + 2) % 4] == vs[i] {
            return Err("square vertices are not distinct".into());
        }
        if p.color[vs[i]] == p.color[vs[(i + 1) % 4]] {
            return Err("square vertices do not alternate in color".into());
        }
    }
    let around: Vec<usize> = walk.iter().map(|&d| faces.face_of[map.twin[d]]).collect();
    for i in 0..4 {
        if around[i] == f {
            return Err("square edge borders the square on both sides".into());
        }
        if around[i] == around[(i + 1) % 4] {
            return Err("two consecutive sides border the same face".into());
        }
    }
    Ok(walk.clone())
}

fn tail_remove_legal(p: &PlabicGraph, vert: &[usize], b: usize, free_colors: bool) -> Result<(), String> {
    if b >= p.color.len() || !p.on_boundary[b] {
        return Err("not a boundary vertex".into());
    }
    if p.boundary.len() < 2 {
        return Err("the last boundary vertex is kept".into());
    }
    let t = p.twin[p.rot[b][0]];
    let v = vert[t];
    if p.on_boundary[v] {
        return Err("tail ends at another boundary vertex".into());
    }
    if !free_colors && p.color[v] == p.color[b] {
        return Err("tail endpoints have the same color".into());
    }
    let others: Vec<usize> = p.rot[v].iter().copied().filter(|&x| x != t).collect();
    let (x, y) = (others[0], others[1]);
    if p.twin[x] == y || vert[p.twin[x]] == vert[p.twin[y]] {
        return Err("merging the remaining edges would create a loop".into());
    }
    Ok(())
}

/// Interior face index of boundary gap `g`: the face inside the disk along
/// the boundary arc from `boundary[g]` to `boundary[g+1]`.
fn gap_face(p: &PlabicGraph, map: &crate::map::DiskMap, faces: &crate::map::Faces, g: usize) -> Option<usize> {
    let m = p.boundary.len();
    if m == 0 {
        return if g == 0 { faces.outer } else { None };
    }
    if g >= m {
        return None;
    }
    Some(faces.face_of[map.twin[map.real + 2 * g]])
}

fn tail_attach_legal(p: &PlabicGraph, h: usize, g: usize) -> Result<(), String> {
    let map = p.disk_map();
    let faces = p.faces_of(&map);
    if h >= map.real {
        return Err("no such half-edge".into());
    }
    match gap_face(p, &map, &faces, g) {
        Some(f) if f == faces.face_of[h] => Ok(()),
        Some(_) => Err("the edge and the boundary gap do not share a face".into()),
        None => Err("no such boundary gap".into()),
    }
}

pub fn enumerate_moves(p: &PlabicGraph) -> Vec<PlabicMove> {
    enumerate_moves_with(p, &MoveOptions::default())
}

pub fn enumerate_moves_with(p: &PlabicGraph, opts: &MoveOptions) -> Vec<PlabicMove> {
    let vert = p.vert();
    let mut out = Vec::new();
    for h in p.edges() {
        if flip_legal(p, &vert, h).is_ok() {
            out.push(PlabicMove::Flip { edge: h });
        }
    }
    let map = p.disk_map();
    let faces = p.faces_of(&map);
    for f in faces.internal() {
        let h = *faces.walks[f].iter().min().unwrap();
        if square_legal(p, h).is_ok() {
            out.push(PlabicMove::Square { edge: h });
        }
    }
    if opts.tail_remove {
        for &b in &p.boundary {
            if tail_remove_legal(p, &vert, b, opts.free_boundary_colors).is_ok() {
                out.push(PlabicMove::TailRemove { vertex: b });
            }
        }
    }
    if opts.tail_attach {
        let gaps = p.boundary.len().max(1);
        for g in 0..gaps {
            let Some(f) = gap_face(p, &map, &faces, g) else { continue };
            let mut hs: Vec<usize> = faces.walks[f].iter().copied().filter(|&h| h < map.real).collect();
            hs.sort_unstable();
            for h in hs {
                for color in [Color::Black, Color::White] {
                    out.push(PlabicMove::TailAttach { edge: h, gap: g, color });
                }
            }
        }
    }
    out
}

pub fn apply_move(p: &PlabicGraph, m: &PlabicMove) -> Result<PlabicGraph, PlabicError> {
    apply_with(p, m, false).map(|a| a.graph)
}

pub(crate) fn apply_with(p: &PlabicGraph, m: &PlabicMove, free_colors: bool) -> Result<Applied, PlabicError> {
    let illegal = PlabicError::IllegalMove;
    let vert = p.vert();
    let identity: Vec<Option<usize>> = (0..p.twin.len()).map(Some).collect();
    let applied = match *m {
        PlabicMove::Flip { edge: h } => {
            flip_legal(p, &vert, h).map_err(illegal)?;
            let t = p.twin[h];
            let (u, v) = (vert[h], vert[t]);
            let (a1, a2) = (p.next_ccw(u, h), p.next_cw(u, h));
            let (b1, b2) = (p.next_ccw(v, t), p.next_cw(v, t));
            let mut g = p.clone();
            g.rot[u] = vec![h, a2, b1];
            g.rot[v] = vec![t, b2, a1];
            if let Some(o) = g.outer {
                if o == h || o == t {
                    // keep a half-edge of the same face that the flip does not touch
                    let map = p.disk_map();
                    let faces = p.faces_of(&map);
                    let walk = &faces.walks[faces.face_of[o]];
                    g.outer = walk.iter().copied().find(|&x| x != h && x != t);
                }
            }
            Applied { graph: g, hmap: identity, site: vec![h] }
        }
        PlabicMove::Square { edge: h } => {
            let walk = square_legal(p, h).map_err(illegal)?;
            let mut g = p.clone();
            for &d in &walk {
                g.color[vert[d]] = p.color[vert[d]].flipped();
            }
            Applied { graph: g, hmap: identity, site: walk }
        }
        PlabicMove::TailRemove { vertex: b } => {
            tail_remove_legal(p, &vert, b, free_colors).map_err(illegal)?;
            let tb = p.rot[b][0];
            let t = p.twin[tb];
            let v = vert[t];
            let (x, y) = (p.next_ccw(v, t), p.next_cw(v, t));
            let (xt, yt) = (p.twin[x], p.twin[y]);
            let mut g = p.clone();
            g.twin[xt] = yt;
            g.twin[yt] = xt;
            let mut dead_v = vec![false; p.color.len()];
            dead_v[b] = true;
            dead_v[v] = true;
            let mut dead_h = vec![false; p.twin.len()];
            for d in [tb, t, x, y] {
                dead_h[d] = true;
            }
            let (g, hmap) = g.compacted(&dead_v, &dead_h);
            let site = vec![hmap[xt].unwrap()];
            Applied { graph: g, hmap, site }
        }
        PlabicMove::TailAttach { edge: h, gap, color } => {
            tail_attach_legal(p, h, gap).map_err(illegal)?;
            let mut g = p.clone();
            let t = p.twin[h];
            let base = p.twin.len();
            let (vx, vy, vt, bt) = (base, base + 1, base + 2, base + 3);
            let v = g.color.len();
            let b = v + 1;
            g.twin.extend([h, t, bt, vt]);
            g.twin[h] = vx;
            g.twin[t] = vy;
            g.color.push(color);
            g.on_boundary.push(false);
            g.rot.push(vec![vy, vx, vt]);
            g.color.push(color.flipped());
            g.on_boundary.push(true);
            g.rot.push(vec![bt]);
            if g.boundary.is_empty() {
                g.boundary.push(b);
                g.outer = None;
            } else {
                g.boundary.insert(gap + 1, b);
            }
            Applied { graph: g, hmap: identity, site: vec![h, t, vt] }
        }
    };
    applied.graph.validate()?;
    Ok(applied)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoveSearch {
    pub budget: Budget,
    pub strict_boundary_colors: bool,
    /// Allow tail attachment while a state has at most this many more
    /// vertices than the larger input.
    pub extra_vertices: usize,
}

impl Default for MoveSearch {
    fn default() -> Self {
        MoveSearch { budget: Budget::states(200_000), strict_boundary_colors: false, extra_vertices: 2 }
    }
}

fn state_key(p: &PlabicGraph, strict: bool) -> u128 {
    fingerprint(&p.canonical_code(!strict))
}

/// Moves leading from `p1` and from `p2` to isomorphic graphs.
pub fn move_equivalent(p1: &PlabicGraph, p2: &PlabicGraph, opts: &MoveSearch) -> Verdict<MeetPath<PlabicMove>> {
    let (q1, q2) = (quiver_of_plabic(p1), quiver_of_plabic(p2));
    // square moves mutate the quiver, so only mutation invariants apply
    let (i1, i2) = (quick_invariants(&q1), quick_invariants(&q2));
    if (i1.n, &i1.abs_det, i1.rank) != (i2.n, &i2.abs_det, i2.rank) {
        return Verdict::DistinctByInvariant(format!(
            "quivers with (n, |det B|, rank) = ({}, {}, {}) and ({}, {}, {})",
            i1.n, i1.abs_det, i1.rank, i2.n, i2.abs_det, i2.rank
        ));
    }
    if opts.strict_boundary_colors && p1.balance() != p2.balance() {
        return Verdict::DistinctByInvariant(format!("balance {} and {}", p1.balance(), p2.balance()));
    }
    let strict = opts.strict_boundary_colors;
    let cap = p1.vertex_count().max(p2.vertex_count()) + opts.extra_vertices;
    let expand = move |g: &PlabicGraph| {
        let mo =
            MoveOptions { tail_attach: g.vertex_count() + 2 <= cap, tail_remove: true, free_boundary_colors: !strict };
        enumerate_moves_with(g, &mo)
            .into_iter()
            .filter_map(|m| apply_with(g, &m, !strict).ok().map(|a| (m, a.graph)))
            .collect::<Vec<_>>()
    };
    match bidirectional_bfs(p1.clone(), p2.clone(), &opts.budget, |g| state_key(g, strict), expand) {
        Ok(path) => {
            let replay = |g: &PlabicGraph, ms: &[PlabicMove]| {
                ms.iter().try_fold(g.clone(), |cur, m| apply_with(&cur, m, !strict).map(|a| a.graph))
            };
            match (replay(p1, &path.forward), replay(p2, &path.backward)) {
                (Ok(a), Ok(b)) if a.canonical_code(!strict) == b.canonical_code(!strict) => Verdict::Equivalent(path),
                _ => Verdict::Unknown { states: 0, reason: "witness failed to replay".into() },
            }
        }
        Err(SearchStop::Exhausted { states }) => {
            Verdict::DistinctByInvariant(format!("move orbit exhausted after {} states", states))
        }
        Err(SearchStop::Budget { states, reason }) => Verdict::Unknown { states, reason },
    }
}
