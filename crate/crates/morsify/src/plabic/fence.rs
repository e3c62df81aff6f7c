//! Plabic fences and the plabic graphs attached to divides.

use std::collections::BTreeSet;

use super::graph::{Color, PlabicError, PlabicGraph};
use super::word::{FenceLetter, FenceWord};
use crate::agquiver::face_signs;
use crate::divide::{PlanarDivide, ScannableDivide};

/// Strands `1..=k` run left to right, bottom to top. A connector sits at
/// a lower vertex with rotation `[E, N, W]` and an upper vertex with rotation
/// `[E, W, S]`. Left ends are white, right ends black.
pub fn fence_of_word(w: &FenceWord) -> Result<PlabicGraph, PlabicError> {
    let k = w.k;
    for i in 1..k {
        if !w.letters.iter().any(|l| l.index() == i) {
            return Err(PlabicError::DisconnectedFence(i, i + 1));
        }
    }
    let mut color = Vec::new();
    let mut on_boundary = Vec::new();
    // per strand: vertices left to right
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    let new_vertex = |c: Color, b: bool, color: &mut Vec<Color>, on_boundary: &mut Vec<bool>| {
        color.push(c);
        on_boundary.push(b);
        color.len() - 1
    };
    let mut left = vec![0; k + 1];
    let mut right = vec![0; k + 1];
    for s in 1..=k {
        left[s] = new_vertex(Color::White, true, &mut color, &mut on_boundary);
        rows[s].push(left[s]);
    }
    let mut connectors = Vec::new();
    for l in &w.letters {
        let i = l.index();
        let (lo, up) = match l {
            FenceLetter::Sigma(_) => (Color::Black, Color::White),
            FenceLetter::Tau(_) => (Color::White, Color::Black),
        };
        let a = new_vertex(lo, false, &mut color, &mut on_boundary);
        let b = new_vertex(up, false, &mut color, &mut on_boundary);
        rows[i].push(a);
        rows[i + 1].push(b);
        connectors.push((a, b));
    }
    for s in 1..=k {
        right[s] = new_vertex(Color::Black, true, &mut color, &mut on_boundary);
        rows[s].push(right[s]);
    }
    let n = color.len();
    let mut east = vec![usize::MAX; n];
    let mut west = vec![usize::MAX; n];
    let mut vert_dart = vec![usize::MAX; n];
    let mut twin = Vec::new();
    let edge = |twin: &mut Vec<usize>| {
        let h = twin.len();
        twin.push(h + 1);
        twin.push(h);
        h
    };
    for row in rows.iter().skip(1) {
        for p in row.windows(2) {
            let h = edge(&mut twin);
            east[p[0]] = h;
            west[p[1]] = h + 1;
        }
    }
    for &(a, b) in &connectors {
        let h = edge(&mut twin);
        vert_dart[a] = h;
        vert_dart[b] = h + 1;
    }
    let mut rot = vec![Vec::new(); n];
    for s in 1..=k {
        rot[left[s]] = vec![east[left[s]]];
        rot[right[s]] = vec![west[right[s]]];
    }
    for &(a, b) in &connectors {
        rot[a] = vec![east[a], vert_dart[a], west[a]];
        rot[b] = vec![east[b], west[b], vert_dart[b]];
    }
    let mut boundary: Vec<usize> = (1..=k).map(|s| right[s]).collect();
    boundary.extend((1..=k).rev().map(|s| left[s]));
    PlabicGraph::new(color, on_boundary, rot, twin, boundary, None)
}

/// Reads the word back from a fence: strands are walked bottom to top, each
/// connector is ordered by its positions on both strands, and the
/// lexicographically least compatible word is returned.
pub fn word_of_fence(p: &PlabicGraph) -> Result<FenceWord, PlabicError> {
    let bad = |m: &str| PlabicError::NotAFence(m.to_string());
    let m = p.boundary.len();
    if m < 4 || !m.is_multiple_of(2) {
        return Err(bad("a fence has an even number of at least four boundary vertices"));
    }
    let k = m / 2;
    let vert = p.vert();
    let n = p.vertex_count();
    // connector id and strand position of each vertex
    let mut is_upper = vec![false; n];
    let mut conn_of = vec![usize::MAX; n];
    let mut conns: Vec<(usize, usize, usize)> = Vec::new(); // (strand, lower, upper)
    let mut order_on: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    let mut steps = 0;
    for s in 1..=k {
        let start = p.boundary[2 * k - s];
        let end = p.boundary[s - 1];
        let mut h = p.twin[p.rot[start][0]];
        loop {
            steps += 1;
            if steps > 4 * n {
                return Err(bad("strand walk does not terminate"));
            }
            let v = vert[h];
            if v == end {
                break;
            }
            if p.on_boundary[v] {
                return Err(bad("strand ends at the wrong boundary vertex"));
            }
            let (e, vd) =
                if is_upper[v] { (p.next_cw(v, h), p.next_ccw(v, h)) } else { (p.next_ccw(v, h), p.next_cw(v, h)) };
            if is_upper[v] {
                order_on[s].push(conn_of[v]);
            } else {
                if s == k {
                    return Err(bad("top strand has an upward connector"));
                }
                let u = vert[p.twin[vd]];
                if p.on_boundary[u] || conn_of[v] != usize::MAX || conn_of[u] != usize::MAX {
                    return Err(bad("connector does not join two strands"));
                }
                let c = conns.len();
                conns.push((s, v, u));
                conn_of[v] = c;
                conn_of[u] = c;
                is_upper[u] = true;
                order_on[s].push(c);
            }
            h = p.twin[e];
        }
    }
    // precedence from both strands of each connector
    let nc = conns.len();
    let mut preds = vec![BTreeSet::new(); nc];
    for row in &order_on {
        for w in row.windows(2) {
            preds[w[1]].insert(w[0]);
        }
    }
    let letter = |c: usize| {
        let (s, lo, _) = conns[c];
        if p.color[lo] == Color::Black {
            FenceLetter::Sigma(s)
        } else {
            FenceLetter::Tau(s)
        }
    };
    let mut done = vec![false; nc];
    let mut letters = Vec::with_capacity(nc);
    for _ in 0..nc {
        let next = (0..nc)
            .filter(|&c| !done[c] && preds[c].iter().all(|&q| done[q]))
            .min_by_key(|&c| letter(c))
            .ok_or_else(|| bad("connector order is cyclic"))?;
        done[next] = true;
        letters.push(letter(next));
    }
    let w = FenceWord::new(k, letters).map_err(|e| bad(&e.to_string()))?;
    let rebuilt = fence_of_word(&w)?;
    if !rebuilt.is_isomorphic(p) {
        return Err(bad("graph differs from the fence of its word"));
    }
    Ok(w)
}

/// All sigma letters in order, then all tau letters in order.
pub fn braid_normalized(w: &FenceWord) -> FenceWord {
    let mut letters: Vec<FenceLetter> =
        w.letters.iter().copied().filter(|l| matches!(l, FenceLetter::Sigma(_))).collect();
    letters.extend(w.letters.iter().copied().filter(|l| matches!(l, FenceLetter::Tau(_))));
    FenceWord { k: w.k, letters }
}

/// Sigma for each left U-turn, a sigma-tau pair per node (tau first on even
/// levels), and sigma for each right U-turn.
pub fn fence_word_of_divide(s: &ScannableDivide) -> FenceWord {
    let mut letters: Vec<FenceLetter> = s.left.iter().map(|&i| FenceLetter::Sigma(i)).collect();
    for &i in &s.events {
        if i % 2 == 1 {
            letters.extend([FenceLetter::Sigma(i), FenceLetter::Tau(i)]);
        } else {
            letters.extend([FenceLetter::Tau(i), FenceLetter::Sigma(i)]);
        }
    }
    letters.extend(s.right.iter().map(|&i| FenceLetter::Sigma(i)));
    FenceWord { k: s.k, letters }
}

pub fn fence_of_divide(s: &ScannableDivide) -> Result<PlabicGraph, PlabicError> {
    fence_of_word(&fence_word_of_divide(s))
}

/// Colors of the boundary vertices at the divide's endpoints (by endpoint
/// id); unlisted endpoints are white.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TailSpec {
    pub colors: Vec<Option<Color>>,
}

impl TailSpec {
    fn color(&self, e: usize) -> Color {
        self.colors.get(e).copied().flatten().unwrap_or(Color::White)
    }
}

/// Replaces each node by a square of four trivalent vertices of alternating
/// color, with a leg along each branch. The vertex facing slot `s` of node
/// `v` is black when the region between slots `s` and `s + 1` is positive.
pub fn attach_plabic(d: &PlanarDivide, tails: &TailSpec) -> Result<PlabicGraph, PlabicError> {
    if d.circles > 0 {
        return Err(PlabicError::Unsupported("branches without nodes that close up".into()));
    }
    let n = d.nodes();
    let ends = d.ends();
    let (faces, sign) = face_signs(d).map_err(|e| PlabicError::Unsupported(e.to_string()))?;
    let dart = |x: usize| if x < 4 * n { 3 * x } else { 12 * n + x - 4 * n };
    let total = 12 * n + ends;
    let mut twin = vec![0; total];
    for x in 0..4 * n + ends {
        twin[dart(x)] = dart(d.partner[x]);
    }
    let mut color = Vec::with_capacity(4 * n + ends);
    let mut rot = Vec::with_capacity(4 * n + ends);
    for v in 0..n {
        for s in 0..4 {
            let id = 4 * v + s;
            let next = 4 * v + (s + 1) % 4;
            twin[3 * id + 1] = 3 * next + 2;
            twin[3 * next + 2] = 3 * id + 1;
            rot.push(vec![3 * id, 3 * id + 1, 3 * id + 2]);
            let black = match sign[faces.face_of[4 * v + (s + 1) % 4]] {
                Some(p) => p,
                None => !sign[faces.face_of[4 * v + (s + 2) % 4]].unwrap_or(true),
            };
            color.push(if black { Color::Black } else { Color::White });
        }
    }
    for e in 0..ends {
        rot.push(vec![12 * n + e]);
        color.push(tails.color(e));
    }
    let mut on_boundary = vec![false; 4 * n];
    on_boundary.extend(std::iter::repeat_n(true, ends));
    let boundary = d.boundary.iter().map(|&e| 4 * n + e).collect();
    let outer = if d.boundary.is_empty() { faces.outer.map(|f| dart(faces.walks[f][0])) } else { None };
    PlabicGraph::new(color, on_boundary, rot, twin, boundary, outer)
}
