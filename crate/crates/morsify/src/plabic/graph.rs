use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::map::{DiskMap, Faces};
use crate::quiver::Quiver;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlabicError {
    #[error("invalid plabic graph: {0}")]
    Invalid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("fence strands {0} and {1} are not connected by any connector")]
    DisconnectedFence(usize, usize),
    #[error("not a plabic fence: {0}")]
    NotAFence(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("no admissible orientation")]
    NotOrientable,
    #[error("no triangular region with nodes at the given site")]
    SiteNotFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Black => 'b',
            Color::White => 'w',
        }
    }
}

/// A plabic graph in a disk. Half-edges are numbered globally; `rot[v]`
/// lists the half-edges at `v` counterclockwise and `twin` pairs them into
/// edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlabicGraph {
    pub color: Vec<Color>,
    pub on_boundary: Vec<bool>,
    pub rot: Vec<Vec<usize>>,
    pub twin: Vec<usize>,
    /// Boundary vertices in counterclockwise order.
    pub boundary: Vec<usize>,
    /// When there are no boundary vertices: a half-edge whose face (on its
    /// right) touches the disk boundary.
    pub outer: Option<usize>,
}

impl PlabicGraph {
    /// Builds and validates.
    pub fn new(
        color: Vec<Color>,
        on_boundary: Vec<bool>,
        rot: Vec<Vec<usize>>,
        twin: Vec<usize>,
        boundary: Vec<usize>,
        outer: Option<usize>,
    ) -> Result<PlabicGraph, PlabicError> {
        let g = PlabicGraph { color, on_boundary, rot, twin, boundary, outer };
        g.validate()?;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.color.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    /// The vertex of each half-edge.
    pub fn vert(&self) -> Vec<usize> {
        let mut v = vec![usize::MAX; self.twin.len()];
        for (x, hs) in self.rot.iter().enumerate() {
            for &h in hs {
                v[h] = x;
            }
        }
        v
    }

    /// Half-edges with `h < twin(h)`, one per edge.
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.twin.len()).filter(|&h| h < self.twin[h])
    }

    /// Position of `h` in the rotation at its vertex.
    pub(crate) fn rot_pos(&self, v: usize, h: usize) -> usize {
        self.rot[v].iter().position(|&x| x == h).expect("half-edge at vertex")
    }

    /// The half-edge after `h` counterclockwise at `v`.
    pub(crate) fn next_ccw(&self, v: usize, h: usize) -> usize {
        let r = &self.rot[v];
        r[(self.rot_pos(v, h) + 1) % r.len()]
    }

    /// The half-edge before `h` counterclockwise at `v`.
    pub(crate) fn next_cw(&self, v: usize, h: usize) -> usize {
        let r = &self.rot[v];
        r[(self.rot_pos(v, h) + r.len() - 1) % r.len()]
    }

    pub(crate) fn disk_map(&self) -> DiskMap {
        DiskMap::new(self.rot.clone(), self.twin.clone(), &self.boundary)
    }

    pub(crate) fn faces_of(&self, map: &DiskMap) -> Faces {
        map.faces(&self.boundary, self.outer)
    }

    /// Internal faces as walks of half-edges, each face on the right of its
    /// half-edges, and the boundary faces likewise (real half-edges only).
    pub fn faces(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let map = self.disk_map();
        let f = self.faces_of(&map);
        let real = |w: &Vec<usize>| w.iter().copied().filter(|&h| h < map.real).collect::<Vec<_>>();
        let internal = f.internal().iter().map(|&i| f.walks[i].clone()).collect();
        let boundary = (0..f.walks.len())
            .filter(|&i| f.boundary[i] || (self.boundary.is_empty() && Some(i) == f.outer))
            .map(|i| real(&f.walks[i]))
            .collect();
        (internal, boundary)
    }

    pub fn internal_face_count(&self) -> usize {
        self.faces().0.len()
    }

    pub fn validate(&self) -> Result<(), PlabicError> {
        let bad = |m: String| Err(PlabicError::Invalid(m));
        let n = self.color.len();
        let h = self.twin.len();
        if self.on_boundary.len() != n || self.rot.len() != n {
            return bad("vertex arrays differ in length".into());
        }
        if n == 0 {
            return bad("no vertices".into());
        }
        for (x, &t) in self.twin.iter().enumerate() {
            if t >= h || t == x || self.twin[t] != x {
                return bad(format!("half-edge {} is not paired", x));
            }
        }
        let mut seen = vec![false; h];
        for (v, hs) in self.rot.iter().enumerate() {
            let want = if self.on_boundary[v] { 1 } else { 3 };
            if hs.len() != want {
                return bad(format!("vertex {} has degree {} instead of {}", v, hs.len(), want));
            }
            for &x in hs {
                if x >= h || seen[x] {
                    return bad(format!("half-edge {} listed twice or out of range", x));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("a half-edge belongs to no vertex".into());
        }
        let mut listed = vec![false; n];
        for &b in &self.boundary {
            if b >= n || !self.on_boundary[b] || listed[b] {
                return bad(format!("boundary entry {} is not a boundary vertex or repeats", b));
            }
            listed[b] = true;
        }
        if (0..n).any(|v| self.on_boundary[v] && !listed[v]) {
            return bad("a boundary vertex is missing from the boundary order".into());
        }
        if self.boundary.is_empty() && !matches!(self.outer, Some(o) if o < h) {
            return bad("a graph without boundary vertices needs an outer half-edge".into());
        }
        // connectivity
        let vert = self.vert();
        let mut comp = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        comp[0] = true;
        while let Some(v) = queue.pop_front() {
            for &x in &self.rot[v] {
                let w = vert[self.twin[x]];
                if !comp[w] {
                    comp[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if comp.iter().any(|c| !c) {
            return bad("graph is disconnected".into());
        }
        // planarity in the disk
        let map = self.disk_map();
        let faces = self.faces_of(&map);
        let euler = n as i64 - (map.twin.len() / 2) as i64 + faces.walks.len() as i64;
        if euler != 2 {
            return bad(format!("rotation system is not planar (Euler characteristic {})", euler));
        }
        // each internal face borders another internal face across a bicolored edge
        let internal = faces.internal();
        if internal.len() >= 2 {
            for &f in &internal {
                let ok = faces.walks[f].iter().any(|&x| {
                    let g = faces.face_of[map.twin[x]];
                    g != f && internal.contains(&g) && self.color[vert[x]] != self.color[vert[self.twin[x]]]
                });
                if !ok {
                    return bad(format!(
                        "internal face at half-edge {} has no bicolored edge to another internal face",
                        faces.walks[f][0]
                    ));
                }
            }
        }
        Ok(())
    }

    /// `#black - #white` over all vertices.
    pub fn balance(&self) -> i64 {
        self.color.iter().map(|&c| if c == Color::Black { 1 } else { -1 }).sum()
    }

    pub fn parse(text: &str) -> Result<PlabicGraph, PlabicError> {
        let mut verts: Vec<(Color, bool)> = Vec::new();
        let mut rots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut boundary: Option<Vec<usize>> = None;
        let mut outer = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.split('#').next().unwrap().trim();
            if l.is_empty() {
                continue;
            }
            let t: Vec<&str> = l.split_whitespace().collect();
            let err = |m: &str| PlabicError::Parse { line, msg: m.to_string() };
            let num = |s: &str| s.parse::<usize>().map_err(|_| err("expected an integer"));
            match t[0] {
                "v" if t.len() == 4 => {
                    if num(t[1])? != verts.len() {
                        return Err(err("vertices must be numbered consecutively from 0"));
                    }
                    let c = match t[2] {
                        "b" => Color::Black,
                        "w" => Color::White,
                        _ => return Err(err("color must be b or w")),
                    };
                    let b = match t[3] {
                        "i" => false,
                        "d" => true,
                        _ => return Err(err("locus must be i or d")),
                    };
                    verts.push((c, b));
                }
                "rot" if t.len() >= 2 => {
                    let v = num(t[1])?;
                    let hs: Result<Vec<usize>, _> = t[2..].iter().map(|s| num(s)).collect();
                    if rots.insert(v, hs?).is_some() {
                        return Err(err("repeated rotation"));
                    }
                }
                "edge" if t.len() == 3 => edges.push((num(t[1])?, num(t[2])?)),
                "boundary" => {
                    let bs: Result<Vec<usize>, _> = t[1..].iter().map(|s| num(s)).collect();
                    boundary = Some(bs?);
                }
                "outer" if t.len() == 2 => outer = Some(num(t[1])?),
                _ => return Err(err("expected `v`, `rot`, `edge`, `boundary` or `outer`")),
            }
        }
        let perr = |m: &str| PlabicError::Parse { line: 0, msg: m.to_string() };
        // dense half-edge ids in numeric order
        let mut ids: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != 2 * edges.len() {
            return Err(perr("a half-edge appears in two edges"));
        }
        let dense = |x: usize| ids.binary_search(&x).map_err(|_| perr(&format!("half-edge {} is in no edge", x)));
        let mut twin = vec![0; ids.len()];
        for &(a, b) in &edges {
            let (a, b) = (dense(a)?, dense(b)?);
            twin[a] = b;
            twin[b] = a;
        }
        let mut rot = vec![Vec::new(); verts.len()];
        for (v, hs) in rots {
            if v >= verts.len() {
                return Err(perr("rotation for an unknown vertex"));
            }
            rot[v] = hs.into_iter().map(dense).collect::<Result<_, _>>()?;
        }
        let outer = outer.map(dense).transpose()?;
        PlabicGraph::new(
            verts.iter().map(|p| p.0).collect(),
            verts.iter().map(|p| p.1).collect(),
            rot,
            twin,
            boundary.unwrap_or_default(),
            outer,
        )
    }

    /// Canonical code of the embedded graph; with `ignore_boundary_colors`
    /// boundary vertices are encoded without their color.
    pub fn canonical_code(&self, ignore_boundary_colors: bool) -> Vec<u32> {
        let map = self.disk_map();
        let starts: Vec<usize> = if self.boundary.is_empty() {
            let faces = self.faces_of(&map);
            faces.walks[faces.outer.expect("outer face")].clone()
        } else {
            self.boundary.iter().map(|&b| self.rot[b][0]).collect()
        };
        starts.into_iter().map(|s| self.code_from(&map, s, ignore_boundary_colors)).min().unwrap_or_default()
    }

    fn code_from(&self, map: &DiskMap, start: usize, ignore_boundary_colors: bool) -> Vec<u32> {
        let nd = map.twin.len();
        let mut num = vec![u32::MAX; nd];
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut next = 0u32;
        let mut visit = |v: usize, entry: usize, num: &mut Vec<u32>, order: &mut Vec<(usize, usize)>| {
            let r = &map.rot[v];
            let p = map.pos[entry];
            for i in 0..r.len() {
                num[r[(p + i) % r.len()]] = next;
                next += 1;
            }
            order.push((v, entry));
        };
        visit(map.vert[start], start, &mut num, &mut order);
        let mut i = 0;
        while i < order.len() {
            let (v, entry) = order[i];
            let r = &map.rot[v];
            let p = map.pos[entry];
            for j in 0..r.len() {
                let t = map.twin[r[(p + j) % r.len()]];
                if num[t] == u32::MAX {
                    visit(map.vert[t], t, &mut num, &mut order);
                }
            }
            i += 1;
        }
        let mut code = Vec::with_capacity(order.len() * 5);
        for &(v, entry) in &order {
            let r = &map.rot[v];
            let tag = if self.on_boundary[v] {
                if ignore_boundary_colors {
                    2
                } else {
                    3 + self.color[v] as u32
                }
            } else {
                self.color[v] as u32
            };
            code.push(r.len() as u32);
            code.push(tag);
            let p = map.pos[entry];
            for j in 0..r.len() {
                let d = r[(p + j) % r.len()];
                code.push(num[map.twin[d]] * 2 + u32::from(d >= map.real));
            }
        }
        code
    }

    pub fn is_isomorphic(&self, other: &PlabicGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical_code(false) == other.canonical_code(false)
    }

    /// Removes vertices and half-edges marked dead and renumbers the rest.
    /// Returns the graph and the map from old to new half-edge ids.
    pub(crate) fn compacted(&self, dead_v: &[bool], dead_h: &[bool]) -> (PlabicGraph, Vec<Option<usize>>) {
        let mut vmap = vec![usize::MAX; self.color.len()];
        let mut k = 0;
        for v in 0..self.color.len() {
            if !dead_v[v] {
                vmap[v] = k;
                k += 1;
            }
        }
        let mut hmap = vec![None; self.twin.len()];
        let mut k = 0;
        for x in 0..self.twin.len() {
            if !dead_h[x] {
                hmap[x] = Some(k);
                k += 1;
            }
        }
        let keep_v: Vec<usize> = (0..self.color.len()).filter(|&v| !dead_v[v]).collect();
        let g = PlabicGraph {
            color: keep_v.iter().map(|&v| self.color[v]).collect(),
            on_boundary: keep_v.iter().map(|&v| self.on_boundary[v]).collect(),
            rot: keep_v.iter().map(|&v| self.rot[v].iter().map(|&x| hmap[x].unwrap()).collect()).collect(),
            twin: (0..self.twin.len()).filter(|&x| !dead_h[x]).map(|x| hmap[self.twin[x]].unwrap()).collect(),
            boundary: self.boundary.iter().filter(|&&b| !dead_v[b]).map(|&b| vmap[b]).collect(),
            outer: self.outer.and_then(|o| hmap[o]),
        };
        (g, hmap)
    }
}

impl fmt::Display for PlabicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, c) in self.color.iter().enumerate() {
            writeln!(f, "v {} {} {}", v, c.letter(), if self.on_boundary[v] { 'd' } else { 'i' })?;
        }
        for (v, hs) in self.rot.iter().enumerate() {
            write!(f, "rot {}", v)?;
            for h in hs {
                write!(f, " {}", h)?;
            }
            writeln!(f)?;
        }
        for h in self.edges() {
            writeln!(f, "edge {} {}", h, self.twin[h])?;
        }
        write!(f, "boundary")?;
        for b in &self.boundary {
            write!(f, " {}", b)?;
        }
        writeln!(f)?;
        if let Some(o) = self.outer {
            writeln!(f, "outer {}", o)?;
        }
        Ok(())
    }
}

/// One vertex per internal face; across each bicolored edge between two
/// internal faces an arrow with the black endpoint on its right. Opposite
/// arrows cancel.
pub fn quiver_of_plabic(p: &PlabicGraph) -> Quiver {
    let map = p.disk_map();
    let faces = p.faces_of(&map);
    let internal = faces.internal();
    let mut index = vec![usize::MAX; faces.walks.len()];
    for (i, &f) in internal.iter().enumerate() {
        index[f] = i;
    }
    let vert = p.vert();
    let mut q = Quiver::new(internal.len());
    for h in 0..p.twin.len() {
        let (a, b) = (vert[h], vert[p.twin[h]]);
        if p.color[a] != Color::Black || p.color[b] != Color::White {
            continue;
        }
        // h runs from black to white: arrow from its left face to its right face
        let (right, left) = (index[faces.face_of[h]], index[faces.face_of[p.twin[h]]]);
        if right != usize::MAX && left != usize::MAX && right != left {
            q.add_arrows(left, right, 1).expect("distinct vertices");
        }
    }
    q
}
