//! Divides as planar maps in a disk, and scannable divides.
//!
//! A node `v` owns darts `4v..4v+4` (slots 0..3 counterclockwise; slots
//! `{0,2}` and `{1,3}` lie on the same branch). Endpoint `e` owns dart
//! `4 * nodes + e`. `partner` pairs darts into edges.

mod scan;
mod yb;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::map::{DiskMap, Faces};

pub use scan::{klein_act, lissajous, overlay, planar_from_turns, wiring_diagram, Klein, ScannableDivide};
pub use yb::{apply_yb, yb_sites, YbSite};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum DivideError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: malformed slot reference `{reference}`")]
    MalformedSlot { line: usize, reference: String },
    #[error("line {line}: slot {slot} used twice")]
    DuplicateSlot { line: usize, slot: String },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("line {line}: endpoint {id} has more than one edge")]
    EndpointDegree { line: usize, id: String },
    #[error("slot {0} has no edge")]
    Unpaired(String),
    #[error("boundary: {0}")]
    Boundary(String),
    #[error("invalid scannable divide: {0}")]
    Scannable(String),
    #[error("invalid Yang-Baxter site")]
    InvalidSite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDivide {
    pub node_names: Vec<String>,
    pub end_names: Vec<String>,
    pub partner: Vec<usize>,
    /// Endpoints in counterclockwise order along the disk boundary.
    pub boundary: Vec<usize>,
    /// Branches that are circles without nodes.
    pub circles: usize,
    /// A dart whose face (on its right) is the outer face; only needed when
    /// there are no endpoints.
    pub outer: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    Interval,
    Circle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub kind: BranchKind,
    /// Edges as (dart, partner) in traversal order.
    pub edges: Vec<(usize, usize)>,
}

/// A face not touching the disk boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: usize,
    /// Darts of the face walk; the region lies to the right of each.
    pub walk: Vec<usize>,
}

impl Region {
    /// (node, dart) incidences along the boundary walk.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.walk.iter().map(|&d| (d / 4, d)).collect()
    }

    pub fn nodes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.walk.iter().map(|&d| d / 4).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{:?}: {}", v.condition, v.message)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellCount {
    pub nodes: usize,
    pub regions: usize,
    pub total: usize,
}

impl PlanarDivide {
    pub fn nodes(&self) -> usize {
        self.node_names.len()
    }

    pub fn ends(&self) -> usize {
        self.end_names.len()
    }

    pub fn end_dart(&self, e: usize) -> usize {
        4 * self.nodes() + e
    }

    pub fn is_node_dart(&self, d: usize) -> bool {
        d < 4 * self.nodes()
    }

    /// The dart continuing the branch through the node of `d`.
    pub fn opposite(d: usize) -> usize {
        (d & !3) | ((d + 2) & 3)
    }

    pub fn parse(text: &str) -> Result<PlanarDivide, DivideError> {
        parse_pdv(text)
    }

    pub(crate) fn disk_map(&self) -> DiskMap {
        let n = self.nodes();
        let mut rot: Vec<Vec<usize>> = (0..n).map(|v| (4 * v..4 * v + 4).collect()).collect();
        rot.extend((0..self.ends()).map(|e| vec![4 * n + e]));
        let bverts: Vec<usize> = self.boundary.iter().map(|&e| n + e).collect();
        DiskMap::new(rot, self.partner.clone(), &bverts)
    }

    pub(crate) fn faces_of(&self, map: &DiskMap) -> Faces {
        let bverts: Vec<usize> = self.boundary.iter().map(|&e| self.nodes() + e).collect();
        let mut f = map.faces(&bverts, self.outer);
        if f.outer.is_none() && !f.walks.is_empty() {
            // fall back to the longest face
            let best = (0..f.walks.len()).max_by_key(|&i| (f.walks[i].len(), std::cmp::Reverse(i))).unwrap();
            f.outer = Some(best);
            f.boundary[best] = false;
        }
        f
    }

    pub fn branches(&self) -> Vec<Branch> {
        let n = self.nodes();
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for &e in &self.boundary {
            let start = self.end_dart(e);
            if seen[start] {
                continue;
            }
            let mut edges = Vec::new();
            let mut d = start;
            loop {
                let p = self.partner[d];
                seen[d] = true;
                seen[p] = true;
                edges.push((d, p));
                if p >= 4 * n {
                    break;
                }
                d = Self::opposite(p);
            }
            out.push(Branch { kind: BranchKind::Interval, edges });
        }
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            let mut edges = Vec::new();
            let mut d = start;
            while !seen[d] {
                let p = self.partner[d];
                seen[d] = true;
                seen[p] = true;
                edges.push((d, p));
                d = Self::opposite(p);
            }
            out.push(Branch { kind: BranchKind::Circle, edges });
        }
        for _ in 0..self.circles {
            out.push(Branch { kind: BranchKind::Circle, edges: Vec::new() });
        }
        out
    }

    /// Internal faces, ordered by (least incident node, least dart).
    pub fn regions(&self) -> Vec<Region> {
        if self.nodes() == 0 && self.ends() == 0 {
            return (0..self.circles).map(|id| Region { id, walk: Vec::new() }).collect();
        }
        let map = self.disk_map();
        let faces = self.faces_of(&map);
        let mut walks: Vec<Vec<usize>> = faces.internal().into_iter().map(|f| faces.walks[f].clone()).collect();
        for w in walks.iter_mut() {
            let (i, _) = w.iter().enumerate().min_by_key(|(_, &d)| d).unwrap();
            w.rotate_left(i);
        }
        walks.sort_by_key(|w| (w.iter().map(|d| d / 4).min().unwrap(), w[0]));
        walks.into_iter().enumerate().map(|(id, walk)| Region { id, walk }).collect()
    }

    pub fn cell_count(&self) -> CellCount {
        let nodes = self.nodes();
        let regions = self.regions().len();
        CellCount { nodes, regions, total: nodes + regions }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let mut push = |c: Condition, m: String| rep.violations.push(Violation { condition: c, message: m });
        let m = self.ends();
        let mut count = vec![0usize; m];
        for &e in &self.boundary {
            if e < m {
                count[e] += 1;
            }
        }
        if self.boundary.len() != m || count.iter().any(|&c| c != 1) {
            push(Condition::D2, "boundary order must list every endpoint exactly once".into());
            return rep;
        }
        if self.partner.len() != 4 * self.nodes() + m
            || (0..self.partner.len()).any(|d| self.partner[self.partner[d]] != d || self.partner[d] == d)
        {
            push(Condition::D1, "edges do not pair the half-edges".into());
            return rep;
        }
        let has_map = self.nodes() + m > 0;
        if (has_map && self.circles > 0) || self.circles > 1 {
            push(Condition::D5, "union of branches is disconnected".into());
            return rep;
        }
        if !has_map {
            return rep;
        }
        let n = self.nodes();
        let connected = {
            // connectivity of the real graph (arcs excluded)
            let nv = n + m;
            let mut seen = vec![false; nv];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                let darts: Vec<usize> = if v < n { (4 * v..4 * v + 4).collect() } else { vec![4 * n + v - n] };
                for d in darts {
                    let p = self.partner[d];
                    let w = if p < 4 * n { p / 4 } else { n + p - 4 * n };
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        if !connected {
            push(Condition::D5, "union of branches is disconnected".into());
            return rep;
        }
        let regions = self.regions();
        // body: union-find over nodes and regions joined by incidence
        let mut parent: Vec<usize> = (0..n + regions.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for r in &regions {
            for v in r.nodes() {
                let a = find(&mut parent, v);
                let b = find(&mut parent, n + r.id);
                parent[a] = b;
            }
        }
        let comps = (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count();
        if comps > 1 {
            push(Condition::D5, format!("body has {} components", comps));
        }
        rep
    }

    /// A string equal for divides related by an orientation-preserving
    /// homeomorphism of the disk.
    pub fn iso_code(&self) -> Vec<usize> {
        let n = self.nodes();
        let starts: Vec<usize> = if self.ends() > 0 {
            self.boundary.iter().map(|&e| self.end_dart(e)).collect()
        } else if let Some(o) = self.outer {
            let map = self.disk_map();
            let f = map.faces(&[], Some(o));
            f.walks[f.face_of[o]].clone()
        } else {
            (0..4 * n).collect()
        };
        let mut best: Option<Vec<usize>> = None;
        for s in starts {
            let c = self.code_from(s);
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
        let mut out = best.unwrap_or_default();
        out.push(usize::MAX);
        out.push(self.circles);
        out
    }

    fn code_from(&self, start: usize) -> Vec<usize> {
        let n = self.nodes();
        let vert = |d: usize| if d < 4 * n { d / 4 } else { n + d - 4 * n };
        let deg = |v: usize| if v < n { 4 } else { 1 };
        let dart_at = |v: usize, i: usize| if v < n { 4 * v + (i % 4) } else { 4 * n + v - n };
        let offset = |v: usize, d: usize| if v < n { d % 4 } else { 0 };
        let mut label = vec![usize::MAX; n + self.ends()];
        let mut entry = vec![0usize; n + self.ends()];
        let mut order = vec![vert(start)];
        label[vert(start)] = 0;
        entry[vert(start)] = offset(vert(start), start);
        let mut code = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            code.push(deg(v));
            for j in 0..deg(v) {
                let d = dart_at(v, entry[v] + j);
                let p = self.partner[d];
                let w = vert(p);
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    entry[w] = offset(w, p);
                    order.push(w);
                }
                code.push(label[w]);
                code.push((offset(w, p) + 4 - entry[w]) % 4);
            }
        }
        code
    }

    pub fn is_isomorphic(&self, other: &PlanarDivide) -> bool {
        self.nodes() == other.nodes() && self.ends() == other.ends() && self.iso_code() == other.iso_code()
    }

    fn dart_name(&self, d: usize) -> String {
        if self.is_node_dart(d) {
            format!("{}.{}", self.node_names[d / 4], d % 4)
        } else {
            format!("{}.0", self.end_names[d - 4 * self.nodes()])
        }
    }
}

impl fmt::Display for PlanarDivide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for name in &self.node_names {
            writeln!(f, "node {}", name)?;
        }
        for name in &self.end_names {
            writeln!(f, "end {}", name)?;
        }
        for d in 0..self.partner.len() {
            let p = self.partner[d];
            if d < p {
                writeln!(f, "edge {} {}", self.dart_name(d), self.dart_name(p))?;
            }
        }
        if self.circles > 0 {
            writeln!(f, "circles {}", self.circles)?;
        }
        if let Some(o) = self.outer {
            writeln!(f, "outer {}", self.dart_name(o))?;
        }
        let names: Vec<&str> = self.boundary.iter().map(|&e| self.end_names[e].as_str()).collect();
        writeln!(f, "boundary {}", names.join(" "))
    }
}

fn parse_pdv(text: &str) -> Result<PlanarDivide, DivideError> {
    enum Id {
        Node(usize),
        End(usize),
    }
    let mut ids: HashMap<String, Id> = HashMap::new();
    let mut node_names = Vec::new();
    let mut end_names = Vec::new();
    let mut edges: Vec<(usize, String, String)> = Vec::new();
    let mut boundary_line: Option<(usize, Vec<String>)> = None;
    let mut outer_ref: Option<(usize, String)> = None;
    let mut circles = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.split('#').next().unwrap().trim();
        if l.is_empty() {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        let perr = |msg: &str| DivideError::Parse { line, msg: msg.to_string() };
        match toks[0] {
            "node" | "end" => {
                if toks.len() != 2 {
                    return Err(perr("expected one id"));
                }
                let name = toks[1].to_string();
                if ids.contains_key(&name) {
                    return Err(perr(&format!("id {} declared twice", name)));
                }
                if toks[0] == "node" {
                    ids.insert(name.clone(), Id::Node(node_names.len()));
                    node_names.push(name);
                } else {
                    ids.insert(name.clone(), Id::End(end_names.len()));
                    end_names.push(name);
                }
            }
            "edge" => {
                if toks.len() != 3 {
                    return Err(perr("expected two slot references"));
                }
                edges.push((line, toks[1].to_string(), toks[2].to_string()));
            }
            "boundary" => boundary_line = Some((line, toks[1..].iter().map(|s| s.to_string()).collect())),
            "circles" => {
                circles = toks.get(1).and_then(|s| s.parse().ok()).ok_or_else(|| perr("expected a count"))?;
            }
            "outer" => {
                let r = toks.get(1).ok_or_else(|| perr("expected a slot reference"))?;
                outer_ref = Some((line, r.to_string()));
            }
            other => return Err(perr(&format!("unknown keyword `{}`", other))),
        }
    }
    let n = node_names.len();
    let total = 4 * n + end_names.len();
    let resolve = |line: usize, r: &str| -> Result<usize, DivideError> {
        let bad = || DivideError::MalformedSlot { line, reference: r.to_string() };
        let (name, slot) = r.rsplit_once('.').ok_or_else(bad)?;
        let slot: usize = slot.parse().map_err(|_| bad())?;
        match ids.get(name) {
            Some(Id::Node(v)) if slot < 4 => Ok(4 * v + slot),
            Some(Id::End(e)) if slot == 0 => Ok(4 * n + e),
            _ => Err(bad()),
        }
    };
    let mut partner = vec![usize::MAX; total];
    let mut seen_edges = std::collections::HashSet::new();
    for (line, a, b) in &edges {
        let da = resolve(*line, a)?;
        let db = resolve(*line, b)?;
        let key = (da.min(db), da.max(db));
        if !seen_edges.insert(key) {
            return Err(DivideError::DuplicateEdge { line: *line });
        }
        for (d, r) in [(da, a), (db, b)] {
            if partner[d] != usize::MAX || da == db {
                if d >= 4 * n {
                    return Err(DivideError::EndpointDegree { line: *line, id: end_names[d - 4 * n].clone() });
                }
                return Err(DivideError::DuplicateSlot { line: *line, slot: r.clone() });
            }
        }
        partner[da] = db;
        partner[db] = da;
    }
    let pd_name = |d: usize| {
        if d < 4 * n {
            format!("{}.{}", node_names[d / 4], d % 4)
        } else {
            end_names[d - 4 * n].clone()
        }
    };
    if let Some(d) = (0..total).find(|&d| partner[d] == usize::MAX) {
        return Err(DivideError::Unpaired(pd_name(d)));
    }
    let mut boundary = Vec::new();
    match boundary_line {
        Some((line, names)) => {
            for name in names {
                match ids.get(&name) {
                    Some(Id::End(e)) => boundary.push(*e),
                    _ => return Err(DivideError::Parse { line, msg: format!("`{}` is not an endpoint", name) }),
                }
            }
        }
        None if end_names.is_empty() => {}
        None => return Err(DivideError::Boundary("missing boundary line".into())),
    }
    let mut sorted = boundary.clone();
    sorted.sort_unstable();
    if sorted != (0..end_names.len()).collect::<Vec<_>>() {
        return Err(DivideError::Boundary("every endpoint must appear exactly once".into()));
    }
    let outer = match outer_ref {
        Some((line, r)) => Some(resolve(line, &r)?),
        None => None,
    };
    Ok(PlanarDivide { node_names, end_names, partner, boundary, circles, outer })
}

/// Helper for building divides: node `v` slot `s` and endpoint `e`.
#[derive(Debug, Clone, Copy)]
pub enum Slot {
    N(usize, usize),
    E(usize),
}

impl PlanarDivide {
    /// Builds a divide from edges between slots, with default names.
    pub fn from_edges(nodes: usize, ends: usize, edges: &[(Slot, Slot)], boundary: Vec<usize>) -> PlanarDivide {
        let dart = |s: Slot| match s {
            Slot::N(v, k) => 4 * v + k,
            Slot::E(e) => 4 * nodes + e,
        };
        let mut partner = vec![usize::MAX; 4 * nodes + ends];
        for &(a, b) in edges {
            partner[dart(a)] = dart(b);
            partner[dart(b)] = dart(a);
        }
        PlanarDivide {
            node_names: (0..nodes).map(|i| format!("n{}", i)).collect(),
            end_names: (0..ends).map(|i| format!("e{}", i)).collect(),
            partner,
            boundary,
            circles: 0,
            outer: None,
        }
    }
}

#[cfg(test)]
mod tests;
