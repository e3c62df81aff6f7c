//! A'Campo-Gusein-Zade diagrams of divides and the quivers they define.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::divide::PlanarDivide;
use crate::quiver::Quiver;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AgError {
    #[error("regions cannot be signed consistently")]
    SignConflict,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Black,
    Plus,
    Minus,
}

impl Tag {
    fn letter(self) -> char {
        match self {
            Tag::Black => 'b',
            Tag::Plus => 'p',
            Tag::Minus => 'm',
        }
    }
}

/// Vertices are the nodes of the divide followed by its regions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgDiagram {
    pub tags: Vec<Tag>,
    /// `(i, j, multiplicity)` with `i < j`.
    pub edges: Vec<(usize, usize, usize)>,
}

/// Signs of all faces inside the disk, or `None` for the outer face.
/// Faces across an edge get opposite signs; the first region is `true`.
pub(crate) fn face_signs(d: &PlanarDivide) -> Result<(crate::map::Faces, Vec<Option<bool>>), AgError> {
    let map = d.disk_map();
    let faces = d.faces_of(&map);
    let nf = faces.walks.len();
    let mut sign: Vec<Option<bool>> = vec![None; nf];
    let outer = faces.outer;
    let regions = d.regions();
    let mut order: Vec<usize> = regions.iter().map(|r| faces.face_of[r.walk[0]]).collect();
    order.extend(0..nf);
    for start in order {
        if Some(start) == outer || sign[start].is_some() {
            continue;
        }
        sign[start] = Some(true);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let s = sign[f].unwrap();
            for &dart in &faces.walks[f] {
                if dart >= map.real {
                    continue;
                }
                let g = faces.face_of[map.twin[dart]];
                if Some(g) == outer {
                    continue;
                }
                match sign[g] {
                    None => {
                        sign[g] = Some(!s);
                        stack.push(g);
                    }
                    Some(t) if t == s => return Err(AgError::SignConflict),
                    _ => {}
                }
            }
        }
    }
    Ok((faces, sign))
}

pub fn ag_diagram(d: &PlanarDivide) -> Result<AgDiagram, AgError> {
    let n = d.nodes();
    let regions = d.regions();
    if d.nodes() == 0 && d.ends() == 0 {
        return Ok(AgDiagram { tags: vec![Tag::Plus; regions.len()], edges: Vec::new() });
    }
    let (faces, sign) = face_signs(d)?;
    let mut region_of_face = vec![usize::MAX; faces.walks.len()];
    for r in &regions {
        region_of_face[faces.face_of[r.walk[0]]] = r.id;
    }
    let mut tags = vec![Tag::Black; n];
    for r in &regions {
        let s = sign[faces.face_of[r.walk[0]]].unwrap();
        tags.push(if s { Tag::Plus } else { Tag::Minus });
    }
    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in &regions {
        for &dart in &r.walk {
            *mult.entry((dart / 4, n + r.id)).or_default() += 1;
            let other = region_of_face[faces.face_of[d.partner[dart]]];
            if other != usize::MAX && other > r.id {
                *mult.entry((n + r.id, n + other)).or_default() += 1;
            }
        }
    }
    Ok(AgDiagram { tags, edges: mult.into_iter().map(|((i, j), m)| (i, j, m)).collect() })
}

impl AgDiagram {
    pub fn to_quiver(&self) -> Quiver {
        let mut q = Quiver::new(self.tags.len());
        for &(i, j, m) in &self.edges {
            let forward = matches!(
                (self.tags[i], self.tags[j]),
                (Tag::Black, Tag::Plus) | (Tag::Plus, Tag::Minus) | (Tag::Minus, Tag::Black)
            );
            let (a, b) = if forward { (i, j) } else { (j, i) };
            q.add_arrows(a, b, m as i32).expect("distinct vertices");
        }
        q
    }

    pub fn parse(text: &str) -> Result<AgDiagram, AgError> {
        let mut tags = Vec::new();
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.split('#').next().unwrap().trim();
            if l.is_empty() {
                continue;
            }
            let t: Vec<&str> = l.split_whitespace().collect();
            let err = |m: &str| AgError::Parse { line, msg: m.to_string() };
            let num = |s: &str| s.parse::<usize>().map_err(|_| err("expected an integer"));
            match (t[0], t.len()) {
                ("v", 3) => {
                    if num(t[1])? != tags.len() {
                        return Err(err("vertices must be numbered consecutively from 0"));
                    }
                    tags.push(match t[2] {
                        "b" => Tag::Black,
                        "p" => Tag::Plus,
                        "m" => Tag::Minus,
                        _ => return Err(err("tag must be b, p or m")),
                    });
                }
                ("e", 4) => {
                    let (a, b, m) = (num(t[1])?, num(t[2])?, num(t[3])?);
                    edges.push((a.min(b), a.max(b), m));
                }
                _ => return Err(err("expected `v <id> <b|p|m>` or `e <id> <id> <mult>`")),
            }
        }
        if edges.iter().any(|&(a, b, _)| b >= tags.len() || a == b) {
            return Err(AgError::Parse { line: 0, msg: "edge endpoint out of range".into() });
        }
        Ok(AgDiagram { tags, edges })
    }
}

impl fmt::Display for AgDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tags.iter().enumerate() {
            writeln!(f, "v {} {}", i, t.letter())?;
        }
        for &(i, j, m) in &self.edges {
            writeln!(f, "e {} {} {}", i, j, m)?;
        }
        Ok(())
    }
}

pub fn quiver_of_divide(d: &PlanarDivide) -> Result<Quiver, AgError> {
    Ok(ag_diagram(d)?.to_quiver())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{self, parse};
    use crate::quiver::is_isomorphic;

    #[test]
    fn node_gives_single_vertex() {
        let a = ag_diagram(&parse(gallery::NODE)).unwrap();
        assert_eq!(a.tags, vec![Tag::Black]);
        assert!(a.edges.is_empty());
    }

    #[test]
    fn a3_diagrams() {
        let left = ag_diagram(&parse(gallery::TWO_ARCS)).unwrap();
        assert_eq!(left.tags, vec![Tag::Black, Tag::Black, Tag::Plus]);
        assert_eq!(left.edges, vec![(0, 2, 1), (1, 2, 1)]);
        let right = ag_diagram(&parse(gallery::FIGURE_EIGHT)).unwrap();
        assert_eq!(right.tags.iter().filter(|&&t| t == Tag::Black).count(), 1);
        assert_eq!(right.tags[1], right.tags[2]);
        assert_eq!(right.edges, vec![(0, 1, 1), (0, 2, 1)]);
        let path = Quiver::from_arrows(3, &[(0, 1, 1), (2, 1, 1)]).unwrap();
        assert!(is_isomorphic(&left.to_quiver(), &path));
        assert!(is_isomorphic(&right.to_quiver(), &path));
    }

    #[test]
    fn e6_quivers() {
        let l = quiver_of_divide(&parse(gallery::E6_LEFT)).unwrap();
        let r = quiver_of_divide(&parse(gallery::E6_RIGHT)).unwrap();
        assert_eq!(l.arrow_count(), 9);
        assert_eq!(r.arrow_count(), 5);
        assert!(!is_isomorphic(&l, &r));
        // the right one is the E6 tree: one vertex of degree 3 with arms 1, 2, 2
        let mut deg: Vec<usize> = (0..6).map(|v| (0..6).filter(|&u| r.b(v, u) != 0).count()).collect();
        deg.sort_unstable();
        assert_eq!(deg, vec![1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn serialization_round_trip() {
        let a = ag_diagram(&parse(gallery::E6_LEFT)).unwrap();
        assert_eq!(AgDiagram::parse(&a.to_string()).unwrap(), a);
    }
}
