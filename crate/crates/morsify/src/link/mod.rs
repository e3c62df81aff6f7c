//! Link diagrams as planar-diagram codes and the invariants used to compare
//! them: component count, Alexander polynomial, Kauffman bracket and Jones.

mod alexander;
mod bracket;
mod poly;

use std::fmt;

use thiserror::Error;

use crate::braid::{components, BraidWord};

pub use alexander::{alexander, alexander_of_diagram};
pub use bracket::{format_jones, jones, kauffman_bracket, DEFAULT_CAP};
pub use poly::LaurentPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("{crossings} crossings exceed the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal consistency error: {0}")]
    Internal(String),
}

/// Arc labels counterclockwise from the incoming under-arc. For a positive
/// crossing they are `[under in, over out, under out, over in]`, for a
/// negative one `[under in, over in, under out, over out]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            self.arcs[3]
        } else {
            self.arcs[1]
        }
    }

    pub fn over_out(&self) -> usize {
        if self.sign > 0 {
            self.arcs[1]
        } else {
            self.arcs[3]
        }
    }
}

/// Arc labels run over `1..=2n`; `free_loops` counts crossingless unknotted
/// components drawn apart from the rest.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkDiagram {
    pub crossings: Vec<Crossing>,
    pub free_loops: usize,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<LinkDiagram, LinkError> {
        let d = LinkDiagram { crossings, free_loops };
        d.check()?;
        Ok(d)
    }

    pub(crate) fn label_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Each label enters exactly one crossing and leaves exactly one.
    fn check(&self) -> Result<(), LinkError> {
        let n = self.label_count();
        let mut ins = vec![0u8; n + 1];
        let mut outs = vec![0u8; n + 1];
        for c in &self.crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(LinkError::Malformed("crossing sign must be +1 or -1".into()));
            }
            if let Some(&a) = c.arcs.iter().find(|&&a| a == 0 || a > n) {
                return Err(LinkError::Malformed(format!("arc label {} outside 1..={}", a, n)));
            }
            ins[c.arcs[0]] += 1;
            outs[c.arcs[2]] += 1;
            ins[c.over_in()] += 1;
            outs[c.over_out()] += 1;
        }
        if let Some(l) = (1..=n).find(|&l| ins[l] != 1 || outs[l] != 1) {
            return Err(LinkError::Malformed(format!("arc {} does not run from one crossing to another", l)));
        }
        Ok(())
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn parse(text: &str) -> Result<LinkDiagram, LinkError> {
        let mut crossings = Vec::new();
        let mut free_loops = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.split('#').next().unwrap().trim();
            if l.is_empty() {
                continue;
            }
            let t: Vec<&str> = l.split_whitespace().collect();
            let err = |m: &str| LinkError::Parse { line, msg: m.to_string() };
            match (t[0], t.len()) {
                ("X", 6) => {
                    let mut arcs = [0usize; 4];
                    for (a, s) in arcs.iter_mut().zip(&t[1..5]) {
                        *a = s.parse().map_err(|_| err("bad arc label"))?;
                    }
                    let sign = match t[5] {
                        "+" => 1,
                        "-" => -1,
                        _ => return Err(err("sign must be + or -")),
                    };
                    crossings.push(Crossing { arcs, sign });
                }
                ("U", 2) => free_loops += t[1].parse::<usize>().map_err(|_| err("bad loop count"))?,
                _ => return Err(err("expected `X a b c d +|-` or `U <count>`")),
            }
        }
        LinkDiagram::new(crossings, free_loops)
    }

    /// Renumbers labels to `1..=2n` in order of first appearance.
    pub(crate) fn compacted(crossings: Vec<Crossing>, free_loops: usize) -> LinkDiagram {
        let mut map = std::collections::HashMap::new();
        let crossings = crossings
            .into_iter()
            .map(|c| {
                let mut arcs = c.arcs;
                for a in arcs.iter_mut() {
                    let next = map.len() + 1;
                    *a = *map.entry(*a).or_insert(next);
                }
                Crossing { arcs, sign: c.sign }
            })
            .collect();
        LinkDiagram { crossings, free_loops }
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            let [a, b, cc, d] = c.arcs;
            writeln!(f, "X {} {} {} {} {}", a, b, cc, d, if c.sign > 0 { '+' } else { '-' })?;
        }
        if self.free_loops > 0 {
            writeln!(f, "U {}", self.free_loops)?;
        }
        Ok(())
    }
}

/// The closure of a positive braid: strands go up, `sigma_i` crosses the
/// strand at position `i-1` over the one at position `i`.
pub fn closure(w: &BraidWord) -> LinkDiagram {
    let k = w.k;
    let start: Vec<usize> = (1..=k).collect();
    let mut at = start.clone();
    let mut next = k + 1;
    let mut crossings = Vec::with_capacity(w.len());
    let mut touched = vec![false; k];
    for &i in &w.letters {
        let (ui, oi) = (at[i], at[i - 1]);
        let (uo, oo) = (next, next + 1);
        next += 2;
        crossings.push(Crossing { arcs: [ui, oo, uo, oi], sign: 1 });
        at[i - 1] = uo;
        at[i] = oo;
        touched[i - 1] = true;
        touched[i] = true;
    }
    let mut rename: Vec<usize> = (0..next).collect();
    for p in 0..k {
        rename[at[p]] = start[p];
    }
    for c in crossings.iter_mut() {
        for a in c.arcs.iter_mut() {
            *a = rename[*a];
        }
    }
    let free = touched.iter().filter(|&&t| !t).count();
    LinkDiagram::compacted(crossings, free)
}

pub fn component_count(d: &LinkDiagram) -> usize {
    let n = d.label_count();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for c in &d.crossings {
        for (x, y) in [(c.arcs[0], c.arcs[2]), (c.over_in(), c.over_out())] {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            parent[a] = b;
        }
    }
    let roots = (1..=n).filter(|&l| find(&mut parent, l) == l).count();
    roots + d.free_loops
}

/// Link invariants. Equal fingerprints are only consistent with equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub components: usize,
    pub alexander: LaurentPoly,
    pub jones: Option<LaurentPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FingerprintMatch {
    ProvenDistinct(String),
    ConsistentWithEquivalent,
}

impl Fingerprint {
    pub fn compare(&self, other: &Fingerprint) -> FingerprintMatch {
        if self.components != other.components {
            return FingerprintMatch::ProvenDistinct(format!(
                "components {} and {}",
                self.components, other.components
            ));
        }
        if self.alexander != other.alexander {
            return FingerprintMatch::ProvenDistinct(format!(
                "Alexander polynomials {} and {}",
                self.alexander, other.alexander
            ));
        }
        if let (Some(a), Some(b)) = (&self.jones, &other.jones) {
            if a != b {
                return FingerprintMatch::ProvenDistinct(format!(
                    "Jones polynomials {} and {}",
                    format_jones(a),
                    format_jones(b)
                ));
            }
        }
        FingerprintMatch::ConsistentWithEquivalent
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "components: {}", self.components)?;
        writeln!(f, "alexander: {}", self.alexander)?;
        match &self.jones {
            Some(j) => writeln!(f, "jones: {}", format_jones(j)),
            None => writeln!(f, "jones: skipped (over the crossing cap)"),
        }
    }
}

/// Jones is included when the closure has at most `cap` crossings.
pub fn fingerprint_of_braid(w: &BraidWord, cap: usize) -> Result<Fingerprint, LinkError> {
    let jones = if w.len() <= cap { Some(jones(&closure(w), cap)?) } else { None };
    Ok(Fingerprint { components: components(w), alexander: alexander(w)?, jones })
}

pub fn fingerprint_of_diagram(d: &LinkDiagram, cap: usize) -> Result<Fingerprint, LinkError> {
    let jones = if d.crossings.len() <= cap { Some(jones(d, cap)?) } else { None };
    Ok(Fingerprint { components: component_count(d), alexander: alexander_of_diagram(d)?, jones })
}

#[cfg(test)]
mod tests;
