//! Scannable divides: strands scanned left to right with all U-turns at the
//! far ends.

use std::fmt;

use super::{DivideError, PlanarDivide};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScannableDivide {
    pub k: usize,
    /// `i` joins strands `i` and `i + 1` by a U-turn on the left.
    pub left: Vec<usize>,
    pub events: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Klein {
    Id,
    FlipH,
    FlipV,
    Rot180,
}

impl ScannableDivide {
    pub fn new(k: usize, left: &[usize], events: &[usize], right: &[usize]) -> Result<ScannableDivide, DivideError> {
        let mut l = left.to_vec();
        let mut r = right.to_vec();
        l.sort_unstable();
        r.sort_unstable();
        let s = ScannableDivide { k, left: l, events: events.to_vec(), right: r };
        s.check()?;
        Ok(s)
    }

    fn check(&self) -> Result<(), DivideError> {
        let bad = |m: String| Err(DivideError::Scannable(m));
        if self.k < 2 {
            return bad("at least two strands are needed".into());
        }
        let in_range = |i: &usize| (1..self.k).contains(i);
        if let Some(i) = self.events.iter().find(|i| !in_range(i)) {
            return bad(format!("event {} out of range 1..{}", i, self.k - 1));
        }
        for (name, t) in [("left", &self.left), ("right", &self.right)] {
            if let Some(i) = t.iter().find(|i| !in_range(i)) {
                return bad(format!("{} turn {} out of range", name, i));
            }
            if t.windows(2).any(|w| w[1] < w[0] + 2) {
                return bad(format!("{} turns must be pairwise non-adjacent", name));
            }
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<ScannableDivide, DivideError> {
        let mut k = None;
        let (mut l, mut e, mut r) = (Vec::new(), Vec::new(), Vec::new());
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.split('#').next().unwrap().trim();
            if s.is_empty() {
                continue;
            }
            let mut toks = s.split_whitespace();
            let key = toks.next().unwrap();
            let nums: Result<Vec<usize>, _> = toks.map(|t| t.parse::<usize>()).collect();
            let nums = nums.map_err(|_| DivideError::Parse { line, msg: "expected integers".into() })?;
            match key {
                "k" if nums.len() == 1 => k = Some(nums[0]),
                "L" => l = nums,
                "E" => e = nums,
                "R" => r = nums,
                _ => return Err(DivideError::Parse { line, msg: format!("unexpected line `{}`", s) }),
            }
        }
        let k = k.ok_or(DivideError::Parse { line: 0, msg: "missing `k` line".into() })?;
        ScannableDivide::new(k, &l, &e, &r)
    }

    pub fn to_planar(&self) -> PlanarDivide {
        let pairs = |t: &[usize]| t.iter().map(|&i| (i, i + 1)).collect::<Vec<_>>();
        planar_from_turns(self.k, &pairs(&self.left), &self.events, &pairs(&self.right))
            .expect("valid scannable divide")
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for ScannableDivide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        writeln!(f, "L {}", join(&self.left))?;
        writeln!(f, "E {}", join(&self.events))?;
        writeln!(f, "R {}", join(&self.right))
    }
}

/// Builds the planar map of a scanned divide whose U-turns join arbitrary
/// nested pairs of levels `(a, b)`, `a < b`. Loose levels become endpoints.
pub fn planar_from_turns(
    k: usize,
    left_pairs: &[(usize, usize)],
    events: &[usize],
    right_pairs: &[(usize, usize)],
) -> Result<PlanarDivide, DivideError> {
    let bad = |m: &str| Err(DivideError::Scannable(m.to_string()));
    for pairs in [left_pairs, right_pairs] {
        let mut used = vec![false; k + 1];
        for &(a, b) in pairs {
            if a == 0 || a >= b || b > k || used[a] || used[b] {
                return bad("turn pairs must be disjoint level pairs a < b");
            }
            used[a] = true;
            used[b] = true;
        }
        for &(a, b) in pairs {
            for &(c, d) in pairs {
                if a < c && c < b && b < d {
                    return bad("turn pairs cross");
                }
            }
            if (a + 1..b).any(|x| !used[x]) {
                return bad("a loose level lies inside a turn");
            }
        }
    }
    if events.iter().any(|&i| i == 0 || i >= k) {
        return bad("event out of range");
    }
    let n = events.len();
    let in_pair = |pairs: &[(usize, usize)], l: usize| pairs.iter().any(|&(a, b)| a == l || b == l);
    let loose_right: Vec<usize> = (1..=k).filter(|&l| !in_pair(right_pairs, l)).collect();
    let loose_left: Vec<usize> = (1..=k).rev().filter(|&l| !in_pair(left_pairs, l)).collect();
    let m = loose_right.len() + loose_left.len();
    // ports: node darts, endpoint darts, then two per U-turn
    let real = 4 * n + m;
    let turns = left_pairs.len() + right_pairs.len();
    let mut link = vec![usize::MAX; real + 2 * turns];
    let mut connect = |a: usize, b: usize| {
        link[a] = b;
        link[b] = a;
    };
    let mut cur = vec![usize::MAX; k + 1];
    let mut next_turn = real;
    for &(a, b) in left_pairs {
        cur[a] = next_turn;
        cur[b] = next_turn + 1;
        next_turn += 2;
    }
    for (j, &l) in loose_left.iter().enumerate() {
        cur[l] = 4 * n + loose_right.len() + j;
    }
    for (v, &i) in events.iter().enumerate() {
        connect(cur[i], 4 * v + 3);
        connect(cur[i + 1], 4 * v + 2);
        cur[i] = 4 * v;
        cur[i + 1] = 4 * v + 1;
    }
    let mut top_link = None;
    for &(a, b) in right_pairs {
        connect(cur[a], next_turn);
        connect(cur[b], next_turn + 1);
        if b == k {
            top_link = Some((next_turn + 1, cur[b]));
        }
        next_turn += 2;
    }
    for (j, &l) in loose_right.iter().enumerate() {
        connect(cur[l], 4 * n + j);
    }
    let sibling = |p: usize| real + ((p - real) ^ 1);
    let mut partner = vec![usize::MAX; real];
    let mut outer = None;
    let mut seen_turn = vec![false; 2 * turns];
    for d in 0..real {
        if partner[d] != usize::MAX {
            continue;
        }
        let mut x = d;
        let mut y = link[x];
        let mut west = None;
        loop {
            if Some((x, y)) == top_link {
                west = Some(true);
            } else if Some((y, x)) == top_link {
                west = Some(false);
            }
            if y < real {
                break;
            }
            seen_turn[y - real] = true;
            x = sibling(y);
            seen_turn[x - real] = true;
            y = link[x];
        }
        partner[d] = y;
        partner[y] = d;
        // the dart running west along the top strand sees the outer face on its right
        match west {
            Some(true) => outer = Some(d),
            Some(false) => outer = Some(y),
            None => {}
        }
    }
    // U-turn chains with no real dart are nodeless circles
    let mut circles = 0;
    for t in 0..2 * turns {
        if seen_turn[t] {
            continue;
        }
        circles += 1;
        let mut x = real + t;
        while !seen_turn[x - real] {
            seen_turn[x - real] = true;
            let s = sibling(x);
            seen_turn[s - real] = true;
            x = link[s];
        }
    }
    if m > 0 {
        outer = None;
    }
    Ok(PlanarDivide {
        node_names: (0..n).map(|i| format!("n{}", i)).collect(),
        end_names: (0..m).map(|i| format!("e{}", i)).collect(),
        partner,
        boundary: (0..m).collect(),
        circles,
        outer,
    })
}

pub fn klein_act(s: &ScannableDivide, g: Klein) -> ScannableDivide {
    let k = s.k;
    let flip_v = |v: &[usize]| {
        let mut w: Vec<usize> = v.iter().map(|&i| k - i).collect();
        w.sort_unstable();
        w
    };
    match g {
        Klein::Id => s.clone(),
        Klein::FlipH => ScannableDivide {
            k,
            left: s.right.clone(),
            events: s.events.iter().rev().copied().collect(),
            right: s.left.clone(),
        },
        Klein::FlipV => ScannableDivide {
            k,
            left: flip_v(&s.left),
            events: s.events.iter().map(|&i| k - i).collect(),
            right: flip_v(&s.right),
        },
        Klein::Rot180 => klein_act(&klein_act(s, Klein::FlipV), Klein::FlipH),
    }
}

/// The Lissajous divide on `b` strands: cell `(r, c)` of the
/// `(b-1) x (a-1)` grid is a crossing iff `r + c + parity` is even.
pub fn lissajous(a: usize, b: usize, parity: usize) -> Result<ScannableDivide, DivideError> {
    if b < 2 || a < b {
        return Err(DivideError::Scannable("lissajous needs a >= b >= 2".into()));
    }
    let black = |r: usize, c: usize| (r + c + parity).is_multiple_of(2);
    let mut events = Vec::new();
    for c in 1..a {
        for r in 1..b {
            if black(r, c) {
                events.push(r);
            }
        }
    }
    let left = (1..b).filter(|&r| !black(r, 1)).collect::<Vec<_>>();
    let right = (1..b).filter(|&r| !black(r, a - 1)).collect::<Vec<_>>();
    ScannableDivide::new(b, &left, &events, &right)
}

/// The divide of a generic arrangement of `a` lines, using the staircase
/// reduced word `1 (2 1) (3 2 1) ...` of the longest permutation.
pub fn wiring_diagram(a: usize) -> Result<ScannableDivide, DivideError> {
    if a < 2 {
        return Err(DivideError::Scannable("wiring diagram needs a >= 2".into()));
    }
    let events: Vec<usize> = (1..a).flat_map(|j| (1..=j).rev()).collect();
    ScannableDivide::new(a, &[], &events, &[])
}

/// Transversal overlay: `s2` is stacked above `s1`, the strands of `s1`
/// climb across those of `s2` in a grid on the right, and the right U-turns
/// are applied after the grid.
pub fn overlay(s1: &ScannableDivide, s2: &ScannableDivide) -> ScannableDivide {
    let (k1, k2) = (s1.k, s2.k);
    let mut events = s1.events.clone();
    events.extend(s2.events.iter().map(|&i| i + k1));
    // one row per strand of s1, from the top one down
    for i in (1..=k1).rev() {
        for j in 1..=k2 {
            events.push(i + j - 1);
        }
    }
    let mut left = s1.left.clone();
    left.extend(s2.left.iter().map(|&i| i + k1));
    let mut right = s2.right.clone();
    right.extend(s1.right.iter().map(|&i| i + k2));
    ScannableDivide::new(k1 + k2, &left, &events, &right).expect("overlay of valid divides")
}
