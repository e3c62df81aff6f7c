//! Budgets and verdicts shared by the equivalence searches.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::time::{Duration, Instant};

use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    /// Cap on stored states, summed over both search directions.
    pub states: usize,
    /// Cap on BFS depth per direction.
    pub depth: Option<usize>,
    pub seconds: Option<f64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { states: 1_000_000, depth: None, seconds: Some(300.0) }
    }
}

impl Budget {
    pub fn states(states: usize) -> Budget {
        Budget { states, ..Budget::default() }
    }

    pub(crate) fn deadline(&self) -> Option<Instant> {
        self.seconds.map(|s| Instant::now() + Duration::from_secs_f64(s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Equivalent(W),
    DistinctByInvariant(String),
    Unknown { states: usize, reason: String },
}

impl<W> Verdict<W> {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Equivalent(w) => Some(w),
            _ => None,
        }
    }
}

impl<W: fmt::Debug> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equivalent(w) => write!(f, "EQUIVALENT witness: {:?}", w),
            Verdict::DistinctByInvariant(r) => write!(f, "DISTINCT {}", r),
            Verdict::Unknown { states, reason } => write!(f, "UNKNOWN after {} states ({})", states, reason),
        }
    }
}

/// Moves from the start and from the target leading to states with equal keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetPath<M> {
    pub forward: Vec<M>,
    pub backward: Vec<M>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStop {
    /// One direction ran out of states: the start and target orbits differ.
    Exhausted {
        states: usize,
    },
    Budget {
        states: usize,
        reason: String,
    },
}

struct Side<M, S> {
    map: HashMap<u128, u32>,
    parent: Vec<(u32, Option<M>)>,
    frontier: Vec<(u32, S)>,
    depth: usize,
}

impl<M: Clone, S> Side<M, S> {
    fn new(root: S, key: u128) -> Self {
        let mut map = HashMap::new();
        map.insert(key, 0);
        Side { map, parent: vec![(u32::MAX, None)], frontier: vec![(0, root)], depth: 0 }
    }

    fn path(&self, mut idx: u32) -> Vec<M> {
        let mut out = Vec::new();
        while let (p, Some(m)) = &self.parent[idx as usize] {
            out.push(m.clone());
            idx = *p;
        }
        out.reverse();
        out
    }
}

/// 128-bit fingerprint of a hashable value, used as a visited-set key.
pub fn fingerprint<T: Hash + ?Sized>(x: &T) -> u128 {
    let mut h1 = DefaultHasher::new();
    x.hash(&mut h1);
    let mut h2 = DefaultHasher::new();
    0x9e37_79b9_7f4a_7c15u64.hash(&mut h2);
    x.hash(&mut h2);
    ((h1.finish() as u128) << 64) | h2.finish() as u128
}

/// Bidirectional breadth-first search over states identified by `key`.
/// Each layer is expanded in parallel; insertion into the visited sets is
/// sequential, so results are deterministic.
pub fn bidirectional_bfs<S, M, K, E>(
    start: S,
    target: S,
    budget: &Budget,
    key: K,
    expand: E,
) -> Result<MeetPath<M>, SearchStop>
where
    S: Send + Sync,
    M: Clone + Send + Sync,
    K: Fn(&S) -> u128 + Sync,
    E: Fn(&S) -> Vec<(M, S)> + Sync,
{
    let ks = key(&start);
    let kt = key(&target);
    if ks == kt {
        return Ok(MeetPath { forward: Vec::new(), backward: Vec::new() });
    }
    let deadline = budget.deadline();
    let mut sides = [Side::new(start, ks), Side::new(target, kt)];
    let total = |s: &[Side<M, S>; 2]| s[0].parent.len() + s[1].parent.len();
    loop {
        let which = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        if sides[which].frontier.is_empty() {
            return Err(SearchStop::Exhausted { states: total(&sides) });
        }
        if let Some(d) = budget.depth {
            if sides[which].depth >= d {
                return Err(SearchStop::Budget { states: total(&sides), reason: format!("depth cap {}", d) });
            }
        }
        let frontier = std::mem::take(&mut sides[which].frontier);
        sides[which].depth += 1;
        let mut next = Vec::new();
        // small chunks keep the time cap responsive
        let chunk_len = 8 * rayon::current_num_threads();
        for chunk in frontier.chunks(chunk_len) {
            if let Some(dl) = deadline {
                if Instant::now() > dl {
                    return Err(SearchStop::Budget { states: total(&sides), reason: "time cap".into() });
                }
            }
            let children: Vec<Vec<(u32, M, u128, S)>> = chunk
                .par_iter()
                .map(|(idx, s)| expand(s).into_iter().map(|(m, c)| (*idx, m, key(&c), c)).collect())
                .collect();
            for (idx, m, k, c) in children.into_iter().flatten() {
                let (own, other) = if which == 0 {
                    let (a, b) = sides.split_at_mut(1);
                    (&mut a[0], &b[0])
                } else {
                    let (a, b) = sides.split_at_mut(1);
                    (&mut b[0], &a[0])
                };
                if own.map.contains_key(&k) {
                    continue;
                }
                let new_idx = own.parent.len() as u32;
                own.parent.push((idx, Some(m)));
                own.map.insert(k, new_idx);
                if let Some(&oi) = other.map.get(&k) {
                    let (fi, bi) = if which == 0 { (new_idx, oi) } else { (oi, new_idx) };
                    return Ok(MeetPath { forward: sides[0].path(fi), backward: sides[1].path(bi) });
                }
                next.push((new_idx, c));
                if total(&sides) >= budget.states {
                    return Err(SearchStop::Budget {
                        states: total(&sides),
                        reason: format!("state cap {}", budget.states),
                    });
                }
            }
        }
        sides[which].frontier = next;
    }
}
