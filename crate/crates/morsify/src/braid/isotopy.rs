//! Positive isotopy searches: conjugation by generators (cyclic shifts up to
//! Artin relations) and positive Markov moves.

use std::fmt;

use super::garside::left_normal_form;
use super::{components, cycle_type, underlying_permutation, BraidError, BraidWord};
use crate::search::{bidirectional_bfs, fingerprint, Budget, SearchStop, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidMove {
    /// `sigma_i w' -> w' sigma_i`.
    ShiftLeft(usize),
    /// `w' sigma_i -> sigma_i w'`.
    ShiftRight(usize),
    /// `w -> w sigma_k` on one more strand.
    MarkovInsert,
    /// `w' sigma_{k-1} -> w'` on one strand fewer, when `w'` avoids `sigma_{k-1}`.
    MarkovRemove,
}

impl BraidMove {
    pub fn inverse(self) -> BraidMove {
        match self {
            BraidMove::ShiftLeft(i) => BraidMove::ShiftRight(i),
            BraidMove::ShiftRight(i) => BraidMove::ShiftLeft(i),
            BraidMove::MarkovInsert => BraidMove::MarkovRemove,
            BraidMove::MarkovRemove => BraidMove::MarkovInsert,
        }
    }

    /// Applies the move, or returns `None` if it does not apply.
    pub fn apply(self, w: &BraidWord) -> Option<BraidWord> {
        match self {
            BraidMove::ShiftLeft(i) => {
                let mut rest = left_normal_form(w).left_quotient_word(i)?;
                rest.push(i);
                Some(BraidWord { k: w.k, letters: rest })
            }
            BraidMove::ShiftRight(i) => {
                let rev = left_normal_form(&w.reversed()).left_quotient_word(i)?;
                let mut letters = vec![i];
                letters.extend(rev.into_iter().rev());
                Some(BraidWord { k: w.k, letters })
            }
            BraidMove::MarkovInsert => {
                let mut letters = w.letters.clone();
                letters.push(w.k);
                Some(BraidWord { k: w.k + 1, letters })
            }
            BraidMove::MarkovRemove => {
                if w.k < 2 {
                    return None;
                }
                let top = w.k - 1;
                let rev = left_normal_form(&w.reversed()).left_quotient_word(top)?;
                if rev.contains(&top) {
                    return None;
                }
                Some(BraidWord { k: w.k - 1, letters: rev.into_iter().rev().collect() })
            }
        }
    }
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidMove::ShiftLeft(i) => write!(f, "L{}", i),
            BraidMove::ShiftRight(i) => write!(f, "R{}", i),
            BraidMove::MarkovInsert => write!(f, "M+"),
            BraidMove::MarkovRemove => write!(f, "M-"),
        }
    }
}

fn key(w: &BraidWord) -> u128 {
    fingerprint(&left_normal_form(w))
}

fn conjugations(w: &BraidWord) -> Vec<(BraidMove, BraidWord)> {
    let mut out = Vec::new();
    for i in 1..w.k {
        for m in [BraidMove::ShiftLeft(i), BraidMove::ShiftRight(i)] {
            if let Some(x) = m.apply(w) {
                out.push((m, x));
            }
        }
    }
    out
}

fn run(
    u: &BraidWord,
    v: &BraidWord,
    budget: &Budget,
    expand: impl Fn(&BraidWord) -> Vec<(BraidMove, BraidWord)> + Sync,
) -> Verdict<Vec<BraidMove>> {
    match bidirectional_bfs(u.clone(), v.clone(), budget, key, expand) {
        Ok(path) => {
            let mut w = path.forward.clone();
            w.extend(path.backward.iter().rev().map(|m| m.inverse()));
            let mut cur = u.clone();
            for m in &w {
                match m.apply(&cur) {
                    Some(x) => cur = x,
                    None => return Verdict::Unknown { states: 0, reason: "witness failed to replay".into() },
                }
            }
            if cur.k == v.k && key(&cur) == key(v) {
                Verdict::Equivalent(w)
            } else {
                Verdict::Unknown { states: 0, reason: "fingerprint collision; witness failed to replay".into() }
            }
        }
        Err(SearchStop::Exhausted { states }) => {
            Verdict::DistinctByInvariant(format!("orbit exhausted after {} states", states))
        }
        Err(SearchStop::Budget { states, reason }) => Verdict::Unknown { states, reason },
    }
}

/// Positive isotopy in the solid torus: Artin relations and cyclic shifts.
pub fn solid_torus_isotopic(
    u: &BraidWord,
    v: &BraidWord,
    budget: &Budget,
) -> Result<Verdict<Vec<BraidMove>>, BraidError> {
    if u.k != v.k {
        return Err(BraidError::StrandMismatch(u.k, v.k));
    }
    if u.len() != v.len() {
        return Ok(Verdict::DistinctByInvariant(format!("lengths {} and {}", u.len(), v.len())));
    }
    let (cu, cv) = (cycle_type(&underlying_permutation(u)), cycle_type(&underlying_permutation(v)));
    if cu != cv {
        return Ok(Verdict::DistinctByInvariant(format!("permutation cycle types {:?} and {:?}", cu, cv)));
    }
    Ok(run(u, v, budget, conjugations))
}

/// Positive isotopy: also positive Markov moves. The strand count is capped
/// at one more than the larger input.
pub fn positive_isotopic(u: &BraidWord, v: &BraidWord, budget: &Budget) -> Verdict<Vec<BraidMove>> {
    let (a, b) = (u.len() as i64 - u.k as i64, v.len() as i64 - v.k as i64);
    if a != b {
        return Verdict::DistinctByInvariant(format!("length minus strands {} and {}", a, b));
    }
    let (ca, cb) = (components(u), components(v));
    if ca != cb {
        return Verdict::DistinctByInvariant(format!("components {} and {}", ca, cb));
    }
    let cap = u.k.max(v.k) + 1;
    run(u, v, budget, move |w: &BraidWord| {
        let mut out = conjugations(w);
        if let Some(x) = BraidMove::MarkovRemove.apply(w) {
            out.insert(0, (BraidMove::MarkovRemove, x));
        }
        if w.k < cap {
            out.push((BraidMove::MarkovInsert, BraidMove::MarkovInsert.apply(w).unwrap()));
        }
        out
    })
}
