//! Positive braid words, the Garside normal form and positive isotopy.

mod garside;
mod isotopy;

use std::fmt;

use thiserror::Error;

use crate::divide::ScannableDivide;
use crate::plabic::{FenceLetter, FenceWord};

pub use garside::{left_normal_form, NormalForm};
pub use isotopy::{positive_isotopic, solid_torus_isotopic, BraidMove};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("braids on {0} and {1} strands")]
    StrandMismatch(usize, usize),
    #[error("generator {0} out of range for {1} strands")]
    OutOfRange(usize, usize),
    #[error("braid word: {0}")]
    Parse(String),
}

/// A positive braid word on `k` strands; letter `i` stands for `sigma_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub k: usize,
    pub letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(k: usize, letters: Vec<usize>) -> Result<BraidWord, BraidError> {
        if let Some(&i) = letters.iter().find(|&&i| i == 0 || i >= k) {
            return Err(BraidError::OutOfRange(i, k));
        }
        Ok(BraidWord { k: k.max(1), letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn pow(&self, p: usize) -> BraidWord {
        BraidWord { k: self.k, letters: self.letters.repeat(p) }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.k != other.k {
            return Err(BraidError::StrandMismatch(self.k, other.k));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { k: self.k, letters })
    }

    pub fn reversed(&self) -> BraidWord {
        BraidWord { k: self.k, letters: self.letters.iter().rev().copied().collect() }
    }

    /// Parses `k : i j ...`; a leading `k` keyword is accepted.
    pub fn parse(text: &str) -> Result<BraidWord, BraidError> {
        let t = text.trim();
        let t = t.strip_prefix('k').map(str::trim_start).unwrap_or(t);
        let (head, tail) = t.split_once(':').ok_or_else(|| BraidError::Parse("expected `k : letters`".into()))?;
        let k: usize = head.trim().parse().map_err(|_| BraidError::Parse("bad strand count".into()))?;
        let letters: Result<Vec<usize>, _> = tail.split_whitespace().map(|s| s.parse::<usize>()).collect();
        let letters = letters.map_err(|_| BraidError::Parse("bad generator index".into()))?;
        BraidWord::new(k, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :", self.k)?;
        for i in &self.letters {
            write!(f, " {}", i)?;
        }
        Ok(())
    }
}

/// `left * bulk * right * klub`: left U-turns, the events, right U-turns,
/// then the events again from right to left.
pub fn beta_of_scannable(s: &ScannableDivide) -> BraidWord {
    let mut letters = s.left.clone();
    letters.extend_from_slice(&s.events);
    letters.extend_from_slice(&s.right);
    letters.extend(s.events.iter().rev());
    BraidWord { k: s.k, letters }
}

/// All sigma letters left to right, then all tau letters right to left.
pub fn beta_of_fence_word(w: &FenceWord) -> BraidWord {
    let mut letters: Vec<usize> = w
        .letters
        .iter()
        .filter_map(|l| match l {
            FenceLetter::Sigma(i) => Some(*i),
            _ => None,
        })
        .collect();
    letters.extend(w.letters.iter().rev().filter_map(|l| match l {
        FenceLetter::Tau(i) => Some(*i),
        _ => None,
    }));
    BraidWord { k: w.k, letters }
}

/// The half-twist `(s1)(s2 s1)...(s_{k-1}...s1)`.
pub fn delta(k: usize) -> BraidWord {
    let letters = (1..k).flat_map(|j| (1..=j).rev()).collect();
    BraidWord { k, letters }
}

pub fn positive_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, BraidError> {
    if u.k != v.k {
        return Err(BraidError::StrandMismatch(u.k, v.k));
    }
    Ok(u.len() == v.len() && left_normal_form(u) == left_normal_form(v))
}

/// The largest `p` such that `Delta^p` is a left divisor.
pub fn delta_divisibility(w: &BraidWord) -> usize {
    left_normal_form(w).delta_power
}

/// The permutation sending each strand's start position to its end position.
pub fn underlying_permutation(w: &BraidWord) -> Vec<usize> {
    let mut at: Vec<usize> = (0..w.k).collect();
    for &i in &w.letters {
        at.swap(i - 1, i);
    }
    let mut perm = vec![0; w.k];
    for (pos, &strand) in at.iter().enumerate() {
        perm[strand] = pos;
    }
    perm
}

pub fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut c = 0;
    for s in 0..perm.len() {
        if !seen[s] {
            c += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
    }
    c
}

pub(crate) fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut t = Vec::new();
    for s in 0..perm.len() {
        if !seen[s] {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            t.push(len);
        }
    }
    t.sort_unstable();
    t
}

/// Number of components of the closure.
pub fn components(w: &BraidWord) -> usize {
    cycle_count(&underlying_permutation(w))
}

#[cfg(test)]
mod tests;
