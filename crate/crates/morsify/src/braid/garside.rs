//! Left normal form in the positive braid monoid. Simple braids are stored
//! as permutations `p` with `p[pos]` the strand ending at position `pos`.

use std::fmt;

use super::BraidWord;

pub(crate) type Simple = Vec<u8>;

fn identity(k: usize) -> Simple {
    (0..k as u8).collect()
}

fn inverse(p: &[u8]) -> Simple {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x as usize] = i as u8;
    }
    q
}

pub(crate) fn is_delta(p: &[u8]) -> bool {
    let k = p.len();
    p.iter().enumerate().all(|(i, &x)| x as usize == k - 1 - i)
}

fn is_identity(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(i, &x)| x as usize == i)
}

/// `p = p' * sigma_i`.
fn right_descent(p: &[u8], i: usize) -> bool {
    p[i - 1] > p[i]
}

/// `p = sigma_i * p'`.
pub(crate) fn left_descent(p: &[u8], i: usize) -> bool {
    let q = inverse(p);
    q[i - 1] > q[i]
}

/// `sigma_i^{-1} * p`, assuming `sigma_i` left-divides `p`.
pub(crate) fn left_quotient(p: &[u8], i: usize) -> Simple {
    let mut q = inverse(p);
    q.swap(i - 1, i);
    inverse(&q)
}

/// A reduced word for a simple braid.
pub(crate) fn simple_word(p: &[u8]) -> Vec<usize> {
    let mut p = p.to_vec();
    let mut out = Vec::new();
    'outer: loop {
        for i in 1..p.len() {
            if right_descent(&p, i) {
                p.swap(i - 1, i);
                out.push(i);
                continue 'outer;
            }
        }
        break;
    }
    out.reverse();
    out
}

/// Moves generators from `b` to `a` until `S(b)` is contained in `F(a)`.
/// Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let k = a.len();
    let mut changed = false;
    loop {
        let qb = inverse(b);
        let pick = (1..k).find(|&i| qb[i - 1] > qb[i] && !right_descent(a, i));
        match pick {
            Some(i) => {
                a.swap(i - 1, i);
                *b = left_quotient(b, i);
                changed = true;
            }
            None => return changed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub k: usize,
    pub delta_power: usize,
    /// Left-weighted simple factors, none equal to the identity or Delta.
    pub factors: Vec<Simple>,
}

pub fn left_normal_form(w: &BraidWord) -> NormalForm {
    let k = w.k;
    let mut fs: Vec<Simple> = Vec::new();
    for &i in &w.letters {
        let mut s = identity(k);
        s.swap(i - 1, i);
        fs.push(s);
        let mut j = fs.len() - 1;
        while j > 0 {
            let (l, r) = fs.split_at_mut(j);
            if !left_weight(&mut l[j - 1], &mut r[0]) {
                break;
            }
            j -= 1;
        }
        while fs.last().is_some_and(|f| is_identity(f)) {
            fs.pop();
        }
    }
    let delta_power = fs.iter().take_while(|f| is_delta(f)).count();
    NormalForm { k, delta_power, factors: fs.split_off(delta_power) }
}

impl NormalForm {
    /// All factors, the Delta factors included.
    pub(crate) fn full_factors(&self) -> Vec<Simple> {
        let d: Simple = (0..self.k as u8).rev().collect();
        let mut out = vec![d; self.delta_power];
        out.extend(self.factors.iter().cloned());
        out
    }

    pub fn to_word(&self) -> BraidWord {
        let letters = self.full_factors().iter().flat_map(|f| simple_word(f)).collect();
        BraidWord { k: self.k, letters }
    }

    /// `sigma_i^{-1} w` as a word, if `sigma_i` left-divides `w`.
    pub(crate) fn left_quotient_word(&self, i: usize) -> Option<Vec<usize>> {
        let fs = self.full_factors();
        let first = fs.first()?;
        if !left_descent(first, i) {
            return None;
        }
        let mut out = simple_word(&left_quotient(first, i));
        for f in &fs[1..] {
            out.extend(simple_word(f));
        }
        Some(out)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.delta_power)?;
        for (j, p) in self.factors.iter().enumerate() {
            if j > 0 {
                write!(f, " ;")?;
            }
            // one-line notation: where each strand ends
            for x in inverse(p) {
                write!(f, " {}", x + 1)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_words_round_trip() {
        let p: Simple = vec![2, 0, 3, 1];
        let w = simple_word(&p);
        let mut q = identity(4);
        for i in w {
            q.swap(i - 1, i);
        }
        assert_eq!(q, p);
    }

    #[test]
    fn left_weighting_example() {
        let nf = left_normal_form(&BraidWord::new(3, vec![1, 1, 2, 1]).unwrap());
        assert_eq!(nf.delta_power, 1);
        assert_eq!(nf.factors.len(), 1);
        assert_eq!(simple_word(&nf.factors[0]), vec![2]);
        assert_eq!(nf.to_string(), "D^1 | 1 3 2");
    }
}
