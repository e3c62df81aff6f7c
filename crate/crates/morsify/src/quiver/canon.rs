//! Canonical labeling by colour refinement plus branch-and-bound over
//! individualisations, minimised over global reversal.

use super::Quiver;

/// Canonical form: `key` is the lower triangle of the relabeled matrix,
/// row by row; `order[p]` is the vertex placed at position `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canon {
    pub key: Vec<i32>,
    pub order: Vec<usize>,
    pub reversed: bool,
}

fn refine(b: &[i32], n: usize, colors: &mut [u32]) {
    let mut count = distinct(colors);
    loop {
        let mut sigs: Vec<(u32, Vec<(u32, i32)>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, i32)> =
                    (0..n).filter(|&u| b[v * n + u] != 0).map(|u| (colors[u], b[v * n + u])).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut c = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            colors[sigs[i].2] = c;
        }
        let now = distinct(colors);
        if now == count {
            return;
        }
        count = now;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    b: &'a [i32],
    n: usize,
    best: Option<(Vec<i32>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>, key: &mut Vec<i32>) {
        let n = self.n;
        if prefix.len() == n {
            let better = match &self.best {
                None => true,
                Some((bk, _)) => key.as_slice() < bk.as_slice(),
            };
            if better {
                self.best = Some((key.clone(), prefix.clone()));
            }
            return;
        }
        let p = prefix.len();
        let free = |v: &usize| !prefix.contains(v);
        let cell_color = (0..n).filter(free).map(|v| colors[v]).min().unwrap();
        let cell: Vec<usize> = (0..n).filter(|v| free(v) && colors[*v] == cell_color).collect();
        for v in cell {
            let start = key.len();
            for &u in prefix.iter() {
                key.push(self.b[v * n + u]);
            }
            if let Some((bk, _)) = &self.best {
                if key.as_slice() > &bk[..key.len()] {
                    key.truncate(start);
                    continue;
                }
            }
            let mut c2: Vec<u32> = colors.iter().map(|&c| c + n as u32 + 1).collect();
            for (i, &u) in prefix.iter().enumerate() {
                c2[u] = i as u32;
            }
            c2[v] = p as u32;
            refine(self.b, n, &mut c2);
            prefix.push(v);
            self.run(c2, prefix, key);
            prefix.pop();
            key.truncate(start);
        }
    }
}

fn canon_of_matrix(b: &[i32], n: usize) -> (Vec<i32>, Vec<usize>) {
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut colors = vec![0u32; n];
    refine(b, n, &mut colors);
    let mut s = Search { b, n, best: None };
    s.run(colors, &mut Vec::new(), &mut Vec::new());
    s.best.unwrap()
}

pub fn canonical_form(q: &Quiver) -> Canon {
    let n = q.n();
    let (k1, o1) = canon_of_matrix(&q.b, n);
    let rev = q.reversed();
    let (k2, o2) = canon_of_matrix(&rev.b, n);
    if k2 < k1 {
        Canon { key: k2, order: o2, reversed: true }
    } else {
        Canon { key: k1, order: o1, reversed: false }
    }
}

/// Byte key equal exactly for quivers isomorphic up to global reversal.
pub fn canonical_key(q: &Quiver) -> Vec<u8> {
    let c = canonical_form(q);
    let mut out = Vec::with_capacity(4 + 4 * c.key.len());
    out.extend_from_slice(&(q.n() as u32).to_be_bytes());
    for x in c.key {
        out.extend_from_slice(&x.to_be_bytes());
    }
    out
}

pub fn is_isomorphic(q1: &Quiver, q2: &Quiver) -> bool {
    q1.n() == q2.n() && canonical_form(q1).key == canonical_form(q2).key
}

/// Vertex map `phi` with `q1.relabeled(phi)` equal to `q2` or its reversal.
pub fn isomorphism(q1: &Quiver, q2: &Quiver) -> Option<Vec<usize>> {
    if q1.n() != q2.n() {
        return None;
    }
    let c1 = canonical_form(q1);
    let c2 = canonical_form(q2);
    if c1.key != c2.key {
        return None;
    }
    let mut phi = vec![0; q1.n()];
    for p in 0..q1.n() {
        phi[c1.order[p]] = c2.order[p];
    }
    Some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_iso(q1: &Quiver, q2: &Quiver) -> bool {
        let n = q1.n();
        if n != q2.n() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let r2 = q2.reversed();
        loop {
            let r = q1.relabeled(&perm);
            if r == *q2 || r == r2 {
                return true;
            }
            if !next_perm(&mut perm) {
                return false;
            }
        }
    }

    fn next_perm(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn single_arrow_and_its_reverse() {
        let a = Quiver::from_arrows(2, &[(0, 1, 1)]).unwrap();
        let b = Quiver::from_arrows(2, &[(1, 0, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn exhaustive_small_quivers_agree_with_brute_force() {
        // all quivers on 4 vertices with entries in {-1,0,1}
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let mut all = Vec::new();
        for code in 0..3usize.pow(pairs.len() as u32) {
            let mut c = code;
            let mut q = Quiver::new(4);
            for &(i, j) in &pairs {
                let v = (c % 3) as i32 - 1;
                c /= 3;
                if v != 0 {
                    q.add_arrows(i, j, v).unwrap();
                }
            }
            all.push(q);
        }
        let keys: Vec<Vec<i32>> = all.iter().map(|q| canonical_form(q).key).collect();
        for a in (0..all.len()).step_by(7) {
            for b in (0..all.len()).step_by(5) {
                assert_eq!(keys[a] == keys[b], brute_iso(&all[a], &all[b]), "{:?} {:?}", all[a], all[b]);
            }
        }
    }

    #[test]
    fn isomorphism_maps_onto_target() {
        let q = Quiver::from_arrows(5, &[(0, 1, 2), (1, 2, 1), (3, 2, 1), (4, 0, 1), (3, 4, 3)]).unwrap();
        let perm = vec![3, 0, 4, 1, 2];
        let r = q.relabeled(&perm).reversed();
        let phi = isomorphism(&q, &r).unwrap();
        let m = q.relabeled(&phi);
        assert!(m == r || m == r.reversed());
    }
}
