//! Quivers as skew-symmetric integer matrices, mutation, isomorphism and
//! budgeted mutation-equivalence search.

mod canon;
mod linalg;
mod search;

use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, canonical_key, is_isomorphic, Canon};
pub use linalg::{abs_det, rank};
pub use search::{mutation_equivalent, MutationSearch};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex {0} out of range for quiver on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A loop-free, 2-cycle-free quiver stored as its exchange matrix:
/// `b(i, j)` is the number of arrows `i -> j` minus the number `j -> i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    b: Vec<i32>,
}

impl Quiver {
    pub fn new(n: usize) -> Quiver {
        Quiver { n, b: vec![0; n * n] }
    }

    /// Builds a quiver from arrows `(i, j, mult)`; opposite arrows cancel.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, i32)]) -> Result<Quiver, QuiverError> {
        let mut q = Quiver::new(n);
        for &(i, j, m) in arrows {
            q.add_arrows(i, j, m)?;
        }
        Ok(q)
    }

    pub fn add_arrows(&mut self, i: usize, j: usize, m: i32) -> Result<(), QuiverError> {
        let n = self.n;
        if i >= n {
            return Err(QuiverError::VertexOutOfRange(i, n));
        }
        if j >= n {
            return Err(QuiverError::VertexOutOfRange(j, n));
        }
        if i == j {
            return Err(QuiverError::Loop(i));
        }
        self.b[i * n + j] += m;
        self.b[j * n + i] -= m;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn b(&self, i: usize, j: usize) -> i32 {
        self.b[i * self.n + j]
    }

    pub fn matrix(&self) -> Vec<Vec<i32>> {
        (0..self.n).map(|i| self.b[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    /// Arrows `(i, j, mult)` with `mult > 0`, in lexicographic order.
    pub fn arrows(&self) -> Vec<(usize, usize, i32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let m = self.b(i, j);
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    pub fn arrow_count(&self) -> i64 {
        self.b.iter().filter(|&&x| x > 0).map(|&x| x as i64).sum()
    }

    pub fn max_multiplicity(&self) -> i32 {
        self.b.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Quiver mutation at `z`: add `x -> y` for each path `x -> z -> y`,
    /// reverse the arrows at `z`, cancel 2-cycles.
    pub fn mutate(&self, z: usize) -> Result<Quiver, QuiverError> {
        if z >= self.n {
            return Err(QuiverError::VertexOutOfRange(z, self.n));
        }
        Ok(self.mutate_unchecked(z))
    }

    pub(crate) fn mutate_unchecked(&self, z: usize) -> Quiver {
        let n = self.n;
        let mut b = self.b.clone();
        for i in 0..n {
            if i == z {
                continue;
            }
            let biz = self.b(i, z);
            if biz == 0 {
                continue;
            }
            for j in 0..n {
                if j == z || j == i {
                    continue;
                }
                let bzj = self.b(z, j);
                // paths i -> z -> j add, paths j -> z -> i subtract
                if biz > 0 && bzj > 0 {
                    b[i * n + j] += biz * bzj;
                } else if biz < 0 && bzj < 0 {
                    b[i * n + j] -= biz * bzj;
                }
            }
        }
        for i in 0..n {
            b[i * n + z] = -b[i * n + z];
            b[z * n + i] = -b[z * n + i];
        }
        Quiver { n, b }
    }

    /// Folds `mutate` over a sequence of vertices, left to right.
    pub fn mutate_seq(&self, seq: &[usize]) -> Result<Quiver, QuiverError> {
        let mut q = self.clone();
        for &z in seq {
            q = q.mutate(z)?;
        }
        Ok(q)
    }

    pub fn reversed(&self) -> Quiver {
        Quiver { n: self.n, b: self.b.iter().map(|x| -x).collect() }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Quiver {
        let n = self.n;
        let mut b = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                b[perm[i] * n + perm[j]] = self.b(i, j);
            }
        }
        Quiver { n, b }
    }

    /// Total number of arrows at each vertex, sorted.
    pub fn degree_multiset(&self) -> Vec<i64> {
        let mut d: Vec<i64> =
            (0..self.n).map(|i| (0..self.n).map(|j| self.b(i, j).unsigned_abs() as i64).sum()).collect();
        d.sort_unstable();
        d
    }

    /// Vertices and multiplicities of the full subquiver on `keep`, in that order.
    pub fn restrict(&self, keep: &[usize]) -> Quiver {
        let m = keep.len();
        let mut q = Quiver::new(m);
        for (a, &i) in keep.iter().enumerate() {
            for (c, &j) in keep.iter().enumerate() {
                q.b[a * m + c] = self.b(i, j);
            }
        }
        q
    }

    pub fn to_qvr(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (i, j, m) in self.arrows() {
            s.push_str(&format!("a {} {} {}\n", i, j, m));
        }
        s
    }

    pub fn parse_qvr(text: &str) -> Result<Quiver, QuiverError> {
        let mut q: Option<Quiver> = None;
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let t = raw.split('#').next().unwrap_or("").trim();
            if t.is_empty() {
                continue;
            }
            let toks: Vec<&str> = t.split_whitespace().collect();
            let perr = |msg: &str| QuiverError::Parse { line, msg: msg.to_string() };
            match toks[0] {
                "n" => {
                    if q.is_some() {
                        return Err(perr("duplicate n line"));
                    }
                    if toks.len() != 2 {
                        return Err(perr("expected `n <int>`"));
                    }
                    let n = toks[1].parse().map_err(|_| perr("bad vertex count"))?;
                    q = Some(Quiver::new(n));
                }
                "a" => {
                    let qq = q.as_mut().ok_or_else(|| perr("arrow before n line"))?;
                    if toks.len() != 4 {
                        return Err(perr("expected `a <i> <j> <mult>`"));
                    }
                    let i: usize = toks[1].parse().map_err(|_| perr("bad vertex"))?;
                    let j: usize = toks[2].parse().map_err(|_| perr("bad vertex"))?;
                    let m: i32 = toks[3].parse().map_err(|_| perr("bad multiplicity"))?;
                    if m < 1 {
                        return Err(perr("multiplicity must be positive"));
                    }
                    qq.add_arrows(i, j, m).map_err(|e| perr(&e.to_string()))?;
                }
                other => return Err(perr(&format!("unknown directive `{}`", other))),
            }
        }
        q.ok_or(QuiverError::Parse { line: 0, msg: "missing n line".into() })
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver(n={}, {:?})", self.n, self.arrows())
    }
}

/// Mutation-invariant summary plus the isomorphism-only degree multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuickInvariants {
    pub n: usize,
    pub abs_det: num_bigint::BigUint,
    pub rank: usize,
    pub degrees: Vec<i64>,
}

pub fn quick_invariants(q: &Quiver) -> QuickInvariants {
    QuickInvariants { n: q.n, abs_det: abs_det(q), rank: rank(q), degrees: q.degree_multiset() }
}
