use std::sync::atomic::{AtomicUsize, Ordering};

use super::canon::{canonical_form, is_isomorphic, isomorphism};
use super::{quick_invariants, Quiver};
use crate::search::{bidirectional_bfs, fingerprint, Budget, SearchStop, Verdict};

/// Options for [`mutation_equivalent`].
#[derive(Debug, Clone, Copy)]
pub struct MutationSearch {
    pub budget: Budget,
    /// States with an arrow multiplicity above this are not expanded.
    pub mult_cap: i32,
}

impl Default for MutationSearch {
    fn default() -> Self {
        MutationSearch { budget: Budget::default(), mult_cap: 64 }
    }
}

/// Decides mutation equivalence within a budget. An `Equivalent` witness is a
/// vertex sequence whose mutations carry `q1` to a quiver isomorphic to `q2`.
pub fn mutation_equivalent(q1: &Quiver, q2: &Quiver, opts: &MutationSearch) -> Verdict<Vec<usize>> {
    let a = quick_invariants(q1);
    let b = quick_invariants(q2);
    if a.n != b.n {
        return Verdict::DistinctByInvariant(format!("vertex counts {} and {}", a.n, b.n));
    }
    if a.abs_det != b.abs_det {
        return Verdict::DistinctByInvariant(format!("|det B| {} and {}", a.abs_det, b.abs_det));
    }
    if a.rank != b.rank {
        return Verdict::DistinctByInvariant(format!("rank {} and {}", a.rank, b.rank));
    }
    let overflow = AtomicUsize::new(0);
    let cap = opts.mult_cap;
    let key = |s: &(Quiver, usize)| fingerprint(&canonical_form(&s.0).key);
    let expand = |s: &(Quiver, usize)| {
        let (q, last) = s;
        let mut out = Vec::with_capacity(q.n());
        for z in 0..q.n() {
            if z == *last {
                continue;
            }
            let m = q.mutate_unchecked(z);
            if m.max_multiplicity() > cap {
                overflow.fetch_add(1, Ordering::Relaxed);
                continue;
            }
            out.push((z, (m, z)));
        }
        out
    };
    let res = bidirectional_bfs((q1.clone(), usize::MAX), (q2.clone(), usize::MAX), &opts.budget, key, expand);
    let of = overflow.load(Ordering::Relaxed);
    match res {
        Ok(path) => {
            let r = q1.mutate_seq(&path.forward).expect("witness vertices in range");
            let s = q2.mutate_seq(&path.backward).expect("witness vertices in range");
            let witness = isomorphism(&s, &r).map(|phi| {
                let mut w = path.forward.clone();
                w.extend(path.backward.iter().rev().map(|&y| phi[y]));
                w
            });
            match witness {
                Some(w) if is_isomorphic(&q1.mutate_seq(&w).unwrap(), q2) => Verdict::Equivalent(w),
                _ => Verdict::Unknown { states: 0, reason: "fingerprint collision; witness failed to replay".into() },
            }
        }
        Err(SearchStop::Exhausted { states }) if of == 0 => {
            Verdict::DistinctByInvariant(format!("mutation class exhausted after {} states", states))
        }
        Err(SearchStop::Exhausted { states }) => Verdict::Unknown {
            states,
            reason: format!("class exhausted below multiplicity cap {} ({} overflows)", cap, of),
        },
        Err(SearchStop::Budget { states, reason }) => {
            Verdict::Unknown { states, reason: format!("{}; {} multiplicity overflows", reason, of) }
        }
    }
}
