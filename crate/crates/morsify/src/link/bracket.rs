//! Kauffman bracket by crossing-at-a-time state contraction. A state records
//! how the open arc ends seen so far are joined up.

use std::collections::{HashMap, HashSet};

use super::poly::LaurentPoly;
use super::{LinkDiagram, LinkError};

pub const DEFAULT_CAP: usize = 24;

type Pairing = Vec<(usize, usize)>;

/// Joins the segment `x -- y` into the open paths of `state`; returns
/// whether a closed loop was formed.
fn join(state: &mut HashMap<usize, usize>, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    let e1 = match state.remove(&x) {
        Some(a) => {
            state.remove(&a);
            a
        }
        None => x,
    };
    let e2 = match state.remove(&y) {
        Some(b) => {
            state.remove(&b);
            b
        }
        None => y,
    };
    if e1 == e2 {
        return true;
    }
    state.insert(e1, e2);
    state.insert(e2, e1);
    false
}

fn canonical(state: &HashMap<usize, usize>) -> Pairing {
    let mut v: Pairing = state.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect();
    v.sort_unstable();
    v
}

/// Orders crossings so that each next one shares as many labels as possible
/// with those already processed.
fn order(d: &LinkDiagram) -> Vec<usize> {
    let n = d.crossings.len();
    let mut done = vec![false; n];
    let mut open: HashSet<usize> = HashSet::new();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let shared = d.crossings[i].arcs.iter().filter(|a| open.contains(a)).count();
                (shared, usize::MAX - i)
            })
            .unwrap();
        done[best] = true;
        out.push(best);
        for &a in &d.crossings[best].arcs {
            if !open.remove(&a) {
                open.insert(a);
            }
        }
    }
    out
}

/// The bracket polynomial in `A`, normalized so the crossingless unknot is 1.
pub fn kauffman_bracket(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly, LinkError> {
    let n = d.crossings.len();
    if n > cap {
        return Err(LinkError::CapExceeded { crossings: n, cap });
    }
    let delta = LaurentPoly::from_coeffs(-2, vec![-1, 0, 0, 0, -1]);
    let a = LaurentPoly::monomial(1, 1);
    let b = LaurentPoly::monomial(1, -1);
    let mut states: HashMap<Pairing, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    // every closed loop contributes delta; one is divided out at the end
    let mut loops_total = LaurentPoly::one();
    for _ in 0..d.free_loops {
        loops_total = loops_total.mul(&delta);
    }
    for ci in order(d) {
        let [p, q, r, s] = d.crossings[ci].arcs;
        let mut next: HashMap<Pairing, LaurentPoly> = HashMap::new();
        for (pairing, coeff) in &states {
            for (weight, pairs) in [(&a, [(p, q), (r, s)]), (&b, [(p, s), (q, r)])] {
                let mut st: HashMap<usize, usize> = HashMap::new();
                for &(x, y) in pairing {
                    st.insert(x, y);
                    st.insert(y, x);
                }
                let mut c = coeff.mul(weight);
                for (x, y) in pairs {
                    if join(&mut st, x, y) {
                        c = c.mul(&delta);
                    }
                }
                let key = canonical(&st);
                let e = next.entry(key).or_default();
                *e = e.add(&c);
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_default();
    if !states.is_empty() {
        return Err(LinkError::Internal("bracket contraction left open ends".into()));
    }
    let total = total.mul(&loops_total);
    total.div_exact(&delta).ok_or_else(|| LinkError::Internal("bracket not divisible by the loop value".into()))
}

/// Jones polynomial as a Laurent polynomial in `t^(1/2)`.
pub fn jones(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly, LinkError> {
    let br = kauffman_bracket(d, cap)?;
    let w = d.writhe();
    // (-A^3)^(-w) <D>
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = br.shift(-3 * w).scale(sign);
    // A = t^(-1/4): A^e becomes (t^(1/2))^(-e/2)
    if f.coeffs.iter().enumerate().any(|(i, &c)| c != 0 && (f.low + i as i64) % 2 != 0) {
        return Err(LinkError::Internal("odd power of A in the normalized bracket".into()));
    }
    let m = f.mirror();
    let coeffs: Vec<i64> = m.coeffs.iter().step_by(2).copied().collect();
    Ok(LaurentPoly::from_coeffs(m.low / 2, coeffs))
}

/// Prints a polynomial in `t^(1/2)` using integer or half-integer powers of `t`.
pub fn format_jones(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, &c) in p.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let e = p.low + i as i64;
        if !out.is_empty() {
            out.push_str(if c < 0 { " - " } else { " + " });
        } else if c < 0 {
            out.push('-');
        }
        if e % 2 == 0 {
            out.push_str(&format!("{}*t^{}", c.abs(), e / 2));
        } else {
            out.push_str(&format!("{}*t^({}/2)", c.abs(), e));
        }
    }
    out
}
