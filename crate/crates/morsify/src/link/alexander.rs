//! Alexander polynomials by evaluation at many points modulo large primes,
//! interpolation and Chinese remaindering.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::LaurentPoly;
use super::{LinkDiagram, LinkError};
use crate::braid::BraidWord;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below `2^61`, largest first.
fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = (1u64 << 61) - 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Determinant of a square matrix modulo `p`.
fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if r != c {
            m.swap(r, c);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[c][c], p);
        let inv = inv_mod(m[c][c], p);
        for r in c + 1..n {
            if m[r][c] == 0 {
                continue;
            }
            let f = mul_mod(m[r][c], inv, p);
            for j in c..n {
                let s = mul_mod(f, m[c][j], p);
                m[r][j] = (m[r][j] + p - s) % p;
            }
        }
    }
    det
}

/// Coefficients (low to high) of the polynomial of degree below `xs.len()`
/// through the given points, modulo `p`.
fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    // Newton divided differences
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = (c[i] + p - c[i - 1]) % p;
            let den = (xs[i] + p - xs[i - j]) % p;
            c[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    let mut poly = vec![0u64; n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + c[i]
        let mut next = vec![0u64; n];
        for d in 0..n {
            if poly[d] == 0 {
                continue;
            }
            if d + 1 < n {
                next[d + 1] = (next[d + 1] + poly[d]) % p;
            }
            let s = mul_mod(poly[d], xs[i], p);
            next[d] = (next[d] + p - s) % p;
        }
        next[0] = (next[0] + c[i]) % p;
        poly = next;
    }
    poly
}

/// Recovers an integer polynomial of degree below `points` from its values
/// `f(t, p)` at `t = 1..=points`, combining primes until the lift is stable.
fn integer_polynomial(points: usize, f: impl Fn(u64, u64) -> u64) -> Result<Vec<i64>, LinkError> {
    let ps = primes(12);
    let xs: Vec<u64> = (1..=points as u64).collect();
    let mut modulus = BigInt::from(1);
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); points];
    let mut previous: Option<Vec<BigInt>> = None;
    for &p in &ps {
        let ys: Vec<u64> = xs.iter().map(|&x| f(x, p)).collect();
        let cs = interpolate(&xs, &ys, p);
        let pb = BigInt::from(p);
        let inv = BigInt::from(inv_mod((&modulus % &pb).to_u64().unwrap(), p));
        for (r, &c) in residues.iter_mut().zip(&cs) {
            // r' = r + m * ((c - r) * m^{-1} mod p)
            let diff = ((BigInt::from(c) - &*r) % &pb + &pb) % &pb;
            let k = (diff * &inv) % &pb;
            *r += &modulus * k;
        }
        modulus *= &pb;
        let half = &modulus / 2;
        let lifted: Vec<BigInt> = residues.iter().map(|r| if r > &half { r - &modulus } else { r.clone() }).collect();
        if previous.as_ref() == Some(&lifted) {
            return lifted
                .iter()
                .map(|c| c.to_i64().ok_or(LinkError::Internal("coefficient overflow".into())))
                .collect();
        }
        previous = Some(lifted);
    }
    let last = previous.unwrap();
    if last.iter().any(|c| c.abs() > BigInt::from(i64::MAX)) {
        return Err(LinkError::Internal("coefficient overflow".into()));
    }
    Err(LinkError::Internal("Chinese remaindering did not stabilize".into()))
}

fn burau_matrix(w: &BraidWord, t: u64, p: u64) -> Vec<Vec<u64>> {
    let n = w.k - 1;
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    let neg_t = (p - t % p) % p;
    for &g in &w.letters {
        // right-multiply by the reduced Burau matrix of sigma_g:
        // column g-1 becomes t*col(g-2) - t*col(g-1) + col(g)
        let c = g - 1;
        for row in m.iter_mut() {
            let mut v = mul_mod(row[c], neg_t, p);
            if c > 0 {
                v = (v + mul_mod(row[c - 1], t, p)) % p;
            }
            if c + 1 < n {
                v = (v + row[c + 1]) % p;
            }
            row[c] = v;
        }
    }
    m
}

/// Alexander polynomial of the closure, by the reduced Burau representation.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly, LinkError> {
    if w.k <= 1 {
        return Ok(LaurentPoly::one());
    }
    let n = w.k - 1;
    let points = n * w.len().max(1) + 1;
    let det = integer_polynomial(points, |t, p| {
        let mut m = burau_matrix(w, t, p);
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let id = u64::from(i == j);
                *x = (id + p - *x) % p;
            }
        }
        det_mod(m, p)
    })?;
    let det = LaurentPoly::from_coeffs(0, det);
    let one_minus_t = LaurentPoly::from_coeffs(0, vec![1, -1]);
    let mut denom = vec![0i64; w.k + 1];
    denom[0] = 1;
    denom[w.k] = -1;
    let q = det
        .mul(&one_minus_t)
        .div_exact(&LaurentPoly::from_coeffs(0, denom))
        .ok_or_else(|| LinkError::Internal("Burau determinant not divisible by (1-t^k)/(1-t)".into()))?;
    Ok(q.normalized())
}

/// Alexander polynomial of a diagram from its Alexander matrix.
pub fn alexander_of_diagram(d: &LinkDiagram) -> Result<LaurentPoly, LinkError> {
    let n = d.crossings.len();
    if n == 0 {
        return Ok(if d.free_loops <= 1 { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    if d.free_loops > 0 {
        return Ok(LaurentPoly::zero());
    }
    // Wirtinger arcs: labels glued through over-passes
    let labels = d.label_count();
    let mut parent: Vec<usize> = (0..=labels).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for c in &d.crossings {
        let (a, b) = (find(&mut parent, c.arcs[1]), find(&mut parent, c.arcs[3]));
        parent[a] = b;
    }
    let mut arc_of = vec![usize::MAX; labels + 1];
    let mut m = 0;
    for l in 1..=labels {
        let r = find(&mut parent, l);
        if arc_of[r] == usize::MAX {
            arc_of[r] = m;
            m += 1;
        }
        arc_of[l] = arc_of[r];
    }
    if m > n {
        // a component without under-passes can be lifted off: split
        return Ok(LaurentPoly::zero());
    }
    let rows: Vec<[(usize, [i64; 2]); 3]> = d
        .crossings
        .iter()
        .map(|c| {
            let (o, a, b) = (arc_of[c.arcs[1]], arc_of[c.arcs[0]], arc_of[c.arcs[2]]);
            // entries as (constant, t) coefficient pairs
            if c.sign > 0 {
                [(o, [1, -1]), (a, [0, 1]), (b, [-1, 0])]
            } else {
                [(o, [-1, 1]), (a, [1, 0]), (b, [0, -1])]
            }
        })
        .collect();
    let det = integer_polynomial(n, |t, p| {
        let mut mat = vec![vec![0u64; m]; n];
        for (r, row) in rows.iter().enumerate() {
            for &(col, [c0, c1]) in row {
                let v = (c0 + c1 * t as i64).rem_euclid(p as i64) as u64;
                mat[r][col] = (mat[r][col] + v) % p;
            }
        }
        let minor: Vec<Vec<u64>> = mat[..n - 1].iter().map(|row| row[..m - 1].to_vec()).collect();
        det_mod(minor, p)
    })?;
    Ok(LaurentPoly::from_coeffs(0, det).normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps = primes(3);
        assert_eq!(ps[0], (1u64 << 61) - 1);
        assert!(ps.iter().all(|&p| is_prime(p)));
        assert!(!is_prime((1u64 << 61) - 3));
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let f = |t: u64, p: u64| {
            // 3 - 5t + t^3
            let t3 = mul_mod(mul_mod(t, t, p), t, p);
            (3 + t3 + p * 2 - mul_mod(5, t, p)) % p
        };
        assert_eq!(integer_polynomial(5, f).unwrap(), vec![3, -5, 0, 1, 0]);
    }
}
