use std::fmt;

/// A Laurent polynomial with integer coefficients: `coeffs[i]` multiplies
/// `t^(low + i)`. Stored trimmed; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    pub low: i64,
    pub coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(c: i64, e: i64) -> LaurentPoly {
        LaurentPoly { low: e, coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<i64>) -> LaurentPoly {
        LaurentPoly { low, coeffs }.trimmed()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    fn trimmed(mut self) -> LaurentPoly {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return LaurentPoly::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        self
    }

    pub fn coeff(&self, e: i64) -> i64 {
        if e < self.low {
            return 0;
        }
        self.coeffs.get((e - self.low) as usize).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let coeffs = (low..=high).map(|e| self.coeff(e) + o.coeff(e)).collect();
        LaurentPoly { low, coeffs }.trimmed()
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly { low: self.low + o.low, coeffs }.trimmed()
    }

    pub fn scale(&self, c: i64) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }.trimmed()
    }

    pub fn shift(&self, e: i64) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// Substitutes `t -> t^-1`.
    pub fn mirror(&self) -> LaurentPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentPoly { low: -self.high(), coeffs: c }.trimmed()
    }

    /// The representative of the class modulo units `±t^k` with lowest
    /// exponent 0 and positive leading coefficient.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let s = if *self.coeffs.last().unwrap() < 0 { -1 } else { 1 };
        LaurentPoly { low: 0, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Exact division of polynomials (`low >= 0` parts); `None` if inexact.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let dc = &d.coeffs;
        let lead = *dc.last().unwrap();
        if rem.len() < dc.len() {
            return None;
        }
        let mut q = vec![0i64; rem.len() - dc.len() + 1];
        for i in (0..q.len()).rev() {
            let top = rem[i + dc.len() - 1];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            q[i] = c;
            for (j, &x) in dc.iter().enumerate() {
                rem[i + j] -= c * x;
            }
        }
        if rem.iter().any(|&x| x != 0) {
            return None;
        }
        Some(LaurentPoly { low: self.low - d.low, coeffs: q }.trimmed())
    }

    /// Prints with variable `var`, terms `c*var^e` in increasing exponent.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.low + i as i64;
            if !out.is_empty() {
                out.push_str(if c < 0 { " - " } else { " + " });
            } else if c < 0 {
                out.push('-');
            }
            out.push_str(&format!("{}*{}^{}", c.abs(), var, e));
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("t"))
    }
}
