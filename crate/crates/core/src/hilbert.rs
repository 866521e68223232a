//! Hilbert series `N(t) / (1-t)^n` with Laurent numerators, so that twisted
//! modules with generators in negative degree are representable.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// Coefficient `k` belongs to `t^(low + k)`.
    numerator: Vec<i64>,
    low: i64,
    nvars: usize,
}

impl HilbertSeries {
    pub fn new(numerator: Vec<i64>, low: i64, nvars: usize) -> Self {
        let mut s = HilbertSeries { numerator, low, nvars };
        s.trim();
        s
    }

    pub fn from_numerator(numerator: Vec<i64>, nvars: usize) -> Self {
        Self::new(numerator, 0, nvars)
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(Vec::new(), 0, nvars)
    }

    fn trim(&mut self) {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        let lead = self.numerator.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.numerator.drain(..lead);
            self.low += lead as i64;
        }
        if self.numerator.is_empty() {
            self.low = 0;
        }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.numerator.clone(), self.low + k, self.nvars)
    }

    /// Series of the twisted module `M(k)`, i.e. multiplication by `t^-k`.
    pub fn twist(&self, k: i64) -> Self {
        self.shift(-k)
    }

    /// Same series over `(1-t)^m` with `m >= nvars`.
    fn lift(&self, m: usize) -> Self {
        let mut num = self.numerator.clone();
        for _ in self.nvars..m {
            let mut next = vec![0i64; num.len() + 1];
            for (i, c) in num.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            num = next;
        }
        Self::new(num, self.low, m)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let m = self.nvars.max(other.nvars);
        let a = self.lift(m);
        let b = other.lift(m);
        if a.is_zero() {
            return Self::new(b.numerator.iter().map(|c| sign * c).collect(), b.low, m);
        }
        if b.is_zero() {
            return a;
        }
        let low = a.low.min(b.low);
        let high = (a.low + a.numerator.len() as i64).max(b.low + b.numerator.len() as i64);
        let mut num = vec![0i64; (high - low) as usize];
        for (i, c) in a.numerator.iter().enumerate() {
            num[(a.low - low) as usize + i] += c;
        }
        for (i, c) in b.numerator.iter().enumerate() {
            num[(b.low - low) as usize + i] += sign * c;
        }
        Self::new(num, low, m)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    /// Cancel `(1-t)` factors: returns the reduced numerator and the remaining
    /// denominator exponent, which is the Krull dimension of the module.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut num = self.numerator.clone();
        let mut d = self.nvars;
        if num.is_empty() {
            return (num, 0);
        }
        while d > 0 && num.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t)
            let mut q = Vec::with_capacity(num.len() - 1);
            let mut acc = 0i64;
            for c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc);
            }
            num = q;
            d -= 1;
        }
        (num, d)
    }

    /// Krull dimension of the module (0 for the zero module as well).
    pub fn dimension(&self) -> usize {
        self.reduced().1
    }

    /// Multiplicity: the reduced numerator at `t = 1`.
    pub fn multiplicity(&self) -> i64 {
        self.reduced().0.iter().sum()
    }

    /// Coefficients of `t^k` for `k` in `from..=to`.
    pub fn expansion(&self, from: i64, to: i64) -> Vec<i64> {
        (from..=to).map(|k| self.coefficient(k)).collect()
    }

    pub fn coefficient(&self, k: i64) -> i64 {
        (0..self.numerator.len())
            .map(|i| {
                let e = k - self.low - i as i64;
                if e < 0 {
                    0
                } else {
                    self.numerator[i] * series_coeff(e as u64, self.nvars)
                }
            })
            .sum()
    }

    /// Lowest degree that can carry a nonzero coefficient.
    pub fn start(&self) -> i64 {
        self.low
    }

    /// Whether every coefficient of `self` is at most the matching one of `other`.
    ///
    /// Exact: differences of the Hilbert function are checked up to a degree
    /// beyond which all iterated differences stay nonnegative.
    pub fn dominated_by(&self, other: &Self) -> bool {
        let diff = other.sub(self);
        diff.is_nonnegative()
    }

    /// Whether all coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let (num, r) = self.reduced();
        let red = HilbertSeries::new(num.clone(), self.low, r);
        let top = self.low + num.len() as i64;
        if r == 0 {
            return red.numerator.iter().all(|&c| c >= 0);
        }
        // past `top + r`, Δ^j h is the coefficient of N/(1-t)^(r-j)
        let anchor = top + r as i64;
        if (self.low..=anchor).any(|k| red.coefficient(k) < 0) {
            return false;
        }
        for k in anchor..anchor + 256 {
            let ok = (0..r).all(|j| HilbertSeries::new(num.clone(), self.low, r - j).coefficient(k) >= 0);
            if ok {
                return true;
            }
            if red.coefficient(k + 1) < 0 {
                return false;
            }
        }
        false
    }
}

/// Coefficient of `t^e` in `1/(1-t)^n`.
fn series_coeff(e: u64, n: usize) -> i64 {
    if n == 0 {
        return (e == 0) as i64;
    }
    let k = n as u64 - 1;
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (e + k - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.low + i as i64;
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.abs();
            match e {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        out.push_str(&format!("{a}*"));
                    }
                    if e == 1 {
                        out.push('t');
                    } else {
                        out.push_str(&format!("t^{e}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "({out})/(1-t)^{}", self.nvars)
    }
}
