//! Truncated integer power series.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

/// A power series `Σ c_k t^k` known modulo `t^(D+1)`, where `D` is the
/// truncation degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PoincareSeries {
    coefficients: Vec<i128>,
}

impl PoincareSeries {
    pub fn zero(degree: usize) -> Self {
        PoincareSeries {
            coefficients: vec![0; degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(1, 0, degree)
    }

    /// `coef * t^exp`, truncated at `degree`.
    pub fn monomial(coef: i128, exp: usize, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if exp <= degree {
            s.coefficients[exp] = coef;
        }
        s
    }

    /// Coefficients `c_0..c_D`; anything beyond is dropped.
    pub fn from_coefficients(coefficients: Vec<i128>) -> Self {
        assert!(!coefficients.is_empty(), "series needs at least one coefficient");
        PoincareSeries { coefficients }
    }

    /// `1/(1 - t^k)`: the homology series of `ΩS^(k+1)`.
    pub fn loop_sphere(sphere_dim: u32, degree: usize) -> Self {
        let step = sphere_dim as usize - 1;
        let mut s = Self::zero(degree);
        let mut k = 0;
        while k <= degree {
            s.coefficients[k] = 1;
            if step == 0 {
                break;
            }
            k += step;
        }
        s
    }

    /// `1 + t^n`: the homology series of `S^n`.
    pub fn sphere(dim: u32, degree: usize) -> Self {
        Self::one(degree) + Self::monomial(1, dim as usize, degree)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }

    /// Coefficient of `t^k`; zero past the truncation degree.
    pub fn coefficient(&self, k: usize) -> i128 {
        self.coefficients.get(k).copied().unwrap_or(0)
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let mut c: Vec<i128> = self.coefficients.iter().copied().take(degree + 1).collect();
        c.resize(degree + 1, 0);
        PoincareSeries { coefficients: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    /// Multiplicative inverse; requires constant term `±1`.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coefficients[0];
        if c0 != 1 && c0 != -1 {
            return None;
        }
        let d = self.degree();
        let mut inv = vec![0i128; d + 1];
        inv[0] = c0;
        for k in 1..=d {
            let s: i128 = (1..=k).map(|j| self.coefficients[j] * inv[k - j]).sum();
            inv[k] = -s * c0;
        }
        Some(PoincareSeries { coefficients: inv })
    }
}

impl Add for PoincareSeries {
    type Output = PoincareSeries;

    fn add(self, rhs: Self) -> Self {
        let d = self.degree().min(rhs.degree());
        PoincareSeries {
            coefficients: (0..=d).map(|k| self.coefficients[k] + rhs.coefficients[k]).collect(),
        }
    }
}

impl Sub for PoincareSeries {
    type Output = PoincareSeries;

    fn sub(self, rhs: Self) -> Self {
        let d = self.degree().min(rhs.degree());
        PoincareSeries {
            coefficients: (0..=d).map(|k| self.coefficients[k] - rhs.coefficients[k]).collect(),
        }
    }
}

impl Mul for &PoincareSeries {
    type Output = PoincareSeries;

    fn mul(self, rhs: Self) -> PoincareSeries {
        let d = self.degree().min(rhs.degree());
        let mut c = vec![0i128; d + 1];
        for (i, &a) in self.coefficients.iter().enumerate().take(d + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coefficients.iter().enumerate().take(d + 1 - i) {
                c[i + j] += a * b;
            }
        }
        PoincareSeries { coefficients: c }
    }
}

impl Mul for PoincareSeries {
    type Output = PoincareSeries;

    fn mul(self, rhs: Self) -> PoincareSeries {
        &self * &rhs
    }
}

impl PoincareSeries {
    /// The known terms, without the truncation marker: `1 + 3t^3 + 2t^4`.
    pub fn terms(&self) -> String {
        let mut out = String::new();
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let a = c.unsigned_abs();
            out.push_str(&match (k, a) {
                (0, _) => format!("{a}"),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{a}t"),
                (_, 1) => format!("t^{k}"),
                _ => format!("{a}t^{k}"),
            });
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.terms(), self.degree() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        // 1/(1-2t) = Σ 2^k t^k
        let d = 12;
        let one_minus_2t = PoincareSeries::one(d) - PoincareSeries::monomial(2, 1, d);
        let inv = one_minus_2t.inverse().unwrap();
        for k in 0..=d {
            assert_eq!(inv.coefficient(k), 1 << k);
        }
        assert!((&inv * &one_minus_2t - PoincareSeries::one(d)).is_zero());
    }

    #[test]
    fn loop_sphere_series() {
        let s = PoincareSeries::loop_sphere(3, 7);
        assert_eq!(s.coefficients(), &[1, 0, 1, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn hopf_series_identity() {
        // 1/(1-t^(n-1)) = (1+t^(n-1)) / (1-t^(2n-2))
        for n in [2u32, 4, 8] {
            let d = 40;
            let lhs = PoincareSeries::loop_sphere(n, d);
            let rhs = PoincareSeries::sphere(n - 1, d) * PoincareSeries::loop_sphere(2 * n - 1, d);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn display() {
        let s = PoincareSeries::from_coefficients(vec![1, 0, 0, 3, 2]);
        assert_eq!(s.to_string(), "1 + 3t^3 + 2t^4 + O(t^5)");
        assert_eq!(PoincareSeries::zero(2).to_string(), "0 + O(t^3)");
    }
}
