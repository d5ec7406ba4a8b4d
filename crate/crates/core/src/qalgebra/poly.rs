//! Dense univariate polynomials over any [`Ring`]; used for the auxiliary
//! variable `t` (graded symmetric functions, the ascent variable).

use std::fmt;

use super::ring::{rational_string, Rational, Ring};

#[derive(Clone, PartialEq)]
pub struct Poly<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Ring> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).plus(&other.coeff(i))).collect())
    }
    fn minus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).minus(&other.coeff(i))).collect())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::from_coeffs(out)
    }
    fn negated(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.negated()).collect())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
    fn from_bigint(n: &num_bigint::BigInt) -> Self {
        Self::constant(C::from_bigint(n))
    }
}

/// Polynomials in `t` with rational coefficients.
pub type TPoly = Poly<Rational>;

impl Poly<Rational> {
    /// Coefficient strings lowest degree first, as used in JSON output.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_string).collect()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let neg = super::ring::is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let ms = rational_string(&mag);
            if k == 0 {
                out.push_str(&ms);
            } else if num_traits::One::is_one(&mag) {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{ms}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::ring::rat;

    #[test]
    fn arithmetic_and_display() {
        let one_plus_t = TPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)]);
        let sq = one_plus_t.times(&one_plus_t);
        assert_eq!(sq.to_string(), "1 + 2*t + t^2");
        assert_eq!(sq.eval(&rat(2, 1)), rat(9, 1));
        assert_eq!(sq.minus(&sq), TPoly::zero());
        let half = TPoly::monomial(rat(-1, 2), 3);
        assert_eq!(half.to_string(), "-1/2*t^3");
    }
}
