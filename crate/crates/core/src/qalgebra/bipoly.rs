//! Polynomials in `q` and `t` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::IntPoly;
use super::poly::Poly;
use super::qrat::QRat;

/// Sparse map `(q-degree, t-degree) -> coefficient` with no zero entries.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, qdeg: usize, tdeg: usize, c: impl Into<BigInt>) {
        let c = c.into();
        let e = self.terms.entry((qdeg, tdeg)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(qdeg, tdeg));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes an integer for `t`.
    pub fn eval_t(&self, t: i64) -> IntPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(qd, td), c) in &self.terms {
            if coeffs.len() <= qd {
                coeffs.resize(qd + 1, BigInt::zero());
            }
            coeffs[qd] += c * num_traits::pow(BigInt::from(t), td);
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Coefficient of `t^k` as a polynomial in `q`.
    pub fn t_coeff(&self, k: usize) -> IntPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(qd, td), c) in &self.terms {
            if td == k {
                if coeffs.len() <= qd {
                    coeffs.resize(qd + 1, BigInt::zero());
                }
                coeffs[qd] += c;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, t)| t).max()
    }

    /// As a polynomial in `t` over rational functions in `q`.
    pub fn to_t_poly(&self) -> Poly<QRat> {
        let deg = match self.t_degree() {
            Some(d) => d,
            None => return Poly::from_coeffs(Vec::new()),
        };
        Poly::from_coeffs((0..=deg).map(|k| QRat::from_poly(self.t_coeff(k))).collect())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(qd, td), c) in &self.terms {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors = Vec::new();
            if !mag.is_one() || (qd == 0 && td == 0) {
                factors.push(mag.to_string());
            }
            match qd {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{qd}")),
            }
            match td {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{td}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_eval() {
        let mut b = BiPoly::new();
        b.add_term(0, 2, 1);
        b.add_term(1, 1, 2);
        b.add_term(1, 1, -2);
        b.add_term(3, 0, 1);
        assert_eq!(b.terms().count(), 2);
        assert_eq!(b.to_string(), "t^2 + q^3");
        assert_eq!(b.eval_t(2), IntPoly::from_i64s(&[4, 0, 0, 1]));
        assert_eq!(b.t_coeff(2), IntPoly::constant(1));
    }
}
