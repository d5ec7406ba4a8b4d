//! Dense polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::Error;

/// Coefficients are stored lowest degree first with trailing zeros trimmed,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `q = 1`: the coefficient sum.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::constant(1);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect())
    }

    fn divide_scalar_exact(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x / c).collect())
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.degree().expect("division by zero polynomial");
        let lb = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lb) - &divisor.scale(&lr).shift(dr - db);
        }
        r
    }

    /// Primitive gcd over `Z[q]` with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Exact quotient over `Z[q]`, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        let lb = divisor.leading().unwrap();
        let mut r = self.clone();
        let mut quotient = vec![BigInt::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (qc, rem) = r.leading().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&qc).shift(dr - db);
            quotient[dr - db] = qc;
        }
        Some(Self::from_coeffs(quotient))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
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
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    /// Parses the printed form, e.g. `4 + 4*q + 4*q^2 + q^3`.
    ///
    /// Juxtaposition (`4q`) and superscript exponents (`q²`) are accepted too.
    pub fn parse_in(s: &str, var: char) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("cannot read polynomial `{s}`"));
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '−' => '-',
                '·' => '*',
                _ => c,
            })
            .collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let chars: Vec<char> = cleaned.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigInt::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut coef = if i > start {
                chars[start..i].iter().collect::<String>().parse::<BigInt>().map_err(|_| bad())?
            } else {
                BigInt::one()
            };
            let had_digits = i > start;
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            let mut exp = 0usize;
            if i < chars.len() && chars[i] == var {
                i += 1;
                exp = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let es = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if es == i {
                        return Err(bad());
                    }
                    exp = chars[es..i].iter().collect::<String>().parse().map_err(|_| bad())?;
                } else {
                    let es = i;
                    let mut digits = String::new();
                    while i < chars.len() {
                        match superscript_digit(chars[i]) {
                            Some(d) => {
                                digits.push(d);
                                i += 1;
                            }
                            None => break,
                        }
                    }
                    if i > es {
                        exp = digits.parse().map_err(|_| bad())?;
                    }
                }
            } else if !had_digits {
                return Err(bad());
            }
            coef *= sign;
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += coef;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

fn superscript_digit(c: char) -> Option<char> {
    let table = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    table
        .iter()
        .position(|&s| s == c)
        .map(|d| char::from_digit(d as u32, 10).unwrap())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("q"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::parse_in(s, 'q')
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::default(), |acc, p| &acc + &p)
    }
}

impl Ring for IntPoly {
    fn zero() -> Self {
        IntPoly::default()
    }
    fn one() -> Self {
        IntPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        IntPoly::constant(n)
    }
    fn from_bigint(n: &BigInt) -> Self {
        IntPoly::constant(n.clone())
    }
}

pub(crate) fn exact_scalar_division(p: &IntPoly, c: &BigInt) -> IntPoly {
    p.divide_scalar_exact(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn display_and_parse() {
        let f = p(&[4, 4, 4, 1]);
        assert_eq!(f.to_string(), "4 + 4*q + 4*q^2 + q^3");
        assert_eq!("4 + 4*q + 4*q^2 + q^3".parse::<IntPoly>().unwrap(), f);
        assert_eq!("4 + 4q + 4q² + q³".parse::<IntPoly>().unwrap(), f);
        assert_eq!(p(&[2, 1]).to_string(), "2 + q");
        assert_eq!(p(&[0, -3, 1]).to_string(), "-3*q + q^2");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!("-q + 2".parse::<IntPoly>().unwrap(), p(&[2, -1]));
        assert!("2 +".parse::<IntPoly>().is_err());
        assert!("x".parse::<IntPoly>().is_err());
    }

    #[test]
    fn gcd_and_exact_division() {
        // (1+q)(1+q+q^2) and (1+q)(1-q)
        let a = &p(&[1, 1]) * &p(&[1, 1, 1]);
        let b = &p(&[1, 1]) * &p(&[1, -1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(a.div_exact(&p(&[1, -1])), None);
        assert_eq!(p(&[2, 4]).gcd(&p(&[])), p(&[1, 2]));
        assert_eq!(p(&[6, 4]).content(), BigInt::from(2));
        assert_eq!(p(&[-6, -4]).primitive_part(), p(&[3, 2]));
    }

    #[test]
    fn evaluation() {
        let f = p(&[1, 2, 2, 1]);
        assert_eq!(f.at_one(), BigInt::from(6));
        assert_eq!(f.eval(&BigInt::from(2)), BigInt::from(1 + 4 + 8 + 8));
    }
}
