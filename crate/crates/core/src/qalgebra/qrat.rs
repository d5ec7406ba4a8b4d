//! Rational functions in `q` kept in a canonical reduced form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::intpoly::{exact_scalar_division, IntPoly};
use super::ring::{Field, Rational, Ring};

/// `num / den` with `gcd(num, den) = 1` in `Q[q]`, no common integer
/// content, and a positive leading coefficient on `den`.
///
/// Under these rules the representation is unique, so structural equality
/// is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: IntPoly,
    den: IntPoly,
}

impl QRat {
    /// Builds and normalizes `num / den`. Panics if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "QRat with zero denominator");
        if num.is_zero() {
            return QRat { num, den: IntPoly::constant(1) };
        }
        let (mut num, mut den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
            }
        };
        let c = num.content().gcd(&den.content());
        let c = if den.leading().unwrap().is_negative() { -c } else { c };
        if c != BigInt::from(1) {
            num = exact_scalar_division(&num, &c);
            den = exact_scalar_division(&den, &c);
        }
        QRat { num, den }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        QRat { num: p, den: IntPoly::constant(1) }
    }

    pub fn from_rational(r: &Rational) -> Self {
        QRat::new(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    pub fn recip_poly(p: IntPoly) -> Self {
        QRat::new(IntPoly::constant(1), p)
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    /// The polynomial this equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&IntPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Value at an integer point; `None` when the denominator vanishes there.
    pub fn eval(&self, x: &BigInt) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(Rational::new(self.num.eval(x), d))
        }
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

impl Ring for QRat {
    fn zero() -> Self {
        QRat::from_poly(IntPoly::default())
    }
    fn one() -> Self {
        QRat::from_poly(IntPoly::constant(1))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return QRat::new(&self.num + &other.num, self.den.clone());
        }
        QRat::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        QRat::new(&self.num * &other.num, &self.den * &other.den)
    }
    fn negated(&self) -> Self {
        QRat { num: -&self.num, den: self.den.clone() }
    }
    fn from_i64(n: i64) -> Self {
        QRat::from_poly(IntPoly::constant(n))
    }
    fn from_bigint(n: &BigInt) -> Self {
        QRat::from_poly(IntPoly::constant(n.clone()))
    }
}

impl Field for QRat {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(QRat::new(self.den.clone(), self.num.clone()))
        }
    }
}
