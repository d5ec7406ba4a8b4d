//! q-integers, q-factorials, q-Pochhammer symbols, Gaussian binomials and
//! the q-exponential series.

use num_bigint::BigInt;

use crate::combin::binomial;
use crate::error::{Error, Result};

use super::intpoly::IntPoly;
use super::qrat::QRat;
use super::series::TruncSeries;

/// `[n]_q = 1 + q + ... + q^(n-1)`
pub fn q_int(n: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::from(1); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::constant(1), |acc, k| &acc * &q_int(k))
}

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`
pub fn q_pochhammer(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::constant(1), |acc, k| {
        &acc * &(&IntPoly::constant(1) - &IntPoly::monomial(1, k))
    })
}

/// Gaussian binomial by the q-Pascal rule
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binom(n: usize, k: usize) -> Result<IntPoly> {
    if k > n {
        return Err(Error::InvalidComposition(format!("k = {k} exceeds n = {n}")));
    }
    let mut row = vec![IntPoly::constant(1)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j > 0 { row[j - 1].clone() } else { IntPoly::default() };
            let right = if j < m { row[j].shift(j) } else { IntPoly::default() };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// q-multinomial `[n; c_1, ..., c_l]_q` as a product of Gaussian binomials.
pub fn q_multinomial(n: usize, parts: &[usize]) -> Result<IntPoly> {
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(Error::InvalidComposition(format!("parts {parts:?} do not sum to {n}")));
    }
    let mut acc = IntPoly::constant(1);
    let mut running = 0;
    for &p in parts {
        running += p;
        acc = &acc * &q_binom(running, p)?;
    }
    Ok(acc)
}

/// `exp_q(z) = sum z^n / [n]_q!` through `z^order`.
pub fn exp_q_series(order: usize) -> TruncSeries<QRat> {
    TruncSeries::from_fn(order, |n| QRat::recip_poly(q_factorial(n)))
}

/// `Exp_q(z) = sum q^C(n,2) z^n / [n]_q!` through `z^order`.
pub fn big_exp_q_series(order: usize) -> TruncSeries<QRat> {
    TruncSeries::from_fn(order, |n| {
        let e = usize::try_from(binomial(n, 2)).expect("small exponent");
        QRat::new(IntPoly::monomial(1, e), q_factorial(n))
    })
}
