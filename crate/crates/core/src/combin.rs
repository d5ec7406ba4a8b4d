//! Integer counting functions shared by the enumerators and closed forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `(sum parts)! / prod(part!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total = 0;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Ordered set partitions of `[n]`, via `Fub_n = sum_k C(n,k) Fub_{n-k}`.
pub fn fubini(n: usize) -> BigInt {
    let mut fub = vec![BigInt::one()];
    for m in 1..=n {
        let v = (1..=m).map(|k| binomial(m, k) * &fub[m - k]).sum();
        fub.push(v);
    }
    fub.pop().unwrap()
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `(n+1)^(n-1)` as an exact integer; `n = 0` gives 1.
pub fn parking_count(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    num_traits::pow(BigInt::from(n + 1), n - 1)
}
