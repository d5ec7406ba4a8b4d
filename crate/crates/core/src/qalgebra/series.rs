//! Truncated formal power series in `z`.

use std::fmt;

use crate::error::{Error, Result};

use super::ring::{Field, Ring};

/// `c_0 + c_1 z + ... + c_N z^N`, with everything above `z^N` unknown.
///
/// The order `N` is stored as `coeffs.len() - 1`; binary operations truncate
/// to the smaller order of the two operands.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    /// The series `z` itself.
    pub fn z(order: usize) -> Self {
        Self::new(vec![C::zero(), C::one()], order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |i| self.coeffs[i].plus(&other.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |i| self.coeffs[i].minus(&other.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |i| self.coeffs[i].negated())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_fn(self.order(), |i| self.coeffs[i].times(c))
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                C::zero()
            }
        })
    }

    /// `A(c z)`: coefficient `n` scaled by `c^n`.
    pub fn dilate(&self, c: &C) -> Self {
        let mut pw = C::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.times(&pw));
            pw = pw.times(c);
        }
        TruncSeries { coeffs: out }
    }

    /// Formal derivative; the order drops by one (order 0 stays 0 with value 0).
    pub fn derive(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |i| {
            self.coeffs[i + 1].times(&C::from_i64((i + 1) as i64))
        })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self(inner(z))`, evaluated by Horner. `inner` must have zero
    /// constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for a in self.coeffs[..=n].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].plus(a);
        }
        Ok(acc)
    }

    /// Index of the first coefficient where the two series differ, up to
    /// the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<C: Field> TruncSeries<C> {
    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0inv = self.coeffs[0]
            .inverse()
            .ok_or_else(|| Error::NotInvertible(format!("{:?}", self.coeffs[0])))?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(c0inv.clone());
        for m in 1..=n {
            let mut s = C::zero();
            for j in 1..=m {
                s = s.plus(&self.coeffs[j].times(&out[m - j]));
            }
            out.push(s.negated().times(&c0inv));
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// The series `Q` with `Q(B(z)) = z`, for `B(0) = 0` and `B'(0)`
    /// invertible. Each pass fixes one more coefficient.
    pub fn invert_composition(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let b1inv = self.coeffs[1]
            .inverse()
            .ok_or_else(|| Error::NotInvertible(format!("{:?}", self.coeffs[1])))?;
        let mut q = Self::z(n).scale(&b1inv);
        let target = Self::z(n);
        // Changing q_k by d moves coefficient k of Q(B) by d * b1^k.
        let mut b1inv_k = b1inv.clone();
        for k in 2..=n {
            b1inv_k = b1inv_k.times(&b1inv);
            let err = q.compose(self)?.sub(&target);
            let fix = err.coeffs[k].times(&b1inv_k);
            q.coeffs[k] = q.coeffs[k].minus(&fix);
        }
        Ok(q)
    }
}

impl<C: Ring> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries(order {}) ", self.order())?;
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
