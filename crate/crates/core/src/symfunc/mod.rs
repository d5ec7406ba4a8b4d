//! Symmetric functions expanded in the complete homogeneous basis.
//!
//! `h_λ` is the only basis stored. Elementary functions are converted into
//! it, and Frobenius images of permutation modules on words are read off
//! orbit contents directly.

mod identities;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::qalgebra::{rational_string, Rational, Ring, TPoly};

pub use identities::*;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the positive parts of any sequence; zero parts are dropped.
    pub fn from_parts(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    fn merged(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficients usable in [`SymF`]: printable and exportable to JSON.
pub trait SymCoeff: Ring {
    fn render(&self) -> String;
    fn to_json(&self) -> Value;
}

impl SymCoeff for Rational {
    fn render(&self) -> String {
        rational_string(self)
    }
    fn to_json(&self) -> Value {
        Value::String(rational_string(self))
    }
}

impl SymCoeff for TPoly {
    fn render(&self) -> String {
        self.to_string_in("t")
    }
    fn to_json(&self) -> Value {
        json!(self.coefficient_strings())
    }
}

/// A finite sum `Σ c_λ h_λ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymF<C> {
    terms: BTreeMap<Partition, C>,
}

/// Rational coefficients.
pub type Sym = SymF<Rational>;
/// Coefficients in `Q[t]`.
pub type SymT = SymF<TPoly>;

impl<C: Ring> SymF<C> {
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut out = SymF { terms: BTreeMap::new() };
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    /// `c · h_λ`.
    pub fn term(lambda: Partition, c: C) -> Self {
        Self::from_terms([(lambda, c)])
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&lambda) {
            Some(old) => {
                let s = old.plus(&c);
                if !s.is_zero() {
                    self.terms.insert(lambda, s);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::n);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, a)| (p.clone(), a.times(c))))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> SymF<D> {
        SymF::from_terms(self.terms.iter().map(|(p, a)| (p.clone(), f(a))))
    }

    /// First partition (in key order) where the two differ.
    pub fn first_difference(&self, other: &Self) -> Option<Partition> {
        let keys: std::collections::BTreeSet<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find(|k| self.coeff(k) != other.coeff(k)).cloned()
    }
}

impl<C: Ring> Ring for SymF<C> {
    fn zero() -> Self {
        SymF { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::term(Partition::default(), C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (r, b) in &other.terms {
                out.add_term(p.merged(r), a.times(b));
            }
        }
        out
    }
    fn negated(&self) -> Self {
        self.map(C::negated)
    }
    fn from_i64(n: i64) -> Self {
        Self::term(Partition::default(), C::from_i64(n))
    }
    fn from_bigint(n: &num_bigint::BigInt) -> Self {
        Self::term(Partition::default(), C::from_bigint(n))
    }
}

impl<C: SymCoeff> SymF<C> {
    /// `{"n":3,"terms":[{"partition":[2,1],"coeff":"2"}]}`; `n` is `null`
    /// when the terms are not homogeneous.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| json!({"partition": p.parts(), "coeff": c.to_json()}))
            .collect();
        let n = if self.terms.is_empty() { Some(0) } else { self.degree() };
        json!({"n": n, "terms": terms})
    }
}

impl<C: SymCoeff> fmt::Display for SymF<C> {
    /// `h[1,1] + 2*h[2]`, with compound coefficients in parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let basis = if p.0.is_empty() { String::new() } else { format!("h{p}") };
            let s = c.render();
            let compound = s.trim_start_matches('-').contains(' ');
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let body = match (mag.as_str(), basis.is_empty()) {
                (m, true) if compound => format!("({m})"),
                (m, true) => m.to_string(),
                ("1", false) => basis,
                (m, false) if compound => format!("({m})*{basis}"),
                (m, false) => format!("{m}*{basis}"),
            };
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for SymF<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// `h_c` for any sequence of parts; zero parts are `h_0 = 1`.
pub fn h_of(parts: &[usize]) -> Sym {
    SymF::term(Partition::from_parts(parts), <Rational as Ring>::one())
}

/// `h_n`.
pub fn h(n: usize) -> Sym {
    h_of(&[n])
}

/// `e_0, ..., e_n` in the h-basis from `Σ_{i=0}^{m} (-1)^i e_i h_{m-i} = 0`.
pub fn e_table(n: usize) -> Vec<Sym> {
    let mut e: Vec<Sym> = vec![Sym::one()];
    for m in 1..=n {
        let mut acc = Sym::zero();
        for (i, ei) in e.iter().enumerate() {
            let term = ei.times(&h(m - i));
            acc = if (m - 1 - i) % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
        }
        e.push(acc);
    }
    e
}

/// `e_n` in the h-basis.
pub fn e_in_h(n: usize) -> Sym {
    e_table(n).pop().expect("nonempty")
}

/// Product in the h-basis.
pub fn multiply<C: Ring>(f: &SymF<C>, g: &SymF<C>) -> SymF<C> {
    f.times(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{rat, Poly};

    #[test]
    fn partitions_and_h() {
        assert_eq!(h_of(&[2, 1]), h_of(&[1, 2]));
        assert_eq!(h_of(&[1, 0, 2]), h_of(&[2, 1]));
        assert_eq!(h_of(&[]), Sym::one());
        assert_eq!(h_of(&[2, 1]).degree(), Some(3));
        assert_eq!(Partition::from_parts(&[1, 3, 2]).to_string(), "[3,2,1]");
        assert_eq!(multiply(&h(2), &h(1)), h_of(&[2, 1]));
    }

    #[test]
    fn elementary_functions() {
        assert_eq!(e_in_h(1), h(1));
        assert_eq!(e_in_h(2), h_of(&[1, 1]).minus(&h(2)));
        assert_eq!(e_in_h(2).to_string(), "h[1,1] - h[2]");
        let e = e_table(5);
        let mut alt = Sym::zero();
        for (i, ei) in e.iter().enumerate() {
            let t = ei.times(&h(5 - i));
            alt = if i % 2 == 0 { alt.plus(&t) } else { alt.minus(&t) };
        }
        assert!(alt.is_zero());
        let x = h_of(&[1, 1]).minus(&h(2));
        assert_eq!(x.times(&Sym::one()), x);
    }

    #[test]
    fn display_and_json() {
        let f = Sym::from_terms([(Partition::from_parts(&[2, 1]), rat(2, 1)), (Partition::from_parts(&[3]), rat(-1, 2))]);
        assert_eq!(f.to_string(), "2*h[2,1] - 1/2*h[3]");
        assert_eq!(f.to_json()["terms"][0]["partition"], json!([2, 1]));
        assert_eq!(f.to_json()["terms"][0]["coeff"], json!("2"));
        assert_eq!(f.to_json()["n"], json!(3));
        let g = SymT::from_terms([
            (Partition::from_parts(&[1, 1]), TPoly::one()),
            (Partition::from_parts(&[2]), Poly::from_coeffs(vec![rat(1, 1), rat(1, 1)])),
        ]);
        assert_eq!(g.to_string(), "h[1,1] + (1 + t)*h[2]");
        assert_eq!(g.to_json()["terms"][1]["coeff"], json!(["1", "1"]));
    }
}
