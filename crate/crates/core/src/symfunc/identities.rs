use std::collections::BTreeSet;


use crate::error::{Error, Result};
use crate::forests::enumerate_increasing_forests;
use crate::parking::{area, block_structure, enumerate_pf, enumerate_upf};
use crate::qalgebra::{q_factorial, q_pochhammer, IntPoly, Poly, QRat, Rational, Ring, TPoly, TruncSeries};
use crate::report::{Report, Scope, Suite};
use crate::words::{compositions, content, statistic, weak_compositions, StatisticId, Word};

use super::{e_table, h, h_of, Partition, Sym, SymF, SymT};

/// Power series in `z` with symmetric-function coefficients.
pub type SymSeries<C> = TruncSeries<SymF<C>>;

/// Above this size the cross-checks inside the constructors are skipped.
pub const SYM_CHECK_MAX: usize = 6;

fn t_pow(k: usize) -> TPoly {
    Poly::monomial(<Rational as Ring>::one(), k)
}

/// Frobenius image of `C[W]` under place permutation: `Σ h_{con(w)}` over
/// the weakly increasing `w ∈ W`. Fails unless `W` is closed under
/// adjacent transpositions of positions.
pub fn frobenius_of_word_set(words: &[Word], n: usize) -> Result<Sym> {
    let set: BTreeSet<&[u32]> = words.iter().map(|w| w.entries()).collect();
    for w in words {
        if w.len() != n {
            return Err(Error::InvalidComposition(format!("{w} does not have length {n}")));
        }
        for i in 1..n {
            if w[i - 1] != w[i] && !set.contains(&w.swap_adjacent(i)[..]) {
                return Err(Error::NotInvariant(format!("place permutation ({w} moved by s_{i})")));
            }
        }
    }
    Ok(words
        .iter()
        .filter(|w| w.is_weakly_increasing())
        .fold(Sym::zero(), |acc, w| acc.plus(&h_of(content(w).parts()))))
}

/// Frobenius image of `C[UPF_n]` under the block action: `h` of the block
/// sizes, summed over the weakly increasing members.
pub fn frobenius_upf(n: usize) -> Sym {
    enumerate_upf(n).filter(|a| a.is_weakly_increasing()).fold(Sym::zero(), |acc, a| {
        let b = block_structure(&a).expect("UPF");
        acc.plus(&h_of(b.sizes.parts()))
    })
}

/// `PF_0(x), ..., PF_n(x)` from `PF_n = Σ_k h_k Σ_{c ∈ WComp(n-k, k)} Π PF_{c_i}`.
pub fn pf_symfunc_table(n: usize) -> Vec<Sym> {
    let mut table = vec![Sym::one()];
    for m in 1..=n {
        let mut total = Sym::zero();
        for k in 1..=m {
            let mut inner = Sym::zero();
            for c in weak_compositions(m - k, k) {
                let prod = c.parts().iter().fold(Sym::one(), |acc, &ci| acc.times(&table[ci]));
                inner = inner.plus(&prod);
            }
            total = total.plus(&h(k).times(&inner));
        }
        table.push(total);
    }
    table
}

/// `PF_n(x)` by Frobenius image of the place action on `PF_n`.
pub fn pf_symfunc_by_frobenius(n: usize) -> Sym {
    let words: Vec<Word> = enumerate_pf(n).collect();
    frobenius_of_word_set(&words, n).expect("PF_n is closed under place permutation")
}

/// `PF_n(x) = Σ h_{con(F)}` over increasing forests.
pub fn pf_symfunc_by_forests(n: usize) -> Sym {
    enumerate_increasing_forests(n).fold(Sym::zero(), |acc, f| acc.plus(&h_of(f.parental_content().parts())))
}

/// `PF_n(x)`. Up to [`SYM_CHECK_MAX`] the recursion is checked against the
/// Frobenius image and the forest sum.
pub fn pf_symfunc(n: usize) -> Sym {
    let r = pf_symfunc_table(n).pop().expect("nonempty");
    if n <= SYM_CHECK_MAX {
        assert_eq!(r, pf_symfunc_by_frobenius(n), "PF_{n}(x): recursion vs Frobenius");
        assert_eq!(r, pf_symfunc_by_forests(n), "PF_{n}(x): recursion vs forests");
    }
    r
}

/// The three constructions of `PF_n(x)` side by side.
pub fn verify_pf_sym_recursion(n: usize) -> Suite {
    let rec = pf_symfunc_table(n).pop().expect("nonempty");
    let frob = pf_symfunc_by_frobenius(n);
    let forest = pf_symfunc_by_forests(n);
    let at = |a: &Sym, b: &Sym| a.first_difference(b).map(|p| format!("h{p}"));
    Suite {
        reports: vec![
            Report::outcome("pf-sym-frobenius", Scope::N(n), &frob, &rec, at(&frob, &rec)),
            Report::outcome("pf-sym-forests", Scope::N(n), &forest, &rec, at(&forest, &rec)),
        ],
    }
}

fn series_mismatch<C: Ring>(lhs: &SymSeries<C>, rhs: &SymSeries<C>) -> Option<String> {
    lhs.first_mismatch(rhs).map(|k| format!("z^{k}"))
}

/// `B(A(z)) = z` for `B = z E(-z)` and `A = Σ_{n<N} PF_n(x) z^{n+1}`.
pub fn verify_pf_sym_gf(order: usize) -> Report {
    verify_pf_sym_gf_with(order, &pf_symfunc_table(order.saturating_sub(1)))
}

pub fn verify_pf_sym_gf_with(order: usize, pf: &[Sym]) -> Report {
    let e = e_table(order);
    let b = SymSeries::from_fn(order, |m| match m.checked_sub(1) {
        Some(k) if k % 2 == 0 => e[k].clone(),
        Some(k) => e[k].negated(),
        None => Sym::zero(),
    });
    let a = SymSeries::from_fn(order, |m| m.checked_sub(1).and_then(|n| pf.get(n)).cloned().unwrap_or_else(Sym::zero));
    let lhs = b.compose(&a).expect("A has zero constant term");
    let rhs = SymSeries::z(order);
    Report::outcome("pf-sym-gf", Scope::Order(order), "zE(-z) o PF(x,z)", "z", series_mismatch(&lhs, &rhs))
}

/// `H(z) E(-z) = 1`.
pub fn verify_h_e_inverse(order: usize) -> Report {
    let e = e_table(order);
    let hs = SymSeries::from_fn(order, h);
    let em = SymSeries::from_fn(order, |k| if k % 2 == 0 { e[k].clone() } else { e[k].negated() });
    let lhs = hs.mul(&em);
    Report::outcome("h-e-inverse", Scope::Order(order), "H(z)E(-z)", "1", series_mismatch(&lhs, &SymSeries::one(order)))
}

/// `UPF_n(x) = Σ_{c ⊨ n} h_c`, checked against the block-action Frobenius
/// image up to [`SYM_CHECK_MAX`].
pub fn upf_symfunc(n: usize) -> Sym {
    let s = compositions(n).iter().fold(Sym::zero(), |acc, c| acc.plus(&h_of(c.parts())));
    if n <= SYM_CHECK_MAX {
        assert_eq!(s, frobenius_upf(n), "UPF_{n}(x): compositions vs blocks");
    }
    s
}

/// `Σ_{c ⊨ n} t^{n - ℓ(c)} h_c`.
pub fn upf_symfunc_graded_by_compositions(n: usize) -> SymT {
    SymT::from_terms(compositions(n).iter().map(|c| (Partition::from_parts(c.parts()), t_pow(n - c.len()))))
}

/// `Σ_{α ∈ UPF_n weakly increasing} t^{area(α)} h_{block sizes}`.
pub fn upf_symfunc_graded_by_area(n: usize) -> SymT {
    SymT::from_terms(enumerate_upf(n).filter(|a| a.is_weakly_increasing()).map(|a| {
        let b = block_structure(&a).expect("UPF");
        (Partition::from_parts(b.sizes.parts()), t_pow(area(&a).expect("PF") as usize))
    }))
}

/// `UPF_n(x, t)`, with the two constructions compared up to [`SYM_CHECK_MAX`].
pub fn upf_symfunc_graded(n: usize) -> SymT {
    let s = upf_symfunc_graded_by_compositions(n);
    if n <= SYM_CHECK_MAX {
        assert_eq!(s, upf_symfunc_graded_by_area(n), "UPF_{n}(x,t): compositions vs area");
    }
    s
}

/// `(2 - H(z)) Σ_{n≤N} UPF_n(x) z^n = 1`.
pub fn verify_upf_sym_gf(order: usize) -> Report {
    let u: Vec<Sym> = (0..=order).map(upf_symfunc).collect();
    verify_upf_sym_gf_with(order, &u)
}

pub fn verify_upf_sym_gf_with(order: usize, upf: &[Sym]) -> Report {
    let two_minus_h = SymSeries::from_fn(order, |k| if k == 0 { Sym::one() } else { h(k).negated() });
    let u = SymSeries::from_fn(order, |n| upf.get(n).cloned().unwrap_or_else(Sym::zero));
    let lhs = two_minus_h.mul(&u);
    Report::outcome("upf-sym-gf", Scope::Order(order), "(2 - H(z)) * U(x,z)", "1", series_mismatch(&lhs, &SymSeries::one(order)))
}

/// `([2]_t - H(tz)) Σ_{n≤N} UPF_n(x,t) z^n = t`.
pub fn verify_upf_graded_gf(order: usize) -> Report {
    let u: Vec<SymT> = (0..=order).map(upf_symfunc_graded).collect();
    verify_upf_graded_gf_with(order, &u)
}

pub fn verify_upf_graded_gf_with(order: usize, upf: &[SymT]) -> Report {
    let left = SymSeries::from_fn(order, |k| {
        if k == 0 {
            SymT::term(Partition::default(), t_pow(1))
        } else {
            SymT::term(Partition::from_parts(&[k]), t_pow(k).negated())
        }
    });
    let u = SymSeries::from_fn(order, |n| upf.get(n).cloned().unwrap_or_else(SymT::zero));
    let lhs = left.mul(&u);
    let rhs = SymSeries::constant(SymT::term(Partition::default(), t_pow(1)), order);
    Report::outcome("upf-graded-gf", Scope::Order(order), "([2]_t - H(tz)) * U(x,z,t)", "t", series_mismatch(&lhs, &rhs))
}

/// `Σ_{α ∈ PF_n weakly increasing} t^{area(α)} h_{con(α)}`.
pub fn pf_symfunc_graded(n: usize) -> SymT {
    SymT::from_terms(
        enumerate_pf(n)
            .filter(|a| a.is_weakly_increasing())
            .map(|a| (Partition::from_parts(content(&a).parts()), t_pow(area(&a).expect("PF") as usize))),
    )
}

/// Sets `t = 1`.
pub fn at_t_one(f: &SymT) -> Sym {
    f.map(|c| c.eval(&<Rational as Ring>::one()))
}

/// Principal specialization `x_i = q^{i-1}`: `ps(h_λ) = Π 1/(q;q)_{λ_i}`.
pub fn ps(f: &Sym) -> QRat {
    f.terms().fold(QRat::zero(), |acc, (p, c)| {
        let den = p.parts().iter().fold(IntPoly::constant(1), |d, &k| &d * &q_pochhammer(k));
        acc.plus(&QRat::from_rational(c).times(&QRat::recip_poly(den)))
    })
}

fn inversion_polynomial(words: &[Word]) -> IntPoly {
    let mut coeffs = Vec::new();
    for w in words {
        let k = statistic(w, &StatisticId::Inv).expect("total") as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, num_bigint::BigInt::from(0));
        }
        coeffs[k] += 1;
    }
    IntPoly::from_coeffs(coeffs)
}

/// `(q;q)_n ps(F) = Σ_{w ∈ W} q^{inv(w)}` with `F` the place-action
/// Frobenius image of `W`.
pub fn verify_ps_inversion(label: &str, words: &[Word], n: usize) -> Result<Report> {
    let frob = frobenius_of_word_set(words, n)?;
    Ok(verify_ps_inversion_with(label, words, &frob, n))
}

/// As [`verify_ps_inversion`] with a caller-supplied image, e.g. the block
/// action for unit interval parking functions.
pub fn verify_ps_inversion_with(label: &str, words: &[Word], frob: &Sym, n: usize) -> Report {
    let lhs = ps(frob).times(&QRat::from_poly(q_pochhammer(n)));
    let rhs = QRat::from_poly(inversion_polynomial(words));
    let mismatch = (lhs != rhs).then(|| first_q_difference(&lhs, &rhs));
    Report::outcome(format!("ps-inversion-{label}"), Scope::N(n), lhs, rhs, mismatch)
}

/// `q^k` at the lowest differing coefficient, when both sides are polynomials.
fn first_q_difference(a: &QRat, b: &QRat) -> String {
    match (a.as_poly(), b.as_poly()) {
        (Some(x), Some(y)) => {
            let top = x.coeffs().len().max(y.coeffs().len());
            let k = (0..top).find(|&k| x.coeff(k) != y.coeff(k)).unwrap_or(0);
            format!("q^{k}")
        }
        _ => "q-polynomial".to_string(),
    }
}

/// `(1-q)^n ps(PF_n(x)) = PF_n(q)/[n]_q!`: the principal specialization of
/// the symmetric identity lands on the q-identity.
pub fn verify_pf_specialization(n: usize, pf_q: &IntPoly) -> Report {
    let one_minus_q = IntPoly::from_i64s(&[1, -1]);
    let lhs = ps(&pf_symfunc_table(n)[n]).times(&QRat::from_poly(one_minus_q.pow(n)));
    let rhs = QRat::new(pf_q.clone(), q_factorial(n));
    let mismatch = (lhs != rhs).then(|| "q-series coefficient".to_string());
    Report::outcome("pf-sym-specialization", Scope::N(n), lhs, rhs, mismatch)
}
