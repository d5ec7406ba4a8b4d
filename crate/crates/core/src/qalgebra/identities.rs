//! Inversion generating polynomials of parking functions and unit interval
//! parking functions, and the q-exponential identities they satisfy.

use num_bigint::BigInt;

use crate::combin::{factorial, fubini, parking_count};
use crate::parking::{enumerate_pf, enumerate_upf};
use crate::report::{Report, Scope, Suite};
use crate::words::{compositions, permutations, statistic, weak_compositions, StatisticId};

use super::bipoly::BiPoly;
use super::intpoly::IntPoly;
use super::poly::Poly;
use super::qnumbers::{big_exp_q_series, exp_q_series, q_binom, q_factorial, q_multinomial};
use super::qrat::QRat;
use super::ring::{Field, Rational, Ring};
use super::series::TruncSeries;

/// Above this size the brute-force cross-check in [`pf_q`] is skipped.
pub const PF_BRUTE_CHECK_MAX: usize = 6;

fn inv_poly<I: IntoIterator<Item = W>, W: AsRef<[u32]>>(words: I) -> IntPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for w in words {
        let k = statistic(w.as_ref(), &StatisticId::Inv).expect("inv is total") as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::from(0));
        }
        coeffs[k] += 1;
    }
    IntPoly::from_coeffs(coeffs)
}

/// `Σ_{α ∈ PF_n} q^{inv(α)}` by enumeration.
pub fn pf_q_brute(n: usize) -> IntPoly {
    inv_poly(enumerate_pf(n))
}

/// `Σ_{α ∈ UPF_n} q^{inv(α)}` by enumeration.
pub fn upf_q_brute(n: usize) -> IntPoly {
    inv_poly(enumerate_upf(n))
}

/// `PF_0(q), ..., PF_n(q)` by the decomposition over the cars that park
/// in the first spot's run.
pub fn pf_q_table(n: usize) -> Vec<IntPoly> {
    let mut table = vec![IntPoly::constant(1)];
    for m in 1..=n {
        let mut total = IntPoly::default();
        for k in 1..=m {
            let outer = q_binom(m, k).expect("k <= m");
            for c in weak_compositions(m - k, k) {
                let mut term = &outer * &q_multinomial(m - k, c.parts()).expect("parts sum");
                for &ci in c.parts() {
                    term = &term * &table[ci];
                }
                total = &total + &term;
            }
        }
        table.push(total);
    }
    table
}

/// `PF_n(q)`. Up to [`PF_BRUTE_CHECK_MAX`] the recursion is checked
/// against enumeration.
pub fn pf_q(n: usize) -> IntPoly {
    let p = pf_q_table(n).pop().expect("nonempty table");
    if n <= PF_BRUTE_CHECK_MAX {
        assert_eq!(p, pf_q_brute(n), "PF_{n}(q): recursion and enumeration disagree");
    }
    p
}

/// `UPF_n(q) = Σ_{c ⊨ n} [n; c]_q`.
pub fn upf_q(n: usize) -> IntPoly {
    compositions(n)
        .iter()
        .map(|c| q_multinomial(n, c.parts()).expect("composition of n"))
        .sum()
}

/// `Σ_{π ∈ S_n} q^{inv(π)} t^{asc(π)}`.
pub fn a_inv_asc(n: usize) -> BiPoly {
    let mut b = BiPoly::new();
    for p in permutations(n) {
        let inv = statistic(&p, &StatisticId::Inv).expect("total") as usize;
        let asc = statistic(&p, &StatisticId::Asc).expect("total") as usize;
        b.add_term(inv, asc, 1);
    }
    b
}

fn coefficient_mismatch<C: Ring>(lhs: &TruncSeries<C>, rhs: &TruncSeries<C>) -> Option<String> {
    lhs.first_mismatch(rhs).map(|k| format!("z^{k}"))
}

/// `B(A(z)) = z` with `B = z Exp_q(-z)` and `A = Σ_{n<N} PF_n(q) z^{n+1}/[n]_q!`.
pub fn verify_pf_gf(order: usize) -> Report {
    let polys: Vec<IntPoly> = pf_q_table(order.saturating_sub(1));
    verify_pf_gf_with(order, &polys)
}

/// As [`verify_pf_gf`] with caller-supplied `PF_0(q), ..., PF_{N-1}(q)`.
pub fn verify_pf_gf_with(order: usize, polys: &[IntPoly]) -> Report {
    let id = "pf-gf";
    let a = TruncSeries::from_fn(order, |m| match m.checked_sub(1).and_then(|n| polys.get(n)) {
        Some(p) => QRat::new(p.clone(), q_factorial(m - 1)),
        None => QRat::zero(),
    });
    let b = big_exp_q_series(order)
        .dilate(&QRat::from_i64(-1))
        .shift_up(1);
    let lhs = b.compose(&a).expect("A has zero constant term");
    let rhs = TruncSeries::z(order);
    Report::outcome(id, Scope::Order(order), "z*Exp_q(-z) o A(z)", "z", coefficient_mismatch(&lhs, &rhs))
}

/// `(2 - exp_q(z)) Σ_{n≤N} UPF_n(q) z^n/[n]_q! = 1`.
pub fn verify_upf_gf(order: usize) -> Report {
    let polys: Vec<IntPoly> = (0..=order).map(upf_q).collect();
    verify_upf_gf_with(order, &polys)
}

/// As [`verify_upf_gf`] with caller-supplied `UPF_0(q), ..., UPF_N(q)`.
pub fn verify_upf_gf_with(order: usize, polys: &[IntPoly]) -> Report {
    let id = "upf-gf";
    let u = TruncSeries::from_fn(order, |n| match polys.get(n) {
        Some(p) => QRat::new(p.clone(), q_factorial(n)),
        None => QRat::zero(),
    });
    let two_minus = TruncSeries::constant(QRat::from_i64(2), order).sub(&exp_q_series(order));
    let lhs = two_minus.mul(&u);
    let rhs = TruncSeries::one(order);
    Report::outcome(id, Scope::Order(order), "(2 - exp_q(z)) * U(z)", "1", coefficient_mismatch(&lhs, &rhs))
}

/// `A_n^{inv,asc}(q, 2) = UPF_n(q)`.
pub fn verify_a_at_2(n: usize) -> Report {
    Report::compare("a-inv-asc-at-2", Scope::N(n), &a_inv_asc(n).eval_t(2), &upf_q(n))
}

/// `(1 - t Exp_q(z(1-t))) (1 + Σ_{n≥1} t A_n(q,t) z^n/[n]_q!) = 1 - t`,
/// with coefficients in `Q(q)[t]`.
pub fn verify_stanley_gf(order: usize) -> Report {
    let polys: Vec<BiPoly> = (0..=order).map(a_inv_asc).collect();
    verify_stanley_gf_with(order, &polys)
}

/// As [`verify_stanley_gf`] with caller-supplied `A_0, ..., A_N`.
pub fn verify_stanley_gf_with(order: usize, polys: &[BiPoly]) -> Report {
    let id = "stanley-gf";
    let t: Poly<QRat> = Poly::var();
    let one = Poly::<QRat>::one();
    let one_minus_t = one.minus(&t);
    let big = big_exp_q_series(order);
    let e = TruncSeries::from_fn(order, |n| Poly::constant(big.coeff(n).clone()).times(&one_minus_t.pow(n)));
    let left = TruncSeries::one(order).sub(&e.scale(&t));
    let gen = TruncSeries::from_fn(order, |n| {
        if n == 0 {
            return one.clone();
        }
        let inv_fact = QRat::recip_poly(q_factorial(n));
        match polys.get(n) {
            Some(a) => a.to_t_poly().times(&t).scale(&inv_fact),
            None => Poly::zero(),
        }
    });
    let lhs = left.mul(&gen);
    let rhs = TruncSeries::constant(one_minus_t, order);
    Report::outcome(
        id,
        Scope::Order(order),
        "(1 - t*Exp_q(z(1-t))) * (1 + t*A(z))",
        "1 - t",
        coefficient_mismatch(&lhs, &rhs),
    )
}

/// At `q = 1`: the inverse of `z e^{-z}` has coefficients `PF_{n}(1)/n!`
/// at `z^{n+1}`, and `1/(2 - e^z)` has coefficients `UPF_n(1)/n!`.
pub fn verify_q_one_shadow(order: usize) -> Suite {
    let mut suite = Suite::new();
    let exp = TruncSeries::from_fn(order, |n| Rational::from_integer(factorial(n)).inverse().expect("n! > 0"));

    let b = exp.dilate(&Rational::from_i64(-1)).shift_up(1);
    let lambert = b.invert_composition().expect("z e^{-z} is invertible");
    let pf = pf_q_table(order.saturating_sub(1));
    let from_q = TruncSeries::from_fn(order, |m| match m.checked_sub(1) {
        Some(n) => Rational::new(pf[n].at_one(), factorial(n)),
        None => Rational::from_i64(0),
    });
    let closed = TruncSeries::from_fn(order, |m| match m.checked_sub(1) {
        Some(n) => Rational::new(parking_count(n), factorial(n)),
        None => Rational::from_i64(0),
    });
    suite.push(Report::outcome(
        "pf-gf-at-q1",
        Scope::Order(order),
        "PF_n(1)/n!",
        "(z e^-z)^<-1>",
        coefficient_mismatch(&from_q, &lambert).or_else(|| coefficient_mismatch(&closed, &lambert)),
    ));

    let fub = TruncSeries::constant(Rational::from_i64(2), order)
        .sub(&exp)
        .inverse()
        .expect("constant term 1");
    let from_q = TruncSeries::from_fn(order, |n| Rational::new(upf_q(n).at_one(), factorial(n)));
    let closed = TruncSeries::from_fn(order, |n| Rational::new(fubini(n), factorial(n)));
    suite.push(Report::outcome(
        "upf-gf-at-q1",
        Scope::Order(order),
        "UPF_n(1)/n!",
        "1/(2 - e^z)",
        coefficient_mismatch(&from_q, &fub).or_else(|| coefficient_mismatch(&closed, &fub)),
    ));
    suite
}

/// Every q-layer identity at its default size.
pub fn verify_all(max_n: usize, order: usize) -> Suite {
    let mut suite = Suite::new();
    suite.push(verify_pf_gf(order));
    suite.push(verify_upf_gf(order));
    suite.push(verify_stanley_gf(order.min(4)));
    for n in 0..=max_n {
        suite.push(verify_a_at_2(n));
    }
    suite.extend(verify_q_one_shadow(order));
    suite
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::catalan;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(pf_q(2), p(&[2, 1]));
        assert_eq!(pf_q(3).at_one(), BigInt::from(16));
        assert_eq!(pf_q(4).coeff(0), catalan(4));
        assert_eq!(upf_q(3), p(&[4, 4, 4, 1]));
        assert_eq!(upf_q(2), p(&[2, 1]));
        assert_eq!(upf_q(0), p(&[1]));
        assert_eq!(a_inv_asc(1).to_string(), "1");
        assert_eq!(a_inv_asc(3).eval_t(2), p(&[4, 4, 4, 1]));
    }

    #[test]
    fn recursion_and_enumeration_agree() {
        for n in 0..=6 {
            assert_eq!(pf_q(n).coeff(0), catalan(n));
            assert_eq!(pf_q(n).at_one(), parking_count(n));
            assert_eq!(upf_q(n), upf_q_brute(n), "n = {n}");
            assert_eq!(upf_q(n).at_one(), fubini(n));
        }
    }

    #[test]
    fn generating_functions() {
        for order in 0..=5 {
            assert!(verify_pf_gf(order).passed(), "{}", verify_pf_gf(order));
            assert!(verify_upf_gf(order).passed());
        }
        assert!(verify_stanley_gf(4).passed(), "{}", verify_stanley_gf(4));
        for n in 0..=5 {
            assert!(verify_a_at_2(n).passed());
        }
        assert!(verify_q_one_shadow(8).ok());
    }

    #[test]
    fn corrupted_inputs_fail_at_the_right_coefficient() {
        let mut pf = pf_q_table(4);
        pf[2] = p(&[2, 2]);
        let r = verify_pf_gf_with(5, &pf);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.as_deref(), Some("z^3"));

        let mut upf: Vec<IntPoly> = (0..=6).map(upf_q).collect();
        upf[3] = p(&[4, 4, 4, 2]);
        assert_eq!(verify_upf_gf_with(6, &upf).first_mismatch.as_deref(), Some("z^3"));

        let mut a: Vec<BiPoly> = (0..=4).map(a_inv_asc).collect();
        a[2].add_term(1, 0, 1);
        assert_eq!(verify_stanley_gf_with(4, &a).first_mismatch.as_deref(), Some("z^2"));
    }
}
