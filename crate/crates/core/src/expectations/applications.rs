//! Closed-form totals of statistics over permutations, parking functions and
//! Cayley permutations, checked against enumeration.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{chi_1, int, KTransitiveFn, WordFamily};
use crate::combin::{binomial, factorial, fubini, multinomial};
use crate::error::{Error, Result};
use crate::parking::hess_sequences;
use crate::qalgebra::Rational;
use crate::report::{Report, Scope, Suite};
use crate::words::{self, compositions, Digraph, StatisticId, Word};

fn rpow(base: usize, exp: i64) -> Rational {
    int(base).pow(exp as i32)
}

fn b(n: usize, k: usize) -> Rational {
    int(binomial(n, k))
}

fn f(n: usize) -> Rational {
    int(factorial(n))
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// Rows of the totals table, in display order.
pub const TABLE1_ROWS: [&str; 11] =
    ["inv", "des", "des1", "tie", "tie1", "sdes", "sdes1", "sinv", "bdes", "bdes1", "binv"];

/// Closed form of a row of the totals table over `S_n` or `PF_n`.
pub fn table1_closed_form(row: &str, parking: bool, n: usize) -> Option<Rational> {
    let nn = int(n);
    let m1 = n as i64 - 1;
    Some(if parking {
        let p = rpow(n + 1, n as i64 - 2);
        match row {
            "inv" => &nn * &p * half() * b(n, 2),
            "des" | "sinv" => b(n, 2) * p,
            "des1" => &nn * half() * p,
            "tie" | "sdes" => int(m1) * p,
            "tie1" | "sdes1" => p,
            "bdes" => b(n - 1, 2) * p,
            "bdes1" => (int(n as i64 - 2) * half()) * p,
            "binv" => &nn * int(m1) * int(n as i64 - 2) * p / int(4),
            _ => return None,
        }
    } else {
        match row {
            "inv" => f(n) * &nn * int(m1) / int(4),
            "des" | "sinv" => f(n) * int(m1) * half(),
            "des1" => f(n) * half(),
            "tie" | "tie1" => Rational::zero(),
            "sdes" => int(m1) * f(n - 1),
            "sdes1" => f(n - 1),
            "bdes" => b(n - 1, 2) * f(n - 1),
            "bdes1" => int(n as i64 - 2) * half() * f(n - 1),
            "binv" => b(n - 1, 2) * f(n) * half(),
            _ => return None,
        }
    })
}

/// Per-word values of the table rows.
fn table1_row_values(w: &Word, firsts: &[KTransitiveFn; 4]) -> [u64; 11] {
    use StatisticId::*;
    let s = |id: StatisticId| words::statistic(w, &id).expect("registered statistic");
    let c1 = |i: usize| u64::try_from(chi_1(w, &firsts[i]).expect("n >= 2").to_integer()).expect("0 or 1");
    [s(Inv), s(Des), c1(0), s(Tie), c1(1), s(Sdes), c1(2), s(Sinv), s(Bdes), c1(3), s(Binv)]
}

/// Enumerated totals of every row over `S_n` and `PF_n` against the closed
/// forms. The `1` rows restrict to the first pair of positions.
pub fn table1(n: usize) -> Result<Suite> {
    if n < 2 {
        return Err(Error::ArityTooLarge { k: 2, n });
    }
    let firsts = [KTransitiveFn::inv(), KTransitiveFn::tie(), KTransitiveFn::sdes(), KTransitiveFn::bdes()];
    let mut suite = Suite::new();
    for (fam, parking) in [(WordFamily::Sn, false), (WordFamily::Pf, true)] {
        let ws = fam.words(n);
        let sums = ws.par_iter().map(|w| table1_row_values(w, &firsts)).reduce(
            || [0u64; 11],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
        for (row, s) in TABLE1_ROWS.iter().zip(sums) {
            let closed = table1_closed_form(row, parking, n).expect("known row");
            suite.push(Report::compare(format!("table1:{}:{row}", fam.name()), Scope::N(n), &int(s), &closed));
        }
    }
    Ok(suite)
}

fn stat_sum(ws: &[Word], id: StatisticId) -> Rational {
    int(ws.par_iter().map(|w| words::statistic(w, &id).expect("registered statistic")).sum::<u64>())
}

/// Descent and inversion totals over `UPF_n` and `C_n`, and tie totals over
/// `C_n`, against their Fubini closed forms.
pub fn upf_totals(n: usize) -> Result<Suite> {
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    let diff = int(fubini(n) - fubini(n - 1));
    let des = int(n - 1) * &diff * half();
    let inv = int(n * (n - 1)) * &diff / int(4);
    let tie = int(n - 1) * int(fubini(n - 1));
    let upf = WordFamily::Upf.words(n);
    let cay = WordFamily::Cayley.words(n);
    let mut s = Suite::new();
    s.push(Report::compare("totals:upf:des", Scope::N(n), &stat_sum(&upf, StatisticId::Des), &des));
    s.push(Report::compare("totals:upf:inv", Scope::N(n), &stat_sum(&upf, StatisticId::Inv), &inv));
    s.push(Report::compare("totals:cayley:des", Scope::N(n), &stat_sum(&cay, StatisticId::Des), &des));
    s.push(Report::compare("totals:cayley:inv", Scope::N(n), &stat_sum(&cay, StatisticId::Inv), &inv));
    s.push(Report::compare("totals:cayley:tie", Scope::N(n), &stat_sum(&cay, StatisticId::Tie), &tie));
    Ok(s)
}

/// dtop, itop, pk and hz totals over `S_n`.
pub fn dtop_itop_peak_totals(n: usize) -> Result<Suite> {
    if n < 2 {
        return Err(Error::ArityTooLarge { k: 2, n });
    }
    let sn = WordFamily::Sn.words(n);
    let third = |x: Rational| x / int(3);
    let rows = [
        ("dtop", StatisticId::Dtop, third(f(n + 1) * int(n - 1))),
        ("itop", StatisticId::Itop, b(n + 1, 3) * f(n)),
        ("pk", StatisticId::Pk, third(int(n as i64 - 2) * f(n))),
        ("hz", StatisticId::Hz, third(b(n, 3) * f(n))),
    ];
    Ok(rows
        .into_iter()
        .map(|(name, id, closed)| Report::compare(format!("totals:sn:{name}"), Scope::N(n), &stat_sum(&sn, id), &closed))
        .collect())
}

/// Graphical inversion and descent totals over `S_n` for a digraph on `[n]`
/// without loops. For the complete descending digraph the totals are also
/// compared with the inversion and descent totals of `S_n`.
pub fn graphical_totals(d: &Digraph, n: usize) -> Result<Suite> {
    let id = |s: &str| format!("graphical:{s}:{d}");
    if d.has_loops() {
        return Ok(Report::precondition(id("inv"), Scope::N(n), "digraph has a loop").into());
    }
    if let Some(&(a, c)) = d.edges().find(|&&(a, c)| a.max(c) as usize > n || a.min(c) == 0) {
        return Ok(Report::precondition(id("inv"), Scope::N(n), format!("edge {a}>{c} leaves [{n}]")).into());
    }
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    let sn = WordFamily::Sn.words(n);
    let e = int(d.edge_count());
    let inv_d = stat_sum(&sn, StatisticId::GraphicalInv(d.clone()));
    let des_d = stat_sum(&sn, StatisticId::GraphicalDes(d.clone()));
    let mut s = Suite::new();
    s.push(Report::compare(id("inv"), Scope::N(n), &inv_d, &(f(n) * &e * half())));
    s.push(Report::compare(id("des"), Scope::N(n), &des_d, &(f(n - 1) * &e)));
    if *d == Digraph::descending(n as u32) {
        let inv = table1_closed_form("inv", false, n).expect("row");
        let des = table1_closed_form("des", false, n).expect("row");
        s.push(Report::compare(id("inv-is-inv"), Scope::N(n), &inv_d, &inv));
        s.push(Report::compare(id("des-is-des"), Scope::N(n), &des_d, &des));
    }
    Ok(s)
}

/// `Σ_i multinomial(c₁, …, c_i − 2, 2, …, c_ℓ)` over the parts with
/// `c_i ≥ 2`: the total of `f_{χ^tie}` over the orbit of content `c`.
pub fn orbit_pair_tie_sum(c: &[usize]) -> BigInt {
    let mut total = BigInt::zero();
    for i in (0..c.len()).filter(|&i| c[i] >= 2) {
        let mut parts = c.to_vec();
        parts[i] -= 2;
        parts.push(2);
        total += multinomial(&parts);
    }
    total
}

/// The four numerical identities:
/// `Σ_{S_n} dtop = Σ_{S_{n+1}} pk`,
/// `Σ_{PF_n} des = Σ_{PF_n} f_{χ^tie}`,
/// `(2/n) Σ_{c ⊨ n} Σ_i (…) = (n−1) Fub_{n−1}`,
/// `Σ_{c ∈ Hess(n)} Σ_i (…) = C(n,2)(n+1)^{n−2}`.
pub fn identity_checks(n: usize) -> Result<Suite> {
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    let mut s = Suite::new();
    let dtop = stat_sum(&WordFamily::Sn.words(n), StatisticId::Dtop);
    let pk = stat_sum(&WordFamily::Sn.words(n + 1), StatisticId::Pk);
    s.push(Report::compare("identity:dtop-vs-pk", Scope::N(n), &dtop, &pk));

    let pf = WordFamily::Pf.words(n);
    let des = stat_sum(&pf, StatisticId::Des);
    let pair_ties: u64 = pf
        .par_iter()
        .map(|w| (0..n).map(|i| (i + 1..n).filter(|&j| w[i] == w[j]).count() as u64).sum::<u64>())
        .sum();
    s.push(Report::compare("identity:pf-des-vs-pair-ties", Scope::N(n), &des, &int(pair_ties)));

    let comp_sum: BigInt = compositions(n).iter().map(|c| orbit_pair_tie_sum(c.parts())).sum();
    let lhs = int(2) * int(comp_sum) / int(n);
    let rhs = int(n - 1) * int(fubini(n - 1));
    s.push(Report::compare("identity:cayley-tie-multinomial", Scope::N(n), &lhs, &rhs));

    let hess_sum: BigInt = hess_sequences(n).iter().map(|c| orbit_pair_tie_sum(c.parts())).sum();
    let rhs = b(n, 2) * rpow(n + 1, n as i64 - 2);
    s.push(Report::compare("identity:hess-tie-multinomial", Scope::N(n), &int(hess_sum), &rhs));
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::rational_string;

    fn value(s: &Suite, id: &str) -> String {
        s.reports.iter().find(|r| r.identity == id).unwrap_or_else(|| panic!("{id}")).lhs.clone()
    }

    #[test]
    fn table1_small_values() {
        for n in 2..=5 {
            let s = table1(n).unwrap();
            assert!(s.ok(), "{:?}", s.failures().collect::<Vec<_>>());
            assert_eq!(s.reports.len(), 22);
        }
        let s = table1(3).unwrap();
        assert_eq!(value(&s, "table1:pf:inv"), "18");
        assert_eq!(value(&s, "table1:pf:tie1"), "4");
        assert_eq!(value(&s, "table1:sn:sdes"), "4");
        assert_eq!(value(&s, "table1:pf:binv"), "6");
        assert!(table1(1).is_err());
    }

    #[test]
    fn fubini_totals() {
        let s = upf_totals(3).unwrap();
        assert!(s.ok());
        assert_eq!(value(&s, "totals:upf:des"), "10");
        assert_eq!(value(&s, "totals:upf:inv"), "15");
        assert_eq!(value(&s, "totals:cayley:tie"), "6");
        for n in 1..=6 {
            assert!(upf_totals(n).unwrap().ok(), "n={n}");
        }
    }

    #[test]
    fn permutation_totals() {
        for n in 2..=6 {
            assert!(dtop_itop_peak_totals(n).unwrap().ok(), "n={n}");
        }
        let s = dtop_itop_peak_totals(3).unwrap();
        assert_eq!(value(&s, "totals:sn:dtop"), "16");
        assert_eq!(value(&s, "totals:sn:pk"), "2");
    }

    #[test]
    fn graphical() {
        let d = Digraph::new([(1, 2)]);
        let s = graphical_totals(&d, 3).unwrap();
        assert!(s.ok());
        assert_eq!(s.reports[0].lhs, "3");
        for n in 2..=5 {
            let s = graphical_totals(&Digraph::descending(n as u32), n).unwrap();
            assert!(s.ok() && s.reports.len() == 4);
        }
        let looped = Digraph::new([(1, 1)]);
        assert!(!graphical_totals(&looped, 3).unwrap().reports[0].passed());
    }

    #[test]
    fn identities() {
        for n in 1..=5 {
            let s = identity_checks(n).unwrap();
            assert!(s.ok(), "{:?}", s.failures().collect::<Vec<_>>());
        }
        let s = identity_checks(3).unwrap();
        assert_eq!(value(&s, "identity:hess-tie-multinomial"), "12");
        assert_eq!(value(&s, "identity:dtop-vs-pk"), "16");
        assert_eq!(value(&s, "identity:cayley-tie-multinomial"), "6");
        assert_eq!(rational_string(&table1_closed_form("bdes1", true, 3).unwrap()), "2");
    }
}
