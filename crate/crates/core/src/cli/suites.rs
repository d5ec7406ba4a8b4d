//! Named verification suites and the operations each one exercises.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use crate::combin::{binomial, catalan, fubini, parking_count};
use crate::error::{Error, Result};
use crate::expectations::{
    self, dtop_itop_peak_totals, egf_triple, egf_verify, graphical_totals, identity_checks, table1,
    upf_totals, verify_egf_relations, verify_k_transitive_theorem, KTransitiveFn, WordFamily,
};
use crate::forests::{self, act_on_word, enumerate_forests, enumerate_increasing_forests, rho_inverse, Forest};
use crate::parking::{
    self, block_structure, enumerate_pf, enumerate_upf, eta, eta_inverse, hess_sequences, is_hess,
    is_parking_function, is_upf, park, pollak_reduce, psi, psi_inverse,
};
use crate::qalgebra::{
    self, a_inv_asc, exp_q_series, pf_q, q_binom, q_factorial, q_int, q_multinomial, q_pochhammer, upf_q, BiPoly,
    IntPoly, QRat, Rational, Ring, TruncSeries,
};
use crate::report::{Report, Scope, Suite};
use crate::symfunc::{
    self, e_in_h, frobenius_of_word_set, frobenius_upf, h, h_of, multiply, pf_symfunc, pf_symfunc_graded,
    upf_symfunc, upf_symfunc_graded, Sym, SymT,
};
use crate::words::{
    compositions, compositions_k, content, inversion_set, is_cayley, orbit, pattern_count, permutations,
    statistic, weak_compositions, words_in_box, Digraph, Permutation, StatisticId, Word, Words,
};

/// Sizes for a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    /// Exhaustive suites run for every size up to this.
    pub max_n: usize,
    /// A single size, overriding the range for suites indexed by `n`.
    pub n: Option<usize>,
    /// Truncation order of the series suites.
    pub order: usize,
    /// Perturbs the input of degree `m` by one before checking.
    pub corrupt: Option<usize>,
    /// Seed for the random orbits of the k-transitive sweep.
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params { max_n: 5, n: None, order: 6, corrupt: None, seed: 2024 }
    }
}

impl Params {
    fn sizes(&self, from: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (from..=self.max_n).collect(),
        }
    }
}

/// The reports of a run and the operations it touched.
#[derive(Debug, Default)]
pub struct Run {
    pub suite: Suite,
    pub covered: BTreeSet<&'static str>,
}

impl Run {
    fn mark(&mut self, ops: &[&'static str]) {
        self.covered.extend(ops.iter().copied());
    }

    fn push(&mut self, r: Report) {
        self.suite.push(r);
    }

    fn extend(&mut self, s: Suite) {
        self.suite.extend(s);
    }

    fn check(&mut self, id: impl Into<String>, n: usize, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        let mismatch = (!ok).then(|| detail.clone());
        self.push(Report::outcome(id, Scope::N(n), if ok { "holds" } else { "fails" }, "holds", mismatch));
    }
}

/// Every library operation `verify --suite all` has to reach.
pub const ALL_OPS: &[&str] = &[
    "words::content",
    "words::statistic",
    "words::pattern_count",
    "words::orbit",
    "words::compositions",
    "words::is_cayley",
    "parking::park",
    "parking::is_parking_function",
    "parking::enumerate_pf",
    "parking::is_upf",
    "parking::block_structure",
    "parking::psi",
    "parking::eta",
    "parking::pollak_reduce",
    "parking::hess_sequences",
    "parking::area",
    "forests::preorder_word",
    "forests::rho",
    "forests::pinv",
    "forests::area_forest",
    "forests::sn_act",
    "forests::enumerate_forests",
    "forests::parental_content",
    "qalgebra::q_numbers",
    "qalgebra::q_binom",
    "qalgebra::exp_q_series",
    "qalgebra::series_ops",
    "qalgebra::pf_q",
    "qalgebra::upf_q",
    "qalgebra::verify_pf_gf",
    "qalgebra::verify_upf_gf",
    "qalgebra::a_inv_asc",
    "symfunc::h_of",
    "symfunc::e_in_h",
    "symfunc::multiply",
    "symfunc::frobenius_of_word_set",
    "symfunc::pf_symfunc",
    "symfunc::upf_symfunc",
    "symfunc::pf_symfunc_graded",
    "symfunc::ps",
    "expectations::f_chi",
    "expectations::expectation",
    "expectations::verify_k_transitive_theorem",
    "expectations::table1",
    "expectations::upf_totals",
    "expectations::dtop_itop_peak_totals",
    "expectations::identity_checks",
    "expectations::egf_verify",
];

type SuiteFn = fn(&Params, &mut Run) -> Result<()>;

/// Registered suites in the order `all` runs them.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("counts", counts),
    ("words", words_suite),
    ("bijections", bijections),
    ("forests", forests_suite),
    ("q-numbers", q_numbers),
    ("pf-gf", pf_gf),
    ("upf-gf", upf_gf),
    ("stanley-gf", stanley_gf),
    ("a-at-2", a_at_2),
    ("q-one", q_one),
    ("pf-sym", pf_sym),
    ("pf-sym-gf", pf_sym_gf),
    ("upf-sym-gf", upf_sym_gf),
    ("upf-graded-gf", upf_graded_gf),
    ("ps-inversion", ps_inversion),
    ("k-transitive", k_transitive),
    ("table1", table1_suite),
    ("upf-totals", upf_totals_suite),
    ("peaks", peaks),
    ("graphical", graphical),
    ("identities", identities),
    ("egf", egf),
];

pub fn suite_names() -> Vec<&'static str> {
    std::iter::once("all").chain(SUITES.iter().map(|(n, _)| *n)).collect()
}

/// Runs one suite, or all of them for `"all"`.
pub fn run_suite(name: &str, p: &Params) -> Result<Run> {
    let mut run = Run::default();
    if name == "all" {
        for (_, f) in SUITES {
            f(p, &mut run)?;
        }
        return Ok(run);
    }
    let (_, f) = SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Parse(format!("unknown suite `{name}`; known: {}", suite_names().join(", "))))?;
    f(p, &mut run)?;
    Ok(run)
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

fn poly_from_counts(counts: &BTreeMap<usize, u64>) -> IntPoly {
    let top = counts.keys().next_back().copied().unwrap_or(0);
    IntPoly::from_coeffs((0..=top).map(|k| BigInt::from(counts.get(&k).copied().unwrap_or(0))).collect())
}

fn counts(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["parking::enumerate_pf", "parking::is_upf", "words::is_cayley", "forests::enumerate_forests"]);
    for n in p.sizes(0) {
        let s = Scope::N(n);
        run.push(Report::compare("count:pf", s, &big(enumerate_pf(n).count()), &parking_count(n)));
        run.push(Report::compare("count:forests", s, &big(enumerate_forests(n).count()), &parking_count(n)));
        run.push(Report::compare("count:upf", s, &big(enumerate_upf(n).count()), &fubini(n)));
        let upf_in_box = words_in_box(n, n as u32).filter(|w| is_upf(w)).count();
        run.push(Report::compare("count:upf-filter", s, &big(upf_in_box), &fubini(n)));
        run.push(Report::compare("count:cayley", s, &big(Words::cayley(n).count()), &fubini(n)));
        let cayley_in_box = words_in_box(n, n as u32).filter(|w| is_cayley(w)).count();
        run.push(Report::compare("count:cayley-filter", s, &big(cayley_in_box), &fubini(n)));
        run.push(Report::compare("count:increasing-forests", s, &big(enumerate_increasing_forests(n).count()), &catalan(n)));
    }
    Ok(())
}

fn words_suite(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["words::content", "words::statistic", "words::pattern_count", "words::orbit", "words::compositions"]);
    let w = |v: &[u32]| Word::new(v.to_vec()).expect("positive");
    run.push(Report::compare(
        "words:content-example",
        Scope::N(8),
        &content(&w(&[1, 1, 2, 2, 2, 6, 7, 7])).to_string(),
        &"(2,3,0,0,0,1,2)".to_string(),
    ));
    let ex = w(&[3, 1, 4, 1, 5, 9, 2, 6]);
    let stat = |id: StatisticId| statistic(&ex, &id).expect("total");
    run.push(Report::compare("words:inv-example", Scope::N(8), &stat(StatisticId::Inv), &8));
    run.push(Report::compare("words:des-example", Scope::N(8), &stat(StatisticId::Des), &3));
    run.push(Report::compare("words:pattern-example", Scope::N(8), &pattern_count(&ex, &[1, 3, 2], false)?, &10));
    for n in p.sizes(1) {
        let s = Scope::N(n);
        run.push(Report::compare("words:compositions", s, &big(compositions(n).len()), &(BigInt::one() << (n - 1))));
        let by_parts: usize = (1..=n).map(|k| compositions_k(n, k).len()).sum();
        run.push(Report::compare("words:compositions-by-parts", s, &big(by_parts), &(BigInt::one() << (n - 1))));
        run.push(Report::compare("words:weak-compositions", s, &big(weak_compositions(n, n).len()), &binomial(2 * n - 1, n)));
        let mut orbit_ok = true;
        let mut split_ok = true;
        for v in words_in_box(n, n as u32 + 1) {
            if v.is_weakly_increasing() && BigInt::from(orbit(&v).count()) != content(&v).multinomial() {
                orbit_ok = false;
            }
            let st = |id| statistic(&v, &id).expect("total");
            if st(StatisticId::Inv) != st(StatisticId::Sinv) + st(StatisticId::Binv)
                || st(StatisticId::Des) != st(StatisticId::Sdes) + st(StatisticId::Bdes)
            {
                split_ok = false;
            }
        }
        run.check("words:orbit-size-is-multinomial", n, orbit_ok, "orbit size");
        run.check("words:inv-is-sinv-plus-binv", n, split_ok, "inv split");
    }
    Ok(())
}

fn bijections(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&[
        "parking::park",
        "parking::is_parking_function",
        "parking::block_structure",
        "parking::psi",
        "parking::eta",
        "parking::pollak_reduce",
        "parking::hess_sequences",
        "parking::area",
    ]);
    for n in p.sizes(1) {
        let parks = words_in_box(n, n as u32).filter(|w| park(w).expect("in range").is_some()).count();
        let members = words_in_box(n, n as u32).filter(|w| is_parking_function(w)).count();
        run.push(Report::compare("park:parking-words", Scope::N(n), &big(parks), &parking_count(n)));
        run.push(Report::compare("park:membership", Scope::N(n), &big(members), &parking_count(n)));

        let cayley: BTreeSet<Word> = Words::cayley(n).collect();
        let mut images = BTreeSet::new();
        let mut ok = true;
        for a in enumerate_upf(n) {
            let bs = block_structure(&a)?;
            let w = psi(&a)?;
            ok &= bs.sizes.n() == n && psi_inverse(&w)? == a && inversion_set(&w) == inversion_set(&a);
            images.insert(w);
        }
        run.check("psi:round-trip-and-inversion-sets", n, ok && images == cayley, "psi");

        let mut images = BTreeSet::new();
        let mut ok = true;
        for sigma in permutations(n) {
            let asc = sigma.inverse().ascent_set();
            for mask in 0..(1u32 << asc.len()) {
                let s: Vec<usize> =
                    asc.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a).collect();
                let w = eta(&sigma, &s)?;
                let inv = |v: &[u32]| statistic(v, &StatisticId::Inv).expect("total");
                ok &= eta_inverse(&w)? == (sigma.clone(), s) && inv(&w) == inv(&sigma);
                images.insert(w);
            }
        }
        run.check("eta:round-trip-and-inv", n, ok && images == cayley, "eta");

        let mut fibers: BTreeMap<Word, usize> = BTreeMap::new();
        for w in words_in_box(n, n as u32 + 1) {
            *fibers.entry(pollak_reduce(&w)?).or_default() += 1;
        }
        let pf: BTreeSet<Word> = enumerate_pf(n).collect();
        let ok = fibers.values().all(|&c| c == n + 1) && fibers.keys().cloned().collect::<BTreeSet<_>>() == pf;
        run.check("pollak:fibers-have-size-n+1", n, ok, "fiber size");

        let hess: BTreeSet<_> = hess_sequences(n).into_iter().collect();
        let contents: BTreeSet<_> = pf.iter().map(|a| content(a).padded(n)).collect();
        run.check("hess:pf-contents", n, hess == contents && hess.iter().all(|c| is_hess(c.parts())), "contents");

        let mut by_area = BTreeMap::new();
        for a in &pf {
            *by_area.entry(parking::area(a)? as usize).or_insert(0u64) += 1;
        }
        let total: u64 = by_area.values().sum();
        run.push(Report::compare("area:distribution-size", Scope::N(n), &BigInt::from(total), &parking_count(n)));
    }
    Ok(())
}

/// The forest on 14 vertices used as the worked example.
pub fn sample_forest() -> Forest {
    let mut p = vec![0u32; 14];
    for (v, q) in [(1, 13), (2, 3), (3, 5), (4, 14), (6, 14), (9, 3), (10, 5), (14, 5), (11, 7), (12, 8), (13, 8)] {
        p[v - 1] = q;
    }
    Forest::new(p).expect("valid forest")
}

fn forests_suite(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&[
        "forests::preorder_word",
        "forests::rho",
        "forests::pinv",
        "forests::area_forest",
        "forests::sn_act",
        "forests::parental_content",
    ]);
    let f = sample_forest();
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    run.push(Report::compare(
        "forest:sample-preorder-word",
        Scope::N(14),
        &join(&f.preorder_word()),
        &"0 5 3 2 9 10 14 4 6 7 11 8 12 13 1".to_string(),
    ));
    run.push(Report::compare(
        "forest:sample-rho",
        Scope::N(14),
        &join(&f.rho()),
        &"14 3 2 7 1 7 1 1 3 2 10 12 12 2".to_string(),
    ));
    for n in p.sizes(1) {
        let mut ok = true;
        let (mut by_area, mut by_anc, mut by_pinv) = (BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
        for g in enumerate_forests(n) {
            let a = g.rho();
            ok &= rho_inverse(&a)? == g
                && g.pinv() == statistic(&a, &StatisticId::Inv)?
                && g.area_forest() == parking::area(&a)?
                && g.parental_content() == content(&a).padded(n);
            *by_area.entry(g.area_forest() as usize).or_insert(0u64) += 1;
            *by_anc.entry(g.ancestor_inv() as usize).or_insert(0u64) += 1;
            *by_pinv.entry(g.pinv() as usize).or_insert(0u64) += 1;
        }
        run.check("forest:rho-round-trip-and-transport", n, ok, "rho");
        let area = poly_from_counts(&by_area);
        run.push(Report::compare("forest:kreweras-area-vs-ancestor-inv", Scope::N(n), &area, &poly_from_counts(&by_anc)));
        run.push(Report::compare("forest:pinv-is-pf-q", Scope::N(n), &poly_from_counts(&by_pinv), &pf_q(n)));
    }
    // action axioms are quadratic in |S_n|; cap them at n = 5
    for n in p.sizes(2).into_iter().filter(|&n| n <= 5) {
        let mut axioms = true;
        let mut equivariant = true;
        let perms: Vec<Permutation> = if n <= 4 { permutations(n).collect() } else { Vec::new() };
        for g in enumerate_forests(n) {
            let s = |x: &Forest, i: usize| x.sn_act(i).expect("index in range");
            for i in 1..n {
                let gi = s(&g, i);
                axioms &= s(&gi, i) == g && gi.area_forest() == g.area_forest();
                if i + 1 < n {
                    axioms &= s(&s(&gi, i + 1), i) == s(&s(&s(&g, i + 1), i), i + 1);
                }
                for j in i + 2..n {
                    axioms &= s(&gi, j) == s(&s(&g, j), i);
                }
                let mut w = g.rho().into_vec();
                w.swap(i - 1, i);
                equivariant &= gi.rho().entries() == &w[..];
            }
            for sigma in &perms {
                let first = forests::reduced_word(sigma, false).iter().rev().fold(g.clone(), |x, &i| s(&x, i));
                let last = forests::reduced_word(sigma, true).iter().rev().fold(g.clone(), |x, &i| s(&x, i));
                equivariant &= first == last && g.act(sigma).rho() == act_on_word(sigma, &g.rho());
            }
        }
        run.check("forest:action-axioms-and-orbit-area", n, axioms, "Coxeter relation or area");
        run.check("forest:rho-equivariance", n, equivariant, "equivariance");
    }
    Ok(())
}

fn q_numbers(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["qalgebra::q_numbers", "qalgebra::q_binom", "qalgebra::exp_q_series", "qalgebra::series_ops"]);
    for n in p.sizes(0) {
        let s = Scope::N(n);
        let fact = (1..=n).fold(IntPoly::constant(1), |acc, k| &acc * &q_int(k));
        run.push(Report::compare("q:factorial-is-product", s, &q_factorial(n), &fact));
        let one_minus_q = IntPoly::from_i64s(&[1, -1]);
        run.push(Report::compare("q:pochhammer", s, &q_pochhammer(n), &(&q_factorial(n) * &one_minus_q.pow(n))));
        let row: IntPoly = (0..=n).map(|k| q_binom(n, k).expect("k <= n")).sum();
        let at_one = row.at_one();
        run.push(Report::compare("q:binomial-row-at-1", s, &at_one, &(BigInt::one() << n)));
        let parts = [n / 2, n - n / 2];
        run.push(Report::compare("q:multinomial-two-parts", s, &q_multinomial(n, &parts)?, &q_binom(n, n / 2)?));
    }
    let order = p.order;
    let e = exp_q_series(order);
    let big_e = qalgebra::big_exp_q_series(order);
    let prod = e.mul(&big_e.dilate(&QRat::from_i64(-1)));
    let m = prod.first_mismatch(&TruncSeries::one(order)).map(|k| format!("z^{k}"));
    run.push(Report::outcome("q:exp-times-Exp-minus", Scope::Order(order), "exp_q(z)Exp_q(-z)", "1", m));
    let ez = TruncSeries::from_fn(order, |k| Rational::from_integer(crate::combin::factorial(k)).recip());
    let log1p = TruncSeries::from_fn(order, |k| match k {
        0 => Rational::from_i64(0),
        k => Rational::new(BigInt::from(if k % 2 == 1 { 1 } else { -1 }), BigInt::from(k)),
    });
    let composed = ez.compose(&log1p)?;
    let target = TruncSeries::new(vec![Rational::from_i64(1), Rational::from_i64(1)], order);
    let inv = ez.sub(&TruncSeries::one(order)).invert_composition()?;
    let m = composed
        .first_mismatch(&target)
        .or_else(|| inv.first_mismatch(&log1p))
        .or_else(|| ez.derive().first_mismatch(&ez.truncate(order - 1)))
        .map(|k| format!("z^{k}"));
    run.push(Report::outcome("series:compose-derive-invert", Scope::Order(order), "exp(log(1+z))", "1+z", m));
    Ok(())
}

fn corrupt_int(polys: &mut [IntPoly], m: Option<usize>) {
    if let Some(p) = m.and_then(|m| polys.get_mut(m)) {
        *p = &*p + &IntPoly::constant(1);
    }
}

fn pf_gf(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["qalgebra::pf_q", "qalgebra::verify_pf_gf"]);
    let mut polys: Vec<IntPoly> = (0..p.order).map(pf_q).collect();
    corrupt_int(&mut polys, p.corrupt);
    run.push(qalgebra::verify_pf_gf_with(p.order, &polys));
    Ok(())
}

fn upf_gf(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["qalgebra::upf_q", "qalgebra::verify_upf_gf"]);
    let mut polys: Vec<IntPoly> = (0..=p.order).map(upf_q).collect();
    corrupt_int(&mut polys, p.corrupt);
    run.push(qalgebra::verify_upf_gf_with(p.order, &polys));
    Ok(())
}

fn stanley_gf(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["qalgebra::a_inv_asc"]);
    let order = p.order.min(4);
    let mut polys: Vec<BiPoly> = (0..=order).map(a_inv_asc).collect();
    if let Some(a) = p.corrupt.and_then(|m| polys.get_mut(m)) {
        a.add_term(0, 0, 1);
    }
    run.push(qalgebra::verify_stanley_gf_with(order, &polys));
    Ok(())
}

fn a_at_2(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["qalgebra::a_inv_asc", "qalgebra::upf_q"]);
    for n in p.sizes(0).into_iter().chain(std::iter::once(p.max_n + 1)) {
        run.push(qalgebra::verify_a_at_2(n));
    }
    Ok(())
}

fn q_one(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["qalgebra::series_ops"]);
    run.extend(qalgebra::verify_q_one_shadow(p.order));
    Ok(())
}

fn pf_sym(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["symfunc::h_of", "symfunc::e_in_h", "symfunc::multiply", "symfunc::pf_symfunc", "symfunc::pf_symfunc_graded"]);
    run.push(Report::compare("sym:h-product", Scope::N(3), &multiply(&h(2), &h(1)), &h_of(&[1, 2])));
    run.push(Report::compare("sym:e2", Scope::N(2), &e_in_h(2), &h_of(&[1, 1]).minus(&h(2))));
    run.push(symfunc::verify_h_e_inverse(p.order));
    for n in p.sizes(1) {
        run.extend(symfunc::verify_pf_sym_recursion(n));
        let at_one = symfunc::at_t_one(&pf_symfunc_graded(n));
        run.push(Report::compare("pf-sym-graded-at-t1", Scope::N(n), &at_one, &pf_symfunc(n)));
    }
    Ok(())
}

fn pf_sym_gf(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["symfunc::pf_symfunc", "symfunc::h_of"]);
    let order = p.order.min(6);
    let mut pf: Vec<Sym> = symfunc::pf_symfunc_table(order.saturating_sub(1));
    if let Some(f) = p.corrupt.and_then(|m| pf.get_mut(m)) {
        *f = f.plus(&h(f.degree().unwrap_or(0)));
    }
    run.push(symfunc::verify_pf_sym_gf_with(order, &pf));
    Ok(())
}

fn upf_sym_gf(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["symfunc::upf_symfunc"]);
    let mut u: Vec<Sym> = (0..=p.order).map(upf_symfunc).collect();
    if let Some(f) = p.corrupt.and_then(|m| u.get_mut(m)) {
        *f = f.plus(&h(f.degree().unwrap_or(0)));
    }
    run.push(symfunc::verify_upf_sym_gf_with(p.order, &u));
    Ok(())
}

fn upf_graded_gf(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["symfunc::upf_symfunc"]);
    let mut u: Vec<SymT> = (0..=p.order).map(upf_symfunc_graded).collect();
    if let Some(f) = p.corrupt.and_then(|m| u.get_mut(m)) {
        let bump = symfunc::SymF::term(symfunc::Partition::from_parts(&[f.degree().unwrap_or(0)]), Ring::one());
        *f = f.plus(&bump);
    }
    run.push(symfunc::verify_upf_graded_gf_with(p.order, &u));
    Ok(())
}

fn ps_inversion(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["symfunc::frobenius_of_word_set", "symfunc::ps"]);
    for n in p.sizes(1) {
        let pf: Vec<Word> = enumerate_pf(n).collect();
        let cay: Vec<Word> = Words::cayley(n).collect();
        let upf: Vec<Word> = enumerate_upf(n).collect();
        let mut frob = frobenius_of_word_set(&pf, n)?;
        if p.corrupt == Some(n) {
            frob = frob.plus(&h(n));
        }
        run.push(symfunc::verify_ps_inversion_with("pf", &pf, &frob, n));
        run.push(symfunc::verify_ps_inversion("cayley", &cay, n)?);
        run.push(symfunc::verify_ps_inversion_with("upf", &upf, &frobenius_upf(n), n));
        run.push(symfunc::verify_pf_specialization(n, &pf_q(n)));
    }
    Ok(())
}

fn k_transitive(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["expectations::f_chi", "expectations::expectation", "expectations::verify_k_transitive_theorem"]);
    let max_n = p.n.unwrap_or(p.max_n);
    run.extend(expectations::verify_theorem_sweep(max_n, 20, p.seed)?);
    let bad = WordFamily::Custom { name: "non-invariant{(1,2)}".into(), words: vec![Word::new(vec![1, 2])?] };
    let r = verify_k_transitive_theorem(&bad, 2, &KTransitiveFn::inv())?;
    let refused = r.status == crate::report::Status::Precondition;
    run.check("k-transitive:non-invariant-control-refused", 2, refused, "precondition not raised");
    let des = |v: &[u32]| Rational::from_integer(BigInt::from(statistic(v, &StatisticId::Des).expect("total")));
    run.push(Report::compare(
        "expectation:sn-des",
        Scope::N(3),
        &expectations::expectation(&WordFamily::Sn, 3, des)?,
        &Rational::from_i64(1),
    ));
    for n in p.sizes(3) {
        let r3 = [vec![1, 3, 2], vec![2, 3, 1]];
        let set = KTransitiveFn::pattern_set(&r3)?;
        let id = KTransitiveFn::pattern(&[1, 2, 3])?;
        let e = |c: &KTransitiveFn| expectations::expectation(&WordFamily::Sn, n, |v| expectations::f_chi(v, c).expect("k <= n"));
        run.push(Report::compare("expectation:pattern-set-is-|R|-times-identity", Scope::N(n), &e(&set)?, &(e(&id)? * Rational::from_i64(2))));
    }
    Ok(())
}

fn table1_suite(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["expectations::table1"]);
    for n in p.sizes(2) {
        run.extend(table1(n)?);
    }
    Ok(())
}

fn upf_totals_suite(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["expectations::upf_totals"]);
    for n in p.sizes(1) {
        run.extend(upf_totals(n)?);
    }
    Ok(())
}

fn peaks(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["expectations::dtop_itop_peak_totals"]);
    for n in p.sizes(2) {
        run.extend(dtop_itop_peak_totals(n)?);
    }
    Ok(())
}

fn graphical(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["expectations::dtop_itop_peak_totals"]);
    for n in p.sizes(2) {
        run.extend(graphical_totals(&Digraph::new([(1, 2)]), n)?);
        run.extend(graphical_totals(&Digraph::descending(n as u32), n)?);
    }
    Ok(())
}

fn identities(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["expectations::identity_checks"]);
    for n in p.sizes(1) {
        run.extend(identity_checks(n)?);
    }
    Ok(())
}

fn egf(p: &Params, run: &mut Run) -> Result<()> {
    run.mark(&["expectations::egf_verify"]);
    let order = p.order;
    let cases = [
        (WordFamily::Sn, KTransitiveFn::inv()),
        (WordFamily::Upf, KTransitiveFn::inv()),
        (WordFamily::Cayley, KTransitiveFn::tie()),
        (WordFamily::Sn, KTransitiveFn::peak()),
        (WordFamily::Sn, KTransitiveFn::pattern(&[1, 3, 2])?),
    ];
    for (fam, chi) in &cases {
        if let Some(m) = p.corrupt {
            let mut t = egf_triple(fam, chi, order)?;
            if m <= order {
                let mut f = t.f.coeffs().to_vec();
                f[m] += Rational::from_i64(1);
                t.f = TruncSeries::new(f, order);
            }
            run.extend(verify_egf_relations(&format!("{fam}:{}", chi.name()), chi.k(), &t));
        } else {
            run.extend(egf_verify(fam, chi, order)?);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_sizes() {
        let p = Params { max_n: 4, order: 5, ..Params::default() };
        let run = run_suite("all", &p).unwrap();
        let bad: Vec<String> = run.suite.failures().map(|r| r.to_string()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        let missing: Vec<_> = ALL_OPS.iter().filter(|op| !run.covered.contains(*op)).collect();
        assert!(missing.is_empty(), "not exercised: {missing:?}");
        assert!(run_suite("nope", &p).is_err());
    }

    #[test]
    fn corrupted_inputs_fail_where_expected() {
        for (suite, at) in [("pf-gf", "z^3"), ("upf-gf", "z^2"), ("stanley-gf", "z^2"), ("pf-sym-gf", "z^3"), ("upf-sym-gf", "z^2")] {
            let p = Params { max_n: 3, order: 4, corrupt: Some(2), ..Params::default() };
            let run = run_suite(suite, &p).unwrap();
            let f: Vec<_> = run.suite.failures().collect();
            assert_eq!(f.len(), 1, "{suite}");
            assert_eq!(f[0].first_mismatch.as_deref(), Some(at), "{suite}");
        }
    }
}
