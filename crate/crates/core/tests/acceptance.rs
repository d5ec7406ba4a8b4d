//! The ten acceptance criteria. Each prints one PASS or FAIL line. The test
//! fails if a criterion fails, unless it is listed as unattainable and fails
//! for exactly the documented reason.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use parkstat::cli::{run_suite, Params};
use parkstat::combin::fubini;
use parkstat::expectations::{evaluate_k_transitive_identities, table1, theorem_sweep_with, verify_theorem_sweep};
use parkstat::qalgebra;
use parkstat::report::{Report, Status, Suite};
use parkstat::symfunc::{self, pf_symfunc, pf_symfunc_by_forests, pf_symfunc_by_frobenius};


struct Outcome {
    ok: bool,
    detail: String,
    /// For a criterion that cannot hold as written: whether the failure is
    /// exactly the documented one.
    explained: Option<bool>,
}

impl Outcome {
    fn new(ok: bool, detail: String) -> Self {
        Outcome { ok, detail, explained: None }
    }

    fn explained(mut self, yes: bool) -> Self {
        self.explained = Some(yes);
        self
    }
}

/// Criteria that cannot pass as written. Each must fail, and fail only for
/// the documented reason.
const UNATTAINABLE: &[usize] = &[5];

fn suite_outcome(s: &Suite) -> Outcome {
    let fails: Vec<String> = s.failures().map(|r| r.to_string()).collect();
    let detail = format!(
        "{} pass, {} outside hypothesis{}",
        s.count(Status::Pass),
        s.count(Status::Precondition),
        fails.iter().map(|f| format!("\n    {f}")).collect::<String>()
    );
    Outcome::new(fails.is_empty() && s.count(Status::Pass) > 0, detail)
}

fn find<'a>(s: &'a Suite, id: &str, n: usize) -> &'a Report {
    s.reports.iter().find(|r| r.identity == id && r.n == Some(n)).unwrap_or_else(|| panic!("missing {id} n={n}"))
}

fn params(max_n: usize, order: usize) -> Params {
    Params { max_n, order, ..Params::default() }
}

/// Runs a criterion and prints its line. Checks are exact; only wall time
/// has a budget. Returns `(passed, failure is the documented one)`.
fn criterion(no: usize, title: &str, budget_secs: u64, body: impl FnOnce() -> Outcome) -> (bool, bool) {
    let start = Instant::now();
    let out = body();
    let took = start.elapsed();
    let ok = out.ok && took <= Duration::from_secs(budget_secs);
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("{tag} {no:>2} {title} [{:.2}s of {budget_secs}s]: {}", took.as_secs_f64(), out.detail);
    (ok, out.explained.unwrap_or(false))
}

fn counts() -> Outcome {
    let mut out = suite_outcome(&run_suite("counts", &params(6, 6)).unwrap().suite);
    let fub: Vec<BigInt> = (0..=6).map(fubini).collect();
    let expected: Vec<BigInt> = [1, 1, 3, 13, 75, 541, 4683].into_iter().map(BigInt::from).collect();
    out.ok &= fub == expected;
    out
}

fn bijections() -> Outcome {
    let mut s = run_suite("bijections", &params(5, 6)).unwrap().suite;
    s.extend(run_suite("forests", &params(5, 6)).unwrap().suite);
    let mut out = suite_outcome(&s);
    for id in ["forest:sample-preorder-word", "forest:sample-rho", "pollak:fibers-have-size-n+1", "eta:round-trip-and-inv"] {
        out.ok &= s.reports.iter().any(|r| r.identity == id && r.passed());
    }
    out
}

fn q_identities() -> Outcome {
    let mut s = Suite::new();
    s.push(qalgebra::verify_pf_gf(6));
    s.push(qalgebra::verify_upf_gf(6));
    s.push(qalgebra::verify_stanley_gf(4));
    for n in 0..=6 {
        s.push(qalgebra::verify_a_at_2(n));
    }
    s.extend(qalgebra::verify_q_one_shadow(6));
    suite_outcome(&s)
}

fn symmetric_functions() -> Outcome {
    let mut s = Suite::new();
    for n in 1..=5 {
        let a = pf_symfunc(n);
        s.push(Report::compare("pf-sym:recursion-vs-frobenius", parkstat::report::Scope::N(n), &a, &pf_symfunc_by_frobenius(n)));
        s.push(Report::compare("pf-sym:recursion-vs-forests", parkstat::report::Scope::N(n), &a, &pf_symfunc_by_forests(n)));
    }
    s.push(symfunc::verify_pf_sym_gf(5));
    s.push(symfunc::verify_upf_sym_gf(6));
    s.push(symfunc::verify_upf_graded_gf(5));
    s.extend(run_suite("ps-inversion", &params(5, 6)).unwrap().suite);
    suite_outcome(&s)
}

fn expectation_framework() -> Outcome {
    // Read literally, the criterion includes UPF_n with every built-in χ and
    // S_n^+ with k + 2 > n. Those families are not invariant under the group
    // the theorem needs, and the identities are false there, so the literal
    // sweep fails. What must hold is that every failure lies outside the
    // hypothesis and every case inside it verifies.
    let seed = Params::default().seed;
    let literal = theorem_sweep_with(5, 20, seed, evaluate_k_transitive_identities).unwrap();
    let gated = verify_theorem_sweep(5, 20, seed).unwrap();
    let outside = |r: &Report| {
        gated.reports.iter().any(|g| g.identity == r.identity && g.n == r.n && g.status == Status::Precondition)
    };
    let literal_fails: Vec<&Report> = literal.failures().collect();
    let explained = literal_fails.iter().all(|r| outside(r));
    let in_hypothesis_ok = gated.count(Status::Fail) == 0 && gated.count(Status::Pass) > 0;
    Outcome::new(
        literal_fails.is_empty(),
        format!(
            "{} of {} literal instances fail, {}; {} instances inside the hypothesis verified, {} fail",
            literal_fails.len(),
            literal.reports.len(),
            if explained { "all outside the hypothesis" } else { "SOME INSIDE THE HYPOTHESIS" },
            gated.count(Status::Pass),
            gated.count(Status::Fail),
        ),
    )
    .explained(explained && in_hypothesis_ok)
}

fn table1_totals() -> Outcome {
    let mut s = Suite::new();
    for n in 2..=5 {
        s.extend(table1(n).unwrap());
    }
    let up = parkstat::expectations::upf_totals(3).unwrap();
    let spots = [
        (find(&s, "table1:pf:inv", 3).lhs.as_str(), "18"),
        (find(&s, "table1:pf:tie1", 3).lhs.as_str(), "4"),
        (find(&s, "table1:sn:sdes", 3).lhs.as_str(), "4"),
        (find(&up, "totals:upf:inv", 3).lhs.as_str(), "15"),
    ];
    let mut out = suite_outcome(&s);
    out.ok &= spots.iter().all(|(got, want)| got == want);
    out
}

fn numerical_identities() -> Outcome {
    let s = run_suite("identities", &params(5, 6)).unwrap().suite;
    let mut out = suite_outcome(&s);
    let hess = find(&s, "identity:hess-tie-multinomial", 3);
    let dtop = find(&s, "identity:dtop-vs-pk", 3);
    out.ok &= (hess.lhs.as_str(), hess.rhs.as_str()) == ("12", "12");
    out.ok &= (dtop.lhs.as_str(), dtop.rhs.as_str()) == ("16", "16");
    out
}

fn egf_relations() -> Outcome {
    let s = run_suite("egf", &params(5, 6)).unwrap().suite;
    let mut out = suite_outcome(&s);
    for id in ["egf:upf:inv:closed-form", "egf:sn:pattern:132:F-from-H"] {
        out.ok &= s.reports.iter().any(|r| r.identity == id && r.passed());
    }
    out
}

fn negative_controls() -> Outcome {
    let cases = [
        ("pf-gf", "z^4"),
        ("upf-gf", "z^3"),
        ("stanley-gf", "z^3"),
        ("pf-sym-gf", "z^4"),
        ("upf-sym-gf", "z^3"),
        ("upf-graded-gf", "z^3"),
        ("ps-inversion", "q^0"),
        ("egf", "z^3"),
    ];
    let mut ok = true;
    let mut lines = Vec::new();
    for (suite, at) in cases {
        let p = Params { max_n: 4, n: Some(3), order: 5, corrupt: Some(3), ..Params::default() };
        let s = run_suite(suite, &p).unwrap().suite;
        let coords: Vec<_> = s.failures().filter_map(|r| r.first_mismatch.clone()).collect();
        let hit = !coords.is_empty() && coords.iter().all(|c| c == at);
        ok &= hit;
        lines.push(format!("{suite}@{}", coords.first().map(String::as_str).unwrap_or("none")));
    }
    let bin = env!("CARGO_BIN_EXE_parkstat");
    let status = Command::new(bin).args(["verify", "--suite", "pf-gf", "--N", "5", "--corrupt", "3"]).output().unwrap();
    ok &= status.status.code() == Some(1);
    Outcome::new(ok, format!("{}; cli exit {:?}", lines.join(" "), status.status.code()))
}

fn property_suites() -> Outcome {
    let mut s = run_suite("forests", &params(5, 6)).unwrap().suite;
    s.extend(run_suite("words", &params(5, 6)).unwrap().suite);
    let mut out = suite_outcome(&s);
    for id in [
        "forest:action-axioms-and-orbit-area",
        "forest:rho-equivariance",
        "forest:kreweras-area-vs-ancestor-inv",
        "words:inv-is-sinv-plus-binv",
    ] {
        out.ok &= find(&s, id, 5).passed();
    }
    out
}

fn main() {
    let results = [
        criterion(1, "counts", 60, counts),
        criterion(2, "bijections", 30, bijections),
        criterion(3, "q-identities", 60, q_identities),
        criterion(4, "symmetric functions", 60, symmetric_functions),
        criterion(5, "expectation framework", 60, expectation_framework),
        criterion(6, "totals table", 120, table1_totals),
        criterion(7, "numerical identities", 30, numerical_identities),
        criterion(8, "egf relations", 30, egf_relations),
        criterion(9, "negative controls", 5, negative_controls),
        criterion(10, "property suites", 60, property_suites),
    ];
    let passed = results.iter().filter(|r| r.0).count();
    println!("{passed}/{} criteria pass", results.len());
    let mut broken = Vec::new();
    for (i, (ok, explained)) in results.iter().enumerate() {
        let no = i + 1;
        if UNATTAINABLE.contains(&no) {
            if *ok || !explained {
                broken.push(format!("criterion {no} no longer fails for the documented reason"));
            }
        } else if !ok {
            broken.push(format!("criterion {no} failed"));
        }
    }
    if !broken.is_empty() {
        eprintln!("{}", broken.join("\n"));
        std::process::exit(1);
    }
}
