//! k-transitive functions on words and the expectation identities they obey.
//!
//! A k-transitive function is given by a callback `θ` on k-tuples of values.
//! For a word `w` of length `n`, `f_χ(w)` sums `θ` over every increasing
//! position tuple, `g_χ(w)` over the contiguous windows, and `χ₁(w)` is the
//! value on the first window. On a family closed under a k-transitive group
//! of place permutations the three expectations are proportional.

mod applications;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combin;
use crate::error::{Error, Result};
use crate::parking::{enumerate_pf, enumerate_upf};
use crate::qalgebra::{rational_string, Rational, TruncSeries};
use crate::report::{Report, Scope, Suite};
use crate::words::{self, for_each_subset, matches_pattern, Digraph, Word, Words};

pub use applications::*;

type Theta = Arc<dyn Fn(&[u32]) -> Rational + Send + Sync>;

/// `χ(w, (i₁,…,i_k)) = θ(w_{i₁},…,w_{i_k})`.
#[derive(Clone)]
pub struct KTransitiveFn {
    name: String,
    k: usize,
    theta: Theta,
    inversion_determined: bool,
}

pub(crate) fn int(x: impl Into<BigInt>) -> Rational {
    Rational::from_integer(x.into())
}

impl KTransitiveFn {
    pub fn new(name: impl Into<String>, k: usize, theta: impl Fn(&[u32]) -> Rational + Send + Sync + 'static) -> Self {
        assert!(k >= 1, "arity must be positive");
        KTransitiveFn { name: name.into(), k, theta: Arc::new(theta), inversion_determined: false }
    }

    fn indicator(name: &str, k: usize, pred: impl Fn(&[u32]) -> bool + Send + Sync + 'static) -> Self {
        Self::new(name, k, move |v| int(pred(v) as u32))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn theta(&self, values: &[u32]) -> Rational {
        debug_assert_eq!(values.len(), self.k);
        (self.theta)(values)
    }

    /// The value on a tuple is a function of whether the tuple is an
    /// inversion, so totals only depend on inversion sets.
    pub fn is_inversion_determined(&self) -> bool {
        self.inversion_determined
    }

    /// `θ(a,b) = [a > b]`: `f` is inv, `g` is des.
    pub fn inv() -> Self {
        let mut c = Self::indicator("inv", 2, |v| v[0] > v[1]);
        c.inversion_determined = true;
        c
    }

    /// `θ(a,b) = [a < b]`.
    pub fn asc() -> Self {
        Self::indicator("asc", 2, |v| v[0] < v[1])
    }

    /// `θ(a,b) = [a = b]`.
    pub fn tie() -> Self {
        Self::indicator("tie", 2, |v| v[0] == v[1])
    }

    /// `θ(a,b) = [a = b+1]`: `f` is sinv, `g` is sdes.
    pub fn sdes() -> Self {
        Self::indicator("sdes", 2, |v| v[0] == v[1] + 1)
    }

    /// `θ(a,b) = [a > b+1]`: `f` is binv, `g` is bdes.
    pub fn bdes() -> Self {
        Self::indicator("bdes", 2, |v| v[0] > v[1] + 1)
    }

    /// `θ(a,b) = a` if `a > b`, else 0: `f` is itop, `g` is dtop.
    pub fn dtop() -> Self {
        Self::new("dtop", 2, |v| if v[0] > v[1] { int(v[0]) } else { Rational::zero() })
    }

    /// `θ(a,b) = [a → b in D]`.
    pub fn graphical(d: &Digraph) -> Self {
        let d2 = d.clone();
        Self::indicator(&format!("graphical:{d}"), 2, move |v| d2.has_edge(v[0], v[1]))
    }

    /// Indicator of being order-isomorphic to the permutation `rho`.
    pub fn pattern(rho: &[u32]) -> Result<Self> {
        Self::pattern_set(&[rho.to_vec()])
    }

    /// `Σ_{ρ ∈ R}` of the pattern indicators; all patterns share one length.
    pub fn pattern_set(patterns: &[Vec<u32>]) -> Result<Self> {
        let k = patterns.first().map_or(0, Vec::len);
        if k == 0 {
            return Err(Error::Parse("empty pattern set".into()));
        }
        for r in patterns {
            if !words::is_permutation(r) {
                return Err(Error::NotAPermutation { n: r.len(), word: format!("{r:?}") });
            }
            if r.len() != k {
                return Err(Error::ArityMismatch { a: k, b: r.len() });
            }
        }
        let label: Vec<String> = patterns.iter().map(|r| r.iter().map(u32::to_string).collect()).collect();
        let ps = patterns.to_vec();
        Ok(Self::new(format!("pattern:{}", label.join("+")), k, move |v| {
            int(ps.iter().filter(|r| matches_pattern(v, r)).count() as u32)
        }))
    }

    /// `θ(a,b,c) = [a < b > c]`: `f` is hz, `g` is pk. On permutations this
    /// is the pattern set `{132, 231}`.
    pub fn peak() -> Self {
        Self::indicator("peak", 3, |v| v[0] < v[1] && v[1] > v[2])
    }

    /// Pointwise sum of two functions of the same arity.
    pub fn plus(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::ArityMismatch { a: self.k, b: other.k });
        }
        let (a, b) = (self.theta.clone(), other.theta.clone());
        Ok(Self::new(format!("{}+{}", self.name, other.name), self.k, move |v| a(v) + b(v)))
    }

    /// The registered functions, all of arity at most 3.
    pub fn builtins() -> Vec<Self> {
        vec![
            Self::inv(),
            Self::asc(),
            Self::tie(),
            Self::sdes(),
            Self::bdes(),
            Self::dtop(),
            Self::graphical(&Digraph::new([(1, 2)])),
            Self::pattern(&[1, 3, 2]).expect("valid pattern"),
            Self::peak(),
        ]
    }

    /// Looks up a built-in by name; `pattern:` and `graphical:` take arguments.
    pub fn by_name(name: &str) -> Result<Self> {
        if let Some(arg) = name.strip_prefix("pattern:") {
            let rhos: Vec<Vec<u32>> =
                arg.split('+').map(|p| p.parse::<Word>().map(Word::into_vec)).collect::<Result<_>>()?;
            return Self::pattern_set(&rhos);
        }
        if let Some(arg) = name.strip_prefix("graphical:") {
            return Ok(Self::graphical(&arg.parse()?));
        }
        Self::builtins()
            .into_iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))
    }
}

impl fmt::Debug for KTransitiveFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ[{}; k={}]", self.name, self.k)
    }
}

fn check_arity(w: &[u32], chi: &KTransitiveFn) -> Result<()> {
    if chi.k > w.len() {
        return Err(Error::ArityTooLarge { k: chi.k, n: w.len() });
    }
    Ok(())
}

/// `Σ_{p ∈ I_{n,k}} χ(w, p)`.
pub fn f_chi(w: &[u32], chi: &KTransitiveFn) -> Result<Rational> {
    check_arity(w, chi)?;
    let mut s = Rational::zero();
    let mut buf = Vec::with_capacity(chi.k);
    for_each_subset(w.len(), chi.k, |idx| {
        buf.clear();
        buf.extend(idx.iter().map(|&i| w[i]));
        s += chi.theta(&buf);
    });
    Ok(s)
}

/// `Σ_i χ(w, (i, i+1, …, i+k−1))`.
pub fn g_chi(w: &[u32], chi: &KTransitiveFn) -> Result<Rational> {
    check_arity(w, chi)?;
    Ok(w.windows(chi.k).map(|v| chi.theta(v)).sum())
}

/// `χ(w, (1, 2, …, k))`.
pub fn chi_1(w: &[u32], chi: &KTransitiveFn) -> Result<Rational> {
    check_arity(w, chi)?;
    Ok(chi.theta(&w[..chi.k]))
}

/// Sums of `f_χ`, `g_χ`, `χ₁` over a word set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTotals {
    pub size: usize,
    pub f: Rational,
    pub g: Rational,
    pub chi1: Rational,
}

pub fn chi_totals(words: &[Word], chi: &KTransitiveFn) -> Result<ChiTotals> {
    let zero = || (Rational::zero(), Rational::zero(), Rational::zero());
    let (f, g, chi1) = words
        .par_iter()
        .map(|w| Ok((f_chi(w, chi)?, g_chi(w, chi)?, chi_1(w, chi)?)))
        .try_reduce(zero, |a, b| Ok((a.0 + b.0, a.1 + b.1, a.2 + b.2)))?;
    Ok(ChiTotals { size: words.len(), f, g, chi1 })
}

/// A set of words of each length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordFamily {
    /// Permutations of `[n]`.
    Sn,
    /// Even permutations of `[n]`.
    SnPlus,
    Pf,
    Upf,
    Cayley,
    /// All of `[n+1]^n`.
    Box,
    /// The rearrangements of one word; its length is fixed.
    Orbit(Word),
    /// An explicit word set of one length.
    Custom { name: String, words: Vec<Word> },
}

/// Which place-permutation group a word set is closed under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Full,
    Alternating,
    /// Not closed under the alternating group; carries a witness.
    Broken(String),
}

impl WordFamily {
    pub fn name(&self) -> String {
        match self {
            WordFamily::Sn => "sn".into(),
            WordFamily::SnPlus => "sn_plus".into(),
            WordFamily::Pf => "pf".into(),
            WordFamily::Upf => "upf".into(),
            WordFamily::Cayley => "cayley".into(),
            WordFamily::Box => "box".into(),
            WordFamily::Orbit(w) => format!("orbit{w}"),
            WordFamily::Custom { name, .. } => name.clone(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "sn" => WordFamily::Sn,
            "sn_plus" => WordFamily::SnPlus,
            "pf" => WordFamily::Pf,
            "upf" => WordFamily::Upf,
            "cayley" => WordFamily::Cayley,
            "box" => WordFamily::Box,
            _ => match s.strip_prefix("orbit") {
                Some(w) => WordFamily::Orbit(w.parse()?),
                None => return Err(Error::Parse(format!("unknown family `{s}`"))),
            },
        })
    }

    /// Orbits and custom sets carry their own length.
    pub fn fixed_length(&self) -> Option<usize> {
        match self {
            WordFamily::Orbit(w) => Some(w.len()),
            WordFamily::Custom { words, .. } => Some(words.first().map_or(0, |w| w.len())),
            _ => None,
        }
    }

    pub fn word_length(&self, n: usize) -> usize {
        self.fixed_length().unwrap_or(n)
    }

    /// The words of length `n`, in lexicographic order for the named families.
    pub fn words(&self, n: usize) -> Vec<Word> {
        match self {
            WordFamily::Sn => words::permutations(n).map(Word::from).collect(),
            WordFamily::SnPlus => words::permutations(n).filter(|p| p.is_even()).map(Word::from).collect(),
            WordFamily::Pf => enumerate_pf(n).collect(),
            WordFamily::Upf => enumerate_upf(n).collect(),
            WordFamily::Cayley => Words::cayley(n).collect(),
            WordFamily::Box => words::words_in_box(n, n as u32 + 1).collect(),
            WordFamily::Orbit(w) => words::orbit(w).collect(),
            WordFamily::Custom { words, .. } => words.clone(),
        }
    }

    /// The closed-form size, where one is registered.
    pub fn size_formula(&self, n: usize) -> Option<BigInt> {
        Some(match self {
            WordFamily::Sn => combin::factorial(n),
            WordFamily::SnPlus if n >= 2 => combin::factorial(n) / 2,
            WordFamily::SnPlus => BigInt::from(1),
            WordFamily::Pf => combin::parking_count(n),
            WordFamily::Upf | WordFamily::Cayley => combin::fubini(n),
            WordFamily::Box => BigInt::from(n + 1).pow(n as u32),
            WordFamily::Orbit(w) => words::content(w).multinomial(),
            WordFamily::Custom { .. } => return None,
        })
    }

    /// Closure of the length-`n` words under place permutations, checked
    /// exhaustively on adjacent transpositions and adjacent 3-cycles.
    pub fn symmetry(&self, n: usize) -> Symmetry {
        symmetry_of(&self.words(n))
    }
}

impl fmt::Display for WordFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// See [`WordFamily::symmetry`].
pub fn symmetry_of(ws: &[Word]) -> Symmetry {
    let set: HashSet<&[u32]> = ws.iter().map(|w| w.entries()).collect();
    let n = ws.first().map_or(0, |w| w.len());
    let swap_witness = ws.iter().find_map(|w| {
        (1..n).map(|i| w.swap_adjacent(i)).find(|u| !set.contains(u.entries())).map(|u| (w.clone(), u))
    });
    let Some((w, u)) = swap_witness else {
        return Symmetry::Full;
    };
    // (i i+1 i+2) generate the alternating group
    let cycle_witness = ws.iter().find_map(|w| {
        (0..n.saturating_sub(2))
            .map(|i| {
                let mut v = w.entries().to_vec();
                v[i..i + 3].rotate_right(1);
                v
            })
            .find(|v| !set.contains(v.as_slice()))
            .map(|v| (w.clone(), v))
    });
    match cycle_witness {
        None => Symmetry::Alternating,
        Some((w3, v)) => Symmetry::Broken(format!("{w} -> {u}; {w3} -> {}", Word::from_vec_unchecked(v))),
    }
}

/// Whether the group sends every increasing `k`-tuple of positions to
/// `(1, …, k)`. For `A_n` only `k ≤ n−2` is accepted; `k = n` holds too
/// but would certify every singleton word set of length `k`.
pub fn is_k_transitive(sym: &Symmetry, n: usize, k: usize) -> bool {
    match sym {
        Symmetry::Full => k <= n,
        Symmetry::Alternating => k + 2 <= n,
        Symmetry::Broken(_) => false,
    }
}

/// `Σ_{w ∈ W_n} stat(w)` as an exact rational.
pub fn total(family: &WordFamily, n: usize, stat: impl Fn(&[u32]) -> Rational + Sync) -> Result<Rational> {
    let ws = family.words(n);
    if ws.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(ws.par_iter().map(|w| stat(w)).reduce(Rational::zero, |a, b| a + b))
}

/// `(1/|W_n|) Σ_{w ∈ W_n} stat(w)`.
pub fn expectation(family: &WordFamily, n: usize, stat: impl Fn(&[u32]) -> Rational + Sync) -> Result<Rational> {
    let ws = family.words(n);
    if ws.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let t: Rational = ws.par_iter().map(|w| stat(w)).reduce(Rational::zero, |a, b| a + b);
    Ok(t / int(ws.len()))
}

/// Total of a registered statistic, as a rational.
pub fn stat_total(family: &WordFamily, n: usize, id: &words::StatisticId) -> Result<Rational> {
    let ws = family.words(n);
    if ws.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let s: u64 = ws.par_iter().map(|w| words::statistic(w, id)).try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(int(s))
}

/// The reason the theorem does not apply to `(family, chi)` at length `n`,
/// if any.
fn precondition_failure(family: &WordFamily, n: usize, chi: &KTransitiveFn) -> Option<String> {
    match family.symmetry(n) {
        Symmetry::Full => None,
        sym @ Symmetry::Alternating => (!is_k_transitive(&sym, n, chi.k))
            .then(|| format!("closed only under A_{n}, which is not {}-transitive on positions", chi.k)),
        // UPF_n has the inversion sets of C_n, word for word
        Symmetry::Broken(_) if *family == WordFamily::Upf && chi.inversion_determined => None,
        Symmetry::Broken(witness) => Some(format!("not closed under place permutations: {witness}")),
    }
}

/// Checks, for an invariant family,
/// (a) `E[f_χ] = C(n,k) E[χ₁]`,
/// (b) `E[g_χ] = (n−k+1) E[χ₁]`,
/// (c) `E[f_χ] = (1/k) C(n,k−1) E[g_χ]`.
///
/// A family that fails the invariance check yields a precondition report
/// and the identities are not evaluated.
pub fn verify_k_transitive_theorem(family: &WordFamily, n: usize, chi: &KTransitiveFn) -> Result<Report> {
    let ws = family.words(n);
    if ws.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = ws[0].len();
    let k = chi.k;
    if k > n {
        return Err(Error::ArityTooLarge { k, n });
    }
    if let Some(reason) = precondition_failure(family, n, chi) {
        let id = format!("k-transitive:{}:{}", family.name(), chi.name);
        return Ok(Report::precondition(id, Scope::N(n), reason));
    }
    evaluate_identities(family, &ws, chi)
}

/// Evaluates (a), (b) and (c) whether or not the family satisfies the
/// hypothesis. Outside it a failure is expected rather than a defect.
pub fn evaluate_k_transitive_identities(family: &WordFamily, n: usize, chi: &KTransitiveFn) -> Result<Report> {
    let ws = family.words(n);
    match ws.first() {
        None => Err(Error::EmptyFamily),
        Some(w) if chi.k > w.len() => Err(Error::ArityTooLarge { k: chi.k, n: w.len() }),
        Some(_) => evaluate_identities(family, &ws, chi),
    }
}

fn evaluate_identities(family: &WordFamily, ws: &[Word], chi: &KTransitiveFn) -> Result<Report> {
    let (n, k) = (ws[0].len(), chi.k);
    let id = format!("k-transitive:{}:{}", family.name(), chi.name);
    let t = chi_totals(ws, chi)?;
    let size = int(t.size);
    let (ef, eg, e1) = (&t.f / &size, &t.g / &size, &t.chi1 / &size);
    let a = int(combin::binomial(n, k)) * &e1;
    let b = int(n - k + 1) * &e1;
    let c = int(combin::binomial(n, k - 1)) * &eg / int(k);
    let mismatch = if ef != a {
        Some("(a)")
    } else if eg != b {
        Some("(b)")
    } else if ef != c {
        Some("(c)")
    } else {
        None
    };
    let s = rational_string;
    Ok(Report::outcome(
        id,
        Scope::N(n),
        format!("E[f]={} E[g]={} E[chi1]={}", s(&ef), s(&eg), s(&e1)),
        format!("(a) {} (b) {} (c) {}", s(&a), s(&b), s(&c)),
        mismatch.map(String::from),
    ))
}

/// `count` random words with lengths in `2..=max_n` and entries in `[n]`.
pub fn random_orbit_seeds(count: usize, max_n: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n.max(2));
            let v: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=n as u32)).collect();
            Word::from_vec_unchecked(v)
        })
        .collect()
}

/// The named families of this module.
pub fn standard_families() -> Vec<WordFamily> {
    use WordFamily::*;
    vec![Sn, SnPlus, Pf, Upf, Cayley, Box]
}

/// The theorem for every built-in χ on the standard families at
/// `1 ≤ n ≤ max_n`, and on `orbits` random single orbits.
pub fn verify_theorem_sweep(max_n: usize, orbits: usize, seed: u64) -> Result<Suite> {
    theorem_sweep_with(max_n, orbits, seed, verify_k_transitive_theorem)
}

/// As [`verify_theorem_sweep`], evaluating every case with `check`.
pub fn theorem_sweep_with(
    max_n: usize,
    orbits: usize,
    seed: u64,
    check: fn(&WordFamily, usize, &KTransitiveFn) -> Result<Report>,
) -> Result<Suite> {
    let chis = KTransitiveFn::builtins();
    let mut suite = Suite::new();
    for fam in standard_families() {
        for n in 1..=max_n {
            for chi in chis.iter().filter(|c| c.k <= n) {
                suite.push(check(&fam, n, chi)?);
            }
        }
    }
    for w in random_orbit_seeds(orbits, max_n, seed) {
        let fam = WordFamily::Orbit(w);
        for chi in chis.iter().filter(|c| c.k <= fam.word_length(0)) {
            suite.push(check(&fam, 0, chi)?);
        }
    }
    Ok(suite)
}

/// Generating functions of the totals of `χ₁`, `g_χ` and `f_χ`, with
/// coefficient `n` holding `total_n / n!`.
#[derive(Clone, Debug, PartialEq)]
pub struct EgfTriple {
    pub h: TruncSeries<Rational>,
    pub g: TruncSeries<Rational>,
    pub f: TruncSeries<Rational>,
}

/// Builds the triple from enumerated totals for `n ≤ order`; lengths below
/// `k` contribute zero.
pub fn egf_triple(family: &WordFamily, chi: &KTransitiveFn, order: usize) -> Result<EgfTriple> {
    if family.fixed_length().is_some() {
        return Err(Error::FixedLength(family.name()));
    }
    let mut h = vec![Rational::zero(); order + 1];
    let mut g = h.clone();
    let mut f = h.clone();
    for n in chi.k..=order {
        let t = chi_totals(&family.words(n), chi)?;
        let nf = int(combin::factorial(n));
        h[n] = t.chi1 / &nf;
        g[n] = t.g / &nf;
        f[n] = t.f / &nf;
    }
    Ok(EgfTriple { h: TruncSeries::new(h, order), g: TruncSeries::new(g, order), f: TruncSeries::new(f, order) })
}

fn derive_times(s: &TruncSeries<Rational>, times: usize) -> TruncSeries<Rational> {
    (0..times).fold(s.clone(), |acc, _| acc.derive())
}

fn series_report(id: String, order: usize, lhs: &TruncSeries<Rational>, rhs: &TruncSeries<Rational>) -> Report {
    let m = lhs.first_mismatch(rhs);
    let show = |s: &TruncSeries<Rational>| {
        s.coeffs().iter().map(rational_string).collect::<Vec<_>>().join(", ")
    };
    Report::outcome(id, Scope::Order(order), show(lhs), show(rhs), m.map(|i| format!("z^{i}")))
}

/// The four differential relations between `H`, `G` and `F` for arity `k`:
/// `F = z^{k−1}/k! D^{k−1}G`, `G = zH′ − (k−1)H`, `D^{k−1}G = z D^k H`,
/// `F = z^k/k! D^k H`.
pub fn verify_egf_relations(label: &str, k: usize, t: &EgfTriple) -> Suite {
    let order = t.f.order().min(t.g.order()).min(t.h.order());
    let kf = int(combin::factorial(k)).recip();
    let dg = derive_times(&t.g, k - 1);
    let dh = derive_times(&t.h, k);
    let mut s = Suite::new();
    let rhs1 = TruncSeries::new(dg.coeffs().to_vec(), order).shift_up(k - 1).scale(&kf);
    s.push(series_report(format!("egf:{label}:F-from-G"), order, &t.f, &rhs1));
    let rhs2 = t.h.derive().shift_up(1).truncate(order - 1).sub(&t.h.scale(&int(k - 1)).truncate(order - 1));
    s.push(series_report(format!("egf:{label}:G-from-H"), order, &t.g.truncate(order - 1), &rhs2));
    let rhs3 = TruncSeries::new(dh.coeffs().to_vec(), dg.order()).shift_up(1);
    s.push(series_report(format!("egf:{label}:DG-from-DH"), dg.order(), &dg, &rhs3));
    let rhs4 = TruncSeries::new(dh.coeffs().to_vec(), order).shift_up(k).scale(&kf);
    s.push(series_report(format!("egf:{label}:F-from-H"), order, &t.f, &rhs4));
    s
}

/// `e^{cz}` to the given order.
fn exp_series(c: i64, order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_fn(order, |i| int(c).pow(i as i32) / int(combin::factorial(i)))
}

/// `z²e^{2z} / (2(2−e^z)³)`.
pub fn upf_inv_egf(order: usize) -> TruncSeries<Rational> {
    let denom = TruncSeries::constant(int(2), order).sub(&exp_series(1, order)).pow(3).scale(&int(2));
    exp_series(2, order).shift_up(2).div(&denom).expect("unit constant term")
}

/// `ze^z / (2−e^z)²`, the derivative of the Cayley tie generating function.
pub fn cayley_tie_egf_derivative(order: usize) -> TruncSeries<Rational> {
    let denom = TruncSeries::constant(int(2), order).sub(&exp_series(1, order)).pow(2);
    exp_series(1, order).shift_up(1).div(&denom).expect("unit constant term")
}

/// Builds the triple from enumeration and checks the relations, plus the
/// closed forms for `(upf, inv)` and `(cayley, tie)`. Stops with a
/// precondition report at the first length where the theorem does not apply.
pub fn egf_verify(family: &WordFamily, chi: &KTransitiveFn, order: usize) -> Result<Suite> {
    let label = format!("{}:{}", family.name(), chi.name);
    if order < chi.k {
        return Err(Error::ArityTooLarge { k: chi.k, n: order });
    }
    for n in chi.k..=order {
        if let Some(reason) = precondition_failure(family, n, chi) {
            return Ok(Report::precondition(format!("egf:{label}"), Scope::N(n), reason).into());
        }
    }
    let t = egf_triple(family, chi, order)?;
    let mut s = verify_egf_relations(&label, chi.k, &t);
    match (family, chi.name.as_str()) {
        (WordFamily::Upf, "inv") => {
            s.push(series_report(format!("egf:{label}:closed-form"), order, &t.f, &upf_inv_egf(order)));
        }
        (WordFamily::Cayley, "tie") => {
            let gp = t.g.derive();
            s.push(series_report(
                format!("egf:{label}:closed-form"),
                gp.order(),
                &gp,
                &cayley_tie_egf_derivative(gp.order()),
            ));
        }
        _ => {}
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::rat;
    use crate::report::Status;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn chi_values() {
        let inv = KTransitiveFn::inv();
        assert_eq!(f_chi(&w("213"), &inv).unwrap(), int(1));
        assert_eq!(g_chi(&w("213"), &inv).unwrap(), int(1));
        let sdes = KTransitiveFn::sdes();
        assert_eq!(g_chi(&w("312"), &sdes).unwrap(), int(0));
        assert_eq!(f_chi(&w("312"), &sdes).unwrap(), int(1));
        assert_eq!(chi_1(&w("112"), &KTransitiveFn::tie()).unwrap(), int(1));
        assert_eq!(f_chi(&w("1"), &inv), Err(Error::ArityTooLarge { k: 2, n: 1 }));
    }

    #[test]
    fn chi_matches_registered_statistics() {
        use words::StatisticId as S;
        let pairs = [
            (KTransitiveFn::inv(), S::Inv, S::Des),
            (KTransitiveFn::sdes(), S::Sinv, S::Sdes),
            (KTransitiveFn::bdes(), S::Binv, S::Bdes),
            (KTransitiveFn::dtop(), S::Itop, S::Dtop),
            (KTransitiveFn::peak(), S::Hz, S::Pk),
        ];
        for v in words::words_in_box(4, 4) {
            for (chi, fs, gs) in &pairs {
                assert_eq!(f_chi(&v, chi).unwrap(), int(words::statistic(&v, fs).unwrap()), "{v} {chi:?}");
                assert_eq!(g_chi(&v, chi).unwrap(), int(words::statistic(&v, gs).unwrap()), "{v} {chi:?}");
            }
        }
        let r = KTransitiveFn::pattern_set(&[vec![1, 3, 2], vec![2, 3, 1]]).unwrap();
        for p in words::permutations(5) {
            assert_eq!(f_chi(&p, &r).unwrap(), f_chi(&p, &KTransitiveFn::peak()).unwrap());
        }
    }

    #[test]
    fn totals_and_expectations() {
        use words::StatisticId as S;
        let des = |v: &[u32]| int(words::statistic(v, &S::Des).unwrap());
        assert_eq!(expectation(&WordFamily::Sn, 3, des).unwrap(), int(1));
        let inv = |v: &[u32]| int(words::statistic(v, &S::Inv).unwrap());
        assert_eq!(total(&WordFamily::Pf, 3, inv).unwrap(), int(18));
        let tie = |v: &[u32]| int(words::statistic(v, &S::Tie).unwrap());
        assert_eq!(total(&WordFamily::Pf, 3, tie).unwrap(), int(8));
        let empty = WordFamily::Custom { name: "empty".into(), words: vec![] };
        assert_eq!(total(&empty, 3, tie), Err(Error::EmptyFamily));
    }

    #[test]
    fn family_sizes_and_symmetry() {
        for fam in standard_families() {
            for n in 1..=5 {
                assert_eq!(BigInt::from(fam.words(n).len()), fam.size_formula(n).unwrap(), "{fam} {n}");
            }
        }
        assert_eq!(WordFamily::Pf.symmetry(4), Symmetry::Full);
        assert_eq!(WordFamily::SnPlus.symmetry(4), Symmetry::Alternating);
        assert!(matches!(WordFamily::Upf.symmetry(3), Symmetry::Broken(_)));
        assert_eq!(WordFamily::Orbit(w("1123")).symmetry(0), Symmetry::Full);
    }

    #[test]
    fn theorem_examples() {
        let r = verify_k_transitive_theorem(&WordFamily::Pf, 4, &KTransitiveFn::inv()).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_k_transitive_theorem(&WordFamily::Orbit(w("1123")), 0, &KTransitiveFn::tie()).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_k_transitive_theorem(&WordFamily::SnPlus, 4, &KTransitiveFn::inv()).unwrap();
        assert!(r.passed(), "{r}");
        let inv = |v: &[u32]| int(words::statistic(v, &words::StatisticId::Inv).unwrap());
        assert_eq!(total(&WordFamily::SnPlus, 4, inv).unwrap(), int(36));
    }

    #[test]
    fn precondition_controls() {
        let bad = WordFamily::Custom { name: "single".into(), words: vec![w("12")] };
        let r = verify_k_transitive_theorem(&bad, 2, &KTransitiveFn::inv()).unwrap();
        assert_eq!(r.status, Status::Precondition);
        // A_3 is only 1-transitive; the identity is genuinely false there
        let r = verify_k_transitive_theorem(&WordFamily::SnPlus, 3, &KTransitiveFn::inv()).unwrap();
        assert_eq!(r.status, Status::Precondition);
        let t = chi_totals(&WordFamily::SnPlus.words(3), &KTransitiveFn::inv()).unwrap();
        assert_ne!(t.f, int(3) * t.chi1);
        let r = verify_k_transitive_theorem(&WordFamily::Upf, 3, &KTransitiveFn::tie()).unwrap();
        assert_eq!(r.status, Status::Precondition);
        let r = verify_k_transitive_theorem(&WordFamily::Upf, 4, &KTransitiveFn::inv()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn linearity() {
        let split = KTransitiveFn::sdes().plus(&KTransitiveFn::bdes()).unwrap();
        let inv = KTransitiveFn::inv();
        for v in words::words_in_box(4, 5) {
            assert_eq!(f_chi(&v, &split).unwrap(), f_chi(&v, &inv).unwrap());
            assert_eq!(g_chi(&v, &split).unwrap(), g_chi(&v, &inv).unwrap());
        }
        assert!(KTransitiveFn::inv().plus(&KTransitiveFn::peak()).is_err());
    }

    #[test]
    fn random_orbits_are_reproducible() {
        let a = random_orbit_seeds(20, 5, 7);
        assert_eq!(a, random_orbit_seeds(20, 5, 7));
        assert!(a.iter().all(|v| (2..=5).contains(&v.len())));
    }

    #[test]
    fn egf_relations_and_closed_forms() {
        let s = egf_verify(&WordFamily::Sn, &KTransitiveFn::inv(), 6).unwrap();
        assert!(s.ok() && s.count(Status::Pass) == 4, "{s:?}");
        let s = egf_verify(&WordFamily::Upf, &KTransitiveFn::inv(), 6).unwrap();
        assert!(s.ok() && s.count(Status::Pass) == 5, "{s:?}");
        let t = egf_triple(&WordFamily::Upf, &KTransitiveFn::inv(), 3).unwrap();
        assert_eq!(t.f.coeff(3), &rat(15, 6));
        let s = egf_verify(&WordFamily::Cayley, &KTransitiveFn::tie(), 6).unwrap();
        assert!(s.ok() && s.count(Status::Pass) == 5, "{s:?}");
        let s = egf_verify(&WordFamily::Sn, &KTransitiveFn::peak(), 6).unwrap();
        assert!(s.ok() && s.count(Status::Pass) == 4, "{s:?}");
    }

    #[test]
    fn corrupted_egf_fails_at_index() {
        let mut t = egf_triple(&WordFamily::Sn, &KTransitiveFn::inv(), 5).unwrap();
        let mut f = t.f.coeffs().to_vec();
        f[4] += int(1);
        t.f = TruncSeries::new(f, 5);
        let s = verify_egf_relations("sn:inv", 2, &t);
        let bad: Vec<_> = s.failures().map(|r| r.first_mismatch.clone().unwrap()).collect();
        assert_eq!(bad, vec!["z^4", "z^4"]);
    }
}
