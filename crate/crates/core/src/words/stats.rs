use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A directed graph on positive integers, given by its edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    edges: BTreeSet<(u32, u32)>,
}

impl Digraph {
    pub fn new(edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Digraph { edges: edges.into_iter().collect() }
    }

    /// `i -> j` whenever `i > j`, on `[n]`.
    pub fn descending(n: u32) -> Self {
        Self::new((1..=n).flat_map(|i| (1..i).map(move |j| (i, j))))
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn edges(&self) -> impl Iterator<Item = &(u32, u32)> {
        self.edges.iter()
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}>{b}")).collect();
        f.write_str(&e.join(","))
    }
}

impl FromStr for Digraph {
    type Err = Error;

    /// Edges as `a>b` separated by commas, e.g. `1>2,3>1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("edge `{part}` is not of the form a>b")))?;
            let a: u32 = a.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in `{part}`")))?;
            let b: u32 = b.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in `{part}`")))?;
            edges.push((a, b));
        }
        Ok(Digraph::new(edges))
    }
}

/// The closed registry of word statistics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StatisticId {
    Inv,
    Des,
    Asc,
    Tie,
    Maj,
    Sdes,
    Sinv,
    Bdes,
    Binv,
    Dtop,
    Itop,
    Pk,
    Hz,
    Pattern(Vec<u32>),
    AdjacentPattern(Vec<u32>),
    GraphicalInv(Digraph),
    GraphicalDes(Digraph),
}

impl StatisticId {
    pub const NAMED: [&'static str; 13] =
        ["inv", "des", "asc", "tie", "maj", "sdes", "sinv", "bdes", "binv", "dtop", "itop", "pk", "hz"];
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StatisticId::*;
        let digits = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join("");
        match self {
            Inv => f.write_str("inv"),
            Des => f.write_str("des"),
            Asc => f.write_str("asc"),
            Tie => f.write_str("tie"),
            Maj => f.write_str("maj"),
            Sdes => f.write_str("sdes"),
            Sinv => f.write_str("sinv"),
            Bdes => f.write_str("bdes"),
            Binv => f.write_str("binv"),
            Dtop => f.write_str("dtop"),
            Itop => f.write_str("itop"),
            Pk => f.write_str("pk"),
            Hz => f.write_str("hz"),
            Pattern(r) => write!(f, "pattern:{}", digits(r)),
            AdjacentPattern(r) => write!(f, "adjacent_pattern:{}", digits(r)),
            GraphicalInv(d) => write!(f, "graphical_inv:{d}"),
            GraphicalDes(d) => write!(f, "graphical_des:{d}"),
        }
    }
}

impl FromStr for StatisticId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use StatisticId::*;
        let unknown = || Error::UnknownStatistic(s.to_string());
        if let Some((head, arg)) = s.split_once(':') {
            let pattern = || -> Result<Vec<u32>> {
                let w: super::Word = arg.parse()?;
                if !super::is_permutation(&w) {
                    return Err(unknown());
                }
                Ok(w.into_vec())
            };
            return match head {
                "pattern" => Ok(Pattern(pattern()?)),
                "adjacent_pattern" => Ok(AdjacentPattern(pattern()?)),
                "graphical_inv" => Ok(GraphicalInv(arg.parse()?)),
                "graphical_des" => Ok(GraphicalDes(arg.parse()?)),
                _ => Err(unknown()),
            };
        }
        Ok(match s {
            "inv" => Inv,
            "des" => Des,
            "asc" => Asc,
            "tie" => Tie,
            "maj" => Maj,
            "sdes" => Sdes,
            "sinv" => Sinv,
            "bdes" => Bdes,
            "binv" => Binv,
            "dtop" => Dtop,
            "itop" => Itop,
            "pk" => Pk,
            "hz" => Hz,
            _ => return Err(unknown()),
        })
    }
}

fn count_pairs(w: &[u32], pred: impl Fn(u32, u32) -> bool) -> u64 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if pred(w[i], w[j]) {
                c += 1;
            }
        }
    }
    c
}

fn count_adjacent(w: &[u32], pred: impl Fn(u32, u32) -> bool) -> u64 {
    w.windows(2).filter(|p| pred(p[0], p[1])).count() as u64
}

/// Evaluates a registered statistic. Pattern ids whose pattern is longer
/// than the word are rejected.
pub fn statistic(w: &[u32], s: &StatisticId) -> Result<u64> {
    use StatisticId::*;
    Ok(match s {
        Inv => count_pairs(w, |a, b| a > b),
        Des => count_adjacent(w, |a, b| a > b),
        Asc => count_adjacent(w, |a, b| a < b),
        Tie => count_adjacent(w, |a, b| a == b),
        Maj => w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i as u64 + 1).sum(),
        Sdes => count_adjacent(w, |a, b| a == b + 1),
        Sinv => count_pairs(w, |a, b| a == b + 1),
        Bdes => count_adjacent(w, |a, b| a > b + 1),
        Binv => count_pairs(w, |a, b| a > b + 1),
        Dtop => w.windows(2).filter(|p| p[0] > p[1]).map(|p| p[0] as u64).sum(),
        Itop => {
            let mut t = 0;
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    if w[i] > w[j] {
                        t += w[i] as u64;
                    }
                }
            }
            t
        }
        Pk => w.windows(3).filter(|p| p[0] < p[1] && p[1] > p[2]).count() as u64,
        Hz => {
            let n = w.len();
            let mut c = 0;
            for j in 0..n {
                let left = w[..j].iter().filter(|&&a| a < w[j]).count() as u64;
                let right = w[j + 1..].iter().filter(|&&a| a < w[j]).count() as u64;
                c += left * right;
            }
            c
        }
        Pattern(r) => pattern_count(w, r, false)?,
        AdjacentPattern(r) => pattern_count(w, r, true)?,
        GraphicalInv(d) => count_pairs(w, |a, b| d.has_edge(a, b)),
        GraphicalDes(d) => count_adjacent(w, |a, b| d.has_edge(a, b)),
    })
}

/// Whether the values `v` are strictly order-isomorphic to the pattern `rho`.
pub(crate) fn matches_pattern(v: &[u32], rho: &[u32]) -> bool {
    // rho^{-1}(1), rho^{-1}(2), ... must index strictly increasing values
    let mut order = vec![0usize; rho.len()];
    for (i, &r) in rho.iter().enumerate() {
        order[r as usize - 1] = i;
    }
    order.windows(2).all(|p| v[p[0]] < v[p[1]])
}

/// Occurrences of `rho` in `w`: over all increasing position tuples, or
/// over contiguous windows when `adjacent` is set. Ties never match.
pub fn pattern_count(w: &[u32], rho: &[u32], adjacent: bool) -> Result<u64> {
    let k = rho.len();
    let n = w.len();
    if k > n {
        return Err(Error::PatternTooLong { k, n });
    }
    if adjacent {
        return Ok(w.windows(k).filter(|v| matches_pattern(v, rho)).count() as u64);
    }
    let mut count = 0;
    let mut buf = Vec::with_capacity(k);
    for_each_subset(n, k, |idx| {
        buf.clear();
        buf.extend(idx.iter().map(|&i| w[i]));
        if matches_pattern(&buf, rho) {
            count += 1;
        }
    });
    Ok(count)
}

/// Calls `f` on every increasing `k`-tuple of indices in `0..n`, in lex order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// 1-based pairs `(i, j)`, `i < j`, with `w_i > w_j`.
pub fn inversion_set(w: &[u32]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use StatisticId::*;

    fn st(w: &[u32], s: StatisticId) -> u64 {
        statistic(w, &s).unwrap()
    }

    #[test]
    fn registry_examples() {
        assert_eq!(st(&[3, 2, 1], Inv), 3);
        assert_eq!(st(&[2, 3, 6, 8, 4, 1, 7, 5, 9], Asc), 5);
        assert_eq!(st(&[1, 3, 2], Pk), 1);
        assert_eq!(st(&[3, 2, 1], Pk), 0);
        assert_eq!(st(&[3, 2, 1], Dtop), 5);
        assert_eq!(st(&[3, 1, 2], Maj), 1);
        assert_eq!(st(&[1, 1, 2, 2], Tie), 2);
        assert_eq!(st(&[3, 2, 1], Sdes), 2);
        assert_eq!(st(&[3, 1, 2], Bdes), 1);
        assert_eq!(st(&[3, 2, 1], Itop), 3 + 3 + 2);
        assert_eq!(st(&[], Inv), 0);
        assert_eq!(st(&[], Hz), 0);
    }

    #[test]
    fn patterns() {
        assert_eq!(pattern_count(&[1, 3, 2], &[1, 3, 2], false).unwrap(), 1);
        assert_eq!(pattern_count(&[2, 1, 4, 3], &[2, 1], true).unwrap(), 2);
        assert!(pattern_count(&[1], &[1, 2], false).is_err());
        assert_eq!(pattern_count(&[1, 1], &[1, 2], false).unwrap(), 0);
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["inv", "pattern:132", "adjacent_pattern:21", "graphical_inv:1>2,3>1", "hz"] {
            let id: StatisticId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!(matches!("foo".parse::<StatisticId>(), Err(Error::UnknownStatistic(_))));
        assert!("pattern:112".parse::<StatisticId>().is_err());
    }

    #[test]
    fn subsets_in_lex_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        let mut empty = 0;
        for_each_subset(3, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }
}
