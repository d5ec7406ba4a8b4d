//! Labeled rooted forests on `[n]`, the preorder word, Françon's bijection
//! ρ to parking functions, and the symmetric group action.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parking::is_parking_function;
use crate::words::{Permutation, WeakComposition, Word, Words};

/// A forest stored as a parent map; roots have parent 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    parent: Vec<u32>,
}

impl Forest {
    /// `parent[v-1]` is the parent of `v`.
    pub fn new(parent: Vec<u32>) -> Result<Self> {
        let n = parent.len();
        for (i, &p) in parent.iter().enumerate() {
            if p as usize > n {
                return Err(Error::InvalidForest(format!("parent {p} of {} is not a vertex", i + 1)));
            }
            if p as usize == i + 1 {
                return Err(Error::InvalidForest(format!("vertex {} is its own parent", i + 1)));
            }
        }
        for start in 1..=n {
            let mut v = start;
            for _ in 0..=n {
                if v == 0 {
                    break;
                }
                v = parent[v - 1] as usize;
            }
            if v != 0 {
                return Err(Error::InvalidForest(format!("vertex {start} lies on a cycle")));
            }
        }
        Ok(Forest { parent })
    }

    /// `n` isolated roots.
    pub fn roots(n: usize) -> Self {
        Forest { parent: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> u32 {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[u32] {
        &self.parent
    }

    /// Children of `v` (0 for the virtual root) in increasing order.
    pub fn children(&self, v: u32) -> Vec<u32> {
        (1..=self.n() as u32).filter(|&c| self.parent[c as usize - 1] == v).collect()
    }

    fn children_table(&self) -> Vec<Vec<u32>> {
        let mut ch = vec![Vec::new(); self.n() + 1];
        for (i, &p) in self.parent.iter().enumerate() {
            ch[p as usize].push(i as u32 + 1);
        }
        ch
    }

    /// Preorder word of the tree obtained by hanging every root below 0.
    /// Children are visited in increasing label order.
    pub fn preorder_word(&self) -> Vec<u32> {
        let ch = self.children_table();
        let mut out = Vec::with_capacity(self.n() + 1);
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(ch[v as usize].iter().rev());
        }
        out
    }

    /// `pos[v]` is the 1-based position of `v` in the preorder word.
    fn positions(&self) -> Vec<u32> {
        let mut pos = vec![0u32; self.n() + 1];
        for (i, &v) in self.preorder_word().iter().enumerate() {
            pos[v as usize] = i as u32 + 1;
        }
        pos
    }

    /// Parent positions: the i-th entry is the position of `p(i)` in the preorder word.
    pub fn rho(&self) -> Word {
        let pos = self.positions();
        Word::from_vec_unchecked(self.parent.iter().map(|&p| pos[p as usize]).collect())
    }

    /// Pairs `i < j` whose parents appear in the opposite order in the preorder word.
    pub fn pinv(&self) -> u64 {
        crate::words::statistic(&self.rho(), &crate::words::StatisticId::Inv).expect("inv is total")
    }

    /// `C(n+1, 2)` minus the sum of parent positions.
    pub fn area_forest(&self) -> u64 {
        let n = self.n() as u64;
        n * (n + 1) / 2 - self.rho().iter().map(|&x| x as u64).sum::<u64>()
    }

    /// Pairs `i < j` with `j` a proper ancestor of `i`.
    pub fn ancestor_inv(&self) -> u64 {
        let mut c = 0;
        for i in 1..=self.n() {
            let mut a = self.parent(i);
            while a != 0 {
                if a as usize > i {
                    c += 1;
                }
                a = self.parent(a as usize);
            }
        }
        c
    }

    /// `c_i` is the number of children of the vertex in position `i` of the
    /// preorder word, for `i = 1..n`.
    pub fn parental_content(&self) -> WeakComposition {
        let ch = self.children_table();
        let w = self.preorder_word();
        WeakComposition::new(w[..self.n()].iter().map(|&v| ch[v as usize].len()).collect())
    }

    /// The adjacent transposition `s_i`: swaps the labels `i` and `i+1`
    /// unless they have the same parent (two roots count as equal parents).
    pub fn sn_act(&self, i: usize) -> Result<Forest> {
        let n = self.n();
        if i == 0 || i >= n {
            return Err(Error::BadTransposition { i, n });
        }
        if self.parent(i) == self.parent(i + 1) {
            return Ok(self.clone());
        }
        let swap = |v: u32| -> u32 {
            if v as usize == i {
                v + 1
            } else if v as usize == i + 1 {
                v - 1
            } else {
                v
            }
        };
        let mut parent = vec![0; n];
        for v in 1..=n as u32 {
            parent[swap(v) as usize - 1] = swap(self.parent(v as usize));
        }
        Ok(Forest { parent })
    }

    /// `σ·F` through a reduced word of `σ`.
    pub fn act(&self, sigma: &Permutation) -> Forest {
        reduced_word(sigma, false)
            .iter()
            .rev()
            .fold(self.clone(), |f, &i| f.sn_act(i).expect("reduced word letter in range"))
    }

    pub fn is_increasing(&self) -> bool {
        self.pinv() == 0
    }
}

/// A reduced word `σ = s_{r_1} s_{r_2} ... s_{r_k}`, peeling the first (or
/// last) descent of the one-line notation each step.
pub fn reduced_word(sigma: &Permutation, last_descent: bool) -> Vec<usize> {
    let mut v = sigma.entries().to_vec();
    let mut rev = Vec::new();
    loop {
        let mut descents = (0..v.len().saturating_sub(1)).filter(|&i| v[i] > v[i + 1]);
        let d = if last_descent { descents.next_back() } else { descents.next() };
        match d {
            Some(i) => {
                v.swap(i, i + 1);
                rev.push(i + 1);
            }
            None => break,
        }
    }
    rev.reverse();
    rev
}

/// `σ·w` on positions: `(σ·w)_i = w_{σ^{-1}(i)}`.
pub fn act_on_word(sigma: &Permutation, w: &[u32]) -> Word {
    let mut out = vec![0; w.len()];
    for (i, &x) in w.iter().enumerate() {
        out[sigma[i] as usize - 1] = x;
    }
    Word::from_vec_unchecked(out)
}

/// Inverse of [`Forest::rho`]: the children of the vertex at preorder
/// position `p` are the `i` with `α_i = p`, in increasing order.
pub fn rho_inverse(alpha: &[u32]) -> Result<Forest> {
    let n = alpha.len();
    if !is_parking_function(alpha) {
        return Err(Error::NotParkingFunction { word: format!("{alpha:?}") });
    }
    let mut by_pos = vec![Vec::new(); n + 2];
    for (i, &a) in alpha.iter().enumerate() {
        by_pos[a as usize].push(i as u32 + 1);
    }
    let mut parent = vec![0u32; n];
    // Preorder DFS; a vertex's position is fixed when it is first reached.
    // Stack entries: (vertex, its position, index of next child to visit).
    let mut next_pos = 1u32;
    let mut stack = vec![(0u32, 1u32, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (v, p, k) = *top;
        match by_pos[p as usize].get(k) {
            Some(&c) => {
                top.2 += 1;
                next_pos += 1;
                parent[c as usize - 1] = v;
                stack.push((c, next_pos, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    Forest::new(parent)
}

/// All forests on `[n]`, in the order of their images under ρ.
pub fn enumerate_forests(n: usize) -> impl Iterator<Item = Forest> + Clone {
    Words::parking(n).map(|a| rho_inverse(&a).expect("parking function"))
}

/// Forests without parental preorder inversions.
pub fn enumerate_increasing_forests(n: usize) -> impl Iterator<Item = Forest> + Clone {
    enumerate_forests(n).filter(Forest::is_increasing)
}

impl fmt::Display for Forest {
    /// `n; v:p(v) ...`, e.g. `3; 1:0 2:1 3:1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n())?;
        for (i, p) in self.parent.iter().enumerate() {
            write!(f, " {}:{}", i + 1, p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest({self})")
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s.split_once(';').ok_or_else(|| Error::Parse("expected `n; v:p ...`".into()))?;
        let n: usize = head.trim().parse().map_err(|_| Error::Parse(format!("bad vertex count `{head}`")))?;
        let mut parent = vec![None; n];
        for pair in body.split_whitespace() {
            let (v, p) = pair.split_once(':').ok_or_else(|| Error::Parse(format!("bad pair `{pair}`")))?;
            let v: usize = v.parse().map_err(|_| Error::Parse(format!("bad vertex `{v}`")))?;
            let p: u32 = p.parse().map_err(|_| Error::Parse(format!("bad parent `{p}`")))?;
            if v == 0 || v > n {
                return Err(Error::Parse(format!("vertex {v} out of range")));
            }
            parent[v - 1] = Some(p);
        }
        let parent = parent
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::Parse(format!("vertex {} has no parent entry", i + 1))))
            .collect::<Result<Vec<u32>>>()?;
        Forest::new(parent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::parking_count;
    use crate::parking::area;
    use crate::words::{content, permutations, statistic, StatisticId};
    use std::collections::BTreeSet;

    fn figure_forest() -> Forest {
        let mut p = vec![0u32; 14];
        for (v, q) in [(1, 13), (2, 3), (3, 5), (4, 14), (6, 14), (9, 3), (10, 5), (14, 5), (11, 7), (12, 8), (13, 8)] {
            p[v - 1] = q;
        }
        Forest::new(p).unwrap()
    }

    #[test]
    fn figure_forest_word_and_rho() {
        let f = figure_forest();
        assert_eq!(f.preorder_word(), vec![0, 5, 3, 2, 9, 10, 14, 4, 6, 7, 11, 8, 12, 13, 1]);
        assert_eq!(f.rho().entries(), &[14, 3, 2, 7, 1, 7, 1, 1, 3, 2, 10, 12, 12, 2]);
        assert_eq!(rho_inverse(&f.rho()).unwrap(), f);
    }

    #[test]
    fn second_figure_has_no_pinv() {
        let mut p = vec![0u32; 14];
        for (v, q) in [(4, 1), (7, 4), (8, 4), (5, 1), (6, 1), (9, 6), (10, 6), (11, 2), (13, 3), (14, 13), (12, 3)] {
            p[v - 1] = q;
        }
        let f = Forest::new(p).unwrap();
        assert_eq!(f.pinv(), 0);
        assert_eq!(figure_forest().pinv(), statistic(&figure_forest().rho(), &StatisticId::Inv).unwrap());
    }

    #[test]
    fn small_rho_cases() {
        assert_eq!(Forest::roots(3).rho().entries(), &[1, 1, 1]);
        let chain: Forest = "3; 1:0 2:1 3:2".parse().unwrap();
        assert_eq!(chain.rho().entries(), &[1, 2, 3]);
        let cherry: Forest = "3; 1:0 2:1 3:1".parse().unwrap();
        assert_eq!(cherry.rho().entries(), &[1, 2, 2]);
        assert_eq!(cherry.to_string(), "3; 1:0 2:1 3:1");
        assert_eq!(Forest::roots(3).parental_content().parts(), &[3, 0, 0]);
    }

    #[test]
    fn rho_is_a_bijection() {
        for n in 0..=5 {
            let forests: BTreeSet<Forest> = enumerate_forests(n).collect();
            assert_eq!(forests.len(), usize::try_from(parking_count(n)).unwrap());
            for f in &forests {
                assert!(is_parking_function(&f.rho()));
                assert_eq!(&rho_inverse(&f.rho()).unwrap(), f);
                assert_eq!(f.parental_content(), content(&f.rho()).padded(n));
            }
        }
    }

    #[test]
    fn increasing_forests_are_catalan() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_increasing_forests(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        assert!(enumerate_increasing_forests(4).all(|f| f.rho().is_weakly_increasing()));
    }

    #[test]
    fn statistics_transport_and_kreweras() {
        for n in 0..=5 {
            let mut by_area = vec![0u64; n * n + 1];
            let mut by_anc = vec![0u64; n * n + 1];
            for f in enumerate_forests(n) {
                let a = f.rho();
                assert_eq!(f.area_forest(), area(&a).unwrap());
                assert_eq!(f.pinv(), statistic(&a, &StatisticId::Inv).unwrap());
                by_area[f.area_forest() as usize] += 1;
                by_anc[f.ancestor_inv() as usize] += 1;
            }
            assert_eq!(by_area, by_anc, "n = {n}");
        }
    }

    #[test]
    fn coxeter_relations_and_orbit_area() {
        let n = 4;
        for f in enumerate_forests(n) {
            let s = |g: &Forest, i: usize| g.sn_act(i).unwrap();
            for i in 1..n {
                assert_eq!(s(&s(&f, i), i), f);
                if i + 1 < n {
                    assert_eq!(s(&s(&s(&f, i), i + 1), i), s(&s(&s(&f, i + 1), i), i + 1));
                }
                for j in i + 2..n {
                    assert_eq!(s(&s(&f, i), j), s(&s(&f, j), i));
                }
                assert_eq!(s(&f, i).area_forest(), f.area_forest());
            }
        }
    }

    #[test]
    fn action_is_equivariant_and_well_defined() {
        let n = 4;
        for f in enumerate_forests(n) {
            for i in 1..n {
                let g = f.sn_act(i).unwrap();
                let mut w = f.rho().into_vec();
                w.swap(i - 1, i);
                assert_eq!(g.rho().entries(), &w[..]);
                assert_eq!(g.sn_act(i).unwrap(), f);
            }
            for s in permutations(n) {
                let by_first = reduced_word(&s, false)
                    .iter()
                    .rev()
                    .fold(f.clone(), |g, &i| g.sn_act(i).unwrap());
                let by_last = reduced_word(&s, true)
                    .iter()
                    .rev()
                    .fold(f.clone(), |g, &i| g.sn_act(i).unwrap());
                assert_eq!(by_first, by_last);
                assert_eq!(f.act(&s).rho(), act_on_word(&s, &f.rho()));
            }
        }
    }

    #[test]
    fn two_root_example() {
        let f: Forest = "2; 1:0 2:1".parse().unwrap();
        assert_eq!(f.sn_act(1).unwrap().to_string(), "2; 1:2 2:0");
        assert!(f.sn_act(2).is_err());
        assert_eq!(Forest::roots(2).sn_act(1).unwrap(), Forest::roots(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Forest::new(vec![2, 1]).is_err());
        assert!(Forest::new(vec![1]).is_err());
        assert!(Forest::new(vec![5]).is_err());
        assert!("2; 1:0".parse::<Forest>().is_err());
        assert!(rho_inverse(&[2, 2]).is_err());
    }

    #[test]
    fn statistics() {
        let chain: Forest = "3; 1:0 2:1 3:2".parse().unwrap();
        assert_eq!(chain.area_forest(), 0);
        assert_eq!(chain.ancestor_inv(), 0);
        let rev: Forest = "3; 1:2 2:3 3:0".parse().unwrap();
        assert_eq!(rev.ancestor_inv(), 3);
        assert_eq!(Forest::roots(3).area_forest(), 3);
    }
}
