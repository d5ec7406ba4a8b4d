use super::{content, Composition, Permutation, WeakComposition, Word};

/// Prefix constraint for [`Words`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Every word in `[m]^n`.
    All,
    /// Parking functions of length `n` (letters in `[n]`).
    Parking,
    /// Cayley permutations of length `n`.
    Cayley,
}

/// Lexicographic enumeration of words of length `n` over `[m]` obeying a
/// prefix rule. Prefixes that cannot be completed are never extended, so
/// parking functions cost time proportional to their number, not to `n^n`.
#[derive(Clone, Debug)]
pub struct Words {
    n: usize,
    m: u32,
    rule: Rule,
    /// Positions below `fixed` are pinned (range partitioning).
    fixed: usize,
    cur: Vec<u32>,
    state: State,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Words {
    pub fn new(n: usize, m: u32, rule: Rule) -> Self {
        Words { n, m, rule, fixed: 0, cur: Vec::with_capacity(n), state: State::Fresh }
    }

    pub fn parking(n: usize) -> Self {
        Self::new(n, n as u32, Rule::Parking)
    }

    pub fn cayley(n: usize) -> Self {
        Self::new(n, n as u32, Rule::Cayley)
    }

    /// Only the words starting with `prefix`.
    pub fn with_prefix(mut self, prefix: &[u32]) -> Self {
        assert!(prefix.len() <= self.n);
        self.cur = prefix.to_vec();
        self.fixed = prefix.len();
        self
    }

    /// Splits the enumeration into independent pieces by first letter.
    pub fn split_first_letter(&self) -> Vec<Words> {
        if self.n == 0 || self.fixed > 0 {
            return vec![self.clone()];
        }
        (1..=self.m).map(|a| self.clone().with_prefix(&[a])).filter(|w| w.feasible(&w.cur)).collect()
    }

    fn feasible(&self, prefix: &[u32]) -> bool {
        let rest = self.n - prefix.len();
        match self.rule {
            Rule::All => true,
            Rule::Parking => {
                let mut cnt = vec![0usize; self.n + 1];
                for &x in prefix {
                    cnt[x as usize] += 1;
                }
                let mut acc = 0;
                for (i, c) in cnt.iter().enumerate().skip(1) {
                    acc += c;
                    if acc + rest < i {
                        return false;
                    }
                }
                true
            }
            Rule::Cayley => {
                let mx = prefix.iter().copied().max().unwrap_or(0) as usize;
                let mut seen = vec![false; mx + 1];
                for &x in prefix {
                    seen[x as usize] = true;
                }
                let missing = (1..=mx).filter(|&v| !seen[v]).count();
                missing <= rest
            }
        }
    }

    /// Extends `cur` to full length with the smallest feasible letters.
    fn fill(&mut self) -> bool {
        while self.cur.len() < self.n {
            let mut placed = false;
            for a in 1..=self.m {
                self.cur.push(a);
                if self.feasible(&self.cur) {
                    placed = true;
                    break;
                }
                self.cur.pop();
            }
            if !placed {
                return false;
            }
        }
        true
    }

    /// Moves to the lexicographically next feasible word.
    fn advance(&mut self) -> bool {
        loop {
            if self.cur.len() <= self.fixed {
                return false;
            }
            let last = self.cur.pop().unwrap();
            let mut a = last + 1;
            while a <= self.m {
                self.cur.push(a);
                if self.feasible(&self.cur) {
                    if self.fill() {
                        return true;
                    }
                    // feasibility guarantees completion
                    unreachable!("feasible prefix failed to complete");
                }
                self.cur.pop();
                a += 1;
            }
        }
    }
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let ok = match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                self.feasible(&self.cur) && self.fill()
            }
            State::Running => self.advance(),
        };
        if ok {
            Some(Word::from_vec_unchecked(self.cur.clone()))
        } else {
            self.state = State::Done;
            None
        }
    }
}

/// All words in `[m]^n`, lexicographically.
pub fn words_in_box(n: usize, m: u32) -> Words {
    Words::new(n, m, Rule::All)
}

/// Values form an initial segment `{1, ..., k}`.
pub fn is_cayley(w: &[u32]) -> bool {
    content(w).parts().iter().all(|&c| c > 0)
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct rearrangements of a sorted multiset, lexicographically.
#[derive(Clone, Debug)]
pub struct Rearrangements {
    cur: Vec<u32>,
    done: bool,
}

impl Iterator for Rearrangements {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word::from_vec_unchecked(self.cur.clone());
        self.done = !next_permutation(&mut self.cur);
        Some(out)
    }
}

/// The symmetric group `S_n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    Rearrangements { cur: (1..=n as u32).collect(), done: false }
        .map(|w| Permutation::new(w.into_vec()).expect("rearrangement of 1..n"))
}

/// The `S_n`-orbit of `w` under place permutation, lexicographically.
pub fn orbit(w: &[u32]) -> Rearrangements {
    let mut cur = w.to_vec();
    cur.sort_unstable();
    Rearrangements { cur, done: false }
}

/// Compositions of `n` in lexicographic order; `n = 0` gives the empty one.
pub fn compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// Compositions of `n` with exactly `k` parts, lexicographically.
pub fn compositions_k(n: usize, k: usize) -> Vec<Composition> {
    weak_compositions(n, k)
        .into_iter()
        .filter(|c| c.parts().iter().all(|&p| p > 0))
        .map(|c| Composition(c.0))
        .collect()
}

/// Weak compositions of `n` into `k` parts, lexicographically.
pub fn weak_compositions(n: usize, k: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(rem: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
        if cur.len() + 1 == k {
            cur.push(rem);
            out.push(WeakComposition(cur.clone()));
            cur.pop();
            return;
        }
        for p in 0..=rem {
            cur.push(p);
            rec(rem - p, k, cur, out);
            cur.pop();
        }
    }
    if k == 0 {
        if n == 0 {
            out.push(WeakComposition(Vec::new()));
        }
        return out;
    }
    rec(n, k, &mut cur, &mut out);
    out
}
