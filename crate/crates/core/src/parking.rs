//! The parking process, parking function and unit interval parking function
//! membership, block structure, and the maps ψ, η and Pollak's reduction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{content, is_cayley, Composition, Permutation, WeakComposition, Word, Words};

/// Where each car ended up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParkingOutcome {
    /// Entry `i` is the car parked in spot `i`.
    pub spot_to_car: Permutation,
    /// Entry `j` is the spot taken by car `j`.
    pub car_to_spot: Permutation,
}

fn check_entries(alpha: &[u32], bound: u32) -> Result<()> {
    for (p, &x) in alpha.iter().enumerate() {
        if x == 0 {
            return Err(Error::NonPositiveEntry { position: p + 1 });
        }
        if x > bound {
            return Err(Error::EntryOutOfRange { position: p + 1, value: x, bound });
        }
    }
    Ok(())
}

/// Runs the cars in order on a one-way street with `n` spots.
/// `Ok(None)` means some car drove off the end.
pub fn park(alpha: &[u32]) -> Result<Option<ParkingOutcome>> {
    let n = alpha.len();
    check_entries(alpha, n as u32)?;
    Ok(simulate(alpha).map(|car_to_spot| {
        let car_to_spot = Permutation::new(car_to_spot).expect("each spot used once");
        ParkingOutcome { spot_to_car: car_to_spot.inverse(), car_to_spot }
    }))
}

fn simulate(alpha: &[u32]) -> Option<Vec<u32>> {
    let n = alpha.len();
    let mut taken = vec![false; n + 1];
    let mut spots = Vec::with_capacity(n);
    for &a in alpha {
        let mut s = a as usize;
        while s <= n && taken[s] {
            s += 1;
        }
        if s > n || s == 0 {
            return None;
        }
        taken[s] = true;
        spots.push(s as u32);
    }
    Some(spots)
}

fn sorted_criterion(alpha: &[u32]) -> bool {
    let mut b = alpha.to_vec();
    b.sort_unstable();
    b.iter().enumerate().all(|(i, &x)| x >= 1 && x as usize <= i + 1)
}

/// Whether every car parks. Words with out-of-range entries are simply not
/// parking functions.
pub fn is_parking_function(alpha: &[u32]) -> bool {
    let by_sort = sorted_criterion(alpha);
    debug_assert_eq!(
        by_sort,
        alpha.iter().all(|&x| x >= 1 && x as usize <= alpha.len()) && simulate(alpha).is_some(),
        "membership tests disagree on {alpha:?}"
    );
    by_sort
}

/// `PF_n` in lexicographic order.
pub fn enumerate_pf(n: usize) -> Words {
    Words::parking(n)
}

/// Parking function in which every car parks at its preference or one past it.
pub fn is_upf(alpha: &[u32]) -> bool {
    if !alpha.iter().all(|&x| x >= 1 && x as usize <= alpha.len()) {
        return false;
    }
    match simulate(alpha) {
        Some(spots) => spots.iter().zip(alpha).all(|(&s, &a)| s - a <= 1),
        None => false,
    }
}

/// `UPF_n` in lexicographic order.
pub fn enumerate_upf(n: usize) -> impl Iterator<Item = Word> + Clone {
    Words::parking(n).filter(|w| is_upf(w))
}

/// The decomposition of a unit interval parking function into blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockStructure {
    /// Positions (1-based, increasing) of the cars in each block.
    pub blocks: Vec<Vec<usize>>,
    /// The sorted values of each block: `(i, i, i+1, ..., i+c-2)`.
    pub values: Vec<Vec<u32>>,
    /// Block sizes, the content of the UPF.
    pub sizes: Composition,
}

impl BlockStructure {
    /// Block index (1-based) of the car at 1-based position `p`.
    pub fn block_of(&self, p: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&p)).expect("position in range") + 1
    }
}

fn not_upf(alpha: &[u32]) -> Error {
    Error::NotUnitInterval { word: format!("{:?}", alpha) }
}

/// Blocks start in the sorted word at every index `i` with `β_i = i`.
pub fn block_structure(alpha: &[u32]) -> Result<BlockStructure> {
    if !is_upf(alpha) {
        return Err(not_upf(alpha));
    }
    let n = alpha.len();
    let mut sorted = alpha.to_vec();
    sorted.sort_unstable();
    let starts: Vec<usize> = (0..n).filter(|&i| sorted[i] as usize == i + 1).collect();
    let mut values = Vec::new();
    let mut sizes = Vec::new();
    for (j, &s) in starts.iter().enumerate() {
        let e = starts.get(j + 1).copied().unwrap_or(n);
        values.push(sorted[s..e].to_vec());
        sizes.push(e - s);
    }
    // Block value ranges are disjoint intervals, so a value determines its block.
    let block_for_value = |v: u32| values.iter().position(|b| b.contains(&v)).expect("value in some block");
    let mut blocks = vec![Vec::new(); values.len()];
    for (p, &v) in alpha.iter().enumerate() {
        blocks[block_for_value(v)].push(p + 1);
    }
    Ok(BlockStructure { blocks, values, sizes: Composition::new(sizes).expect("blocks are nonempty") })
}

/// Replaces each entry by the index of its block.
pub fn psi(alpha: &[u32]) -> Result<Word> {
    let bs = block_structure(alpha)?;
    let mut w = vec![0u32; alpha.len()];
    for (j, b) in bs.blocks.iter().enumerate() {
        for &p in b {
            w[p - 1] = j as u32 + 1;
        }
    }
    Ok(Word::from_vec_unchecked(w))
}

/// Rebuilds the UPF: the `j`s, left to right, become `a, a, a+1, ...`
/// with `a = c_1 + ... + c_{j-1} + 1`.
pub fn psi_inverse(w: &[u32]) -> Result<Word> {
    if !is_cayley(w) {
        return Err(Error::NotCayley { word: format!("{w:?}") });
    }
    let c = content(w);
    let mut start = Vec::with_capacity(c.len());
    let mut acc = 1u32;
    for &cj in c.parts() {
        start.push(acc);
        acc += cj as u32;
    }
    let mut seen = vec![0u32; c.len()];
    let out = w
        .iter()
        .map(|&j| {
            let k = j as usize - 1;
            let v = start[k] + seen[k].saturating_sub(1);
            seen[k] += 1;
            v
        })
        .collect();
    Ok(Word::from_vec_unchecked(out))
}

/// η(σ, S): with `[n] \ S = {s_1 < ... < s_r}` and blocks
/// `B_k = {s_{k-1}+1, ..., s_k}`, set `w_i = k` when `σ_i ∈ B_k`.
pub fn eta(sigma: &Permutation, s: &[usize]) -> Result<Word> {
    let n = sigma.n();
    let asc = sigma.inverse().ascent_set();
    if !s.iter().all(|x| asc.contains(x)) {
        return Err(Error::NotAscentSubset { set: format!("{s:?}"), ascents: format!("{asc:?}") });
    }
    let mut block_of_value = vec![0u32; n + 1];
    let mut k = 1;
    for v in 1..=n {
        block_of_value[v] = k;
        if !s.contains(&v) {
            k += 1;
        }
    }
    Ok(Word::from_vec_unchecked(sigma.iter().map(|&v| block_of_value[v as usize]).collect()))
}

/// Inverse of [`eta`]: the `j`-th leftmost `k` becomes `s_{k-1} + j`, and
/// `S` collects every block element except the block maximum.
pub fn eta_inverse(w: &[u32]) -> Result<(Permutation, Vec<usize>)> {
    if !is_cayley(w) {
        return Err(Error::NotCayley { word: format!("{w:?}") });
    }
    let c = content(w);
    let mut offset = Vec::with_capacity(c.len());
    let mut acc = 0u32;
    let mut s = Vec::new();
    for &cj in c.parts() {
        offset.push(acc);
        s.extend((acc as usize + 1)..(acc as usize + cj));
        acc += cj as u32;
    }
    let mut seen = vec![0u32; c.len()];
    let sigma = w
        .iter()
        .map(|&j| {
            let k = j as usize - 1;
            seen[k] += 1;
            offset[k] + seen[k]
        })
        .collect();
    Ok((Permutation::new(sigma).expect("relabelling is a bijection"), s))
}

/// Pollak's map `[n+1]^n -> PF_n`: park on a circle of `n+1` spots and
/// subtract the empty spot modulo `n+1`.
pub fn pollak_reduce(w: &[u32]) -> Result<Word> {
    let n = w.len();
    let m = n + 1;
    check_entries(w, m as u32)?;
    let mut taken = vec![false; m + 1];
    for &a in w {
        let mut s = a as usize;
        while taken[s] {
            s = if s == m { 1 } else { s + 1 };
        }
        taken[s] = true;
    }
    let empty = (1..=m).find(|&i| !taken[i]).expect("one spot stays empty");
    let out = w.iter().map(|&a| ((a as usize + m - empty) % m) as u32).collect();
    Ok(Word::from_vec_unchecked(out))
}

/// `i <= c_1 + ... + c_i <= n` for every `i`, where `n` is the length of `c`.
pub fn is_hess(c: &[usize]) -> bool {
    let n = c.len();
    let mut acc = 0;
    for (i, &x) in c.iter().enumerate() {
        acc += x;
        if acc < i + 1 || acc > n {
            return false;
        }
    }
    true
}

/// All of `Hess(n)` in lexicographic order.
pub fn hess_sequences(n: usize) -> Vec<WeakComposition> {
    crate::words::weak_compositions(n, n).into_iter().filter(|c| is_hess(c.parts())).collect()
}

/// `C(n+1, 2) - Σ α_i`.
pub fn area(alpha: &[u32]) -> Result<u64> {
    if !is_parking_function(alpha) {
        return Err(Error::NotParkingFunction { word: format!("{alpha:?}") });
    }
    let n = alpha.len() as u64;
    Ok(n * (n + 1) / 2 - alpha.iter().map(|&x| x as u64).sum::<u64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{fubini, parking_count};
    use crate::words::{inversion_set, permutations, words_in_box};

    fn ws(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    #[test]
    fn park_examples() {
        let out = park(&[1, 1, 2, 2, 2, 6, 7, 7]).unwrap().unwrap();
        assert_eq!(out.car_to_spot.entries(), &[1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(park(&[1, 1, 1]).unwrap().unwrap().car_to_spot, Permutation::identity(3));
        assert_eq!(park(&[2, 2]).unwrap(), None);
        assert!(park(&[3, 1]).is_err());
        let out = park(&[3, 1, 2]).unwrap().unwrap();
        assert_eq!(out.spot_to_car.entries(), &[2, 3, 1]);
    }

    #[test]
    fn membership() {
        assert!(is_parking_function(&[3, 1, 2]));
        assert!(!is_parking_function(&[3, 3, 1]));
        assert!(is_parking_function(&[]));
        assert_eq!(words_in_box(3, 3).filter(|w| is_parking_function(w)).count(), 16);
        assert!(is_upf(&[1, 1, 2]));
        assert!(!is_upf(&[2, 1, 1]));
        for n in 0..=5 {
            assert_eq!(enumerate_pf(n).count(), usize::try_from(parking_count(n)).unwrap());
            assert_eq!(enumerate_upf(n).count(), usize::try_from(fubini(n)).unwrap());
        }
    }

    #[test]
    fn membership_tests_agree_on_boxes() {
        for n in 0..=5 {
            for w in words_in_box(n, n as u32) {
                assert_eq!(sorted_criterion(&w), simulate(&w).is_some(), "{w}");
            }
        }
    }

    #[test]
    fn blocks() {
        let b = block_structure(&[1, 1, 2]).unwrap();
        assert_eq!(b.sizes.parts(), &[3]);
        let b = block_structure(&[1, 2, 3]).unwrap();
        assert_eq!(b.sizes.parts(), &[1, 1, 1]);
        assert!(block_structure(&[2, 1, 1]).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&[1, 1, 2]).unwrap(), ws(&[1, 1, 1]));
        assert_eq!(psi(&[1, 2, 3]).unwrap(), ws(&[1, 2, 3]));
        let w = [2, 2, 4, 5, 2, 1, 4, 3, 5];
        let a = psi_inverse(&w).unwrap();
        assert_eq!(a, ws(&[2, 2, 6, 8, 3, 1, 6, 5, 8]));
        assert!(is_upf(&a));
        assert_eq!(psi(&a).unwrap(), ws(&w));
    }

    #[test]
    fn psi_roundtrip_and_inversions() {
        for n in 0..=6 {
            for a in enumerate_upf(n) {
                let w = psi(&a).unwrap();
                assert!(is_cayley(&w));
                assert_eq!(psi_inverse(&w).unwrap(), a);
                assert_eq!(inversion_set(&w), inversion_set(&a));
            }
        }
    }

    #[test]
    fn eta_example_and_bijection() {
        let sigma = Permutation::new(vec![2, 3, 6, 8, 4, 1, 7, 5, 9]).unwrap();
        let w = eta(&sigma, &[2, 3, 6, 8]).unwrap();
        assert_eq!(w, ws(&[2, 2, 4, 5, 2, 1, 4, 3, 5]));
        assert_eq!(eta_inverse(&w).unwrap(), (sigma.clone(), vec![2, 3, 6, 8]));
        assert!(eta(&sigma, &[1]).is_err());
        assert_eq!(eta(&Permutation::identity(4), &[]).unwrap(), ws(&[1, 2, 3, 4]));

        let mut images = std::collections::BTreeSet::new();
        for sigma in permutations(3) {
            let asc = sigma.inverse().ascent_set();
            for mask in 0..(1u32 << asc.len()) {
                let s: Vec<usize> = asc.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a).collect();
                images.insert(eta(&sigma, &s).unwrap());
            }
        }
        assert_eq!(images.len(), 13);
    }

    #[test]
    fn pollak_examples() {
        assert_eq!(pollak_reduce(&[3, 3]).unwrap(), ws(&[1, 1]));
        for a in enumerate_pf(4) {
            assert_eq!(pollak_reduce(&a).unwrap(), a);
        }
        let mut fibers = std::collections::BTreeMap::new();
        for w in words_in_box(2, 3) {
            *fibers.entry(pollak_reduce(&w).unwrap()).or_insert(0) += 1;
        }
        assert_eq!(fibers.len(), 3);
        assert!(fibers.values().all(|&c| c == 3));
    }

    #[test]
    fn hess_and_area() {
        let h: Vec<Vec<usize>> = hess_sequences(3).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(h, vec![vec![1, 1, 1], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0], vec![3, 0, 0]]);
        assert!(!is_hess(&[0, 3, 0]));
        assert_eq!(area(&[1, 1, 2, 2, 2, 6, 7, 7]).unwrap(), 8);
        assert_eq!(area(&[1, 2, 3, 4]).unwrap(), 0);
        assert_eq!(area(&[1, 1, 1, 1]).unwrap(), 6);
        assert!(area(&[2, 2]).is_err());
    }
}
