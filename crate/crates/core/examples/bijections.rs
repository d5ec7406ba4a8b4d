//! The three maps onto Cayley permutations and the Pollak fibers.

use std::collections::BTreeMap;

use parkstat::parking::{eta, eta_inverse, pollak_reduce, psi, psi_inverse};
use parkstat::words::{inversion_set, words_in_box, Permutation};

fn main() {
    let a = [1, 1, 3, 3, 5];
    let w = psi(&a).unwrap();
    println!("psi{a:?} = {w}, same inversions: {}", inversion_set(&a) == inversion_set(&w));
    assert_eq!(psi_inverse(&w).unwrap().entries(), &a);

    let sigma = Permutation::new(vec![2, 1, 3, 4]).unwrap();
    let asc = sigma.inverse().ascent_set();
    let w = eta(&sigma, &asc).unwrap();
    println!("eta({sigma}, {asc:?}) = {w}");
    assert_eq!(eta_inverse(&w).unwrap(), (sigma, asc));

    let n = 3;
    let mut fibers: BTreeMap<_, usize> = BTreeMap::new();
    for w in words_in_box(n, n as u32 + 1) {
        *fibers.entry(pollak_reduce(&w).unwrap()).or_default() += 1;
    }
    println!("{} parking functions, fiber sizes {:?}", fibers.len(), fibers.values().collect::<std::collections::BTreeSet<_>>());
}
