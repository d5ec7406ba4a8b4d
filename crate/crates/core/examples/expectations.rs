//! Expected values of k-transitive statistics, and the theorem relating them.

use parkstat::expectations::{expectation, f_chi, verify_k_transitive_theorem, KTransitiveFn, WordFamily};
use parkstat::qalgebra::rational_string;
use parkstat::words::Word;

fn main() {
    let fams = [WordFamily::Sn, WordFamily::Pf, WordFamily::Cayley, WordFamily::Upf];
    for chi in KTransitiveFn::builtins() {
        for fam in &fams {
            let e = expectation(fam, 4, |w| f_chi(w, &chi).unwrap()).unwrap();
            let r = verify_k_transitive_theorem(fam, 4, &chi).unwrap();
            println!("E[{}] on {fam}_4 = {:<6} {:?}", chi.name(), rational_string(&e), r.status);
        }
    }

    let orbit = WordFamily::Orbit(Word::new(vec![1, 1, 2, 3]).unwrap());
    println!("{}", verify_k_transitive_theorem(&orbit, 0, &KTransitiveFn::tie()).unwrap());
}
