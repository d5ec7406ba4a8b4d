//! Parking function symmetric functions in the complete homogeneous basis.

use parkstat::parking::enumerate_pf;
use parkstat::symfunc::{
    frobenius_of_word_set, pf_symfunc, ps, upf_symfunc, upf_symfunc_graded, verify_pf_sym_gf, verify_upf_graded_gf,
};
use parkstat::words::Word;

fn main() {
    for n in 1..=4 {
        println!("PF_{n}(x)    = {}", pf_symfunc(n));
        println!("UPF_{n}(x)   = {}", upf_symfunc(n));
        println!("UPF_{n}(x;t) = {}", upf_symfunc_graded(n));
    }
    let words: Vec<Word> = enumerate_pf(3).collect();
    let frob = frobenius_of_word_set(&words, 3).unwrap();
    assert_eq!(frob, pf_symfunc(3));
    println!("ps(PF_3) = {}", ps(&frob));
    println!("{}", verify_pf_sym_gf(5));
    println!("{}", verify_upf_graded_gf(5));
}
