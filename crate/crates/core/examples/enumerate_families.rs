//! Sizes of the word families against their counting formulas.

use parkstat::combin::{fubini, parking_count};
use parkstat::parking::{enumerate_pf, enumerate_upf};
use parkstat::words::Words;

fn main() {
    println!("{:>2} {:>8} {:>8} {:>8} {:>8}", "n", "PF", "(n+1)^", "UPF", "Fub");
    for n in 0..=6 {
        let pf = enumerate_pf(n).count();
        let upf = enumerate_upf(n).count();
        assert_eq!(upf, Words::cayley(n).count());
        println!("{n:>2} {pf:>8} {:>8} {upf:>8} {:>8}", parking_count(n), fubini(n));
    }
}
