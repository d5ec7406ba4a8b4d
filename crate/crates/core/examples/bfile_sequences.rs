//! Prints a few sequences in b-file form and diffs one against a fixture.

use parkstat::cli::{cmd_bfile, sequence_offset, sequence_term, SEQUENCES};

fn main() {
    for seq in SEQUENCES {
        let from = sequence_offset(seq).unwrap();
        let terms: Vec<String> = (from..=5).map(|n| sequence_term(seq, n).unwrap().to_string()).collect();
        println!("{seq:<13} from {from}: {}", terms.join(", "));
    }
    let path = std::env::temp_dir().join("parkstat-fubini.b");
    std::fs::write(&path, "0 1\n1 1\n2 3\n3 13\n4 74\n").unwrap();
    let out = cmd_bfile("fubini", 5, Some(&path)).unwrap();
    println!("{}", out.note.unwrap());
    std::fs::remove_file(path).unwrap();
}
