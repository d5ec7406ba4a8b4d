use parkstat::expectations::{table1, table1_closed_form, TABLE1_ROWS};
use parkstat::qalgebra::rational_string;

fn main() {
    let n = 4;
    println!("{:<6} {:>8} {:>8}", "row", "S_4", "PF_4");
    for row in TABLE1_ROWS {
        let sn = table1_closed_form(row, false, n).unwrap();
        let pf = table1_closed_form(row, true, n).unwrap();
        println!("{row:<6} {:>8} {:>8}", rational_string(&sn), rational_string(&pf));
    }
    let s = table1(n).unwrap();
    println!("enumeration agrees: {}", s.ok());
}
