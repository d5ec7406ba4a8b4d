use parkstat::cli::suites::sample_forest;
use parkstat::forests::rho_inverse;

fn main() {
    let f = sample_forest();
    println!("forest   {f}");
    println!("preorder {:?}", f.preorder_word());
    println!("rho      {}", f.rho());
    println!("pinv {} area {} ancestor inversions {}", f.pinv(), f.area_forest(), f.ancestor_inv());
    assert_eq!(rho_inverse(&f.rho()).unwrap(), f);

    let g = f.sn_act(3).unwrap();
    println!("s_3 . F  {g}");
    println!("rho      {}", g.rho());
}
