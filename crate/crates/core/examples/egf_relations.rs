use parkstat::expectations::{egf_triple, egf_verify, upf_inv_egf, KTransitiveFn, WordFamily};
use parkstat::qalgebra::rational_string;

fn main() {
    let t = egf_triple(&WordFamily::Upf, &KTransitiveFn::inv(), 6).unwrap();
    let coeffs: Vec<String> = t.f.coeffs().iter().map(rational_string).collect();
    println!("F(z) for inv on UPF: {}", coeffs.join(", "));
    let closed: Vec<String> = upf_inv_egf(6).coeffs().iter().map(rational_string).collect();
    println!("closed form:         {}", closed.join(", "));
    for r in egf_verify(&WordFamily::Cayley, &KTransitiveFn::tie(), 6).unwrap().reports {
        println!("{r}");
    }
}
