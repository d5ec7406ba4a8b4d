use parkstat::qalgebra::{a_inv_asc, pf_q, q_binom, upf_q, verify_pf_gf, verify_stanley_gf, verify_upf_gf};

fn main() {
    for n in 1..=5 {
        println!("PF_{n}(q)  = {}", pf_q(n));
        println!("UPF_{n}(q) = {}", upf_q(n));
    }
    println!("[5 choose 2]_q = {}", q_binom(5, 2).unwrap());
    println!("A_3(q,t) = {}", a_inv_asc(3));
    println!("A_4(q,2) = {}", a_inv_asc(4).eval_t(2));
    for r in [verify_pf_gf(6), verify_upf_gf(6), verify_stanley_gf(4)] {
        println!("{r}");
    }
}
