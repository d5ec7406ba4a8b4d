//! Exact algebra in `q`: integer polynomials, rational functions, generic
//! polynomials and truncated power series, q-numbers, and the checkers for
//! the q-generating-function identities.

pub mod bipoly;
pub mod identities;
pub mod intpoly;
pub mod poly;
pub mod qnumbers;
pub mod qrat;
pub mod ring;
pub mod series;

pub use bipoly::BiPoly;
pub use intpoly::IntPoly;
pub use poly::{Poly, TPoly};
pub use qrat::QRat;
pub use ring::{rat, rational_string, Field, Rational, Ring};
pub use series::TruncSeries;
pub use identities::{
    a_inv_asc, pf_q, pf_q_brute, upf_q, upf_q_brute, verify_a_at_2, verify_pf_gf, verify_pf_gf_with,
    verify_q_one_shadow, verify_stanley_gf, verify_stanley_gf_with, verify_upf_gf, verify_upf_gf_with,
};
pub use qnumbers::{big_exp_q_series, exp_q_series, q_binom, q_factorial, q_int, q_multinomial, q_pochhammer};
