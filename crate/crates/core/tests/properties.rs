use proptest::prelude::*;

use parkstat::expectations::{f_chi, KTransitiveFn};
use parkstat::forests::rho_inverse;
use parkstat::parking::{area, eta, eta_inverse, is_parking_function, is_upf, park, pollak_reduce, psi, psi_inverse};
use parkstat::qalgebra::{Rational, TruncSeries};
use parkstat::symfunc::{h_of, multiply};
use parkstat::words::{content, inversion_set, is_cayley, statistic, Permutation, StatisticId, Word};

fn word(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_len).prop_flat_map(|n| prop::collection::vec(1..=n as u32 + 1, n))
}

/// A parking function of length `n` via the Pollak map on `[n+1]^n`.
fn parking_function(max_len: usize) -> impl Strategy<Value = Word> {
    word(max_len).prop_map(|v| pollak_reduce(&v).unwrap())
}

fn cayley(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_len).prop_flat_map(|n| prop::collection::vec(1..=n as u32, n)).prop_map(|v| {
        let mut values = v.clone();
        values.sort_unstable();
        values.dedup();
        v.iter().map(|x| values.binary_search(x).unwrap() as u32 + 1).collect()
    })
}

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn stat(w: &[u32], id: StatisticId) -> u64 {
    statistic(w, &id).unwrap()
}

proptest! {
    #[test]
    fn inversions_and_descents_split_by_size(v in word(9)) {
        prop_assert_eq!(stat(&v, StatisticId::Inv), stat(&v, StatisticId::Sinv) + stat(&v, StatisticId::Binv));
        prop_assert_eq!(stat(&v, StatisticId::Des), stat(&v, StatisticId::Sdes) + stat(&v, StatisticId::Bdes));
        prop_assert_eq!(
            stat(&v, StatisticId::Des) + stat(&v, StatisticId::Asc) + stat(&v, StatisticId::Tie),
            v.len() as u64 - 1
        );
    }

    #[test]
    fn parking_matches_sorted_criterion(v in word(8)) {
        let n = v.len();
        let in_range = v.iter().all(|&x| x as usize <= n);
        let mut s = v.clone();
        s.sort_unstable();
        let sorted_ok = in_range && s.iter().enumerate().all(|(i, &x)| x as usize <= i + 1);
        prop_assert_eq!(is_parking_function(&v), sorted_ok);
        if in_range {
            prop_assert_eq!(park(&v).unwrap().is_some(), sorted_ok);
        } else {
            prop_assert!(park(&v).is_err());
        }
    }

    #[test]
    fn pollak_is_constant_on_cyclic_shifts(v in word(8)) {
        let m = v.len() as u32 + 1;
        let shifted: Vec<u32> = v.iter().map(|&x| x % m + 1).collect();
        let a = pollak_reduce(&v).unwrap();
        prop_assert!(is_parking_function(&a));
        prop_assert_eq!(a, pollak_reduce(&shifted).unwrap());
    }

    #[test]
    fn rho_round_trips_and_transports_statistics(a in parking_function(8)) {
        let f = rho_inverse(&a).unwrap();
        prop_assert_eq!(f.rho(), a.clone());
        prop_assert_eq!(f.pinv(), stat(&a, StatisticId::Inv));
        prop_assert_eq!(f.area_forest(), area(&a).unwrap());
        prop_assert_eq!(f.parental_content(), content(&a).padded(a.len()));
    }

    #[test]
    fn forest_action_is_an_involution_preserving_area(a in parking_function(7), i in 1usize..7) {
        let f = rho_inverse(&a).unwrap();
        prop_assume!(i < f.n());
        let g = f.sn_act(i).unwrap();
        prop_assert_eq!(g.sn_act(i).unwrap(), f.clone());
        prop_assert_eq!(g.area_forest(), f.area_forest());
        prop_assert_eq!(g.rho(), a.swap_adjacent(i));
    }

    #[test]
    fn psi_round_trips_on_cayley_permutations(w in cayley(8)) {
        prop_assert!(is_cayley(&w));
        let a = psi_inverse(&w).unwrap();
        prop_assert!(is_upf(&a));
        let back = psi(&a).unwrap();
        prop_assert_eq!(back.entries(), &w[..]);
        prop_assert_eq!(inversion_set(&a), inversion_set(&w));
    }

    #[test]
    fn eta_round_trips_and_keeps_inv(sigma in permutation(8), mask in any::<u32>()) {
        let asc = sigma.inverse().ascent_set();
        let s: Vec<usize> = asc.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a).collect();
        let w = eta(&sigma, &s).unwrap();
        prop_assert!(is_cayley(&w));
        prop_assert_eq!(stat(&w, StatisticId::Inv), stat(sigma.entries(), StatisticId::Inv));
        prop_assert_eq!(eta_inverse(&w).unwrap(), (sigma, s));
    }

    #[test]
    fn f_chi_is_linear(v in word(7)) {
        prop_assume!(v.len() >= 2);
        let (a, b) = (KTransitiveFn::inv(), KTransitiveFn::tie());
        let sum = a.plus(&b).unwrap();
        prop_assert_eq!(f_chi(&v, &sum).unwrap(), f_chi(&v, &a).unwrap() + f_chi(&v, &b).unwrap());
        prop_assert_eq!(f_chi(&v, &a).unwrap(), Rational::from_integer(stat(&v, StatisticId::Inv).into()));
    }

    #[test]
    fn series_reversion_inverts_composition(c in prop::collection::vec(-5i64..5, 5)) {
        let order = 6;
        let mut coeffs = vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())];
        coeffs.extend(c.iter().map(|&x| Rational::from_integer(x.into())));
        let f = TruncSeries::new(coeffs, order);
        let g = f.invert_composition().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), TruncSeries::z(order));
    }

    #[test]
    fn complete_products_commute(p in prop::collection::vec(1usize..4, 1..4), q in prop::collection::vec(1usize..4, 1..4)) {
        let joined: Vec<usize> = p.iter().chain(&q).copied().collect();
        prop_assert_eq!(multiply(&h_of(&p), &h_of(&q)), multiply(&h_of(&q), &h_of(&p)));
        prop_assert_eq!(multiply(&h_of(&p), &h_of(&q)), h_of(&joined));
    }
}
