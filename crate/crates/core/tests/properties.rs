use proptest::prelude::*;

use hodge_core::characters;
use hodge_core::hurwitz::ExpSum;
use hodge_core::kernel::{expand_at_unity, laurent_at_unity};
use hodge_core::partitions::{enumerate, Partition};
use hodge_core::wfunctions;
use hodge_core::{GaussianRational, LaurentPoly, Rational, RationalFunction, Ring, Series};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn laurent() -> impl Strategy<Value = LaurentPoly<Rational>> {
    prop::collection::vec((-4i64..=4, rational()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly<Rational>> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Series with positive valuation, known to `order`.
fn small_series(order: i64) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(rational(), 1..=order as usize).prop_map(move |c| Series::new(1, c, order))
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 0..=max).prop_map(|v| Partition::from_multiset(v).unwrap())
}

fn partition_of(d: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate(d);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn expsum() -> impl Strategy<Value = ExpSum> {
    prop::collection::vec((-3i64..=3, rational()), 0..4).prop_map(|terms| {
        let mut e = ExpSum::zero();
        for (f, a) in terms {
            e.add_term(f, &a);
        }
        e
    })
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() - &a, Rational::zero());
        if let Some(inv) = a.try_inverse() {
            prop_assert_eq!(a * &inv, Rational::one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!((a.clone() * &b).conj(), a.conj() * &b.conj());
        prop_assert_eq!((a.clone() * &b).norm(), a.norm() * &b.norm());
        if let Some(inv) = a.try_inverse() {
            prop_assert_eq!(a * &inv, GaussianRational::one());
        }
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!((a.clone() * &b).derivative(), a.derivative() * &b + &(a.clone() * &b.derivative()));
    }

    #[test]
    fn laurent_terms_are_canonical(a in laurent()) {
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        let rebuilt = LaurentPoly::from_terms(a.terms().map(|(e, c)| (e, c.clone())).chain([(7, Rational::zero())]));
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn rational_function_canonical_form(f in rational_function(), k in nonzero_laurent()) {
        let again = RationalFunction::new(f.num().clone() * &k, f.den().clone() * &k).unwrap();
        prop_assert_eq!(&again, &f);
        let twice = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(twice, f);
    }

    #[test]
    fn rational_function_field(f in rational_function(), g in rational_function(), h in rational_function()) {
        prop_assert_eq!(f.clone() * &(g.clone() + &h), f.clone() * &g + &(f.clone() * &h));
        prop_assert_eq!((f.clone() - &g) + &g, f.clone());
        if let Some(inv) = f.try_inverse() {
            prop_assert_eq!(f * &inv, RationalFunction::one());
        }
    }

    #[test]
    fn expansion_at_unity_is_a_homomorphism(a in laurent(), b in laurent()) {
        let order = 5;
        let ea = laurent_at_unity(&a, order);
        let eb = laurent_at_unity(&b, order);
        // Products of series with zero low terms may be known beyond `order`.
        prop_assert_eq!(laurent_at_unity(&(a.clone() * &b), order), ea.mul(&eb).truncate(order));
        prop_assert_eq!(laurent_at_unity(&(a.clone() + &b), order), ea.add(&eb));
        let ra = expand_at_unity(&RationalFunction::from_poly(a), order).unwrap();
        prop_assert_eq!(ra, ea);
    }

    #[test]
    fn expansion_of_quotient(num in laurent(), den in nonzero_laurent()) {
        let f = RationalFunction::new(num.clone(), den.clone()).unwrap();
        let order = 4;
        let ef = expand_at_unity(&f, order).unwrap();
        let lhs = ef.mul(&laurent_at_unity(&den, order + 8));
        let rhs = laurent_at_unity(&num, lhs.order());
        prop_assert_eq!(lhs.truncate(rhs.order().min(lhs.order())), rhs.truncate(rhs.order().min(lhs.order())));
    }

    #[test]
    fn series_exp_is_additive(a in small_series(6), b in small_series(6)) {
        let lhs = a.add(&b).exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_exp_log_round_trip(a in small_series(6)) {
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a.clone());
        let one_plus = Series::one(6).add(&a);
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
    }

    #[test]
    fn partition_basics(mu in partition(7)) {
        let conj = mu.conjugate();
        prop_assert_eq!(conj.conjugate(), mu.clone());
        prop_assert_eq!(conj.size(), mu.size());
        prop_assert_eq!(conj.kappa(), -mu.kappa());
        prop_assert_eq!(mu.hooks().len(), mu.size());
        prop_assert_eq!(mu.contents().iter().sum::<i64>() * 2, mu.kappa());
        let parsed: Partition = mu.to_string().parse().unwrap();
        prop_assert_eq!(parsed, mu.clone());
        prop_assert!(mu.parts().windows(2).all(|w| w[0] >= w[1]));
        let fact: u128 = (1..=mu.size() as u128).product();
        prop_assert_eq!(mu.z() * characters::class_size(&mu), fact);
    }

    #[test]
    fn partition_union_is_additive(a in partition(4), b in partition(4)) {
        let u = a.union(&b);
        prop_assert_eq!(u.size(), a.size() + b.size());
        prop_assert_eq!(u.len(), a.len() + b.len());
        prop_assert!(a.is_contained_in(&u));
    }

    #[test]
    fn character_rows_are_orthonormal(nu in (1usize..=7).prop_flat_map(partition_of)) {
        let table = characters::table(nu.size());
        let row = table.row(&nu).unwrap();
        let mut s = Rational::zero();
        for (c, mu) in row.iter().zip(table.basis()) {
            s += &Rational::from_big((c * c).into(), mu.z().into());
        }
        prop_assert_eq!(s, Rational::one());
        prop_assert_eq!(characters::dim(&nu) as i64, table.value(&nu, &Partition::column(nu.size())).unwrap());
    }

    #[test]
    fn characters_ignore_cycle_order(
        (nu, mu, seed) in (1usize..=7).prop_flat_map(|d| (partition_of(d), partition_of(d), any::<u64>()))
    ) {
        let mut cycles = mu.parts().to_vec();
        // Deterministic shuffle from the seed.
        let mut s = seed;
        for i in (1..cycles.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            cycles.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(characters::chi_with_cycle_order(&nu, &cycles), characters::chi(&nu, &mu).unwrap());
    }

    #[test]
    fn w_routes_agree(mu in (0usize..=3).prop_flat_map(partition_of), nu in (0usize..=3).prop_flat_map(partition_of)) {
        let def = wfunctions::w_munu_def(&mu, &nu);
        prop_assert_eq!(&def, &wfunctions::w_munu_skew(&mu, &nu));
        prop_assert_eq!(&def, &wfunctions::w_munu_skew(&nu, &mu));
    }

    #[test]
    fn expsum_derivative_is_a_derivation(a in expsum(), b in expsum()) {
        prop_assert_eq!(a.mul(&b).derivative(), a.derivative().mul(&b).add(&a.mul(&b.derivative())));
        prop_assert_eq!(a.reflect().reflect(), a.clone());
    }

    #[test]
    fn expsum_series_is_a_homomorphism(a in expsum(), b in expsum(), c in gaussian()) {
        let order = 5;
        prop_assert_eq!(a.mul(&b).to_series(&c, order), a.to_series(&c, order).mul(&b.to_series(&c, order)).truncate(order));
        prop_assert_eq!(a.at_zero(), a.moment(0));
    }
}
