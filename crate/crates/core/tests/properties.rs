use std::cmp::Ordering;

use involutive_core::division::{check_division_axioms, DivisionKind};
use involutive_core::groebner::monomial_ideal_dimension;
use involutive_core::poly::rat;
use involutive_core::{Monomial, MonomialOrder, Polynomial};
use proptest::prelude::*;

const N: usize = 3;
const ORDERS: [MonomialOrder; 3] = [MonomialOrder::DegRevLex, MonomialOrder::DegLex, MonomialOrder::Lex];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, N).prop_map(Monomial::from_exps)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop::sample::select(ORDERS.to_vec())
}

fn poly(ord: MonomialOrder) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, monomial()), 0..5)
        .prop_map(move |ts| Polynomial::from_terms(ts.into_iter().map(|(c, m)| (rat(c), m)).collect(), ord))
}

fn polys() -> impl Strategy<Value = (MonomialOrder, Polynomial, Polynomial, Polynomial)> {
    order().prop_flat_map(|o| (Just(o), poly(o), poly(o), poly(o)))
}

// Krull dimension of K[x]/I for a monomial ideal: the largest set of
// variables containing the support of no generator.
fn brute_force_dimension(gens: &[Monomial], n: usize) -> usize {
    (0u64..1 << n)
        .filter(|&s| gens.iter().all(|g| g.support().any(|i| s & (1 << i) == 0)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn orderings_are_admissible(ord in order(), a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
        prop_assert_eq!(ord.compare(&a, &b) == Ordering::Equal, a == b);
        prop_assert_ne!(ord.compare(&Monomial::one(N), &a), Ordering::Greater);
        prop_assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)), ord.compare(&a, &b));
        if ord.compare(&a, &b).is_lt() && ord.compare(&b, &c).is_lt() {
            prop_assert!(ord.compare(&a, &c).is_lt());
        }
    }

    #[test]
    fn first_variable_is_greatest(ord in order(), i in 1usize..N) {
        prop_assert_eq!(ord.compare(&Monomial::var(N, 0), &Monomial::var(N, i)), Ordering::Greater);
    }

    #[test]
    fn polynomial_ring_axioms((ord, f, g, h) in polys()) {
        prop_assert_eq!(f.add(&g, ord), g.add(&f, ord));
        prop_assert_eq!(f.mul(&g, ord), g.mul(&f, ord));
        prop_assert_eq!(f.add(&g, ord).add(&h, ord), f.add(&g.add(&h, ord), ord));
        prop_assert_eq!(f.mul(&g, ord).mul(&h, ord), f.mul(&g.mul(&h, ord), ord));
        prop_assert_eq!(f.mul(&g.add(&h, ord), ord), f.mul(&g, ord).add(&f.mul(&h, ord), ord));
        prop_assert!(f.sub(&f, ord).is_zero());
        prop_assert_eq!(f.mul(&Polynomial::constant(rat(1), N), ord), f.clone());
        if !f.is_zero() && !g.is_zero() {
            let fg = f.mul(&g, ord);
            prop_assert_eq!(fg.lm(), Some(&f.lm().unwrap().mul(g.lm().unwrap())));
        }
    }

    #[test]
    fn divisions_satisfy_the_axioms(set in prop::collection::vec(monomial(), 1..6)) {
        for kind in [DivisionKind::Janet, DivisionKind::Pommaret] {
            let bad = check_division_axioms(&set, kind);
            prop_assert!(bad.is_empty(), "{:?}: {:?}", kind, bad);
        }
    }

    #[test]
    fn monomial_dimension_matches_brute_force(set in prop::collection::vec(monomial(), 0..6)) {
        let gens: Vec<Monomial> = set.into_iter().filter(|m| !m.is_one()).collect();
        prop_assert_eq!(monomial_ideal_dimension(&gens, N), brute_force_dimension(&gens, N));
    }
}
