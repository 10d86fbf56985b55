//! Closed forms and the shortest-path engine against slow, direct oracles.

use std::collections::BTreeSet;

use apery_core::geo::{min_digit_sum, r_adic};
use apery_core::ideal::{Monomial, Polynomial};
use apery_core::semigroup::gcd;
use apery_core::tangent_cone::Ladder;
use apery_core::{Gamma4Params, GeoParams, NumericalSemigroup};
use proptest::prelude::*;

/// Membership by forward scan.
fn members(gens: &[i64], upto: i64) -> Vec<bool> {
    let mut m = vec![false; upto as usize + 1];
    m[0] = true;
    for x in 1..=upto {
        m[x as usize] = gens.iter().any(|&g| g <= x && m[(x - g) as usize]);
    }
    m
}

/// Least member of each residue class modulo `a`, by scanning upward.
fn naive_apery(gens: &[i64], a: i64) -> Vec<i64> {
    let bound = a * gens.iter().max().unwrap() * 2;
    let m = members(gens, bound);
    (0..a)
        .map(|r| (r..=bound).step_by(a as usize).find(|&x| m[x as usize]).expect("window"))
        .collect()
}

/// Maximal factorization length by direct recursion with memo.
fn max_lengths(gens: &[i64], upto: i64) -> Vec<Option<u64>> {
    let mut l: Vec<Option<u64>> = vec![None; upto as usize + 1];
    l[0] = Some(0);
    for x in 1..=upto {
        l[x as usize] = gens
            .iter()
            .filter(|&&g| g <= x)
            .filter_map(|&g| l[(x - g) as usize])
            .max()
            .map(|v| v + 1);
    }
    l
}

/// `min{x ≡ r : x ∈ nM}` per residue, for `n = 0..rows`.
fn naive_table(gens: &[i64], rows: usize) -> Vec<Vec<i64>> {
    let a = gens[0];
    let bound = a * gens.iter().max().unwrap() * (rows as i64 + 3);
    let l = max_lengths(gens, bound);
    (0..rows)
        .map(|n| {
            (0..a)
                .map(|r| {
                    (r..=bound)
                        .step_by(a as usize)
                        .find(|&x| l[x as usize].is_some_and(|v| v >= n as u64))
                        .expect("window")
                })
                .collect()
        })
        .collect()
}

fn semigroup_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..40, 2..5)
        .prop_map(|mut v| {
            v.sort_unstable();
            v.dedup();
            v
        })
        .prop_filter("gcd 1, at least two", |v| {
            v.len() >= 2 && v.iter().fold(0, |g, &x| gcd(g, x)) == 1
        })
}

proptest! {
    #[test]
    fn apery_matches_scan(gens in semigroup_strategy(), pick in 0usize..4) {
        let s = NumericalSemigroup::new(gens.clone()).unwrap();
        let a = s.generators()[pick % s.generators().len()];
        let ap = s.apery_set(a).unwrap();
        prop_assert_eq!(ap.elements().to_vec(), naive_apery(s.generators(), a));
    }

    #[test]
    fn pf_matches_definition(gens in semigroup_strategy()) {
        let s = NumericalSemigroup::new(gens).unwrap();
        let g = s.generators().to_vec();
        let f = s.frobenius();
        let m = members(&g, f + 2 * g.last().unwrap());
        let inside = |x: i64| x >= 0 && m[x as usize];
        prop_assert!(!inside(f));
        prop_assert!((f + 1..f + g[0]).all(inside));

        let pf: BTreeSet<i64> = (1..=f)
            .filter(|&x| !inside(x) && g.iter().all(|&gi| inside(x + gi)))
            .collect();
        prop_assert_eq!(&s.pseudo_frobenius(), &pf);

        // maximals of Ap(S, a) under the semigroup order, pairwise
        let ap = s.apery_set(g[0]).unwrap();
        let max: BTreeSet<i64> = ap
            .elements()
            .iter()
            .filter(|&&w| ap.elements().iter().all(|&v| v <= w || !inside(v - w)))
            .map(|&w| w - g[0])
            .collect();
        prop_assert_eq!(s.pseudo_frobenius(), max);
    }

    #[test]
    fn table_matches_powers(gens in semigroup_strategy()) {
        let s = NumericalSemigroup::new(gens).unwrap();
        let t = s.apery_table();
        prop_assert_eq!(t.rows().to_vec(), naive_table(s.generators(), t.rows().len()));
        prop_assert!(t.check_invariants().is_ok());
    }

    #[test]
    fn factorizations_are_exhaustive(gens in semigroup_strategy(), x in 0i64..120) {
        let s = NumericalSemigroup::new(gens).unwrap();
        let g = s.generators();
        let facts = s.factorizations(x);
        for f in &facts {
            prop_assert_eq!(f.value(g), x);
        }
        let distinct: BTreeSet<_> = facts.iter().map(|f| f.exponents.clone()).collect();
        prop_assert_eq!(distinct.len(), facts.len());
        // count by a coin-change recursion
        fn count(g: &[i64], x: i64) -> usize {
            match g.split_last() {
                None => usize::from(x == 0),
                Some((&last, rest)) => (0..=x / last).map(|k| count(rest, x - k * last)).sum(),
            }
        }
        prop_assert_eq!(facts.len(), count(g, x));
    }

    #[test]
    fn gamma4_closed_forms(a in 7i64..40, d in 1i64..30) {
        prop_assume!(gcd(a, d) == 1);
        let p = Gamma4Params::new(a, d).unwrap();
        let g = p.generators();
        prop_assert_eq!(p.apery_set().elements().to_vec(), naive_apery(&g, a));
        let t = p.apery_table();
        prop_assert_eq!(t.rows().to_vec(), naive_table(&g, t.rows().len()));
        prop_assert_eq!(p.tk().iter().sum::<u64>(), a as u64);
    }

    #[test]
    fn greedy_digits_are_minimal(i in 0u64..500, r in 2u64..5, n in 1usize..4) {
        let d = r_adic(i, r, n).unwrap();
        prop_assert_eq!(d.value(r), i);
        prop_assert_eq!(d.digit_sum(), min_digit_sum(i, r, n).unwrap());
    }

    #[test]
    fn geo_closed_forms(a in 7i64..25, r in 2i64..4, h in 1i64..3, n in 1i64..3, extra in 1i64..12) {
        let d = h * n * (r - 1) + extra;
        prop_assume!(gcd(a, d) == 1 && gcd(a, r) == 1);
        if let Ok(p) = GeoParams::new(a, d, r, h, n) {
            let g = p.generators();
            prop_assert_eq!(p.apery_set().elements().to_vec(), naive_apery(&g, a));
            let t = p.apery_table();
            prop_assert_eq!(t.rows().to_vec(), naive_table(&g, t.rows().len()));
        }
    }

    #[test]
    fn ladder_stats_shift_invariant(steps in prop::collection::vec(0i64..3, 0..12), base in -50i64..50, c in -100i64..100) {
        let mut v = vec![base];
        for s in steps {
            v.push(v.last().unwrap() + s * 7);
        }
        let shifted: Vec<i64> = v.iter().map(|x| x + c).collect();
        prop_assert_eq!(Ladder::new(v).unwrap().stats(), Ladder::new(shifted).unwrap().stats());
    }
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform4(0u32..3), -3i64..4), 0..5)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(e, c)| (Monomial(e), c))))
}

proptest! {
    #[test]
    fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &(-&q), &p - &q);
        prop_assert!(p.terms().all(|(_, &c)| c != 0));
    }
}
