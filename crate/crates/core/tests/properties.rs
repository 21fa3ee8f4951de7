use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tm_measures::attractors::{gamma_lower_bound, is_attractor, k_attractor, AttractorChecker, AttractorSet};
use tm_measures::complexity::profile;
use tm_measures::factorizations::{bwt, lyndon_factorize, lz_factorize};
use tm_measures::words::{complement, occurrences, tm};
use tm_measures::{reference, Word};

fn word(alphabet: &'static [u8], max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(proptest::sample::select(alphabet), 1..=max).prop_map(Word::new)
}

proptest! {
    #[test]
    fn complexity_matches_brute_force(w in word(b"ab", 64)) {
        prop_assert_eq!(profile(&w).unwrap().counts, reference::complexity_counts(&w));
    }

    #[test]
    fn lz_matches_quadratic_scan(w in word(b"abcd", 120)) {
        let f = lz_factorize(&w).unwrap();
        prop_assert_eq!(&f, &reference::lz_factorize(&w));
        let mut next = 1;
        for factor in &f.factors {
            prop_assert_eq!(factor.start, next);
            if let Some(src) = factor.source {
                prop_assert!(src < factor.start);
            } else {
                prop_assert_eq!(factor.length, 1);
            }
            next += factor.length;
        }
        prop_assert_eq!(f.decode(|i| w.symbol(i).unwrap()), w.as_bytes().to_vec());
    }

    #[test]
    fn lyndon_is_the_unique_factorization(w in word(b"abc", 14)) {
        let duval = lyndon_factorize(&w).unwrap().factors;
        prop_assert_eq!(reference::lyndon_factorizations(&w), vec![duval]);
    }

    #[test]
    fn bwt_matches_naive(w in word(b"abc", 60)) {
        let fast = bwt(&w).unwrap();
        prop_assert_eq!(&fast, &reference::bwt(&w));
        let mut a = fast.transformed.as_bytes().to_vec();
        let mut b = w.as_bytes().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn attractor_verifiers_agree(
        w in word(b"ab", 40),
        raw in proptest::collection::vec(1usize..=40, 0..12),
    ) {
        let positions = raw.into_iter().filter(|&p| p <= w.len()).collect();
        let g = AttractorSet::new(positions, w.len()).unwrap();
        prop_assert_eq!(is_attractor(&w, &g).unwrap(), reference::is_attractor(&w, &g).unwrap());
    }

    #[test]
    fn full_position_set_is_an_attractor(w in word(b"abc", 50)) {
        let g = AttractorSet::new((1..=w.len()).collect(), w.len()).unwrap();
        prop_assert!(is_attractor(&w, &g).unwrap().is_attractor);
    }
}

#[test]
fn complexity_on_thue_morse_matches_brute_force() {
    for n in 0..=10 {
        let t = tm(n);
        assert_eq!(profile(&t).unwrap().counts, reference::complexity_counts(&t), "n={n}");
    }
}

/// Factors of length >= 2^(n-2) + 1 occur exactly once in t_n.
#[test]
fn long_factors_are_unique() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 3..=10u32 {
        let t = tm(n);
        let min = (1usize << (n - 2)) + 1;
        for _ in 0..50 {
            let len = rng.gen_range(min..=t.len());
            let start = rng.gen_range(1..=t.len() - len + 1);
            let x = t.slice(start, start + len - 1);
            assert_eq!(occurrences(&t, x).unwrap().len(), 1, "n={n} start={start} len={len}");
        }
    }
}

/// t_k·t̄_k = t_{k-1}·t̄_{k-2}·t_{k-2}·t̄_{k-2}·t_{k-2}·t_{k-1}.
#[test]
fn center_shift_identity() {
    for k in 2..=12 {
        let c = |w: &Word| complement(w).unwrap();
        let (t1, t2) = (tm(k - 1), tm(k - 2));
        let lhs = tm(k).concat(&c(&tm(k)));
        let rhs = t1.concat(&c(&t2)).concat(&t2).concat(&c(&t2)).concat(&t2).concat(&t1);
        assert_eq!(lhs, rhs, "k={k}");
    }
}

/// δ(t_n) > 3 and K_n together pin γ(t_n) = 4 without a search.
#[test]
fn gamma_is_four_by_delta_bound() {
    for n in 6..=9 {
        let t = tm(n);
        assert_eq!(gamma_lower_bound(&t).unwrap(), 4);
        assert!(is_attractor(&t, &k_attractor(n).unwrap()).unwrap().is_attractor);
    }
}

/// Dropping any single position of K_n breaks the attractor property.
#[test]
fn k_attractor_is_minimal() {
    for n in 4..=8 {
        let t = tm(n);
        let checker = AttractorChecker::new(&t);
        let k = k_attractor(n).unwrap();
        for &p in k.positions() {
            let check = checker.check(&k.without(p)).unwrap();
            assert!(!check.is_attractor, "K_{n} without {p} still verifies");
            assert_eq!(check, reference::is_attractor(&t, &k.without(p)).unwrap());
        }
    }
}
