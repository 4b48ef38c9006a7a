use proptest::prelude::*;

use kacmax::affine::{classical_apply, CartanData};
use kacmax::paths::LatticePath;
use kacmax::patterns::{bjs_path_to_perm, bjs_perm_to_path, longest_decreasing, Permutation};
use kacmax::tuples::{enumerate_s_bruteforce, max_ell};

fn quadratic_lds(w: &[usize]) -> usize {
    let mut best = vec![1; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] > w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn path(max_ell: usize) -> impl Strategy<Value = LatticePath> {
    (1..=max_ell).prop_flat_map(|ell| {
        proptest::collection::vec(0..=ell, ell).prop_map(move |mut h| {
            h.sort_unstable();
            LatticePath::from_heights(ell, &h).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn patience_sorting_matches_dp(w in permutation(12)) {
        prop_assert_eq!(longest_decreasing(&w), quadratic_lds(w.values()));
    }

    #[test]
    fn bjs_inverts_on_321_avoiders(w in permutation(10)) {
        if longest_decreasing(&w) <= 2 {
            let p = bjs_perm_to_path(&w).unwrap();
            prop_assert!(p.is_weakly_below_diagonal());
            prop_assert_eq!(bjs_path_to_perm(&p).unwrap(), w);
        } else {
            prop_assert!(bjs_perm_to_path(&w).is_err());
        }
    }

    #[test]
    fn path_encodings_roundtrip(p in path(9)) {
        let ell = p.ell();
        prop_assert_eq!(LatticePath::from_heights(ell, &p.heights()).unwrap(), p.clone());
        prop_assert_eq!(LatticePath::from_region_above(ell, &p.region_above()).unwrap(), p.clone());
        prop_assert_eq!(p.to_string().parse::<LatticePath>().unwrap(), p);
    }

    #[test]
    fn max_ell_is_tight(c in 1u64..40, d in 1u64..40, e in 0u64..60, f in 0u64..60) {
        let ceil = |a: i64, b: i64| a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0);
        let fits = |l: i64| ceil(l, c as i64) + ceil(l - e as i64, d as i64) <= f as i64;
        let l = max_ell(c, d, e, f).unwrap() as i64;
        prop_assert!(fits(l));
        prop_assert!(!fits(l + 1));
    }

    #[test]
    fn inequality_system_members_satisfy_it(n in 2usize..8, s_pick in 0usize..8, x1 in 0u64..3, xn1 in 0u64..3) {
        let s = s_pick % n;
        let cd = CartanData::new(n).unwrap();
        for x in enumerate_s_bruteforce(n, s, x1, xn1).unwrap() {
            prop_assert_eq!(x.get(1), x1);
            prop_assert_eq!(x.get(n - 1), xn1);
            for (i, v) in classical_apply(&cd, &x).unwrap().into_iter().enumerate() {
                prop_assert!(v >= -i64::from(i + 1 == s));
            }
        }
    }
}
