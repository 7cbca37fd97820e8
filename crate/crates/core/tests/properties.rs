use num_bigint::BigInt;
use proptest::prelude::*;
use toricg::compat::{compress, expand, is_compatible};
use toricg::nestohedra::{graphical, h_chordal};
use toricg::parking::{garsia_haiman, garsia_haiman_inverse, FiniteFunction};
use toricg::perms::{krattenthaler, krattenthaler_inverse, FsTree, Permutation};
use toricg::polyvec::{f_to_h, gamma_to_h, h_to_f, h_to_gamma, is_palindromic, IntPoly};
use toricg::words::{enumerate_words, SparseSet, Word, WordClass};
use toricg::{Error, Limits};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn function(max: usize) -> impl Strategy<Value = FiniteFunction> {
    (1..=max)
        .prop_flat_map(|n| prop::collection::vec(1..=n as u32, n))
        .prop_map(|v| FiniteFunction::new(v).unwrap())
}

fn int_vec(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(-50i64..50, len).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn sparse(lo: u32, hi: u32) -> impl Strategy<Value = SparseSet> {
    prop::collection::btree_set(lo..=hi.max(lo), 0..=4).prop_map(move |s| {
        let mut kept: Vec<u32> = Vec::new();
        for x in s {
            if x <= hi && kept.last().is_none_or(|&l| x > l + 1) {
                kept.push(x);
            }
        }
        SparseSet::new(kept).unwrap()
    })
}

proptest! {
    #[test]
    fn fs_tree_inorder_round_trip(p in permutation(12)) {
        let t = FsTree::of(&p);
        prop_assert_eq!(t.inorder(), p.clone());
        prop_assert_eq!(t.right_adjusted().is_right_adjusted(), true);
        for x in 1..=p.len() as u32 {
            prop_assert_eq!(t.phi(x).unwrap().phi(x).unwrap(), t.clone());
        }
    }

    #[test]
    fn krattenthaler_round_trip(p in permutation(10)) {
        match krattenthaler(&p) {
            Ok(w) => {
                prop_assert!(p.is_123_avoiding());
                prop_assert!(w.is_dyck());
                prop_assert_eq!(krattenthaler_inverse(&w).unwrap(), p);
            }
            Err(_) => prop_assert!(!p.is_123_avoiding()),
        }
    }

    #[test]
    fn garsia_haiman_round_trip(f in function(9)) {
        let pair = garsia_haiman(&f);
        prop_assert!(pair.word.is_balanced());
        prop_assert_eq!(garsia_haiman_inverse(&pair), f);
    }

    #[test]
    fn f_h_round_trip(v in int_vec(1..=9)) {
        prop_assert_eq!(h_to_f(&f_to_h(&v)), v);
    }

    #[test]
    fn gamma_h_round_trip(n in 0usize..10, g in int_vec(1..=6)) {
        let gamma: Vec<BigInt> = g.into_iter().take(n / 2 + 1).collect();
        let h = gamma_to_h(n, &gamma);
        prop_assert!(is_palindromic(&h));
        let mut padded = gamma.clone();
        padded.resize(n / 2 + 1, BigInt::from(0));
        prop_assert_eq!(h_to_gamma(&h).unwrap(), padded);
    }

    #[test]
    fn polynomial_ring_laws(a in int_vec(0..=6), b in int_vec(0..=6), c in int_vec(0..=6), x in -5i64..5) {
        let (a, b, c) = (IntPoly::new(a), IntPoly::new(b), IntPoly::new(c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
    }

    #[test]
    fn compress_expand_round_trip(n in 2usize..=9, seed in any::<u64>(), a in sparse(1, 8), b in sparse(1, 8)) {
        let a = SparseSet::new(a.elements().iter().copied().filter(|&x| (x as usize) < n).collect()).unwrap();
        let b = SparseSet::new(b.elements().iter().copied().filter(|&x| (x as usize) < n).collect()).unwrap();
        prop_assume!(a.len() + b.len() <= n);
        let words: Vec<Word> = enumerate_words(WordClass::Dyck(n))
            .filter(|w| is_compatible(w, &a, &b).unwrap())
            .collect();
        prop_assume!(!words.is_empty());
        let w = words[(seed % words.len() as u64) as usize];
        let c = compress(&w, &a, &b).unwrap();
        prop_assert_eq!(c.semilength(), n - a.len() - b.len());
        prop_assert_eq!(expand(&c, n, &a, &b).unwrap(), w);
    }

    #[test]
    fn chordal_graphical_building_sets_are_palindromic(m in 2u32..=6, mask in any::<u16>()) {
        let pairs: Vec<(u32, u32)> = (1..=m)
            .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
            .collect();
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> (k % 16) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let bs = graphical(m, &edges).unwrap();
        match h_chordal(&bs, &Limits::default()) {
            Ok(h) => prop_assert!(is_palindromic(&h), "{bs}"),
            Err(e) => prop_assert!(matches!(e, Error::NotChordal | Error::NotConnected)),
        }
    }
}
