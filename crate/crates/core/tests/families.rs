use std::collections::HashSet;

use proptest::prelude::*;
use regiongray::families::*;
use regiongray::zigzag::greedy_traversal;

fn greedy(kind: Coxeter, n: usize) -> Vec<String> {
    let (arr, chain) = kind.arrangement(n).unwrap();
    let graph = arr.region_graph();
    let listing = greedy_traversal(&arr, &chain, &graph, &kind.identity_region(n)).unwrap();
    assert!(listing.cyclic);
    listing
        .order
        .iter()
        .map(|&i| kind.decode(n, &graph.region(i)).unwrap())
        .collect()
}

fn join(p: &[usize]) -> String {
    p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

#[test]
fn generators_equal_greedy_decodings() {
    for n in 1..=10 {
        assert_eq!(
            brgc_generate(n).collect::<Vec<_>>(),
            greedy(Coxeter::Coordinate, n),
            "binary {n}"
        );
    }
    for n in 2..=5 {
        let sjt: Vec<String> = sjt_generate(n).map(|p| join(&p)).collect();
        assert_eq!(sjt, greedy(Coxeter::TypeA, n), "perm {n}");
    }
    for n in 1..=4 {
        let signed: Vec<String> = signed_sjt_generate(n).map(|w| w.to_string()).collect();
        assert_eq!(signed, greedy(Coxeter::TypeB, n), "signed {n}");
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// One adjacent transposition in full notation, applied symmetrically.
fn signed_step(a: &[i32], b: &[i32]) -> bool {
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    match diff.as_slice() {
        [i] => *i == 0 && a[0] == -b[0],
        [i, j] => *j == i + 1 && a[*i] == b[*j] && a[*j] == b[*i],
        _ => false,
    }
}

#[test]
fn counts_adjacency_and_cyclicity() {
    for n in 1..=6 {
        let all: Vec<Vec<usize>> = sjt_generate(n).collect();
        assert_eq!(all.len(), factorial(n));
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
        if n >= 2 {
            for k in 0..all.len() {
                let (a, b) = (&all[k], &all[(k + 1) % all.len()]);
                let diff: Vec<usize> = (0..n).filter(|&i| a[i] != b[i]).collect();
                assert!(diff.len() == 2 && diff[1] == diff[0] + 1, "{a:?} {b:?}");
            }
        }
    }
    for n in 1..=5 {
        let all: Vec<Vec<i32>> = signed_sjt_generate(n).map(|w| w.window().to_vec()).collect();
        assert_eq!(all.len(), factorial(n) << n);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
        for k in 0..all.len() {
            assert!(
                signed_step(&all[k], &all[(k + 1) % all.len()]),
                "{:?} {:?}",
                all[k],
                all[(k + 1) % all.len()]
            );
        }
    }
    for n in 1..=10 {
        let all: Vec<String> = brgc_generate(n).collect();
        assert_eq!(all.len(), 1 << n);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
        for k in 0..all.len() {
            let (a, b) = (all[k].as_bytes(), all[(k + 1) % all.len()].as_bytes());
            assert_eq!(a.iter().zip(b).filter(|(x, y)| x != y).count(), 1);
        }
    }
}

#[test]
fn full_notation_is_antisymmetric() {
    let mut g = SignedSjt::new(4);
    loop {
        let f = g.full().to_vec();
        let n = f.len();
        assert!((0..n).all(|i| f[i] == -f[n - 1 - i]));
        let rev: Vec<i32> = f.iter().rev().map(|x| -x).collect();
        assert_eq!(rev, f);
        if !g.advance() {
            break;
        }
    }
    let w = SignedPermutation::new(vec![2, -1, 3]).unwrap();
    assert_eq!(w.to_full().symbols(), [-3, 1, -2, 2, -1, 3]);
    assert_eq!(w.to_full().to_window(), w);
}

#[test]
fn decoding_examples() {
    let (arr, _) = Coxeter::TypeB.arrangement(2).unwrap();
    let r = arr.sign_vector_of_integers(&[1, 2]).unwrap();
    assert_eq!(Coxeter::TypeB.decode(2, &r).unwrap(), "1 2");
    let r = arr.sign_vector_of_integers(&[-1, 2]).unwrap();
    assert_eq!(Coxeter::TypeB.decode(2, &r).unwrap(), "-1 2");
    let (arr, _) = Coxeter::Coordinate.arrangement(3).unwrap();
    let r = arr.sign_vector_of_integers(&[1, 1, 1]).unwrap();
    assert_eq!(Coxeter::Coordinate.decode(3, &r).unwrap(), "000");
    let (arr, _) = Coxeter::TypeA.arrangement(3).unwrap();
    let r = arr.sign_vector_of_integers(&[1, 2, 3]).unwrap();
    assert_eq!(r, Coxeter::TypeA.identity_region(3));
}

#[test]
fn malformed_input_is_rejected() {
    assert!(parse_signed_list("1 1").is_ok());
    assert!("1 1".parse::<SignedPermutation>().is_err());
    assert!("1 -3".parse::<SignedPermutation>().is_err());
    assert!("0 1".parse::<SignedPermutation>().is_err());
    assert!(Coxeter::TypeA.encode(3, "1 2").is_err());
    assert!(Coxeter::TypeA.encode(3, "1 2 2").is_err());
    assert!(Coxeter::TypeA.encode(3, "-1 2 3").is_err());
    assert!(Coxeter::Coordinate.encode(3, "0102").is_err());
    assert!(Coxeter::Coordinate.encode(3, "01").is_err());
    assert!(Coxeter::TypeB.encode(3, "1 2").is_err());
}

#[test]
fn builtin_congruence_names() {
    assert!(Coxeter::TypeA.named_congruence(4, "sylvester").is_ok());
    assert!(Coxeter::TypeB.named_congruence(3, "typeB-sylvester").is_ok());
    assert!(Coxeter::TypeA.named_congruence(4, "typeB-sylvester").is_err());
    assert!(Coxeter::Coordinate.named_congruence(4, "sylvester").is_err());
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

fn signed_permutation(n: usize) -> impl Strategy<Value = Vec<i32>> {
    (permutation(n), prop::collection::vec(any::<bool>(), n)).prop_map(|(p, s)| {
        p.into_iter()
            .zip(s)
            .map(|(v, neg)| if neg { -(v as i32) } else { v as i32 })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_roundtrip(p in (2usize..=7).prop_flat_map(permutation)) {
        let n = p.len();
        let r = permutation_to_region(&p).unwrap();
        prop_assert_eq!(region_to_permutation(n, &r).unwrap(), p.clone());
        prop_assert_eq!(Coxeter::TypeA.encode(n, &join(&p)).unwrap(), r);
    }

    #[test]
    fn signed_roundtrip(w in (1usize..=7).prop_flat_map(signed_permutation)) {
        let n = w.len();
        let sp = SignedPermutation::new(w.clone()).unwrap();
        let text = sp.to_string();
        prop_assert_eq!(text.parse::<SignedPermutation>().unwrap(), sp.clone());
        let r = signed_permutation_to_region(&sp);
        prop_assert_eq!(r.len(), n * n);
        prop_assert_eq!(region_to_signed_permutation(n, &r).unwrap(), sp.clone());
        prop_assert_eq!(sp.to_full().to_window(), sp.clone());
        prop_assert_eq!(parse_signed_list(&text).unwrap(), w);
    }

    #[test]
    fn bits_roundtrip(bits in "[01]{1,20}") {
        let r = bits_to_region(&bits).unwrap();
        prop_assert_eq!(region_to_bits(&r), bits);
    }
}
