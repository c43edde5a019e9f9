use std::collections::BTreeSet;

use regiongray::families::region_to_signed_permutation;
use regiongray::families::{type_b_arrangement, Coxeter, SignedSjt};
use regiongray::lattice::{congruence_closure, poset_of_regions, try_lattice};
use regiongray::triangulation::*;
use regiongray::zigzag::{verify_listing, Listing};

#[test]
fn roundtrip_both_ways() {
    for n in 1..=5 {
        let ts = enumerate_symmetric_triangulations(n).unwrap();
        for t in &ts {
            let f = pi_map(t);
            assert!(is_2bar31_avoiding(&f));
            assert_eq!(&theta_map(&f).unwrap(), t);
        }
        let avs = avoiders(n);
        assert_eq!(avs.len(), ts.len());
        for f in &avs {
            assert_eq!(&pi_map(&theta_map(f).unwrap()), f);
        }
    }
    assert_eq!(avoiders(5).len(), 252);
}

#[test]
fn criterion_matches_scan() {
    for n in 1..=4 {
        for w in SignedSjt::new(n) {
            let f = w.to_full();
            assert_eq!(is_2bar31_avoiding(&f), satisfies_decomposition_criteria(&f), "{f}");
        }
    }
}

#[test]
fn non_avoiders_are_rejected() {
    let f = "2 3 1"
        .parse::<regiongray::families::SignedPermutation>()
        .unwrap()
        .to_full();
    assert!(decompose(&f).is_err());
    assert!(theta_map(&f).is_err());
    assert!(minimal_jumps(&f).is_err());
}

#[test]
fn jumps_match_brute_force() {
    for n in 1..=4 {
        for f in avoiders(n) {
            let fast = minimal_jumps(&f).unwrap();
            let brute = minimal_jumps_brute_force(&f);
            // a jump of one symbol may coincide with a jump of another
            assert!(fast.iter().all(|j| brute.contains(j)), "{f}");
            let targets = |js: &[Jump]| js.iter().map(|j| j.result.clone()).collect::<BTreeSet<_>>();
            assert_eq!(targets(&fast), targets(&brute), "{f}");
        }
    }
    let total: usize = avoiders(3)
        .iter()
        .map(|f| {
            minimal_jumps(f)
                .unwrap()
                .iter()
                .map(|j| &j.result)
                .collect::<BTreeSet<_>>()
                .len()
        })
        .sum();
    assert_eq!(total, 60);
}

#[test]
fn flips_are_jumps() {
    for n in 1..=5 {
        assert!(verify_flip_jump(n).unwrap(), "n = {n}");
    }
}

#[test]
fn flip_is_an_involution() {
    for t in enumerate_symmetric_triangulations(4).unwrap() {
        for (p, q) in t.flippable() {
            let u = t.flip(p, q).unwrap();
            let e: Vec<_> = u.diagonals().difference(t.diagonals()).copied().collect();
            assert_eq!(u.flip(e[0].0, e[0].1).unwrap(), t);
        }
    }
}

#[test]
fn gray_code_is_a_flip_cycle() {
    for n in 1..=4 {
        let g = flip_graph(n).unwrap();
        let code = triangulation_gray_code(n).unwrap();
        let order: Vec<usize> = code.iter().map(|t| g.index_of(t).unwrap()).collect();
        verify_listing(&g, &Listing { order, cyclic: true }).unwrap();
    }
}

#[test]
fn class_bottoms_are_the_avoiders() {
    for n in 1..=4 {
        let (arr, _) = type_b_arrangement(n).unwrap();
        let graph = arr.region_graph();
        let lattice = try_lattice(poset_of_regions(&graph, &Coxeter::TypeB.identity_region(n)).unwrap()).unwrap();
        let gens: Vec<_> = Coxeter::TypeB
            .named_congruence(n, "typeB-sylvester")
            .unwrap()
            .iter()
            .map(|(a, b)| (graph.index_of(a).unwrap(), graph.index_of(b).unwrap()))
            .collect();
        let cong = congruence_closure(&lattice, &gens);
        let bottoms: BTreeSet<_> = cong
            .classes()
            .iter()
            .map(|c| {
                let b = *c.iter().min_by_key(|&&x| lattice.poset().rank(x)).unwrap();
                assert!(c.iter().all(|&x| lattice.leq(b, x)));
                region_to_signed_permutation(n, &graph.region(b)).unwrap().to_full()
            })
            .collect();
        assert_eq!(bottoms, avoiders(n).into_iter().collect());
    }
}
