#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use regiongray::arrangement::{HyperplaneArrangement, SignVector};
use regiongray::graphic::SignedGraph;
use regiongray::lattice::{CongruencePartition, FiniteLattice};

/// Fourier-Motzkin test for `sign_i <n_i, x> > 0` for all i.
pub fn fm_feasible(arr: &HyperplaneArrangement, s: &SignVector) -> bool {
    let mut rows: Vec<Vec<BigRational>> = (0..arr.len())
        .map(|i| {
            let flip = if s.is_minus(i) { -1 } else { 1 };
            arr.normal(i)
                .iter()
                .map(|c| c * BigRational::from_integer(flip.into()))
                .collect()
        })
        .collect();
    for k in 0..arr.dim() {
        let (pos, rest): (Vec<_>, Vec<_>) = rows.into_iter().partition(|r| r[k].is_positive());
        let (neg, zero): (Vec<_>, Vec<_>) = rest.into_iter().partition(|r| r[k].is_negative());
        rows = zero;
        for p in &pos {
            for q in &neg {
                let (a, b) = (p[k].clone(), -q[k].clone());
                let r: Vec<BigRational> = p.iter().zip(q).map(|(x, y)| x * &b + y * &a).collect();
                if r.iter().all(Zero::is_zero) {
                    return false;
                }
                rows.push(r);
            }
        }
    }
    rows.is_empty()
}

/// All sign vectors passing the Fourier-Motzkin test, in sign order.
pub fn fm_regions(arr: &HyperplaneArrangement) -> Vec<SignVector> {
    let m = arr.len();
    let mut out: Vec<SignVector> = (0u64..1 << m)
        .map(|b| SignVector::new(b, m))
        .filter(|s| fm_feasible(arr, s))
        .collect();
    out.sort();
    out
}

/// Congruence generated by `pairs`, by repeating full passes over
/// (element, class representative) pairs until nothing merges.
pub fn naive_closure(lat: &FiniteLattice, pairs: &[(usize, usize)]) -> Vec<usize> {
    let n = lat.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (a, b) = (find(p, a), find(p, b));
        if a != b {
            p[a.max(b)] = a.min(b);
            true
        } else {
            false
        }
    };
    for &(a, b) in pairs {
        union(&mut parent, a, b);
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            let r = find(&mut parent, x);
            if r == x {
                continue;
            }
            for z in 0..n {
                changed |= union(&mut parent, lat.meet(x, z), lat.meet(r, z));
                changed |= union(&mut parent, lat.join(x, z), lat.join(r, z));
            }
        }
        if !changed {
            break;
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

pub fn same_partition(p: &CongruencePartition, labels: &[usize]) -> bool {
    (0..labels.len()).all(|x| (0..labels.len()).all(|y| p.same(x, y) == (labels[x] == labels[y])))
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// One to three random element pairs.
pub fn random_generators(rng: &mut StdRng, size: usize) -> Vec<(usize, usize)> {
    let k = rng.gen_range(1..=3);
    (0..k)
        .map(|_| (rng.gen_range(0..size), rng.gen_range(0..size)))
        .collect()
}

/// Chordal graphs (vertices from 0).
pub fn chordal_graphs() -> Vec<SignedGraph> {
    let g = |n, e: &[(usize, usize)]| SignedGraph::unsigned(n, e).unwrap();
    vec![
        SignedGraph::complete(4),
        g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
        g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
        g(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]),
        g(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
        ),
        g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]),
        g(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (3, 5)]),
    ]
}

/// Signed graphs that have a signed elimination ordering.
pub fn signed_graphs() -> Vec<SignedGraph> {
    let g = |n, p: &[(usize, usize)], q: &[(usize, usize)]| SignedGraph::new(n, p, q).unwrap();
    vec![
        g(3, &[(1, 2)], &[(0, 1), (0, 2)]),
        g(2, &[], &[(0, 1)]),
        g(3, &[], &[(0, 1), (1, 2)]),
        g(4, &[(0, 1), (1, 2)], &[(2, 3)]),
        g(4, &[(0, 1), (2, 3)], &[(1, 2), (1, 3)]),
        g(4, &[(1, 2), (1, 3), (2, 3)], &[(0, 1), (0, 2), (0, 3)]),
        g(4, &[(0, 1), (2, 3)], &[(1, 2)]),
    ]
}

/// Non-chordal test graphs.
pub fn non_chordal_graphs() -> Vec<SignedGraph> {
    vec![
        SignedGraph::unsigned(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap(),
        SignedGraph::unsigned(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
        SignedGraph::new(3, &[(0, 1), (0, 2)], &[(1, 2)]).unwrap(),
    ]
}

/// Edges of the quotient order `X <= Y iff min X <= min Y`, reduced to covers.
pub fn quotient_covers_oracle(lat: &FiniteLattice, p: &CongruencePartition) -> BTreeSet<(usize, usize)> {
    let k = p.len();
    let bottom: Vec<usize> = (0..k)
        .map(|c| {
            let m = p.class(c);
            *m.iter()
                .find(|&&x| m.iter().all(|&y| lat.leq(x, y)))
                .expect("classes are intervals")
        })
        .collect();
    let le = |a: usize, b: usize| lat.leq(bottom[a], bottom[b]);
    let mut out = BTreeSet::new();
    for a in 0..k {
        for b in 0..k {
            if a != b && le(a, b) && !(0..k).any(|c| c != a && c != b && le(a, c) && le(c, b)) {
                out.insert((a, b));
            }
        }
    }
    out
}
