//! Exact rational linear algebra and region enumeration.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Rank of a list of row vectors over the rationals.
pub(crate) fn rank(rows: &[&[Rational]]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.to_vec()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            let (upper, lower) = m.split_at_mut(i);
            for (x, y) in lower[0][c..].iter_mut().zip(&upper[r][c..]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Scales `v` by a positive factor to a primitive integer vector.
pub(crate) fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Primitive integer direction with a positive leading nonzero entry, so that
/// two normals describe the same hyperplane iff their canonical forms agree.
pub(crate) fn canonical_direction(v: &[Rational]) -> Vec<BigInt> {
    let mut p = primitive(v);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut p {
            *x = -x.clone();
        }
    }
    p
}

fn to_rationals(v: Vec<BigInt>) -> Vec<Rational> {
    v.into_iter().map(Rational::from_integer).collect()
}

/// One interior point for every region of the central arrangement given by
/// `normals` in dimension `dim`.
///
/// Hyperplanes are inserted one at a time. The regions cut by a new
/// hyperplane `h` are exactly those met by the regions of the arrangement
/// restricted to `h`, which is enumerated recursively in one dimension less.
/// Each cut region is replaced by the two points `q ± eps * h`, where `q` is
/// the lifted interior point of the restricted region and `eps` is small
/// enough that no other sign changes. All points are kept primitive integral.
pub(crate) fn interior_points(dim: usize, normals: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut points: Vec<Vec<Rational>> = vec![vec![Rational::zero(); dim]];
    for (k, h) in normals.iter().enumerate() {
        let prior = &normals[..k];
        let key = |p: &[Rational]| -> Vec<bool> { prior.iter().map(|a| dot(a, p).is_negative()).collect() };
        let index: HashMap<Vec<bool>, usize> = points.iter().enumerate().map(|(i, p)| (key(p), i)).collect();

        let pivot = h.iter().position(|c| !c.is_zero()).expect("normals are nonzero");
        let restrict = |a: &[Rational]| -> Vec<Rational> {
            (0..dim)
                .filter(|&j| j != pivot)
                .map(|j| &a[j] - &a[pivot] * &h[j] / &h[pivot])
                .collect()
        };
        let mut seen = HashSet::new();
        let mut restricted = Vec::new();
        for a in prior {
            let r = restrict(a);
            if r.iter().all(Zero::is_zero) {
                continue;
            }
            if seen.insert(canonical_direction(&r)) {
                restricted.push(r);
            }
        }

        let mut cut: Vec<Option<Vec<Rational>>> = vec![None; points.len()];
        for y in interior_points(dim - 1, &restricted) {
            let mut x = vec![Rational::zero(); dim];
            let mut it = y.into_iter();
            for (j, slot) in x.iter_mut().enumerate() {
                if j != pivot {
                    *slot = it.next().expect("restricted point has dim-1 coordinates");
                }
            }
            let s = (0..dim)
                .filter(|&j| j != pivot)
                .fold(Rational::zero(), |acc, j| acc + &h[j] * &x[j]);
            x[pivot] = -s / &h[pivot];
            let idx = index[&key(&x)];
            cut[idx] = Some(x);
        }

        let mut next = Vec::with_capacity(points.len() * 2);
        for (p, c) in points.into_iter().zip(cut) {
            match c {
                None => {
                    debug_assert!(!dot(h, &p).is_zero());
                    next.push(p);
                }
                Some(q) => {
                    let mut eps = Rational::one();
                    for a in prior {
                        let ah = dot(a, h);
                        if ah.is_zero() {
                            continue;
                        }
                        let bound = dot(a, &q).abs() / ah.abs() / Rational::from_integer(2.into());
                        if bound < eps {
                            eps = bound;
                        }
                    }
                    let plus: Vec<Rational> = q.iter().zip(h).map(|(x, d)| x + &eps * d).collect();
                    let minus: Vec<Rational> = q.iter().zip(h).map(|(x, d)| x - &eps * d).collect();
                    next.push(to_rationals(primitive(&plus)));
                    next.push(to_rationals(primitive(&minus)));
                }
            }
        }
        points = next;
    }
    points
}
